/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace certkit {

/// Input/output signal names in wire order.
struct ModelSignals {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  int input_index(std::string_view name) const;   // -1 when unknown
  int output_index(std::string_view name) const;  // -1 when unknown
};

/// A deterministic sampled model. Outputs are computed from the state
/// before the step's inputs are latched, so an input change becomes visible
/// on the following sample. Booleans travel as reals (0.0 / 1.0); any
/// non-zero input reads as true.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual const ModelSignals& signals() const = 0;
  virtual void reset() = 0;

  /// Advances one sample: returns outputs of the current state, then latches
  /// `inputs` into the state. `inputs` size must match signals().inputs.
  virtual std::vector<double> step(std::span<const double> inputs) = 0;

  /// Outputs of the current state without stepping.
  virtual std::vector<double> current_outputs() const = 0;
};

/// Autopilot manual-disconnect reference model. Two independent channels
/// each latch a disconnect on the sample after either pushbutton is
/// pressed; the transmission clutch is released while any channel is
/// latched. An engage command with both buttons released clears the
/// latches.
///
/// Inputs:  btn1, btn2, engage_cmd
/// Outputs: ch1_disconnect, ch2_disconnect, clutch_engaged
class AmdsModel : public Model {
 public:
  struct Options {
    bool ch1_stuck = false;  // fault: channel 1 never latches
    bool ch2_stuck = false;  // fault: channel 2 never latches
    unsigned delay_samples = 0;  // fault: latch delayed this many samples
  };

  AmdsModel() : AmdsModel(Options{}) {}
  explicit AmdsModel(Options options);

  std::string name() const override;
  const ModelSignals& signals() const override;
  void reset() override;
  std::vector<double> step(std::span<const double> inputs) override;
  std::vector<double> current_outputs() const override;

 private:
  struct Channel {
    bool latched = false;
    unsigned pending = 0;  // samples until the latch engages
  };

  Options options_;
  Channel ch1_;
  Channel ch2_;
};

/// Builds a model from a spec string: `amds`, `amds:ch1-stuck`,
/// `amds:ch2-stuck`, `amds:delay=<samples>`. Options may be combined with
/// commas, e.g. `amds:ch1-stuck,delay=3`. Throws Error(usage) on unknown
/// names or options.
std::unique_ptr<Model> make_model(const std::string& spec);

}  // namespace certkit
