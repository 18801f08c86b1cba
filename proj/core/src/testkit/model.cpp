/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/testkit/model.hpp"

#include "certkit/errors.hpp"
#include "certkit/util.hpp"

namespace certkit {

int ModelSignals::input_index(std::string_view name) const {
  for (size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i] == name) return static_cast<int>(i);
  return -1;
}

int ModelSignals::output_index(std::string_view name) const {
  for (size_t i = 0; i < outputs.size(); ++i)
    if (outputs[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

const ModelSignals& amds_signals() {
  static const ModelSignals signals{
      {"btn1", "btn2", "engage_cmd"},
      {"ch1_disconnect", "ch2_disconnect", "clutch_engaged"},
  };
  return signals;
}

bool as_bool(double v) { return v != 0.0; }

}  // namespace

AmdsModel::AmdsModel(Options options) : options_(options) { reset(); }

std::string AmdsModel::name() const { return "amds"; }

const ModelSignals& AmdsModel::signals() const { return amds_signals(); }

void AmdsModel::reset() {
  ch1_ = Channel{};
  ch2_ = Channel{};
}

std::vector<double> AmdsModel::current_outputs() const {
  bool disconnected = ch1_.latched || ch2_.latched;
  return {ch1_.latched ? 1.0 : 0.0, ch2_.latched ? 1.0 : 0.0,
          disconnected ? 0.0 : 1.0};
}

std::vector<double> AmdsModel::step(std::span<const double> inputs) {
  if (inputs.size() != signals().inputs.size())
    fail_usage("amds expects " + std::to_string(signals().inputs.size()) +
               " inputs, got " + std::to_string(inputs.size()));
  std::vector<double> outputs = current_outputs();

  bool pressed = as_bool(inputs[0]) || as_bool(inputs[1]);
  bool engage = as_bool(inputs[2]) && !pressed;

  auto advance = [&](Channel& ch, bool stuck) {
    if (stuck) {
      ch.latched = false;
      ch.pending = 0;
      return;
    }
    if (pressed) {
      if (!ch.latched && ch.pending == 0)
        ch.pending = options_.delay_samples + 1;
    } else if (engage) {
      ch.latched = false;
      ch.pending = 0;
    }
    if (ch.pending > 0 && --ch.pending == 0) ch.latched = true;
  };
  advance(ch1_, options_.ch1_stuck);
  advance(ch2_, options_.ch2_stuck);

  return outputs;
}

std::unique_ptr<Model> make_model(const std::string& spec) {
  std::string name = spec;
  std::string options_text;
  size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    options_text = spec.substr(colon + 1);
  }
  if (to_lower(name) != "amds")
    fail_usage("unknown model: '" + name + "' (available: amds)");

  AmdsModel::Options options;
  for (const auto& opt : split_list(options_text, ',')) {
    if (opt == "ch1-stuck") {
      options.ch1_stuck = true;
    } else if (opt == "ch2-stuck") {
      options.ch2_stuck = true;
    } else if (starts_with(opt, "delay=")) {
      auto n = parse_int(opt.substr(6));
      if (!n || *n < 0) fail_usage("bad delay option: '" + opt + "'");
      options.delay_samples = static_cast<unsigned>(*n);
    } else {
      fail_usage("unknown model option: '" + opt + "'");
    }
  }
  return std::make_unique<AmdsModel>(options);
}

}  // namespace certkit
