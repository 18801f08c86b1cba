/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "certkit/jobs.hpp"

namespace certkit {

/// Built-in job action vocabulary:
///
///   emit-trace-report        params: role, direction, [kind], [level];
///                            writes the declared .csv/.html outputs
///   lint-all-requirements    lints every requirement body; writes .csv
///   run-testcases-mil        params: [model]; replays matched .tc files
///                            against the in-process model; writes .xml
///                            (records) and optionally .csv (summary)
///   compare-mil-hil          params: a, b (record files), [tolerance];
///                            writes .csv; fails the job on divergence
///   emit-compliance-matrix   params: level, [threshold], each output named
///                            compliance_<standard>_<level>.{csv,html}
///   copy                     pairs declared inputs with declared outputs
///   exec                     params: cmd; temp output paths exported as
///                            CERTKIT_OUT0..n (escape hatch, not used by
///                            the bundled projects)
ActionRegistry default_action_registry();

}  // namespace certkit
