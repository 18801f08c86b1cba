/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/compliance.hpp"

namespace certkit {

// Representative starter catalog. Objective ids follow the Annex A table
// numbering scheme; descriptions are generic process-goal summaries, not
// text from any standard. Projects replace or extend this file with their
// own assessment.
std::string Catalog::sample_csv() {
  return R"(standard,table,objective_id,description,appl_A,appl_B,appl_C,appl_D,importance,automation,reuse,override,status,rationale
DO-331,MB.A-1,MB.A-1.1,Development and verification processes are planned,x,x,x,x,medium,low,high,,Partial,Plan templates are generic; project-specific sections trimmed
DO-331,MB.A-2,MB.A-2.1,High-level requirements are developed from system requirements,x,x,x,x,high,medium,medium,,Full,
DO-331,MB.A-2,MB.A-2.4,Low-level requirements are expressed as design model elements,x,x,x,,medium,medium,low,,Partial,Model element templates cover the common block set only
DO-331,MB.A-3,MB.A-3.1,High-level requirements comply with system requirements,x,x,x,x,high,high,medium,,Full,Shown by requirement-based simulation
DO-331,MB.A-3,MB.A-3.2,High-level requirements are accurate and consistent,x,x,x,x,high,high,medium,,Full,Shown by requirement-based simulation
DO-331,MB.A-3,MB.A-3.7,Algorithms are accurate,x,x,x,,medium,high,medium,,Full,Shown by simulation against reference data
DO-331,MB.A-4,MB.A-4.1,Low-level requirements comply with high-level requirements,x,x,x,,high,high,medium,,Full,Shown by requirement-based simulation
DO-331,MB.A-4,MB.A-4.8,Software architecture is consistent,x,x,x,,medium,medium,medium,,Partial,Architecture review checklist is manual
DO-331,MB.A-4,MB.A-4.13,Design model conforms to the modeling standard,x,x,x,,medium,high,high,,Full,Automated standards checking
DO-331,MB.A-5,MB.A-5.1,Source code complies with low-level requirements,x,x,x,,low,high,medium,,Full,Automated code inspection
DO-331,MB.A-5,MB.A-5.4,Source code is verifiable,x,x,,,low,medium,low,,Partial,Reviewed opportunistically
DO-331,MB.A-5,MB.A-5.5,Generated code is verified against the design model,x,x,x,,low,low,medium,include,Full,Kept despite low score; inspection is fully automated
DO-331,MB.A-6,MB.A-6.1,Executable code complies with high-level requirements,x,x,x,x,high,high,high,,Full,Simulation cases reused for target testing
DO-331,MB.A-6,MB.A-6.2,Executable code is robust with high-level requirements,x,x,x,x,medium,high,medium,,Partial,Robustness cases limited to boundary stimuli
DO-331,MB.A-7,MB.A-7.1,Test procedures are correct,x,x,x,,medium,medium,medium,,Partial,Procedure review is manual
DO-331,MB.A-7,MB.A-7.5,Test coverage of requirements is achieved,x,x,x,x,high,high,medium,,Full,Trace coverage reports
DO-331,MB.A-7,MB.A-7.6,Test coverage of model structure is analyzed,x,x,x,,low,high,medium,,Full,Coverage collected during simulation
DO-331,MB.A-8,MB.A-8.1,Configuration items are identified and baselined,x,x,x,x,medium,high,high,,Full,Version control over all artifacts
DO-331,MB.A-8,MB.A-8.4,Problem reporting and change control are established,x,x,x,x,low,medium,low,,Partial,Lightweight change tracking without a review board
DO-331,MB.A-9,MB.A-9.1,Assurance of process compliance is obtained,x,x,x,x,low,medium,medium,,Partial,Completion status tracking only
DO-178C,A-1,A-1.1,Software plans are developed,x,x,x,x,medium,low,high,,Partial,Reusable plan templates; certification sections omitted
DO-178C,A-2,A-2.1,High-level requirements are developed,x,x,x,x,high,medium,medium,,Full,
DO-178C,A-2,A-2.2,Derived high-level requirements are defined and justified,x,x,x,x,medium,low,medium,,Full,
DO-178C,A-3,A-3.1,High-level requirements comply with system requirements,x,x,x,x,high,low,medium,,Partial,Manual review of handwritten requirements
DO-178C,A-3,A-3.2,High-level requirements are accurate and consistent,x,x,x,x,medium,low,medium,,Partial,Manual review of handwritten requirements
DO-178C,A-4,A-4.1,Low-level requirements comply with high-level requirements,x,x,x,,medium,low,medium,,Partial,Needs extensive manual review
DO-178C,A-5,A-5.1,Source code complies with low-level requirements,x,x,x,,low,high,medium,,Full,Automated static analysis
DO-178C,A-5,A-5.6,Source code is accurate and consistent,x,x,x,,low,high,low,,Partial,Static analysis findings triaged but not all resolved
DO-178C,A-6,A-6.1,Executable object code complies with high-level requirements,x,x,x,x,high,high,high,,Full,Requirement-based target testing
DO-178C,A-6,A-6.4,Executable object code is compatible with the target computer,x,x,x,x,medium,high,high,,Full,Demonstrated in the target environment
DO-178C,A-7,A-7.3,Test coverage of high-level requirements is achieved,x,x,x,x,high,high,medium,,Full,Trace coverage reports
DO-178C,A-7,A-7.7,Structural coverage analysis is performed,x,x,,,low,high,low,,Partial,Statement coverage only
DO-178C,A-8,A-8.1,Configuration items are identified and baselined,x,x,x,x,medium,high,high,,Full,Version control over all artifacts
DO-178C,A-9,A-9.1,Assurance of process compliance is obtained,x,x,x,x,low,medium,medium,,Partial,Completion status tracking only
DO-178C,A-9,A-9.3,Coordination with the certification authority is performed,x,x,x,x,low,low,low,exclude,NA,No formal certification process in this workflow
)";
}

}  // namespace certkit
