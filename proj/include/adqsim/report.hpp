#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "adqsim/decision.hpp"

namespace adqsim {

// Semicolon-joined occupation tuple ("6", "0;0;0;0"); empty for zero modes.
std::string format_tuple(std::span<const std::uint64_t> tuple);

// One CSV row per recorded sample of every sweep run, schema
//   T,step,t,p_max,argmax_tuple,norm_drift
// plus per-basis probability columns p0..p{dim-1} when dim <= 16 (small
// enough to plot every state directly). RFC-4180-style, '.' decimal point.
void write_trajectory_csv(std::ostream& os, const AlgorithmResult& result,
                          const ProblemSetup& setup);

// Flat machine-readable verdict document: outcome, witness/ground tuple (or
// inconclusive reason), crossing_T, final_p_max, plus the run parameters and
// the achieved per-mode norm defect.
void write_verdict_json(std::ostream& os, const AlgorithmResult& result,
                        const ProblemSetup& setup, const SweepConfig& sweep);

}  // namespace adqsim
