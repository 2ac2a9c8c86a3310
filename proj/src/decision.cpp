#include "adqsim/decision.hpp"

#include <algorithm>
#include <cassert>

namespace adqsim {

AlgorithmResult run_algorithm(const ProblemSetup& setup, const SweepConfig& sweep) {
  if (!(sweep.t_initial > 0) || !(sweep.t_increment > 0) ||
      sweep.t_initial > sweep.t_max)
    throw std::invalid_argument(
        "sweep requires 0 < t_initial <= t_max and t_increment > 0");

  AlgorithmResult result;
  for (std::int64_t j = 0;; ++j) {
    const double T = sweep.t_initial + static_cast<double>(j) * sweep.t_increment;
    if (T > sweep.t_max * (1.0 + 1e-12)) break;

    EvolutionConfig config{.T = T, .dt = sweep.dt, .midpoint_rule = sweep.midpoint_rule};
    result.runs.push_back({T, evolve(setup, config)});

    const PMaxSample& peak = result.runs.back().trajectory.final_p_max();
    result.verdict.final_p_max = peak.probability;
    result.verdict.degenerate = peak.degenerate;
    if (peak.probability <= 0.5) continue;

    result.verdict.crossing_T = T;
    if (peak.degenerate) {
      result.verdict.outcome = Verdict::Outcome::Inconclusive;
      result.verdict.reason = "degenerate ground state";
      return result;
    }
    const bool solvable = evaluate(setup.equation, peak.tuple) == 0;
    result.verdict.outcome = solvable ? Verdict::Outcome::SolvableWithWitness
                                      : Verdict::Outcome::NoSolutionWithinTruncation;
    result.verdict.tuple = peak.tuple;
    assert(solvable == (evaluate(setup.equation, result.verdict.tuple) == 0));
    return result;
  }

  result.verdict.outcome = Verdict::Outcome::Inconclusive;
  result.verdict.reason = "no adiabatic crossing by t_max";
  return result;
}

bool verdict_crosscheck(const Verdict& verdict, const DiophantineEquation& equation,
                        std::uint64_t bound) {
  if (verdict.outcome == Verdict::Outcome::Inconclusive)
    throw std::invalid_argument("crosscheck requires a conclusive verdict");
  const auto solutions = brute_force_search(equation, bound);
  if (verdict.outcome == Verdict::Outcome::SolvableWithWitness)
    return std::find(solutions.begin(), solutions.end(), verdict.tuple) !=
           solutions.end();
  return solutions.empty();
}

std::string to_string(Verdict::Outcome outcome) {
  switch (outcome) {
    case Verdict::Outcome::SolvableWithWitness: return "SolvableWithWitness";
    case Verdict::Outcome::NoSolutionWithinTruncation:
      return "NoSolutionWithinTruncation";
    case Verdict::Outcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace adqsim
