#pragma once

#include <optional>
#include <string>

#include "adqsim/evolution.hpp"

namespace adqsim {

struct SweepConfig {
  double t_initial = 5.0;
  double t_increment = 5.0;
  double t_max = 200.0;
  double dt = 1.0;
  bool midpoint_rule = true;
};

// Outcome of the decision loop. A "no solution" answer is always qualified by
// the truncation bound — the simulation cannot certify unsolvability beyond
// the occupations it represents, and the type keeps that distinction.
struct Verdict {
  enum class Outcome {
    SolvableWithWitness,         // tuple is a root: evaluate(equation, tuple) == 0
    NoSolutionWithinTruncation,  // tuple is the dominant non-root ground state
    Inconclusive,                // reason says why (no crossing / degeneracy)
  };

  Outcome outcome = Outcome::Inconclusive;
  std::vector<std::uint64_t> tuple;  // witness or ground tuple; empty if inconclusive
  std::string reason;                // set only when inconclusive
  std::optional<double> crossing_T;
  double final_p_max = 0.0;
  bool degenerate = false;
};

struct AlgorithmResult {
  Verdict verdict;
  struct Run {
    double T;
    Trajectory trajectory;
  };
  std::vector<Run> runs;  // every T evaluated, in sweep order
};

// Sweep T from t_initial by t_increment up to t_max; at each T evolve the
// full interpolation and test the final state's peak probability. The first
// T whose peak exceeds 1/2 decides: with a unique peak tuple n*, the verdict
// is SolvableWithWitness(n*) when the equation vanishes at n* and
// NoSolutionWithinTruncation(n*) otherwise; a degenerate peak or an exhausted
// sweep yields Inconclusive. The sweep is sequential so the verdict always
// comes from the smallest crossing T.
AlgorithmResult run_algorithm(const ProblemSetup& setup, const SweepConfig& sweep);

// Compare a conclusive verdict against exhaustive search up to `bound`:
// a witness must appear in the solution list, a no-solution verdict requires
// the list to be empty. Throws std::invalid_argument for Inconclusive input.
bool verdict_crosscheck(const Verdict& verdict, const DiophantineEquation& equation,
                        std::uint64_t bound);

std::string to_string(Verdict::Outcome outcome);

}  // namespace adqsim
