#pragma once

#include <cstdint>
#include <vector>

#include "adqsim/hamiltonian.hpp"

namespace adqsim {

struct EvolutionConfig {
  double T = 0.0;
  double dt = 1.0;
  // Evaluate the interpolated Hamiltonian at the step midpoint t + dt/2
  // (second-order Crank-Nicolson). When false, evaluate at the step's left
  // endpoint instead — the coarser literal reading of the one-step scheme.
  bool midpoint_rule = true;
};

struct PMaxSample {
  double probability = 0.0;
  std::vector<std::uint64_t> tuple;
  bool degenerate = false;  // another basis probability within 1e-9 of the max
};

// Per-sample record of one run: sample 0 is the initial state, then one
// sample after each step, the last at t = T. Full states are kept only for
// dims <= 1024; peak statistics and norm drift are kept always.
struct Trajectory {
  std::vector<double> times;
  std::vector<CVector> states;
  std::vector<PMaxSample> p_max;
  std::vector<double> norm_drift;  // | ||psi|| - 1 | per sample
  bool states_stored = true;

  double max_norm_drift() const;
  const PMaxSample& final_p_max() const { return p_max.back(); }
};

// One Cayley-transform step: solve(1 + (i dt/2) h, (1 - (i dt/2) h) psi).
// Exactly unitary for Hermitian h, any real dt (in exact arithmetic).
CVector cayley_step(const CMatrix& h, double dt, const CVector& psi);

// Integrate i d/dt psi = h_a(t) psi from initial_state(setup) over [0, T].
// The step count is round(T/dt), at least 1, and the step is adjusted so the
// final sample lands exactly on T. Requires T/dt >= 1.
Trajectory evolve(const ProblemSetup& setup, const EvolutionConfig& config);

// Largest basis probability |psi_i|^2 with its occupation tuple; degenerate
// when a second basis state comes within 1e-9 of the maximum.
PMaxSample p_max(const CVector& psi, const ProblemSetup& setup);

// <psi| N_mode |psi> for the embedded diagonal number operator of one mode.
double number_expectation(const CVector& psi, const ProblemSetup& setup, int mode);

}  // namespace adqsim
