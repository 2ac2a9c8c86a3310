#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adqsim/diophantine.hpp"
#include "adqsim/linalg.hpp"

namespace adqsim {

// Raised when a squared equation value leaves the range doubles represent
// exactly (2^53); the diagonal problem Hamiltonian must not silently round.
struct ValueOverflow : std::runtime_error {
  explicit ValueOverflow(const std::string& message) : std::runtime_error(message) {}
};

// Immutable description of one instance: the equation, one coherent label per
// unknown, and a shared per-mode truncation m. Mode i is variable i of the
// equation; the composite basis index runs with mode 0 slowest, matching
// kron's ordering, so index <-> occupation-tuple conversions live here.
struct ProblemSetup {
  DiophantineEquation equation;
  int m = 0;
  std::vector<Complex> zs;

  int mode_count() const { return static_cast<int>(equation.variables.size()); }
  std::size_t total_dim() const;  // (m+1)^k
  std::vector<std::uint64_t> tuple_of_index(std::size_t index) const;
  std::size_t index_of_tuple(std::span<const std::uint64_t> tuple) const;
};

// Validates |zs| == variable count, m >= 0, and a sane total dimension.
ProblemSetup make_setup(DiophantineEquation equation, int m, std::vector<Complex> zs);

// Product of per-mode coherent vectors, renormalized to unit norm (the
// truncation makes each factor's norm slightly less than 1).
CVector initial_state(const ProblemSetup& setup);

// H_I = sum_i (K+_i - conj(z_i)) (K-_i - z_i), each term embedded with
// identities on the other modes. Hermitian positive semidefinite.
CMatrix build_h_i(const ProblemSetup& setup);

// H_D = diag over basis tuples of evaluate(equation, tuple)^2, computed in
// exact integer arithmetic and then converted. Throws ValueOverflow past 2^53.
CMatrix build_h_d(const ProblemSetup& setup);

// Linear interpolation (1 - t/T) h_i + (t/T) h_d. Requires 0 <= t <= T, T > 0.
CMatrix h_a(double t, double T, const CMatrix& h_i, const CMatrix& h_d);

}  // namespace adqsim
