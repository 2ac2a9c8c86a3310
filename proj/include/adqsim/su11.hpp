#pragma once

#include <cstdint>

#include "adqsim/linalg.hpp"

namespace adqsim {

// Single-mode machinery on the truncated Fock space span{|0>..|m>}, dimension
// m+1, in dimensionless units (the underlying spectrum is n(n+2)).
//
// Raising/lowering actions: K+|n> = sqrt((n+1)(n+3))|n+1>, K-|n> =
// sqrt(n(n+2))|n-1>, K3|n> = (2n+3)|n>, N = (K3 - 3)/2. The truncation drops
// the transition out of |m> (K+|m> -> 0); the norm-defect criterion below is
// what certifies that the dropped edge weight is negligible.

// Modified Bessel function I2 via its power series, summed until a term falls
// below 1e-16 of the partial sum. Throws std::domain_error for x < 0.
double bessel_i2(double x);

// Coherent amplitudes c_n = (|z|/sqrt(I2(2|z|))) z^n / sqrt(n!(n+2)!) for
// n = 0..m. The vector is normalized against the infinite-space norm, so its
// truncated norm is < 1. z = 0 returns |0> (the analytic limit).
CVector coherent_amplitudes(Complex z, int m);

// |1 - ||coherent_amplitudes(z, m)|| |, the truncation adequacy measure.
double norm_defect(Complex z, int m);

// Smallest m with norm_defect(z, m) <= epsilon. Requires epsilon > 0.
int truncation_dimension(Complex z, double epsilon);

CMatrix k_plus(int m);
CMatrix k_minus(int m);
CMatrix k3(int m);
CMatrix number_op(int m);

// Spectrum value n(n+2).
double energy_level(std::int64_t n);

}  // namespace adqsim
