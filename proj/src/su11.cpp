#include "adqsim/su11.hpp"

#include <cmath>
#include <stdexcept>

namespace adqsim {

namespace {

void require_mode(int m) {
  if (m < 0) throw std::invalid_argument("truncation index m must be >= 0");
}

}  // namespace

double bessel_i2(double x) {
  if (x < 0) throw std::domain_error("bessel_i2 requires x >= 0");
  if (x == 0) return 0.0;
  const double h = 0.5 * x;
  double term = 0.5 * h * h;  // j = 0: (x/2)^2 / (0! 2!)
  double sum = term;
  for (int j = 1;; ++j) {
    term *= h * h / (static_cast<double>(j) * (j + 2));
    sum += term;
    if (term <= 1e-16 * sum) break;
  }
  return sum;
}

CVector coherent_amplitudes(Complex z, int m) {
  require_mode(m);
  CVector c = CVector::Zero(m + 1);
  const double az = std::abs(z);
  if (az == 0.0) {
    c[0] = 1.0;
    return c;
  }
  const double prefactor = az / std::sqrt(bessel_i2(2.0 * az));
  c[0] = prefactor / std::sqrt(2.0);  // 1/sqrt(0! 2!)
  for (int n = 0; n < m; ++n)
    c[n + 1] = c[n] * z / std::sqrt(static_cast<double>(n + 1) * (n + 3));
  return c;
}

double norm_defect(Complex z, int m) {
  return std::abs(1.0 - coherent_amplitudes(z, m).norm());
}

int truncation_dimension(Complex z, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be > 0");
  for (int m = 0;; ++m) {
    if (norm_defect(z, m) <= epsilon) return m;
    if (m > (1 << 20))
      throw std::logic_error("norm defect failed to reach epsilon");  // unreachable
  }
}

CMatrix k_plus(int m) {
  require_mode(m);
  CMatrix k = CMatrix::Zero(m + 1, m + 1);
  for (int n = 0; n < m; ++n)
    k(n + 1, n) = std::sqrt(static_cast<double>(n + 1) * (n + 3));
  return k;
}

CMatrix k_minus(int m) { return k_plus(m).transpose(); }

CMatrix k3(int m) {
  require_mode(m);
  CMatrix k = CMatrix::Zero(m + 1, m + 1);
  for (int n = 0; n <= m; ++n) k(n, n) = 2.0 * n + 3.0;
  return k;
}

CMatrix number_op(int m) {
  require_mode(m);
  CMatrix k = CMatrix::Zero(m + 1, m + 1);
  for (int n = 0; n <= m; ++n) k(n, n) = static_cast<double>(n);
  return k;
}

double energy_level(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("level index must be >= 0");
  return static_cast<double>(n) * static_cast<double>(n + 2);
}

}  // namespace adqsim
