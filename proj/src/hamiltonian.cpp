#include "adqsim/hamiltonian.hpp"

#include <utility>

#include "adqsim/su11.hpp"

namespace adqsim {

namespace {

constexpr std::size_t kMaxTotalDim = std::size_t{1} << 20;

std::size_t checked_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kMaxTotalDim / base)
      throw std::invalid_argument("total dimension (m+1)^k is too large");
    r *= base;
  }
  return r;
}

}  // namespace

std::size_t ProblemSetup::total_dim() const {
  return checked_pow(static_cast<std::size_t>(m) + 1, mode_count());
}

std::vector<std::uint64_t> ProblemSetup::tuple_of_index(std::size_t index) const {
  const int k = mode_count();
  const std::size_t base = static_cast<std::size_t>(m) + 1;
  std::vector<std::uint64_t> tuple(k, 0);
  for (int i = k - 1; i >= 0; --i) {  // mode 0 is the slow index
    tuple[i] = index % base;
    index /= base;
  }
  return tuple;
}

std::size_t ProblemSetup::index_of_tuple(std::span<const std::uint64_t> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(mode_count()))
    throw std::invalid_argument("tuple length does not match mode count");
  const std::size_t base = static_cast<std::size_t>(m) + 1;
  std::size_t index = 0;
  for (const std::uint64_t n : tuple) {
    if (n >= base) throw std::invalid_argument("occupation exceeds truncation");
    index = index * base + n;
  }
  return index;
}

ProblemSetup make_setup(DiophantineEquation equation, int m, std::vector<Complex> zs) {
  if (m < 0) throw std::invalid_argument("truncation m must be >= 0");
  if (zs.size() != equation.variables.size())
    throw std::invalid_argument("need exactly one coherent label per variable");
  ProblemSetup setup{std::move(equation), m, std::move(zs)};
  setup.total_dim();  // dimension sanity check
  return setup;
}

CVector initial_state(const ProblemSetup& setup) {
  CVector v = CVector::Ones(1);
  for (const Complex z : setup.zs) v = kron(v, coherent_amplitudes(z, setup.m)).eval();
  v /= v.norm();
  return v;
}

CMatrix build_h_i(const ProblemSetup& setup) {
  const int k = setup.mode_count();
  const std::size_t dim = setup.total_dim();
  const std::size_t base = static_cast<std::size_t>(setup.m) + 1;
  const CMatrix kp = k_plus(setup.m);
  const CMatrix km = k_minus(setup.m);
  const CMatrix one = CMatrix::Identity(base, base);
  CMatrix h = CMatrix::Zero(dim, dim);
  for (int i = 0; i < k; ++i) {
    const Complex z = setup.zs[i];
    const CMatrix single = (kp - std::conj(z) * one) * (km - z * one);
    const std::size_t pre = checked_pow(base, i);
    const std::size_t post = checked_pow(base, k - 1 - i);
    h += kron(kron(CMatrix::Identity(pre, pre), single), CMatrix::Identity(post, post));
  }
  return h;
}

CMatrix build_h_d(const ProblemSetup& setup) {
  const std::size_t dim = setup.total_dim();
  const BigInt safe_max = BigInt(1) << 53;
  CMatrix h = CMatrix::Zero(dim, dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const std::vector<std::uint64_t> tuple = setup.tuple_of_index(idx);
    const BigInt value = evaluate(setup.equation, tuple);
    const BigInt squared = value * value;
    if (squared > safe_max) {
      std::string where;
      for (std::size_t i = 0; i < tuple.size(); ++i)
        where += (i ? "," : "") + std::to_string(tuple[i]);
      throw ValueOverflow("squared equation value at occupation (" + where +
                          ") exceeds 2^53");
    }
    h(idx, idx) = squared.convert_to<double>();
  }
  return h;
}

CMatrix h_a(double t, double T, const CMatrix& h_i, const CMatrix& h_d) {
  if (!(T > 0) || t < 0 || t > T)
    throw std::invalid_argument("interpolation requires 0 <= t <= T and T > 0");
  const double s = t / T;
  return (1.0 - s) * h_i + s * h_d;
}

}  // namespace adqsim
