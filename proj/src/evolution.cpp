#include "adqsim/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace adqsim {

double Trajectory::max_norm_drift() const {
  return norm_drift.empty() ? 0.0
                            : *std::max_element(norm_drift.begin(), norm_drift.end());
}

CVector cayley_step(const CMatrix& h, double dt, const CVector& psi) {
  const Complex half_i_dt(0.0, 0.5 * dt);
  CMatrix lhs = half_i_dt * h;
  lhs.diagonal().array() += 1.0;
  const CVector rhs = psi - half_i_dt * (h * psi);
  return solve(lhs, rhs);
}

Trajectory evolve(const ProblemSetup& setup, const EvolutionConfig& config) {
  if (!(config.T > 0) || !(config.dt > 0) || config.T / config.dt < 1.0)
    throw std::invalid_argument("evolution requires T > 0, dt > 0 and T/dt >= 1");

  const CMatrix hi = build_h_i(setup);
  const CMatrix hd = build_h_d(setup);
  CVector psi = initial_state(setup);

  const std::int64_t n_steps =
      std::max<std::int64_t>(1, std::llround(config.T / config.dt));
  const double dt = config.T / static_cast<double>(n_steps);

  Trajectory traj;
  traj.states_stored = setup.total_dim() <= 1024;
  const auto record = [&](double t) {
    traj.times.push_back(t);
    if (traj.states_stored) traj.states.push_back(psi);
    traj.p_max.push_back(p_max(psi, setup));
    traj.norm_drift.push_back(std::abs(psi.norm() - 1.0));
  };

  record(0.0);
  for (std::int64_t j = 0; j < n_steps; ++j) {
    const double t_eval =
        config.midpoint_rule ? (static_cast<double>(j) + 0.5) * dt
                             : static_cast<double>(j) * dt;
    psi = cayley_step(h_a(t_eval, config.T, hi, hd), dt, psi);
    record(static_cast<double>(j + 1) * dt);
  }
  return traj;
}

PMaxSample p_max(const CVector& psi, const ProblemSetup& setup) {
  const Eigen::Index dim = psi.size();
  Eigen::Index best = 0;
  double best_p = -1.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double p = std::norm(psi[i]);
    if (p > best_p) {
      best_p = p;
      best = i;
    }
  }
  int near_max = 0;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (std::norm(psi[i]) >= best_p - 1e-9) ++near_max;
  return {best_p, setup.tuple_of_index(static_cast<std::size_t>(best)), near_max > 1};
}

double number_expectation(const CVector& psi, const ProblemSetup& setup, int mode) {
  const int k = setup.mode_count();
  if (mode < 0 || mode >= k) throw std::invalid_argument("mode index out of range");
  const std::size_t base = static_cast<std::size_t>(setup.m) + 1;
  std::size_t stride = 1;  // mode 0 is the slow index
  for (int i = k - 1; i > mode; --i) stride *= base;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const std::size_t occupation = (static_cast<std::size_t>(i) / stride) % base;
    sum += static_cast<double>(occupation) * std::norm(psi[i]);
  }
  return sum;
}

}  // namespace adqsim
