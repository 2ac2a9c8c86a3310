#include "adqsim/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "adqsim/su11.hpp"

namespace adqsim {

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double worst_norm_defect(const ProblemSetup& setup) {
  double worst = 0.0;
  for (const Complex z : setup.zs)
    worst = std::max(worst, norm_defect(z, setup.m));
  return worst;
}

}  // namespace

std::string format_tuple(std::span<const std::uint64_t> tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    out += (i ? ";" : "") + std::to_string(tuple[i]);
  return out;
}

void write_trajectory_csv(std::ostream& os, const AlgorithmResult& result,
                          const ProblemSetup& setup) {
  const std::size_t dim = setup.total_dim();
  const bool per_state = dim <= 16;
  os << "T,step,t,p_max,argmax_tuple,norm_drift";
  if (per_state)
    for (std::size_t i = 0; i < dim; ++i) os << ",p" << i;
  os << "\n";
  for (const AlgorithmResult::Run& run : result.runs) {
    const Trajectory& traj = run.trajectory;
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
      os << num(run.T) << ',' << s << ',' << num(traj.times[s]) << ','
         << num(traj.p_max[s].probability) << ',' << format_tuple(traj.p_max[s].tuple)
         << ',' << num(traj.norm_drift[s]);
      if (per_state)
        for (std::size_t i = 0; i < dim; ++i)
          os << ',' << num(std::norm(traj.states[s][static_cast<Eigen::Index>(i)]));
      os << "\n";
    }
  }
}

void write_verdict_json(std::ostream& os, const AlgorithmResult& result,
                        const ProblemSetup& setup, const SweepConfig& sweep) {
  nlohmann::ordered_json j;
  const Verdict& v = result.verdict;
  j["outcome"] = to_string(v.outcome);
  if (v.outcome == Verdict::Outcome::SolvableWithWitness) j["witness"] = v.tuple;
  if (v.outcome == Verdict::Outcome::NoSolutionWithinTruncation) j["ground"] = v.tuple;
  if (v.outcome == Verdict::Outcome::Inconclusive) j["reason"] = v.reason;
  if (v.crossing_T)
    j["crossing_T"] = *v.crossing_T;
  else
    j["crossing_T"] = nullptr;
  j["final_p_max"] = v.final_p_max;
  j["degenerate"] = v.degenerate;
  j["equation"] = to_string(setup.equation);
  j["k"] = setup.mode_count();
  j["m"] = setup.m;
  bool all_real = true;
  for (const Complex z : setup.zs) all_real = all_real && z.imag() == 0.0;
  if (all_real) {
    std::vector<double> zs;
    for (const Complex z : setup.zs) zs.push_back(z.real());
    j["z"] = zs;
  } else {
    std::vector<std::array<double, 2>> zs;
    for (const Complex z : setup.zs) zs.push_back({z.real(), z.imag()});
    j["z"] = zs;
  }
  j["epsilon_defect"] = worst_norm_defect(setup);
  j["dt"] = sweep.dt;
  j["t_initial"] = sweep.t_initial;
  j["t_increment"] = sweep.t_increment;
  j["t_max"] = sweep.t_max;
  j["midpoint_rule"] = sweep.midpoint_rule;
  j["runs"] = result.runs.size();
  os << j.dump(2) << "\n";
}

}  // namespace adqsim
