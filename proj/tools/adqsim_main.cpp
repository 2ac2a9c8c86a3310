#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adqsim/decision.hpp"
#include "adqsim/report.hpp"
#include "adqsim/su11.hpp"

namespace {

struct RunOptions {
  std::string equation;
  std::vector<double> zs;
  int m = -1;
  bool m_set = false;
  double epsilon = 0.0;
  bool epsilon_set = false;
  double dt = 1.0;
  double t_initial = 5.0;
  double t_increment = 5.0;
  double t_max = 200.0;
  bool no_midpoint = false;
  std::string out_prefix = "adqsim";
};

int cmd_dim(double z, double epsilon) {
  const int m = adqsim::truncation_dimension(z, epsilon);
  std::printf("m = %d\n", m);
  std::printf("defect = %.12g\n", adqsim::norm_defect(z, m));
  return 0;
}

int cmd_oracle(const std::string& source, std::uint64_t bound) {
  const adqsim::DiophantineEquation eq = adqsim::parse(source);
  const auto solutions = adqsim::brute_force_search(eq, bound);
  if (solutions.empty()) {
    std::printf("(none)\n");
    return 0;
  }
  for (const auto& tuple : solutions) {
    std::string joined;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      joined += (i ? "," : "") + std::to_string(tuple[i]);
    std::printf("(%s)\n", joined.c_str());
  }
  return 0;
}

int cmd_run(const RunOptions& opt) {
  if (opt.m_set == opt.epsilon_set) {
    std::cerr << "error: provide exactly one of --m and --epsilon\n";
    return 3;
  }

  const adqsim::DiophantineEquation eq = adqsim::parse(opt.equation);
  const std::size_t k = eq.variables.size();

  std::vector<adqsim::Complex> zs;
  if (opt.zs.size() == 1) {
    zs.assign(k, adqsim::Complex(opt.zs[0], 0.0));
  } else if (opt.zs.size() == k) {
    for (const double z : opt.zs) zs.emplace_back(z, 0.0);
  } else {
    std::cerr << "error: --z needs 1 value or one per variable (" << k << ")\n";
    return 3;
  }

  int m = opt.m;
  if (opt.epsilon_set) {
    m = 0;
    for (const adqsim::Complex z : zs)
      m = std::max(m, adqsim::truncation_dimension(z, opt.epsilon));
  }

  const adqsim::ProblemSetup setup = adqsim::make_setup(eq, m, zs);
  const adqsim::SweepConfig sweep{.t_initial = opt.t_initial,
                                  .t_increment = opt.t_increment,
                                  .t_max = opt.t_max,
                                  .dt = opt.dt,
                                  .midpoint_rule = !opt.no_midpoint};
  const adqsim::AlgorithmResult result = adqsim::run_algorithm(setup, sweep);

  const std::string csv_path = opt.out_prefix + "_trajectory.csv";
  const std::string json_path = opt.out_prefix + "_verdict.json";
  {
    std::ofstream csv(csv_path);
    if (!csv) {
      std::cerr << "error: cannot write " << csv_path << "\n";
      return 4;
    }
    adqsim::write_trajectory_csv(csv, result, setup);
  }
  {
    std::ofstream json(json_path);
    if (!json) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 4;
    }
    adqsim::write_verdict_json(json, result, setup, sweep);
  }

  const adqsim::Verdict& v = result.verdict;
  std::printf("outcome = %s\n", adqsim::to_string(v.outcome).c_str());
  if (v.outcome == adqsim::Verdict::Outcome::Inconclusive)
    std::printf("reason = %s\n", v.reason.c_str());
  else
    std::printf("tuple = (%s)\n", adqsim::format_tuple(v.tuple).c_str());
  if (v.crossing_T) std::printf("crossing_T = %.12g\n", *v.crossing_T);
  std::printf("final_p_max = %.12g\n", v.final_p_max);
  std::printf("m = %d\n", m);
  std::printf("wrote %s and %s\n", csv_path.c_str(), json_path.c_str());

  switch (v.outcome) {
    case adqsim::Verdict::Outcome::SolvableWithWitness: return 0;
    case adqsim::Verdict::Outcome::NoSolutionWithinTruncation: return 1;
    case adqsim::Verdict::Outcome::Inconclusive: return 2;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Adiabatic decision procedure for Diophantine equations, simulated on "
      "truncated Fock spaces"};
  app.require_subcommand(1);

  app.set_config("--config", "",
                 "INI config file with run options in a [run] section; "
                 "command-line flags win");

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand(
      "run", "sweep the adiabatic time T and decide solvability");
  run->fallthrough();  // lets --config appear after the subcommand name
  run->add_option("--eq", run_opt.equation, "equation, e.g. \"x - 6 = 0\"")
      ->required();
  run->add_option("--z", run_opt.zs,
                  "coherent label(s): one shared value or one per variable")
      ->required()
      ->delimiter(',');
  CLI::Option* m_opt =
      run->add_option("--m", run_opt.m, "per-mode truncation index (dim = m+1)");
  CLI::Option* eps_opt =
      run->add_option("--epsilon", run_opt.epsilon,
                      "pick the smallest m whose coherent norm defect is <= epsilon");
  m_opt->excludes(eps_opt);
  eps_opt->excludes(m_opt);
  run->add_option("--dt", run_opt.dt, "integrator step")->capture_default_str();
  run->add_option("--t-initial", run_opt.t_initial, "first adiabatic time T")
      ->capture_default_str();
  run->add_option("--t-increment", run_opt.t_increment, "T sweep increment")
      ->capture_default_str();
  run->add_option("--t-max", run_opt.t_max, "largest T before giving up")
      ->capture_default_str();
  run->add_flag("--no-midpoint", run_opt.no_midpoint,
                "evaluate the Hamiltonian at the step start instead of its midpoint");
  run->add_option("--out", run_opt.out_prefix,
                  "output prefix for <prefix>_trajectory.csv and <prefix>_verdict.json")
      ->capture_default_str();

  double dim_z = 0.0, dim_epsilon = 0.0;
  CLI::App* dim = app.add_subcommand(
      "dim", "smallest truncation m meeting a coherent norm-defect tolerance");
  dim->add_option("--z", dim_z, "coherent label")->required();
  dim->add_option("--epsilon", dim_epsilon, "norm-defect tolerance")->required();

  std::string oracle_eq;
  std::uint64_t oracle_bound = 0;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive search for solutions with all variables <= bound");
  oracle->add_option("--eq", oracle_eq, "equation")->required();
  oracle->add_option("--bound", oracle_bound, "per-variable search bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // help exits 0; parse errors exit >= 100
  }

  try {
    if (run->parsed()) {
      run_opt.m_set = m_opt->count() > 0;
      run_opt.epsilon_set = eps_opt->count() > 0;
      return cmd_run(run_opt);
    }
    if (dim->parsed()) return cmd_dim(dim_z, dim_epsilon);
    if (oracle->parsed()) return cmd_oracle(oracle_eq, oracle_bound);
  } catch (const adqsim::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 4;
}
