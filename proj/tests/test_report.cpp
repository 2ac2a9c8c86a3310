#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "adqsim/report.hpp"

using namespace adqsim;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

const SweepConfig kLiteral{.t_initial = 5, .t_increment = 5, .t_max = 200, .dt = 1,
                           .midpoint_rule = false};

struct Decided {
  ProblemSetup setup;
  AlgorithmResult result;
};

const Decided& decided_x_minus_6() {
  static const Decided d = [] {
    ProblemSetup setup = make_setup(parse("x - 6 = 0"), 9, {Complex(4, 0)});
    AlgorithmResult result = run_algorithm(setup, kLiteral);
    return Decided{std::move(setup), std::move(result)};
  }();
  return d;
}

}  // namespace

TEST_CASE("tuple formatting") {
  CHECK(format_tuple(std::vector<std::uint64_t>{6}) == "6");
  CHECK(format_tuple(std::vector<std::uint64_t>{0, 0, 0, 0}) == "0;0;0;0");
  CHECK(format_tuple(std::vector<std::uint64_t>{}) == "");
}

TEST_CASE("trajectory CSV lists every sample of every run") {
  const Decided& d = decided_x_minus_6();
  std::ostringstream os;
  write_trajectory_csv(os, d.result, d.setup);
  const std::vector<std::string> lines = split(os.str(), '\n');

  // header + (6 + 11 + 16 + 21) samples for T = 5, 10, 15, 20
  REQUIRE(lines.size() == 55);
  CHECK(lines[0] == "T,step,t,p_max,argmax_tuple,norm_drift,p0,p1,p2,p3,p4,p5,p6,p7,p8,p9");

  const std::vector<std::string> first = split(lines[1], ',');
  REQUIRE(first.size() == 16);
  CHECK(first[0] == "5");
  CHECK(first[1] == "0");
  CHECK(first[2] == "0");
  CHECK(std::stod(first[3]) == doctest::Approx(0.2778587909574046).epsilon(1e-9));
  CHECK(first[4] == "3");
  CHECK(std::stod(first[5]) <= 1e-12);

  const std::vector<std::string> last = split(lines.back(), ',');
  REQUIRE(last.size() == 16);
  CHECK(last[0] == "20");
  CHECK(last[1] == "20");
  CHECK(last[2] == "20");
  CHECK(std::stod(last[3]) == doctest::Approx(0.536863879543369).epsilon(1e-7));
  CHECK(last[4] == "6");

  // per-state columns are probabilities of a unit state: each row sums to 1
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> row = split(lines[r], ',');
    double sum = 0.0;
    for (std::size_t c = 6; c < row.size(); ++c) sum += std::stod(row[c]);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::stod(row[3]) <= 1.0 + 1e-12);
  }

  std::ostringstream again;
  write_trajectory_csv(again, d.result, d.setup);
  CHECK(again.str() == os.str());  // byte-stable output
}

TEST_CASE("CSV drops per-state columns above 16 dimensions") {
  const ProblemSetup setup =
      make_setup(parse("x - y = 0"), 4, {Complex(1.6, 0), Complex(1.6, 0)});
  REQUIRE(setup.total_dim() == 25);
  SweepConfig sweep = kLiteral;
  sweep.t_max = 5.0;  // a single short run is enough for the schema check
  const AlgorithmResult result = run_algorithm(setup, sweep);

  std::ostringstream os;
  write_trajectory_csv(os, result, setup);
  const std::vector<std::string> lines = split(os.str(), '\n');
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "T,step,t,p_max,argmax_tuple,norm_drift");
  const std::vector<std::string> row = split(lines[1], ',');
  REQUIRE(row.size() == 6);
  CHECK(row[4].find(';') != std::string::npos);  // two-mode tuple "a;b"
}

TEST_CASE("verdict JSON round-trips the solvable case") {
  const Decided& d = decided_x_minus_6();
  std::ostringstream os;
  write_verdict_json(os, d.result, d.setup, kLiteral);
  const std::string text = os.str();
  CHECK(text.rfind("{\n  \"outcome\":", 0) == 0);  // stable key order, outcome first
  CHECK(text.back() == '\n');

  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("outcome") == "SolvableWithWitness");
  CHECK(j.at("witness").get<std::vector<std::uint64_t>>() ==
        std::vector<std::uint64_t>{6});
  CHECK_FALSE(j.contains("ground"));
  CHECK_FALSE(j.contains("reason"));
  CHECK(j.at("crossing_T").get<double>() == 20.0);
  CHECK(j.at("final_p_max").get<double>() ==
        doctest::Approx(0.536863879543369).epsilon(1e-7));
  CHECK(j.at("degenerate").get<bool>() == false);
  CHECK(j.at("equation") == "x - 6 = 0");
  CHECK(j.at("k").get<int>() == 1);
  CHECK(j.at("m").get<int>() == 9);
  CHECK(j.at("z").get<std::vector<double>>() == std::vector<double>{4.0});
  CHECK(j.at("epsilon_defect").get<double>() ==
        doctest::Approx(1.735491618792828e-05).epsilon(1e-9));
  CHECK(j.at("dt").get<double>() == 1.0);
  CHECK(j.at("t_initial").get<double>() == 5.0);
  CHECK(j.at("t_increment").get<double>() == 5.0);
  CHECK(j.at("t_max").get<double>() == 200.0);
  CHECK(j.at("midpoint_rule").get<bool>() == false);
  CHECK(j.at("runs").get<int>() == 4);

  std::ostringstream again;
  write_verdict_json(again, d.result, d.setup, kLiteral);
  CHECK(again.str() == text);
}

TEST_CASE("verdict JSON reports the inconclusive case with a reason") {
  const ProblemSetup setup = make_setup(parse("x + 6 = 0"), 9, {Complex(4, 0)});
  SweepConfig sweep = kLiteral;
  sweep.t_max = 30.0;
  const AlgorithmResult result = run_algorithm(setup, sweep);
  REQUIRE(result.verdict.outcome == Verdict::Outcome::Inconclusive);

  std::ostringstream os;
  write_verdict_json(os, result, setup, sweep);
  const nlohmann::json j = nlohmann::json::parse(os.str());
  CHECK(j.at("outcome") == "Inconclusive");
  CHECK(j.at("reason") == "no adiabatic crossing by t_max");
  CHECK(j.at("crossing_T").is_null());
  CHECK_FALSE(j.contains("witness"));
  CHECK_FALSE(j.contains("ground"));
  CHECK(j.at("runs").get<int>() == 6);
}

TEST_CASE("verdict JSON keeps complex drive labels as re/im pairs") {
  const ProblemSetup setup =
      make_setup(parse("x - y = 0"), 2, {Complex(0.5, 0.25), Complex(1.0, 0)});
  SweepConfig sweep = kLiteral;
  sweep.t_max = 5.0;
  const AlgorithmResult result = run_algorithm(setup, sweep);

  std::ostringstream os;
  write_verdict_json(os, result, setup, sweep);
  const nlohmann::json j = nlohmann::json::parse(os.str());
  const auto zs = j.at("z").get<std::vector<std::array<double, 2>>>();
  REQUIRE(zs.size() == 2);
  CHECK(zs[0][0] == 0.5);
  CHECK(zs[0][1] == 0.25);
  CHECK(zs[1][0] == 1.0);
  CHECK(zs[1][1] == 0.0);
}
