#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "sabc/linkmodel.hpp"
#include "sabc/montecarlo.hpp"

using namespace sabc;

TEST_CASE("one trial, one algorithm, one report") {
  SystemConfig config = parse_config(std::string(R"({"trials": 1})"));
  const RunResult result = run_trials(config, {Algorithm::proposed});
  REQUIRE(result.reports.size() == 1);
  CHECK(result.reports[0].algorithm == "proposed");
  CHECK(result.aggregate.size() == 1);
  CHECK(result.aggregate[0].trials == 1);
  CHECK(result.aggregate[0].ci95_objective == 0.0);  // needs two trials
}

TEST_CASE("identical seeds give identical runs") {
  SystemConfig config = parse_config(std::string(R"({"trials": 6, "seed": 33})"));
  const RunResult a = run_trials(config, {Algorithm::proposed, Algorithm::ecap});
  const RunResult b = run_trials(config, {Algorithm::proposed, Algorithm::ecap});
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].objective == b.reports[i].objective);
    CHECK(a.reports[i].q == b.reports[i].q);
    CHECK(a.reports[i].alpha == b.reports[i].alpha);
  }
}

TEST_CASE("parallel loop reproduces the serial reference bit for bit") {
  SystemConfig config = parse_config(std::string(R"({"trials": 12, "seed": 9})"));
  const std::vector<Algorithm> algs = {Algorithm::proposed, Algorithm::rtas,
                                       Algorithm::tdma};
  const RunResult par = run_trials(config, algs);
  const RunResult ser = run_trials_serial(config, algs);
  REQUIRE(par.reports.size() == ser.reports.size());
  for (std::size_t i = 0; i < par.reports.size(); ++i) {
    CHECK(par.reports[i].trial == ser.reports[i].trial);
    CHECK(par.reports[i].algorithm == ser.reports[i].algorithm);
    CHECK(par.reports[i].objective == ser.reports[i].objective);
    CHECK(par.reports[i].antenna == ser.reports[i].antenna);
    CHECK(par.reports[i].q == ser.reports[i].q);
    CHECK(par.reports[i].jain == ser.reports[i].jain);
  }
}

TEST_CASE("slot simulation: deterministic corners") {
  SplitRng rng(3);
  const std::vector<double> q{1.0, 0.0};
  const std::vector<double> rbar{2.5, 4.0};
  const std::vector<double> credit = simulate_access(q, rbar, 10000, rng);
  CHECK(credit[0] == doctest::Approx(2.5));  // sole transmitter every slot
  CHECK(credit[1] == 0.0);

  const std::vector<double> always{1.0, 1.0};
  const std::vector<double> collided = simulate_access(always, rbar, 1000, rng);
  CHECK(collided[0] == 0.0);
  CHECK(collided[1] == 0.0);

  CHECK_THROWS_AS(simulate_access(q, rbar, 0, rng), std::invalid_argument);
}

TEST_CASE("slot simulation agrees with the analytic average throughput") {
  SplitRng rng(101);
  const std::vector<double> q{0.5, 0.5};
  const std::vector<double> rbar{3.0, 3.0};
  const std::vector<double> credit = simulate_access(q, rbar, 100000, rng);
  for (int n = 0; n < 2; ++n) {
    const double analytic = avg_throughput_bd(q, n, rbar[n]);
    CHECK(analytic == doctest::Approx(0.25 * 3.0));
    CHECK(std::abs(credit[n] - analytic) / analytic < 0.02);
  }
}

TEST_CASE("mean objective rises with the power budget (paired seeds)") {
  nlohmann::json doc{{"trials", 10}, {"seed", 21}};
  doc["p_max"] = 0.5;
  const RunResult low = run_trials(parse_config(doc), {Algorithm::proposed});
  doc["p_max"] = 1.0;
  const RunResult high = run_trials(parse_config(doc), {Algorithm::proposed});
  REQUIRE(low.aggregate.size() == 1);
  REQUIRE(high.aggregate.size() == 1);
  CHECK(high.aggregate[0].mean_objective >=
        low.aggregate[0].mean_objective - 1e-9);
}

TEST_CASE("fixed tag positions are shared across trials when configured") {
  SystemConfig config = parse_config(
      std::string(R"({"trials": 3, "redraw_bd_positions": false})"));
  TrialStreams s0 = trial_streams(config, 0);
  TrialStreams s1 = trial_streams(config, 1);
  const Topology t0 = draw_topology(config, s0.topology);
  const Topology t1 = draw_topology(config, s1.topology);
  for (int n = 0; n < config.N; ++n) {
    CHECK(t0.bd_pos[n][0] == t1.bd_pos[n][0]);
    CHECK(t0.bd_pos[n][1] == t1.bd_pos[n][1]);
  }

  config.redraw_bd_positions = true;
  TrialStreams r0 = trial_streams(config, 0);
  TrialStreams r1 = trial_streams(config, 1);
  const Topology u0 = draw_topology(config, r0.topology);
  const Topology u1 = draw_topology(config, r1.topology);
  CHECK(u0.bd_pos[0][0] != u1.bd_pos[0][0]);
}

TEST_CASE("channel dump is reproducible and covers every link") {
  SystemConfig config = parse_config(
      std::string(R"({"trials": 2, "M": 2, "N": 2, "K": 2})"));
  std::ostringstream a, b;
  dump_channels_csv(config, a);
  dump_channels_csv(config, b);
  const std::string text = a.str();
  CHECK(text == b.str());
  // header + trials * (M*N + M*K + N*K) rows
  const long rows = std::count(text.begin(), text.end(), '\n');
  CHECK(rows == 1 + 2 * (4 + 4 + 4));
}
