#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <nlohmann/json.hpp>

#include "sabc/bcd.hpp"
#include "sabc/cap.hpp"
#include "sabc/montecarlo.hpp"

using namespace sabc;

namespace {

SystemConfig config_for(int m, int n, int k) {
  nlohmann::json doc{{"M", m}, {"N", n}, {"K", k}};
  return parse_config(doc);
}

// Deterministic single-tag scalar instance with a strong direct link.
ChannelRealization scalar_instance() {
  ChannelRealization chan;
  chan.h_f = Eigen::MatrixXcd::Constant(1, 1, 0.1);   // gain 0.01
  chan.h_d = Eigen::MatrixXcd::Constant(1, 1, 0.3);   // gain 0.09
  chan.h_b = Eigen::MatrixXcd::Constant(1, 1, 0.15);  // gain 0.0225
  return chan;
}

ChannelRealization draw_default(int trial, const SystemConfig& config) {
  TrialStreams streams = trial_streams(config, trial);
  const Topology topo = draw_topology(config, streams.topology);
  return realize_channels(topo, config, streams.channel);
}

}  // namespace

TEST_CASE("single-tag scalar instance converges to the boundary solution") {
  const SystemConfig config = config_for(1, 1, 1);
  const SolveState s = inner_bcd(scalar_instance(), config, 0);
  REQUIRE(s.feasible);
  CHECK(s.converged);
  CHECK(s.iterations <= 3);
  CHECK(s.q[0] == doctest::Approx(1.0 - kCapEps));
  // objective = q * accessed rate at the closed-form coefficient
  CHECK(s.t == doctest::Approx((1.0 - kCapEps) * s.rbar[0]).epsilon(1e-12));
  CHECK(s.alpha[0] ==
        doctest::Approx(1.0 - 1.7542768097606337e-3 / 0.01).epsilon(1e-9));
}

TEST_CASE("objective trace never decreases") {
  const SystemConfig config = parse_config(std::string("{}"));
  for (int trial = 0; trial < 20; ++trial) {
    const ChannelRealization chan = draw_default(trial, config);
    const SolveState s = greedy_tas(chan, config);
    if (!s.feasible) continue;
    double prev = 0.0;
    for (const IterTrace& tr : s.trace) {
      CHECK(tr.t >= prev - 1e-9);
      CHECK(tr.t_bar >= tr.t - 1e-9);
      CHECK(tr.t_hat >= tr.t_bar - 1e-9);
      prev = tr.t_hat;
    }
  }
}

TEST_CASE("defaults converge in a handful of iterations") {
  const SystemConfig config = parse_config(std::string("{}"));
  std::vector<int> iterations;
  for (int trial = 0; trial < 20; ++trial) {
    const SolveState s = greedy_tas(draw_default(trial, config), config);
    if (s.feasible) {
      CHECK(s.converged);
      iterations.push_back(s.iterations);
    }
  }
  REQUIRE(iterations.size() > 10);
  std::sort(iterations.begin(), iterations.end());
  CHECK(iterations[iterations.size() / 2] <= 5);
}

TEST_CASE("single-antenna selection is the inner solve itself") {
  const SystemConfig config = config_for(1, 1, 1);
  const ChannelRealization chan = scalar_instance();
  const SolveState inner = inner_bcd(chan, config, 0);
  const SolveState greedy = greedy_tas(chan, config);
  CHECK(greedy.antenna == 0);
  CHECK(greedy.t == inner.t);
}

TEST_CASE("a dominant feeding link wins the antenna search") {
  const SystemConfig config = config_for(4, 2, 2);
  const ChannelRealization base = draw_default(3, config);
  ChannelRealization chan = base;
  // same receive-side channels for every antenna; boost one feeding row
  for (int m = 1; m < 4; ++m) chan.h_d.col(m) = chan.h_d.col(0);
  chan.h_f.row(1) = chan.h_f.row(0);
  chan.h_f.row(2) = 10.0 * chan.h_f.row(0);
  chan.h_f.row(3) = chan.h_f.row(0);

  const SolveState s = greedy_tas(chan, config);
  REQUIRE(s.feasible);
  CHECK(s.antenna == 2);

  // the selection equals the exhaustive per-antenna maximum
  double best = -1.0;
  for (int m = 0; m < 4; ++m) {
    const SolveState sm = inner_bcd(chan, config, m);
    if (sm.feasible) best = std::max(best, sm.t);
  }
  CHECK(s.t == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("identical antennas tie-break to the lowest index") {
  const SystemConfig config = config_for(3, 2, 2);
  ChannelRealization chan = draw_default(5, config);
  for (int m = 1; m < 3; ++m) {
    chan.h_d.col(m) = chan.h_d.col(0);
    chan.h_f.row(m) = chan.h_f.row(0);
  }
  const SolveState s = greedy_tas(chan, config);
  REQUIRE(s.feasible);
  CHECK(s.antenna == 0);
}

TEST_CASE("fixed seed reproduces the solve bit for bit") {
  const SystemConfig config = parse_config(std::string("{}"));
  const ChannelRealization chan = draw_default(7, config);
  const SolveState a = greedy_tas(chan, config);
  const SolveState b = greedy_tas(chan, config);
  CHECK(a.t == b.t);
  CHECK(a.antenna == b.antenna);
  CHECK(a.q == b.q);
  CHECK(a.alpha == b.alpha);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("harvesting floor above the power budget is infeasible, not fatal") {
  const SystemConfig config = config_for(1, 1, 1);
  ChannelRealization chan = scalar_instance();
  chan.h_f(0, 0) = 0.01;  // gain 1e-4: floor ~ 17.5 W >> 1 W
  const SolveState s = inner_bcd(chan, config, 0);
  CHECK_FALSE(s.feasible);
  CHECK(s.antenna == 0);
  CHECK(s.t == 0.0);

  // one good antenna rescues the trial
  const SystemConfig config2 = config_for(2, 1, 1);
  ChannelRealization chan2;
  chan2.h_f.resize(2, 1);
  chan2.h_f << 0.01, 0.1;
  chan2.h_d = Eigen::MatrixXcd::Constant(1, 2, 0.3);
  chan2.h_b = Eigen::MatrixXcd::Constant(1, 1, 0.15);
  const SolveState s2 = greedy_tas(chan2, config2);
  REQUIRE(s2.feasible);
  CHECK(s2.antenna == 1);
}
