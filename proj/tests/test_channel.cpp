#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "sabc/channel.hpp"

using namespace sabc;

TEST_CASE("path loss is d^-mu") {
  CHECK(path_loss(1.0, 2.2) == doctest::Approx(1.0));
  // frozen from an independent high-precision evaluation of 6^-2.2
  CHECK(path_loss(6.0, 2.2) ==
        doctest::Approx(0.019411864410321646).epsilon(1e-12));
  CHECK_THROWS_AS(path_loss(0.0, 2.2), std::invalid_argument);
  CHECK_THROWS_AS(path_loss(-1.0, 2.2), std::invalid_argument);
}

TEST_CASE("rician limits: pure LOS and pure scattering") {
  SplitRng rng(7);
  const Eigen::VectorXcd los =
      rician_vector(3, std::numeric_limits<double>::infinity(), rng);
  for (int i = 0; i < 3; ++i) {
    CHECK(los(i).real() == doctest::Approx(1.0));
    CHECK(los(i).imag() == doctest::Approx(0.0));
  }

  // kappa = 0: zero-mean complex Gaussian entries
  std::complex<double> mean = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) mean += rician_vector(1, 0.0, rng)(0);
  mean /= static_cast<double>(draws);
  CHECK(std::abs(mean) < 0.02);

  CHECK_THROWS_AS(rician_vector(0, 1.0, rng), std::invalid_argument);
}

TEST_CASE("rician entries have unit average power") {
  SplitRng rng(11);
  const double kappa = std::pow(10.0, 0.28);  // 2.8 dB
  const int draws = 100000;
  Eigen::Vector4d power = Eigen::Vector4d::Zero();
  for (int i = 0; i < draws; ++i) {
    const Eigen::VectorXcd h = rician_vector(4, kappa, rng);
    for (int k = 0; k < 4; ++k) power(k) += std::norm(h(k));
  }
  power /= draws;
  for (int k = 0; k < 4; ++k)
    CHECK(power(k) == doctest::Approx(1.0).epsilon(0.02));
}

namespace {

SystemConfig tiny_config() {
  SystemConfig c = parse_config(std::string(R"({"M": 1, "N": 1, "K": 2})"));
  return c;
}

}  // namespace

TEST_CASE("realized link power equals the path loss on average") {
  const SystemConfig c = tiny_config();
  Topology topo{c.ad_pos, c.ap_pos, {{3.0, 3.0}}};
  SplitRng rng(13);
  double power = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const ChannelRealization chan = realize_channels(topo, c, rng);
    power += chan.h_d.col(0).squaredNorm() / c.K;
  }
  power /= draws;
  CHECK(power == doctest::Approx(std::pow(6.0, -2.2)).epsilon(0.02));
}

TEST_CASE("coincident nodes are rejected") {
  const SystemConfig c = tiny_config();
  Topology topo{c.ad_pos, c.ap_pos, {c.ap_pos}};  // tag on top of the receiver
  SplitRng rng(1);
  CHECK_THROWS_AS(realize_channels(topo, c, rng), std::invalid_argument);
}

TEST_CASE("fixed seed reproduces the realization bit for bit") {
  const SystemConfig c = parse_config(std::string("{}"));
  SplitRng rng_topo_a(3), rng_topo_b(3), rng_a(5), rng_b(5);
  const Topology ta = draw_topology(c, rng_topo_a);
  const Topology tb = draw_topology(c, rng_topo_b);
  for (int n = 0; n < c.N; ++n) {
    CHECK(ta.bd_pos[n][0] == tb.bd_pos[n][0]);
    CHECK(ta.bd_pos[n][1] == tb.bd_pos[n][1]);
    const double r = std::hypot(ta.bd_pos[n][0] - 3.0, ta.bd_pos[n][1] - 3.0);
    CHECK(r <= c.bd_circle_radius);
  }
  const ChannelRealization a = realize_channels(ta, c, rng_a);
  const ChannelRealization b = realize_channels(tb, c, rng_b);
  CHECK(a.h_f == b.h_f);
  CHECK(a.h_d == b.h_d);
  CHECK(a.h_b == b.h_b);
}

TEST_CASE("doubling every distance scales link powers by 2^-mu") {
  const SystemConfig c = tiny_config();
  Topology topo{{0.0, 0.0}, {6.0, 0.0}, {{3.0, 3.0}}};
  Topology doubled{{0.0, 0.0}, {12.0, 0.0}, {{6.0, 6.0}}};
  SplitRng rng_a(17), rng_b(17);  // identical fading draws
  const ChannelRealization a = realize_channels(topo, c, rng_a);
  const ChannelRealization b = realize_channels(doubled, c, rng_b);
  const double factor = std::pow(2.0, -c.path_loss_exponent);
  CHECK(std::norm(b.h_f(0, 0)) ==
        doctest::Approx(factor * std::norm(a.h_f(0, 0))).epsilon(1e-12));
  CHECK(b.h_d.col(0).squaredNorm() ==
        doctest::Approx(factor * a.h_d.col(0).squaredNorm()).epsilon(1e-12));
  CHECK(b.h_b.col(0).squaredNorm() ==
        doctest::Approx(factor * a.h_b.col(0).squaredNorm()).epsilon(1e-12));
}
