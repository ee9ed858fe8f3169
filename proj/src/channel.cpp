#include "sabc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace sabc {

namespace {

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

double path_loss(double d, double mu) {
  if (!(d > 0.0))
    throw std::invalid_argument("path_loss: distance must be positive");
  return std::pow(d, -mu);
}

Eigen::VectorXcd rician_vector(int dim, double kappa, SplitRng& rng) {
  if (dim < 1)
    throw std::invalid_argument("rician_vector: dimension must be at least 1");
  if (kappa < 0.0)
    throw std::invalid_argument("rician_vector: kappa must be nonnegative");

  Eigen::VectorXcd h(dim);
  if (std::isinf(kappa)) {
    h.setOnes();
    return h;
  }
  const double los = std::sqrt(kappa / (1.0 + kappa));
  const double nlos = std::sqrt(1.0 / (1.0 + kappa));
  for (int i = 0; i < dim; ++i) h(i) = los + nlos * rng.cnormal();
  return h;
}

Topology draw_topology(const SystemConfig& config, SplitRng& rng) {
  Topology topo;
  topo.ad_pos = config.ad_pos;
  topo.ap_pos = config.ap_pos;
  topo.bd_pos.resize(config.N);
  for (int n = 0; n < config.N; ++n) {
    // uniform over the disc: radius via sqrt of a uniform draw
    const double r = config.bd_circle_radius * std::sqrt(rng.uniform());
    const double phi = 2.0 * M_PI * rng.uniform();
    topo.bd_pos[n] = {config.bd_circle_center[0] + r * std::cos(phi),
                      config.bd_circle_center[1] + r * std::sin(phi)};
  }
  return topo;
}

ChannelRealization realize_channels(const Topology& topology,
                                    const SystemConfig& config, SplitRng& rng) {
  const int m_count = config.M;
  const int n_count = config.N;
  const int k_count = config.K;
  if (static_cast<int>(topology.bd_pos.size()) != n_count)
    throw std::invalid_argument("realize_channels: topology/config tag count mismatch");

  const double mu = config.path_loss_exponent;
  const double kappa = config.rician_kappa;

  std::vector<double> d_ad_bd(n_count), d_bd_ap(n_count);
  for (int n = 0; n < n_count; ++n) {
    d_ad_bd[n] = distance(topology.ad_pos, topology.bd_pos[n]);
    d_bd_ap[n] = distance(topology.bd_pos[n], topology.ap_pos);
    if (d_ad_bd[n] <= 0.0 || d_bd_ap[n] <= 0.0)
      throw std::invalid_argument(
          "realize_channels: tag coincides with another node");
  }
  const double d_ad_ap = distance(topology.ad_pos, topology.ap_pos);
  if (d_ad_ap <= 0.0)
    throw std::invalid_argument(
        "realize_channels: transmitter and receiver positions coincide");

  ChannelRealization chan;
  chan.h_f.resize(m_count, n_count);
  chan.h_d.resize(k_count, m_count);
  chan.h_b.resize(k_count, n_count);

  // Fixed draw order keeps realizations reproducible: h_f row-major, then
  // h_d per antenna, then h_b per tag.
  for (int m = 0; m < m_count; ++m)
    for (int n = 0; n < n_count; ++n)
      chan.h_f(m, n) =
          std::sqrt(path_loss(d_ad_bd[n], mu)) * rician_vector(1, kappa, rng)(0);
  for (int m = 0; m < m_count; ++m)
    chan.h_d.col(m) =
        std::sqrt(path_loss(d_ad_ap, mu)) * rician_vector(k_count, kappa, rng);
  for (int n = 0; n < n_count; ++n)
    chan.h_b.col(n) =
        std::sqrt(path_loss(d_bd_ap[n], mu)) * rician_vector(k_count, kappa, rng);
  return chan;
}

}  // namespace sabc
