#ifndef SABC_CHANNEL_HPP
#define SABC_CHANNEL_HPP

#include <vector>

#include <Eigen/Dense>

#include "sabc/config.hpp"
#include "sabc/rng.hpp"

namespace sabc {

struct Topology {
  Vec2 ad_pos{};
  Vec2 ap_pos{};
  std::vector<Vec2> bd_pos;  // one position per tag, inside the drop circle
};

/// One block-fading draw of every link. Column m of h_d is the channel from
/// transmit antenna m to the access point; column n of h_b runs from tag n
/// to the access point; h_f(m, n) is the scalar antenna-m -> tag-n link.
struct ChannelRealization {
  Eigen::MatrixXcd h_f;  // M x N
  Eigen::MatrixXcd h_d;  // K x M
  Eigen::MatrixXcd h_b;  // K x N

  double hf_gain(int m, int n) const { return std::norm(h_f(m, n)); }
};

/// d^(-mu) distance path loss (linear power gain). Throws for d <= 0.
double path_loss(double d, double mu);

/// Rician fading vector with unit average power per entry and an all-ones
/// line-of-sight component:
///   h = sqrt(kappa/(1+kappa)) * 1 + sqrt(1/(1+kappa)) * g,  g ~ CN(0, I).
/// kappa is the linear Rician factor; +inf yields the pure LOS vector.
Eigen::VectorXcd rician_vector(int dim, double kappa, SplitRng& rng);

/// Uniform tag drop inside the configured circle.
Topology draw_topology(const SystemConfig& config, SplitRng& rng);

/// Combine path loss and small-scale fading for every link of the topology.
/// Throws for coincident node positions.
ChannelRealization realize_channels(const Topology& topology,
                                    const SystemConfig& config, SplitRng& rng);

}  // namespace sabc

#endif
