#ifndef SABC_LINKMODEL_HPP
#define SABC_LINKMODEL_HPP

#include <span>

#include <Eigen/Dense>

namespace sabc {

/// Receive beams for one tag: v_a decodes the active (direct-link) signal,
/// v_b the backscattered one. Both unit norm.
struct BeamPair {
  Eigen::VectorXcd v_a;
  Eigen::VectorXcd v_b;
};

/// SINR of the active device while tag n backscatters with reflection
/// coefficient alpha:  |v_a^H h_d|^2 p / (alpha |h_f|^2 |v_a^H h_b|^2 p + sigma_w2).
double sinr_ad(const Eigen::VectorXcd& v_a, const Eigen::VectorXcd& h_d,
               const Eigen::VectorXcd& h_b, double h_f_gain, double alpha,
               double p, double sigma_w2);

/// Post-SIC SNR of the backscattered signal:
///   alpha |h_f|^2 |v_b^H h_b|^2 p / sigma_w2.
double snr_bd(const Eigen::VectorXcd& v_b, const Eigen::VectorXcd& h_b,
              double h_f_gain, double alpha, double p, double sigma_w2);

/// log2(1 + x); throws for x < 0.
double rate(double x);

/// Slotted-ALOHA success probability of tag n: q_n * prod_{j != n} (1 - q_j).
double success_prob(std::span<const double> q, int n);

/// Average per-slot throughput: success probability times accessed rate.
double avg_throughput_bd(std::span<const double> q, int n, double rate_n);

/// Jain fairness index (sum v)^2 / (N sum v^2), in (0, 1].
/// Throws for an all-zero vector.
double jain_fi(std::span<const double> values);

}  // namespace sabc

#endif
