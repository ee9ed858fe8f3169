#ifndef SABC_BEAMFORMING_HPP
#define SABC_BEAMFORMING_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sabc {

/// Byproducts of the active-signal beam solve. rank_ratio is lambda_2 /
/// lambda_1 of the rank-one candidate V = v v^H (or of the independently
/// solved feasibility matrix when the verifier runs); c3_margin is the
/// achieved active-device rate minus the rate floor.
struct BeamSolveDiagnostics {
  double rank_ratio = 0.0;
  double c3_margin = 0.0;
  bool feasible = false;
};

/// Maximum ratio combining: h_b / ||h_b||. Throws for the zero vector.
Eigen::VectorXcd mrc(const Eigen::VectorXcd& h_b);

/// Max-SINR receive beam for a target channel against effective interference
/// channels e_j:  v ∝ (p sum_j e_j e_j^H + sigma_w2 I)^{-1} h_target,
/// unit norm, global phase fixed so v^H h_target is real positive.
Eigen::VectorXcd max_sinr_beam(const Eigen::VectorXcd& h_target,
                               const std::vector<Eigen::VectorXcd>& interferers,
                               double p, double sigma_w2);

/// Active-signal beam while one tag backscatters. Maximizes the
/// interference-limited SINR; since no feasible beam can do better, the
/// rate-floor check in the diagnostics doubles as a feasibility verdict for
/// the whole unit-trace PSD relaxation at this (alpha, p).
std::pair<Eigen::VectorXcd, BeamSolveDiagnostics> active_beam(
    const Eigen::VectorXcd& h_d, const Eigen::VectorXcd& h_b, double h_f_gain,
    double alpha, double p, double sigma_w2, double r_min,
    double eps_th = 1e-9);

/// MMSE receive beam, target channel included in the covariance:
///   v ∝ (h h^H + sum_j h_j h_j^H + (sigma_w2 / p) I)^{-1} h.
Eigen::VectorXcd mmse_beam(const Eigen::VectorXcd& h_target,
                           const std::vector<Eigen::VectorXcd>& h_interf,
                           double p, double sigma_w2);

/// Independent feasibility check of the unit-trace PSD program behind the
/// active beam: projected ascent of the rate-floor margin over
/// {V PSD, Tr V = 1}, starting from the maximally mixed I/K. The iterate
/// collapses onto the top eigenvector face, so a near-zero rank ratio of the
/// returned matrix certifies that the program's solution is rank-one.
struct FeasibilityCertificate {
  Eigen::MatrixXcd V;
  bool feasible = false;
  double margin = 0.0;      // Tr(C V) minus the constraint threshold
  double rank_ratio = 1.0;  // lambda_2 / lambda_1 of V
  int iterations = 0;
};

FeasibilityCertificate verify_beam_feasibility(
    const Eigen::VectorXcd& h_d, const Eigen::VectorXcd& h_b, double h_f_gain,
    double alpha, double p, double sigma_w2, double r_min, double tol = 1e-10,
    int max_iter = 2000);

/// lambda_2 / lambda_1 of a Hermitian PSD matrix (negative dust clamped).
double rank_ratio(const Eigen::MatrixXcd& V);

}  // namespace sabc

#endif
