#include "sabc/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sabc/linkmodel.hpp"

namespace sabc {

namespace {

// Fix the global phase so v^H ref is real positive; pure-phase rotations do
// not change any |v^H h|^2 quantity.
Eigen::VectorXcd normalize_phase(Eigen::VectorXcd v,
                                 const Eigen::VectorXcd& ref) {
  const std::complex<double> d = v.dot(ref);
  if (std::abs(d) > 0.0) v *= d / std::abs(d);
  return v;
}

// Euclidean projection of a real vector onto the probability simplex.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> sorted(x.data(), x.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumsum = 0.0, tau = 0.0;
  for (int j = 0; j < n; ++j) {
    cumsum += sorted[j];
    const double candidate = (cumsum - 1.0) / (j + 1);
    if (sorted[j] - candidate > 0.0) tau = candidate;
  }
  return (x.array() - tau).cwiseMax(0.0);
}

}  // namespace

double rank_ratio(const Eigen::MatrixXcd& V) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(V,
                                                     Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending
  const int k = static_cast<int>(ev.size());
  if (k < 2) return 0.0;
  const double top = ev(k - 1);
  if (top <= 0.0) return 1.0;
  return std::max(ev(k - 2), 0.0) / top;
}

Eigen::VectorXcd mrc(const Eigen::VectorXcd& h_b) {
  const double norm = h_b.norm();
  if (norm == 0.0)
    throw std::invalid_argument("mrc: channel vector must be nonzero");
  return h_b / norm;
}

Eigen::VectorXcd max_sinr_beam(const Eigen::VectorXcd& h_target,
                               const std::vector<Eigen::VectorXcd>& interferers,
                               double p, double sigma_w2) {
  if (h_target.norm() == 0.0)
    throw std::invalid_argument("max_sinr_beam: target channel must be nonzero");
  if (!(p > 0.0) || !(sigma_w2 > 0.0))
    throw std::invalid_argument("max_sinr_beam: p and sigma_w2 must be positive");
  const int k = static_cast<int>(h_target.size());
  Eigen::MatrixXcd cov = sigma_w2 * Eigen::MatrixXcd::Identity(k, k);
  for (const auto& e : interferers) cov += p * e * e.adjoint();
  Eigen::VectorXcd v = cov.llt().solve(h_target);
  v.normalize();
  return normalize_phase(std::move(v), h_target);
}

std::pair<Eigen::VectorXcd, BeamSolveDiagnostics> active_beam(
    const Eigen::VectorXcd& h_d, const Eigen::VectorXcd& h_b, double h_f_gain,
    double alpha, double p, double sigma_w2, double r_min, double eps_th) {
  std::vector<Eigen::VectorXcd> interferers;
  const double w = alpha * h_f_gain;
  if (w > 0.0 && h_b.norm() > 0.0)
    interferers.push_back(std::sqrt(w) * h_b);
  Eigen::VectorXcd v = max_sinr_beam(h_d, interferers, p, sigma_w2);

  BeamSolveDiagnostics diag;
  const double sinr = sinr_ad(v, h_d, h_b, h_f_gain, alpha, p, sigma_w2);
  diag.c3_margin = rate(sinr) - r_min;
  diag.feasible = diag.c3_margin >= -eps_th;
  diag.rank_ratio = rank_ratio(v * v.adjoint());
  return {std::move(v), diag};
}

Eigen::VectorXcd mmse_beam(const Eigen::VectorXcd& h_target,
                           const std::vector<Eigen::VectorXcd>& h_interf,
                           double p, double sigma_w2) {
  if (h_target.norm() == 0.0)
    throw std::invalid_argument("mmse_beam: target channel must be nonzero");
  if (!(p > 0.0) || !(sigma_w2 > 0.0))
    throw std::invalid_argument("mmse_beam: p and sigma_w2 must be positive");
  const int k = static_cast<int>(h_target.size());
  Eigen::MatrixXcd cov =
      (sigma_w2 / p) * Eigen::MatrixXcd::Identity(k, k) +
      h_target * h_target.adjoint();
  for (const auto& h : h_interf) cov += h * h.adjoint();
  Eigen::VectorXcd v = cov.llt().solve(h_target);
  v.normalize();
  return normalize_phase(std::move(v), h_target);
}

FeasibilityCertificate verify_beam_feasibility(
    const Eigen::VectorXcd& h_d, const Eigen::VectorXcd& h_b, double h_f_gain,
    double alpha, double p, double sigma_w2, double r_min, double tol,
    int max_iter) {
  const int k = static_cast<int>(h_d.size());
  const double gamma = std::exp2(r_min) - 1.0;

  // Rate-floor constraint in trace form: Tr(C V) >= gamma * sigma_w2 with
  //   C = p h_d h_d^H - gamma alpha |h_f|^2 p h_b h_b^H.
  Eigen::MatrixXcd c_mat = p * h_d * h_d.adjoint();
  if (alpha * h_f_gain > 0.0)
    c_mat -= gamma * alpha * h_f_gain * p * h_b * h_b.adjoint();
  const double threshold = gamma * sigma_w2;

  FeasibilityCertificate cert;
  const double c_norm = c_mat.norm();
  if (c_norm == 0.0) {
    // Degenerate rate floor (r_min = 0): every unit-trace PSD matrix works.
    cert.V = Eigen::MatrixXcd::Identity(k, k) / k;
    cert.feasible = threshold <= 0.0;
    cert.margin = -threshold;
    cert.rank_ratio = k > 1 ? 1.0 : 0.0;
    return cert;
  }

  const double step = 1.0 / c_norm;
  Eigen::MatrixXcd v_mat = Eigen::MatrixXcd::Identity(k, k) / k;
  double prev_obj = -std::numeric_limits<double>::infinity();
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    Eigen::MatrixXcd stepped = v_mat + step * c_mat;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(stepped);
    const Eigen::VectorXd lambda = project_simplex(es.eigenvalues());
    v_mat = es.eigenvectors() * lambda.asDiagonal() *
            es.eigenvectors().adjoint();
    const double obj = (c_mat * v_mat).trace().real();
    const double ratio =
        lambda(k - 1) > 0.0 && k > 1
            ? std::max(lambda(k - 2), 0.0) / lambda(k - 1)
            : 0.0;
    if (std::abs(obj - prev_obj) <= tol * c_norm && ratio <= tol) break;
    prev_obj = obj;
  }

  cert.V = v_mat;
  cert.iterations = iter + 1;
  cert.margin = (c_mat * v_mat).trace().real() - threshold;
  cert.feasible = cert.margin >= -tol * std::max(c_norm, threshold);
  cert.rank_ratio = rank_ratio(v_mat);
  return cert;
}

}  // namespace sabc
