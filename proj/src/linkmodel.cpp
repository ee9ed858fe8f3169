#include "sabc/linkmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace sabc {

double sinr_ad(const Eigen::VectorXcd& v_a, const Eigen::VectorXcd& h_d,
               const Eigen::VectorXcd& h_b, double h_f_gain, double alpha,
               double p, double sigma_w2) {
  const double signal = std::norm(v_a.dot(h_d)) * p;
  const double interference = alpha * h_f_gain * std::norm(v_a.dot(h_b)) * p;
  return signal / (interference + sigma_w2);
}

double snr_bd(const Eigen::VectorXcd& v_b, const Eigen::VectorXcd& h_b,
              double h_f_gain, double alpha, double p, double sigma_w2) {
  return alpha * h_f_gain * std::norm(v_b.dot(h_b)) * p / sigma_w2;
}

double rate(double x) {
  if (x < 0.0)
    throw std::invalid_argument("rate: SINR/SNR must be nonnegative");
  return std::log2(1.0 + x);
}

double success_prob(std::span<const double> q, int n) {
  if (n < 0 || n >= static_cast<int>(q.size()))
    throw std::out_of_range("success_prob: tag index out of range");
  double prob = q[n];
  for (int j = 0; j < static_cast<int>(q.size()); ++j)
    if (j != n) prob *= 1.0 - q[j];
  return prob;
}

double avg_throughput_bd(std::span<const double> q, int n, double rate_n) {
  return success_prob(q, n) * rate_n;
}

double jain_fi(std::span<const double> values) {
  double sum = 0.0, sum_sq = 0.0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  if (sum_sq == 0.0)
    throw std::invalid_argument("jain_fi: all-zero value vector");
  // Cauchy-Schwarz bounds the index by 1; clip rounding overshoot.
  return std::min(sum * sum / (static_cast<double>(values.size()) * sum_sq),
                  1.0);
}

}  // namespace sabc
