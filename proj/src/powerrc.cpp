#include "sabc/powerrc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sabc/linkmodel.hpp"

namespace sabc {

std::pair<std::vector<double>, double> min_power(
    std::span<const BdGains> gains, std::span<const EHParams> eh,
    std::span<const double> p_circuit, double r_min, double sigma_w2) {
  const int n_count = static_cast<int>(gains.size());
  if (eh.size() != gains.size() || p_circuit.size() != gains.size())
    throw std::invalid_argument("min_power: per-tag span sizes disagree");
  std::vector<double> p_min(n_count);
  double floor = 0.0;
  const double gamma = std::exp2(r_min) - 1.0;
  for (int n = 0; n < n_count; ++n) {
    if (!(gains[n].trd > 0.0) && gamma > 0.0)
      throw std::invalid_argument("min_power: active-link gain must be positive");
    const double eh_term = eh_inverse(p_circuit[n], eh[n]) / gains[n].hf_gain;
    const double qos_term = gamma > 0.0 ? gamma * sigma_w2 / gains[n].trd : 0.0;
    p_min[n] = std::max(eh_term, qos_term);
    floor = std::max(floor, p_min[n]);
  }
  return {std::move(p_min), floor};
}

std::optional<double> optimal_power(double p_max, double floor) {
  if (p_max > floor) return p_max;
  return std::nullopt;
}

RcSolution optimal_rc(std::span<const BdGains> gains, double p_max,
                      double r_min, double sigma_w2,
                      std::span<const EHParams> eh,
                      std::span<const double> p_circuit) {
  const int n_count = static_cast<int>(gains.size());
  RcSolution rc;
  rc.alpha.resize(n_count);
  rc.alpha_ad.resize(n_count);
  rc.alpha_eh.resize(n_count);
  rc.bd_feasible.assign(n_count, false);

  auto [p_min, floor] = min_power(gains, eh, p_circuit, r_min, sigma_w2);
  rc.p_min = std::move(p_min);
  rc.floor = floor;
  const std::optional<double> p = optimal_power(p_max, floor);
  rc.feasible = p.has_value();
  rc.p = p.value_or(0.0);

  const double gamma = std::exp2(r_min) - 1.0;
  for (int n = 0; n < n_count; ++n) {
    const BdGains& g = gains[n];
    double alpha_ad;
    if (gamma <= 0.0) {
      alpha_ad = std::numeric_limits<double>::infinity();  // no rate floor
    } else if (g.trb <= 0.0) {
      // The active beam nulls this tag entirely: the rate floor puts no
      // ceiling on the reflection coefficient.
      alpha_ad = std::numeric_limits<double>::infinity();
    } else {
      alpha_ad = (g.trd * p_max - gamma * sigma_w2) /
                 (gamma * g.trb * g.hf_gain * p_max);
    }
    const double alpha_eh =
        1.0 - eh_inverse(p_circuit[n], eh[n]) / (p_max * g.hf_gain);
    rc.alpha_ad[n] = alpha_ad;
    rc.alpha_eh[n] = alpha_eh;
    // The physical range caps alpha_ad at 1 before the min; alpha_eh never
    // exceeds 1.
    const double alpha = std::max(std::min(std::min(alpha_ad, 1.0), alpha_eh), 0.0);
    rc.alpha[n] = alpha;
    rc.bd_feasible[n] = alpha > 0.0 && rc.p_min[n] < p_max;
    if (!rc.bd_feasible[n]) rc.feasible = false;
  }
  return rc;
}

SubproblemValue subproblem_value(const RcSolution& rc,
                                 std::span<const BdGains> gains,
                                 std::span<const double> q, double r_min,
                                 double sigma_w2,
                                 std::span<const EHParams> eh,
                                 std::span<const double> p_circuit) {
  const int n_count = static_cast<int>(gains.size());
  SubproblemValue out;
  out.t_bar_n.resize(n_count);
  out.t_bar = std::numeric_limits<double>::infinity();
  const double gamma = std::exp2(r_min) - 1.0;
  const double p = rc.p;
  for (int n = 0; n < n_count; ++n) {
    const BdGains& g = gains[n];
    double snr;
    if (rc.alpha[n] <= 0.0) {
      snr = 0.0;
    } else if (rc.alpha_ad[n] < rc.alpha_eh[n]) {
      // rate-floor-limited tag
      snr = (g.trd * p - gamma * sigma_w2) / (gamma * g.trb * sigma_w2) *
            g.hb_norm2;
    } else {
      // harvesting-limited tag
      snr = (g.hf_gain * g.hb_norm2 * p -
             g.hb_norm2 * eh_inverse(p_circuit[n], eh[n])) /
            sigma_w2;
    }
    out.t_bar_n[n] = success_prob(q, n) * rate(std::max(snr, 0.0));
    out.t_bar = std::min(out.t_bar, out.t_bar_n[n]);
  }
  if (n_count == 0) out.t_bar = 0.0;
  return out;
}

}  // namespace sabc
