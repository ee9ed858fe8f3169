#include "sabc/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sabc/beamforming.hpp"
#include "sabc/energy.hpp"
#include "sabc/linkmodel.hpp"

namespace sabc {

namespace {

SolveState infeasible_state(int n_count) {
  SolveState s;
  s.alpha.assign(n_count, 0.0);
  s.q.assign(n_count, 0.0);
  s.rbd.assign(n_count, 0.0);
  s.rbar.assign(n_count, 0.0);
  s.r_ad.assign(n_count, 0.0);
  return s;
}

}  // namespace

SolveState solve_proposed(const ChannelRealization& chan,
                          const SystemConfig& config) {
  return greedy_tas(chan, config);
}

SolveState solve_ecap(const ChannelRealization& chan,
                      const SystemConfig& config) {
  BcdOptions options;
  options.optimize_cap = false;
  options.fixed_q.assign(config.N, 1.0 / config.N);
  return greedy_tas(chan, config, options);
}

SolveState solve_frc(const ChannelRealization& chan,
                     const SystemConfig& config) {
  BcdOptions options;
  options.optimize_rc = false;
  options.fixed_alpha = config.frc_alpha;
  return greedy_tas(chan, config, options);
}

SolveState solve_rtas(const ChannelRealization& chan,
                      const SystemConfig& config, SplitRng& rng) {
  // Random permutation; taking the first feasible antenna draws uniformly
  // from the feasible set.
  std::vector<int> order(config.M);
  std::iota(order.begin(), order.end(), 0);
  for (int i = config.M - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform() * (i + 1));
    std::swap(order[i], order[std::min(j, i)]);
  }
  for (int m : order) {
    SolveState s = inner_bcd(chan, config, m);
    if (s.feasible) return s;
  }
  return infeasible_state(config.N);
}

TdmaSolution solve_tdma_lp(std::span<const double> r,
                           std::span<const double> rad, double r_min) {
  const int n_count = static_cast<int>(r.size());
  TdmaSolution tdma;
  if (n_count == 0 || rad.size() != r.size())
    throw std::invalid_argument("solve_tdma_lp: bad rate vectors");
  for (double v : r)
    if (!(v > 0.0))
      throw std::invalid_argument("solve_tdma_lp: rates must be positive");

  const double rad_max = *std::max_element(rad.begin(), rad.end());
  if (rad_max < r_min) return tdma;  // QoS unreachable even with all slack

  double inv_sum = 0.0, qos_sum = 0.0;
  for (int n = 0; n < n_count; ++n) {
    inv_sum += 1.0 / r[n];
    qos_sum += rad[n] / r[n];
  }
  auto feasible = [&](double t) {
    const double load = t * inv_sum;
    if (load > 1.0) return false;
    return t * qos_sum + (1.0 - load) * rad_max >= r_min;
  };
  double lo = 0.0, hi = *std::min_element(r.begin(), r.end());
  if (!feasible(lo)) return tdma;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }

  tdma.feasible = true;
  tdma.tau.resize(n_count);
  for (int n = 0; n < n_count; ++n) tdma.tau[n] = lo / r[n];
  const int slack_bd =
      static_cast<int>(std::max_element(rad.begin(), rad.end()) - rad.begin());
  const double slack =
      1.0 - std::accumulate(tdma.tau.begin(), tdma.tau.end(), 0.0);
  tdma.tau[slack_bd] += std::max(slack, 0.0);
  tdma.t = std::numeric_limits<double>::infinity();
  for (int n = 0; n < n_count; ++n)
    tdma.t = std::min(tdma.t, tdma.tau[n] * r[n]);
  return tdma;
}

std::pair<SolveState, TdmaSolution> solve_tdma(const ChannelRealization& chan,
                                               const SystemConfig& config) {
  const int n_count = config.N;
  // Beams, power, and reflection coefficients do not depend on the access
  // variables, so the two-block engine with a held q yields them.
  BcdOptions options;
  options.optimize_cap = false;
  options.fixed_q.assign(n_count, 1.0 / n_count);

  SolveState best = infeasible_state(n_count);
  TdmaSolution best_tdma;
  best.antenna = -1;

  for (int m = 0; m < config.M; ++m) {
    SolveState s = inner_bcd(chan, config, m, options);
    if (!s.feasible) continue;
    TdmaSolution tdma = solve_tdma_lp(s.rbar, s.r_ad, config.r_min);
    if (!tdma.feasible) continue;
    const std::vector<double>& r = s.rbar;

    if (!best.feasible || tdma.t > best_tdma.t) {
      s.q = tdma.tau;
      s.t = tdma.t;
      for (int n = 0; n < n_count; ++n) s.rbd[n] = tdma.tau[n] * r[n];
      best = std::move(s);
      best_tdma = std::move(tdma);
    }
  }
  return {std::move(best), std::move(best_tdma)};
}

SolveState solve_tc(const ChannelRealization& chan,
                    const SystemConfig& config) {
  const int n_count = config.N;
  const double p = config.p_max;
  const double sigma2 = config.sigma_w2;
  const int max_sweeps = 50;

  SolveState best = infeasible_state(n_count);
  best.antenna = -1;

  for (int m = 0; m < config.M; ++m) {
    const Eigen::VectorXcd h_d = chan.h_d.col(m);
    std::vector<double> hf_gain(n_count), alpha_eh(n_count);
    bool antenna_ok = true;
    for (int n = 0; n < n_count; ++n) {
      hf_gain[n] = chan.hf_gain(m, n);
      alpha_eh[n] = 1.0 - eh_inverse(config.p_circuit[n], config.eh[n]) /
                              (p * hf_gain[n]);
      if (alpha_eh[n] <= 0.0) antenna_ok = false;
    }
    if (!antenna_ok) continue;
    // Rate floor must hold at least with all tags silent.
    if (rate(h_d.squaredNorm() * p / sigma2) < config.r_min) continue;

    std::vector<double> alpha(n_count);
    for (int n = 0; n < n_count; ++n) alpha[n] = alpha_eh[n] / 2.0;

    // Active-device rate with the max-SINR beam against the summed
    // interference of all backscattering tags.
    auto ad_rate = [&](const std::vector<double>& a) {
      std::vector<Eigen::VectorXcd> interferers;
      for (int j = 0; j < n_count; ++j)
        if (a[j] * hf_gain[j] > 0.0)
          interferers.push_back(std::sqrt(a[j] * hf_gain[j]) *
                                chan.h_b.col(j));
      const Eigen::VectorXcd v = max_sinr_beam(h_d, interferers, p, sigma2);
      double interference = 0.0;
      for (int j = 0; j < n_count; ++j)
        interference +=
            a[j] * hf_gain[j] * std::norm(v.dot(chan.h_b.col(j))) * p;
      return rate(std::norm(v.dot(h_d)) * p / (interference + sigma2));
    };

    std::vector<Eigen::VectorXcd> v_b(n_count);
    // g(j, i): power of tag i leaking through tag j's beam, per unit alpha.
    Eigen::MatrixXd g(n_count, n_count);
    auto refresh_beams = [&]() {
      std::vector<Eigen::VectorXcd> eff(n_count);
      for (int j = 0; j < n_count; ++j)
        eff[j] = std::sqrt(std::max(alpha[j], 0.0) * hf_gain[j]) *
                 chan.h_b.col(j);
      for (int n = 0; n < n_count; ++n) {
        if (alpha[n] > 1e-15) {
          std::vector<Eigen::VectorXcd> interf;
          for (int j = 0; j < n_count; ++j)
            if (j != n && alpha[j] > 1e-15) interf.push_back(eff[j]);
          v_b[n] = mmse_beam(eff[n], interf, p, sigma2);
        } else {
          v_b[n] = mrc(chan.h_b.col(n));  // silent tag, rate is zero anyway
        }
        for (int i = 0; i < n_count; ++i)
          g(n, i) = hf_gain[i] * std::norm(v_b[n].dot(chan.h_b.col(i))) * p;
      }
    };
    auto tag_rate = [&](int j, const std::vector<double>& a) {
      double interference = 0.0;
      for (int i = 0; i < n_count; ++i)
        if (i != j) interference += a[i] * g(j, i);
      return rate(a[j] * g(j, j) / (interference + sigma2));
    };
    auto min_rate = [&](const std::vector<double>& a) {
      double value = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n_count; ++j) value = std::min(value, tag_rate(j, a));
      return value;
    };

    double prev_value = -1.0;
    int sweeps = 0;
    for (; sweeps < max_sweeps; ++sweeps) {
      refresh_beams();
      for (int n = 0; n < n_count; ++n) {
        // Ceiling on alpha_n from the rate floor, with the other
        // coefficients held fixed; the active-device rate is decreasing in
        // alpha_n, so bisection applies.
        auto with_alpha = [&](double a_n) {
          std::vector<double> a = alpha;
          a[n] = a_n;
          return a;
        };
        double hi = alpha_eh[n];
        if (ad_rate(with_alpha(0.0)) < config.r_min) {
          hi = 0.0;
        } else if (ad_rate(with_alpha(hi)) < config.r_min) {
          double lo_b = 0.0, hi_b = hi;
          for (int it = 0; it < 40; ++it) {
            const double mid = 0.5 * (lo_b + hi_b);
            (ad_rate(with_alpha(mid)) >= config.r_min ? lo_b : hi_b) = mid;
          }
          hi = lo_b;
        }
        // Raise alpha_n to the crossing between this tag's rate and the
        // worst other rate; past it the update would hurt the minimum.
        double chosen = hi;
        if (n_count > 1 && hi > 0.0) {
          auto gap = [&](double a_n) {
            const std::vector<double> a = with_alpha(a_n);
            double others = std::numeric_limits<double>::infinity();
            for (int j = 0; j < n_count; ++j)
              if (j != n) others = std::min(others, tag_rate(j, a));
            return tag_rate(n, a) - others;
          };
          if (gap(hi) > 0.0) {
            double lo_b = 0.0, hi_b = hi;
            for (int it = 0; it < 40; ++it) {
              const double mid = 0.5 * (lo_b + hi_b);
              (gap(mid) <= 0.0 ? lo_b : hi_b) = mid;
            }
            chosen = lo_b;
          }
        }
        alpha[n] = chosen;
      }
      const double value = min_rate(alpha);
      if (std::abs(value - prev_value) < config.eps_th) {
        prev_value = value;
        ++sweeps;
        break;
      }
      prev_value = value;
    }

    refresh_beams();
    SolveState s = infeasible_state(n_count);
    s.antenna = m;
    s.p = p;
    s.alpha = alpha;
    s.q.assign(n_count, 1.0);
    s.iterations = sweeps;
    s.feasible = true;
    s.converged = true;
    s.beams.resize(n_count);
    const double rad_final = ad_rate(alpha);
    for (int n = 0; n < n_count; ++n) {
      s.rbd[n] = tag_rate(n, alpha);
      s.rbar[n] = s.rbd[n];
      s.r_ad[n] = rad_final;
      s.beams[n].v_b = v_b[n];
      std::vector<Eigen::VectorXcd> interferers;
      for (int j = 0; j < n_count; ++j)
        if (alpha[j] * hf_gain[j] > 0.0)
          interferers.push_back(std::sqrt(alpha[j] * hf_gain[j]) *
                                chan.h_b.col(j));
      s.beams[n].v_a = max_sinr_beam(h_d, interferers, p, sigma2);
    }
    s.t = min_rate(alpha);

    if (!best.feasible || s.t > best.t) best = std::move(s);
  }
  return best;
}

}  // namespace sabc
