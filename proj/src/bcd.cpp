#include "sabc/bcd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sabc/beamforming.hpp"
#include "sabc/cap.hpp"
#include "sabc/energy.hpp"
#include "sabc/powerrc.hpp"

namespace sabc {

namespace {

SolveState infeasible_state(int antenna, int n_count) {
  SolveState s;
  s.antenna = antenna;
  s.alpha.assign(n_count, 0.0);
  s.q.assign(n_count, 0.0);
  s.rbd.assign(n_count, 0.0);
  s.rbar.assign(n_count, 0.0);
  s.r_ad.assign(n_count, 0.0);
  return s;
}

}  // namespace

SolveState inner_bcd(const ChannelRealization& chan, const SystemConfig& config,
                     int antenna, const BcdOptions& options) {
  const int n_count = config.N;
  if (antenna < 0 || antenna >= config.M)
    throw std::out_of_range("inner_bcd: antenna index out of range");
  if (!options.optimize_cap &&
      static_cast<int>(options.fixed_q.size()) != n_count)
    throw std::invalid_argument("inner_bcd: fixed_q must have one entry per tag");

  const Eigen::VectorXcd h_d = chan.h_d.col(antenna);
  const double p_max = config.p_max;
  const double sigma2 = config.sigma_w2;

  std::vector<double> hf_gain(n_count), hb_norm2(n_count), phi_inv_c(n_count);
  for (int n = 0; n < n_count; ++n) {
    hf_gain[n] = chan.hf_gain(antenna, n);
    hb_norm2[n] = chan.h_b.col(n).squaredNorm();
    phi_inv_c[n] = eh_inverse(config.p_circuit[n], config.eh[n]);
  }

  SolveState state = infeasible_state(antenna, n_count);

  // Harvesting bound at full power; nonpositive means the tag cannot cover
  // its circuit power on this antenna no matter the reflection coefficient.
  std::vector<double> alpha_eh_pmax(n_count);
  for (int n = 0; n < n_count; ++n) {
    alpha_eh_pmax[n] = 1.0 - phi_inv_c[n] / (p_max * hf_gain[n]);
    if (alpha_eh_pmax[n] <= 0.0) return state;
  }

  // Feasible-by-construction start: half the harvesting bound, capped by the
  // rate-floor bound at the matching beam so the first iterate already
  // satisfies every constraint; uniform access, full power.
  std::vector<double> alpha(n_count), q(n_count);
  const double gamma_req = std::exp2(config.r_min) - 1.0;
  for (int n = 0; n < n_count; ++n) {
    if (!options.optimize_rc) {
      alpha[n] = options.fixed_alpha;
      continue;
    }
    double a0 = std::min(alpha_eh_pmax[n], 1.0) / 2.0;
    if (gamma_req > 0.0) {
      auto [v0, diag0] = active_beam(h_d, chan.h_b.col(n), hf_gain[n], a0,
                                     p_max, sigma2, config.r_min, config.eps_th);
      const double trd = std::norm(v0.dot(h_d));
      const double trb = std::norm(v0.dot(chan.h_b.col(n)));
      if (trd * p_max <= gamma_req * sigma2) return state;  // floor above p_max
      if (trb > 0.0) {
        const double a_qos = (trd * p_max - gamma_req * sigma2) /
                             (gamma_req * trb * hf_gain[n] * p_max);
        a0 = std::min(a0, a_qos);
      }
    }
    alpha[n] = a0;
  }
  if (options.optimize_cap)
    q.assign(n_count, std::min(1.0 / n_count, 1.0 - kCapEps));
  else
    q = options.fixed_q;
  double p = p_max;

  std::vector<BeamPair> beams(n_count);
  std::vector<BdGains> gains(n_count);
  std::vector<double> rbar(n_count);
  double t = 0.0, t_bar = 0.0, t_hat = 0.0;
  bool converged = false;
  int iter = 0;

  auto refresh_rbar = [&]() {
    for (int n = 0; n < n_count; ++n)
      rbar[n] = rate(alpha[n] * hf_gain[n] * hb_norm2[n] * p / sigma2);
  };
  auto objective = [&]() {
    double value = std::numeric_limits<double>::infinity();
    for (int n = 0; n < n_count; ++n)
      value = std::min(value, success_prob(q, n) * rbar[n]);
    return value;
  };

  while (iter < config.max_iter_a3) {
    ++iter;
    IterTrace tr;

    // Block 1: receive beams. MRC for the backscatter signal; max-SINR for
    // the active signal at the current reflection coefficients.
    for (int n = 0; n < n_count; ++n) {
      beams[n].v_b = mrc(chan.h_b.col(n));
      auto [v_a, diag] =
          active_beam(h_d, chan.h_b.col(n), hf_gain[n], alpha[n], p, sigma2,
                      config.r_min, config.eps_th);
      beams[n].v_a = std::move(v_a);
      gains[n] = BdGains{std::norm(beams[n].v_a.dot(h_d)),
                         std::norm(beams[n].v_a.dot(chan.h_b.col(n))),
                         hf_gain[n], hb_norm2[n]};
    }
    refresh_rbar();
    t = objective();
    tr.t = t;

    // Block 2: transmit power and reflection coefficients.
    if (options.optimize_rc) {
      RcSolution rc = optimal_rc(gains, p_max, config.r_min, sigma2, config.eh,
                                 config.p_circuit);
      if (!rc.feasible) {
        state.trace.push_back(tr);
        state.iterations = iter;
        return state;  // floor above p_max or a silenced tag
      }
      alpha = rc.alpha;
      p = rc.p;
      t_bar = subproblem_value(rc, gains, q, config.r_min, sigma2, config.eh,
                               config.p_circuit)
                  .t_bar;
    } else {
      // Fixed reflection coefficient: verify the rate floor and the
      // harvesting demand at this alpha.
      const double gamma = std::exp2(config.r_min) - 1.0;
      for (int n = 0; n < n_count; ++n) {
        const bool c4_ok = alpha[n] <= alpha_eh_pmax[n];
        const bool c3_ok =
            gains[n].trd * p >= gamma * (alpha[n] * hf_gain[n] * gains[n].trb * p + sigma2);
        if (!c4_ok || !c3_ok) {
          state.trace.push_back(tr);
          state.iterations = iter;
          return state;
        }
      }
      t_bar = objective();
    }
    refresh_rbar();
    tr.t_bar = t_bar;

    // Block 3: access probabilities. Keep the incumbent q if the solver's
    // point is (numerically) no better, so the objective never decreases.
    if (options.optimize_cap) {
      const double incumbent = objective();
      CapSolution cap = solve_cap(rbar, config.phi_th, config.max_iter_a2);
      if (cap.t_hat >= incumbent) {
        q = cap.q;
        t_hat = cap.t_hat;
      } else {
        t_hat = incumbent;
      }
    } else {
      t_hat = objective();
    }
    tr.t_hat = t_hat;
    state.trace.push_back(tr);

    if (std::abs(t - t_bar) <= config.eps_th &&
        std::abs(t - t_hat) <= config.eps_th) {
      converged = true;
      break;
    }
  }

  state.p = p;
  state.alpha = alpha;
  state.q = q;
  state.beams = beams;
  state.iterations = iter;
  state.feasible = true;
  state.converged = converged;
  refresh_rbar();
  state.rbar = rbar;
  state.rbd.resize(n_count);
  state.r_ad.resize(n_count);
  for (int n = 0; n < n_count; ++n) {
    state.rbd[n] = success_prob(q, n) * rbar[n];
    state.r_ad[n] = rate(sinr_ad(beams[n].v_a, h_d, chan.h_b.col(n),
                                 hf_gain[n], alpha[n], p, sigma2));
  }
  state.t = objective();
  return state;
}

SolveState greedy_tas(const ChannelRealization& chan,
                      const SystemConfig& config, const BcdOptions& options) {
  SolveState best = infeasible_state(-1, config.N);
  double best_t = 0.0;
  for (int m = 0; m < config.M; ++m) {
    SolveState s = inner_bcd(chan, config, m, options);
    if (!s.feasible) continue;
    // Strictly-greater keeps the lowest feasible antenna on ties.
    if (!best.feasible || s.t > best_t) {
      best_t = s.t;
      best = std::move(s);
    }
  }
  return best;
}

}  // namespace sabc
