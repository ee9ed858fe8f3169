#include "sabc/cap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "sabc/linkmodel.hpp"

namespace sabc {

namespace {

double min_throughput(std::span<const double> q, std::span<const double> rbar) {
  double t = std::numeric_limits<double>::infinity();
  for (int n = 0; n < static_cast<int>(q.size()); ++n)
    t = std::min(t, success_prob(q, n) * rbar[n]);
  return t;
}

// Least fixed point of x_n = t / (rbar_n * prod_j 1/(1+x_j)). A finite fixed
// point within the clipped box exists iff target t is achievable with every
// throughput constraint tight. Returns q on success.
bool target_feasible(double t, std::span<const double> rbar,
                     std::vector<double>& q_out) {
  const int n_count = static_cast<int>(rbar.size());
  const double x_cap = (1.0 - kCapEps) / kCapEps;
  std::vector<double> x(n_count), x_next(n_count);
  for (int n = 0; n < n_count; ++n) x[n] = t / rbar[n];

  for (int iter = 0; iter < 4000; ++iter) {
    double inv_g = 1.0;  // prod (1 + x_j); overflow ends in the cap check
    for (int n = 0; n < n_count; ++n) inv_g *= 1.0 + x[n];
    double delta = 0.0;
    for (int n = 0; n < n_count; ++n) {
      x_next[n] = t / rbar[n] * inv_g;
      if (!(x_next[n] <= x_cap)) return false;
      delta = std::max(delta, std::abs(x_next[n] - x[n]) / (1.0 + x[n]));
    }
    x.swap(x_next);
    if (delta < 1e-13) {
      q_out.resize(n_count);
      for (int n = 0; n < n_count; ++n)
        q_out[n] = std::clamp(x[n] / (1.0 + x[n]), kCapEps, 1.0 - kCapEps);
      return true;
    }
  }
  // Did not settle: treat as infeasible so the returned target stays
  // achievable by an actually converged iterate.
  return false;
}

// Newton on the square all-tight system
//   ln q_n + sum_{j != n} ln(1 - q_j) + ln rbar_n = tau   for all n,
//   sum_n q_n = 1,
// which is the interior stationarity condition of the max-min problem.
bool newton_polish(std::span<const double> rbar, std::vector<double>& q,
                   int max_steps) {
  const int n_count = static_cast<int>(rbar.size());
  Eigen::VectorXd z(n_count + 1);
  for (int n = 0; n < n_count; ++n) z(n) = q[n];
  {
    double f0 = std::log(q[0]) + std::log(rbar[0]);
    for (int j = 1; j < n_count; ++j) f0 += std::log1p(-q[j]);
    z(n_count) = f0;
  }

  Eigen::VectorXd residual(n_count + 1);
  Eigen::MatrixXd jac(n_count + 1, n_count + 1);
  for (int step = 0; step < max_steps; ++step) {
    double log_sum = 0.0;
    for (int n = 0; n < n_count; ++n) log_sum += std::log1p(-z(n));
    for (int n = 0; n < n_count; ++n)
      residual(n) = std::log(z(n)) + log_sum - std::log1p(-z(n)) +
                    std::log(rbar[n]) - z(n_count);
    residual(n_count) = z.head(n_count).sum() - 1.0;
    if (residual.lpNorm<Eigen::Infinity>() < 1e-13) {
      for (int n = 0; n < n_count; ++n) q[n] = z(n);
      return true;
    }

    jac.setZero();
    for (int n = 0; n < n_count; ++n) {
      for (int k = 0; k < n_count; ++k)
        jac(n, k) = (n == k) ? 1.0 / z(n) : -1.0 / (1.0 - z(k));
      jac(n, n_count) = -1.0;
      jac(n_count, n) = 1.0;
    }
    Eigen::VectorXd delta = jac.partialPivLu().solve(residual);
    // Backtrack to stay inside the open box.
    double scale = 1.0;
    for (int n = 0; n < n_count; ++n) {
      const double next = z(n) - delta(n);
      if (next <= kCapEps || next >= 1.0 - kCapEps) scale = std::min(scale, 0.5);
    }
    z.head(n_count) -= scale * delta.head(n_count);
    z(n_count) -= scale * delta(n_count);
    for (int n = 0; n < n_count; ++n)
      z(n) = std::clamp(z(n), kCapEps, 1.0 - kCapEps);
  }
  return false;
}

void fill_active(CapSolution& sol, std::span<const double> rbar) {
  const int n_count = static_cast<int>(rbar.size());
  sol.active.assign(n_count, false);
  for (int n = 0; n < n_count; ++n) {
    const double tn = success_prob(sol.q, n) * rbar[n];
    sol.active[n] = tn <= sol.t_hat * (1.0 + 1e-9) + 1e-15;
  }
}

}  // namespace

CapSolution solve_cap(std::span<const double> rbar, double tol, int max_iter) {
  const int n_count = static_cast<int>(rbar.size());
  if (n_count < 1) throw std::invalid_argument("solve_cap: empty rate vector");
  for (double r : rbar)
    if (!(r > 0.0))
      throw std::invalid_argument("solve_cap: rates must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_cap: tol must be positive");

  CapSolution sol;
  if (n_count == 1) {
    // Sole tag: supremum at the open boundary q -> 1.
    sol.q = {1.0 - kCapEps};
    sol.t_hat = sol.q[0] * rbar[0];
    sol.active = {true};
    sol.iterations = 0;
    sol.converged = true;
    return sol;
  }

  double lo = 0.0;
  double hi = *std::min_element(rbar.begin(), rbar.end());
  std::vector<double> q_best(n_count, 1.0 / n_count), q_probe;
  int iter = 0;
  for (; iter < std::max(max_iter, 48); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (target_feasible(mid, rbar, q_probe)) {
      lo = mid;
      q_best = q_probe;
    } else {
      hi = mid;
    }
    // The Newton polish finishes the endgame; bisection only has to land
    // inside its basin.
    if (hi - lo <= 1e-8 * hi) break;
  }

  if (newton_polish(rbar, q_best, 40)) sol.converged = true;
  sol.q = q_best;
  sol.t_hat = min_throughput(sol.q, rbar);
  // Keep the better of bisection and polish; the polish normally wins.
  if (sol.t_hat < lo) {
    target_feasible(lo, rbar, q_best);
    const double t_bisect = min_throughput(q_best, rbar);
    if (t_bisect > sol.t_hat) {
      sol.q = q_best;
      sol.t_hat = t_bisect;
    }
  }
  sol.iterations = iter;
  sol.converged = sol.converged || (hi - lo <= tol * std::max(hi, 1e-300));
  fill_active(sol, rbar);
  return sol;
}

CapSolution cap_oracle_grid(std::span<const double> rbar, double step) {
  const int n_count = static_cast<int>(rbar.size());
  if (n_count > 3)
    throw std::invalid_argument("cap_oracle_grid: N must be at most 3");
  if (n_count < 1) throw std::invalid_argument("cap_oracle_grid: empty rates");
  if (!(step > 0.0) || step >= 0.5)
    throw std::invalid_argument("cap_oracle_grid: step must lie in (0, 0.5)");

  // Grid over [step, 1-step] per tag. With x = q/(1-q) tabulated per level,
  // each point costs a handful of multiplies: t_n = x_n * G * rbar_n,
  // G = prod (1 - q_j).
  const int points = static_cast<int>(std::floor((1.0 - 2.0 * step) / step)) + 1;
  std::vector<double> qs(points), xs(points);
  for (int i = 0; i < points; ++i) {
    qs[i] = step * (i + 1);
    xs[i] = qs[i] / (1.0 - qs[i]);
  }

  double best_t = -1.0;
  std::vector<double> best_q(n_count, 0.5);
  auto consider = [&](double t, int i, int j, int k) {
    if (t <= best_t) return;
    best_t = t;
    best_q[0] = qs[i];
    if (n_count > 1) best_q[1] = qs[j];
    if (n_count > 2) best_q[2] = qs[k];
  };

  if (n_count == 1) {
    for (int i = 0; i < points; ++i) consider(qs[i] * rbar[0], i, 0, 0);
  } else if (n_count == 2) {
    for (int i = 0; i < points; ++i) {
      const double g1 = 1.0 - qs[i];
      for (int j = 0; j < points; ++j) {
        const double g = g1 * (1.0 - qs[j]);
        consider(std::min(xs[i] * rbar[0], xs[j] * rbar[1]) * g, i, j, 0);
      }
    }
  } else {
    // Per-slice incumbents so the outer loop can run in parallel; the merge
    // below is deterministic regardless of the thread count.
    std::vector<double> slice_best(points, -1.0);
    std::vector<int> slice_j(points, 0), slice_k(points, 0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < points; ++i) {
      const double g1 = 1.0 - qs[i];
      const double r0 = xs[i] * rbar[0];
      double best = -1.0;
      int bj = 0, bk = 0;
      for (int j = 0; j < points; ++j) {
        const double g2 = g1 * (1.0 - qs[j]);
        const double m12 = std::min(r0, xs[j] * rbar[1]);
        for (int k = 0; k < points; ++k) {
          const double t = std::min(m12, xs[k] * rbar[2]) * g2 * (1.0 - qs[k]);
          if (t > best) {
            best = t;
            bj = j;
            bk = k;
          }
        }
      }
      slice_best[i] = best;
      slice_j[i] = bj;
      slice_k[i] = bk;
    }
    for (int i = 0; i < points; ++i)
      consider(slice_best[i], i, slice_j[i], slice_k[i]);
  }

  CapSolution sol;
  sol.q = best_q;
  sol.t_hat = best_t;
  sol.converged = true;
  fill_active(sol, rbar);
  return sol;
}

}  // namespace sabc
