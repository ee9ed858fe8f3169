#ifndef SABC_CAP_HPP
#define SABC_CAP_HPP

#include <span>
#include <vector>

namespace sabc {

struct CapSolution {
  std::vector<double> q;      // access probabilities in [eps, 1 - eps]
  double t_hat = 0.0;         // achieved min average throughput
  std::vector<bool> active;   // throughput constraint tight for tag n
  int iterations = 0;
  bool converged = false;
};

/// Access probabilities are clipped to [kCapEps, 1 - kCapEps]; the open
/// interval constraint makes boundary optima (single tag) suprema.
inline constexpr double kCapEps = 1e-6;

/// Maximize min_n q_n prod_{j != n}(1 - q_j) rbar_n over q.
///
/// In log variables every per-tag throughput constraint is concave, so the
/// problem is a concave max-min. The solver bisects on the target value;
/// feasibility of a target is decided by the least fixed point of the
/// monotone map x_n = t / (rbar_n prod_j (1 + x_j)^{-1}) with
/// x_n = q_n / (1 - q_n). A Newton polish on the all-tight stationarity
/// system (which forces sum q = 1) finishes to machine accuracy.
///
/// Throws for non-positive rates. Non-convergence within max_iter returns
/// the best iterate with converged == false.
CapSolution solve_cap(std::span<const double> rbar, double tol, int max_iter);

/// Exhaustive grid maximization over [step, 1-step]^N for N <= 3 (cost
/// guard).
CapSolution cap_oracle_grid(std::span<const double> rbar, double step);

}  // namespace sabc

#endif
