#ifndef SABC_POWERRC_HPP
#define SABC_POWERRC_HPP

#include <optional>
#include <span>
#include <vector>

#include "sabc/energy.hpp"

namespace sabc {

/// Per-tag link quantities entering the power/RC closed forms. With a
/// rank-one active beam V = v v^H the traces reduce to squared projections:
/// trd = |v^H h_d|^2, trb = |v^H h_b|^2.
struct BdGains {
  double trd = 0.0;       // active-link gain through the active beam
  double trb = 0.0;       // backscatter leakage into the active beam
  double hf_gain = 0.0;   // |h_f|^2 of the feeding link
  double hb_norm2 = 0.0;  // ||h_b||^2, the MRC combining gain
};

/// Closed-form reflection coefficients and transmit power. alpha_ad is the
/// rate-floor bound, alpha_eh the harvesting bound; the chosen alpha is the
/// smaller one clamped to [0, 1]. alpha == 0 means the tag cannot transmit
/// in this block and marks the solution infeasible.
struct RcSolution {
  std::vector<double> alpha;
  std::vector<double> alpha_ad;
  std::vector<double> alpha_eh;
  std::vector<double> p_min;
  std::vector<bool> bd_feasible;
  double p = 0.0;
  double floor = 0.0;  // max_n p_min[n]
  bool feasible = false;
};

/// Transmit-power floor per tag:
///   p_min = max( phi^{-1}(p_circuit) / |h_f|^2,
///                (2^r_min - 1) sigma_w2 / trd ).
/// Returns the per-tag floors and their maximum.
std::pair<std::vector<double>, double> min_power(
    std::span<const BdGains> gains, std::span<const EHParams> eh,
    std::span<const double> p_circuit, double r_min, double sigma_w2);

/// p_max when it clears the floor, otherwise nullopt (infeasible).
std::optional<double> optimal_power(double p_max, double floor);

/// Full closed-form solve; p is set to p_max when feasible.
RcSolution optimal_rc(std::span<const BdGains> gains, double p_max,
                      double r_min, double sigma_w2,
                      std::span<const EHParams> eh,
                      std::span<const double> p_circuit);

/// Subproblem objective at the closed-form optimum, evaluated branch by
/// branch (rate-floor-limited vs harvesting-limited tag), combined with the
/// access probabilities held fixed during this block.
struct SubproblemValue {
  double t_bar = 0.0;
  std::vector<double> t_bar_n;
};

SubproblemValue subproblem_value(const RcSolution& rc,
                                 std::span<const BdGains> gains,
                                 std::span<const double> q, double r_min,
                                 double sigma_w2,
                                 std::span<const EHParams> eh,
                                 std::span<const double> p_circuit);

}  // namespace sabc

#endif
