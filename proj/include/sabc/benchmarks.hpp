#ifndef SABC_BENCHMARKS_HPP
#define SABC_BENCHMARKS_HPP

#include <span>
#include <utility>
#include <vector>

#include "sabc/bcd.hpp"
#include "sabc/channel.hpp"
#include "sabc/config.hpp"
#include "sabc/rng.hpp"

namespace sabc {

/// Proposed solver: greedy antenna selection around the full inner BCD.
SolveState solve_proposed(const ChannelRealization& chan,
                          const SystemConfig& config);

/// Equal access probability baseline: q_n = 1/N, everything else as in the
/// proposed solver.
SolveState solve_ecap(const ChannelRealization& chan,
                      const SystemConfig& config);

/// Fixed reflection coefficient baseline: alpha_n = config.frc_alpha.
/// Violating the rate floor or the harvesting demand at that alpha makes
/// the trial infeasible for this baseline.
SolveState solve_frc(const ChannelRealization& chan,
                     const SystemConfig& config);

/// Random transmit antenna selection: a uniformly random feasible antenna,
/// then the usual inner BCD.
SolveState solve_rtas(const ChannelRealization& chan,
                      const SystemConfig& config, SplitRng& rng);

/// Scheduled time-division baseline: slot shares replace access
/// probabilities. tau sums to one; t = min_n tau_n r_n.
struct TdmaSolution {
  std::vector<double> tau;
  double t = 0.0;
  bool feasible = false;
};

/// The slot-share program on its own: maximize min_n tau_n r_n subject to
/// sum tau = 1 and the time-weighted active-device rate sum tau_n rad_n
/// >= r_min. Solved by bisection on the target; a target t is feasible when
/// the floor shares t / r_n fit into the frame and handing the remaining
/// time to the best active-device rate still meets the floor (exact for
/// this two-constraint program).
TdmaSolution solve_tdma_lp(std::span<const double> r,
                           std::span<const double> rad, double r_min);

std::pair<SolveState, TdmaSolution> solve_tdma(const ChannelRealization& chan,
                                               const SystemConfig& config);

/// Transmission-collision baseline: every tag backscatters at once, MMSE
/// receive beams, reflection coefficients tuned by cyclic per-tag updates.
/// The objective is the worst per-tag rate under mutual interference (no
/// access probabilities involved).
SolveState solve_tc(const ChannelRealization& chan, const SystemConfig& config);

}  // namespace sabc

#endif
