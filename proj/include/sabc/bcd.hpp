#ifndef SABC_BCD_HPP
#define SABC_BCD_HPP

#include <vector>

#include "sabc/channel.hpp"
#include "sabc/config.hpp"
#include "sabc/linkmodel.hpp"

namespace sabc {

/// Objective after each block of one inner iteration: beams (t), power/RC
/// closed form (t_bar), access probabilities (t_hat).
struct IterTrace {
  double t = 0.0;
  double t_bar = 0.0;
  double t_hat = 0.0;
};

struct SolveState {
  int antenna = -1;  // selected transmit antenna, 0-based; -1 when infeasible
  double p = 0.0;
  std::vector<double> alpha;
  std::vector<double> q;
  std::vector<BeamPair> beams;
  double t = 0.0;  // min over tags of the average throughput
  std::vector<IterTrace> trace;
  int iterations = 0;
  bool feasible = false;
  bool converged = false;

  // Derived per-tag quantities at the returned point.
  std::vector<double> rbd;   // average throughput (success prob x rate)
  std::vector<double> rbar;  // rate when the tag is the sole transmitter
  std::vector<double> r_ad;  // active-device rate while tag n backscatters
};

/// Variants of the inner loop shared by the proposed algorithm and the
/// restriction baselines.
struct BcdOptions {
  bool optimize_cap = true;          // false: hold q at fixed_q
  std::vector<double> fixed_q;
  bool optimize_rc = true;           // false: hold every alpha at fixed_alpha
  double fixed_alpha = 0.0;
};

/// Block-coordinate descent for one transmit antenna: receive beams, then
/// the power/RC closed forms, then the access probabilities, until the block
/// objectives agree within eps_th or max_iter_a3 iterations. Infeasibility
/// (power floor above p_max, or a tag forced silent) is reported through the
/// flags, not an exception, so antenna selection can skip and continue.
SolveState inner_bcd(const ChannelRealization& chan, const SystemConfig& config,
                     int antenna, const BcdOptions& options = {});

/// Exhaustive greedy pass over all antennas; keeps the largest converged
/// objective, ties broken by the lowest antenna index.
SolveState greedy_tas(const ChannelRealization& chan,
                      const SystemConfig& config,
                      const BcdOptions& options = {});

}  // namespace sabc

#endif
