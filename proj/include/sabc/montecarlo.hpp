#ifndef SABC_MONTECARLO_HPP
#define SABC_MONTECARLO_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sabc/channel.hpp"
#include "sabc/config.hpp"
#include "sabc/report.hpp"
#include "sabc/rng.hpp"

namespace sabc {

enum class Algorithm { proposed, ecap, frc, rtas, tdma, tc };

std::string algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(const std::string& name);
const std::vector<Algorithm>& all_algorithms();

struct RunResult {
  std::vector<TrialReport> reports;     // trial-major, algorithm order within
  std::vector<AggregateRow> aggregate;  // one row per algorithm
};

/// Monte-Carlo driver. Every trial draws its own substreams from
/// (config.seed, trial), realizes one topology and channel block, and runs
/// every requested algorithm on that same realization (paired design).
/// Infeasible trials are recorded, never resampled.
///
/// The trial loop is OpenMP-parallel; results land in per-trial slots, so
/// the output is identical to run_trials_serial for any thread count.
RunResult run_trials(const SystemConfig& config,
                     const std::vector<Algorithm>& algorithms);

/// Plain-loop reference implementation of the same contract.
RunResult run_trials_serial(const SystemConfig& config,
                            const std::vector<Algorithm>& algorithms);

/// Empirical slotted-ALOHA run: per slot each tag transmits independently
/// with probability q_n; a tag is credited rbar_n only when it transmitted
/// alone. Returns per-tag average credit per slot.
std::vector<double> simulate_access(std::span<const double> q,
                                    std::span<const double> rbar, long slots,
                                    SplitRng& rng);

/// Re-derives the per-trial channel realizations (bit-identical to the ones
/// the run used) and writes them as CSV: trial, link, m, n, k, re, im with
/// 1-based indices and 0 for a non-applicable index.
void dump_channels_csv(const SystemConfig& config, std::ostream& out);

/// The substreams a trial draws from; exposed so tests and the channel dump
/// can reproduce a run's randomness exactly.
struct TrialStreams {
  SplitRng topology;
  SplitRng channel;
  SplitRng rtas;
  SplitRng access;
};
TrialStreams trial_streams(const SystemConfig& config, int trial);

}  // namespace sabc

#endif
