#ifndef SABC_REPORT_HPP
#define SABC_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "sabc/bcd.hpp"

namespace sabc {

struct TrialReport {
  int trial = 0;
  std::string algorithm;
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> rbd;            // per-tag average throughput
  std::vector<double> q;              // access probabilities (slot shares for tdma)
  std::vector<double> alpha;
  int antenna = 0;                    // 1-based; 0 when none was feasible
  double jain = 0.0;
  int iterations = 0;
  std::vector<IterTrace> trace;
};

/// Per-algorithm summary over the trials of one configuration point.
struct AggregateRow {
  std::string algorithm;
  int trials = 0;
  int feasible_trials = 0;
  double feasibility_rate = 0.0;
  // Statistics over feasible trials; half-width is the 95% normal-
  // approximation confidence interval of the mean (0 when fewer than two
  // feasible trials).
  double mean_objective = 0.0;
  double ci95_objective = 0.0;
  double median_objective = 0.0;
  double mean_jain = 0.0;
  double mean_iterations = 0.0;
};

/// One header row, then one row per report, columns exactly:
/// trial, algorithm, feasible, objective, jain_fi, antenna, iterations,
/// q_1..q_N, alpha_1..alpha_N, rbd_1..rbd_N. Numbers carry 17 significant
/// digits. Throws on an empty report set or inconsistent tag counts.
void emit_csv(const std::vector<TrialReport>& reports, std::ostream& out);

/// Per-iteration objective trace: trial, algorithm, antenna, iteration,
/// t, t_bar, t_hat.
void emit_trace_csv(const std::vector<TrialReport>& reports, std::ostream& out);

std::vector<AggregateRow> aggregate_reports(
    const std::vector<TrialReport>& reports,
    const std::vector<std::string>& algorithm_order);

}  // namespace sabc

#endif
