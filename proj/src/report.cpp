#include "sabc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sabc {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void emit_csv(const std::vector<TrialReport>& reports, std::ostream& out) {
  if (reports.empty()) throw std::invalid_argument("emit_csv: empty report set");
  const int n_count = static_cast<int>(reports.front().rbd.size());

  out << "trial,algorithm,feasible,objective,jain_fi,antenna,iterations";
  for (int n = 1; n <= n_count; ++n) out << ",q_" << n;
  for (int n = 1; n <= n_count; ++n) out << ",alpha_" << n;
  for (int n = 1; n <= n_count; ++n) out << ",rbd_" << n;
  out << '\n';

  for (const TrialReport& r : reports) {
    if (static_cast<int>(r.rbd.size()) != n_count ||
        static_cast<int>(r.q.size()) != n_count ||
        static_cast<int>(r.alpha.size()) != n_count)
      throw std::invalid_argument("emit_csv: inconsistent tag counts");
    out << r.trial << ',' << r.algorithm << ',' << (r.feasible ? 1 : 0) << ','
        << fmt(r.objective) << ',' << fmt(r.jain) << ',' << r.antenna << ','
        << r.iterations;
    for (double v : r.q) out << ',' << fmt(v);
    for (double v : r.alpha) out << ',' << fmt(v);
    for (double v : r.rbd) out << ',' << fmt(v);
    out << '\n';
  }
}

void emit_trace_csv(const std::vector<TrialReport>& reports,
                    std::ostream& out) {
  out << "trial,algorithm,antenna,iteration,t,t_bar,t_hat\n";
  for (const TrialReport& r : reports)
    for (int i = 0; i < static_cast<int>(r.trace.size()); ++i)
      out << r.trial << ',' << r.algorithm << ',' << r.antenna << ',' << i + 1
          << ',' << fmt(r.trace[i].t) << ',' << fmt(r.trace[i].t_bar) << ','
          << fmt(r.trace[i].t_hat) << '\n';
}

std::vector<AggregateRow> aggregate_reports(
    const std::vector<TrialReport>& reports,
    const std::vector<std::string>& algorithm_order) {
  std::vector<AggregateRow> rows;
  for (const std::string& alg : algorithm_order) {
    AggregateRow row;
    row.algorithm = alg;
    std::vector<double> objectives;
    double jain_sum = 0.0, iter_sum = 0.0;
    for (const TrialReport& r : reports) {
      if (r.algorithm != alg) continue;
      ++row.trials;
      if (!r.feasible) continue;
      ++row.feasible_trials;
      objectives.push_back(r.objective);
      jain_sum += r.jain;
      iter_sum += r.iterations;
    }
    if (row.trials == 0) continue;
    row.feasibility_rate =
        static_cast<double>(row.feasible_trials) / row.trials;
    if (!objectives.empty()) {
      const double n = static_cast<double>(objectives.size());
      double sum = 0.0;
      for (double v : objectives) sum += v;
      row.mean_objective = sum / n;
      if (objectives.size() >= 2) {
        double ss = 0.0;
        for (double v : objectives) {
          const double d = v - row.mean_objective;
          ss += d * d;
        }
        const double stdev = std::sqrt(ss / (n - 1.0));
        row.ci95_objective = 1.96 * stdev / std::sqrt(n);
      }
      std::sort(objectives.begin(), objectives.end());
      const std::size_t mid = objectives.size() / 2;
      row.median_objective = objectives.size() % 2 == 1
                                 ? objectives[mid]
                                 : 0.5 * (objectives[mid - 1] + objectives[mid]);
      row.mean_jain = jain_sum / n;
      row.mean_iterations = iter_sum / n;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sabc
