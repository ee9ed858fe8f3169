// Command-line driver: solves the max-min fair access problem over Monte
// Carlo channel draws and writes per-trial and aggregate CSV files.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "sabc/config.hpp"
#include "sabc/montecarlo.hpp"

namespace {

struct SweepAxis {
  std::string key;
  std::vector<double> values;
};

SweepAxis parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 >= text.size())
    throw std::invalid_argument("sweep must look like key=v1,v2,...: " + text);
  SweepAxis axis;
  axis.key = text.substr(0, eq);
  std::stringstream ss(text.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ','))
    axis.values.push_back(std::stod(item));
  if (axis.values.empty())
    throw std::invalid_argument("sweep has no values: " + text);
  return axis;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-min fair slotted-ALOHA backscatter simulator"};

  std::string config_path, algorithm = "proposed", out_path, dump_path;
  int trials_override = -1;
  std::uint64_t seed_override = 0;
  bool seed_given = false, trace = false, serial = false;
  int threads = 0;
  std::vector<std::string> sweep_args;

  app.add_option("--config", config_path, "JSON scenario file");
  app.add_option("--algorithm", algorithm,
                 "proposed|ecap|frc|rtas|tdma|tc|all");
  app.add_option("--trials", trials_override, "number of Monte Carlo trials");
  app.add_option("--seed", seed_override, "root RNG seed")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--sweep", sweep_args,
                 "key=v1,v2,... (repeatable; cross-product of axes)");
  app.add_option("--out", out_path, "per-trial CSV path (stdout if omitted)");
  app.add_flag("--trace", trace,
               "also write per-iteration objectives to <out>.trace.csv");
  app.add_option("--dump-channels", dump_path,
                 "write every trial's channel realization as CSV");
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  app.add_flag("--serial", serial, "use the serial reference trial loop");

  CLI11_PARSE(app, argc, argv);

  try {
    nlohmann::json base = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config " + config_path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      base = nlohmann::json::parse(buffer.str());
    }
    if (trials_override > 0) base["trials"] = trials_override;
    if (seed_given) base["seed"] = seed_override;

    std::vector<sabc::Algorithm> algorithms;
    if (algorithm == "all") {
      algorithms = sabc::all_algorithms();
    } else if (auto a = sabc::algorithm_from_name(algorithm)) {
      algorithms = {*a};
    } else {
      throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    }

    std::vector<SweepAxis> axes;
    for (const std::string& s : sweep_args) axes.push_back(parse_sweep(s));
    if (trace && out_path.empty())
      throw std::invalid_argument("--trace requires --out");
    if (!dump_path.empty() && !axes.empty())
      throw std::invalid_argument("--dump-channels does not combine with --sweep");

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    // Cross-product of the sweep axes; a single empty point when none given.
    std::vector<std::vector<double>> points;
    std::vector<double> current(axes.size());
    std::function<void(std::size_t)> expand = [&](std::size_t d) {
      if (d == axes.size()) {
        points.push_back(current);
        return;
      }
      for (double v : axes[d].values) {
        current[d] = v;
        expand(d + 1);
      }
    };
    expand(0);

    std::vector<std::string> algo_names;
    for (auto a : algorithms) algo_names.push_back(sabc::algorithm_name(a));

    std::vector<sabc::TrialReport> all_reports;
    std::ostringstream agg_csv;
    {
      for (const SweepAxis& ax : axes) agg_csv << ax.key << ',';
      agg_csv << "algorithm,trials,feasible_trials,feasibility_rate,"
                 "mean_objective,ci95_objective,median_objective,"
                 "mean_jain_fi,mean_iterations\n";
    }

    long feasible_total = 0;
    for (const std::vector<double>& point : points) {
      nlohmann::json doc = base;
      for (std::size_t d = 0; d < axes.size(); ++d)
        sabc::apply_override(doc, axes[d].key, point[d]);
      const sabc::SystemConfig config = sabc::parse_config(doc);

      sabc::RunResult result = serial
                                   ? sabc::run_trials_serial(config, algorithms)
                                   : sabc::run_trials(config, algorithms);
      for (const auto& r : result.reports)
        if (r.feasible) ++feasible_total;
      for (const sabc::AggregateRow& row : result.aggregate) {
        for (double v : point) agg_csv << fmt(v) << ',';
        agg_csv << row.algorithm << ',' << row.trials << ','
                << row.feasible_trials << ',' << fmt(row.feasibility_rate)
                << ',' << fmt(row.mean_objective) << ','
                << fmt(row.ci95_objective) << ',' << fmt(row.median_objective)
                << ',' << fmt(row.mean_jain) << ','
                << fmt(row.mean_iterations) << '\n';
      }
      all_reports.insert(all_reports.end(),
                         std::make_move_iterator(result.reports.begin()),
                         std::make_move_iterator(result.reports.end()));

      if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump)
          throw std::runtime_error("cannot write channel dump " + dump_path);
        sabc::dump_channels_csv(config, dump);
      }
    }

    if (out_path.empty()) {
      sabc::emit_csv(all_reports, std::cout);
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot write " + out_path);
      sabc::emit_csv(all_reports, out);
      std::ofstream agg(out_path + ".agg.csv");
      if (!agg) throw std::runtime_error("cannot write " + out_path + ".agg.csv");
      agg << agg_csv.str();
      if (trace) {
        std::ofstream tr(out_path + ".trace.csv");
        if (!tr)
          throw std::runtime_error("cannot write " + out_path + ".trace.csv");
        sabc::emit_trace_csv(all_reports, tr);
      }
      std::cout << agg_csv.str();
    }

    if (feasible_total == 0) {
      std::cerr << "every trial was infeasible\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
