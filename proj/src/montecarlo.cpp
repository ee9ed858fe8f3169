#include "sabc/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sabc/benchmarks.hpp"
#include "sabc/linkmodel.hpp"

namespace sabc {

namespace {

// Substream tags; trials are offset so the fixed-topology stream never
// collides with a per-trial one.
constexpr std::uint64_t kFixedTopologyStream = 1;
constexpr std::uint64_t kTopologyBase = 0x10000;
constexpr std::uint64_t kChannelBase = 0x20000;
constexpr std::uint64_t kRtasBase = 0x30000;
constexpr std::uint64_t kAccessBase = 0x40000;

TrialReport to_report(const SolveState& s, Algorithm alg, int trial) {
  TrialReport r;
  r.trial = trial;
  r.algorithm = algorithm_name(alg);
  r.feasible = s.feasible;
  r.objective = s.t;
  r.rbd = s.rbd;
  r.q = s.q;
  r.alpha = s.alpha;
  r.antenna = s.feasible ? s.antenna + 1 : 0;
  r.iterations = s.iterations;
  r.trace = s.trace;
  if (s.feasible) {
    double sum_sq = 0.0;
    for (double v : s.rbd) sum_sq += v * v;
    r.jain = sum_sq > 0.0 ? jain_fi(s.rbd) : 0.0;
  }
  return r;
}

std::vector<TrialReport> run_one_trial(const SystemConfig& config, int trial,
                                       const std::vector<Algorithm>& algorithms) {
  TrialStreams streams = trial_streams(config, trial);
  const Topology topo = draw_topology(config, streams.topology);
  const ChannelRealization chan =
      realize_channels(topo, config, streams.channel);

  std::vector<TrialReport> reports;
  reports.reserve(algorithms.size());
  for (Algorithm alg : algorithms) {
    SolveState state;
    switch (alg) {
      case Algorithm::proposed:
        state = solve_proposed(chan, config);
        break;
      case Algorithm::ecap:
        state = solve_ecap(chan, config);
        break;
      case Algorithm::frc:
        state = solve_frc(chan, config);
        break;
      case Algorithm::rtas:
        state = solve_rtas(chan, config, streams.rtas);
        break;
      case Algorithm::tdma:
        state = solve_tdma(chan, config).first;
        break;
      case Algorithm::tc:
        state = solve_tc(chan, config);
        break;
    }
    reports.push_back(to_report(state, alg, trial));
  }
  return reports;
}

RunResult assemble(const SystemConfig& config,
                   const std::vector<Algorithm>& algorithms,
                   std::vector<std::vector<TrialReport>> per_trial) {
  RunResult result;
  result.reports.reserve(config.trials * algorithms.size());
  for (auto& trial_reports : per_trial)
    for (auto& r : trial_reports) result.reports.push_back(std::move(r));
  std::vector<std::string> names;
  for (Algorithm a : algorithms) names.push_back(algorithm_name(a));
  result.aggregate = aggregate_reports(result.reports, names);
  return result;
}

}  // namespace

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::proposed: return "proposed";
    case Algorithm::ecap: return "ecap";
    case Algorithm::frc: return "frc";
    case Algorithm::rtas: return "rtas";
    case Algorithm::tdma: return "tdma";
    case Algorithm::tc: return "tc";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  for (Algorithm a : all_algorithms())
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> algs = {
      Algorithm::proposed, Algorithm::ecap, Algorithm::frc,
      Algorithm::rtas,     Algorithm::tdma, Algorithm::tc};
  return algs;
}

TrialStreams trial_streams(const SystemConfig& config, int trial) {
  const SplitRng base(config.seed);
  const std::uint64_t t = static_cast<std::uint64_t>(trial);
  return TrialStreams{
      config.redraw_bd_positions ? base.substream(kTopologyBase + t)
                                 : base.substream(kFixedTopologyStream),
      base.substream(kChannelBase + t),
      base.substream(kRtasBase + t),
      base.substream(kAccessBase + t),
  };
}

RunResult run_trials(const SystemConfig& config,
                     const std::vector<Algorithm>& algorithms) {
  if (algorithms.empty())
    throw std::invalid_argument("run_trials: no algorithms requested");
  std::vector<std::vector<TrialReport>> per_trial(config.trials);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < config.trials; ++t) {
    try {
      per_trial[t] = run_one_trial(config, t, algorithms);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return assemble(config, algorithms, std::move(per_trial));
}

RunResult run_trials_serial(const SystemConfig& config,
                            const std::vector<Algorithm>& algorithms) {
  if (algorithms.empty())
    throw std::invalid_argument("run_trials_serial: no algorithms requested");
  std::vector<std::vector<TrialReport>> per_trial(config.trials);
  for (int t = 0; t < config.trials; ++t)
    per_trial[t] = run_one_trial(config, t, algorithms);
  return assemble(config, algorithms, std::move(per_trial));
}

std::vector<double> simulate_access(std::span<const double> q,
                                    std::span<const double> rbar, long slots,
                                    SplitRng& rng) {
  if (slots < 1)
    throw std::invalid_argument("simulate_access: need at least one slot");
  if (q.size() != rbar.size())
    throw std::invalid_argument("simulate_access: q/rbar size mismatch");
  const int n_count = static_cast<int>(q.size());
  std::vector<double> credit(n_count, 0.0);
  std::vector<bool> sent(n_count);
  for (long s = 0; s < slots; ++s) {
    int transmitters = 0, who = -1;
    for (int n = 0; n < n_count; ++n) {
      sent[n] = rng.uniform() < q[n];
      if (sent[n]) {
        ++transmitters;
        who = n;
      }
    }
    if (transmitters == 1) credit[who] += rbar[who];
  }
  for (double& c : credit) c /= static_cast<double>(slots);
  return credit;
}

void dump_channels_csv(const SystemConfig& config, std::ostream& out) {
  auto write = [&out](int trial, const char* link, int m, int n, int k,
                      std::complex<double> v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d,%s,%d,%d,%d,%.17g,%.17g\n", trial, link,
                  m, n, k, v.real(), v.imag());
    out << buf;
  };
  out << "trial,link,m,n,k,re,im\n";
  for (int t = 0; t < config.trials; ++t) {
    TrialStreams streams = trial_streams(config, t);
    const Topology topo = draw_topology(config, streams.topology);
    const ChannelRealization chan =
        realize_channels(topo, config, streams.channel);
    for (int m = 0; m < config.M; ++m)
      for (int n = 0; n < config.N; ++n)
        write(t, "hf", m + 1, n + 1, 0, chan.h_f(m, n));
    for (int m = 0; m < config.M; ++m)
      for (int k = 0; k < config.K; ++k)
        write(t, "hd", m + 1, 0, k + 1, chan.h_d(k, m));
    for (int n = 0; n < config.N; ++n)
      for (int k = 0; k < config.K; ++k)
        write(t, "hb", 0, n + 1, k + 1, chan.h_b(k, n));
  }
}

}  // namespace sabc
