// Times the OpenMP trial loop against the serial reference on the default
// scenario and checks that both produce identical aggregates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sabc/config.hpp"
#include "sabc/montecarlo.hpp"

int main(int argc, char** argv) {
  sabc::SystemConfig config = sabc::parse_config(std::string("{}"));
  config.trials = argc > 1 ? std::atoi(argv[1]) : 200;
  const std::vector<sabc::Algorithm> algorithms = {sabc::Algorithm::proposed,
                                                   sabc::Algorithm::ecap};

  using clock = std::chrono::steady_clock;

  const auto t0 = clock::now();
  const sabc::RunResult serial = sabc::run_trials_serial(config, algorithms);
  const auto t1 = clock::now();
  const sabc::RunResult parallel = sabc::run_trials(config, algorithms);
  const auto t2 = clock::now();

  const double serial_s = std::chrono::duration<double>(t1 - t0).count();
  const double parallel_s = std::chrono::duration<double>(t2 - t1).count();

  bool identical = serial.reports.size() == parallel.reports.size();
  for (std::size_t i = 0; identical && i < serial.reports.size(); ++i)
    identical = serial.reports[i].objective == parallel.reports[i].objective &&
                serial.reports[i].antenna == parallel.reports[i].antenna;

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::printf("mode      trials  threads  wall_s    trials/s\n");
  std::printf("serial    %6d  %7d  %8.3f  %8.1f\n", config.trials, 1,
              serial_s, config.trials / serial_s);
  std::printf("openmp    %6d  %7d  %8.3f  %8.1f\n", config.trials, threads,
              parallel_s, config.trials / parallel_s);
  std::printf("speedup   %.2fx   results identical: %s\n",
              serial_s / parallel_s, identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
