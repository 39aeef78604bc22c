// Compares the serial reference kernel against the OpenMP kernel of the
// positivity scan and reports wall times plus the speedup. Usage:
//   bench_scan [N_max] [grid_points] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vietoris/trigsum.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_scan(unsigned n_max, unsigned grid, vietoris::ScanKernel kernel, int repeats,
                 vietoris::ScanReport& last) {
  double best_ms = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    last = vietoris::positivity_scan(n_max, grid, kernel);
    const auto t1 = Clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best_ms) best_ms = ms;
  }
  return best_ms;
}

}  // namespace

int main(int argc, char** argv) {
  const unsigned n_max = argc > 1 ? std::atoi(argv[1]) : 200;
  const unsigned grid = argc > 2 ? std::atoi(argv[2]) : 9999;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("scan N_max=%u grid=%u, best of %d runs\n", n_max, grid, repeats);

  vietoris::ScanReport serial_report, parallel_report;
  const double serial_ms =
      time_scan(n_max, grid, vietoris::ScanKernel::Serial, repeats, serial_report);
  std::printf("serial reference : %10.2f ms\n", serial_ms);
  const double parallel_ms =
      time_scan(n_max, grid, vietoris::ScanKernel::Parallel, repeats, parallel_report);
  std::printf("parallel kernel  : %10.2f ms\n", parallel_ms);
  std::printf("speedup          : %10.2fx\n", serial_ms / parallel_ms);

  bool equal = serial_report.verdict == parallel_report.verdict &&
               serial_report.rows.size() == parallel_report.rows.size();
  for (std::size_t i = 0; equal && i < serial_report.rows.size(); ++i) {
    const auto& a = serial_report.rows[i];
    const auto& b = parallel_report.rows[i];
    equal = a.N == b.N && a.argmin_x == b.argmin_x && a.min_sigma == b.min_sigma &&
            a.min_tau == b.min_tau;
  }
  std::printf("reports identical: %s\n", equal ? "yes" : "NO");
  return equal ? 0 : 1;
}
