#include "vietoris/trigsum.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vietoris/sequence.hpp"

namespace vietoris {

Rational vietoris_a(unsigned k) {
  const unsigned even = k - (k % 2);  // odd index repeats the previous even value
  return make_rational(1, BigInt(1) << even) * binomial(even, even / 2);
}

namespace {

// Coefficients are computed exactly once per run and converted to double a
// single time, so the float evidence does not accumulate recurrence rounding.
std::vector<double> coeff_table(unsigned n_max) {
  std::vector<double> a(n_max + 1);
  for (unsigned k = 0; k <= n_max; ++k) a[k] = to_double(vietoris_a(k));
  return a;
}

struct CellMin {
  double value = 0.0;
  unsigned grid_index = 0;  // 1-based j

  bool better_than(const CellMin& other) const {
    return value < other.value || (value == other.value && grid_index < other.grid_index);
  }
};

struct RowAccum {
  CellMin sigma_min;
  CellMin tau_min;
  CellMin combined_min;  // min(sigma, tau), location reported as argmin_x
  bool seen = false;

  void update(double s, double t, unsigned j) {
    const CellMin sm{s, j}, tm{t, j}, cm{std::min(s, t), j};
    if (!seen) {
      sigma_min = sm;
      tau_min = tm;
      combined_min = cm;
      seen = true;
      return;
    }
    if (sm.better_than(sigma_min)) sigma_min = sm;
    if (tm.better_than(tau_min)) tau_min = tm;
    if (cm.better_than(combined_min)) combined_min = cm;
  }

  void merge(const RowAccum& other) {
    if (!other.seen) return;
    if (!seen) {
      *this = other;
      return;
    }
    if (other.sigma_min.better_than(sigma_min)) sigma_min = other.sigma_min;
    if (other.tau_min.better_than(tau_min)) tau_min = other.tau_min;
    if (other.combined_min.better_than(combined_min)) combined_min = other.combined_min;
  }
};

// Optimized sweep of one grid point: running prefix sums over N. Term order
// per cell matches the direct definition, so both kernels agree bit for bit.
void sweep_point(const std::vector<double>& a, unsigned n_max, double x, unsigned j,
                 std::vector<RowAccum>& rows) {
  double sig = 0.0;
  double ta = a[0];  // tau_0 = a_0
  for (unsigned N = 1; N <= n_max; ++N) {
    sig += a[N] * std::sin(N * x);
    ta += a[N] * std::cos(N * x);
    rows[N - 1].update(sig, ta, j);
  }
}

// Reference sweep, straight from the definitions: every cell summed from
// scratch, O(n_max^2) per grid point.
void sweep_point_reference(const std::vector<double>& a, unsigned n_max, double x, unsigned j,
                           std::vector<RowAccum>& rows) {
  for (unsigned N = 1; N <= n_max; ++N) {
    double sig = 0.0;
    for (unsigned k = 1; k <= N; ++k) sig += a[k] * std::sin(k * x);
    double ta = a[0];
    for (unsigned k = 1; k <= N; ++k) ta += a[k] * std::cos(k * x);
    rows[N - 1].update(sig, ta, j);
  }
}

}  // namespace

double sigma(unsigned N, double x) {
  if (N == 0) throw std::invalid_argument("sigma: N must be >= 1");
  double s = 0.0;
  for (unsigned k = 1; k <= N; ++k) s += to_double(vietoris_a(k)) * std::sin(k * x);
  return s;
}

double tau(unsigned N, double x) {
  double s = 0.0;
  for (unsigned k = 0; k <= N; ++k) s += to_double(vietoris_a(k)) * std::cos(k * x);
  return s;
}

ScanReport positivity_scan(unsigned n_max, unsigned grid_points, ScanKernel kernel) {
  if (n_max == 0) throw std::invalid_argument("positivity_scan: n_max must be >= 1");
  if (grid_points < 2) throw std::invalid_argument("positivity_scan: need at least 2 grid points");

  const std::vector<double> a = coeff_table(n_max);
  const double step = M_PI / (grid_points + 1.0);
  std::vector<RowAccum> rows(n_max);

  if (kernel == ScanKernel::Serial) {
    for (unsigned j = 1; j <= grid_points; ++j)
      sweep_point_reference(a, n_max, j * step, j, rows);
  } else {
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    std::vector<std::vector<RowAccum>> locals(max_threads, std::vector<RowAccum>(n_max));
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<RowAccum>& mine = locals[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (long j = 1; j <= static_cast<long>(grid_points); ++j)
        sweep_point(a, n_max, j * step, static_cast<unsigned>(j), mine);
    }
#else
    for (unsigned j = 1; j <= grid_points; ++j) sweep_point(a, n_max, j * step, j, locals[0]);
#endif
    // deterministic merge in thread-index order; ties broken by grid index
    for (const auto& local : locals)
      for (unsigned i = 0; i < n_max; ++i) rows[i].merge(local[i]);
  }

  ScanReport report;
  report.n_max = n_max;
  report.grid_size = grid_points;
  report.verdict = true;
  for (unsigned N = 1; N <= n_max; ++N) {
    const RowAccum& r = rows[N - 1];
    ScanRow row;
    row.N = N;
    row.argmin_x = r.combined_min.grid_index * step;
    row.min_sigma = r.sigma_min.value;
    row.min_tau = r.tau_min.value;
    report.rows.push_back(row);
    if (!(row.min_sigma > 0.0 && row.min_tau > 0.0)) report.verdict = false;
  }
  return report;
}

}  // namespace vietoris
