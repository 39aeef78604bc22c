#pragma once

#include <string>
#include <vector>

#include "vietoris/exactnum.hpp"

namespace vietoris {

/// Coefficient a_k of the positive sine/cosine sums: a_0 = 1,
/// a_{2m} = 2^{-2m} C(2m,m), adjacent odd index repeats the even value.
Rational vietoris_a(unsigned k);

/// sigma_N(x) = sum_{k=1..N} a_k sin(kx); requires N >= 1.
double sigma(unsigned N, double x);

/// tau_N(x) = sum_{k=0..N} a_k cos(kx).
double tau(unsigned N, double x);

struct ScanRow {
  unsigned N = 0;
  double argmin_x = 0.0;  // grid point minimizing min(sigma_N, tau_N)
  double min_sigma = 0.0;
  double min_tau = 0.0;
};

// The scan is evidence on a grid, not a proof; reports carry this label.
inline constexpr const char* kScanLabel =
    "empirical positivity check (grid evidence, not a proof)";

struct ScanReport {
  unsigned n_max = 0;
  unsigned grid_size = 0;
  std::vector<ScanRow> rows;  // one per N = 1..n_max
  bool verdict = false;       // true iff every recorded minimum is strictly positive
};

enum class ScanKernel { Serial, Parallel };

/// Evaluates sigma_N and tau_N for every N <= n_max on the open uniform grid
/// x_j = j pi / (grid_points + 1), j = 1..grid_points (endpoints excluded), and
/// records the per-N minima. The serial kernel is the reference implementation;
/// the parallel kernel splits the grid across OpenMP threads and produces a
/// bit-identical report.
ScanReport positivity_scan(unsigned n_max, unsigned grid_points,
                           ScanKernel kernel = ScanKernel::Parallel);

}  // namespace vietoris
