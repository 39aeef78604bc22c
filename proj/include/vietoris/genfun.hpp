#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vietoris/exactnum.hpp"

namespace vietoris {

inline constexpr long kDefaultMaxTerms = 100000;

// Stable divergence reason tags (reports and CLI output).
inline constexpr const char* kReasonGeometricSeries = "geometric series";
inline constexpr const char* kReasonCentralBinomialBound = "central binomial lower bound";
inline constexpr const char* kReasonReciprocalOdd = "reciprocal odd numbers";
inline constexpr const char* kReasonAlternatingUnit = "alternating unit terms";
inline constexpr const char* kReasonOutsideRadius = "outside radius of convergence";
inline constexpr const char* kReasonGaussNotSummable = "c-a-b <= 0 at z=1";

enum class SeriesStatus { Converged, DivergedFlagged, MaxTerms };

const char* series_status_tag(SeriesStatus status);  // "converged", "diverged-flagged", "max-terms"

/// Outcome of a floating-point summation. `tail_bound` is a rigorous bound on
/// the truncation error of `value` (geometric ratio bound inside the disc,
/// comparison/Leibniz bounds on the boundary); status Converged means the bound
/// fell below the requested tolerance. Divergence is a status, never an
/// exception.
struct SeriesResult {
  double value = 0.0;
  long terms_used = 0;
  double tail_bound = 0.0;
  SeriesStatus status = SeriesStatus::Converged;
  std::string reason;  // set only for DivergedFlagged
};

/// Gauss hypergeometric series sum_k (a)_k (b)_k / ((c)_k k!) z^k for |z| < 1,
/// or the Gamma closed form at z = 1 when c-a-b > 0 (diverged-flagged there
/// otherwise). Throws std::domain_error for c a non-positive integer or other
/// arguments outside the supported domain.
SeriesResult hyp2f1(const Rational& a, const Rational& b, const Rational& c, double z,
                    double tol, long max_terms = kDefaultMaxTerms);

/// Direct summation of sum_k c_k(n) t^k with tail control; exact value 1 at
/// t = 0. On |t| = 1 the non-summable cases come back diverged-flagged with
/// their reason tags.
SeriesResult g_series(double t, unsigned n, double tol, long max_terms = kDefaultMaxTerms);

/// Elementary closed forms of the generating function, n in {1,2,3,4};
/// removable singularity at t = 0 handled by returning 1.
double g_closed(double t, unsigned n);

/// The one-parameter hypergeometric form (1/t)[(1+t) 2F1(1/2,1;n/2;t^2) - 1]
/// for |t| < 1 (exact 1 at t = 0).
SeriesResult g_hypergeometric(double t, unsigned n, double tol,
                              long max_terms = kDefaultMaxTerms);

/// Sum of the full coefficient series: exactly (n-1)/(n-3) for n > 3,
/// otherwise a divergence flag with its reason tag.
struct SeriesSumResult {
  std::optional<Rational> value;
  std::string reason;  // set when divergent

  bool diverged() const noexcept { return !value.has_value(); }
};

SeriesSumResult series_sum(unsigned n);

/// Alternating series sum_k (-1)^k c_k(n) with the Leibniz bound c_{K+1};
/// diverged-flagged for n = 1. The limit is 1 for every n >= 2.
SeriesResult alternating_sum(unsigned n, double tol, long max_terms = kDefaultMaxTerms);

/// Exact partial sum sum_{k=0..K} (-1)^k c_k(n); even K gives exactly 1.
Rational alternating_partial_sum(unsigned n, unsigned K);

/// Gamma at a positive integer or half-integer, as coeff * sqrt(pi)^{0 or 1}.
struct GammaHalf {
  Rational coeff;
  bool sqrt_pi = false;
};

GammaHalf gamma_half(const Rational& q);

/// 2F1(a,b;c;1) by Gauss summation; requires c-a-b > 0 and all Gamma arguments
/// positive (half-)integers.
double gauss_sum_2f1(const Rational& a, const Rational& b, const Rational& c);

/// One comparison row of the series-vs-closed table.
struct CompareRow {
  double t = 0.0;
  unsigned n = 0;
  double series = 0.0;
  double closed = 0.0;  // NaN on the boundary |t| >= 1, where no closed value applies
  double diff = 0.0;
  long terms_used = 0;
  SeriesStatus status = SeriesStatus::Converged;
  std::string reason;  // divergence reason tag, empty otherwise
};

/// Series vs closed form on a t-grid. "closed" is the elementary form for
/// n <= 4 and the hypergeometric form otherwise. Boundary points t = +-1 are
/// admitted so the table can show the convergence/divergence outcomes there.
std::vector<CompareRow> genfun_compare(const std::vector<double>& ts, unsigned n, double tol,
                                       long max_terms = kDefaultMaxTerms);

}  // namespace vietoris
