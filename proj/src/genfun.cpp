#include "vietoris/genfun.hpp"

#include <cmath>
#include <limits>

#include "vietoris/sequence.hpp"

namespace vietoris {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

SeriesResult diverged(const char* reason) {
  return SeriesResult{kNaN, 0, kInf, SeriesStatus::DivergedFlagged, reason};
}

bool is_nonpositive_integer(const Rational& q) {
  return denominator(q) == 1 && q <= 0;
}

// Advances the exact pair value v_s = (1/2)_s / (n/2)_s; on odd k the
// coefficient moves to the next pair, on even k it repeats.
void advance_coeff(Rational& coeff, unsigned k_next, unsigned n) {
  if (k_next % 2 == 1) coeff *= make_rational(k_next, k_next - 1 + n);
}

// Same recurrence in floating point for the long summation loops; the update
// factor is <= 1 exactly, so monotonicity of the coefficients survives
// rounding and the geometric tail bounds stay valid.
void advance_coeff(double& coeff, long k_next, unsigned n) {
  if (k_next % 2 == 1)
    coeff *= static_cast<double>(k_next) / static_cast<double>(k_next - 1 + n);
}

}  // namespace

const char* series_status_tag(SeriesStatus status) {
  switch (status) {
    case SeriesStatus::Converged:
      return "converged";
    case SeriesStatus::DivergedFlagged:
      return "diverged-flagged";
    case SeriesStatus::MaxTerms:
      return "max-terms";
  }
  throw std::logic_error("series_status_tag: unknown status");
}

GammaHalf gamma_half(const Rational& q) {
  if (q <= 0) throw std::domain_error("gamma_half: argument must be positive");
  const BigInt den = denominator(q);
  if (den == 1) {
    const unsigned m = q.convert_to<unsigned>();
    return {Rational(factorial(m - 1)), false};
  }
  if (den == 2) {
    // q = m + 1/2: Gamma(q) = (2m)! / (4^m m!) * sqrt(pi)
    const BigInt num = numerator(q);
    const unsigned m = ((num - 1) / 2).convert_to<unsigned>();
    Rational coeff = make_rational(factorial(2 * m), BigInt(1));
    coeff /= rational_pow(Rational(4), m) * Rational(factorial(m));
    return {coeff, true};
  }
  throw std::domain_error("gamma_half: argument must be an integer or half-integer");
}

double gauss_sum_2f1(const Rational& a, const Rational& b, const Rational& c) {
  const Rational cab = c - a - b;
  if (cab <= 0) throw std::domain_error("gauss_sum_2f1: requires c - a - b > 0");
  const GammaHalf gc = gamma_half(c);
  const GammaHalf gcab = gamma_half(cab);
  const GammaHalf gca = gamma_half(c - a);
  const GammaHalf gcb = gamma_half(c - b);
  const Rational ratio = gc.coeff * gcab.coeff / (gca.coeff * gcb.coeff);
  const int net_sqrt_pi =
      (gc.sqrt_pi ? 1 : 0) + (gcab.sqrt_pi ? 1 : 0) - (gca.sqrt_pi ? 1 : 0) - (gcb.sqrt_pi ? 1 : 0);
  return to_double(ratio) * std::pow(std::sqrt(M_PI), net_sqrt_pi);
}

SeriesResult hyp2f1(const Rational& a, const Rational& b, const Rational& c, double z,
                    double tol, long max_terms) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: c must not be a non-positive integer");
  if (z == 0.0) return {1.0, 1, 0.0, SeriesStatus::Converged, ""};
  if (z == 1.0) {
    if (c - a - b <= 0) return diverged(kReasonGaussNotSummable);
    return {gauss_sum_2f1(a, b, c), 0, 0.0, SeriesStatus::Converged, ""};
  }
  if (std::abs(z) >= 1.0) throw std::domain_error("hyp2f1: requires |z| < 1 or z = 1");

  const double ad = to_double(a), bd = to_double(b), cd = to_double(c);
  // term ratio = z * f(j), f(j) = (a+j)(b+j)/((c+j)(1+j)) = 1 + (alpha j + beta)/((c+j)(1+j)),
  // so sup_{j >= j0} |f| <= 1 + (|alpha|+|beta|)/(c+j0) once c + j0 > 0.
  const double abs_ab = std::abs(ad + bd - cd - 1.0) + std::abs(ad * bd - cd);

  double term = 1.0;
  double sum = 0.0;
  double bound = kInf;
  for (long k = 0; k < max_terms; ++k) {
    sum += term;
    term *= (ad + k) * (bd + k) / ((cd + k) * (1.0 + k)) * z;
    const double j0 = static_cast<double>(k) + 1.0;
    if (cd + j0 > 0.0) {
      const double r = std::abs(z) * (1.0 + abs_ab / (cd + j0));
      if (r < 1.0) {
        bound = std::abs(term) / (1.0 - r);
        if (bound <= tol) return {sum, k + 1, bound, SeriesStatus::Converged, ""};
      }
    }
  }
  return {sum, max_terms, bound, SeriesStatus::MaxTerms, ""};
}

namespace {

// t = 1, n >= 4: pairwise sums with the comparison bound
//   v_s <= v_{S+1} ((2(S+1)+n)/(2s+n))^p,  p = (n-1)/2,
// whose integral tail gives a rigorous truncation estimate.
SeriesResult g_series_at_one(unsigned n, double tol, long max_terms) {
  const double p = (static_cast<double>(n) - 1.0) / 2.0;
  double pair_value = 1.0;  // v_s
  double sum = 1.0;
  double bound = kInf;
  const long max_pairs = max_terms / 2;
  long pairs = 0;
  for (long s = 1; s <= max_pairs; ++s) {
    pair_value *= static_cast<double>(2 * s - 1) / static_cast<double>(2 * s - 2 + n);
    sum += 2.0 * pair_value;
    pairs = s;
    const double next =
        pair_value * static_cast<double>(2 * s + 1) / static_cast<double>(2 * s + n);
    const double S = static_cast<double>(s);
    bound = next * std::pow(2.0 * (S + 1.0) + n, p) * std::pow(2.0 * S + n, 1.0 - p) /
            (p - 1.0);
    if (bound <= tol)
      return {sum, 2 * pairs + 1, bound, SeriesStatus::Converged, ""};
  }
  return {sum, 2 * pairs + 1, bound, SeriesStatus::MaxTerms, ""};
}

}  // namespace

SeriesResult g_series(double t, unsigned n, double tol, long max_terms) {
  if (n == 0) throw std::invalid_argument("g_series: n must be >= 1");
  if (t == 0.0) return {1.0, 1, 0.0, SeriesStatus::Converged, ""};
  if (std::abs(t) > 1.0) return diverged(kReasonOutsideRadius);
  if (t == 1.0) {
    switch (n) {
      case 1:
        return diverged(kReasonGeometricSeries);
      case 2:
        return diverged(kReasonCentralBinomialBound);
      case 3:
        return diverged(kReasonReciprocalOdd);
      default:
        return g_series_at_one(n, tol, max_terms);
    }
  }
  if (t == -1.0) return alternating_sum(n, tol, max_terms);

  const double abs_t = std::abs(t);
  double coeff = 1.0;  // c_k(n)
  double tpow = 1.0;
  double sum = 0.0;
  double bound = kInf;
  for (long k = 0; k < max_terms; ++k) {
    sum += coeff * tpow;
    advance_coeff(coeff, k + 1, n);
    tpow *= t;
    // coefficients are non-increasing, so future term ratios are <= |t|
    bound = std::abs(coeff * tpow) / (1.0 - abs_t);
    if (bound <= tol) return {sum, k + 1, bound, SeriesStatus::Converged, ""};
  }
  return {sum, max_terms, bound, SeriesStatus::MaxTerms, ""};
}

double g_closed(double t, unsigned n) {
  if (n == 0 || n > 4) throw std::domain_error("g_closed: closed forms exist for n in {1,2,3,4}");
  if (std::abs(t) >= 1.0) throw std::domain_error("g_closed: requires |t| < 1");
  if (t == 0.0) return 1.0;
  switch (n) {
    case 1:
      return 1.0 / (1.0 - t);
    case 2:
      return (std::sqrt(1.0 + t) - std::sqrt(1.0 - t)) / (t * std::sqrt(1.0 - t));
    case 3:
      return (1.0 / t) * ((t + 1.0) / t * std::log(std::sqrt((1.0 + t) / (1.0 - t))) - 1.0);
    case 4: {
      const double root = std::sqrt(1.0 - t * t);
      return (2.0 * t + 1.0 - root) / (t * (1.0 + root));
    }
  }
  return kNaN;  // unreachable
}

SeriesResult g_hypergeometric(double t, unsigned n, double tol, long max_terms) {
  if (n == 0) throw std::invalid_argument("g_hypergeometric: n must be >= 1");
  if (t == 0.0) return {1.0, 1, 0.0, SeriesStatus::Converged, ""};
  if (std::abs(t) >= 1.0)
    throw std::domain_error("g_hypergeometric: requires |t| < 1");
  const double scale = std::abs((1.0 + t) / t);
  const double inner_tol = tol / std::max(scale, 1.0);
  SeriesResult h = hyp2f1(make_rational(1, 2), Rational(1), make_rational(n, 2), t * t,
                          inner_tol, max_terms);
  SeriesResult out = h;
  out.value = ((1.0 + t) * h.value - 1.0) / t;
  out.tail_bound = scale * h.tail_bound;
  return out;
}

SeriesSumResult series_sum(unsigned n) {
  if (n == 0) throw std::invalid_argument("series_sum: n must be >= 1");
  switch (n) {
    case 1:
      return {std::nullopt, kReasonGeometricSeries};
    case 2:
      return {std::nullopt, kReasonCentralBinomialBound};
    case 3:
      return {std::nullopt, kReasonReciprocalOdd};
    default:
      return {make_rational(n - 1, n - 3), ""};
  }
}

SeriesResult alternating_sum(unsigned n, double tol, long max_terms) {
  if (n == 0) throw std::invalid_argument("alternating_sum: n must be >= 1");
  if (n == 1) return diverged(kReasonAlternatingUnit);
  double coeff = 1.0;
  double sum = 0.0;
  double bound = kInf;
  for (long k = 0; k < max_terms; ++k) {
    sum += (k % 2 == 0) ? coeff : -coeff;
    advance_coeff(coeff, k + 1, n);
    bound = coeff;  // Leibniz: |tail| <= c_{K+1}
    if (bound <= tol) return {sum, k + 1, bound, SeriesStatus::Converged, ""};
  }
  return {sum, max_terms, bound, SeriesStatus::MaxTerms, ""};
}

Rational alternating_partial_sum(unsigned n, unsigned K) {
  if (n == 0) throw std::invalid_argument("alternating_partial_sum: n must be >= 1");
  Rational coeff(1);
  Rational sum(0);
  for (unsigned k = 0; k <= K; ++k) {
    if (k % 2 == 0)
      sum += coeff;
    else
      sum -= coeff;
    advance_coeff(coeff, k + 1, n);
  }
  return sum;
}

std::vector<CompareRow> genfun_compare(const std::vector<double>& ts, unsigned n, double tol,
                                       long max_terms) {
  std::vector<CompareRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    CompareRow row;
    row.t = t;
    row.n = n;
    const SeriesResult series = g_series(t, n, tol, max_terms);
    row.series = series.value;
    row.terms_used = series.terms_used;
    row.status = series.status;
    row.reason = series.reason;
    if (n <= 4 && std::abs(t) < 1.0) {
      row.closed = g_closed(t, n);
    } else if (std::abs(t) < 1.0) {
      row.closed = g_hypergeometric(t, n, tol, max_terms).value;
    } else {
      row.closed = kNaN;
    }
    row.diff = std::abs(row.series - row.closed);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vietoris
