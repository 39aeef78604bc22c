#pragma once

#include <map>
#include <string>
#include <vector>

#include "vietoris/clifford.hpp"
#include "vietoris/exactnum.hpp"

namespace vietoris {

/// Exponents (alpha_0,...,alpha_n) of a monomial in x_0..x_n.
using ExpVec = std::vector<unsigned>;

/// Graded order: total degree first, then lexicographic with x_0 most
/// significant and higher x_0 powers first within a degree.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Multivariate polynomial in the commuting real variables x_0..x_n with
/// Multivector coefficients (which do not commute with each other).
class MvPolynomial {
 public:
  explicit MvPolynomial(unsigned n);

  static MvPolynomial constant(Multivector c);
  static MvPolynomial one(unsigned n);
  /// x_i with scalar coefficient 1; 0 <= i <= n.
  static MvPolynomial variable(unsigned n, unsigned i);

  unsigned dimension() const noexcept { return n_; }
  const std::map<ExpVec, Multivector, GradedLexLess>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Max total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;

  MvPolynomial operator-() const;
  MvPolynomial& operator+=(const MvPolynomial& rhs);
  MvPolynomial& operator-=(const MvPolynomial& rhs);
  friend MvPolynomial operator+(MvPolynomial lhs, const MvPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend MvPolynomial operator-(MvPolynomial lhs, const MvPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b);
  friend MvPolynomial operator*(const Rational& s, const MvPolynomial& p);
  /// Coefficients multiplied from the left / right by a constant multivector.
  friend MvPolynomial operator*(const Multivector& m, const MvPolynomial& p);
  friend MvPolynomial operator*(const MvPolynomial& p, const Multivector& m);

  MvPolynomial pow(unsigned k) const;
  MvPolynomial derivative(unsigned var) const;

  /// Substitutes rationals for x_0..x_n (coords has n+1 entries).
  Multivector evaluate(const std::vector<Rational>& coords) const;
  Multivector evaluate(const Paravector& point) const;

  friend bool operator==(const MvPolynomial&, const MvPolynomial&) = default;

  /// Deterministic pretty-printer in the graded term order, e.g.
  /// "x0^2 - 1/2 * x1^2 + (1/2 * e{1}) * x0 x1".
  std::string to_string() const;

 private:
  void add_term(const ExpVec& exps, const Multivector& coeff);

  unsigned n_ = 0;
  std::map<ExpVec, Multivector, GradedLexLess> terms_;
};

/// Hypercomplex variable z_k = x_k - x_0 e_k.
struct HyperVar {
  unsigned index = 0;
  MvPolynomial expansion;

  static HyperVar make(unsigned n, unsigned k);
};

/// x = x_0 + x_1 e_1 + ... + x_n e_n as a polynomial. Note the scalar powers
/// x^k are not annihilated by the dbar operator for n > 1; the certified value
/// here is the exponent-1 case, cr_apply(x, Dbar) = (1-n)/2.
MvPolynomial paravector_poly(unsigned n);
/// Conjugate: x_0 - (vector part).
MvPolynomial paravector_conj_poly(unsigned n);
/// Vector part alone.
MvPolynomial vector_part_poly(unsigned n);

enum class PolyRepr { XXbar, X0Vec, HyperZ };

const char* repr_tag(PolyRepr repr);  // "x-xbar", "x0-vec", "hyper-z"

// Symmetric products over polynomial factors drive hyper-z cost; the other two
// representations are cheap up to k = 12.
inline constexpr unsigned kHyperZDegreeCap = 8;

/// Degree-k homogeneous Appell polynomial over Cl(0,n) in the chosen
/// representation. All representations expand x, conj(x) and z_i into the
/// variables x_0..x_n, so equality is plain coefficient comparison.
MvPolynomial build_P(unsigned n, unsigned k, PolyRepr repr,
                     unsigned hyper_degree_cap = kHyperZDegreeCap);

enum class CROperator { Dbar, D };

/// Generalized Cauchy-Riemann action (1/2)(d/dx_0 +- sum_i e_i d/dx_i), the
/// e_i acting on coefficients from the left.
MvPolynomial cr_apply(const MvPolynomial& p, CROperator op);

struct ReprEquivalence {
  bool equal = false;
  std::vector<std::string> representations_compared;
  std::string detail;  // empty when equal
};

/// Builds every representation reachable within the caps and compares them as
/// polynomials.
ReprEquivalence repr_equivalence(unsigned n, unsigned k,
                                 unsigned hyper_degree_cap = kHyperZDegreeCap);

}  // namespace vietoris
