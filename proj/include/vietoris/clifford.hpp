#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vietoris/exactnum.hpp"

namespace vietoris {

using BladeMask = std::uint32_t;

// Hard bound set by the mask width; the CLI applies its own (overridable)
// default ceiling of 16.
inline constexpr unsigned kMaxBladeDimension = 31;
inline constexpr unsigned kDefaultDimensionCap = 16;

/// Basis blade e_A of Cl(0,n): bit i-1 of the mask set means the generator e_i
/// occurs. The empty mask is the scalar unit.
struct Blade {
  BladeMask mask = 0;

  unsigned grade() const noexcept;
  /// "e{}" for the scalar unit, otherwise "e{i,j,...}" with ascending indices.
  std::string to_string() const;

  friend auto operator<=>(const Blade&, const Blade&) = default;
};

/// Product of two basis blades: resulting mask and sign. The sign counts the
/// transpositions needed to merge the two ascending index lists, plus one flip
/// per contracted index (e_k^2 = -1).
std::pair<BladeMask, int> blade_mul(BladeMask a, BladeMask b) noexcept;

/// Element of Cl(0,n) with exact rational coefficients, stored sparsely with
/// deterministic (ascending-mask) term order.
class Multivector {
 public:
  explicit Multivector(unsigned n);

  static Multivector scalar(unsigned n, Rational value);
  /// e_i, 1-based, 1 <= i <= n.
  static Multivector generator(unsigned n, unsigned i);
  static Multivector blade(unsigned n, BladeMask mask, Rational coeff);

  unsigned dimension() const noexcept { return n_; }
  const std::map<BladeMask, Rational>& terms() const noexcept { return terms_; }

  /// Coefficient of the given blade; zero if absent.
  Rational coefficient(BladeMask mask) const;
  Rational scalar_part() const { return coefficient(0); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_scalar() const noexcept;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  friend Multivector operator+(Multivector lhs, const Multivector& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) {
    lhs -= rhs;
    return lhs;
  }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator*(const Rational& s, const Multivector& m);
  friend Multivector operator*(const Multivector& m, const Rational& s) { return s * m; }

  friend bool operator==(const Multivector&, const Multivector&) = default;

  /// Deterministic rendering, terms in ascending mask order, e.g.
  /// "1/2 + 3/8 * e{1,2}". The zero element renders as "0".
  std::string to_string() const;

 private:
  void add_term(BladeMask mask, const Rational& coeff);
  void require_same_dimension(const Multivector& other) const;

  unsigned n_ = 0;
  std::map<BladeMask, Rational> terms_;
};

/// Paravector x = x0 + x1 e_1 + ... + xn e_n.
struct Paravector {
  Rational x0;
  std::vector<Rational> xv;

  unsigned dimension() const noexcept { return static_cast<unsigned>(xv.size()); }

  /// x0 - (vector part).
  Paravector conjugate() const;

  /// x0^2 + x1^2 + ... + xn^2; equals the scalar part of x * conj(x).
  Rational norm_sq() const;

  Multivector embed() const;
};

}  // namespace vietoris
