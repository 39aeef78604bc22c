#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vietoris/exactnum.hpp"
#include "vietoris/symprod.hpp"

namespace vietoris {

// Stable method tags used in reports and golden files.
inline constexpr const char* kMethodCentral = "central";
inline constexpr const char* kMethodAlternating = "alternating-T";
inline constexpr const char* kMethodDoubleFactorial = "double-factorial";
inline constexpr const char* kMethodPochhammer = "pochhammer";
inline constexpr const char* kMethodCliffordGenerators = "clifford-generators";
inline constexpr std::array<const char*, 5> kAllMethodTags = {
    kMethodCentral, kMethodAlternating, kMethodDoubleFactorial, kMethodPochhammer,
    kMethodCliffordGenerators};

// Default reach of the generator-enumeration method; beyond this the other
// formulas stand alone.
inline constexpr unsigned kCliffordMethodKCap = 8;
inline constexpr unsigned kCliffordMethodNCap = 5;

/// c_k = 2^{-k} C(k, floor(k/2)); the n = 2 closed form.
Rational c_central(unsigned k);

/// T_s^k(n) = C(k,s) ((n+1)/2)_{k-s} ((n-1)/2)_s / (n)_k; requires n >= 1, s <= k.
Rational t_coeff(unsigned n, unsigned k, unsigned s);

/// Alternating sum c_k(n) = sum_s (-1)^s T_s^k(n).
Rational c_alternating(unsigned n, unsigned k);

/// Double-factorial form: odd s -> s!!(n-2)!!/(n+s-1)!!, even s repeats s-1.
Rational c_doublefact(unsigned n, unsigned k);

/// Pochhammer form: c_{2s} = c_{2s-1} = (1/2)_s / (n/2)_s.
Rational c_pochhammer(unsigned n, unsigned k);

/// Generator representation: (-1)^k over the multinomial sum of squared
/// symmetric generator products. The bracketed sum must reduce to a nonzero
/// pure scalar; anything else signals an implementation fault and throws
/// std::logic_error.
Rational c_cliffordgen(unsigned n, unsigned k, unsigned degree_cap = kSymProductCap);

struct SeqRow {
  unsigned k;
  std::string method;
  Rational value;
};

struct Disagreement {
  unsigned k;
  std::string method;
};

/// Cross-verification table: every applicable method at every k, with an exact
/// agreement verdict. Disagreement is a report outcome, not an error.
struct SeqReport {
  unsigned n = 0;
  unsigned k_max = 0;
  std::vector<std::string> methods;
  std::vector<SeqRow> rows;  // ordered by k, then by method tag order
  bool verdict = false;
  std::optional<Disagreement> first_disagreement;
};

SeqReport cross_verify(unsigned n, unsigned k_max,
                       unsigned clifford_k_cap = kCliffordMethodKCap,
                       unsigned clifford_n_cap = kCliffordMethodNCap);

}  // namespace vietoris
