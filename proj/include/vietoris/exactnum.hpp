#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace vietoris {

// Exact scalars. et_off so every operator returns a plain value type, which keeps
// the generic ring code in symprod.hpp simple.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Thrown when an enumeration cap would be exceeded; carries the cap name so the
/// CLI can report which limit to raise.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap_name, unsigned long long requested, unsigned long long limit)
      : std::runtime_error("cap '" + cap_name + "' exceeded: requested " +
                           std::to_string(requested) + ", limit " + std::to_string(limit)),
        cap_name_(std::move(cap_name)) {}

  const std::string& cap_name() const noexcept { return cap_name_; }

 private:
  std::string cap_name_;
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "num/den" in lowest terms; plain "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// num/den as an exact rational; throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

Rational rational_pow(const Rational& base, unsigned exponent);

/// Exponent vector (nu_1,...,nu_n) of a symmetric product or monomial.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<unsigned> entries) : entries_(entries) {}

  std::size_t size() const noexcept { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<unsigned>& entries() const noexcept { return entries_; }

  /// |mu| = sum of entries.
  unsigned degree() const noexcept;

  /// mu! = prod_i mu_i!
  BigInt factorial_product() const;

  /// Copy with entry j reduced by one; entry j must be positive.
  MultiIndex decremented(std::size_t j) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const;

 private:
  std::vector<unsigned> entries_;
};

BigInt factorial(unsigned n);

/// Raising factorial a(a+1)...(a+s-1); empty product = 1.
Rational pochhammer(const Rational& a, unsigned s);

/// C(k, s) as an exact Rational (integer-valued); requires s <= k.
Rational binomial(unsigned k, unsigned s);

/// k!/nu! as an exact Rational (integer-valued); requires |nu| = k.
Rational multinomial(unsigned k, const MultiIndex& nu);

/// m!! with the empty-product conventions 0!! = (-1)!! = 1; requires m >= -1.
Rational double_factorial(long m);

/// All multi-indices with `parts` entries summing to `degree`, in descending
/// lexicographic order (deterministic).
std::vector<MultiIndex> multi_indices_with_degree(unsigned parts, unsigned degree);

}  // namespace vietoris
