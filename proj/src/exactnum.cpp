#include "vietoris/exactnum.hpp"

#include <numeric>

namespace vietoris {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  unsigned e = exponent;
  while (e != 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

unsigned MultiIndex::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

BigInt MultiIndex::factorial_product() const {
  BigInt p(1);
  for (unsigned e : entries_) p *= factorial(e);
  return p;
}

MultiIndex MultiIndex::decremented(std::size_t j) const {
  if (j >= entries_.size() || entries_[j] == 0)
    throw std::invalid_argument("MultiIndex::decremented: entry not positive");
  std::vector<unsigned> e = entries_;
  --e[j];
  return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = entries_.size() <=> other.entries_.size(); c != 0) return c;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (auto c = entries_[i] <=> other.entries_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

BigInt factorial(unsigned n) {
  BigInt p(1);
  for (unsigned i = 2; i <= n; ++i) p *= i;
  return p;
}

Rational pochhammer(const Rational& a, unsigned s) {
  Rational p(1);
  Rational term = a;
  for (unsigned i = 0; i < s; ++i) {
    p *= term;
    term += 1;
  }
  return p;
}

Rational binomial(unsigned k, unsigned s) {
  if (s > k) throw std::invalid_argument("binomial: s > k");
  return multinomial(k, MultiIndex{s, k - s});
}

Rational multinomial(unsigned k, const MultiIndex& nu) {
  if (nu.degree() != k)
    throw std::invalid_argument("multinomial: |nu| != k");
  return make_rational(factorial(k), nu.factorial_product());
}

Rational double_factorial(long m) {
  if (m < -1) throw std::domain_error("double_factorial: m < -1");
  BigInt p(1);
  for (long i = m; i >= 2; i -= 2) p *= i;
  return Rational(p);
}

namespace {

void compositions_rec(unsigned parts, unsigned degree, std::vector<unsigned>& prefix,
                      std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned v = degree + 1; v-- > 0;) {
    prefix.push_back(v);
    compositions_rec(parts, degree - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_with_degree(unsigned parts, unsigned degree) {
  if (parts == 0) throw std::invalid_argument("multi_indices_with_degree: zero parts");
  std::vector<MultiIndex> out;
  std::vector<unsigned> prefix;
  prefix.reserve(parts);
  compositions_rec(parts, degree, prefix, out);
  return out;
}

}  // namespace vietoris
