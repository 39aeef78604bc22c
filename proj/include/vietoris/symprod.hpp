#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <vector>

#include "vietoris/exactnum.hpp"

namespace vietoris {

// Default enumeration caps. The brute-force route walks every distinguished
// permutation, so its cap is much lower than the recursion's.
inline constexpr unsigned kSymProductCap = 24;
inline constexpr unsigned kSymProductBruteForceCap = 8;

template <typename R>
concept SymmetrizableRing = requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a* b } -> std::convertible_to<R>;
  { q* a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

/// Factors a_1^{mu_1} x ... x a_n^{mu_n} of a symmetric product.
template <SymmetrizableRing R>
struct SymFactors {
  std::vector<R> base;
  MultiIndex exponents;

  SymFactors(std::vector<R> base_in, MultiIndex exponents_in)
      : base(std::move(base_in)), exponents(std::move(exponents_in)) {
    if (base.size() != exponents.size())
      throw std::invalid_argument("SymFactors: base/exponent length mismatch");
  }
};

/// Memoized evaluator for symmetric powers of a fixed base, via
///   P(mu) = (1/|mu|) sum_j mu_j P(mu - e_j) a_j,   P(0) = 1.
/// The memo is owned by the context, so a single context can serve every
/// multi-index of one evaluation (the states are shared across them).
template <SymmetrizableRing R>
class SymProductContext {
 public:
  SymProductContext(std::vector<R> base, R one, unsigned degree_cap = kSymProductCap)
      : base_(std::move(base)), one_(std::move(one)), cap_(degree_cap) {}

  const R& power(const MultiIndex& mu) {
    if (mu.size() != base_.size())
      throw std::invalid_argument("SymProductContext: multi-index length mismatch");
    if (mu.degree() > cap_) throw CapExceeded("symprod-degree", mu.degree(), cap_);
    return power_rec(mu);
  }

 private:
  const R& power_rec(const MultiIndex& mu) {
    if (auto it = memo_.find(mu); it != memo_.end()) return it->second;
    const unsigned deg = mu.degree();
    if (deg == 0) return memo_.emplace(mu, one_).first->second;
    std::optional<R> acc;
    const Rational inv_deg = make_rational(1, deg);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (mu[j] == 0) continue;
      R term = (inv_deg * Rational(mu[j])) * (power_rec(mu.decremented(j)) * base_[j]);
      if (acc)
        acc = *acc + term;
      else
        acc = std::move(term);
    }
    return memo_.emplace(mu, std::move(*acc)).first->second;
  }

  std::vector<R> base_;
  R one_;
  unsigned cap_;
  std::map<MultiIndex, R> memo_;
};

/// Symmetric product by the memoized recursion. `one` is the ring identity with
/// the right ambient parameters (value of the empty product).
template <SymmetrizableRing R>
R sym_product(const SymFactors<R>& f, const R& one, unsigned degree_cap = kSymProductCap) {
  SymProductContext<R> ctx(f.base, one, degree_cap);
  return ctx.power(f.exponents);
}

/// Symmetric product straight from the definition: mu!/|mu|! times the sum of
/// the ordered products over all distinguished permutations, enumerated by
/// lexicographic successor on the multiset of factor indices.
template <SymmetrizableRing R>
R sym_product_bruteforce(const SymFactors<R>& f, const R& one,
                         unsigned degree_cap = kSymProductBruteForceCap) {
  const unsigned deg = f.exponents.degree();
  if (deg > degree_cap) throw CapExceeded("symprod-bruteforce-degree", deg, degree_cap);
  if (deg == 0) return one;

  std::vector<std::size_t> word;
  word.reserve(deg);
  for (std::size_t j = 0; j < f.exponents.size(); ++j)
    word.insert(word.end(), f.exponents[j], j);

  std::optional<R> sum;
  do {
    R prod = f.base[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) prod = prod * f.base[word[i]];
    if (sum)
      sum = *sum + prod;
    else
      sum = std::move(prod);
  } while (std::next_permutation(word.begin(), word.end()));

  const Rational scale =
      make_rational(f.exponents.factorial_product(), factorial(deg));
  return scale * *sum;
}

template <SymmetrizableRing R>
struct PowerExpansionReport {
  R lhs;  // (a_1 + ... + a_n)^k by repeated ring multiplication
  R rhs;  // sum over |mu| = k of (k!/mu!) a^mu
  bool equal;
};

/// Checks the polynomial formula (a_1+...+a_n)^k = sum_{|mu|=k} (k!/mu!) a^mu.
template <SymmetrizableRing R>
PowerExpansionReport<R> expand_power(const std::vector<R>& base, unsigned k, const R& one,
                                     unsigned degree_cap = kSymProductCap) {
  if (k > degree_cap) throw CapExceeded("symprod-degree", k, degree_cap);
  if (base.empty()) throw std::invalid_argument("expand_power: empty base");

  R sum_base = base[0];
  for (std::size_t j = 1; j < base.size(); ++j) sum_base = sum_base + base[j];
  R lhs = one;
  for (unsigned i = 0; i < k; ++i) lhs = lhs * sum_base;

  SymProductContext<R> ctx(base, one, degree_cap);
  std::optional<R> rhs;
  for (const MultiIndex& mu : multi_indices_with_degree(static_cast<unsigned>(base.size()), k)) {
    R term = multinomial(k, mu) * ctx.power(mu);
    if (rhs)
      rhs = *rhs + term;
    else
      rhs = std::move(term);
  }
  bool equal = (lhs == *rhs);
  return {std::move(lhs), std::move(*rhs), equal};
}

}  // namespace vietoris
