#include "vietoris/sequence.hpp"

#include <functional>
#include <utility>

#include "vietoris/clifford.hpp"
#include "vietoris/symprod.hpp"

namespace vietoris {

Rational c_central(unsigned k) {
  return make_rational(1, BigInt(1) << k) * binomial(k, k / 2);
}

Rational t_coeff(unsigned n, unsigned k, unsigned s) {
  if (n == 0) throw std::invalid_argument("t_coeff: n must be >= 1");
  if (s > k) throw std::invalid_argument("t_coeff: s > k");
  const Rational np1_half = make_rational(n + 1, 2);
  const Rational nm1_half = make_rational(n - 1, 2);
  return binomial(k, s) * pochhammer(np1_half, k - s) * pochhammer(nm1_half, s) /
         pochhammer(Rational(n), k);
}

Rational c_alternating(unsigned n, unsigned k) {
  Rational sum(0);
  for (unsigned s = 0; s <= k; ++s) {
    Rational term = t_coeff(n, k, s);
    if (s % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Rational c_doublefact(unsigned n, unsigned k) {
  if (n == 0) throw std::invalid_argument("c_doublefact: n must be >= 1");
  if (k == 0) return Rational(1);
  const unsigned s = (k % 2 == 1) ? k : k - 1;  // even k repeats the odd value
  return double_factorial(static_cast<long>(s)) *
         double_factorial(static_cast<long>(n) - 2) /
         double_factorial(static_cast<long>(n) + static_cast<long>(s) - 1);
}

Rational c_pochhammer(unsigned n, unsigned k) {
  if (n == 0) throw std::invalid_argument("c_pochhammer: n must be >= 1");
  const unsigned s = (k + 1) / 2;
  return pochhammer(make_rational(1, 2), s) / pochhammer(make_rational(n, 2), s);
}

Rational c_cliffordgen(unsigned n, unsigned k, unsigned degree_cap) {
  if (n == 0) throw std::invalid_argument("c_cliffordgen: n must be >= 1");
  std::vector<Multivector> generators;
  generators.reserve(n);
  for (unsigned i = 1; i <= n; ++i) generators.push_back(Multivector::generator(n, i));
  const Multivector one = Multivector::scalar(n, Rational(1));

  SymProductContext<Multivector> ctx(generators, one, degree_cap);
  Multivector sum(n);
  for (const MultiIndex& nu : multi_indices_with_degree(n, k)) {
    const Multivector& p = ctx.power(nu);
    sum += multinomial(k, nu) * (p * p);
  }
  if (!sum.is_scalar() || sum.is_zero())
    throw std::logic_error("c_cliffordgen: multinomial sum did not reduce to a nonzero scalar");
  Rational value = Rational(1) / sum.scalar_part();
  if (k % 2 == 1) value = -value;
  return value;
}

SeqReport cross_verify(unsigned n, unsigned k_max, unsigned clifford_k_cap,
                       unsigned clifford_n_cap) {
  if (n == 0) throw std::invalid_argument("cross_verify: n must be >= 1");

  using Method = std::pair<const char*, std::function<std::optional<Rational>(unsigned)>>;
  std::vector<Method> methods;
  if (n == 2)
    methods.emplace_back(kMethodCentral,
                         [](unsigned k) { return std::optional<Rational>(c_central(k)); });
  methods.emplace_back(kMethodAlternating,
                       [n](unsigned k) { return std::optional<Rational>(c_alternating(n, k)); });
  methods.emplace_back(kMethodDoubleFactorial,
                       [n](unsigned k) { return std::optional<Rational>(c_doublefact(n, k)); });
  methods.emplace_back(kMethodPochhammer,
                       [n](unsigned k) { return std::optional<Rational>(c_pochhammer(n, k)); });
  if (n <= clifford_n_cap)
    methods.emplace_back(kMethodCliffordGenerators,
                         [n, clifford_k_cap](unsigned k) -> std::optional<Rational> {
                           if (k > clifford_k_cap) return std::nullopt;
                           return c_cliffordgen(n, k);
                         });

  SeqReport report;
  report.n = n;
  report.k_max = k_max;
  for (const auto& [tag, fn] : methods) report.methods.emplace_back(tag);
  report.verdict = true;

  for (unsigned k = 0; k <= k_max; ++k) {
    std::optional<Rational> reference;
    for (const auto& [tag, fn] : methods) {
      std::optional<Rational> value = fn(k);
      if (!value) continue;
      report.rows.push_back({k, tag, *value});
      if (!reference) {
        reference = *value;
      } else if (*value != *reference && report.verdict) {
        report.verdict = false;
        report.first_disagreement = Disagreement{k, tag};
      }
    }
  }
  return report;
}

}  // namespace vietoris
