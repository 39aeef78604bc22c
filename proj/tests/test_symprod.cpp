#include <doctest.h>

#include <algorithm>
#include <random>

#include "vietoris/clifford.hpp"
#include "vietoris/symprod.hpp"

using namespace vietoris;

namespace {

Multivector e(unsigned n, unsigned i) { return Multivector::generator(n, i); }
Multivector one(unsigned n) { return Multivector::scalar(n, Rational(1)); }

std::vector<Multivector> generators(unsigned n) {
  std::vector<Multivector> g;
  for (unsigned i = 1; i <= n; ++i) g.push_back(e(n, i));
  return g;
}

}  // namespace

TEST_CASE("quaternion-unit products under the symmetric product") {
  const auto g2 = generators(2);
  // e1 x e2 averages e1e2 and e2e1, which cancel
  CHECK(sym_product(SymFactors<Multivector>(g2, MultiIndex{1, 1}), one(2)).is_zero());
  // e1^2 x e2 = -(1/3) e2
  CHECK(sym_product(SymFactors<Multivector>(g2, MultiIndex{2, 1}), one(2)) ==
        make_rational(-1, 3) * e(2, 2));
  // e1 x e2^2 = -(1/3) e1
  CHECK(sym_product(SymFactors<Multivector>(g2, MultiIndex{1, 2}), one(2)) ==
        make_rational(-1, 3) * e(2, 1));
  // three distinct generators cancel completely
  CHECK(sym_product(SymFactors<Multivector>(generators(3), MultiIndex{1, 1, 1}), one(3))
            .is_zero());
}

TEST_CASE("brute force matches the definition values") {
  const auto g2 = generators(2);
  CHECK(sym_product_bruteforce(SymFactors<Multivector>(g2, MultiIndex{1, 1}), one(2))
            .is_zero());
  CHECK(sym_product_bruteforce(SymFactors<Multivector>(g2, MultiIndex{2, 1}), one(2)) ==
        make_rational(-1, 3) * e(2, 2));
}

TEST_CASE("recursion equals brute force for all |mu| <= 6, n <= 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto base = generators(n);
    for (unsigned deg = 0; deg <= 6; ++deg) {
      for (const MultiIndex& mu : multi_indices_with_degree(n, deg)) {
        const SymFactors<Multivector> f(base, mu);
        CHECK(sym_product(f, one(n)) == sym_product_bruteforce(f, one(n)));
      }
    }
  }
}

TEST_CASE("ordinary powers fall out of the single-factor case") {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto base = generators(n);
    for (unsigned k = 0; k <= 6; ++k) {
      MultiIndex mu([&] {
        std::vector<unsigned> v(n, 0);
        v[0] = k;
        return v;
      }());
      Multivector expected = one(n);
      for (unsigned i = 0; i < k; ++i) expected = expected * base[0];
      CHECK(sym_product(SymFactors<Multivector>(base, mu), one(n)) == expected);
    }
  }
}

TEST_CASE("invariant under permutations of the factor list") {
  std::mt19937 rng(424242);
  const unsigned n = 3;
  const auto base = generators(n);
  for (const MultiIndex& mu : multi_indices_with_degree(n, 5)) {
    const Multivector reference = sym_product(SymFactors<Multivector>(base, mu), one(n));
    std::vector<std::size_t> perm{0, 1, 2};
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Multivector> pbase;
      std::vector<unsigned> pexp;
      for (std::size_t idx : perm) {
        pbase.push_back(base[idx]);
        pexp.push_back(mu[idx]);
      }
      CHECK(sym_product(SymFactors<Multivector>(pbase, MultiIndex(pexp)), one(n)) == reference);
    }
  }
}

TEST_CASE("commuting factors reduce to ordinary products of powers") {
  // scalar factors commute, so a^mu is the plain product of powers
  const std::vector<Multivector> base = {Multivector::scalar(1, make_rational(2, 3)),
                                         Multivector::scalar(1, make_rational(-1, 2))};
  const MultiIndex mu{3, 2};
  const Rational expected = rational_pow(make_rational(2, 3), 3) *
                            rational_pow(make_rational(-1, 2), 2);
  CHECK(sym_product(SymFactors<Multivector>(base, mu), one(1)) ==
        Multivector::scalar(1, expected));
}

TEST_CASE("power expansion identity over generator bases") {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto base = generators(n);
    for (unsigned k = 0; k <= 8; ++k) {
      const auto report = expand_power(base, k, one(n));
      CHECK(report.equal);
    }
  }
  // spot value: (e1+e2)^1 trivially equals the sum itself
  const auto lin = expand_power(generators(2), 1, one(2));
  CHECK(lin.lhs == e(2, 1) + e(2, 2));
}

TEST_CASE("caps are enforced with the cap name in the message") {
  const auto base = generators(2);
  const SymFactors<Multivector> f(base, MultiIndex{5, 4});
  CHECK_THROWS_AS(sym_product_bruteforce(f, one(2)), CapExceeded);
  try {
    sym_product_bruteforce(f, one(2));
  } catch (const CapExceeded& ex) {
    CHECK(ex.cap_name() == "symprod-bruteforce-degree");
  }
  CHECK_THROWS_AS(sym_product(f, one(2), 8), CapExceeded);
}

TEST_CASE("factor/exponent length mismatch is rejected") {
  CHECK_THROWS_AS(SymFactors<Multivector>(generators(2), MultiIndex{1, 1, 1}),
                  std::invalid_argument);
}
