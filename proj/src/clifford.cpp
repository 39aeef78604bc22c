#include "vietoris/clifford.hpp"

#include <bit>

namespace vietoris {

unsigned Blade::grade() const noexcept { return std::popcount(mask); }

std::string Blade::to_string() const {
  std::string s = "e{";
  bool first = true;
  for (unsigned i = 0; i < kMaxBladeDimension; ++i) {
    if (mask & (BladeMask{1} << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  }
  s += '}';
  return s;
}

std::pair<BladeMask, int> blade_mul(BladeMask a, BladeMask b) noexcept {
  // Transpositions needed to merge: for each index in a, count the indices in b
  // strictly below it.
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  // Each shared index contracts with e_k^2 = -1.
  swaps += std::popcount(a & b);
  const int sign = (swaps % 2 == 0) ? 1 : -1;
  return {a ^ b, sign};
}

Multivector::Multivector(unsigned n) : n_(n) {
  if (n > kMaxBladeDimension)
    throw std::invalid_argument("Multivector: dimension exceeds mask width");
}

Multivector Multivector::scalar(unsigned n, Rational value) {
  Multivector m(n);
  m.add_term(0, value);
  return m;
}

Multivector Multivector::generator(unsigned n, unsigned i) {
  if (i == 0 || i > n) throw std::invalid_argument("Multivector::generator: index out of range");
  Multivector m(n);
  m.add_term(BladeMask{1} << (i - 1), Rational(1));
  return m;
}

Multivector Multivector::blade(unsigned n, BladeMask mask, Rational coeff) {
  Multivector m(n);
  if ((mask >> n) != 0)
    throw std::invalid_argument("Multivector::blade: mask outside ambient dimension");
  m.add_term(mask, coeff);
  return m;
}

Rational Multivector::coefficient(BladeMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Multivector::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Multivector Multivector::operator-() const {
  Multivector r(n_);
  for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
  return r;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_dimension(rhs);
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_dimension(rhs);
  for (const auto& [mask, c] : rhs.terms_) add_term(mask, -c);
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  a.require_same_dimension(b);
  Multivector r(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [mask, sign] = blade_mul(ma, mb);
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(mask, c);
    }
  }
  return r;
}

Multivector operator*(const Rational& s, const Multivector& m) {
  Multivector r(m.n_);
  if (s == 0) return r;
  for (const auto& [mask, c] : m.terms_) r.terms_.emplace(mask, s * c);
  return r;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : terms_) {
    const Rational abs_c = c < 0 ? Rational(-c) : c;
    std::string body;
    if (mask == 0) {
      body = vietoris::to_string(abs_c);
    } else if (abs_c == 1) {
      body = Blade{mask}.to_string();
    } else {
      body = vietoris::to_string(abs_c) + " * " + Blade{mask}.to_string();
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

void Multivector::add_term(BladeMask mask, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Multivector::require_same_dimension(const Multivector& other) const {
  if (n_ != other.n_)
    throw std::invalid_argument("Multivector: ambient dimension mismatch");
}

Paravector Paravector::conjugate() const {
  Paravector p{x0, xv};
  for (auto& c : p.xv) c = -c;
  return p;
}

Rational Paravector::norm_sq() const {
  Rational s = x0 * x0;
  for (const auto& c : xv) s += c * c;
  return s;
}

Multivector Paravector::embed() const {
  Multivector m = Multivector::scalar(dimension(), x0);
  for (unsigned i = 0; i < xv.size(); ++i)
    m += Multivector::blade(dimension(), BladeMask{1} << i, xv[i]);
  return m;
}

}  // namespace vietoris
