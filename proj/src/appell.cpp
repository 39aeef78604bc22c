#include "vietoris/appell.hpp"

#include <numeric>

#include "vietoris/sequence.hpp"
#include "vietoris/symprod.hpp"

namespace vietoris {

namespace {

unsigned total_degree(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // within a degree: higher x_0 exponent first, then x_1, ...
  return a > b;
}

MvPolynomial::MvPolynomial(unsigned n) : n_(n) {}

MvPolynomial MvPolynomial::constant(Multivector c) {
  MvPolynomial p(c.dimension());
  p.add_term(ExpVec(c.dimension() + 1, 0), c);
  return p;
}

MvPolynomial MvPolynomial::one(unsigned n) {
  return constant(Multivector::scalar(n, Rational(1)));
}

MvPolynomial MvPolynomial::variable(unsigned n, unsigned i) {
  if (i > n) throw std::invalid_argument("MvPolynomial::variable: index out of range");
  MvPolynomial p(n);
  ExpVec e(n + 1, 0);
  e[i] = 1;
  p.add_term(e, Multivector::scalar(n, Rational(1)));
  return p;
}

int MvPolynomial::degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool MvPolynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  return total_degree(terms_.rbegin()->first) == d;
}

MvPolynomial MvPolynomial::operator-() const {
  MvPolynomial r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MvPolynomial& MvPolynomial::operator+=(const MvPolynomial& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("MvPolynomial: ambient dimension mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MvPolynomial& MvPolynomial::operator-=(const MvPolynomial& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("MvPolynomial: ambient dimension mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("MvPolynomial: ambient dimension mismatch");
  MvPolynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MvPolynomial operator*(const Rational& s, const MvPolynomial& p) {
  MvPolynomial r(p.n_);
  if (s == 0) return r;
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
  return r;
}

MvPolynomial operator*(const Multivector& m, const MvPolynomial& p) {
  MvPolynomial r(p.n_);
  for (const auto& [e, c] : p.terms_) r.add_term(e, m * c);
  return r;
}

MvPolynomial operator*(const MvPolynomial& p, const Multivector& m) {
  MvPolynomial r(p.n_);
  for (const auto& [e, c] : p.terms_) r.add_term(e, c * m);
  return r;
}

MvPolynomial MvPolynomial::pow(unsigned k) const {
  MvPolynomial r = one(n_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

MvPolynomial MvPolynomial::derivative(unsigned var) const {
  if (var > n_) throw std::invalid_argument("MvPolynomial::derivative: index out of range");
  MvPolynomial r(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec de = e;
    --de[var];
    r.add_term(de, Rational(e[var]) * c);
  }
  return r;
}

Multivector MvPolynomial::evaluate(const std::vector<Rational>& coords) const {
  if (coords.size() != n_ + 1)
    throw std::invalid_argument("MvPolynomial::evaluate: expected n+1 coordinates");
  Multivector acc(n_);
  for (const auto& [e, c] : terms_) {
    Rational scale(1);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (e[i] != 0) scale *= rational_pow(coords[i], e[i]);
    acc += scale * c;
  }
  return acc;
}

Multivector MvPolynomial::evaluate(const Paravector& point) const {
  if (point.dimension() != n_)
    throw std::invalid_argument("MvPolynomial::evaluate: paravector dimension mismatch");
  std::vector<Rational> coords;
  coords.reserve(n_ + 1);
  coords.push_back(point.x0);
  coords.insert(coords.end(), point.xv.begin(), point.xv.end());
  return evaluate(coords);
}

std::string MvPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }

    char sign = '+';
    std::string body;
    if (c.is_scalar()) {
      Rational v = c.scalar_part();
      if (v < 0) {
        sign = '-';
        v = -v;
      }
      if (mono.empty())
        body = vietoris::to_string(v);
      else if (v == 1)
        body = mono;
      else
        body = vietoris::to_string(v) + " * " + mono;
    } else {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += " * " + mono;
    }

    if (out.empty())
      out = (sign == '-' ? "-" : "") + body;
    else
      out += std::string(" ") + sign + " " + body;
  }
  return out;
}

void MvPolynomial::add_term(const ExpVec& exps, const Multivector& coeff) {
  if (coeff.is_zero()) return;
  if (exps.size() != n_ + 1)
    throw std::invalid_argument("MvPolynomial: exponent vector length mismatch");
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HyperVar HyperVar::make(unsigned n, unsigned k) {
  if (k == 0 || k > n) throw std::invalid_argument("HyperVar::make: index out of range");
  MvPolynomial z = MvPolynomial::variable(n, k) -
                   MvPolynomial::constant(Multivector::generator(n, k)) *
                       MvPolynomial::variable(n, 0);
  return HyperVar{k, std::move(z)};
}

MvPolynomial paravector_poly(unsigned n) {
  MvPolynomial p = MvPolynomial::variable(n, 0);
  for (unsigned i = 1; i <= n; ++i)
    p += MvPolynomial::constant(Multivector::generator(n, i)) * MvPolynomial::variable(n, i);
  return p;
}

MvPolynomial paravector_conj_poly(unsigned n) {
  return MvPolynomial::variable(n, 0) - vector_part_poly(n);
}

MvPolynomial vector_part_poly(unsigned n) {
  MvPolynomial p(n);
  for (unsigned i = 1; i <= n; ++i)
    p += MvPolynomial::constant(Multivector::generator(n, i)) * MvPolynomial::variable(n, i);
  return p;
}

const char* repr_tag(PolyRepr repr) {
  switch (repr) {
    case PolyRepr::XXbar:
      return "x-xbar";
    case PolyRepr::X0Vec:
      return "x0-vec";
    case PolyRepr::HyperZ:
      return "hyper-z";
  }
  throw std::logic_error("repr_tag: unknown representation");
}

namespace {

MvPolynomial build_xxbar(unsigned n, unsigned k) {
  const MvPolynomial x = paravector_poly(n);
  const MvPolynomial xb = paravector_conj_poly(n);
  std::vector<MvPolynomial> xpow{MvPolynomial::one(n)}, xbpow{MvPolynomial::one(n)};
  for (unsigned j = 1; j <= k; ++j) {
    xpow.push_back(xpow.back() * x);
    xbpow.push_back(xbpow.back() * xb);
  }
  MvPolynomial p(n);
  for (unsigned s = 0; s <= k; ++s) p += t_coeff(n, k, s) * (xpow[k - s] * xbpow[s]);
  return p;
}

MvPolynomial build_x0vec(unsigned n, unsigned k) {
  const MvPolynomial x0 = MvPolynomial::variable(n, 0);
  const MvPolynomial xv = vector_part_poly(n);
  std::vector<MvPolynomial> x0pow{MvPolynomial::one(n)}, xvpow{MvPolynomial::one(n)};
  for (unsigned j = 1; j <= k; ++j) {
    x0pow.push_back(x0pow.back() * x0);
    xvpow.push_back(xvpow.back() * xv);
  }
  MvPolynomial p(n);
  for (unsigned s = 0; s <= k; ++s)
    p += (binomial(k, s) * c_pochhammer(n, s)) * (x0pow[k - s] * xvpow[s]);
  return p;
}

MvPolynomial build_hyperz(unsigned n, unsigned k, unsigned cap) {
  if (k > cap) throw CapExceeded("appell-hyper-z-degree", k, cap);

  std::vector<MvPolynomial> zbase;
  std::vector<Multivector> ebase;
  zbase.reserve(n);
  ebase.reserve(n);
  for (unsigned i = 1; i <= n; ++i) {
    zbase.push_back(HyperVar::make(n, i).expansion);
    ebase.push_back(Multivector::generator(n, i));
  }
  SymProductContext<MvPolynomial> zctx(zbase, MvPolynomial::one(n), cap);
  SymProductContext<Multivector> ectx(ebase, Multivector::scalar(n, Rational(1)), cap);

  MvPolynomial sum(n);
  for (const MultiIndex& nu : multi_indices_with_degree(n, k))
    sum += multinomial(k, nu) * (zctx.power(nu) * ectx.power(nu));
  return c_pochhammer(n, k) * sum;
}

}  // namespace

MvPolynomial build_P(unsigned n, unsigned k, PolyRepr repr, unsigned hyper_degree_cap) {
  if (n == 0) throw std::invalid_argument("build_P: n must be >= 1");
  switch (repr) {
    case PolyRepr::XXbar:
      return build_xxbar(n, k);
    case PolyRepr::X0Vec:
      return build_x0vec(n, k);
    case PolyRepr::HyperZ:
      return build_hyperz(n, k, hyper_degree_cap);
  }
  throw std::logic_error("build_P: unknown representation");
}

MvPolynomial cr_apply(const MvPolynomial& p, CROperator op) {
  const unsigned n = p.dimension();
  MvPolynomial dv(n);
  for (unsigned i = 1; i <= n; ++i) dv += Multivector::generator(n, i) * p.derivative(i);
  MvPolynomial combined =
      (op == CROperator::Dbar) ? p.derivative(0) + dv : p.derivative(0) - dv;
  return make_rational(1, 2) * combined;
}

ReprEquivalence repr_equivalence(unsigned n, unsigned k, unsigned hyper_degree_cap) {
  ReprEquivalence result;
  std::vector<std::pair<PolyRepr, MvPolynomial>> built;
  built.emplace_back(PolyRepr::XXbar, build_P(n, k, PolyRepr::XXbar));
  built.emplace_back(PolyRepr::X0Vec, build_P(n, k, PolyRepr::X0Vec));
  if (k <= hyper_degree_cap)
    built.emplace_back(PolyRepr::HyperZ, build_P(n, k, PolyRepr::HyperZ, hyper_degree_cap));

  result.equal = true;
  for (const auto& [repr, poly] : built) {
    result.representations_compared.emplace_back(repr_tag(repr));
    if (!(poly == built.front().second)) {
      result.equal = false;
      if (result.detail.empty())
        result.detail = std::string(repr_tag(repr)) + " differs from " +
                        repr_tag(built.front().first);
    }
  }
  return result;
}

}  // namespace vietoris
