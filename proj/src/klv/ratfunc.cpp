#include "klv/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "klv/error.hpp"

namespace klv::core {

namespace {

// Per-variable minimum exponents over all terms.
Expo min_exponents(const LaurentPoly& p) {
  size_t nv = p.registry() ? p.registry()->size() : 0;
  Expo m(nv, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < nv; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

LaurentPoly shifted(const LaurentPoly& p, const Expo& by, int sign) {
  size_t nv = p.registry() ? p.registry()->size() : 0;
  LaurentPoly r(p.registry());
  for (const auto& [e, c] : p.terms()) {
    Expo ne(nv);
    for (size_t i = 0; i < nv; ++i) ne[i] = e[i] + sign * by[i];
    r.add_term(ne, c);
  }
  return r;
}

// z-constant part of p (terms with zero exponent on every torus variable),
// as a polynomial in the remaining variables.
LaurentPoly z_constant_part(const LaurentPoly& p) {
  LaurentPoly r(p.registry());
  if (!p.registry()) return r;
  const auto& zidx = p.registry()->indices(VarRole::TorusZ);
  for (const auto& [e, c] : p.terms()) {
    bool zfree = true;
    for (size_t i : zidx)
      if (e[i] != 0) zfree = false;
    if (zfree) r.add_term(e, c);
  }
  return r;
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num, const LaurentPoly& den) : num_(std::move(num)) {
  mul_den_factor(den, 1);
}

LaurentPoly RatFunc::den() const {
  LaurentPoly d = LaurentPoly::constant(num_.registry(), Rat(1));
  for (const auto& [key, fm] : den_)
    for (int i = 0; i < fm.second; ++i) d = d * fm.first;
  return d;
}

void RatFunc::mul_num(const LaurentPoly& p) { num_ = num_ * p; }

void RatFunc::mul_den_factor(const LaurentPoly& f, int mult) {
  if (f.is_zero()) fail(Status::InvalidArg, "zero denominator factor");
  if (mult == 0 || num_.is_zero()) return;
  if (mult < 0) {
    num_ = num_ * f.pow(static_cast<unsigned>(-mult));
    return;
  }
  // Normalize: shift exponents to per-variable minimum zero and make the
  // lexicographic leading coefficient one; the removed unit and scalar are
  // folded into the numerator.
  Expo m = min_exponents(f);
  LaurentPoly norm = shifted(f, m, -1);
  Rat lead = norm.terms().rbegin()->second;
  norm *= Rat(1) / lead;
  if (norm.is_constant()) {
    // Whole factor was unit * scalar.
    Expo neg(m.size());
    for (size_t i = 0; i < m.size(); ++i) neg[i] = -m[i] * mult;
    num_ = num_ * LaurentPoly::monomial(num_.registry(), std::move(neg),
                                        rat_pow(lead, -mult));
    return;
  }
  Expo neg(m.size());
  for (size_t i = 0; i < m.size(); ++i) neg[i] = -m[i] * mult;
  num_ = num_ * LaurentPoly::monomial(num_.registry(), std::move(neg), rat_pow(lead, -mult));
  std::string key = norm.json();
  auto it = den_.find(key);
  if (it == den_.end())
    den_.emplace(std::move(key), std::make_pair(std::move(norm), mult));
  else
    it->second.second += mult;
}

RatFunc RatFunc::flipped() const {
  if (num_.is_zero()) fail(Status::InvalidArg, "division by zero rational function");
  RatFunc r;
  r.num_ = LaurentPoly::constant(num_.registry(), Rat(1));
  for (const auto& [key, fm] : den_) r.num_ = r.num_ * fm.first.pow(static_cast<unsigned>(fm.second));
  r.mul_den_factor(num_, 1);
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) return r;
  r.den_ = a.den_;
  for (const auto& [key, fm] : b.den_) {
    auto it = r.den_.find(key);
    if (it == r.den_.end())
      r.den_.emplace(key, fm);
    else
      it->second.second += fm.second;
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.flipped(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.num_.is_zero()) return b;
  if (b.num_.is_zero()) return a;
  // Common denominator = factorwise max multiplicity.
  RatFunc r;
  r.den_ = a.den_;
  for (const auto& [key, fm] : b.den_) {
    auto it = r.den_.find(key);
    if (it == r.den_.end())
      r.den_.emplace(key, fm);
    else
      it->second.second = std::max(it->second.second, fm.second);
  }
  LaurentPoly na = a.num_, nb = b.num_;
  for (const auto& [key, fm] : r.den_) {
    auto ia = a.den_.find(key);
    int ma = ia == a.den_.end() ? 0 : ia->second.second;
    auto ib = b.den_.find(key);
    int mb = ib == b.den_.end() ? 0 : ib->second.second;
    if (fm.second > ma) na = na * fm.first.pow(static_cast<unsigned>(fm.second - ma));
    if (fm.second > mb) nb = nb * fm.first.pow(static_cast<unsigned>(fm.second - mb));
  }
  r.num_ = na + nb;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ * o.den() == o.num_ * den();
}

RatFunc RatFunc::conjugate() const {
  RatFunc r;
  r.num_ = num_.conjugate();
  for (const auto& [key, fm] : den_) r.mul_den_factor(fm.first.conjugate(), fm.second);
  return r;
}

RatFunc RatFunc::substitute(const std::map<std::string, Rat>& values) const {
  RatFunc r;
  r.num_ = num_.substitute(values);
  for (const auto& [key, fm] : den_) {
    LaurentPoly f = fm.first.substitute(values);
    if (f.is_zero())
      fail(Status::InvalidArg, "substitution makes a denominator factor vanish");
    r.mul_den_factor(f, fm.second);
  }
  return r;
}

Rat RatFunc::evaluate(const std::map<std::string, Rat>& values) const {
  Rat n = num_.evaluate(values);
  Rat d(1);
  for (const auto& [key, fm] : den_) {
    Rat fv = fm.first.evaluate(values);
    if (fv == 0) fail(Status::InvalidArg, "denominator vanishes at evaluation point");
    d *= rat_pow(fv, fm.second);
  }
  return n / d;
}

ZSeries series_inverse(const LaurentPoly& p, int order) {
  LaurentPoly c0 = z_constant_part(p);
  if (!c0.is_monomial())
    fail(Status::InvalidArg,
         "series inverse requires a unit z-constant part (specialize framing variables)");
  // p = c0 (1 + g/c0) with g of positive total z-degree.
  const auto& [ue, uc] = *c0.terms().begin();
  Expo inv_e(ue.size());
  for (size_t i = 0; i < ue.size(); ++i) inv_e[i] = -ue[i];
  LaurentPoly u = LaurentPoly::monomial(p.registry(), std::move(inv_e), Rat(1) / uc);
  LaurentPoly g = p - c0;
  if (g.min_degree(VarRole::TorusZ) < 1 || g.has_negative_exponent(VarRole::TorusZ))
    fail(Status::InvalidArg, "series inverse requires positive-degree correction terms");
  ZSeries s = ZSeries::from_poly(g * u, order);
  s *= Rat(-1);
  ZSeries acc(p.registry(), order);
  acc.add(0, 0, LaurentPoly::constant(p.registry(), Rat(1)));
  ZSeries pw = s;
  while (!pw.is_zero()) {
    acc += pw;
    pw = pw * s;
  }
  return acc.scaled(u);
}

ZSeries RatFunc::expand_at_origin(int order) const {
  if (!num_.registry()) fail(Status::InvalidArg, "expand_at_origin on null rational function");
  ZSeries out(num_.registry(), order);
  if (num_.is_zero()) return out;

  LaurentPoly n = num_;
  std::vector<std::pair<LaurentPoly, int>> good;
  for (const auto& [key, fm] : den_) {
    const LaurentPoly& f = fm.first;
    LaurentPoly c0 = z_constant_part(f);
    if (c0.is_zero()) {
      // Vanishes identically at the origin: must divide the numerator.
      for (int i = 0; i < fm.second; ++i) {
        auto q = divide_exact(n, f);
        if (!q) fail(Status::PoleAtOrigin, "denominator factor does not cancel: " + f.str());
        n = *q;
      }
    } else {
      good.push_back(fm);
    }
  }
  if (n.has_negative_exponent(VarRole::TorusZ))
    fail(Status::PoleAtOrigin, "negative torus exponent survives in the numerator");

  ZSeries s = ZSeries::from_poly(n, order);
  for (const auto& [f, m] : good) {
    ZSeries inv = series_inverse(f, order);
    for (int i = 0; i < m; ++i) s = s * inv;
  }
  return s;
}

std::string RatFunc::str() const {
  if (den_.empty()) return num_.str();
  std::ostringstream out;
  out << "(" << num_.str() << ") / (";
  bool first = true;
  for (const auto& [key, fm] : den_) {
    if (!first) out << " * ";
    first = false;
    out << "(" << fm.first.str() << ")";
    if (fm.second != 1) out << "^" << fm.second;
  }
  out << ")";
  return out.str();
}

std::string RatFunc::json() const {
  std::ostringstream out;
  out << "{\"num\":" << num_.json() << ",\"den\":[";
  bool first = true;
  for (const auto& [key, fm] : den_) {
    if (!first) out << ",";
    first = false;
    out << "{\"factor\":" << fm.first.json() << ",\"mult\":" << fm.second << "}";
  }
  out << "]}";
  return out.str();
}

}  // namespace klv::core
