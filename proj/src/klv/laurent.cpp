#include "klv/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "klv/error.hpp"

namespace klv::core {

namespace {

void check_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return;
  if (!a || !b) fail(Status::InvalidArg, "operation mixes null and concrete registries");
  fail(Status::InvalidArg, "operation mixes polynomials over different registries");
}

}  // namespace

LaurentPoly LaurentPoly::constant(RegistryPtr reg, const Rat& c) {
  LaurentPoly p(std::move(reg));
  if (c != 0) p.terms_.emplace(Expo(p.reg_ ? p.reg_->size() : 0, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(RegistryPtr reg, Expo e, const Rat& c) {
  LaurentPoly p(std::move(reg));
  size_t want = p.reg_ ? p.reg_->size() : 0;
  if (e.size() != want) fail(Status::InvalidArg, "exponent vector length mismatch");
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

LaurentPoly LaurentPoly::var(const RegistryPtr& reg, const std::string& name, int32_t power,
                             const Rat& c) {
  if (!reg) fail(Status::InvalidArg, "null registry");
  int idx = reg->find(name);
  if (idx < 0) fail(Status::InvalidArg, "unknown variable: " + name);
  Expo e(reg->size(), 0);
  e[static_cast<size_t>(idx)] = power;
  return monomial(reg, std::move(e), c);
}

Rat LaurentPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentPoly::constant_term() const {
  return coeff(Expo(reg_ ? reg_->size() : 0, 0));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

void LaurentPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_registry(reg_, o.reg_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_registry(reg_, o.reg_);
  for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(reg_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rat(-c));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

int LaurentPoly::role_degree_of(const Expo& e, VarRole role) const {
  int d = 0;
  for (size_t i : reg_->indices(role)) d += e[i];
  return d;
}

LaurentPoly LaurentPoly::mul(const LaurentPoly& a, const LaurentPoly& b, const DegCaps& caps) {
  check_same_registry(a.reg_, b.reg_);
  LaurentPoly r(a.reg_);
  if (a.is_zero() || b.is_zero()) return r;
  size_t nv = a.reg_ ? a.reg_->size() : 0;
  Expo e(nv);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
      if (caps.torus >= 0 && r.role_degree_of(e, VarRole::TorusZ) > caps.torus) continue;
      if (caps.aux_x >= 0 && r.role_degree_of(e, VarRole::AuxX) > caps.aux_x) continue;
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly::mul(a, b, DegCaps{});
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (reg_ != o.reg_) check_same_registry(reg_, o.reg_);
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(reg_, Rat(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    Expo ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

LaurentPoly LaurentPoly::power_substitute(int k) const {
  if (k == 0) fail(Status::InvalidArg, "power_substitute requires nonzero exponent");
  LaurentPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    Expo ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * k;
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, Rat>& values) const {
  if (!reg_ || values.empty()) return *this;
  std::vector<std::pair<size_t, Rat>> assign;
  for (const auto& [name, val] : values) {
    int idx = reg_->find(name);
    if (idx < 0) fail(Status::InvalidArg, "substitute: unknown variable " + name);
    assign.emplace_back(static_cast<size_t>(idx), val);
  }
  LaurentPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    Rat v = c;
    Expo ne = e;
    bool dead = false;
    for (const auto& [idx, val] : assign) {
      int32_t exp = ne[idx];
      ne[idx] = 0;
      if (exp == 0) continue;
      if (val == 0) {
        if (exp < 0) fail(Status::InvalidArg, "substitute: zero value with negative exponent");
        dead = true;
        break;
      }
      v *= rat_pow(val, exp);
    }
    if (!dead) r.add_term(ne, v);
  }
  return r;
}

Rat LaurentPoly::evaluate(const std::map<std::string, Rat>& values) const {
  LaurentPoly s = substitute(values);
  if (!s.is_constant()) fail(Status::InvalidArg, "evaluate: unassigned variables remain");
  return s.constant_term();
}

int LaurentPoly::degree(VarRole role) const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = role_degree_of(e, role);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

int LaurentPoly::min_degree(VarRole role) const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = role_degree_of(e, role);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

bool LaurentPoly::has_negative_exponent(VarRole role) const {
  if (!reg_) return false;
  for (const auto& [e, c] : terms_)
    for (size_t i : reg_->indices(role))
      if (e[i] < 0) return true;
  return false;
}

LaurentPoly LaurentPoly::truncate(const DegCaps& caps) const {
  if (caps.unlimited()) return *this;
  LaurentPoly r(reg_);
  for (const auto& [e, c] : terms_) {
    if (caps.torus >= 0 && role_degree_of(e, VarRole::TorusZ) > caps.torus) continue;
    if (caps.aux_x >= 0 && role_degree_of(e, VarRole::AuxX) > caps.aux_x) continue;
    r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly LaurentPoly::role_degree_part(VarRole role, int d) const {
  LaurentPoly r(reg_);
  for (const auto& [e, c] : terms_)
    if (role_degree_of(e, role) == d) r.terms_.emplace(e, c);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = rat_abs(c);
    bool neg = c < 0;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += reg_->name(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mono.empty()) {
      out << rat_str(a);
    } else {
      if (a != 1) out << rat_str(a) << "*";
      out << mono;
    }
  }
  return out.str();
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string LaurentPoly::json() const {
  std::ostringstream out;
  out << "{\"vars\":[";
  size_t nv = reg_ ? reg_->size() : 0;
  for (size_t i = 0; i < nv; ++i) {
    if (i) out << ",";
    out << "\"" << json_escape(reg_->name(i)) << "\"";
  }
  out << "],\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ",";
    first = false;
    out << "{\"e\":[";
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) out << ",";
      out << e[i];
    }
    out << "],\"c\":\"" << rat_str(c) << "\"}";
  }
  out << "]}";
  return out.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) fail(Status::InvalidArg, "division by zero polynomial");
  check_same_registry(f.registry(), g.registry());
  if (f.is_zero()) return LaurentPoly(f.registry());
  size_t nv = f.registry() ? f.registry()->size() : 0;

  // Shift both operands into the polynomial ring (all exponents >= 0); the
  // net monomial shift is restored at the end (it is a unit).
  auto min_expo = [nv](const LaurentPoly& p) {
    Expo m(nv, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      for (size_t i = 0; i < nv; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  };
  Expo mf = min_expo(f), mg = min_expo(g);
  auto shift = [nv](const LaurentPoly& p, const Expo& by, int sign) {
    LaurentPoly r(p.registry());
    for (const auto& [e, c] : p.terms()) {
      Expo ne(nv);
      for (size_t i = 0; i < nv; ++i) ne[i] = e[i] + sign * by[i];
      r.add_term(ne, c);
    }
    return r;
  };
  LaurentPoly fs = shift(f, mf, -1), gs = shift(g, mg, -1);

  // Single-divisor multivariate division with lexicographic leading terms;
  // any leading-term mismatch proves indivisibility.
  const auto& glead = *gs.terms().rbegin();
  LaurentPoly q(f.registry());
  LaurentPoly rem = fs;
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    Expo qe(nv);
    for (size_t i = 0; i < nv; ++i) {
      qe[i] = rlead.first[i] - glead.first[i];
      if (qe[i] < 0) return std::nullopt;
    }
    Rat qc = rlead.second / glead.second;
    LaurentPoly qt = LaurentPoly::monomial(f.registry(), qe, qc);
    q += qt;
    rem -= qt * gs;
  }
  Expo back(nv);
  for (size_t i = 0; i < nv; ++i) back[i] = mf[i] - mg[i];
  return q * LaurentPoly::monomial(f.registry(), back, Rat(1));
}

}  // namespace klv::core
