#include "klv/zseries.hpp"

#include <sstream>

#include "klv/error.hpp"

namespace klv::core {

ZSeries::ZSeries(RegistryPtr reg, int order) : reg_(std::move(reg)), order_(order) {
  if (!reg_) fail(Status::InvalidArg, "ZSeries requires a registry");
  if (order_ < 0) fail(Status::InvalidArg, "ZSeries order must be nonnegative");
  if (reg_->indices(VarRole::TorusZ).size() != 2)
    fail(Status::InvalidArg, "ZSeries requires exactly two torus variables");
}

void ZSeries::add(int a, int b, const LaurentPoly& c) {
  if (a < 0 || b < 0) fail(Status::InvalidArg, "ZSeries exponents must be nonnegative");
  if (a + b > order_ || c.is_zero()) return;
  if (c.degree(VarRole::TorusZ) != 0 || c.min_degree(VarRole::TorusZ) != 0)
    fail(Status::InvalidArg, "ZSeries coefficients must be z-free");
  auto key = std::make_pair(a, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const LaurentPoly* ZSeries::get(int a, int b) const {
  auto it = terms_.find(std::make_pair(a, b));
  return it == terms_.end() ? nullptr : &it->second;
}

namespace {
void check_compatible(const ZSeries& a, const ZSeries& b) {
  if (a.registry() != b.registry())
    fail(Status::InvalidArg, "ZSeries operation mixes registries");
  if (a.order() != b.order())
    fail(Status::InvalidArg, "ZSeries operation mixes truncation orders");
}
}  // namespace

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
  ZSeries r = a;
  r += b;
  return r;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) {
  ZSeries r = a;
  r -= b;
  return r;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  check_compatible(a, b);
  ZSeries r(a.registry(), a.order());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      int x = ka.first + kb.first, y = ka.second + kb.second;
      if (x + y > r.order()) continue;
      r.add(x, y, ca * cb);
    }
  }
  return r;
}

ZSeries& ZSeries::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool ZSeries::operator==(const ZSeries& o) const {
  check_compatible(*this, o);
  return terms_ == o.terms_;
}

ZSeries ZSeries::scaled(const LaurentPoly& c) const {
  ZSeries r(reg_, order_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.add(k.first, k.second, v * c);
  return r;
}

ZSeries ZSeries::truncated(int new_order) const {
  ZSeries r(reg_, new_order);
  for (const auto& [k, c] : terms_)
    if (k.first + k.second <= new_order) r.terms_.emplace(k, c);
  return r;
}

ZSeries ZSeries::from_poly(const LaurentPoly& p, int order) {
  if (!p.registry()) fail(Status::InvalidArg, "from_poly requires a registry");
  ZSeries r(p.registry(), order);
  const auto& zidx = p.registry()->indices(VarRole::TorusZ);
  for (const auto& [e, c] : p.terms()) {
    int a = e[zidx[0]], b = e[zidx[1]];
    if (a < 0 || b < 0)
      fail(Status::PoleAtOrigin, "polynomial has negative torus exponents");
    if (a + b > order) continue;
    Expo ce = e;
    ce[zidx[0]] = 0;
    ce[zidx[1]] = 0;
    r.add(a, b, LaurentPoly::monomial(p.registry(), std::move(ce), c));
  }
  return r;
}

std::string ZSeries::str() const {
  std::ostringstream out;
  out << "O(" << order_ + 1 << ")";
  if (terms_.empty()) return "0 + " + out.str();
  std::ostringstream body;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) body << " + ";
    first = false;
    std::string mono;
    if (k.first) mono += "z1" + (k.first == 1 ? std::string() : "^" + std::to_string(k.first));
    if (k.second) {
      if (!mono.empty()) mono += "*";
      mono += "z2" + (k.second == 1 ? std::string() : "^" + std::to_string(k.second));
    }
    std::string cs = c.str();
    bool needs_parens = cs.find(' ') != std::string::npos;
    if (mono.empty()) {
      body << (needs_parens ? "(" + cs + ")" : cs);
    } else {
      if (cs == "1") {
        body << mono;
      } else if (cs == "-1") {
        body << "-" << mono;
      } else {
        body << (needs_parens ? "(" + cs + ")" : cs) << "*" << mono;
      }
    }
  }
  return body.str() + " + " + out.str();
}

std::string ZSeries::json() const {
  std::ostringstream out;
  out << "{\"order\":" << order_ << ",\"terms\":[";
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << ",";
    first = false;
    out << "{\"z1\":" << k.first << ",\"z2\":" << k.second << ",\"c\":" << c.json() << "}";
  }
  out << "]}";
  return out.str();
}

}  // namespace klv::core
