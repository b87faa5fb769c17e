#pragma once

#include <map>
#include <string>
#include <utility>

#include "klv/laurent.hpp"

namespace klv::core {

// Truncated power series in z1, z2 about the origin, with coefficients that
// are Laurent polynomials in the remaining variables (z-free). Terms of total
// z-degree greater than `order` are not represented.
class ZSeries {
 public:
  ZSeries() = default;
  ZSeries(RegistryPtr reg, int order);

  int order() const { return order_; }
  const RegistryPtr& registry() const { return reg_; }

  void add(int a, int b, const LaurentPoly& c);  // coefficient of z1^a z2^b
  const LaurentPoly* get(int a, int b) const;
  const std::map<std::pair<int, int>, LaurentPoly>& terms() const { return terms_; }

  ZSeries& operator+=(const ZSeries& o);  // orders must match
  ZSeries& operator-=(const ZSeries& o);
  friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  ZSeries& operator*=(const Rat& c);
  bool operator==(const ZSeries& o) const;
  bool operator!=(const ZSeries& o) const { return !(*this == o); }

  bool is_zero() const { return terms_.empty(); }
  ZSeries truncated(int new_order) const;

  // Multiplies every coefficient by a z-free Laurent polynomial.
  ZSeries scaled(const LaurentPoly& c) const;

  // The series of a z-polynomial; negative z-exponents are rejected.
  static ZSeries from_poly(const LaurentPoly& p, int order);

  std::string str() const;
  std::string json() const;

 private:
  RegistryPtr reg_;
  int order_ = 0;
  std::map<std::pair<int, int>, LaurentPoly> terms_;
};

}  // namespace klv::core
