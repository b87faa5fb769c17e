#pragma once

#include <map>
#include <string>

#include "klv/laurent.hpp"
#include "klv/zseries.hpp"

namespace klv::core {

// Quotient of Laurent polynomials. The denominator is held as a multiset of
// canonically normalized factors (monic lexicographic lead, nonnegative
// exponents with per-variable minimum zero); the unit and scalar parts of each
// inserted factor are folded into the numerator. Nothing is ever reduced;
// equality is decided by cross-multiplication.
//
// The factored form is what makes expand_at_origin exact: a factor whose
// z-constant part vanishes must divide the combined numerator or the function
// genuinely has a pole at the origin. (For the binomial factors produced by
// the character calculus such factors are quasi-homogeneous, so every
// irreducible component vanishes at the origin and whole-factor divisibility
// is the correct test. Callers handing a composite denominator that mixes
// vanishing and non-vanishing irreducible pieces in one factor should split
// it themselves.)
class RatFunc {
 public:
  RatFunc() = default;  // zero over the null registry
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)) {}
  RatFunc(LaurentPoly num, const LaurentPoly& den);
  static RatFunc from_poly(LaurentPoly p) { return RatFunc(std::move(p)); }

  const LaurentPoly& num() const { return num_; }
  LaurentPoly den() const;  // expanded factor product
  const RegistryPtr& registry() const { return num_.registry(); }
  bool is_zero() const { return num_.is_zero(); }

  void mul_num(const LaurentPoly& p);
  // Multiplies by 1/f^mult; mult < 0 multiplies f^{-mult} into the numerator.
  void mul_den_factor(const LaurentPoly& f, int mult = 1);

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc conjugate() const;
  RatFunc substitute(const std::map<std::string, Rat>& values) const;
  Rat evaluate(const std::map<std::string, Rat>& values) const;

  // Power series at z1 = z2 = 0 to total order `order`; throws PoleAtOrigin
  // when the function has a pole there.
  ZSeries expand_at_origin(int order) const;

  std::string str() const;
  std::string json() const;

 private:
  // key: canonical factor serialization; value: (factor, multiplicity > 0)
  using FactorMap = std::map<std::string, std::pair<LaurentPoly, int>>;
  RatFunc flipped() const;  // reciprocal

  LaurentPoly num_;
  FactorMap den_;
};

// Series inverse of a z-polynomial whose z-constant part is a unit monomial.
ZSeries series_inverse(const LaurentPoly& p, int order);

}  // namespace klv::core
