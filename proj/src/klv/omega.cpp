#include "klv/omega.hpp"

#include "klv/error.hpp"

namespace klv::core {

OmegaFactors omega_factors(const LaurentPoly& f) {
  OmegaFactors out;
  for (const auto& [e, c] : f.terms()) {
    if (!rat_is_integer(c))
      fail(Status::InvalidArg, "omega requires integer multiplicities, got " + rat_str(c));
    if (!c.get_num().fits_sint_p()) fail(Status::InvalidArg, "omega multiplicity out of range");
    int mult = static_cast<int>(c.get_num().get_si());
    bool constant = true;
    for (int32_t x : e)
      if (x != 0) constant = false;
    if (constant) {
      if (mult > 0)
        fail(Status::DivergentOmega, "character has positive constant term " + std::to_string(mult));
      out.zero = true;  // (1 - 1)^{-c} with c < 0: zero of order -c
      continue;
    }
    out.factors.emplace_back(LaurentPoly::monomial(f.registry(), e, Rat(1)), mult);
  }
  return out;
}

RatFunc omega_assemble(const RegistryPtr& reg, const OmegaFactors& of) {
  if (of.zero) return RatFunc(LaurentPoly(reg));
  RatFunc r(LaurentPoly::constant(reg, Rat(1)));
  for (const auto& [m, c] : of.factors) {
    LaurentPoly one_minus = LaurentPoly::constant(reg, Rat(1)) - m;
    if (one_minus.is_zero())
      fail(Status::InvalidArg, "omega factor (1 - m) vanishes identically");
    r.mul_den_factor(one_minus, c);
  }
  return r;
}

RatFunc omega_product(const LaurentPoly& f) {
  return omega_assemble(f.registry(), omega_factors(f));
}

}  // namespace klv::core
