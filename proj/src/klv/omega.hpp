#pragma once

#include <utility>
#include <vector>

#include "klv/ratfunc.hpp"

namespace klv::core {

// Factored value of the omega product applied to a virtual character: each
// entry (m, c) contributes (1 - m)^{-c}, where m is a single monomial of the
// character and c its integer multiplicity. `zero` is set when the constant
// term of the character is negative (a positive power of (1 - 1) = 0 appears
// in the numerator).
struct OmegaFactors {
  bool zero = false;
  std::vector<std::pair<LaurentPoly, int>> factors;
};

// Decomposes omega of a Laurent polynomial with integer coefficients.
// Constant term > 0 raises DivergentOmega; < 0 yields the zero value.
OmegaFactors omega_factors(const LaurentPoly& f);

// Assembled rational function; zero when the factored form is zero.
RatFunc omega_product(const LaurentPoly& f);

// Assembles a factor list (e.g. a specialized one) into a rational function.
RatFunc omega_assemble(const RegistryPtr& reg, const OmegaFactors& of);

}  // namespace klv::core
