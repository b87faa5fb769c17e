#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klv/rational.hpp"
#include "klv/registry.hpp"

namespace klv::core {

// Exponent vector, one entry per registry variable. Entries may be negative.
using Expo = std::vector<int32_t>;

// Degree caps applied during multiplication/truncation; -1 means unlimited.
// A cap bounds the total degree over all variables of the given role.
struct DegCaps {
  int torus = -1;
  int aux_x = -1;
  bool unlimited() const { return torus < 0 && aux_x < 0; }
};

// Multivariate Laurent polynomial with exact rational coefficients over a
// shared variable registry. Terms are kept in lexicographic exponent order,
// which makes printing and iteration deterministic.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero over the null registry; usable as placeholder
  explicit LaurentPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

  static LaurentPoly constant(RegistryPtr reg, const Rat& c);
  static LaurentPoly monomial(RegistryPtr reg, Expo e, const Rat& c);
  static LaurentPoly var(const RegistryPtr& reg, const std::string& name, int32_t power = 1,
                         const Rat& c = Rat(1));

  const RegistryPtr& registry() const { return reg_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  Rat coeff(const Expo& e) const;
  Rat constant_term() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator*=(const Rat& c);
  friend LaurentPoly operator*(const LaurentPoly& a, const Rat& c) {
    LaurentPoly r = a;
    r *= c;
    return r;
  }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(unsigned e) const;

  // Product with degree caps; terms exceeding a cap are dropped (truncation).
  static LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b, const DegCaps& caps);

  // x -> x^{-1} for every variable.
  LaurentPoly conjugate() const;
  // x -> x^k for every variable; k must be nonzero.
  LaurentPoly power_substitute(int k) const;

  // Substitute rational values for the named variables (others untouched).
  // A variable substituted with 0 must not occur with a negative exponent.
  LaurentPoly substitute(const std::map<std::string, Rat>& values) const;

  // Full evaluation; every variable occurring in the polynomial must be assigned.
  Rat evaluate(const std::map<std::string, Rat>& values) const;

  // Max/min total degree over variables of the role; 0 for the zero polynomial.
  int degree(VarRole role) const;
  int min_degree(VarRole role) const;
  bool has_negative_exponent(VarRole role) const;

  LaurentPoly truncate(const DegCaps& caps) const;

  // Sum of the terms whose total degree over `role` equals d.
  LaurentPoly role_degree_part(VarRole role, int d) const;

  std::string str() const;
  std::string json() const;

  // Internal-ish: merge a single term (drops resulting zeros).
  void add_term(const Expo& e, const Rat& c);

 private:
  int role_degree_of(const Expo& e, VarRole role) const;
  RegistryPtr reg_;
  std::map<Expo, Rat> terms_;
};

// Exact division in the Laurent polynomial ring: f/g when g divides f, else
// nullopt. g must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

// Escapes a string for embedding in JSON output.
std::string json_escape(const std::string& s);

}  // namespace klv::core
