#pragma once

#include <map>
#include <string>

#include "klv/laurent.hpp"
#include "klv/partition.hpp"

namespace klv::sym {

using core::DegCaps;
using core::Expo;
using core::LaurentPoly;
using core::Partition;
using core::Rat;
using core::RegistryPtr;

enum class Basis { P, S, E, H, M };

char basis_letter(Basis b);

// Element of the ring of symmetric functions with LaurentPoly coefficients,
// expressed in one classical basis and truncated at total degree `dsym`.
// Truncation is silent: operations drop terms of degree beyond dsym.
class SymFunc {
 public:
  SymFunc() = default;
  SymFunc(RegistryPtr reg, Basis basis, int dsym);
  static SymFunc one(const RegistryPtr& reg, int dsym);  // P-basis constant 1
  static SymFunc basis_elem(const RegistryPtr& reg, Basis b, const Partition& mu, int dsym);

  const RegistryPtr& registry() const { return reg_; }
  Basis basis() const { return basis_; }
  int dsym() const { return dsym_; }
  const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max |mu| over stored terms; 0 if zero

  void add_term(const Partition& mu, const LaurentPoly& c);
  LaurentPoly coeff(const Partition& mu) const;
  SymFunc with_dsym(int dsym) const;  // re-truncate

  SymFunc& operator+=(const SymFunc& o);  // same basis; dsym = min
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  SymFunc operator-() const;
  SymFunc& operator*=(const Rat& c);
  SymFunc scaled(const LaurentPoly& c) const;
  bool operator==(const SymFunc& o) const;  // same basis, same dsym
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RegistryPtr reg_;
  Basis basis_ = Basis::P;
  int dsym_ = 0;
  std::map<Partition, LaurentPoly> terms_;
};

// ---- conversions ----

// Murnaghan-Nakayama character chi^lambda_mu (|lambda| == |mu|).
Rat mn_character(const Partition& lambda, const Partition& mu);

// Change of basis; degrees beyond an internal cap (12 for S/E/H, 10 for M)
// raise InvalidArg.
SymFunc convert(const SymFunc& f, Basis to);

// ---- algebra ----

// Product, computed in the power-sum basis, truncated at dsym.
SymFunc multiply(const SymFunc& f, const SymFunc& g, int dsym);

// Hall inner product, bilinear over coefficients: (p_mu, p_nu) = delta z(mu).
LaurentPoly hall_inner(const SymFunc& f, const SymFunc& g);

// Adjoint of multiplication by f applied to g: p_k^* = k d/dp_k.
SymFunc mult_adjoint(const SymFunc& f, const SymFunc& g);

// Substitution data for the plethystic homomorphism
//    p_k |-> p1_coeff(x->x^k) * p_k + alphabet(x->x^k).
struct PlethInput {
  LaurentPoly p1_coeff;
  LaurentPoly alphabet;
};

SymFunc plethystic_hom(const PlethInput& in, const SymFunc& f);

// Full plethystic evaluation at an alphabet with no p1-summand: the scalar
// phi_A(f), e.g. f(V) for a character V.
LaurentPoly plethystic_eval(const LaurentPoly& alphabet, const SymFunc& f);

// h_r evaluated at an alphabet: h_r[A] = sum_{mu of r} prod_i A(x->x^{mu_i}) / z(mu).
LaurentPoly h_alphabet(const RegistryPtr& reg, const LaurentPoly& alphabet, int r);

// Macdonald involution omega: p_k -> (-1)^{k-1} p_k.
SymFunc omega_involution(const SymFunc& f);

// Omega(p1 * A) = sum_mu p_mu prod_i A(x->x^{mu_i}) / z(mu), degree <= dsym.
SymFunc omega_series(const RegistryPtr& reg, const LaurentPoly& alphabet, int dsym);

// Projection onto Schur functions with at most n rows (result in the S basis).
// Requires the registry to provide at least n AuxX variables.
SymFunc pi_n(const SymFunc& f, int n);

// Inner product on n-variable truncations:
// (1/n!) [constant term of f(1/x) g(x) prod_{i != j} (1 - x_i/x_j)].
LaurentPoly finite_var_inner(const SymFunc& f, const SymFunc& g, int n);

// ---- restricted-expansion machinery (shared with the trace evaluators) ----

// f restricted to the first n AuxX variables, with truncation caps.
LaurentPoly restrict_to_x(const SymFunc& f, int n, const DegCaps& caps);

// p_k restricted: x_1^k + ... + x_n^k.
LaurentPoly power_sum_x(const RegistryPtr& reg, int k, int n);

// prod_{1 <= i < j <= n} (x_i - x_j).
LaurentPoly vandermonde_x(const RegistryPtr& reg, int n);

// Schur coefficients (l(lambda) <= n) of a symmetric polynomial in x_1..x_n,
// read from F * Delta_n at strictly decreasing exponents lambda + delta.
std::map<Partition, LaurentPoly> schur_coeffs_x(const LaurentPoly& f_restricted, int n,
                                                const DegCaps& caps);

// Restriction of Omega(p1 * A) to n variables: prod_{i<=n} prod_t (1 - a_t x_i)^{-c_t}
// over the terms c_t a_t of the alphabet (integer c_t), truncated by caps.
LaurentPoly omega_series_x(const RegistryPtr& reg, const LaurentPoly& alphabet, int n,
                           const DegCaps& caps);

}  // namespace klv::sym
