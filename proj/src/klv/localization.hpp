#pragma once

#include <map>
#include <string>
#include <vector>

#include "klv/laurent.hpp"
#include "klv/partition.hpp"
#include "klv/ratfunc.hpp"
#include "klv/symfunc.hpp"

namespace klv::loc {

using core::LaurentPoly;
using core::Partition;
using core::PartitionTuple;
using core::Rat;
using core::RatFunc;
using core::RegistryPtr;

// Finite torus representation given by its multiset of weights, each a
// one-term Laurent monomial (symbolic, e.g. z1*w1, or a rational constant
// when the weights have been specialized). The character is the sum.
class TorusRep {
 public:
  TorusRep(RegistryPtr reg, std::vector<LaurentPoly> weights);
  static TorusRep from_values(const RegistryPtr& reg, const std::vector<Rat>& values);

  const RegistryPtr& registry() const { return reg_; }
  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<LaurentPoly>& weights() const { return weights_; }
  // True when no weight repeats; required by the Grassmannian localization sum.
  bool distinct() const { return distinct_; }

  LaurentPoly character() const;       // sum of the weights
  TorusRep conjugate() const;          // all weights inverted
  LaurentPoly power_sum(int k) const;  // sum of k-th powers of the weights, k != 0
  LaurentPoly det() const;             // product of all weights (e_N)
  LaurentPoly elementary(int a) const; // e_a of the weights
  LaurentPoly complete(int r) const;   // h_r of the weights
  // phi_X(f): evaluate a symmetric function at this weight alphabet. Correct
  // for arbitrary monomial weights, including rational constants.
  LaurentPoly eval(const sym::SymFunc& f) const;

 private:
  RegistryPtr reg_;
  std::vector<LaurentPoly> weights_;
  bool distinct_ = true;
};

// Character data attached to one torus fixed point of the moduli space.
struct FixedPointData {
  PartitionTuple mu;
  LaurentPoly char_u;   // U: one unit monomial per box
  LaurentPoly tangent;  // T: dimension 2rn at z = w = 1
  LaurentPoly det_u;    // product of the monomials of U (a single monomial)
};

// U_mu-tilde = sum_i w_i U_{mu^i}, with U_mu = sum over 0-indexed boxes
// (row i, column j) of z1^j z2^i. Requires at least tuple-many w variables.
LaurentPoly char_U(const RegistryPtr& reg, const PartitionTuple& mu);

// Arm/leg character E_{mu,nu}: sum over boxes of mu of z1^{-a_mu-1} z2^{l_nu}
// plus sum over boxes of nu of z1^{a_nu} z2^{-l_mu-1} (1-indexed boxes; arms
// and legs taken across partitions may be negative).
LaurentPoly char_E(const RegistryPtr& reg, const Partition& mu, const Partition& nu);

// Tangent character sum_{i,j} w_j w_i^{-1} E_{mu^i, mu^j}.
LaurentPoly tangent_char(const RegistryPtr& reg, const PartitionTuple& mu);

FixedPointData fixed_point_data(const RegistryPtr& reg, const PartitionTuple& mu);

// Localization sum over fixed points of the rank-r degree-n moduli space:
//   sum_{|mu~|=n} f(conj U) g(U) det(U)^k Omega(conj T).
// The registry of f (shared by g) must provide at least r framing variables.
RatFunc moduli_inner(const sym::SymFunc& f, const sym::SymFunc& g, int r, int n, int k);

// Localization sum over the m-dimensional-subspace Grassmannian of X:
//   sum_{|V|=m} f(conj V') g(V) Omega(conj(V') V),  V' = X - V.
// RepeatedWeights when X has a repeated weight; InvalidArg unless 0 <= m <= N.
RatFunc grass_inner(const sym::SymFunc& f, const sym::SymFunc& g, const TorusRep& x, int m);

// The linear functional lambda(x^i) = lambda'_i + lambda''_i attached to X:
// lambda'_i = h_{-i}(conj X) for i <= 0, lambda''_i = (-1)^{N+1} h_{i-N}(X) det(X)
// for i >= N, zero in the gap 0 < i < N.
class LambdaFunctional {
 public:
  explicit LambdaFunctional(TorusRep x);

  const TorusRep& rep() const { return x_; }
  LaurentPoly lambda(int i) const;
  LaurentPoly lambda_prime(int i) const;
  LaurentPoly lambda_second(int i) const;

 private:
  TorusRep x_;
  TorusRep xbar_;
};

// Which part of lambda enters the pairing.
enum class LambdaPart { Full, PrimeOnly };

// Path (i): apply lambda in each auxiliary variable to
// (1/m!) Delta_m conj(Delta_m) f(x^{-1}) g(x).
LaurentPoly lambda_pairing_expand(const sym::SymFunc& f, const sym::SymFunc& g,
                                  const TorusRep& x, int m,
                                  LambdaPart part = LambdaPart::Full);

// Path (ii): bilinear extension of the m x m determinant
// (s_mu, s_nu) = det(lambda_{nu_j - j - mu_i + i}).
LaurentPoly lambda_pairing_det(const sym::SymFunc& f, const sym::SymFunc& g,
                               const TorusRep& x, int m,
                               LambdaPart part = LambdaPart::Full);

// Both paths, checked against each other (Internal on disagreement). Schur
// lengths beyond m raise LengthViolation.
RatFunc lambda_pairing(const sym::SymFunc& f, const sym::SymFunc& g, const TorusRep& x,
                       int m);

// Z_{ij} = -sum_{a >= n+1-i} (-1)^a e_a(X) h_{j-i-a}(X); supported on the
// diagonal i = j >= n+1 (value -1) and the quadrant i <= n < j.
LaurentPoly z_matrix(const TorusRep& x, int n, int i, int j);

// Finite-N approximant to the moduli localization sum: X_N has weights
// w_a z1^i z2^j over 0 <= i,j <= N-1, specialized at the given rational
// z/w values; the sum runs over all codimension-n weight subsets V, with
//   F(v) = sum_V f(conj V') g(V') det(V')^k Omega(conj E0 + conj E1 + v conj E2),
// returned as an exact rational function of the auxiliary variable v.
// The registry of f must provide the auxiliary v variable, and zw_values
// must bind every z and framing variable.
// DivergentOmega if a summand has a genuine pole (at 1 or at v = 1).
RatFunc f_N(const sym::SymFunc& f, const sym::SymFunc& g, int r, int n, int k, int big_n,
            const std::map<std::string, Rat>& zw_values);

// Per-fixed-point term table for debugging and golden tests.
std::string moduli_terms_json(const sym::SymFunc& f, const sym::SymFunc& g, int r, int n,
                              int k);

}  // namespace klv::loc
