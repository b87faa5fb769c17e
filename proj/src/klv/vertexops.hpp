#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klv/localization.hpp"
#include "klv/ratfunc.hpp"
#include "klv/symfunc.hpp"
#include "klv/zseries.hpp"

namespace klv::vo {

using core::LaurentPoly;
using core::Partition;
using core::Rat;
using core::RatFunc;
using core::RegistryPtr;
using core::ZSeries;
using loc::TorusRep;
using sym::SymFunc;

// ---- composable operators on truncated symmetric functions ----

// Bounds on the total-degree change of an operator: a homogeneous input of
// degree d is sent into degrees [d + lo, d + hi]. `kShiftUnbounded` marks a
// direction with no fixed bound (Gamma_+ can drop any number of degrees, a
// series multiplier can raise arbitrarily many before truncation).
inline constexpr int kShiftUnbounded = 1 << 20;

struct DegreeShift {
  int lo = 0;
  int hi = 0;
};

// A linear operator on SymFunc, built from the vertex-algebra primitives and
// closed under composition. Applying a LinOp never allocates more degree than
// the `dsym` passed to apply(); the caller chooses the working truncation.
class LinOp {
 public:
  // Half vertex operator Gamma_{+-sign}(X) in its Bernstein form: the ring
  // homomorphism p_k -> p_k + sign * (sum of k-th powers of the weights).
  // Weight powers are exact for both symbolic and rational-valued weights.
  static LinOp gamma_plus(TorusRep x, int sign = +1);
  // Gamma_-(X): multiplication by Omega(p_1 X) = sum_mu p_mu prod_i X^(mu_i) / z(mu),
  // expanded to the working degree at application time.
  static LinOp gamma_minus(TorusRep x);
  // Multiplication by a fixed symmetric function.
  static LinOp mult(SymFunc f);
  // Hall adjoint of mult(f).
  static LinOp mult_adjoint(SymFunc f);
  // Projection pi_n onto Schur terms with at most n rows.
  static LinOp project(int n);
  // Diagonal plethystic twist phi_{c p_1}: p_k -> c(z -> z^k) p_k for a
  // polynomial c in the torus variables.
  static LinOp pleth_diag(LaurentPoly c);
  // Operator product; ops.front() is the leftmost factor and applies last.
  static LinOp compose(std::vector<LinOp> ops);

  // Applies the operator with every intermediate product truncated at total
  // symmetric-function degree dsym. Output is in the P basis.
  SymFunc apply(const SymFunc& u, int dsym) const;

  // Conservative degree-shift bounds; compositions add, saturating at
  // kShiftUnbounded.
  DegreeShift shift() const;

 private:
  enum class Kind { GammaPlus, GammaMinus, Mult, MultAdjoint, Project, PlethDiag, Compose };
  explicit LinOp(Kind k) : kind_(k) {}

  Kind kind_;
  std::optional<TorusRep> rep_;
  int sign_ = +1;
  SymFunc f_;
  LaurentPoly diag_;
  int rows_ = 0;
  std::vector<LinOp> ops_;
};

// Omega(p_1 X) as a SymFunc of degree <= dsym, with the power sums of the
// weight list X computed exactly (rational letters included).
SymFunc omega_series_rep(const TorusRep& x, int dsym);

// Skew Schur function s_{outer/inner} evaluated at the weights of x, by the
// Jacobi-Trudi determinant in the complete homogeneous functions of x.
LaurentPoly skew_schur_rep(const TorusRep& x, const Partition& outer, const Partition& inner);

// ---- the operator side of the Grassmannian comparison ----

// Hall pairing of f against Gamma_+(X) pi_n Gamma_+(X)^{-1} phi_{-p_1} pi_m g.
// f must be a combination of s_mu with at most m rows (LengthViolation
// otherwise); the registry needs max(m, n) AuxX variables for the projections.
LaurentPoly grass_rhs(const SymFunc& f, const SymFunc& g, const TorusRep& x, int m, int n);

// ---- regularized traces over the full symmetric algebra ----

// Contribution of one power-sum line to a trace: the partition mu, the exact
// z-polynomial it adds to the series before truncation, and the z-adic
// valuation of that polynomial (INT_MAX when the contribution vanishes). The
// convergence ledger requires valuation >= |mu|.
struct TraceTerm {
  Partition mu;
  LaurentPoly contribution;
  int valuation = 0;
};

struct TraceResult {
  ZSeries value;  // the trace, truncated to total z-order d_z
  int d_z = 0;
  int d_sym = 0;  // recorded working degree d_z + n*k + deg g + d_z
  int k = 0;
  int r = 0;
  int n = 0;
  std::vector<TraceTerm> terms;

  std::string json() const;
};

// Trace of phi_{(1-M)p_1} m_f^* Gamma_+(W) pi_n m_{e_n^k} Gamma_-(z1 z2 Wbar) m_g
// over partitions |mu| <= d_z, truncated to total z-order d_z. The framing
// weights W are the letters of `w` (symbolic w_a or rational values); r is
// w.size(). `extra` widens every internal truncation bound, which must not
// change the reported series. Requires k >= 0, d_z >= 0 and a registry with
// at least n AuxX variables (InvalidArg otherwise).
TraceResult theoremA_trace(const SymFunc& f, const SymFunc& g, const TorusRep& w, int n,
                           int k, int d_z, int extra = 0);

// The n = infinity degeneration with f = g = 1: the projection and the
// determinant twist drop out, leaving Tr phi_{(1-M)p_1} Gamma_+(W) Gamma_-(z1 z2 Wbar).
TraceResult z_infinity_trace(const TorusRep& w, int d_z, int extra = 0);

// ---- comparison drivers ----

struct TheoremAEntry {
  int k = 0;
  bool pole_at_origin = false;  // localization side not expandable at z = 0
  bool equal = false;           // both sides agree exactly to order d_z
};

struct TheoremAReport {
  std::vector<TheoremAEntry> entries;  // k = 0, 1, ..., k_max
  std::optional<int> k0;               // least k from which every tested k agrees
  int d_z = 0;
  std::vector<Rat> w_values;  // seeded framing specialization used on both sides

  std::string json() const;
};

// Compares moduli_inner(f, g, r, n, k) against theoremA_trace for each
// k = 0..k_max, with the framing weights specialized to seeded distinct
// rationals. Poles at z = 0 on the localization side are recorded per k, not
// thrown. f and g live on a registry with r framing and >= n AuxX variables.
TheoremAReport check_theoremA(const SymFunc& f, const SymFunc& g, int r, int n, int k_max,
                              int d_z, std::uint64_t seed);

// Distinct framing values w_a = (a + 2 + s) / (d + 1) drawn from a seeded
// generator; shared by check_theoremA and the command-line driver.
std::vector<Rat> seeded_framing_values(int r, std::uint64_t seed);

struct PartitionFunctionResult {
  RatFunc value;             // (1,1)_{M_{r,n}, k=0}, exact in z (and w)
  bool holomorphic = false;  // expandable at z = 0
  ZSeries series;            // expansion to order d_z when holomorphic

  std::string json() const;
};

// Partition function Z_n for rank r, with the z-expansion attempted at order
// d_z. Nonempty `w_values` specializes the framing weights before expanding
// (required for r >= 2, where the tangent weights keep symbolic w ratios).
PartitionFunctionResult partition_function_Z(const RegistryPtr& reg, int r, int n, int d_z,
                                             const std::vector<Rat>& w_values = {});

struct ZInfinityReport {
  ZSeries trace;                // Tr phi_{(1-M)p_1} Gamma_+(W) Gamma_-(z1 z2 Wbar)
  ZSeries twist_sum;            // C  = sum_mu phi_{(1-M)}(p_mu)
  ZSeries twist_sum_weighted;   // C' = sum_mu phi_{(1-M)}(p_mu) / z(mu)
  ZSeries omega;                // Omega(W Wbar M^{-1} z1 z2) expanded at z = 0
  bool matches_plain = false;   // trace == twist_sum * omega
  bool matches_weighted = false;

  std::string json() const;
};

// Verifies the closed product form of the n -> infinity trace at order d_z,
// against both candidate normalizations of the diagonal-twist sum C. Uses the
// symbolic framing variables w_1..w_r of the registry.
ZInfinityReport z_infinity_check(const RegistryPtr& reg, int r, int d_z);

// Twisted Hall pairing, diagonal in the power-sum basis:
// (p_mu, p_mu)_h = z(mu) prod_i h(z -> z^{mu_i}) for a rational alphabet h.
RatFunc twisted_inner(const SymFunc& f, const SymFunc& g, const RatFunc& h);

}  // namespace klv::vo
