#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klv/laurent.hpp"
#include "klv/partition.hpp"
#include "klv/symfunc.hpp"

namespace klv::fock {

using core::LaurentPoly;
using core::Partition;
using core::Rat;
using core::RegistryPtr;
using sym::SymFunc;

// A single wedge basis vector v_{mu,c} = v_{mu_1+c} ^ v_{mu_2-1+c} ^ ...
// The one-particle index of the j-th factor (1-indexed) is mu_j - (j-1) + c.
struct WedgeBasisVector {
  Partition mu;
  int charge = 0;
  std::string str() const;
};

// Element of the charge-c sector of the truncated infinite wedge: a finite
// combination of v_{mu,c} with LaurentPoly coefficients, |mu| <= dsym.
// The basis vectors are orthonormal for wedge_inner.
class WedgeVector {
 public:
  WedgeVector() = default;
  WedgeVector(RegistryPtr reg, int charge, int dsym);
  static WedgeVector basis_vector(const RegistryPtr& reg, const Partition& mu, int charge,
                                  int dsym);
  static WedgeVector vacuum(const RegistryPtr& reg, int charge, int dsym);

  const RegistryPtr& registry() const { return reg_; }
  int charge() const { return charge_; }
  int dsym() const { return dsym_; }
  // Index window half-width for fermionic operators: K = dsym + |c| + 2.
  int window() const;
  const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& mu, const LaurentPoly& c);
  LaurentPoly coeff(const Partition& mu) const;

  WedgeVector& operator+=(const WedgeVector& o);  // charges must match
  WedgeVector& operator-=(const WedgeVector& o);
  friend WedgeVector operator+(const WedgeVector& a, const WedgeVector& b);
  friend WedgeVector operator-(const WedgeVector& a, const WedgeVector& b);
  WedgeVector operator-() const;
  WedgeVector& operator*=(const Rat& c);
  friend WedgeVector operator*(const WedgeVector& a, const Rat& c) {
    WedgeVector r = a;
    r *= c;
    return r;
  }
  WedgeVector scaled(const LaurentPoly& c) const;
  bool operator==(const WedgeVector& o) const;
  bool operator!=(const WedgeVector& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RegistryPtr reg_;
  int charge_ = 0;
  int dsym_ = 0;
  std::map<Partition, LaurentPoly> terms_;
};

// Orthonormal-basis pairing; zero across different charges.
LaurentPoly wedge_inner(const WedgeVector& a, const WedgeVector& b);

// Infinite matrix truncated to the index window [-K, K], with a declared
// lower bandwidth (entry(i,j) = 0 whenever i - j > lower_band). Entries are
// materialized on the window only.
class BandMatrix {
 public:
  BandMatrix(RegistryPtr reg, int window, int lower_band);

  static BandMatrix identity(const RegistryPtr& reg, int window);
  // D_a: diagonal, 1 at indices i <= a, 0 above.
  static BandMatrix diag_projection(const RegistryPtr& reg, int a, int window);
  // g_+(f): entries h_{j-i}[alphabet] (upper unitriangular).
  // g_-(f): entries h_{i-j}[alphabet] (lower unitriangular).
  static BandMatrix gamma_band(const RegistryPtr& reg, const LaurentPoly& alphabet,
                               bool plus, int window);

  const RegistryPtr& registry() const { return reg_; }
  int window() const { return window_; }
  int lower_band() const { return lower_band_; }
  void set_entry(int i, int j, const LaurentPoly& v);
  // Zero when absent; WindowExceeded when |i| or |j| exceeds the window.
  LaurentPoly entry(int i, int j) const;

 private:
  RegistryPtr reg_;
  int window_;
  int lower_band_;
  std::map<std::pair<int, int>, LaurentPoly> entries_;
};

// Fermionic operators: signed insertion/removal of the one-particle index i.
// Charge shifts by +1 / -1. WindowExceeded when |i| > v.window().
WedgeVector psi(int i, const WedgeVector& v);
WedgeVector psi_star(int i, const WedgeVector& v);

// Heisenberg operators alpha_n = sum_i psi_i psi*_{i+n} (n != 0); alpha_0
// multiplies by the charge.
WedgeVector alpha(int n, const WedgeVector& v);

// Matrix element <v_{mu,c}, rho(x) v_{nu,c}> as the ratio of (N+1)x(N+1)
// determinants, accepted only when N_limit and N_limit+1 agree
// (UnstableLimit otherwise).
LaurentPoly rho_matrix_element(const BandMatrix& x, const Partition& mu, const Partition& nu,
                               int c, int n_limit);

// Half vertex operators acting through skew Schur evaluations:
// Gamma_+(f) v_nu = sum_{mu subset nu} s_{nu/mu}[f] v_mu (degree lowering),
// Gamma_-(f) v_nu = sum_{la superset nu} s_{la/nu}[f] v_la (degree raising,
// truncated at dsym).
WedgeVector gamma_plus_fock(const LaurentPoly& alphabet, const WedgeVector& v);
WedgeVector gamma_minus_fock(const LaurentPoly& alphabet, const WedgeVector& v);

// s_{outer/inner}[alphabet] via the Jacobi-Trudi determinant.
LaurentPoly skew_schur_alphabet(const RegistryPtr& reg, const LaurentPoly& alphabet,
                                const Partition& outer, const Partition& inner);

// The boson-fermion dictionary. bf_tilde_apply extracts the z-coefficient of
// the vertex-operator family:
//   side star=false: psi~_i = [z^i]   Gamma_-(z) Gamma_+^{-1}(z^{-1})
//   side star=true : psi~*_i = [z^{-i}] Gamma_-^{-1}(z) Gamma_+(z^{-1})
// computed combinatorially (vertical/horizontal strips), exactly per basis
// vector. bf_psi / bf_psi_star compose with the charge shift Q so they can be
// compared against psi / psi_star directly.
SymFunc bf_tilde_apply(int i, bool star, const SymFunc& f);
WedgeVector bf_psi(int i, const WedgeVector& v);
WedgeVector bf_psi_star(int i, const WedgeVector& v);

// Charge shift Q: v_{mu,c} -> v_{mu,c+1} (and its inverse for steps < 0).
WedgeVector charge_shift(int steps, const WedgeVector& v);

// Phi_c: s_mu -> v_{mu,c} and its inverse (isometry).
WedgeVector phi_map(int c, const SymFunc& f);
SymFunc phi_inv(const WedgeVector& v);

// Exact determinant of a small LaurentPoly matrix (Laplace with subset memo).
LaurentPoly poly_det(const RegistryPtr& reg, const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace klv::fock
