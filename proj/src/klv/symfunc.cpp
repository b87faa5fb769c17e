#include "klv/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "klv/error.hpp"
#include "klv/registry.hpp"

namespace klv::sym {

using core::VarRole;

namespace {

constexpr int kConvCap = 12;   // S/E/H conversions
constexpr int kMonomialCap = 10;  // M-basis conversions

// Coefficient map over partitions with rational entries; the workhorse for
// basis-element expansions in the power-sum basis.
using PMap = std::map<Partition, Rat>;

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

PMap pmap_mul(const PMap& a, const PMap& b) {
  PMap out;
  for (const auto& [mu, cu] : a) {
    for (const auto& [nu, cv] : b) {
      std::vector<int> parts(mu.parts().begin(), mu.parts().end());
      parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
      Rat c = cu * cv;
      auto [it, fresh] = out.emplace(sorted_partition(std::move(parts)), c);
      if (!fresh) it->second += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it); else ++it;
  }
  return out;
}

// e_n and h_n in the power-sum basis via the Newton recurrences
//   n e_n = sum_{i=1}^n (-1)^{i-1} p_i e_{n-i},  n h_n = sum p_i h_{n-i}.
const PMap& elementary_in_p(int n) {
  static std::vector<PMap> memo = {{{Partition(), Rat(1)}}};
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    PMap acc;
    for (int i = 1; i <= m; ++i) {
      PMap mult = pmap_mul({{Partition({i}), Rat(i % 2 == 1 ? 1 : -1)}}, memo[m - i]);
      for (const auto& [mu, c] : mult) {
        auto [it, fresh] = acc.emplace(mu, c);
        if (!fresh) it->second += c;
      }
    }
    for (auto& [mu, c] : acc) c /= m;
    memo.push_back(std::move(acc));
  }
  return memo[n];
}

const PMap& homogeneous_in_p(int n) {
  static std::vector<PMap> memo = {{{Partition(), Rat(1)}}};
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    PMap acc;
    for (int i = 1; i <= m; ++i) {
      PMap mult = pmap_mul({{Partition({i}), Rat(1)}}, memo[m - i]);
      for (const auto& [mu, c] : mult) {
        auto [it, fresh] = acc.emplace(mu, c);
        if (!fresh) it->second += c;
      }
    }
    for (auto& [mu, c] : acc) c /= m;
    memo.push_back(std::move(acc));
  }
  return memo[n];
}

PMap product_in_p(const Partition& lambda, const PMap& (*unit)(int)) {
  PMap acc = {{Partition(), Rat(1)}};
  for (int i = 1; i <= lambda.length(); ++i) acc = pmap_mul(acc, unit(lambda.part(i)));
  return acc;
}

const PMap& schur_in_p(const Partition& lambda) {
  static std::map<Partition, PMap> memo;
  auto it = memo.find(lambda);
  if (it != memo.end()) return it->second;
  PMap out;
  for (const Partition& mu : core::enumerate_partitions(lambda.size())) {
    Rat chi = mn_character(lambda, mu);
    if (chi != 0) out.emplace(mu, chi / core::z_factor(mu));
  }
  return memo.emplace(lambda, std::move(out)).first->second;
}

// p_mu expanded in d variables, read off against monomial symmetric functions:
// the coefficient of m_lambda is the coefficient of x^lambda (lambda padded
// with zeros, exponents weakly decreasing).
const std::map<Partition, PMap>& power_to_monomial(int d) {
  static std::map<int, std::map<Partition, PMap>> memo;
  auto found = memo.find(d);
  if (found != memo.end()) return found->second;

  std::map<Partition, PMap> table;
  // Exponent-vector expansion of prod_i (x_1^{mu_i} + ... + x_d^{mu_i}).
  for (const Partition& mu : core::enumerate_partitions(d)) {
    std::map<std::vector<int>, Rat> poly = {{std::vector<int>(d, 0), Rat(1)}};
    for (int i = 1; i <= mu.length(); ++i) {
      std::map<std::vector<int>, Rat> next;
      for (const auto& [e, c] : poly) {
        for (int v = 0; v < d; ++v) {
          std::vector<int> f = e;
          f[v] += mu.part(i);
          auto [it, fresh] = next.emplace(std::move(f), c);
          if (!fresh) it->second += c;
        }
      }
      poly = std::move(next);
    }
    PMap row;
    for (const auto& [e, c] : poly) {
      bool decreasing = true;
      for (int v = 0; v + 1 < d; ++v) {
        if (e[v] < e[v + 1]) { decreasing = false; break; }
      }
      if (!decreasing) continue;
      row.emplace(sorted_partition(e), c);
    }
    table.emplace(mu, std::move(row));
  }
  return memo.emplace(d, std::move(table)).first->second;
}

using DenseMatrix = std::vector<std::vector<Rat>>;

// Exact Gaussian inverse; every pivot is nonzero because the inputs are
// change-of-basis matrices.
DenseMatrix invert_dense(DenseMatrix a) {
  const size_t n = a.size();
  DenseMatrix inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(Status::Internal, "singular change-of-basis matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rat p = a[col][col];
    for (size_t j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat f = a[row][col];
      for (size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Rows of the degree-d expansion matrix for basis b: row[lambda] = expansion
// of b_lambda in the power-sum basis (for b in {E, H, S}) or in the monomial
// basis (for b == P with monomial target, handled separately).
DenseMatrix forward_matrix(Basis b, int d, const std::vector<Partition>& idx) {
  const size_t n = idx.size();
  std::map<Partition, size_t> pos;
  for (size_t i = 0; i < n; ++i) pos.emplace(idx[i], i);
  DenseMatrix m(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    PMap row;
    switch (b) {
      case Basis::E: row = product_in_p(idx[i], elementary_in_p); break;
      case Basis::H: row = product_in_p(idx[i], homogeneous_in_p); break;
      case Basis::S: row = schur_in_p(idx[i]); break;
      case Basis::P: {
        const auto& table = power_to_monomial(d);
        row = table.at(idx[i]);
        break;
      }
      case Basis::M: fail(Status::Internal, "no direct monomial expansion");
    }
    for (const auto& [mu, c] : row) m[i][pos.at(mu)] = c;
  }
  return m;
}

// Inverse transpose of the forward matrix, memoized per (basis, degree).
// Solving F^T c = a converts coordinates *into* the row basis of F.
const DenseMatrix& inverse_transpose(Basis b, int d) {
  static std::map<std::pair<int, int>, DenseMatrix> memo;
  auto key = std::make_pair(static_cast<int>(b), d);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Partition> idx = core::enumerate_partitions(d);
  DenseMatrix f = forward_matrix(b, d, idx);
  const size_t n = idx.size();
  DenseMatrix ft(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ft[i][j] = f[j][i];
  return memo.emplace(key, invert_dense(std::move(ft))).first->second;
}

void check_conversion_cap(Basis b, int d) {
  int cap = (b == Basis::M) ? kMonomialCap : kConvCap;
  if (d > cap) {
    fail(Status::InvalidArg, "basis conversion degree " + std::to_string(d) +
                                 " exceeds cap " + std::to_string(cap));
  }
}

// Degree-d coefficient vectors of f, indexed by enumerate_partitions(d).
std::vector<LaurentPoly> degree_component(const SymFunc& f, int d,
                                          const std::vector<Partition>& idx) {
  std::vector<LaurentPoly> v(idx.size(), LaurentPoly());
  for (size_t i = 0; i < idx.size(); ++i) {
    LaurentPoly c = f.coeff(idx[i]);
    if (!c.is_zero()) v[i] = std::move(c);
  }
  return v;
}

std::vector<int> aux_x_indices(const RegistryPtr& reg, int n) {
  const std::vector<size_t>& raw = reg->indices(VarRole::AuxX);
  if (static_cast<int>(raw.size()) < n) {
    fail(Status::InvalidArg, "registry provides " + std::to_string(raw.size()) +
                                 " x-variables, need " + std::to_string(n));
  }
  return std::vector<int>(raw.begin(), raw.begin() + n);
}

LaurentPoly invert_vars(const LaurentPoly& p, const std::vector<int>& idx) {
  LaurentPoly out(p.registry());
  for (const auto& [e, c] : p.terms()) {
    Expo f = e;
    for (int i : idx) f[i] = -f[i];
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly var_free_part(const LaurentPoly& p, const std::vector<int>& idx) {
  LaurentPoly out(p.registry());
  for (const auto& [e, c] : p.terms()) {
    bool clean = true;
    for (int i : idx) {
      if (e[i] != 0) { clean = false; break; }
    }
    if (clean) out.add_term(e, c);
  }
  return out;
}

Rat binomial(int m, int j) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), m, j);
  return Rat(b);
}

}  // namespace

char basis_letter(Basis b) {
  switch (b) {
    case Basis::P: return 'p';
    case Basis::S: return 's';
    case Basis::E: return 'e';
    case Basis::H: return 'h';
    case Basis::M: return 'm';
  }
  return '?';
}

SymFunc::SymFunc(RegistryPtr reg, Basis basis, int dsym)
    : reg_(std::move(reg)), basis_(basis), dsym_(dsym) {
  if (!reg_) fail(Status::InvalidArg, "null registry");
  if (dsym_ < 0) fail(Status::InvalidArg, "negative symmetric degree bound");
}

SymFunc SymFunc::one(const RegistryPtr& reg, int dsym) {
  SymFunc f(reg, Basis::P, dsym);
  f.add_term(Partition(), LaurentPoly::constant(reg, Rat(1)));
  return f;
}

SymFunc SymFunc::basis_elem(const RegistryPtr& reg, Basis b, const Partition& mu, int dsym) {
  SymFunc f(reg, b, dsym);
  f.add_term(mu, LaurentPoly::constant(reg, Rat(1)));
  return f;
}

int SymFunc::degree() const {
  int d = 0;
  for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
  return d;
}

void SymFunc::add_term(const Partition& mu, const LaurentPoly& c) {
  if (mu.size() > dsym_ || c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(mu, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly SymFunc::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? LaurentPoly(reg_) : it->second;
}

SymFunc SymFunc::with_dsym(int dsym) const {
  SymFunc out(reg_, basis_, dsym);
  for (const auto& [mu, c] : terms_) out.add_term(mu, c);
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (reg_.get() != o.reg_.get()) fail(Status::InvalidArg, "registry mismatch");
  if (basis_ != o.basis_) fail(Status::InvalidArg, "basis mismatch in sum");
  if (o.dsym_ < dsym_) *this = with_dsym(o.dsym_);
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  SymFunc out = a;
  out += b;
  return out;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  SymFunc out = a;
  out -= b;
  return out;
}

SymFunc SymFunc::operator-() const {
  SymFunc out(reg_, basis_, dsym_);
  for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
  return out;
}

SymFunc& SymFunc::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, coeff] : terms_) coeff *= c;
  return *this;
}

SymFunc SymFunc::scaled(const LaurentPoly& c) const {
  SymFunc out(reg_, basis_, dsym_);
  if (c.is_zero()) return out;
  for (const auto& [mu, coeff] : terms_) out.add_term(mu, coeff * c);
  return out;
}

bool SymFunc::operator==(const SymFunc& o) const {
  return reg_.get() == o.reg_.get() && basis_ == o.basis_ && dsym_ == o.dsym_ &&
         terms_ == o.terms_;
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis_letter(basis_) << mu.str();
  }
  return os.str();
}

// Border-strip recursion through beta-numbers: removing a strip of size r
// replaces one beta-number b by b - r when that slot is free; the sign is
// (-1)^{number of occupied slots passed over}.
Rat mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    fail(Status::InvalidArg, "character requires equal sizes");
  static std::map<std::pair<Partition, Partition>, Rat> memo;
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Rat result(0);
  if (lambda.size() == 0) {
    result = 1;
  } else {
    const int r = mu.part(1);
    std::vector<int> rest_parts;
    for (int i = 2; i <= mu.length(); ++i) rest_parts.push_back(mu.part(i));
    const Partition rest(rest_parts);

    const int rows = lambda.length() + r;
    std::vector<int> beta(rows);
    for (int i = 1; i <= rows; ++i) beta[i - 1] = lambda.part(i) - i;

    for (int i = 0; i < rows; ++i) {
      const int target = beta[i] - r;
      if (target < -rows) continue;  // slot below the padded floor is occupied
      bool occupied = false;
      int crossings = 0;
      for (int j = 0; j < rows; ++j) {
        if (j == i) continue;
        if (beta[j] == target) { occupied = true; break; }
        if (beta[j] > target && beta[j] < beta[i]) ++crossings;
      }
      if (occupied) continue;

      std::vector<int> nbeta = beta;
      nbeta[i] = target;
      std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
      std::vector<int> nparts;
      for (int j = 1; j <= rows; ++j) {
        int part = nbeta[j - 1] + j;
        if (part > 0) nparts.push_back(part);
      }
      Rat sub = mn_character(Partition(nparts), rest);
      result += (crossings % 2 == 0 ? sub : -sub);
    }
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

SymFunc convert(const SymFunc& f, Basis to) {
  if (f.basis() == to) return f;
  const RegistryPtr& reg = f.registry();
  SymFunc out(reg, to, f.dsym());

  for (int d = 0; d <= f.degree(); ++d) {
    std::vector<Partition> idx = core::enumerate_partitions(d);
    std::vector<LaurentPoly> in = degree_component(f, d, idx);
    bool empty = true;
    for (const auto& c : in) {
      if (!c.is_zero()) { empty = false; break; }
    }
    if (empty) continue;
    if (f.basis() != Basis::P) check_conversion_cap(f.basis(), d);
    if (to != Basis::P) check_conversion_cap(to, d);

    std::map<Partition, size_t> pos;
    for (size_t i = 0; i < idx.size(); ++i) pos.emplace(idx[i], i);

    // Stage 1: into the power-sum basis.
    std::vector<LaurentPoly> pc(idx.size(), LaurentPoly());
    switch (f.basis()) {
      case Basis::P:
        pc = in;
        break;
      case Basis::S:
      case Basis::E:
      case Basis::H:
        for (size_t i = 0; i < idx.size(); ++i) {
          if (in[i].is_zero()) continue;
          PMap row = (f.basis() == Basis::S)   ? schur_in_p(idx[i])
                     : (f.basis() == Basis::E) ? product_in_p(idx[i], elementary_in_p)
                                               : product_in_p(idx[i], homogeneous_in_p);
          for (const auto& [mu, c] : row) {
            LaurentPoly t = in[i];
            t *= c;
            size_t j = pos.at(mu);
            if (pc[j].is_zero()) pc[j] = std::move(t); else pc[j] += t;
          }
        }
        break;
      case Basis::M: {
        const DenseMatrix& inv = inverse_transpose(Basis::P, d);  // inverse of (P->M)^T
        for (size_t i = 0; i < idx.size(); ++i) {
          LaurentPoly acc(reg);
          for (size_t j = 0; j < idx.size(); ++j) {
            if (in[j].is_zero() || inv[i][j] == 0) continue;
            LaurentPoly t = in[j];
            t *= inv[i][j];
            acc += t;
          }
          pc[i] = std::move(acc);
        }
        break;
      }
    }

    // Stage 2: from the power-sum basis into the target.
    switch (to) {
      case Basis::P:
        for (size_t i = 0; i < idx.size(); ++i) out.add_term(idx[i], pc[i]);
        break;
      case Basis::S:
        // p_mu = sum_lambda chi^lambda_mu s_lambda.
        for (size_t l = 0; l < idx.size(); ++l) {
          LaurentPoly acc(reg);
          for (size_t m = 0; m < idx.size(); ++m) {
            if (pc[m].is_zero()) continue;
            Rat chi = mn_character(idx[l], idx[m]);
            if (chi == 0) continue;
            LaurentPoly t = pc[m];
            t *= chi;
            acc += t;
          }
          out.add_term(idx[l], acc);
        }
        break;
      case Basis::M: {
        const auto& table = power_to_monomial(d);
        for (size_t m = 0; m < idx.size(); ++m) {
          if (pc[m].is_zero()) continue;
          for (const auto& [lambda, c] : table.at(idx[m])) {
            LaurentPoly t = pc[m];
            t *= c;
            out.add_term(lambda, t);
          }
        }
        break;
      }
      case Basis::E:
      case Basis::H: {
        const DenseMatrix& inv = inverse_transpose(to, d);
        for (size_t i = 0; i < idx.size(); ++i) {
          LaurentPoly acc(reg);
          for (size_t j = 0; j < idx.size(); ++j) {
            if (pc[j].is_zero() || inv[i][j] == 0) continue;
            LaurentPoly t = pc[j];
            t *= inv[i][j];
            acc += t;
          }
          out.add_term(idx[i], acc);
        }
        break;
      }
    }
  }
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g, int dsym) {
  SymFunc fp = convert(f, Basis::P);
  SymFunc gp = convert(g, Basis::P);
  SymFunc out(f.registry(), Basis::P, dsym);
  for (const auto& [mu, cu] : fp.terms()) {
    for (const auto& [nu, cv] : gp.terms()) {
      if (mu.size() + nu.size() > dsym) continue;
      std::vector<int> parts(mu.parts().begin(), mu.parts().end());
      parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
      out.add_term(sorted_partition(std::move(parts)), cu * cv);
    }
  }
  return out;
}

LaurentPoly hall_inner(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = convert(f, Basis::P);
  SymFunc gp = convert(g, Basis::P);
  LaurentPoly acc(f.registry());
  for (const auto& [mu, cu] : fp.terms()) {
    LaurentPoly cv = gp.coeff(mu);
    if (cv.is_zero()) continue;
    acc += cu * cv * LaurentPoly::constant(f.registry(), core::z_factor(mu));
  }
  return acc;
}

SymFunc mult_adjoint(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = convert(f, Basis::P);
  SymFunc gp = convert(g, Basis::P);
  SymFunc out(g.registry(), Basis::P, g.dsym());
  for (const auto& [mu, cu] : fp.terms()) {
    // Apply p_{mu_1}^* ... p_{mu_l}^* to g, one part at a time.
    std::map<Partition, LaurentPoly> cur(gp.terms().begin(), gp.terms().end());
    for (int i = 1; i <= mu.length() && !cur.empty(); ++i) {
      const int k = mu.part(i);
      std::map<Partition, LaurentPoly> next;
      for (const auto& [nu, c] : cur) {
        int mult = 0;
        for (int part : nu.parts())
          if (part == k) ++mult;
        if (mult == 0) continue;
        std::vector<int> parts(nu.parts().begin(), nu.parts().end());
        parts.erase(std::find(parts.begin(), parts.end(), k));
        LaurentPoly t = c;
        t *= Rat(k) * Rat(mult);
        Partition key(parts);
        auto it = next.find(key);
        if (it == next.end()) next.emplace(std::move(key), std::move(t));
        else it->second += t;
      }
      cur = std::move(next);
    }
    for (const auto& [nu, c] : cur) out.add_term(nu, cu * c);
  }
  return out;
}

SymFunc plethystic_hom(const PlethInput& in, const SymFunc& f) {
  SymFunc fp = convert(f, Basis::P);
  const RegistryPtr& reg = f.registry();
  const int dsym = f.dsym();
  SymFunc out(reg, Basis::P, dsym);

  // Per-k substitution data, computed on demand.
  std::map<int, LaurentPoly> diag, shift;
  auto diag_at = [&](int k) -> const LaurentPoly& {
    auto it = diag.find(k);
    if (it == diag.end())
      it = diag.emplace(k, in.p1_coeff.is_zero() ? LaurentPoly(reg)
                                                 : in.p1_coeff.power_substitute(k)).first;
    return it->second;
  };
  auto shift_at = [&](int k) -> const LaurentPoly& {
    auto it = shift.find(k);
    if (it == shift.end())
      it = shift.emplace(k, in.alphabet.is_zero() ? LaurentPoly(reg)
                                                  : in.alphabet.power_substitute(k)).first;
    return it->second;
  };

  for (const auto& [mu, cmu] : fp.terms()) {
    // Group equal parts: a block of m copies of part k expands as
    // sum_j C(m, j) diag(k)^j shift(k)^{m-j} p_k^j.
    std::vector<std::pair<int, int>> blocks;  // (part, multiplicity), descending
    for (int i = 1; i <= mu.length(); ++i) {
      if (!blocks.empty() && blocks.back().first == mu.part(i)) ++blocks.back().second;
      else blocks.emplace_back(mu.part(i), 1);
    }
    std::vector<std::pair<std::vector<int>, LaurentPoly>> partial = {{{}, cmu}};
    for (const auto& [k, m] : blocks) {
      const LaurentPoly& dk = diag_at(k);
      const LaurentPoly& sk = shift_at(k);
      std::vector<LaurentPoly> dpow(m + 1), spow(m + 1);
      dpow[0] = LaurentPoly::constant(reg, Rat(1));
      spow[0] = dpow[0];
      for (int j = 1; j <= m; ++j) {
        dpow[j] = dpow[j - 1] * dk;
        spow[j] = spow[j - 1] * sk;
      }
      std::vector<std::pair<std::vector<int>, LaurentPoly>> next;
      for (const auto& [parts, c] : partial) {
        const int deg = std::accumulate(parts.begin(), parts.end(), 0);
        for (int j = 0; j <= m; ++j) {
          if (deg + j * k > dsym) continue;
          LaurentPoly w = dpow[j] * spow[m - j];
          if (w.is_zero()) continue;
          w *= binomial(m, j);
          w = w * c;
          if (w.is_zero()) continue;
          std::vector<int> np = parts;
          np.insert(np.end(), j, k);
          next.emplace_back(std::move(np), std::move(w));
        }
      }
      partial = std::move(next);
    }
    for (auto& [parts, c] : partial) out.add_term(Partition(parts), c);
  }
  return out;
}

LaurentPoly plethystic_eval(const LaurentPoly& alphabet, const SymFunc& f) {
  PlethInput in{LaurentPoly(f.registry()), alphabet};
  SymFunc out = plethystic_hom(in, f);
  for (const auto& [mu, c] : out.terms()) {
    if (!mu.empty()) fail(Status::Internal, "evaluation left a power-sum term");
  }
  return out.coeff(Partition());
}

LaurentPoly h_alphabet(const RegistryPtr& reg, const LaurentPoly& alphabet, int r) {
  if (r < 0) return LaurentPoly(reg);
  if (r == 0) return LaurentPoly::constant(reg, Rat(1));
  LaurentPoly acc(reg);
  std::vector<LaurentPoly> powers(r + 1, LaurentPoly(reg));
  for (int k = 1; k <= r; ++k) powers[k] = alphabet.power_substitute(k);
  for (const Partition& mu : core::enumerate_partitions(r)) {
    LaurentPoly t = LaurentPoly::constant(reg, Rat(1) / core::z_factor(mu));
    for (int i = 1; i <= mu.length() && !t.is_zero(); ++i) t = t * powers[mu.part(i)];
    acc += t;
  }
  return acc;
}

SymFunc omega_involution(const SymFunc& f) {
  SymFunc fp = convert(f, Basis::P);
  SymFunc out(f.registry(), Basis::P, f.dsym());
  for (const auto& [mu, c] : fp.terms()) {
    int sign_exp = mu.size() - mu.length();
    out.add_term(mu, sign_exp % 2 == 0 ? c : -c);
  }
  return out;
}

SymFunc omega_series(const RegistryPtr& reg, const LaurentPoly& alphabet, int dsym) {
  SymFunc out(reg, Basis::P, dsym);
  out.add_term(Partition(), LaurentPoly::constant(reg, Rat(1)));
  if (alphabet.is_zero()) return out;
  std::vector<LaurentPoly> powers(dsym + 1, LaurentPoly(reg));
  for (int k = 1; k <= dsym; ++k) powers[k] = alphabet.power_substitute(k);
  for (int d = 1; d <= dsym; ++d) {
    for (const Partition& mu : core::enumerate_partitions(d)) {
      LaurentPoly c = LaurentPoly::constant(reg, Rat(1) / core::z_factor(mu));
      for (int i = 1; i <= mu.length() && !c.is_zero(); ++i) c = c * powers[mu.part(i)];
      out.add_term(mu, c);
    }
  }
  return out;
}

LaurentPoly power_sum_x(const RegistryPtr& reg, int k, int n) {
  if (k < 1) fail(Status::InvalidArg, "power sum index must be positive");
  std::vector<int> xs = aux_x_indices(reg, n);
  LaurentPoly out(reg);
  for (int i = 0; i < n; ++i) {
    Expo e(reg->size(), 0);
    e[xs[i]] = k;
    out.add_term(e, Rat(1));
  }
  return out;
}

LaurentPoly restrict_to_x(const SymFunc& f, int n, const DegCaps& caps) {
  SymFunc fp = convert(f, Basis::P);
  const RegistryPtr& reg = f.registry();
  if (n == 0) return fp.coeff(Partition());
  aux_x_indices(reg, n);
  std::map<int, LaurentPoly> psums;
  LaurentPoly out(reg);
  for (const auto& [mu, c] : fp.terms()) {
    LaurentPoly t = c.truncate(caps);
    for (int i = 1; i <= mu.length() && !t.is_zero(); ++i) {
      const int k = mu.part(i);
      auto it = psums.find(k);
      if (it == psums.end()) it = psums.emplace(k, power_sum_x(reg, k, n)).first;
      t = LaurentPoly::mul(t, it->second, caps);
    }
    out += t;
  }
  return out;
}

LaurentPoly vandermonde_x(const RegistryPtr& reg, int n) {
  std::vector<int> xs = aux_x_indices(reg, n);
  LaurentPoly out = LaurentPoly::constant(reg, Rat(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Expo ei(reg->size(), 0), ej(reg->size(), 0);
      ei[xs[i]] = 1;
      ej[xs[j]] = 1;
      LaurentPoly diff(reg);
      diff.add_term(ei, Rat(1));
      diff.add_term(ej, Rat(-1));
      out = out * diff;
    }
  }
  return out;
}

std::map<Partition, LaurentPoly> schur_coeffs_x(const LaurentPoly& f_restricted, int n,
                                                const DegCaps& caps) {
  const RegistryPtr& reg = f_restricted.registry();
  std::map<Partition, LaurentPoly> out;
  if (n == 0) {
    LaurentPoly c = f_restricted;
    if (!c.is_zero()) out.emplace(Partition(), std::move(c));
    return out;
  }
  std::vector<int> xs = aux_x_indices(reg, n);
  LaurentPoly g = LaurentPoly::mul(f_restricted, vandermonde_x(reg, n), caps);
  for (const auto& [e, c] : g.terms()) {
    bool strict = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (e[xs[i]] <= e[xs[i + 1]]) { strict = false; break; }
    }
    if (!strict || e[xs[n - 1]] < 0) continue;
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
      int part = e[xs[i]] - (n - 1 - i);
      if (part > 0) parts.push_back(part);
    }
    Expo rest = e;
    for (int i : xs) rest[i] = 0;
    Partition key(parts);
    auto it = out.find(key);
    if (it == out.end()) {
      LaurentPoly mono(reg);
      mono.add_term(rest, c);
      out.emplace(std::move(key), std::move(mono));
    } else {
      it->second.add_term(rest, c);
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

SymFunc pi_n(const SymFunc& f, int n) {
  const RegistryPtr& reg = f.registry();
  SymFunc out(reg, Basis::S, f.dsym());
  if (n == 0) {
    SymFunc fp = convert(f, Basis::P);
    out.add_term(Partition(), fp.coeff(Partition()));
    return out;
  }
  DegCaps caps;
  caps.aux_x = f.dsym() + n * (n - 1) / 2;
  LaurentPoly restricted = restrict_to_x(f, n, caps);
  for (auto& [lambda, c] : schur_coeffs_x(restricted, n, caps)) {
    if (lambda.size() <= f.dsym()) out.add_term(lambda, c);
  }
  return out;
}

LaurentPoly finite_var_inner(const SymFunc& f, const SymFunc& g, int n) {
  if (n < 1) fail(Status::InvalidArg, "finite-variable inner product needs n >= 1");
  const RegistryPtr& reg = f.registry();
  std::vector<int> xs = aux_x_indices(reg, n);
  DegCaps nocaps;
  LaurentPoly ff = invert_vars(restrict_to_x(f, n, nocaps), xs);
  LaurentPoly gg = restrict_to_x(g, n, nocaps);
  LaurentPoly prod = ff * gg;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Expo e(reg->size(), 0);
      e[xs[i]] = 1;
      e[xs[j]] = -1;
      LaurentPoly factor = LaurentPoly::constant(reg, Rat(1));
      factor.add_term(e, Rat(-1));
      prod = prod * factor;
    }
  }
  LaurentPoly ct = var_free_part(prod, xs);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  ct *= Rat(1) / Rat(fact);
  return ct;
}

LaurentPoly omega_series_x(const RegistryPtr& reg, const LaurentPoly& alphabet, int n,
                           const DegCaps& caps) {
  std::vector<int> xs = aux_x_indices(reg, n);
  LaurentPoly out = LaurentPoly::constant(reg, Rat(1));
  if (n == 0 || alphabet.is_zero()) return out;
  for (const auto& [e, c] : alphabet.terms()) {
    for (int i : xs) {
      if (e[i] != 0)
        fail(Status::InvalidArg, "alphabet must not involve the expansion variables");
    }
    const int zdeg = [&] {
      int d = 0;
      for (size_t zi : reg->indices(VarRole::TorusZ)) d += e[zi];
      return d;
    }();
    // Truncation bound on the series exponent k for this factor.
    long kmax = -1;
    if (caps.aux_x >= 0) kmax = caps.aux_x;
    if (zdeg > 0 && caps.torus >= 0) {
      long zk = caps.torus / zdeg;
      kmax = (kmax < 0) ? zk : std::min(kmax, zk);
    }
    if (kmax < 0)
      fail(Status::InvalidArg, "unbounded expansion: set an x-degree cap");
    for (int i = 0; i < n; ++i) {
      // (1 - a x_i)^{-c} as a truncated binomial series; rational c is fine,
      // negative integer c terminates on its own.
      LaurentPoly factor(reg);
      Rat coef(1);
      for (long k = 0; k <= kmax && coef != 0; ++k) {
        Expo f = e;
        for (auto& v : f) v *= static_cast<int>(k);
        f[xs[i]] += static_cast<int>(k);
        factor.add_term(f, coef);
        coef = coef * (c + k) / Rat(k + 1);
      }
      out = LaurentPoly::mul(out, factor, caps);
    }
  }
  return out;
}

}  // namespace klv::sym
