#include "klv/fock.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "klv/error.hpp"

namespace klv::fock {

namespace {

// One-particle indices of v_{mu,c}: s_j = mu_j - (j-1) + c for j = 1..J.
std::vector<long> index_prefix(const Partition& mu, int c, int j_count) {
  std::vector<long> s(j_count);
  for (int j = 1; j <= j_count; ++j) s[j - 1] = static_cast<long>(mu.part(j)) - (j - 1) + c;
  return s;
}

// Rebuild the partition from a strictly decreasing index prefix; the prefix
// must be long enough to have reached the vacuum tail.
Partition partition_from_prefix(const std::vector<long>& s, int c) {
  std::vector<int> parts;
  for (size_t j = 1; j <= s.size(); ++j) {
    long part = s[j - 1] + static_cast<long>(j - 1) - c;
    if (part < 0) fail(Status::Internal, "index sequence dips below the vacuum tail");
    parts.push_back(static_cast<int>(part));
  }
  if (parts.size() >= 2 && (parts.back() != 0 || parts[parts.size() - 2] != 0))
    fail(Status::Internal, "index prefix too short to reach the vacuum tail");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

bool horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int i = 1; i < outer.length(); ++i)
    if (outer.part(i + 1) > inner.part(i)) return false;
  return true;
}

bool vertical_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  for (int i = 1; i <= outer.length(); ++i)
    if (outer.part(i) - inner.part(i) > 1) return false;
  return true;
}

// All partitions contained in nu (pointwise), for the degree-lowering vertex
// operator.
std::vector<Partition> subpartitions(const Partition& nu) {
  std::vector<Partition> out;
  std::vector<int> cur;
  const int rows = nu.length();
  auto rec = [&](auto&& self, int row) -> void {
    if (row > rows) {
      std::vector<int> parts = cur;
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      out.emplace_back(parts);
      return;
    }
    int hi = std::min(nu.part(row), row == 1 ? nu.part(1) : cur[row - 2]);
    for (int p = hi; p >= 0; --p) {
      cur.push_back(p);
      self(self, row + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

std::string WedgeBasisVector::str() const {
  std::ostringstream os;
  os << "v(" << mu.str() << "," << charge << ")";
  return os.str();
}

WedgeVector::WedgeVector(RegistryPtr reg, int charge, int dsym)
    : reg_(std::move(reg)), charge_(charge), dsym_(dsym) {
  if (!reg_) fail(Status::InvalidArg, "null registry");
  if (dsym_ < 0) fail(Status::InvalidArg, "negative truncation degree");
}

WedgeVector WedgeVector::basis_vector(const RegistryPtr& reg, const Partition& mu, int charge,
                                      int dsym) {
  WedgeVector v(reg, charge, dsym);
  v.add_term(mu, LaurentPoly::constant(reg, Rat(1)));
  return v;
}

WedgeVector WedgeVector::vacuum(const RegistryPtr& reg, int charge, int dsym) {
  return basis_vector(reg, Partition(), charge, dsym);
}

int WedgeVector::window() const { return dsym_ + std::abs(charge_) + 2; }

void WedgeVector::add_term(const Partition& mu, const LaurentPoly& c) {
  if (mu.size() > dsym_ || c.is_zero()) return;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly WedgeVector::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? LaurentPoly(reg_) : it->second;
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o) {
  if (o.is_zero()) return *this;
  if (!reg_) {  // default-constructed accumulator adopts the first summand
    *this = o;
    return *this;
  }
  if (charge_ != o.charge_) fail(Status::InvalidArg, "charge mismatch in wedge sum");
  if (reg_.get() != o.reg_.get()) fail(Status::InvalidArg, "registry mismatch");
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& o) { return *this += -o; }

WedgeVector operator+(const WedgeVector& a, const WedgeVector& b) {
  WedgeVector out = a;
  out += b;
  return out;
}

WedgeVector operator-(const WedgeVector& a, const WedgeVector& b) {
  WedgeVector out = a;
  out -= b;
  return out;
}

WedgeVector WedgeVector::operator-() const {
  WedgeVector out(reg_, charge_, dsym_);
  for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
  return out;
}

WedgeVector& WedgeVector::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, coeff] : terms_) coeff *= c;
  return *this;
}

WedgeVector WedgeVector::scaled(const LaurentPoly& c) const {
  WedgeVector out(reg_, charge_, dsym_);
  if (c.is_zero()) return out;
  for (const auto& [mu, coeff] : terms_) out.add_term(mu, coeff * c);
  return out;
}

bool WedgeVector::operator==(const WedgeVector& o) const {
  if (is_zero() && o.is_zero()) return true;  // zero vectors compare equal across charges
  return charge_ == o.charge_ && reg_.get() == o.reg_.get() && terms_ == o.terms_;
}

std::string WedgeVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*v(" << mu.str() << "," << charge_ << ")";
  }
  return os.str();
}

LaurentPoly wedge_inner(const WedgeVector& a, const WedgeVector& b) {
  LaurentPoly acc(a.registry() ? a.registry() : b.registry());
  if (a.charge() != b.charge()) return acc;
  for (const auto& [mu, ca] : a.terms()) {
    LaurentPoly cb = b.coeff(mu);
    if (!cb.is_zero()) acc += ca * cb;
  }
  return acc;
}

BandMatrix::BandMatrix(RegistryPtr reg, int window, int lower_band)
    : reg_(std::move(reg)), window_(window), lower_band_(lower_band) {
  if (!reg_) fail(Status::InvalidArg, "null registry");
  if (window_ < 0) fail(Status::InvalidArg, "negative window");
}

BandMatrix BandMatrix::identity(const RegistryPtr& reg, int window) {
  BandMatrix m(reg, window, 0);
  for (int i = -window; i <= window; ++i)
    m.set_entry(i, i, LaurentPoly::constant(reg, Rat(1)));
  return m;
}

BandMatrix BandMatrix::diag_projection(const RegistryPtr& reg, int a, int window) {
  BandMatrix m(reg, window, 0);
  for (int i = -window; i <= std::min(a, window); ++i)
    m.set_entry(i, i, LaurentPoly::constant(reg, Rat(1)));
  return m;
}

BandMatrix BandMatrix::gamma_band(const RegistryPtr& reg, const LaurentPoly& alphabet,
                                  bool plus, int window) {
  BandMatrix m(reg, window, plus ? 0 : 2 * window);
  std::vector<LaurentPoly> h(2 * window + 1);
  for (int r = 0; r <= 2 * window; ++r) h[r] = sym::h_alphabet(reg, alphabet, r);
  for (int i = -window; i <= window; ++i) {
    for (int j = -window; j <= window; ++j) {
      int r = plus ? (j - i) : (i - j);
      if (r < 0 || h[r].is_zero()) continue;
      m.set_entry(i, j, h[r]);
    }
  }
  return m;
}

void BandMatrix::set_entry(int i, int j, const LaurentPoly& v) {
  if (std::abs(i) > window_ || std::abs(j) > window_)
    fail(Status::WindowExceeded, "band matrix index outside the window");
  if (v.is_zero()) return;
  entries_[{i, j}] = v;
}

LaurentPoly BandMatrix::entry(int i, int j) const {
  if (std::abs(i) > window_ || std::abs(j) > window_)
    fail(Status::WindowExceeded, "band matrix index outside the window");
  auto it = entries_.find({i, j});
  return it == entries_.end() ? LaurentPoly(reg_) : it->second;
}

WedgeVector psi(int i, const WedgeVector& v) {
  if (std::abs(i) > v.window())
    fail(Status::WindowExceeded, "fermionic index outside the truncation window");
  const int c = v.charge();
  WedgeVector out(v.registry(), c + 1, v.dsym());
  for (const auto& [mu, coeff] : v.terms()) {
    const int prefix = mu.length() + std::abs(i - c) + 4;
    std::vector<long> s = index_prefix(mu, c, prefix);
    if (i < s.back()) continue;  // i sits in the fully occupied tail
    auto pos = std::lower_bound(s.begin(), s.end(), static_cast<long>(i),
                                std::greater<long>());
    if (pos != s.end() && *pos == i) continue;  // wedge repetition
    const int above = static_cast<int>(pos - s.begin());
    s.insert(pos, i);
    Partition nmu = partition_from_prefix(s, c + 1);
    LaurentPoly t = coeff;
    if (above % 2 == 1) t = -t;
    out.add_term(nmu, t);
  }
  return out;
}

WedgeVector psi_star(int i, const WedgeVector& v) {
  if (std::abs(i) > v.window())
    fail(Status::WindowExceeded, "fermionic index outside the truncation window");
  const int c = v.charge();
  WedgeVector out(v.registry(), c - 1, v.dsym());
  for (const auto& [mu, coeff] : v.terms()) {
    const int prefix = mu.length() + std::abs(i - c) + 4;
    std::vector<long> s = index_prefix(mu, c, prefix);
    auto pos = std::find(s.begin(), s.end(), static_cast<long>(i));
    if (pos == s.end()) continue;  // index absent
    const int above = static_cast<int>(pos - s.begin());
    s.erase(pos);
    Partition nmu = partition_from_prefix(s, c - 1);
    LaurentPoly t = coeff;
    if (above % 2 == 1) t = -t;
    out.add_term(nmu, t);
  }
  return out;
}

WedgeVector alpha(int n, const WedgeVector& v) {
  if (n == 0) {
    WedgeVector out = v;
    out *= Rat(v.charge());
    return out;
  }
  const int c = v.charge();
  WedgeVector out(v.registry(), c, v.dsym());
  for (const auto& [mu, coeff] : v.terms()) {
    const int prefix = mu.length() + std::abs(n) + 4;
    std::vector<long> s = index_prefix(mu, c, prefix);
    for (size_t j = 0; j < s.size(); ++j) {
      const long target = s[j] - n;
      if (target < s.back()) continue;  // lands in the occupied tail
      if (std::find(s.begin(), s.end(), target) != s.end()) continue;
      int crossings = 0;
      const long lo = std::min(target, s[j]), hi = std::max(target, s[j]);
      for (size_t k = 0; k < s.size(); ++k) {
        if (k != j && s[k] > lo && s[k] < hi) ++crossings;
      }
      std::vector<long> ns = s;
      ns[j] = target;
      std::sort(ns.begin(), ns.end(), std::greater<long>());
      Partition nmu = partition_from_prefix(ns, c);
      LaurentPoly t = coeff;
      if (crossings % 2 == 1) t = -t;
      out.add_term(nmu, t);
    }
  }
  return out;
}

LaurentPoly poly_det(const RegistryPtr& reg, const std::vector<std::vector<LaurentPoly>>& m) {
  const size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(reg, Rat(1));
  if (n > 24) fail(Status::InvalidArg, "determinant size exceeds the supported bound");
  std::map<uint32_t, LaurentPoly> memo;
  auto rec = [&](auto&& self, uint32_t mask) -> const LaurentPoly& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    LaurentPoly det(reg);
    if (mask == 0) {
      det = LaurentPoly::constant(reg, Rat(1));
    } else {
      const size_t row = n - static_cast<size_t>(__builtin_popcount(mask));
      int sign = 1;
      for (size_t col = 0; col < n; ++col) {
        if (!(mask & (1u << col))) continue;
        if (!m[row][col].is_zero()) {
          LaurentPoly t = m[row][col] * self(self, mask & ~(1u << col));
          if (sign < 0) t = -t;
          det += t;
        }
        sign = -sign;
      }
    }
    return memo.emplace(mask, std::move(det)).first->second;
  };
  return rec(rec, (1u << n) - 1);
}

namespace {

LaurentPoly rho_det(const BandMatrix& x, const Partition& mu, const Partition& nu, int c,
                    int n) {
  std::vector<std::vector<LaurentPoly>> m(n + 1, std::vector<LaurentPoly>(n + 1));
  for (int i = 0; i <= n; ++i) {
    const int a = mu.part(i + 1) - i + c;
    for (int j = 0; j <= n; ++j) {
      const int b = nu.part(j + 1) - j + c;
      m[i][j] = x.entry(a, b);
    }
  }
  return poly_det(x.registry(), m);
}

}  // namespace

LaurentPoly rho_matrix_element(const BandMatrix& x, const Partition& mu, const Partition& nu,
                               int c, int n_limit) {
  if (n_limit < std::max(mu.length(), nu.length()))
    fail(Status::InvalidArg, "truncation order smaller than the partition lengths");
  const Partition empty;
  LaurentPoly num0 = rho_det(x, mu, nu, c, n_limit);
  LaurentPoly den0 = rho_det(x, empty, empty, c, n_limit);
  LaurentPoly num1 = rho_det(x, mu, nu, c, n_limit + 1);
  LaurentPoly den1 = rho_det(x, empty, empty, c, n_limit + 1);
  if (den0.is_zero() || den1.is_zero())
    fail(Status::UnstableLimit, "vacuum determinant vanished at the truncation order");
  if (num0 * den1 != num1 * den0)
    fail(Status::UnstableLimit, "determinant ratio has not stabilized");
  auto ratio = core::divide_exact(num0, den0);
  if (!ratio)
    fail(Status::InvalidArg, "matrix element is not a Laurent polynomial at this window");
  return *ratio;
}

LaurentPoly skew_schur_alphabet(const RegistryPtr& reg, const LaurentPoly& alphabet,
                                const Partition& outer, const Partition& inner) {
  const int n = std::max(outer.length(), inner.length());
  if (n == 0) return LaurentPoly::constant(reg, Rat(1));
  std::map<int, LaurentPoly> hcache;
  auto h = [&](int r) -> const LaurentPoly& {
    auto it = hcache.find(r);
    if (it == hcache.end()) it = hcache.emplace(r, sym::h_alphabet(reg, alphabet, r)).first;
    return it->second;
  };
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = h(outer.part(i) - i - inner.part(j) + j);
  return poly_det(reg, m);
}

WedgeVector gamma_plus_fock(const LaurentPoly& alphabet, const WedgeVector& v) {
  WedgeVector out(v.registry(), v.charge(), v.dsym());
  for (const auto& [nu, coeff] : v.terms()) {
    for (const Partition& mu : subpartitions(nu)) {
      LaurentPoly s = skew_schur_alphabet(v.registry(), alphabet, nu, mu);
      if (s.is_zero()) continue;
      out.add_term(mu, coeff * s);
    }
  }
  return out;
}

WedgeVector gamma_minus_fock(const LaurentPoly& alphabet, const WedgeVector& v) {
  WedgeVector out(v.registry(), v.charge(), v.dsym());
  std::vector<Partition> all = core::enumerate_partitions_up_to(v.dsym());
  for (const auto& [nu, coeff] : v.terms()) {
    for (const Partition& la : all) {
      if (la.size() < nu.size() || !contains(la, nu)) continue;
      LaurentPoly s = skew_schur_alphabet(v.registry(), alphabet, la, nu);
      if (s.is_zero()) continue;
      out.add_term(la, coeff * s);
    }
  }
  return out;
}

SymFunc bf_tilde_apply(int i, bool star, const SymFunc& f) {
  SymFunc fs = sym::convert(f, sym::Basis::S);
  const RegistryPtr& reg = f.registry();
  SymFunc out(reg, sym::Basis::S, f.dsym());
  for (const auto& [nu, coeff] : fs.terms()) {
    const int target = nu.size() + (star ? -i : i);
    if (target < 0) continue;
    for (const Partition& ka : subpartitions(nu)) {
      // Gamma_+ leg: star=false uses Gamma_+^{-1}(z^{-1}) (vertical strips,
      // sign (-1)^{|nu/ka|}); star=true uses Gamma_+(z^{-1}) (horizontal
      // strips, no sign).
      if (star ? !horizontal_strip(nu, ka) : !vertical_strip(nu, ka)) continue;
      const int drop = nu.size() - ka.size();
      for (const Partition& la : core::enumerate_partitions(target)) {
        if (!contains(la, ka)) continue;
        // Gamma_- leg: star=false uses Gamma_-(z) (horizontal strips);
        // star=true uses Gamma_-^{-1}(z) (vertical strips, sign).
        if (star ? !vertical_strip(la, ka) : !horizontal_strip(la, ka)) continue;
        const int raise = la.size() - ka.size();
        int sign_exp = star ? raise : drop;
        LaurentPoly t = coeff;
        if (sign_exp % 2 == 1) t = -t;
        out.add_term(la, t);
      }
    }
  }
  return out;
}

WedgeVector charge_shift(int steps, const WedgeVector& v) {
  WedgeVector out(v.registry(), v.charge() + steps, v.dsym());
  for (const auto& [mu, c] : v.terms()) out.add_term(mu, c);
  return out;
}

WedgeVector bf_psi(int i, const WedgeVector& v) {
  // psi_i = psi~_{i-c-1} Q on the charge-c sector: the shift Q acts first and
  // the mode index is taken relative to the target sector.
  const int c = v.charge();
  return phi_map(c + 1, bf_tilde_apply(i - c - 1, false, phi_inv(v)));
}

WedgeVector bf_psi_star(int i, const WedgeVector& v) {
  // psi*_i = Q^{-1} psi~*_{i-c}: the dual mode acts in the source sector.
  const int c = v.charge();
  return phi_map(c - 1, bf_tilde_apply(i - c, true, phi_inv(v)));
}

WedgeVector phi_map(int c, const SymFunc& f) {
  SymFunc fs = sym::convert(f, sym::Basis::S);
  WedgeVector out(f.registry(), c, f.dsym());
  for (const auto& [mu, coeff] : fs.terms()) out.add_term(mu, coeff);
  return out;
}

SymFunc phi_inv(const WedgeVector& v) {
  SymFunc out(v.registry(), sym::Basis::S, v.dsym());
  for (const auto& [mu, coeff] : v.terms()) out.add_term(mu, coeff);
  return out;
}

}  // namespace klv::fock
