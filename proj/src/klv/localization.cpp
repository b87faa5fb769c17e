#include "klv/localization.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "klv/error.hpp"
#include "klv/fock.hpp"
#include "klv/omega.hpp"
#include "klv/registry.hpp"

namespace klv::loc {

namespace {

using core::DegCaps;
using core::Expo;
using core::VarRole;

// Inverse of a one-term monomial.
LaurentPoly weight_inverse(const LaurentPoly& w) {
  const auto& [e, c] = *w.terms().begin();
  Expo inv(e.size());
  for (size_t t = 0; t < e.size(); ++t) inv[t] = -e[t];
  return LaurentPoly::monomial(w.registry(), std::move(inv), Rat(1) / c);
}

// k-th power of a one-term monomial (k may be negative).
LaurentPoly weight_power(const LaurentPoly& w, int k) {
  const auto& [e, c] = *w.terms().begin();
  Expo pe(e.size());
  for (size_t t = 0; t < e.size(); ++t) pe[t] = e[t] * k;
  return LaurentPoly::monomial(w.registry(), std::move(pe), core::rat_pow(c, k));
}

// Negates the exponents of the auxiliary x variables only.
LaurentPoly invert_x(const LaurentPoly& p) {
  const auto& xi = p.registry()->indices(VarRole::AuxX);
  LaurentPoly out(p.registry());
  for (const auto& [e, c] : p.terms()) {
    Expo ne = e;
    for (size_t t : xi) ne[t] = -ne[t];
    out.add_term(std::move(ne), c);
  }
  return out;
}

Rat factorial(int n) {
  Rat f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int max_schur_length(const sym::SymFunc& f) {
  sym::SymFunc fs = sym::convert(f, sym::Basis::S);
  int len = 0;
  for (const auto& [mu, c] : fs.terms()) len = std::max(len, mu.length());
  return len;
}

}  // namespace

TorusRep::TorusRep(RegistryPtr reg, std::vector<LaurentPoly> weights)
    : reg_(std::move(reg)), weights_(std::move(weights)) {
  if (!reg_) fail(Status::InvalidArg, "null registry");
  for (const auto& w : weights_) {
    if (!w.is_monomial()) fail(Status::InvalidArg, "torus weight must be a single monomial");
    if (w.registry().get() != reg_.get()) fail(Status::InvalidArg, "registry mismatch");
  }
  for (size_t a = 0; a < weights_.size() && distinct_; ++a)
    for (size_t b = a + 1; b < weights_.size(); ++b)
      if (weights_[a] == weights_[b]) {
        distinct_ = false;
        break;
      }
}

TorusRep TorusRep::from_values(const RegistryPtr& reg, const std::vector<Rat>& values) {
  std::vector<LaurentPoly> ws;
  ws.reserve(values.size());
  for (const Rat& v : values) {
    if (v == 0) fail(Status::InvalidArg, "torus weight must be nonzero");
    ws.push_back(LaurentPoly::constant(reg, v));
  }
  return TorusRep(reg, std::move(ws));
}

LaurentPoly TorusRep::character() const {
  LaurentPoly acc(reg_);
  for (const auto& w : weights_) acc += w;
  return acc;
}

TorusRep TorusRep::conjugate() const {
  std::vector<LaurentPoly> ws;
  ws.reserve(weights_.size());
  for (const auto& w : weights_) ws.push_back(weight_inverse(w));
  return TorusRep(reg_, std::move(ws));
}

LaurentPoly TorusRep::power_sum(int k) const {
  if (k == 0) fail(Status::InvalidArg, "power sum index must be nonzero");
  LaurentPoly acc(reg_);
  for (const auto& w : weights_) acc += weight_power(w, k);
  return acc;
}

LaurentPoly TorusRep::det() const {
  LaurentPoly acc = LaurentPoly::constant(reg_, Rat(1));
  for (const auto& w : weights_) acc = acc * w;
  return acc;
}

LaurentPoly TorusRep::elementary(int a) const {
  if (a < 0 || a > size()) return LaurentPoly(reg_);
  std::vector<LaurentPoly> e(a + 1, LaurentPoly(reg_));
  e[0] = LaurentPoly::constant(reg_, Rat(1));
  int seen = 0;
  for (const auto& w : weights_) {
    ++seen;
    for (int j = std::min(a, seen); j >= 1; --j) e[j] += e[j - 1] * w;
  }
  return e[a];
}

LaurentPoly TorusRep::complete(int r) const {
  if (r < 0) return LaurentPoly(reg_);
  std::vector<LaurentPoly> h(r + 1, LaurentPoly(reg_));
  h[0] = LaurentPoly::constant(reg_, Rat(1));
  for (const auto& w : weights_) {
    for (int j = 1; j <= r; ++j) h[j] += h[j - 1] * w;
  }
  return h[r];
}

LaurentPoly TorusRep::eval(const sym::SymFunc& f) const {
  if (f.registry().get() != reg_.get()) fail(Status::InvalidArg, "registry mismatch");
  sym::SymFunc fp = sym::convert(f, sym::Basis::P);
  std::map<int, LaurentPoly> psums;
  auto psum = [&](int k) -> const LaurentPoly& {
    auto it = psums.find(k);
    if (it == psums.end()) it = psums.emplace(k, power_sum(k)).first;
    return it->second;
  };
  LaurentPoly acc(reg_);
  for (const auto& [mu, c] : fp.terms()) {
    LaurentPoly t = c;
    for (int i = 1; i <= mu.length(); ++i) t = t * psum(mu.part(i));
    acc += t;
  }
  return acc;
}

LaurentPoly char_U(const RegistryPtr& reg, const PartitionTuple& mu) {
  const auto& wi = reg->indices(VarRole::FramingW);
  if (wi.size() < mu.size())
    fail(Status::InvalidArg, "registry lacks framing variables for the tuple");
  const int z1 = reg->find("z1"), z2 = reg->find("z2");
  if (z1 < 0 || z2 < 0) fail(Status::InvalidArg, "registry lacks torus variables");
  LaurentPoly acc(reg);
  for (size_t slot = 0; slot < mu.size(); ++slot) {
    const Partition& p = mu[slot];
    for (int row = 1; row <= p.length(); ++row) {
      for (int col = 1; col <= p.part(row); ++col) {
        Expo e(reg->size(), 0);
        e[static_cast<size_t>(z1)] = col - 1;
        e[static_cast<size_t>(z2)] = row - 1;
        e[wi[slot]] = 1;
        acc.add_term(std::move(e), Rat(1));
      }
    }
  }
  return acc;
}

LaurentPoly char_E(const RegistryPtr& reg, const Partition& mu, const Partition& nu) {
  const int z1 = reg->find("z1"), z2 = reg->find("z2");
  if (z1 < 0 || z2 < 0) fail(Status::InvalidArg, "registry lacks torus variables");
  LaurentPoly acc(reg);
  auto add = [&](int e1, int e2) {
    Expo e(reg->size(), 0);
    e[static_cast<size_t>(z1)] = e1;
    e[static_cast<size_t>(z2)] = e2;
    acc.add_term(std::move(e), Rat(1));
  };
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j) add(-core::arm(mu, i, j) - 1, core::leg(nu, i, j));
  for (int i = 1; i <= nu.length(); ++i)
    for (int j = 1; j <= nu.part(i); ++j) add(core::arm(nu, i, j), -core::leg(mu, i, j) - 1);
  return acc;
}

LaurentPoly tangent_char(const RegistryPtr& reg, const PartitionTuple& mu) {
  const auto& wi = reg->indices(VarRole::FramingW);
  if (wi.size() < mu.size())
    fail(Status::InvalidArg, "registry lacks framing variables for the tuple");
  LaurentPoly acc(reg);
  for (size_t i = 0; i < mu.size(); ++i) {
    for (size_t j = 0; j < mu.size(); ++j) {
      Expo e(reg->size(), 0);
      e[wi[j]] += 1;
      e[wi[i]] -= 1;
      acc += char_E(reg, mu[i], mu[j]) * LaurentPoly::monomial(reg, std::move(e), Rat(1));
    }
  }
  return acc;
}

FixedPointData fixed_point_data(const RegistryPtr& reg, const PartitionTuple& mu) {
  FixedPointData out;
  out.mu = mu;
  out.char_u = char_U(reg, mu);
  out.tangent = tangent_char(reg, mu);
  Expo det(reg->size(), 0);
  for (const auto& [e, c] : out.char_u.terms())
    for (size_t t = 0; t < e.size(); ++t) det[t] += e[t];
  out.det_u = LaurentPoly::monomial(reg, std::move(det), Rat(1));
  return out;
}

RatFunc moduli_inner(const sym::SymFunc& f, const sym::SymFunc& g, int r, int n, int k) {
  const RegistryPtr& reg = f.registry();
  if (g.registry().get() != reg.get()) fail(Status::InvalidArg, "registry mismatch");
  if (r < 0 || n < 0) fail(Status::InvalidArg, "rank and degree must be nonnegative");
  RatFunc acc{LaurentPoly(reg)};
  for (const PartitionTuple& mu : core::enumerate_tuples(r, n)) {
    FixedPointData fp = fixed_point_data(reg, mu);
    LaurentPoly fval = sym::plethystic_eval(fp.char_u.conjugate(), f);
    LaurentPoly gval = sym::plethystic_eval(fp.char_u, g);
    LaurentPoly detk = k == 0 ? LaurentPoly::constant(reg, Rat(1))
                              : fp.det_u.power_substitute(k);
    RatFunc term = core::omega_product(fp.tangent.conjugate());
    term.mul_num(fval * gval * detk);
    acc = acc + term;
  }
  return acc;
}

RatFunc grass_inner(const sym::SymFunc& f, const sym::SymFunc& g, const TorusRep& x, int m) {
  const RegistryPtr& reg = x.registry();
  if (f.registry().get() != reg.get() || g.registry().get() != reg.get())
    fail(Status::InvalidArg, "registry mismatch");
  if (!x.distinct()) fail(Status::RepeatedWeights, "grassmannian requires distinct weights");
  const int n_weights = x.size();
  if (m < 0 || m > n_weights) fail(Status::InvalidArg, "subspace dimension out of range");

  RatFunc acc{LaurentPoly(reg)};
  std::vector<int> pick(m);
  for (int t = 0; t < m; ++t) pick[t] = t;
  while (true) {
    std::vector<LaurentPoly> v_wts, q_wts;
    std::vector<bool> in_v(n_weights, false);
    for (int t : pick) in_v[static_cast<size_t>(t)] = true;
    for (int t = 0; t < n_weights; ++t)
      (in_v[static_cast<size_t>(t)] ? v_wts : q_wts).push_back(x.weights()[t]);

    TorusRep v(reg, v_wts);
    TorusRep q(reg, q_wts);
    RatFunc term{q.conjugate().eval(f) * v.eval(g)};
    for (const auto& s : q_wts) {
      LaurentPoly sbar = weight_inverse(s);
      for (const auto& b : v_wts)
        term.mul_den_factor(LaurentPoly::constant(reg, Rat(1)) - sbar * b);
    }
    acc = acc + term;

    // next m-combination in lexicographic order
    int t = m - 1;
    while (t >= 0 && pick[t] == n_weights - m + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < m; ++u) pick[u] = pick[u - 1] + 1;
  }
  return acc;
}

LambdaFunctional::LambdaFunctional(TorusRep x) : x_(std::move(x)), xbar_(x_.conjugate()) {}

LaurentPoly LambdaFunctional::lambda_prime(int i) const {
  if (i > 0) return LaurentPoly(x_.registry());
  return xbar_.complete(-i);
}

LaurentPoly LambdaFunctional::lambda_second(int i) const {
  const int n = x_.size();
  if (i < n) return LaurentPoly(x_.registry());
  LaurentPoly val = x_.complete(i - n) * x_.det();
  return (n + 1) % 2 == 1 ? -val : val;
}

LaurentPoly LambdaFunctional::lambda(int i) const {
  return lambda_prime(i) + lambda_second(i);
}

LaurentPoly lambda_pairing_expand(const sym::SymFunc& f, const sym::SymFunc& g,
                                  const TorusRep& x, int m, LambdaPart part) {
  const RegistryPtr& reg = x.registry();
  if (max_schur_length(f) > m || max_schur_length(g) > m)
    fail(Status::LengthViolation, "schur length exceeds the number of variables");
  LambdaFunctional lam(x);
  auto lam_at = [&](int i) {
    return part == LambdaPart::Full ? lam.lambda(i) : lam.lambda_prime(i);
  };
  if (m == 0) {
    LaurentPoly fc = sym::convert(f, sym::Basis::S).coeff(Partition());
    LaurentPoly gc = sym::convert(g, sym::Basis::S).coeff(Partition());
    return fc * gc;
  }

  DegCaps caps;  // unlimited
  LaurentPoly fx = invert_x(sym::restrict_to_x(f, m, caps));
  LaurentPoly gx = sym::restrict_to_x(g, m, caps);
  LaurentPoly delta = sym::vandermonde_x(reg, m);
  LaurentPoly prod = delta * invert_x(delta) * fx * gx;

  const auto& xi = reg->indices(VarRole::AuxX);
  std::map<int, LaurentPoly> lam_memo;
  auto lam_memo_at = [&](int i) -> const LaurentPoly& {
    auto it = lam_memo.find(i);
    if (it == lam_memo.end()) it = lam_memo.emplace(i, lam_at(i)).first;
    return it->second;
  };

  LaurentPoly acc(reg);
  for (const auto& [e, c] : prod.terms()) {
    Expo rest = e;
    LaurentPoly t = LaurentPoly::monomial(reg, Expo(reg->size(), 0), c);
    bool zero = false;
    for (int t_i = 0; t_i < m; ++t_i) {
      size_t slot = xi[static_cast<size_t>(t_i)];
      const LaurentPoly& lv = lam_memo_at(e[slot]);
      if (lv.is_zero()) {
        zero = true;
        break;
      }
      rest[slot] = 0;
      t = t * lv;
    }
    if (zero) continue;
    acc += t * LaurentPoly::monomial(reg, std::move(rest), Rat(1));
  }
  acc *= Rat(1) / factorial(m);
  return acc;
}

LaurentPoly lambda_pairing_det(const sym::SymFunc& f, const sym::SymFunc& g,
                               const TorusRep& x, int m, LambdaPart part) {
  const RegistryPtr& reg = x.registry();
  if (max_schur_length(f) > m || max_schur_length(g) > m)
    fail(Status::LengthViolation, "schur length exceeds the matrix size");
  LambdaFunctional lam(x);
  std::map<int, LaurentPoly> lam_memo;
  auto lam_at = [&](int i) -> const LaurentPoly& {
    auto it = lam_memo.find(i);
    if (it == lam_memo.end())
      it = lam_memo
               .emplace(i, part == LambdaPart::Full ? lam.lambda(i) : lam.lambda_prime(i))
               .first;
    return it->second;
  };

  sym::SymFunc fs = sym::convert(f, sym::Basis::S);
  sym::SymFunc gs = sym::convert(g, sym::Basis::S);
  LaurentPoly acc(reg);
  if (m == 0) {
    return fs.coeff(Partition()) * gs.coeff(Partition());
  }
  for (const auto& [mu, cf] : fs.terms()) {
    for (const auto& [nu, cg] : gs.terms()) {
      std::vector<std::vector<LaurentPoly>> mat(m, std::vector<LaurentPoly>(m));
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          mat[i - 1][j - 1] = lam_at(nu.part(j) - j - mu.part(i) + i);
      acc += cf * cg * fock::poly_det(reg, mat);
    }
  }
  return acc;
}

RatFunc lambda_pairing(const sym::SymFunc& f, const sym::SymFunc& g, const TorusRep& x,
                       int m) {
  LaurentPoly by_det = lambda_pairing_det(f, g, x, m);
  LaurentPoly by_expand = lambda_pairing_expand(f, g, x, m);
  if (by_det != by_expand)
    fail(Status::Internal, "lambda pairing paths disagree");
  return RatFunc(by_det);
}

LaurentPoly z_matrix(const TorusRep& x, int n, int i, int j) {
  const RegistryPtr& reg = x.registry();
  LaurentPoly acc(reg);
  const int lo = std::max(0, n + 1 - i);
  const int hi = std::min(x.size(), j - i);
  for (int a = lo; a <= hi; ++a) {
    LaurentPoly t = x.elementary(a) * x.complete(j - i - a);
    if (a % 2 == 1) t = -t;
    acc += t;
  }
  return -acc;
}

namespace {

// Exact evaluation of a symmetric function at a rational alphabet; the
// LaurentPoly coefficients are evaluated with the same environment.
Rat eval_at_rationals(const sym::SymFunc& f, const std::vector<Rat>& alphabet,
                      const std::map<std::string, Rat>& env) {
  sym::SymFunc fp = sym::convert(f, sym::Basis::P);
  std::map<int, Rat> psums;
  auto psum = [&](int k) {
    auto it = psums.find(k);
    if (it == psums.end()) {
      Rat s(0);
      for (const Rat& a : alphabet) s += core::rat_pow(a, k);
      it = psums.emplace(k, s).first;
    }
    return it->second;
  };
  Rat acc(0);
  for (const auto& [mu, c] : fp.terms()) {
    Rat t = c.evaluate(env);
    for (int i = 1; i <= mu.length(); ++i) t *= psum(mu.part(i));
    acc += t;
  }
  return acc;
}

}  // namespace

RatFunc f_N(const sym::SymFunc& f, const sym::SymFunc& g, int r, int n, int k, int big_n,
            const std::map<std::string, Rat>& zw_values) {
  const RegistryPtr& reg = f.registry();
  if (g.registry().get() != reg.get()) fail(Status::InvalidArg, "registry mismatch");
  if (reg->indices(VarRole::AuxV).empty())
    fail(Status::InvalidArg, "registry lacks the auxiliary v variable");
  if (r < 1 || n < 0 || big_n < 1) fail(Status::InvalidArg, "invalid probe parameters");
  const std::string vname = reg->name(reg->indices(VarRole::AuxV)[0]);

  auto bound = [&](const std::string& name) {
    auto it = zw_values.find(name);
    if (it == zw_values.end())
      fail(Status::InvalidArg, "missing value for variable " + name);
    return it->second;
  };
  const Rat z1 = bound("z1"), z2 = bound("z2");
  std::vector<Rat> wv(static_cast<size_t>(r));
  for (int a = 0; a < r; ++a) wv[static_cast<size_t>(a)] = bound("w" + std::to_string(a + 1));

  // Weights of X_N: w_a z1^i z2^j over the N x N grid, 0-indexed.
  std::vector<Rat> xs;
  for (int a = 0; a < r; ++a)
    for (int i = 0; i < big_n; ++i)
      for (int j = 0; j < big_n; ++j)
        xs.push_back(wv[static_cast<size_t>(a)] * core::rat_pow(z1, i) * core::rat_pow(z2, j));
  const int total = static_cast<int>(xs.size());
  if (n > total) fail(Status::InvalidArg, "codimension exceeds the probe dimension");

  // Signed monomials of M - 1 = z1 z2 - z1 - z2, as values.
  const std::vector<std::pair<Rat, int>> m_minus_one = {
      {z1 * z2, 1}, {z1, -1}, {z2, -1}};

  RatFunc acc{LaurentPoly(reg)};
  std::vector<int> pick(n);
  for (int t = 0; t < n; ++t) pick[t] = t;
  auto advance = [&]() {
    int t = n - 1;
    while (t >= 0 && pick[t] == total - n + t) --t;
    if (t < 0) return false;
    ++pick[t];
    for (int u = t + 1; u < n; ++u) pick[u] = pick[u - 1] + 1;
    return true;
  };
  bool more = true;
  while (more) {
    std::vector<Rat> vp, vrest;  // V' values and V values
    {
      std::vector<bool> in_vp(static_cast<size_t>(total), false);
      for (int t : pick) in_vp[static_cast<size_t>(t)] = true;
      for (int t = 0; t < total; ++t)
        (in_vp[static_cast<size_t>(t)] ? vp : vrest).push_back(xs[static_cast<size_t>(t)]);
    }

    // conj E0 + conj E1: values with positive multiplicity.
    std::map<Rat, int> mult0;
    for (const Rat& b : vrest)
      for (const Rat& s : vp) mult0[b / s] += 1;
    for (int a = 0; a < r; ++a)
      for (const Rat& s : vp) mult0[z1 * z2 * s / wv[static_cast<size_t>(a)]] += 1;
    // conj E2 = (M - 1) V conj(V'): signed values, each factor carrying v.
    std::map<Rat, int> mult2;
    for (const auto& [mval, msign] : m_minus_one)
      for (const Rat& b : vrest)
        for (const Rat& s : vp) mult2[mval * b / s] += msign;

    auto it1 = mult0.find(Rat(1));
    const int c1_fixed = it1 == mult0.end() ? 0 : it1->second;
    auto it2 = mult2.find(Rat(1));
    const int c1_v = it2 == mult2.end() ? 0 : it2->second;
    if (c1_fixed > 0)
      fail(Status::DivergentOmega, "omega argument has a positive unit multiplicity");
    if (c1_fixed == 0 && c1_v > 0)
      fail(Status::DivergentOmega, "omega argument has a pole at v = 1");
    if (c1_fixed < 0 || c1_v < 0) {
      // (1 - 1) appears with positive exponent: the summand vanishes at v = 1
      // (identically, when the fixed part carries it). Prune.
      more = advance();
      continue;
    }

    std::vector<Rat> vp_bar;
    vp_bar.reserve(vp.size());
    Rat det(1);
    for (const Rat& s : vp) {
      vp_bar.push_back(Rat(1) / s);
      det *= s;
    }
    Rat scalar = eval_at_rationals(f, vp_bar, zw_values) *
                 eval_at_rationals(g, vp, zw_values) * core::rat_pow(det, k);
    for (const auto& [val, c] : mult0) {
      if (c == 0 || val == 1) continue;
      scalar *= core::rat_pow(Rat(1) - val, -c);
    }

    RatFunc term{LaurentPoly::constant(reg, scalar)};
    for (const auto& [val, c] : mult2) {
      if (c == 0) continue;
      LaurentPoly factor =
          LaurentPoly::constant(reg, Rat(1)) - LaurentPoly::var(reg, vname, 1, val);
      term.mul_den_factor(factor, c);
    }
    acc = acc + term;
    more = advance();
  }
  return acc;
}

std::string moduli_terms_json(const sym::SymFunc& f, const sym::SymFunc& g, int r, int n,
                              int k) {
  const RegistryPtr& reg = f.registry();
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const PartitionTuple& mu : core::enumerate_tuples(r, n)) {
    FixedPointData fp = fixed_point_data(reg, mu);
    LaurentPoly fval = sym::plethystic_eval(fp.char_u.conjugate(), f);
    LaurentPoly gval = sym::plethystic_eval(fp.char_u, g);
    LaurentPoly detk = k == 0 ? LaurentPoly::constant(reg, Rat(1))
                              : fp.det_u.power_substitute(k);
    RatFunc term = core::omega_product(fp.tangent.conjugate());
    term.mul_num(fval * gval * detk);
    if (!first) os << ",";
    first = false;
    os << "{\"tuple\":\"" << core::json_escape(core::tuple_str(mu)) << "\","
       << "\"tangent\":" << fp.tangent.json() << ","
       << "\"term\":" << term.json() << "}";
  }
  os << "]";
  return os.str();
}

}  // namespace klv::loc
