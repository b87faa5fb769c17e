#include "klv/vertexops.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "klv/error.hpp"
#include "klv/fock.hpp"
#include "klv/omega.hpp"

namespace klv::vo {

namespace {

using core::Expo;
using core::VarRole;
using sym::Basis;

// mu with one extra part m, keeping the parts weakly decreasing.
Partition with_part(const Partition& mu, int m) {
  std::vector<int> parts = mu.parts();
  auto it = std::upper_bound(parts.begin(), parts.end(), m, std::greater<int>());
  parts.insert(it, m);
  return Partition(std::move(parts));
}

bool subpartition(const Partition& inner, const Partition& outer) {
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

// The homomorphism p_k -> p_k + sign * (k-th power sum of the weights of x),
// expanded term by term over the P basis: each part either survives or is
// replaced by its weight power sum, so a p_mu line fans out over the
// subpartitions of mu. Degrees never grow.
SymFunc half_vertex_plus(const TorusRep& x, int sign, const SymFunc& u, int dsym) {
  const RegistryPtr& reg = u.registry();
  SymFunc up = sym::convert(u.with_dsym(std::min(u.dsym(), dsym)), Basis::P);
  SymFunc out(reg, Basis::P, dsym);
  std::map<int, LaurentPoly> shifts;
  for (const auto& [mu, c] : up.terms()) {
    std::map<Partition, LaurentPoly> cur;
    cur.emplace(Partition(), c);
    for (int i = 1; i <= mu.length(); ++i) {
      const int m = mu.part(i);
      auto it = shifts.find(m);
      if (it == shifts.end()) {
        LaurentPoly s = x.power_sum(m);
        if (sign < 0) s = -s;
        it = shifts.emplace(m, std::move(s)).first;
      }
      std::map<Partition, LaurentPoly> next;
      for (const auto& [nu, v] : cur) {
        auto [kept, fresh] = next.emplace(with_part(nu, m), v);
        if (!fresh) kept->second += v;
        if (!it->second.is_zero()) {
          LaurentPoly dropped = v * it->second;
          auto [slot, inserted] = next.emplace(nu, dropped);
          if (!inserted) slot->second += dropped;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [nu, v] : cur)
      if (!v.is_zero()) out.add_term(nu, v);
  }
  return out;
}

// (1 - M)(z -> z^m) = z1^m + z2^m - z1^m z2^m, the diagonal-twist eigenvalue
// factor of a length-one cycle; cached per part size.
const LaurentPoly& eig_factor(const RegistryPtr& reg, int m, std::map<int, LaurentPoly>& cache) {
  auto it = cache.find(m);
  if (it == cache.end()) {
    LaurentPoly z1 = LaurentPoly::var(reg, "z1", m);
    LaurentPoly z2 = LaurentPoly::var(reg, "z2", m);
    it = cache.emplace(m, z1 + z2 - z1 * z2).first;
  }
  return it->second;
}

LaurentPoly eig_mu(const RegistryPtr& reg, const Partition& mu, std::map<int, LaurentPoly>& cache) {
  LaurentPoly out = LaurentPoly::constant(reg, Rat(1));
  for (int i = 1; i <= mu.length(); ++i) out = out * eig_factor(reg, mu.part(i), cache);
  return out;
}

int min_homog_degree(const SymFunc& f) {
  if (f.is_zero()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& [mu, c] : f.terms()) d = std::min(d, mu.size());
  return d;
}

int sat_add(int a, int b) {
  const long s = static_cast<long>(a) + b;
  if (s > kShiftUnbounded) return kShiftUnbounded;
  if (s < -kShiftUnbounded) return -kShiftUnbounded;
  return static_cast<int>(s);
}

std::map<std::string, Rat> framing_substitution(const RegistryPtr& reg, int r,
                                                const std::vector<Rat>& values) {
  const auto& widx = reg->indices(VarRole::FramingW);
  if (static_cast<int>(widx.size()) < r)
    fail(Status::InvalidArg, "registry lacks the framing variables for rank " + std::to_string(r));
  std::map<std::string, Rat> subs;
  for (int a = 0; a < r; ++a) subs[reg->name(widx[a])] = values[a];
  return subs;
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

// ---- LinOp ----

LinOp LinOp::gamma_plus(TorusRep x, int sign) {
  LinOp op(Kind::GammaPlus);
  op.rep_ = std::move(x);
  op.sign_ = sign < 0 ? -1 : 1;
  return op;
}

LinOp LinOp::gamma_minus(TorusRep x) {
  LinOp op(Kind::GammaMinus);
  op.rep_ = std::move(x);
  return op;
}

LinOp LinOp::mult(SymFunc f) {
  LinOp op(Kind::Mult);
  op.f_ = std::move(f);
  return op;
}

LinOp LinOp::mult_adjoint(SymFunc f) {
  LinOp op(Kind::MultAdjoint);
  op.f_ = std::move(f);
  return op;
}

LinOp LinOp::project(int n) {
  if (n < 0) fail(Status::InvalidArg, "projection rank must be nonnegative");
  LinOp op(Kind::Project);
  op.rows_ = n;
  return op;
}

LinOp LinOp::pleth_diag(LaurentPoly c) {
  LinOp op(Kind::PlethDiag);
  op.diag_ = std::move(c);
  return op;
}

LinOp LinOp::compose(std::vector<LinOp> ops) {
  LinOp op(Kind::Compose);
  op.ops_ = std::move(ops);
  return op;
}

SymFunc LinOp::apply(const SymFunc& u, int dsym) const {
  switch (kind_) {
    case Kind::GammaPlus:
      return half_vertex_plus(*rep_, sign_, u, dsym);
    case Kind::GammaMinus:
      return sym::multiply(omega_series_rep(*rep_, dsym), u, dsym);
    case Kind::Mult:
      return sym::multiply(f_, u, dsym);
    case Kind::MultAdjoint:
      return sym::convert(sym::mult_adjoint(f_, u).with_dsym(dsym), Basis::P);
    case Kind::Project:
      return sym::convert(sym::pi_n(u.with_dsym(dsym), rows_), Basis::P);
    case Kind::PlethDiag: {
      SymFunc up = sym::convert(u.with_dsym(dsym), Basis::P);
      SymFunc out(u.registry(), Basis::P, dsym);
      std::map<int, LaurentPoly> powers;
      for (const auto& [mu, c] : up.terms()) {
        LaurentPoly t = c;
        for (int i = 1; i <= mu.length() && !t.is_zero(); ++i) {
          const int m = mu.part(i);
          auto it = powers.find(m);
          if (it == powers.end()) it = powers.emplace(m, diag_.power_substitute(m)).first;
          t = t * it->second;
        }
        if (!t.is_zero()) out.add_term(mu, t);
      }
      return out;
    }
    case Kind::Compose: {
      SymFunc v = sym::convert(u.with_dsym(dsym), Basis::P);
      for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) v = it->apply(v, dsym);
      return v;
    }
  }
  fail(Status::Internal, "unhandled operator kind");
}

DegreeShift LinOp::shift() const {
  switch (kind_) {
    case Kind::GammaPlus:
      return {-kShiftUnbounded, 0};
    case Kind::GammaMinus:
      return {0, kShiftUnbounded};
    case Kind::Mult:
      return {min_homog_degree(f_), f_.degree()};
    case Kind::MultAdjoint:
      return {-f_.degree(), -min_homog_degree(f_)};
    case Kind::Project:
    case Kind::PlethDiag:
      return {0, 0};
    case Kind::Compose: {
      DegreeShift s;
      for (const auto& op : ops_) {
        const DegreeShift t = op.shift();
        s.lo = sat_add(s.lo, t.lo);
        s.hi = sat_add(s.hi, t.hi);
      }
      return s;
    }
  }
  fail(Status::Internal, "unhandled operator kind");
}

// ---- series helpers ----

SymFunc omega_series_rep(const TorusRep& x, int dsym) {
  if (dsym < 0) fail(Status::InvalidArg, "series degree must be nonnegative");
  const RegistryPtr& reg = x.registry();
  SymFunc out(reg, Basis::P, dsym);
  std::map<int, LaurentPoly> psums;
  for (const auto& mu : core::enumerate_partitions_up_to(dsym)) {
    LaurentPoly c = LaurentPoly::constant(reg, Rat(1));
    for (int i = 1; i <= mu.length() && !c.is_zero(); ++i) {
      const int m = mu.part(i);
      auto it = psums.find(m);
      if (it == psums.end()) it = psums.emplace(m, x.power_sum(m)).first;
      c = c * it->second;
    }
    if (!c.is_zero()) out.add_term(mu, c * (Rat(1) / core::z_factor(mu)));
  }
  return out;
}

LaurentPoly skew_schur_rep(const TorusRep& x, const Partition& outer, const Partition& inner) {
  const RegistryPtr& reg = x.registry();
  if (!subpartition(inner, outer)) return LaurentPoly(reg);
  const int rows = outer.length();
  if (rows == 0) return LaurentPoly::constant(reg, Rat(1));
  std::map<int, LaurentPoly> hs;
  auto h = [&](int t) -> const LaurentPoly& {
    auto it = hs.find(t);
    if (it == hs.end()) it = hs.emplace(t, t < 0 ? LaurentPoly(reg) : x.complete(t)).first;
    return it->second;
  };
  std::vector<std::vector<LaurentPoly>> m(rows, std::vector<LaurentPoly>(rows));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= rows; ++j) m[i - 1][j - 1] = h(outer.part(i) - inner.part(j) - i + j);
  return fock::poly_det(reg, m);
}

// ---- Grassmannian operator side ----

LaurentPoly grass_rhs(const SymFunc& f, const SymFunc& g, const TorusRep& x, int m, int n) {
  const RegistryPtr& reg = f.registry();
  if (g.registry() != reg || x.registry() != reg)
    fail(Status::InvalidArg, "grass_rhs arguments must share one registry");
  if (m < 0 || n < 0) fail(Status::InvalidArg, "grass_rhs needs m, n >= 0");
  SymFunc fs = sym::convert(f, Basis::S);
  for (const auto& [mu, c] : fs.terms())
    if (mu.length() > m)
      fail(Status::LengthViolation,
           "Schur term " + mu.str() + " of the paired class exceeds " + std::to_string(m) +
               " rows");
  const int d = std::max(f.degree(), g.degree());
  SymFunc y = sym::pi_n(g, m);
  const sym::PlethInput negate{LaurentPoly::constant(reg, Rat(-1)), LaurentPoly(reg)};
  y = sym::plethystic_hom(negate, y);
  y = half_vertex_plus(x, -1, y, d);
  y = sym::pi_n(y, n);
  y = half_vertex_plus(x, +1, y, d);
  return sym::hall_inner(f, y);
}

// ---- regularized traces ----

namespace {

// Letters z1 z2 / w_a feeding the lowering half of the trace.
TorusRep lowered_letters(const TorusRep& w) {
  const RegistryPtr& reg = w.registry();
  const LaurentPoly zz = LaurentPoly::var(reg, "z1") * LaurentPoly::var(reg, "z2");
  const TorusRep wconj = w.conjugate();
  std::vector<LaurentPoly> letters;
  letters.reserve(wconj.size());
  for (const auto& wt : wconj.weights()) letters.push_back(zz * wt);
  return TorusRep(reg, std::move(letters));
}

// Shared loop of the finite-n and infinite-n traces. For each power-sum line
// p_mu the diagonal twist contributes prod_i (1-M)(z^{mu_i}), whose z-adic
// valuation is exactly |mu|; lines beyond |mu| = d_z cannot reach order d_z.
// The remaining factor (p_mu, B p_mu)/z(mu) is assembled by `line`.
TraceResult trace_over_lines(const TorusRep& w, int n, int k, int d_z, int d_sym,
                             const std::function<LaurentPoly(const Partition&)>& line) {
  const RegistryPtr& reg = w.registry();
  TraceResult res;
  res.value = ZSeries(reg, d_z);
  res.d_z = d_z;
  res.d_sym = d_sym;
  res.k = k;
  res.r = static_cast<int>(w.size());
  res.n = n;
  std::map<int, LaurentPoly> eig_cache;
  for (const auto& mu : core::enumerate_partitions_up_to(d_z)) {
    const LaurentPoly contrib = eig_mu(reg, mu, eig_cache) * line(mu);
    TraceTerm t;
    t.mu = mu;
    t.contribution = contrib;
    t.valuation = contrib.is_zero() ? std::numeric_limits<int>::max()
                                    : contrib.min_degree(VarRole::TorusZ);
    res.terms.push_back(std::move(t));
    res.value += ZSeries::from_poly(contrib, d_z);
  }
  return res;
}

}  // namespace

TraceResult theoremA_trace(const SymFunc& f, const SymFunc& g, const TorusRep& w, int n, int k,
                           int d_z, int extra) {
  const RegistryPtr& reg = w.registry();
  if (f.registry() != reg || g.registry() != reg)
    fail(Status::InvalidArg, "theoremA_trace arguments must share one registry");
  if (k < 0 || d_z < 0 || n < 0 || extra < 0)
    fail(Status::InvalidArg, "theoremA_trace needs k, d_z, n, extra >= 0");
  if (n > 0 && static_cast<int>(reg->indices(VarRole::AuxX).size()) < n)
    fail(Status::InvalidArg, "registry lacks the AuxX variables backing the projection");

  const TorusRep wbar_z = lowered_letters(w);

  const int dg = g.degree();
  const int df = f.degree();

  auto line = [&](const Partition& mu) -> LaurentPoly {
    const int amu = mu.size();
    // Every unit of degree raised by Gamma_-(z1 z2 Wbar) costs exactly two
    // powers of z, and the twist already spends |mu|; deeper terms cannot
    // reach order d_z.
    const int d_gam = (d_z - amu) / 2 + extra;
    const int d_u = amu + dg + d_gam;
    const SymFunc pmu = SymFunc::basis_elem(reg, Basis::P, mu, d_u);
    SymFunc u = sym::multiply(g, pmu, d_u);
    u = sym::multiply(omega_series_rep(wbar_z, d_gam), u, d_u);

    core::DegCaps caps;
    caps.torus = d_z - amu + extra;
    caps.aux_x = d_u + n * (n - 1) / 2;

    std::map<Partition, LaurentPoly> sc;
    if (n == 0) {
      const LaurentPoly c = u.coeff(Partition()).truncate(caps);
      if (!c.is_zero()) sc.emplace(Partition(), c);
    } else {
      sc = sym::schur_coeffs_x(sym::restrict_to_x(u, n, caps), n, caps);
    }

    // Adjoint slot: (f p_mu, s_kappa) is the s_kappa coefficient of f p_mu,
    // needed only up to the largest row set the projected lines can reach.
    const int d_f = std::min(df + amu, d_u + n * k);
    const SymFunc fp = sym::multiply(f, SymFunc::basis_elem(reg, Basis::P, mu, d_f), d_f);
    const SymFunc fs = sym::convert(fp, Basis::S);

    LaurentPoly pairing(reg);
    for (const auto& [lam, clam] : sc) {
      if (clam.is_zero()) continue;
      std::vector<int> parts;
      for (int i = 1; i <= n; ++i) {
        const int p = lam.part(i) + k;
        if (p > 0) parts.push_back(p);
      }
      const Partition shifted(std::move(parts));
      for (const auto& [kappa, cf] : fs.terms()) {
        if (cf.is_zero() || !subpartition(kappa, shifted)) continue;
        pairing += clam * cf * skew_schur_rep(w, shifted, kappa);
      }
    }
    return pairing * (Rat(1) / core::z_factor(mu));
  };

  return trace_over_lines(w, n, k, d_z, d_z + n * k + dg + d_z, line);
}

TraceResult z_infinity_trace(const TorusRep& w, int d_z, int extra) {
  const RegistryPtr& reg = w.registry();
  if (d_z < 0 || extra < 0) fail(Status::InvalidArg, "z_infinity_trace needs d_z, extra >= 0");

  const TorusRep wbar_z = lowered_letters(w);

  auto line = [&](const Partition& mu) -> LaurentPoly {
    const int amu = mu.size();
    const int d_gam = (d_z - amu) / 2 + extra;
    const int d_u = amu + d_gam;
    const SymFunc pmu = SymFunc::basis_elem(reg, Basis::P, mu, d_u);
    const SymFunc u = sym::multiply(omega_series_rep(wbar_z, d_gam), pmu, d_u);
    // (p_mu, v)/z(mu) is the p_mu coefficient of v = Gamma_+(W) u.
    return half_vertex_plus(w, +1, u, d_u).coeff(mu);
  };

  // n = -1 marks the degeneration with the projection and twist omitted.
  return trace_over_lines(w, -1, 0, d_z, d_z + d_z, line);
}

// ---- comparison drivers ----

std::vector<Rat> seeded_framing_values(int r, std::uint64_t seed) {
  if (r < 0) fail(Status::InvalidArg, "rank must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<Rat> out;
  while (static_cast<int>(out.size()) < r) {
    const long num = 2 + static_cast<long>(rng() % 97);
    const long den = 1 + static_cast<long>(rng() % 7);
    Rat v(num, den);
    v.canonicalize();
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

TheoremAReport check_theoremA(const SymFunc& f, const SymFunc& g, int r, int n, int k_max,
                              int d_z, std::uint64_t seed) {
  const RegistryPtr& reg = f.registry();
  if (r < 0 || k_max < 0) fail(Status::InvalidArg, "check_theoremA needs r, k_max >= 0");
  TheoremAReport rep;
  rep.d_z = d_z;
  rep.w_values = seeded_framing_values(r, seed);
  const std::map<std::string, Rat> subs = framing_substitution(reg, r, rep.w_values);
  const TorusRep wrep = TorusRep::from_values(reg, rep.w_values);
  for (int k = 0; k <= k_max; ++k) {
    TheoremAEntry e;
    e.k = k;
    const RatFunc lhs = loc::moduli_inner(f, g, r, n, k).substitute(subs);
    bool expanded = false;
    ZSeries lhs_series;
    try {
      lhs_series = lhs.expand_at_origin(d_z);
      expanded = true;
    } catch (const Error& err) {
      if (err.status() != Status::PoleAtOrigin) throw;
      e.pole_at_origin = true;
    }
    if (expanded) e.equal = (theoremA_trace(f, g, wrep, n, k, d_z).value == lhs_series);
    rep.entries.push_back(e);
  }
  int tail = k_max + 1;
  for (int k = k_max; k >= 0 && rep.entries[k].equal; --k) tail = k;
  if (tail <= k_max) rep.k0 = tail;
  return rep;
}

PartitionFunctionResult partition_function_Z(const RegistryPtr& reg, int r, int n, int d_z,
                                             const std::vector<Rat>& w_values) {
  if (r < 0 || n < 0 || d_z < 0)
    fail(Status::InvalidArg, "partition_function_Z needs r, n, d_z >= 0");
  if (!w_values.empty() && static_cast<int>(w_values.size()) != r)
    fail(Status::InvalidArg, "partition_function_Z needs one value per framing weight");
  const SymFunc unit = SymFunc::one(reg, 0);
  PartitionFunctionResult res;
  res.value = loc::moduli_inner(unit, unit, r, n, 0);
  RatFunc probe = res.value;
  if (!w_values.empty()) probe = probe.substitute(framing_substitution(reg, r, w_values));
  try {
    res.series = probe.expand_at_origin(d_z);
    res.holomorphic = true;
  } catch (const Error& err) {
    if (err.status() != Status::PoleAtOrigin) throw;
    res.holomorphic = false;
    res.series = ZSeries(reg, d_z);
  }
  return res;
}

ZInfinityReport z_infinity_check(const RegistryPtr& reg, int r, int d_z) {
  if (r < 0 || d_z < 0) fail(Status::InvalidArg, "z_infinity_check needs r, d_z >= 0");
  const auto& widx = reg->indices(VarRole::FramingW);
  if (static_cast<int>(widx.size()) < r)
    fail(Status::InvalidArg, "registry lacks the framing variables for rank " + std::to_string(r));
  std::vector<LaurentPoly> ws;
  for (int a = 0; a < r; ++a) ws.push_back(LaurentPoly::var(reg, reg->name(widx[a])));
  const TorusRep w(reg, std::move(ws));

  ZInfinityReport rep;
  rep.trace = z_infinity_trace(w, d_z).value;

  rep.twist_sum = ZSeries(reg, d_z);
  rep.twist_sum_weighted = ZSeries(reg, d_z);
  std::map<int, LaurentPoly> eig_cache;
  for (const auto& mu : core::enumerate_partitions_up_to(d_z)) {
    const LaurentPoly e = eig_mu(reg, mu, eig_cache);
    rep.twist_sum += ZSeries::from_poly(e, d_z);
    rep.twist_sum_weighted += ZSeries::from_poly(e * (Rat(1) / core::z_factor(mu)), d_z);
  }

  // Omega(W Wbar M^{-1} z1 z2): the alphabet z1 z2 / M = sum_{i,j >= 1} z1^i z2^j
  // truncated at total order d_z; the dropped tail only affects higher orders.
  LaurentPoly alphabet(reg);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      const LaurentPoly wpair =
          LaurentPoly::var(reg, reg->name(widx[a])) * LaurentPoly::var(reg, reg->name(widx[b]), -1);
      for (int i = 1; i <= d_z; ++i)
        for (int j = 1; i + j <= d_z; ++j)
          alphabet += wpair * LaurentPoly::var(reg, "z1", i) * LaurentPoly::var(reg, "z2", j);
    }
  }
  rep.omega = core::omega_product(alphabet).expand_at_origin(d_z);

  rep.matches_plain = (rep.trace == rep.twist_sum * rep.omega);
  rep.matches_weighted = (rep.trace == rep.twist_sum_weighted * rep.omega);
  return rep;
}

RatFunc twisted_inner(const SymFunc& f, const SymFunc& g, const RatFunc& h) {
  if (f.registry() != g.registry())
    fail(Status::InvalidArg, "twisted_inner arguments must share one registry");
  const SymFunc fp = sym::convert(f, Basis::P);
  const SymFunc gp = sym::convert(g, Basis::P);
  const LaurentPoly hden = h.den();
  RatFunc acc{LaurentPoly(f.registry())};
  std::map<int, RatFunc> twists;
  for (const auto& [mu, cf] : fp.terms()) {
    const LaurentPoly cg = gp.coeff(mu);
    if (cg.is_zero()) continue;
    RatFunc term(cf * cg * core::z_factor(mu));
    for (int i = 1; i <= mu.length(); ++i) {
      const int m = mu.part(i);
      auto it = twists.find(m);
      if (it == twists.end())
        it = twists.emplace(m, RatFunc(h.num().power_substitute(m), hden.power_substitute(m)))
                 .first;
      term = term * it->second;
    }
    acc = acc + term;
  }
  return acc;
}

// ---- reports ----

std::string TraceResult::json() const {
  std::ostringstream out;
  out << "{\"d_z\":" << d_z << ",\"d_sym\":" << d_sym << ",\"k\":" << k << ",\"r\":" << r
      << ",\"n\":" << n << ",\"value\":" << value.json() << ",\"terms\":[";
  bool first = true;
  for (const auto& t : terms) {
    if (!first) out << ",";
    first = false;
    out << "{\"mu\":\"" << core::json_escape(t.mu.str()) << "\",\"valuation\":";
    if (t.valuation == std::numeric_limits<int>::max())
      out << "null";
    else
      out << t.valuation;
    out << ",\"contribution\":" << t.contribution.json() << "}";
  }
  out << "]}";
  return out.str();
}

std::string TheoremAReport::json() const {
  std::ostringstream out;
  out << "{\"d_z\":" << d_z << ",\"w\":[";
  for (size_t i = 0; i < w_values.size(); ++i) {
    if (i) out << ",";
    out << "\"" << core::json_escape(core::rat_str(w_values[i])) << "\"";
  }
  out << "],\"k0\":";
  if (k0)
    out << *k0;
  else
    out << "null";
  out << ",\"entries\":[";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ",";
    out << "{\"k\":" << entries[i].k
        << ",\"pole_at_origin\":" << json_bool(entries[i].pole_at_origin)
        << ",\"equal\":" << json_bool(entries[i].equal) << "}";
  }
  out << "]}";
  return out.str();
}

std::string PartitionFunctionResult::json() const {
  std::ostringstream out;
  out << "{\"value\":" << value.json() << ",\"holomorphic\":" << json_bool(holomorphic)
      << ",\"series\":";
  if (holomorphic)
    out << series.json();
  else
    out << "null";
  out << "}";
  return out.str();
}

std::string ZInfinityReport::json() const {
  std::ostringstream out;
  out << "{\"trace\":" << trace.json() << ",\"twist_sum\":" << twist_sum.json()
      << ",\"twist_sum_weighted\":" << twist_sum_weighted.json() << ",\"omega\":" << omega.json()
      << ",\"matches_plain\":" << json_bool(matches_plain)
      << ",\"matches_weighted\":" << json_bool(matches_weighted) << "}";
  return out.str();
}

}  // namespace klv::vo
