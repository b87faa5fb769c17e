#include <functional>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "klv/error.hpp"
#include "klv/localization.hpp"
#include "klv/symfunc.hpp"

using klv::Error;
using klv::Status;
using klv::core::LaurentPoly;
using klv::core::Partition;
using klv::core::PartitionTuple;
using klv::core::Rat;
using klv::core::RatFunc;
using klv::core::RegistryPtr;
using klv::core::VarRegistry;
using klv::core::enumerate_partitions_up_to;
using klv::core::enumerate_tuples;
using klv::core::rat_abs;
using namespace klv::loc;
namespace sym = klv::sym;

namespace {

RegistryPtr test_reg() {
  static RegistryPtr reg = VarRegistry::standard(3, 3);
  return reg;
}

// z1, z2, w1, and the interpolation variable v.
RegistryPtr probe_reg() {
  static RegistryPtr reg = VarRegistry::standard(1, 0, true);
  return reg;
}

Partition pt(std::vector<int> parts) { return Partition(std::move(parts)); }

LaurentPoly zv(const char* name, int power = 1) {
  return LaurentPoly::var(test_reg(), name, power);
}

LaurentPoly cst(const Rat& c) { return LaurentPoly::constant(test_reg(), c); }

sym::SymFunc schur(std::vector<int> parts) {
  return sym::SymFunc::basis_elem(test_reg(), sym::Basis::S, pt(std::move(parts)), 8);
}

sym::SymFunc one() { return sym::SymFunc::one(test_reg(), 8); }

// phi_{conj(X) - p1} f: substitutes p_k -> conj(X)(z^k) - p_k, the transform
// that turns the localization pairing slot f(conj V') into f(conj V).
sym::SymFunc dual_shift(const sym::SymFunc& f, const TorusRep& x) {
  sym::PlethInput in{LaurentPoly::constant(f.registry(), Rat(-1)),
                     x.conjugate().character()};
  return sym::plethystic_hom(in, f);
}

TorusRep framing_rep(int n) {
  std::vector<LaurentPoly> ws;
  for (int i = 1; i <= n; ++i) ws.push_back(zv(("w" + std::to_string(i)).c_str()));
  return TorusRep(test_reg(), std::move(ws));
}

Status caught(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.status();
  }
  return Status::Ok;
}

}  // namespace

TEST_SUITE("localization") {

TEST_CASE("box characters of fixed points and their arm-leg pairings") {
  auto reg = test_reg();

  CHECK(char_U(reg, {}).is_zero());
  CHECK(char_U(reg, {pt({})}).is_zero());
  CHECK(char_U(reg, {pt({1})}) == zv("w1"));
  CHECK(char_U(reg, {pt({2, 1})}) == zv("w1") * (cst(1) + zv("z1") + zv("z2")));
  CHECK(char_U(reg, {pt({3})}) == zv("w1") * (cst(1) + zv("z1") + zv("z1", 2)));
  CHECK(char_U(reg, {pt({1, 1, 1})}) == zv("w1") * (cst(1) + zv("z2") + zv("z2", 2)));
  CHECK(char_U(reg, {pt({}), pt({1})}) == zv("w2"));
  CHECK(char_U(reg, {pt({1}), pt({1})}) == zv("w1") + zv("w2"));
  CHECK(caught([&] { char_U(reg, PartitionTuple(4, pt({1}))); }) == Status::InvalidArg);

  CHECK(char_E(reg, pt({}), pt({})).is_zero());
  CHECK(char_E(reg, pt({1}), pt({1})) == zv("z1", -1) + zv("z2", -1));
  CHECK(char_E(reg, pt({1}), pt({})) == zv("z1", -1) * zv("z2", -1));
  CHECK(char_E(reg, pt({}), pt({1})) == cst(1));
  CHECK(char_E(reg, pt({2}), pt({2})) ==
        zv("z1", -2) + zv("z1", -1) + zv("z1") * zv("z2", -1) + zv("z2", -1));

  auto fp = fixed_point_data(reg, {pt({2, 1})});
  CHECK(fp.det_u == zv("w1", 3) * zv("z1") * zv("z2"));
  CHECK(fixed_point_data(reg, {pt({1})}).tangent == zv("z1", -1) + zv("z2", -1));
  CHECK(fixed_point_data(reg, {}).det_u == cst(1));
}

TEST_CASE("tangent characters match the generating-function pairing") {
  auto reg = test_reg();
  LaurentPoly m_poly = (cst(1) - zv("z1")) * (cst(1) - zv("z2"));
  LaurentPoly zbar = zv("z1", -1) * zv("z2", -1);
  auto v_of = [&](const Partition& mu) {
    LaurentPoly u = char_U(reg, {mu}).substitute({{"w1", Rat(1)}});
    return RatFunc(cst(1) - u * m_poly, m_poly);
  };
  auto chi = [&](const Partition& mu, const Partition& nu) {
    return RatFunc(zbar * m_poly) * v_of(mu).conjugate() * v_of(nu);
  };

  RatFunc chi_empty = chi(pt({}), pt({}));
  for (const Partition& mu : enumerate_partitions_up_to(4)) {
    for (const Partition& nu : enumerate_partitions_up_to(4)) {
      CHECK(RatFunc(char_E(reg, mu, nu)) == chi_empty - chi(mu, nu));
    }
  }

  // The tangent space of the rank-r degree-n moduli space has dimension 2rn.
  std::map<std::string, Rat> ones{
      {"z1", Rat(1)}, {"z2", Rat(1)}, {"w1", Rat(1)}, {"w2", Rat(1)}, {"w3", Rat(1)}};
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      for (const PartitionTuple& t : enumerate_tuples(r, n)) {
        CHECK(tangent_char(reg, t).evaluate(ones) == Rat(2 * r * n));
      }
    }
  }
}

TEST_CASE("moduli localization sums") {
  RatFunc base{cst(1)};
  base.mul_den_factor(cst(1) - zv("z1"));
  base.mul_den_factor(cst(1) - zv("z2"));
  CHECK(moduli_inner(one(), one(), 1, 1, 0) == base);

  RatFunc twisted = base;
  twisted.mul_num(zv("w1", 2));
  CHECK(moduli_inner(one(), one(), 1, 1, 2) == twisted);
  CHECK(moduli_inner(schur({1}), schur({1}), 1, 1, 0) == base);
  CHECK(moduli_inner(one(), schur({2}), 1, 1, 0) == twisted);

  // Rank zero has no fixed points in positive degree.
  for (int n = 1; n <= 3; ++n) {
    CHECK(moduli_inner(one(), one(), 0, n, 0).is_zero());
    CHECK(moduli_inner(one(), one(), 0, n, 3).is_zero());
  }
  CHECK(moduli_inner(one(), one(), 0, 0, 1) == RatFunc(cst(1)));
  CHECK(moduli_inner(one(), one(), 2, 0, 5) == RatFunc(cst(1)));

  // Rank two, degree one: two fixed points, each a single box on one factor.
  auto hand_term = [&](const char* wa, const char* wb) {
    RatFunc t{cst(1)};
    t.mul_den_factor(cst(1) - zv("z1"));
    t.mul_den_factor(cst(1) - zv("z2"));
    t.mul_den_factor(cst(1) - zv(wa) * zv(wb, -1) * zv("z1") * zv("z2"));
    t.mul_den_factor(cst(1) - zv(wa, -1) * zv(wb));
    return t;
  };
  CHECK(moduli_inner(one(), one(), 2, 1, 0) == hand_term("w1", "w2") + hand_term("w2", "w1"));

  // Degree two, evaluated at rational torus weights.
  std::map<std::string, Rat> env{{"z1", Rat(1, 3)}, {"z2", Rat(1, 5)}, {"w1", Rat(1)}};
  CHECK(moduli_inner(one(), one(), 1, 2, 0).evaluate(env) == Rat(75, 32));

  // Not enough framing variables for the requested rank.
  auto fone = sym::SymFunc::one(probe_reg(), 8);
  CHECK(caught([&] { moduli_inner(fone, fone, 2, 1, 0); }) == Status::InvalidArg);
}

TEST_CASE("grassmannian localization sums") {
  TorusRep x3 = framing_rep(3);
  TorusRep x2 = framing_rep(2);

  for (int m = 0; m <= 3; ++m) {
    CHECK(grass_inner(one(), one(), x3, m) == RatFunc(cst(1)));
  }

  // Edge dimensions evaluate one slot at the full alphabet and one at zero.
  CHECK(grass_inner(one(), schur({1}), x2, 2) == RatFunc(zv("w1") + zv("w2")));
  CHECK(grass_inner(schur({1}), one(), x2, 0) == RatFunc(zv("w1", -1) + zv("w2", -1)));

  // Middle dimension on two weights, worked out by hand.
  CHECK(grass_inner(schur({1}), one(), x2, 1).is_zero());
  CHECK(grass_inner(one(), schur({2}), x2, 1) == RatFunc(-(zv("w1") * zv("w2"))));

  // The sum does not depend on the order of the weights.
  TorusRep x2_swapped(test_reg(), {zv("w2"), zv("w1")});
  CHECK(grass_inner(one(), schur({2}), x2_swapped, 1) ==
        grass_inner(one(), schur({2}), x2, 1));

  // Rational weights.
  TorusRep xr = TorusRep::from_values(test_reg(), {Rat(2), Rat(3), Rat(5)});
  CHECK(grass_inner(one(), one(), xr, 2) == RatFunc(cst(1)));

  TorusRep bad(test_reg(), {zv("w1"), zv("w1")});
  CHECK(caught([&] { grass_inner(one(), one(), bad, 1); }) == Status::RepeatedWeights);
  CHECK(caught([&] { grass_inner(one(), one(), x2, 3); }) == Status::InvalidArg);
  CHECK(caught([&] { grass_inner(one(), one(), x2, -1); }) == Status::InvalidArg);
  auto off_registry = sym::SymFunc::one(probe_reg(), 8);
  CHECK(caught([&] { grass_inner(off_registry, one(), x2, 1); }) == Status::InvalidArg);
}

TEST_CASE("pushforwards of dual tautological classes ignore the subspace dimension") {
  for (int n_weights = 2; n_weights <= 3; ++n_weights) {
    TorusRep x = framing_rep(n_weights);
    for (int m = 1; m <= n_weights; ++m) {
      std::vector<sym::SymFunc> fs{schur({1})};
      if (m >= 2) {
        fs.push_back(schur({2}));
        fs.push_back(schur({1, 1}));
      }
      for (const auto& f : fs) {
        CHECK(grass_inner(dual_shift(f, x), one(), x, m) ==
              RatFunc(x.conjugate().eval(f)));
      }
    }
  }
}

TEST_CASE("both evaluation paths of the determinantal pairing agree") {
  TorusRep x3 = framing_rep(3);
  TorusRep xr = TorusRep::from_values(test_reg(), {Rat(2), Rat(3), Rat(5)});

  for (int m = 0; m <= 3; ++m) {
    CHECK(lambda_pairing(one(), one(), x3, m) == RatFunc(cst(1)));
  }

  std::vector<sym::SymFunc> fs{one(), schur({1}), schur({2}), schur({1, 1}), schur({2, 1})};
  auto max_len = [](const sym::SymFunc& f) {
    sym::SymFunc fs = sym::convert(f, sym::Basis::S);
    int len = 0;
    for (const auto& [mu, c] : fs.terms()) len = std::max(len, mu.length());
    return len;
  };
  for (int m = 1; m <= 3; ++m) {
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        if (max_len(f) > m || max_len(g) > m) continue;
        const TorusRep& x = m == 3 ? xr : x3;
        LaurentPoly det_path = lambda_pairing_det(f, g, x, m);
        CHECK(det_path == lambda_pairing_expand(f, g, x, m));
        CHECK(lambda_pairing(f, g, x, m) == RatFunc(det_path));
      }
    }
  }

  // With the finite tail switched off the pairing reduces to a skew expansion:
  // (s_mu, s_nu) = <s_mu[p1 + conj X], s_nu>.
  for (int m = 2; m <= 3; ++m) {
    for (const auto& mu : std::vector<std::vector<int>>{{}, {1}, {2}, {1, 1}, {2, 1}}) {
      for (const auto& nu : std::vector<std::vector<int>>{{}, {1}, {2}, {1, 1}, {2, 1}}) {
        if (pt(mu).length() > m || pt(nu).length() > m) continue;
        LaurentPoly lhs =
            lambda_pairing_det(schur(mu), schur(nu), x3, m, LambdaPart::PrimeOnly);
        CHECK(lhs ==
              lambda_pairing_expand(schur(mu), schur(nu), x3, m, LambdaPart::PrimeOnly));
        sym::PlethInput in{cst(1), x3.conjugate().character()};
        CHECK(lhs == sym::hall_inner(sym::plethystic_hom(in, schur(mu)), schur(nu)));
      }
    }
  }

  CHECK(caught([&] { lambda_pairing(schur({1, 1}), one(), x3, 1); }) ==
        Status::LengthViolation);
  CHECK(caught([&] { lambda_pairing_det(one(), schur({1}), x3, 0); }) ==
        Status::LengthViolation);
}

TEST_CASE("the determinantal pairing computes the localization sum") {
  for (int n_weights = 2; n_weights <= 3; ++n_weights) {
    TorusRep x = framing_rep(n_weights);
    CHECK(grass_inner(one(), one(), x, 0) ==
          lambda_pairing(dual_shift(one(), x), one(), x, 0));
    for (int m = 1; m <= n_weights; ++m) {
      std::vector<sym::SymFunc> fs{one(), schur({1})};
      if (m >= 2) {
        fs.push_back(schur({2}));
        fs.push_back(schur({1, 1}));
      }
      for (const auto& f : fs) {
        for (const auto& g : fs) {
          CHECK(grass_inner(f, g, x, m) == lambda_pairing(dual_shift(f, x), g, x, m));
        }
      }
    }
  }
}

TEST_CASE("projected triangular conjugation is the identity plus a nilpotent corner") {
  TorusRep x = framing_rep(3);
  auto reg = test_reg();
  const int lo = -3, hi = 6;

  for (int n = 0; n <= 3; ++n) {
    // Shape: -1 on the diagonal beyond n, arbitrary in the corner quadrant,
    // zero everywhere else.
    for (int i = lo; i <= hi; ++i) {
      for (int j = lo; j <= hi; ++j) {
        LaurentPoly z = z_matrix(x, n, i, j);
        if (i == j && i >= n + 1) {
          CHECK(z == cst(-1));
        } else if (!(i <= n && j >= n + 1)) {
          CHECK(z.is_zero());
        }
      }
    }

    // D_n g_+(X) = g_+(X) D_n (1 + Z'), entrywise on a window.
    for (int i = lo; i <= hi; ++i) {
      for (int k = lo; k <= hi; ++k) {
        LaurentPoly rhs(reg);
        if (k <= n) rhs += x.complete(k - i);
        for (int j = i; j <= n; ++j) rhs += x.complete(j - i) * z_matrix(x, n, j, k);
        LaurentPoly lhs = i <= n ? x.complete(k - i) : LaurentPoly(reg);
        CHECK(lhs == rhs);
      }
    }

    // The corner part squares to zero.
    auto corner = [&](int i, int j) {
      if (i <= n && j >= n + 1) return z_matrix(x, n, i, j);
      return LaurentPoly(reg);
    };
    for (int i = lo; i <= hi; ++i) {
      for (int k = lo; k <= hi; ++k) {
        LaurentPoly acc(reg);
        for (int j = lo; j <= hi; ++j) acc += corner(i, j) * corner(j, k);
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("finite probes of the moduli sum") {
  auto reg = probe_reg();
  auto fone = sym::SymFunc::one(reg, 8);
  std::map<std::string, Rat> env{{"z1", Rat(1, 3)}, {"z2", Rat(1, 5)}, {"w1", Rat(1)}};

  // N = 2: a single summand survives the pruning pass.
  RatFunc f2 = f_N(fone, fone, 1, 1, 2, 2, env);
  CHECK(f2.evaluate({{"v", Rat(1)}}) == Rat(45, 28));
  CHECK(f2.evaluate({{"v", Rat(0)}}) == Rat(3375, 1568));

  auto vfac = [&](const Rat& c) {
    return LaurentPoly::constant(reg, Rat(1)) - LaurentPoly::var(reg, "v", 1, c);
  };
  RatFunc expected{LaurentPoly::constant(reg, Rat(3375, 1568)) * vfac(Rat(1, 15)) *
                   vfac(Rat(1, 15)) * vfac(Rat(1, 25)) * vfac(Rat(1, 9))};
  expected.mul_den_factor(vfac(Rat(1, 225)));
  CHECK(f2 == expected);

  // The probes approach the localization value as the grid grows.
  Rat target = moduli_inner(fone, fone, 1, 1, 2).evaluate(env);
  CHECK(target == Rat(15, 8));
  Rat d2 = rat_abs(target - f2.evaluate({{"v", Rat(1)}}));
  Rat d3 = rat_abs(target - f_N(fone, fone, 1, 1, 2, 3, env).evaluate({{"v", Rat(1)}}));
  Rat d4 = rat_abs(target - f_N(fone, fone, 1, 1, 2, 4, env).evaluate({{"v", Rat(1)}}));
  CHECK(d3 < d2);
  CHECK(d4 < d3);

  // Colliding grid weights put a genuine pole at 1.
  std::map<std::string, Rat> collide{{"z1", Rat(1, 3)}, {"z2", Rat(1, 3)}, {"w1", Rat(1)}};
  CHECK(caught([&] { f_N(fone, fone, 1, 1, 0, 2, collide); }) == Status::DivergentOmega);

  std::map<std::string, Rat> missing{{"z1", Rat(1, 3)}, {"z2", Rat(1, 5)}};
  CHECK(caught([&] { f_N(fone, fone, 1, 1, 0, 2, missing); }) == Status::InvalidArg);
  // The registry must supply the interpolation variable.
  CHECK(caught([&] { f_N(one(), one(), 1, 1, 0, 2, env); }) == Status::InvalidArg);
}

TEST_CASE("fixed point term table is valid json") {
  auto table = nlohmann::json::parse(moduli_terms_json(one(), one(), 1, 2, 0));
  REQUIRE(table.is_array());
  REQUIRE(table.size() == 2);
  for (const auto& row : table) {
    CHECK(row.contains("tuple"));
    CHECK(row.contains("tangent"));
    CHECK(row.contains("term"));
  }
}

}  // TEST_SUITE
