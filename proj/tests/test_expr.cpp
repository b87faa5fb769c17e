#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "klv/error.hpp"
#include "klv/expr.hpp"
#include "klv/symfunc.hpp"

using klv::Error;
using klv::Status;
using klv::core::LaurentPoly;
using klv::core::Partition;
using klv::core::Rat;
using klv::core::RegistryPtr;
using klv::core::VarRegistry;
using namespace klv::expr;
namespace sym = klv::sym;

namespace {

RegistryPtr test_reg() {
  static RegistryPtr reg = VarRegistry::standard(1, 3);
  return reg;
}

Partition pt(std::vector<int> parts) { return Partition(std::move(parts)); }

Expr at(sym::Basis b, std::vector<int> parts) { return Expr::atom(b, pt(std::move(parts))); }

Expr lit(long n) { return Expr::rational(Rat(n)); }

sym::SymFunc pelem(std::vector<int> parts, int dsym = 8) {
  return sym::SymFunc::basis_elem(test_reg(), sym::Basis::P, pt(std::move(parts)), dsym);
}

Status caught(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.status();
  }
  return Status::Ok;
}

// The byte offset a failure reports, or -1 if parsing succeeded.
int error_byte(const std::string& text) {
  try {
    (void)parse_expr(text);
  } catch (const Error& e) {
    const std::string msg = e.what();
    const std::string tag = "at byte ";
    const size_t at = msg.find(tag);
    REQUIRE(at != std::string::npos);
    return std::stoi(msg.substr(at + tag.size()));
  }
  return -1;
}

std::string error_text(const std::string& text) {
  try {
    (void)parse_expr(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("expr") {

TEST_CASE("the grammar covers atoms literals and operator precedence") {
  CHECK(parse_expr("s[2,1]") == at(sym::Basis::S, {2, 1}));
  CHECK(parse_expr("p[3]") == at(sym::Basis::P, {3}));
  CHECK(parse_expr("e[2]") == at(sym::Basis::E, {2}));
  CHECK(parse_expr("h[4]") == at(sym::Basis::H, {4}));
  CHECK(parse_expr("m[1,1]") == at(sym::Basis::M, {1, 1}));
  CHECK(parse_expr("s[]") == at(sym::Basis::S, {}));

  CHECK(parse_expr("7") == lit(7));
  CHECK(parse_expr("3/4") == Expr::rational(Rat(3, 4)));
  CHECK(parse_expr("6/4") == Expr::rational(Rat(3, 2)));  // literals are reduced
  CHECK(parse_expr("123456789012345678901234567890") ==
        Expr::rational(Rat(mpz_class("123456789012345678901234567890"))));

  // ^ binds tighter than *, which binds tighter than + and -.
  CHECK(parse_expr("e[1]^2 + 2*h[2]") ==
        Expr::add(Expr::pow(at(sym::Basis::E, {1}), 2),
                  Expr::mul(lit(2), at(sym::Basis::H, {2}))));
  CHECK(parse_expr("1 + 2 * 3") == Expr::add(lit(1), Expr::mul(lit(2), lit(3))));
  CHECK(parse_expr("(1 + 2) * 3") == Expr::mul(Expr::add(lit(1), lit(2)), lit(3)));

  // Sums and products associate to the left.
  CHECK(parse_expr("1 + 2 + 3") == Expr::add(Expr::add(lit(1), lit(2)), lit(3)));
  CHECK(parse_expr("1 - 2 - 3") == Expr::sub(Expr::sub(lit(1), lit(2)), lit(3)));
  CHECK(parse_expr("1 * 2 * 3") == Expr::mul(Expr::mul(lit(1), lit(2)), lit(3)));

  // A leading minus negates a whole power, and minus signs may stack.
  CHECK(parse_expr("-s[1]^2") == Expr::neg(Expr::pow(at(sym::Basis::S, {1}), 2)));
  CHECK(parse_expr("--2") == Expr::neg(Expr::neg(lit(2))));
  CHECK(parse_expr("1 - -2") == Expr::sub(lit(1), Expr::neg(lit(2))));
  CHECK(parse_expr("-2 * 3") == Expr::mul(Expr::neg(lit(2)), lit(3)));

  CHECK(parse_expr("omegaSeries(-p[1])") ==
        Expr::omega_series(Expr::neg(at(sym::Basis::P, {1}))));

  // Whitespace never matters between tokens.
  CHECK(parse_expr("  e[ 1 ] ^ 2+2 * h[2]") == parse_expr("e[1]^2 + 2*h[2]"));
  CHECK(parse_expr("omegaSeries ( - p [ 1 ] )") == parse_expr("omegaSeries(-p[1])"));
  CHECK(parse_expr(" 2 / 3 ") == parse_expr("2/3"));
}

TEST_CASE("printing is canonical and round trips through the parser") {
  // parse . str is the identity on trees, whatever the input spelling.
  const std::vector<std::string> inputs = {
      "s[2,1]",
      "s[]",
      "7",
      "3/4",
      "e[1]^2 + 2*h[2]",
      "(e[1] + h[2]) * s[1]",
      "-s[1]^2",
      "--2",
      "1 - -2",
      "1+2+3",
      "1-(2-3)",
      "2*(3*4)",
      "(1+2)^3",
      "(-s[1])^2",
      "omegaSeries(-p[1])",
      "omegaSeries(2*p[1] - p[1]) * s[2] - 5/7",
  };
  for (const std::string& in : inputs) {
    CAPTURE(in);
    const Expr e = parse_expr(in);
    CHECK(parse_expr(e.str()) == e);
    // Canonical text is a fixed point of parse . str.
    CHECK(parse_expr(e.str()).str() == e.str());
  }

  // Parentheses appear exactly where the tree shape requires them.
  CHECK(parse_expr("(e[1]+h[2])*s[1]").str() == "(e[1] + h[2]) * s[1]");
  CHECK(parse_expr("e[1]^2+2*h[2]").str() == "e[1]^2 + 2 * h[2]");
  CHECK(parse_expr("1-(2-3)").str() == "1 - (2 - 3)");
  CHECK(parse_expr("1+2+3").str() == "1 + 2 + 3");
  CHECK(Expr::add(lit(1), Expr::add(lit(2), lit(3))).str() == "1 + (2 + 3)");
  CHECK(Expr::pow(Expr::pow(at(sym::Basis::S, {1}), 2), 3).str() == "(s[1]^2)^3");
  CHECK(Expr::neg(Expr::add(lit(1), lit(2))).str() == "-(1 + 2)");
  CHECK(Expr::mul(lit(2), Expr::neg(lit(3))).str() == "2 * -3");

  // Negative literals normalize to a negation of a nonnegative literal, so
  // programmatic trees print re-parseably too.
  CHECK(Expr::rational(Rat(-3, 4)) == Expr::neg(Expr::rational(Rat(3, 4))));
  CHECK(Expr::pow(Expr::rational(Rat(-2)), 3).str() == "(-2)^3");
  CHECK(parse_expr(Expr::pow(Expr::rational(Rat(-2)), 3).str()) ==
        Expr::pow(Expr::rational(Rat(-2)), 3));
}

TEST_CASE("degrees are known before evaluation") {
  CHECK(parse_expr("7").degree() == 0);
  CHECK(parse_expr("s[2,1]").degree() == 3);
  CHECK(parse_expr("e[1]^2 + 2*h[2]").degree() == 2);
  CHECK(parse_expr("s[2,1] * h[4]").degree() == 7);
  CHECK(parse_expr("s[2] - s[1,1]").degree() == 2);
  CHECK(parse_expr("-m[1,1]").degree() == 2);
  CHECK(parse_expr("s[3]^0").degree() == 0);
  CHECK(parse_expr("omegaSeries(-p[1])").degree() == kUnboundedDegree);
  CHECK(parse_expr("s[1] * omegaSeries(-p[1])").degree() == kUnboundedDegree);
  CHECK(parse_expr("omegaSeries(-p[1])^0").degree() == 0);
}

TEST_CASE("parse failures report the byte offset and the tokens accepted there") {
  CHECK(caught([] { (void)parse_expr("s[2,]"); }) == Status::ParseError);
  CHECK(error_byte("s[2,]") == 4);
  CHECK(error_text("s[2,]").find("a digit") != std::string::npos);

  CHECK(error_byte("") == 0);
  CHECK(error_text("").find("a number") != std::string::npos);

  CHECK(error_byte("s[") == 2);
  CHECK(error_text("s[").find("a digit or ']'") != std::string::npos);

  CHECK(error_byte("s[0]") == 2);
  CHECK(error_text("s[0]").find("a positive part") != std::string::npos);

  CHECK(error_byte("s[1,2]") == 4);
  CHECK(error_text("s[1,2]").find("no larger than") != std::string::npos);

  CHECK(error_byte("q[1]") == 0);
  CHECK(error_text("q[1]").find("omegaSeries") != std::string::npos);

  CHECK(error_byte("seed") == 0);  // multi-letter names are not atoms

  CHECK(error_byte("2/0") == 2);
  CHECK(error_text("2/0").find("nonzero denominator") != std::string::npos);

  CHECK(error_byte("e[1]^x") == 5);
  CHECK(error_text("e[1]^x").find("a digit") != std::string::npos);

  CHECK(error_byte("e[1]^-2") == 5);  // exponents are nonnegative integers

  CHECK(error_byte("e[1] h[2]") == 5);
  CHECK(error_text("e[1] h[2]").find("end of input") != std::string::npos);

  CHECK(error_byte("(1 + 2") == 6);
  CHECK(error_text("(1 + 2").find("')'") != std::string::npos);

  CHECK(error_byte("omegaSeries[1]") == 11);
  CHECK(error_text("omegaSeries[1]").find("'('") != std::string::npos);

  CHECK(error_byte("s 2") == 2);
  CHECK(error_text("s 2").find("'['") != std::string::npos);

  CHECK(error_byte("1 + ") == 4);

  // Offsets are bytes into the raw input, whitespace included.
  CHECK(error_byte("  s[2,]") == 6);

  // Well-formed input parses with no error.
  CHECK(error_byte("e[1]^2 + 2*h[2]") == -1);
}

TEST_CASE("evaluation agrees with the symmetric function engine") {
  const RegistryPtr reg = test_reg();

  CHECK(parse_expr("p[2,1]").evaluate(reg, 8) == pelem({2, 1}));
  CHECK(parse_expr("7").evaluate(reg, 8) == [&] {
    sym::SymFunc f = sym::SymFunc::one(reg, 8);
    f *= Rat(7);
    return f;
  }());

  // s/e/h/m atoms land in the power-sum basis through the standard
  // conversions: e1^2 + 2 h2 = 2 p11 + p2.
  {
    sym::SymFunc want = pelem({1, 1});
    want *= Rat(2);
    sym::SymFunc got = parse_expr("e[1]^2 + 2*h[2]").evaluate(reg, 8);
    CHECK(got == want + pelem({2}));
  }
  CHECK(parse_expr("s[1,1]").evaluate(reg, 8) ==
        sym::convert(sym::SymFunc::basis_elem(reg, sym::Basis::S, pt({1, 1}), 8),
                     sym::Basis::P));
  CHECK(parse_expr("s[2] + s[1,1]").evaluate(reg, 8) ==
        parse_expr("h[1]^2").evaluate(reg, 8));
  CHECK(parse_expr("m[1,1] + h[2]").evaluate(reg, 8) ==
        parse_expr("h[1]^2").evaluate(reg, 8));

  // Powers reduce to repeated products under the same truncation.
  CHECK(parse_expr("(s[1] + s[2])^3").evaluate(reg, 6) ==
        [&] {
          const sym::SymFunc b = parse_expr("s[1] + s[2]").evaluate(reg, 6);
          return sym::multiply(sym::multiply(b, b, 6), b, 6);
        }());
  CHECK(parse_expr("s[2,1]^0").evaluate(reg, 8) == sym::SymFunc::one(reg, 8));

  // Truncation drops atoms beyond the working degree.
  CHECK(parse_expr("s[3]").evaluate(reg, 2) == sym::SymFunc(reg, sym::Basis::P, 2));

  // The series wrapper matches the raising-series generator on a constant
  // alphabet; its argument must reduce to a rational multiple of p[1].
  CHECK(parse_expr("omegaSeries(-p[1])").evaluate(reg, 5) ==
        sym::omega_series(reg, LaurentPoly::constant(reg, Rat(-1)), 5));
  CHECK(parse_expr("omegaSeries(2*p[1] - p[1])").evaluate(reg, 4) ==
        sym::omega_series(reg, LaurentPoly::constant(reg, Rat(1)), 4));
  CHECK(parse_expr("omegaSeries(0*p[1])").evaluate(reg, 4) == sym::SymFunc::one(reg, 4));
  CHECK(caught([&] { (void)parse_expr("omegaSeries(s[2])").evaluate(reg, 8); }) ==
        Status::InvalidArg);
  CHECK(caught([&] { (void)parse_expr("omegaSeries(1)").evaluate(reg, 8); }) ==
        Status::InvalidArg);
  // The degree bound, not the working truncation, exposes bad arguments.
  CHECK(caught([&] { (void)parse_expr("omegaSeries(s[2])").evaluate(reg, 1); }) ==
        Status::InvalidArg);

  CHECK(caught([&] { (void)parse_expr("s[1]").evaluate(reg, -1); }) == Status::InvalidArg);
}

}  // TEST_SUITE
