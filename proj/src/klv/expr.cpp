#include "klv/expr.hpp"

#include <cctype>
#include <climits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "klv/error.hpp"
#include "klv/laurent.hpp"

namespace klv::expr {

using core::LaurentPoly;
using core::Partition;
using core::Rat;
using core::RegistryPtr;
using sym::Basis;
using sym::SymFunc;

struct Expr::Node {
  NodeKind kind = NodeKind::Rational;
  Rat value;               // Rational
  Basis basis = Basis::P;  // Atom
  Partition parts;         // Atom
  int exponent = 0;        // Pow
  std::vector<Expr> kids;  // operands, left to right
};

Expr Expr::rational(const Rat& c) {
  if (c < 0) return neg(rational(Rat(-c)));
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Rational;
  n->value = c;
  return Expr(std::move(n));
}

Expr Expr::atom(Basis b, const Partition& mu) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Atom;
  n->basis = b;
  n->parts = mu;
  return Expr(std::move(n));
}

Expr Expr::neg(Expr a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Neg;
  n->kids.push_back(std::move(a));
  return Expr(std::move(n));
}

Expr Expr::add(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Add;
  n->kids.push_back(std::move(a));
  n->kids.push_back(std::move(b));
  return Expr(std::move(n));
}

Expr Expr::sub(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Sub;
  n->kids.push_back(std::move(a));
  n->kids.push_back(std::move(b));
  return Expr(std::move(n));
}

Expr Expr::mul(Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Mul;
  n->kids.push_back(std::move(a));
  n->kids.push_back(std::move(b));
  return Expr(std::move(n));
}

Expr Expr::pow(Expr a, int e) {
  if (e < 0) fail(Status::InvalidArg, "exponent must be nonnegative");
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Pow;
  n->exponent = e;
  n->kids.push_back(std::move(a));
  return Expr(std::move(n));
}

Expr Expr::omega_series(Expr a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::OmegaSeries;
  n->kids.push_back(std::move(a));
  return Expr(std::move(n));
}

NodeKind Expr::kind() const { return node_->kind; }
const Rat& Expr::value() const { return node_->value; }
Basis Expr::basis() const { return node_->basis; }
const Partition& Expr::parts() const { return node_->parts; }
int Expr::exponent() const { return node_->exponent; }
const Expr& Expr::child(int i) const { return node_->kids.at(i); }
int Expr::child_count() const { return static_cast<int>(node_->kids.size()); }

int Expr::degree() const {
  switch (kind()) {
    case NodeKind::Rational:
      return 0;
    case NodeKind::Atom:
      return node_->parts.size();
    case NodeKind::Neg:
      return child(0).degree();
    case NodeKind::Add:
    case NodeKind::Sub: {
      const int a = child(0).degree();
      const int b = child(1).degree();
      if (a == kUnboundedDegree || b == kUnboundedDegree) return kUnboundedDegree;
      return a > b ? a : b;
    }
    case NodeKind::Mul: {
      const int a = child(0).degree();
      const int b = child(1).degree();
      if (a == kUnboundedDegree || b == kUnboundedDegree) return kUnboundedDegree;
      return a + b;
    }
    case NodeKind::Pow: {
      if (node_->exponent == 0) return 0;
      const int a = child(0).degree();
      if (a == kUnboundedDegree) return kUnboundedDegree;
      return a * node_->exponent;
    }
    case NodeKind::OmegaSeries:
      return kUnboundedDegree;
  }
  fail(Status::Internal, "unhandled expression node kind");
}

namespace {

// Precedence levels used by both the printer and the parser's grammar:
// sums bind loosest, then products, then a leading minus, then powers;
// leaves and call syntax never need parentheses.
int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub:
      return 1;
    case NodeKind::Mul:
      return 2;
    case NodeKind::Neg:
      return 3;
    case NodeKind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_to(const Expr& x, std::string& out);

// Prints a child, parenthesized when its precedence is below what the
// surrounding position requires.
void print_child(const Expr& x, int min_prec, std::string& out) {
  if (precedence(x.kind()) < min_prec) {
    out += '(';
    print_to(x, out);
    out += ')';
  } else {
    print_to(x, out);
  }
}

void print_to(const Expr& x, std::string& out) {
  switch (x.kind()) {
    case NodeKind::Rational:
      out += x.value().get_str();
      return;
    case NodeKind::Atom: {
      out += basis_letter(x.basis());
      out += '[';
      const Partition& mu = x.parts();
      for (int i = 1; i <= mu.length(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(mu.part(i));
      }
      out += ']';
      return;
    }
    case NodeKind::Neg:
      out += '-';
      print_child(x.child(0), 3, out);
      return;
    case NodeKind::Add:
    case NodeKind::Sub:
      print_child(x.child(0), 1, out);
      out += x.kind() == NodeKind::Add ? " + " : " - ";
      print_child(x.child(1), 2, out);
      return;
    case NodeKind::Mul:
      print_child(x.child(0), 2, out);
      out += " * ";
      print_child(x.child(1), 3, out);
      return;
    case NodeKind::Pow:
      print_child(x.child(0), 5, out);
      out += '^';
      out += std::to_string(x.exponent());
      return;
    case NodeKind::OmegaSeries:
      out += "omegaSeries(";
      print_to(x.child(0), out);
      out += ')';
      return;
  }
  fail(Status::Internal, "unhandled expression node kind");
}

}  // namespace

std::string Expr::str() const {
  std::string out;
  print_to(*this, out);
  return out;
}

bool Expr::operator==(const Expr& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case NodeKind::Rational:
      return value() == o.value();
    case NodeKind::Atom:
      return basis() == o.basis() && parts() == o.parts();
    case NodeKind::Pow:
      if (exponent() != o.exponent()) return false;
      break;
    default:
      break;
  }
  if (child_count() != o.child_count()) return false;
  for (int i = 0; i < child_count(); ++i) {
    if (!(child(i) == o.child(i))) return false;
  }
  return true;
}

SymFunc Expr::evaluate(const RegistryPtr& reg, int dsym) const {
  if (dsym < 0) fail(Status::InvalidArg, "truncation degree must be nonnegative");
  switch (kind()) {
    case NodeKind::Rational: {
      SymFunc f = SymFunc::one(reg, dsym);
      f *= value();
      return f;
    }
    case NodeKind::Atom:
      return sym::convert(SymFunc::basis_elem(reg, basis(), parts(), dsym), Basis::P);
    case NodeKind::Neg:
      return -child(0).evaluate(reg, dsym);
    case NodeKind::Add:
      return child(0).evaluate(reg, dsym) + child(1).evaluate(reg, dsym);
    case NodeKind::Sub:
      return child(0).evaluate(reg, dsym) - child(1).evaluate(reg, dsym);
    case NodeKind::Mul:
      return sym::multiply(child(0).evaluate(reg, dsym), child(1).evaluate(reg, dsym), dsym);
    case NodeKind::Pow: {
      SymFunc acc = SymFunc::one(reg, dsym);
      SymFunc base = child(0).evaluate(reg, dsym);
      int e = exponent();
      while (e > 0) {  // square-and-multiply; truncation commutes with products
        if (e & 1) acc = sym::multiply(acc, base, dsym);
        e >>= 1;
        if (e > 0) base = sym::multiply(base, base, dsym);
      }
      return acc;
    }
    case NodeKind::OmegaSeries: {
      // The wrapper only supports arguments that reduce to c * p[1]; evaluate
      // the argument at its own degree bound so a violation cannot hide
      // behind truncation.
      const Expr& arg = child(0);
      const int d = arg.degree();
      const int dc = d == kUnboundedDegree ? (dsym > 1 ? dsym : 1) : (d > 1 ? d : 1);
      const SymFunc v = arg.evaluate(reg, dc);
      Rat c(0);
      for (const auto& [mu, coeff] : v.terms()) {
        if (coeff.is_zero()) continue;
        if (!(mu == Partition({1})) || !coeff.is_constant()) {
          fail(Status::InvalidArg, "omegaSeries argument must be a rational multiple of p[1]");
        }
        c = coeff.constant_term();
      }
      return sym::omega_series(reg, LaurentPoly::constant(reg, c), dsym);
    }
  }
  fail(Status::Internal, "unhandled expression node kind");
}

namespace {

// Recursive-descent parser over the raw bytes. Grammar, loosest first:
//
//   expression := term (('+' | '-') term)*
//   term       := factor ('*' factor)*
//   factor     := '-' factor | primary ('^' uint)?
//   primary    := number | atom | 'omegaSeries' '(' expression ')'
//              |  '(' expression ')'
//   atom       := [spehm] '[' (uint (',' uint)*)? ']'
//   number     := uint ('/' uint)?
//
// Whitespace is skipped between any two tokens. Errors report the byte
// offset where parsing stopped and what would have been accepted there.
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr parse() {
    Expr e = expression();
    skip_ws();
    if (pos_ != s_.size()) fail_at(pos_, "one of: '+', '-', '*', end of input");
    return e;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail_at(size_t at, const std::string& expected) {
    fail(Status::ParseError,
         "parse error at byte " + std::to_string(at) + ": expected " + expected);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_is(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  bool peek_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  bool peek_alpha() const {
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
  }

  bool accept(char c) {
    skip_ws();
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (accept('+')) {
        e = Expr::add(std::move(e), term());
      } else if (accept('-')) {
        e = Expr::sub(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    while (accept('*')) e = Expr::mul(std::move(e), factor());
    return e;
  }

  Expr factor() {
    if (accept('-')) return Expr::neg(factor());
    Expr e = primary();
    if (accept('^')) {
      skip_ws();
      if (!peek_digit()) fail_at(pos_, "a digit");
      e = Expr::pow(std::move(e), small_uint("exponent"));
    }
    return e;
  }

  Expr primary() {
    skip_ws();
    if (peek_digit()) return number();
    if (accept('(')) {
      Expr e = expression();
      if (!accept(')')) fail_at(pos_, "one of: '+', '-', '*', ')'");
      return e;
    }
    if (peek_alpha()) return name();
    fail_at(pos_, "one of: a number, a basis atom, 'omegaSeries', '(', '-'");
  }

  Expr name() {
    const size_t start = pos_;
    while (peek_alpha()) ++pos_;
    const std::string id = s_.substr(start, pos_ - start);
    if (id == "omegaSeries") {
      if (!accept('(')) fail_at(pos_, "'('");
      Expr a = expression();
      if (!accept(')')) fail_at(pos_, "one of: '+', '-', '*', ')'");
      return Expr::omega_series(std::move(a));
    }
    if (id.size() == 1) {
      switch (id[0]) {
        case 'p':
          return atom_tail(Basis::P);
        case 's':
          return atom_tail(Basis::S);
        case 'e':
          return atom_tail(Basis::E);
        case 'h':
          return atom_tail(Basis::H);
        case 'm':
          return atom_tail(Basis::M);
        default:
          break;
      }
    }
    fail_at(start, "one of: a basis atom 's', 'p', 'e', 'h', 'm', 'omegaSeries'");
  }

  Expr atom_tail(Basis b) {
    if (!accept('[')) fail_at(pos_, "'['");
    if (accept(']')) return Expr::atom(b, Partition());
    skip_ws();
    if (!peek_digit()) fail_at(pos_, "a digit or ']'");
    std::vector<int> parts;
    for (;;) {
      const size_t at = pos_;
      const int v = small_uint("part");
      if (v == 0) fail_at(at, "a positive part");
      if (!parts.empty() && parts.back() < v) {
        fail_at(at, "a part no larger than the previous one");
      }
      parts.push_back(v);
      if (accept(',')) {
        skip_ws();
        if (!peek_digit()) fail_at(pos_, "a digit");
        continue;
      }
      if (accept(']')) break;
      skip_ws();
      fail_at(pos_, "',' or ']'");
    }
    return Expr::atom(b, Partition(parts));
  }

  Expr number() {
    mpz_class num = big_uint();
    if (accept('/')) {
      skip_ws();
      const size_t at = pos_;
      if (!peek_digit()) fail_at(pos_, "a digit");
      mpz_class den = big_uint();
      if (den == 0) fail_at(at, "a nonzero denominator");
      Rat q(num, den);
      q.canonicalize();
      return Expr::rational(q);
    }
    return Expr::rational(Rat(num));
  }

  mpz_class big_uint() {
    const size_t start = pos_;
    while (peek_digit()) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  int small_uint(const char* what) {
    const size_t start = pos_;
    long long v = 0;
    while (peek_digit()) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > INT_MAX) fail_at(start, std::string("a smaller ") + what);
      ++pos_;
    }
    return static_cast<int>(v);
  }
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace klv::expr
