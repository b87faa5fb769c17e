#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klv/partition.hpp"
#include "klv/rational.hpp"
#include "klv/symfunc.hpp"

namespace klv::expr {

// A parsed symmetric-function expression: basis atoms s/p/e/h/m indexed by a
// partition, nonnegative rational literals, and the operators + - * ^ together
// with the series wrapper omegaSeries(...). Trees are immutable values; copies
// share structure.
//
// The concrete syntax is whitespace-insensitive. `str` produces a canonical
// form that parses back to the identical tree, so parse(str(x)) == x for every
// tree and str(parse(t)) is a fixed point for every accepted input t.
//
// Negative literals are represented as a negation node wrapping a nonnegative
// literal; `rational` performs that normalization so printed trees stay
// re-parseable.

enum class NodeKind { Rational, Atom, Neg, Add, Sub, Mul, Pow, OmegaSeries };

// degree() result for series nodes, which have no finite degree bound.
inline constexpr int kUnboundedDegree = -1;

class Expr {
 public:
  static Expr rational(const core::Rat& c);
  static Expr atom(sym::Basis b, const core::Partition& mu);
  static Expr neg(Expr a);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr pow(Expr a, int e);  // e >= 0
  static Expr omega_series(Expr a);

  NodeKind kind() const;
  const core::Rat& value() const;          // Rational nodes
  sym::Basis basis() const;          // Atom nodes
  const core::Partition& parts() const;    // Atom nodes
  int exponent() const;              // Pow nodes
  const Expr& child(int i) const;    // operand i (0-based)
  int child_count() const;

  // Total symmetric-function degree of the value, computable without
  // evaluating: atoms contribute |mu|, products add, sums take the maximum.
  // Series wrappers make the degree unbounded (kUnboundedDegree), as does any
  // node containing one (except under a zeroth power).
  int degree() const;

  // Canonical text. Binary operators are spaced, powers are not; parentheses
  // appear exactly where precedence requires them.
  std::string str() const;

  bool operator==(const Expr& o) const;
  bool operator!=(const Expr& o) const { return !(*this == o); }

  // Value of the expression as a P-basis symmetric function over `reg`,
  // truncated beyond total degree `dsym`. omegaSeries arguments must evaluate
  // to a rational multiple of p[1] (InvalidArg otherwise).
  sym::SymFunc evaluate(const core::RegistryPtr& reg, int dsym) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Parses the concrete syntax above. Failures raise ParseError whose message
// reports the byte offset of the failure and the set of tokens that would
// have been accepted there, e.g. parse_expr("s[2,]") fails at byte 4
// expecting a digit.
Expr parse_expr(const std::string& text);

}  // namespace klv::expr
