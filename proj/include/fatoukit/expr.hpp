#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>

namespace fatoukit {

using cd = std::complex<double>;

enum class NodeKind : std::uint8_t {
  Const,
  Var,    // z
  Index,  // n
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Exp,
  Sin,
  Cos,
  Log,  // internal only: produced by differentiating z-dependent exponents
};

struct Node;

/// Immutable expression tree over `z` and the index symbol `n`.
///
/// Nodes are shared, so copying an Expr is cheap and subtrees may be
/// reused (the result of substitution is a DAG, not a tree).
class Expr {
 public:
  Expr() = default;  // empty handle; leaves use it for absent children
  explicit operator bool() const { return static_cast<bool>(node_); }

  static Expr constant(cd value);
  static Expr var();
  static Expr index();

  static Expr neg(Expr a);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  static Expr pow(Expr base, Expr exponent);
  static Expr exp(Expr a);
  static Expr sin(Expr a);
  static Expr cos(Expr a);
  static Expr log(Expr a);

  NodeKind kind() const;
  cd value() const;  // Const only
  const Expr& lhs() const;
  const Expr& rhs() const;
  const Node* node() const { return node_.get(); }

  bool depends_on_z() const;
  bool depends_on_n() const;
  bool is_constant() const { return kind() == NodeKind::Const; }

  // Structural (deep) equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(NodeKind kind, Expr a, Expr b);
  std::shared_ptr<const Node> node_;
};

struct Node {
  NodeKind kind = NodeKind::Const;
  cd value{};
  Expr a;
  Expr b;
  bool has_z = false;
  bool has_n = false;
};

// Replaces every `n` by the integer constant `n`.
Expr bind_index(const Expr& e, std::int64_t n);

// Replaces every `z` by `inner` (composition e ∘ inner).
Expr substitute_z(const Expr& e, const Expr& inner);

// Symbolic d/dz with light constant folding. `n` is treated as a constant.
Expr derivative(const Expr& e);

// Canonical text form; re-parses to a structurally equal tree for every
// expression the grammar can produce.
std::string to_string(const Expr& e);

// Number formatting shared with the family printer.
std::string format_real(double x);

}  // namespace fatoukit
