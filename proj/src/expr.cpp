#include "fatoukit/expr.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "fatoukit/numeric.hpp"

namespace fatoukit {

namespace {

bool is_const(const Expr& e, cd v) { return e.is_constant() && e.value() == v; }
bool is_zero(const Expr& e) { return is_const(e, cd{0.0, 0.0}); }
bool is_one(const Expr& e) { return is_const(e, cd{1.0, 0.0}); }

// Folding stops at non-finite results so every tree stays printable.
bool both_const(const Expr& a, const Expr& b) { return a.is_constant() && b.is_constant(); }

}  // namespace

Expr Expr::make(NodeKind kind, Expr a, Expr b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->has_z = (a && a.node()->has_z) || (b && b.node()->has_z);
  node->has_n = (a && a.node()->has_n) || (b && b.node()->has_n);
  node->a = std::move(a);
  node->b = std::move(b);
  return Expr(std::move(node));
}

Expr Expr::constant(cd value) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Const;
  node->value = value;
  return Expr(std::move(node));
}

Expr Expr::var() {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Var;
  node->has_z = true;
  return Expr(std::move(node));
}

Expr Expr::index() {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Index;
  node->has_n = true;
  return Expr(std::move(node));
}

Expr Expr::neg(Expr a) {
  if (a.is_constant()) return constant(-a.value());
  return make(NodeKind::Neg, std::move(a), {});
}

Expr Expr::add(Expr a, Expr b) {
  if (both_const(a, b) && is_finite(a.value() + b.value())) return constant(a.value() + b.value());
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  return make(NodeKind::Add, std::move(a), std::move(b));
}

Expr Expr::sub(Expr a, Expr b) {
  if (both_const(a, b) && is_finite(a.value() - b.value())) return constant(a.value() - b.value());
  if (is_zero(b)) return a;
  if (is_zero(a)) return neg(std::move(b));
  return make(NodeKind::Sub, std::move(a), std::move(b));
}

Expr Expr::mul(Expr a, Expr b) {
  if (both_const(a, b) && is_finite(cmul(a.value(), b.value()))) return constant(cmul(a.value(), b.value()));
  if (is_zero(a) || is_zero(b)) return constant(0.0);
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  return make(NodeKind::Mul, std::move(a), std::move(b));
}

Expr Expr::div(Expr a, Expr b) {
  if (both_const(a, b) && b.value() != cd{0.0, 0.0} && is_finite(a.value() / b.value())) {
    return constant(a.value() / b.value());
  }
  if (is_one(b)) return a;
  return make(NodeKind::Div, std::move(a), std::move(b));
}

Expr Expr::pow(Expr base, Expr exponent) {
  if (is_zero(exponent)) return constant(1.0);
  if (is_one(exponent)) return base;
  if (base.is_constant() && exponent.is_constant()) {
    const cd e = exponent.value();
    int k = 0;
    if (as_small_integer(e, k)) {
      const cd v = int_pow(base.value(), k);
      if ((k >= 0 || base.value() != cd{0.0, 0.0}) && is_finite(v)) return constant(v);
    } else if (base.value() != cd{0.0, 0.0}) {
      const cd v = std::exp(e * std::log(base.value()));
      if (is_finite(v)) return constant(v);
    }
  }
  return make(NodeKind::Pow, std::move(base), std::move(exponent));
}

Expr Expr::exp(Expr a) {
  if (a.is_constant() && is_finite(std::exp(a.value()))) return constant(std::exp(a.value()));
  return make(NodeKind::Exp, std::move(a), {});
}

Expr Expr::sin(Expr a) {
  if (a.is_constant() && is_finite(std::sin(a.value()))) return constant(std::sin(a.value()));
  return make(NodeKind::Sin, std::move(a), {});
}

Expr Expr::cos(Expr a) {
  if (a.is_constant() && is_finite(std::cos(a.value()))) return constant(std::cos(a.value()));
  return make(NodeKind::Cos, std::move(a), {});
}

Expr Expr::log(Expr a) {
  if (a.is_constant() && a.value() != cd{0.0, 0.0}) return constant(std::log(a.value()));
  return make(NodeKind::Log, std::move(a), {});
}

NodeKind Expr::kind() const { return node_->kind; }
cd Expr::value() const { return node_->value; }
const Expr& Expr::lhs() const { return node_->a; }
const Expr& Expr::rhs() const { return node_->b; }
bool Expr::depends_on_z() const { return node_->has_z; }
bool Expr::depends_on_n() const { return node_->has_n; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a || !b) return false;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == NodeKind::Const) return a.value() == b.value();
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

namespace {

Expr rebuild(const Expr& e, const Expr& a, const Expr& b) {
  switch (e.kind()) {
    case NodeKind::Neg: return Expr::neg(a);
    case NodeKind::Add: return Expr::add(a, b);
    case NodeKind::Sub: return Expr::sub(a, b);
    case NodeKind::Mul: return Expr::mul(a, b);
    case NodeKind::Div: return Expr::div(a, b);
    case NodeKind::Pow: return Expr::pow(a, b);
    case NodeKind::Exp: return Expr::exp(a);
    case NodeKind::Sin: return Expr::sin(a);
    case NodeKind::Cos: return Expr::cos(a);
    case NodeKind::Log: return Expr::log(a);
    default: return e;
  }
}

// Memoized bottom-up rewrite that preserves sharing.
Expr rewrite(const Expr& root, const std::function<std::optional<Expr>(const Expr&)>& leaf) {
  std::unordered_map<const Node*, Expr> memo;
  std::function<Expr(const Expr&)> go = [&](const Expr& e) -> Expr {
    if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
    Expr out;
    if (auto replaced = leaf(e)) {
      out = *replaced;
    } else if (!e.lhs()) {
      out = e;
    } else {
      Expr a = go(e.lhs());
      Expr b = e.rhs() ? go(e.rhs()) : Expr{};
      out = rebuild(e, a, b);
    }
    memo.emplace(e.node(), out);
    return out;
  };
  return go(root);
}

}  // namespace

Expr bind_index(const Expr& e, std::int64_t n) {
  const Expr value = Expr::constant(static_cast<double>(n));
  return rewrite(e, [&](const Expr& x) -> std::optional<Expr> {
    if (!x.depends_on_n()) return x;
    if (x.kind() == NodeKind::Index) return value;
    return std::nullopt;
  });
}

Expr substitute_z(const Expr& e, const Expr& inner) {
  return rewrite(e, [&](const Expr& x) -> std::optional<Expr> {
    if (!x.depends_on_z()) return x;
    if (x.kind() == NodeKind::Var) return inner;
    return std::nullopt;
  });
}

Expr derivative(const Expr& root) {
  std::unordered_map<const Node*, Expr> memo;
  std::function<Expr(const Expr&)> d = [&](const Expr& e) -> Expr {
    if (!e.depends_on_z()) return Expr::constant(0.0);
    if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
    Expr out;
    const Expr& a = e.lhs();
    const Expr& b = e.rhs();
    switch (e.kind()) {
      case NodeKind::Var: out = Expr::constant(1.0); break;
      case NodeKind::Neg: out = Expr::neg(d(a)); break;
      case NodeKind::Add: out = Expr::add(d(a), d(b)); break;
      case NodeKind::Sub: out = Expr::sub(d(a), d(b)); break;
      case NodeKind::Mul: out = Expr::add(Expr::mul(d(a), b), Expr::mul(a, d(b))); break;
      case NodeKind::Div:
        out = Expr::div(Expr::sub(Expr::mul(d(a), b), Expr::mul(a, d(b))),
                        Expr::pow(b, Expr::constant(2.0)));
        break;
      case NodeKind::Pow:
        if (!b.depends_on_z()) {
          // c * a^(c-1) * a'
          out = Expr::mul(Expr::mul(b, Expr::pow(a, Expr::sub(b, Expr::constant(1.0)))), d(a));
        } else {
          // a^b * (b' log a + b a'/a), principal branch
          out = Expr::mul(e, Expr::add(Expr::mul(d(b), Expr::log(a)),
                                       Expr::div(Expr::mul(b, d(a)), a)));
        }
        break;
      case NodeKind::Exp: out = Expr::mul(e, d(a)); break;
      case NodeKind::Sin: out = Expr::mul(Expr::cos(a), d(a)); break;
      case NodeKind::Cos: out = Expr::neg(Expr::mul(Expr::sin(a), d(a))); break;
      case NodeKind::Log: out = Expr::div(d(a), a); break;
      case NodeKind::Const:
      case NodeKind::Index: out = Expr::constant(0.0); break;
    }
    memo.emplace(e.node(), out);
    return out;
  };
  return d(root);
}

std::string format_real(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

int precedence(const Expr& e) {
  switch (e.kind()) {
    case NodeKind::Add:
    case NodeKind::Sub: return kPrecAdd;
    case NodeKind::Mul:
    case NodeKind::Div: return kPrecMul;
    case NodeKind::Neg: return kPrecUnary;
    case NodeKind::Pow: return kPrecPow;
    default: return kPrecAtom;
  }
}

std::string print_const(cd v) {
  const double re = v.real();
  const double im = v.imag();
  // signed zeros print like zeros; Expr equality does not see the sign
  if (im == 0.0 && re >= 0.0) return format_real(re);
  if (re == 0.0 && im > 0.0) return format_real(im) + "i";
  std::string s = "(";
  if (im == 0.0) return s + "-" + format_real(-re) + ")";
  if (re != 0.0) {
    s += re < 0 ? "-" + format_real(-re) : format_real(re);
    s += im < 0 ? "-" : "+";
  } else if (im < 0) {
    s += "-";
  }
  return s + format_real(std::abs(im)) + "i)";
}

std::string print(const Expr& e);

std::string wrap(const Expr& e, bool paren) {
  return paren ? "(" + print(e) + ")" : print(e);
}

std::string print(const Expr& e) {
  const Expr& a = e.lhs();
  const Expr& b = e.rhs();
  switch (e.kind()) {
    case NodeKind::Const: return print_const(e.value());
    case NodeKind::Var: return "z";
    case NodeKind::Index: return "n";
    case NodeKind::Neg: return "-" + wrap(a, precedence(a) < kPrecUnary);
    case NodeKind::Add: return print(a) + "+" + wrap(b, precedence(b) <= kPrecAdd);
    case NodeKind::Sub: return print(a) + "-" + wrap(b, precedence(b) <= kPrecAdd);
    case NodeKind::Mul:
      return wrap(a, precedence(a) < kPrecMul) + "*" + wrap(b, precedence(b) <= kPrecMul);
    case NodeKind::Div:
      return wrap(a, precedence(a) < kPrecMul) + "/" + wrap(b, precedence(b) <= kPrecMul);
    case NodeKind::Pow:
      return wrap(a, precedence(a) < kPrecAtom) + "^" + wrap(b, precedence(b) < kPrecUnary);
    case NodeKind::Exp: return "exp(" + print(a) + ")";
    case NodeKind::Sin: return "sin(" + print(a) + ")";
    case NodeKind::Cos: return "cos(" + print(a) + ")";
    case NodeKind::Log: return "log(" + print(a) + ")";
  }
  return {};
}

}  // namespace

std::string to_string(const Expr& e) { return e ? print(e) : std::string{}; }

}  // namespace fatoukit
