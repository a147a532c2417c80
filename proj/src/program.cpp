#include "fatoukit/program.hpp"

#include <stdexcept>

namespace fatoukit {

EvalStatus classify_value(cd v, bool pole) {
  if (pole) return EvalStatus::Pole;
  if (!is_finite(v) || std::abs(v.real()) > kOverflowThreshold || std::abs(v.imag()) > kOverflowThreshold) {
    return EvalStatus::Escaped;
  }
  return EvalStatus::Finite;
}

Program::Program(const Expr& e) : expr_(e) {
  if (e.depends_on_n()) throw std::invalid_argument("expression still depends on n");
  dexpr_ = derivative(e);
  std::unordered_map<const Node*, int> seen;
  value_reg_ = compile(expr_, seen);
  value_len_ = static_cast<int>(code_.size());
  deriv_reg_ = compile(dexpr_, seen);
}

int Program::compile(const Expr& e, std::unordered_map<const Node*, int>& seen) {
  if (auto it = seen.find(e.node()); it != seen.end()) return it->second;
  Instr ins{};
  switch (e.kind()) {
    case NodeKind::Const: ins.op = Op::Const; ins.c = e.value(); break;
    case NodeKind::Var: ins.op = Op::Var; break;
    case NodeKind::Index: throw std::invalid_argument("unbound index");
    case NodeKind::Neg: ins.op = Op::Neg; break;
    case NodeKind::Add: ins.op = Op::Add; break;
    case NodeKind::Sub: ins.op = Op::Sub; break;
    case NodeKind::Mul: ins.op = Op::Mul; break;
    case NodeKind::Div: ins.op = Op::Div; break;
    case NodeKind::Pow: {
      int k = 0;
      if (e.rhs().is_constant() && as_small_integer(e.rhs().value(), k)) {
        ins.op = Op::IntPow;
        ins.k = k;
      } else {
        ins.op = Op::Pow;
      }
      break;
    }
    case NodeKind::Exp: ins.op = Op::Exp; break;
    case NodeKind::Sin: ins.op = Op::Sin; break;
    case NodeKind::Cos: ins.op = Op::Cos; break;
    case NodeKind::Log: ins.op = Op::Log; break;
  }
  if (e.lhs()) ins.a = compile(e.lhs(), seen);
  if (e.rhs() && ins.op != Op::IntPow) ins.b = compile(e.rhs(), seen);
  code_.push_back(ins);
  const int reg = static_cast<int>(code_.size()) - 1;
  seen.emplace(e.node(), reg);
  return reg;
}

void Program::run(cd z, int from, int upto, cd* r, bool& pole) const {
  constexpr cd zero{0.0, 0.0};
  for (int i = from; i < upto; ++i) {
    const Instr& in = code_[i];
    switch (in.op) {
      case Op::Const: r[i] = in.c; break;
      case Op::Var: r[i] = z; break;
      case Op::Neg: r[i] = -r[in.a]; break;
      case Op::Add: r[i] = r[in.a] + r[in.b]; break;
      case Op::Sub: r[i] = r[in.a] - r[in.b]; break;
      case Op::Mul: r[i] = cmul(r[in.a], r[in.b]); break;
      case Op::Div:
        if (r[in.b] == zero) {
          pole = true;
          r[i] = cd{kOverflowThreshold * 10, 0.0};
        } else {
          r[i] = r[in.a] / r[in.b];
        }
        break;
      case Op::IntPow:
        if (in.k < 0 && r[in.a] == zero) {
          pole = true;
          r[i] = cd{kOverflowThreshold * 10, 0.0};
        } else {
          r[i] = int_pow(r[in.a], in.k);
        }
        break;
      case Op::Pow:
        if (r[in.a] == zero) {
          // 0^w: 0 for Re w > 0, pole otherwise
          if (r[in.b].real() > 0.0) {
            r[i] = zero;
          } else {
            pole = true;
            r[i] = cd{kOverflowThreshold * 10, 0.0};
          }
        } else {
          r[i] = std::exp(r[in.b] * std::log(r[in.a]));
        }
        break;
      case Op::Exp: r[i] = std::exp(r[in.a]); break;
      case Op::Sin: r[i] = std::sin(r[in.a]); break;
      case Op::Cos: r[i] = std::cos(r[in.a]); break;
      case Op::Log:
        if (r[in.a] == zero) {
          pole = true;
          r[i] = cd{-kOverflowThreshold * 10, 0.0};
        } else {
          r[i] = std::log(r[in.a]);
        }
        break;
    }
  }
}

namespace {

// Per-thread register file, grown on demand.
cd* scratch(std::size_t n) {
  thread_local std::vector<cd> buf(256);
  if (buf.size() < n) buf.resize(n);
  return buf.data();
}

}  // namespace

EvalResult Program::eval(cd z) const {
  cd* regs = scratch(static_cast<std::size_t>(value_len_));
  bool pole = false;
  run(z, 0, value_len_, regs, pole);
  const cd v = regs[value_reg_];
  return {v, classify_value(v, pole)};
}

EvalDual Program::eval_dual(cd z) const {
  cd* regs = scratch(code_.size());
  bool pole = false;
  run(z, 0, value_len_, regs, pole);
  const cd v = regs[value_reg_];
  const EvalStatus st = classify_value(v, pole);
  if (st != EvalStatus::Finite) return {v, cd{}, st};
  run(z, value_len_, static_cast<int>(code_.size()), regs, pole);
  const cd d = regs[deriv_reg_];
  if (pole) return {v, d, EvalStatus::Pole};
  if (!is_finite(d)) return {v, d, EvalStatus::Escaped};
  return {v, d, EvalStatus::Finite};
}

}  // namespace fatoukit
