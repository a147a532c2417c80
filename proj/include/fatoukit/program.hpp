#pragma once

#include <unordered_map>
#include <vector>

#include "fatoukit/expr.hpp"
#include "fatoukit/numeric.hpp"

namespace fatoukit {

enum class EvalStatus : std::uint8_t { Finite, Escaped, Pole };

// Magnitude past which a value counts as escaped.
inline constexpr double kOverflowThreshold = 1e300;

struct EvalResult {
  cd value{};
  EvalStatus status = EvalStatus::Finite;
  bool finite() const { return status == EvalStatus::Finite; }
};

struct EvalDual {
  cd value{};
  cd deriv{};
  EvalStatus status = EvalStatus::Finite;
  bool finite() const { return status == EvalStatus::Finite; }
};

/// Straight-line register code for an n-free expression and its symbolic
/// derivative. Shared subtrees are computed once.
class Program {
 public:
  Program() = default;
  explicit Program(const Expr& e);

  EvalResult eval(cd z) const;
  EvalDual eval_dual(cd z) const;

  const Expr& expr() const { return expr_; }
  const Expr& derivative_expr() const { return dexpr_; }

 private:
  enum class Op : std::uint8_t { Const, Var, Neg, Add, Sub, Mul, Div, IntPow, Pow, Exp, Sin, Cos, Log };
  struct Instr {
    Op op;
    int a = -1;
    int b = -1;
    int k = 0;  // IntPow exponent
    cd c{};     // Const value
  };

  int compile(const Expr& e, std::unordered_map<const Node*, int>& seen);
  void run(cd z, int from, int upto, cd* regs, bool& pole) const;

  Expr expr_;
  Expr dexpr_;
  std::vector<Instr> code_;
  int value_reg_ = -1;
  int value_len_ = 0;  // instructions needed for the value alone
  int deriv_reg_ = -1;
};

EvalStatus classify_value(cd v, bool pole);

}  // namespace fatoukit
