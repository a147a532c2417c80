#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fatoukit/expr.hpp"
#include "fatoukit/program.hpp"

namespace fatoukit {

/// One concrete function of a family: a bound expression or a composition
/// word over semigroup generators (leftmost applied first).
class Member {
 public:
  Member() = default;

  static Member from_expr(const Expr& bound, std::optional<std::int64_t> n = {}, int part = 0);
  static Member from_word(std::shared_ptr<const std::vector<Program>> generators,
                          std::vector<int> word, int part = 0);

  bool is_word() const;
  const std::vector<int>& word() const;
  std::optional<std::int64_t> index() const;
  int part() const;

  EvalResult eval(cd z) const;
  EvalDual eval_dual(cd z) const;

  // Closed-form expression; composed on first use for words.
  const Expr& expr() const;
  std::string describe() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Derivative as a member of its own (symbolic, cached per member).
Member differentiate(const Member& m);

enum class PolyStatus { Polynomial, NotPolynomial, DegreeTooHigh };

inline constexpr int kMaxPolyDegree = 64;

struct PolyForm {
  PolyStatus status = PolyStatus::NotPolynomial;
  std::vector<cd> coeffs;  // ascending degree, trailing zeros trimmed
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

PolyForm polynomial_form(const Member& m);
PolyForm polynomial_form(const Expr& e);

cd horner(const std::vector<cd>& coeffs, cd z);

// Fingerprint probe constants (version 1): eight points r*e^{i*theta}
// with r in [0.3, 1.3), theta in [0, 2pi), drawn from SplitMix64 seeded
// with 0x5EED; probes 8..15 are the fallback points, taken in order when
// a primary probe hits a pole.
inline constexpr std::uint64_t kFingerprintSeed = 0x5EED;
inline constexpr int kFingerprintProbes = 8;
inline constexpr int kFingerprintFallbacks = 8;
inline constexpr double kFingerprintQuantum = 1e-9;

const std::vector<cd>& fingerprint_probes();

std::uint64_t fingerprint(const Member& m);

}  // namespace fatoukit
