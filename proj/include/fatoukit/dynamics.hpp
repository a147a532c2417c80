#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatoukit/escape.hpp"
#include "fatoukit/family.hpp"
#include "fatoukit/member.hpp"
#include "fatoukit/window.hpp"

namespace fatoukit {

enum class FixedClass { Attracting, SuperAttracting, Repelling, Indifferent, Mixed };

const char* fixed_class_name(FixedClass c);

class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixedPointRecord {
  cd location;
  std::vector<cd> multipliers;  // f_k'(z0) in enumeration order
  FixedClass cls = FixedClass::Mixed;
  double residual = 0.0;  // max_k |f_k(z0) - z0|
  // Leading members left out by the eventual-class rule (0-based).
  std::vector<int> head_exceptions;
};

inline constexpr double kFixedResidual = 1e-8;

/// Class of a multiplier list: all |l| < 1e-9 super-attracting, all < 1-1e-6
/// attracting, all > 1+1e-6 repelling, all within 1e-6 of 1 indifferent.
std::optional<FixedClass> uniform_class(const std::vector<cd>& multipliers, std::size_t from = 0);

/// Throws DynamicsError when z0 is not fixed by the first n_check members.
FixedPointRecord multiplier_spectrum(const FamilySpec& spec, cd z0, int n_check);

/// Newton on f_1(z) - z from a 32x32 seed lattice over the window; points
/// fixed by the first n_check members, deduplicated at 1e-6.
std::vector<FixedPointRecord> find_fixed_points(const FamilySpec& spec, const Window& w, int n_check);

enum class LimitKind { Finite, Infinity, None };

const char* limit_kind_name(LimitKind k);

struct LimitFunctionEstimate {
  LimitKind kind = LimitKind::None;
  std::vector<cd> probes;
  std::vector<cd> values;  // last member at the probes (Finite only)
  double cauchy_defect = 0.0;
  std::optional<Member> last;  // the member whose values are reported
};

inline constexpr double kCauchyTolerance = 1e-6;

/// Tail behaviour of the canonical enumeration (first p.n_max members) at
/// the probes. Finite when sup_probes |f_k - f_{k+1}| stays below 1e-6 over
/// the last tail window; Infinity when every probe is certified escaping by
/// the escape rule; None otherwise.
LimitFunctionEstimate limit_functions(const FamilySpec& spec, const std::vector<cd>& probes, const EscapeParams& p);

/// Central difference of the estimate's member at z0.
cd estimate_derivative(const LimitFunctionEstimate& est, cd z0, double h = 1e-5);

enum class ConstantLimitVerdict { Pass, Fail, HypothesisNotMet };

struct ConstantLimitCheck {
  ConstantLimitVerdict verdict = ConstantLimitVerdict::Fail;
  bool commuting = false;
  bool all_fixed = false;      // evaluated even when the hypothesis fails
  std::vector<int> offending;  // 0-based members with |f(c) - c| >= 1e-8
};

const char* constant_limit_name(ConstantLimitVerdict v);

/// Whether c is fixed by the first n_check members; the verdict needs the
/// members to commute (f(g(p)) vs g(f(p)) at the eight fingerprint probes).
ConstantLimitCheck check_constant_limit_fixed(const FamilySpec& spec, cd c, int n_check);

}  // namespace fatoukit
