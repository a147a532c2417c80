#include "fatoukit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/numeric.hpp"

namespace fatoukit {

const char* fixed_class_name(FixedClass c) {
  switch (c) {
    case FixedClass::Attracting: return "ATTRACTING";
    case FixedClass::SuperAttracting: return "SUPER_ATTRACTING";
    case FixedClass::Repelling: return "REPELLING";
    case FixedClass::Indifferent: return "INDIFFERENT";
    case FixedClass::Mixed: return "MIXED";
  }
  return "?";
}

const char* limit_kind_name(LimitKind k) {
  switch (k) {
    case LimitKind::Finite: return "FINITE";
    case LimitKind::Infinity: return "INFINITY";
    case LimitKind::None: return "NONE";
  }
  return "?";
}

const char* constant_limit_name(ConstantLimitVerdict v) {
  switch (v) {
    case ConstantLimitVerdict::Pass: return "PASS";
    case ConstantLimitVerdict::Fail: return "FAIL";
    case ConstantLimitVerdict::HypothesisNotMet: return "HYPOTHESIS_NOT_MET";
  }
  return "?";
}

std::optional<FixedClass> uniform_class(const std::vector<cd>& lambda, std::size_t from) {
  if (from >= lambda.size()) return std::nullopt;
  auto all = [&](auto pred) {
    return std::all_of(lambda.begin() + static_cast<std::ptrdiff_t>(from), lambda.end(),
                       [&](cd l) { return pred(std::abs(l)); });
  };
  if (all([](double a) { return a < 1e-9; })) return FixedClass::SuperAttracting;
  if (all([](double a) { return a < 1.0 - 1e-6; })) return FixedClass::Attracting;
  if (all([](double a) { return a > 1.0 + 1e-6; })) return FixedClass::Repelling;
  if (all([](double a) { return std::abs(a - 1.0) <= 1e-6; })) return FixedClass::Indifferent;
  return std::nullopt;
}

namespace {

double residual_at(const std::vector<Member>& members, cd z0) {
  double r = 0.0;
  for (const auto& m : members) {
    const EvalResult v = m.eval(z0);
    if (v.status != EvalStatus::Finite) return std::numeric_limits<double>::infinity();
    r = std::max(r, std::abs(v.value - z0));
  }
  return r;
}

FixedPointRecord spectrum(const std::vector<Member>& members, cd z0) {
  FixedPointRecord rec;
  rec.location = z0;
  rec.residual = residual_at(members, z0);
  if (!(rec.residual < kFixedResidual)) {
    throw DynamicsError("not a fixed point of the family: residual " + std::to_string(rec.residual));
  }
  for (const auto& m : members) rec.multipliers.push_back(m.eval_dual(z0).deriv);
  if (auto c = uniform_class(rec.multipliers)) {
    rec.cls = *c;
    return rec;
  }
  // Eventual class: the shortest leading run whose removal leaves a
  // uniform verdict on at least half of the members.
  const std::size_t n = rec.multipliers.size();
  for (std::size_t skip = 1; 2 * (n - skip) >= n; ++skip) {
    if (auto c = uniform_class(rec.multipliers, skip)) {
      rec.cls = *c;
      for (std::size_t k = 0; k < skip; ++k) rec.head_exceptions.push_back(static_cast<int>(k));
      return rec;
    }
  }
  rec.cls = FixedClass::Mixed;
  return rec;
}

std::vector<Member> first_members(const FamilySpec& spec, int n_check) {
  if (n_check < 1) throw std::invalid_argument("n_check must be positive");
  auto members = enumerate_members(spec, static_cast<std::size_t>(n_check));
  if (members.empty()) throw DynamicsError("family has no members");
  return members;
}

}  // namespace

FixedPointRecord multiplier_spectrum(const FamilySpec& spec, cd z0, int n_check) {
  return spectrum(first_members(spec, n_check), z0);
}

std::vector<FixedPointRecord> find_fixed_points(const FamilySpec& spec, const Window& w, int n_check) {
  if (n_check < 2) throw std::invalid_argument("n_check must be at least 2");
  w.validate();
  const auto members = first_members(spec, n_check);
  const Member& f = members.front();
  constexpr int kSeeds = 32;
  std::vector<cd> found;
  for (int j = 0; j < kSeeds; ++j) {
    for (int i = 0; i < kSeeds; ++i) {
      cd z(w.re_min + (i + 0.5) * (w.re_max - w.re_min) / kSeeds,
           w.im_max - (j + 0.5) * (w.im_max - w.im_min) / kSeeds);
      for (int it = 0; it < 50; ++it) {
        const EvalDual d = f.eval_dual(z);
        if (d.status != EvalStatus::Finite) break;
        const cd g = d.value - z;
        if (g == 0.0) break;
        const cd dg = d.deriv - 1.0;
        if (dg == 0.0) break;
        const cd step = g / dg;
        if (!is_finite(step)) break;
        z -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
      }
      // a stalled run still counts when the residual test passes
      if (!is_finite(z) || !w.in_domain(z)) continue;
      if (!(residual_at(members, z) < kFixedResidual)) continue;
      const bool dup = std::any_of(found.begin(), found.end(), [&](cd q) { return std::abs(q - z) < 1e-6; });
      if (!dup) found.push_back(z);
    }
  }
  std::sort(found.begin(), found.end(), [](cd a, cd b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  std::vector<FixedPointRecord> out;
  for (const cd& z : found) out.push_back(spectrum(members, z));
  return out;
}

LimitFunctionEstimate limit_functions(const FamilySpec& spec, const std::vector<cd>& probes, const EscapeParams& p) {
  if (probes.empty()) throw DynamicsError("limit_functions needs at least one probe");
  p.validate();
  LimitFunctionEstimate est;
  est.probes = probes;
  const auto members = enumerate_members(spec, static_cast<std::size_t>(p.n_max));
  const std::size_t n = members.size();
  if (n < 2) return est;

  // values[k][q] = f_k(probe q); NaN marks a pole or overflow
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<cd>> values(n, std::vector<cd>(probes.size()));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t q = 0; q < probes.size(); ++q) {
      const EvalResult v = members[k].eval(probes[q]);
      values[k][q] = v.status == EvalStatus::Finite ? v.value : cd(nan, nan);
    }
  }

  const std::size_t tail = std::min<std::size_t>(static_cast<std::size_t>(p.tail_window), n - 1);
  double defect = 0.0;
  for (std::size_t k = n - 1 - tail; k + 1 < n; ++k) {
    for (std::size_t q = 0; q < probes.size(); ++q) {
      const double d = std::abs(values[k][q] - values[k + 1][q]);
      defect = std::isnan(d) ? std::numeric_limits<double>::infinity() : std::max(defect, d);
    }
  }
  est.cauchy_defect = defect;
  if (defect < kCauchyTolerance) {
    est.kind = LimitKind::Finite;
    est.values = values.back();
    est.last = members.back();
    return est;
  }

  bool all_escape = true;
  const std::size_t W = static_cast<std::size_t>(p.tail_window);
  for (std::size_t q = 0; q < probes.size() && all_escape; ++q) {
    std::vector<double> mins, maxs;
    for (std::size_t b = 0; b < n; b += W) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      for (std::size_t k = b; k < std::min(n, b + W); ++k) {
        const EvalResult v = members[k].eval(probes[q]);
        const double a = v.status == EvalStatus::Escaped ? std::numeric_limits<double>::infinity()
                         : v.status == EvalStatus::Pole  ? nan
                                                         : std::abs(v.value);
        if (std::isnan(a)) continue;
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      mins.push_back(lo);
      maxs.push_back(hi);
    }
    all_escape = decide_part(mins.data(), maxs.data(), static_cast<int>(mins.size()), p).in_I;
  }
  if (all_escape) est.kind = LimitKind::Infinity;
  return est;
}

cd estimate_derivative(const LimitFunctionEstimate& est, cd z0, double h) {
  if (!est.last) throw DynamicsError("no finite limit estimate");
  const cd a = est.last->eval(z0 + h).value;
  const cd b = est.last->eval(z0 - h).value;
  return (a - b) / (2.0 * h);
}

ConstantLimitCheck check_constant_limit_fixed(const FamilySpec& spec, cd c, int n_check) {
  const auto members = first_members(spec, n_check);
  ConstantLimitCheck out;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const EvalResult v = members[k].eval(c);
    if (v.status != EvalStatus::Finite || !(std::abs(v.value - c) < kFixedResidual)) {
      out.offending.push_back(static_cast<int>(k));
    }
  }
  out.all_fixed = out.offending.empty();

  out.commuting = true;
  const auto& probes = fingerprint_probes();
  const std::size_t m = std::min<std::size_t>(members.size(), 8);
  for (std::size_t a = 0; a < m && out.commuting; ++a) {
    for (std::size_t b = a + 1; b < m && out.commuting; ++b) {
      for (int q = 0; q < kFingerprintProbes; ++q) {
        const EvalResult ga = members[b].eval(probes[q]);
        const EvalResult fa = members[a].eval(probes[q]);
        if (ga.status != EvalStatus::Finite || fa.status != EvalStatus::Finite) continue;
        const EvalResult fg = members[a].eval(ga.value);
        const EvalResult gf = members[b].eval(fa.value);
        if (fg.status != EvalStatus::Finite || gf.status != EvalStatus::Finite) continue;
        if (std::abs(fg.value - gf.value) > 1e-8 * (1.0 + std::abs(fg.value))) {
          out.commuting = false;
          break;
        }
      }
    }
  }
  if (!out.commuting) out.verdict = ConstantLimitVerdict::HypothesisNotMet;
  else out.verdict = out.all_fixed ? ConstantLimitVerdict::Pass : ConstantLimitVerdict::Fail;
  return out;
}

}  // namespace fatoukit
