#include "fatoukit/escape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/parallel.hpp"

namespace fatoukit {

void EscapeParams::validate() const {
  if (n_max < 1 || tail_window < 1) throw std::invalid_argument("escape parameters must be positive");
  if (tail_window > n_max) throw std::invalid_argument("tail_window must not exceed n_max");
  if (u_hits < 2) throw std::invalid_argument("u_hits must be at least 2");
  if (!(escape_radius > 0.0)) throw std::invalid_argument("escape_radius must be positive");
  if (!(trend_ratio > 1.0)) throw std::invalid_argument("trend_ratio must exceed 1");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double magnitude(const EvalResult& r) {
  switch (r.status) {
    case EvalStatus::Pole: return kNaN;
    case EvalStatus::Escaped: return kInf;
    case EvalStatus::Finite: break;
  }
  return std::abs(r.value);
}

// NaN-skipping window statistics; a window of poles only yields NaN.
struct Stat {
  double lo = kInf;
  double hi = -kInf;
  bool any = false;
  void add(double v) {
    if (std::isnan(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    any = true;
  }
  double min() const { return any ? lo : kNaN; }
  double max() const { return any ? hi : kNaN; }
};

// NaN compares false, so a missing window never certifies anything.
bool increasing(const double* v, int count) {
  for (int k = 1; k < count; ++k) {
    if (!(v[k] > v[k - 1])) return false;
  }
  return true;
}

}  // namespace

PartVerdict decide_part(const double* mins, const double* maxs, int B, const EscapeParams& p) {
  PartVerdict v;
  const double R = p.escape_radius;
  if (B <= 0) return v;
  const double last_min = mins[B - 1];
  // I: the whole last window beyond R and not falling back ...
  if (last_min > R && (B < 2 || last_min >= mins[B - 2])) v.in_I = true;
  // ... or minima on a clear upward trend that has not reached R yet.
  if (B >= 3 && increasing(mins + B - 3, 3) && last_min > 1.0 && last_min >= p.trend_ratio * mins[B - 3]) {
    v.in_I = true;
  }
  // U: K window maxima past R, strictly increasing ...
  std::vector<double> above;
  for (int k = 0; k < B; ++k) {
    if (maxs[k] > R) above.push_back(maxs[k]);
  }
  if (static_cast<int>(above.size()) >= p.u_hits && increasing(above.data(), static_cast<int>(above.size()))) {
    v.in_U = true;
  }
  // ... or the last K maxima trending upward.
  const int K = p.u_hits;
  if (B >= K && increasing(maxs + B - K, K) && maxs[B - 1] > 1.0 && maxs[B - 1] >= p.trend_ratio * maxs[B - K]) {
    v.in_U = true;
  }
  v.in_U |= v.in_I;
  return v;
}

EscapeProfile escape_profile(const FamilySpec& spec, cd z, const EscapeParams& p) {
  p.validate();
  EscapeProfile out;
  for (const auto& part : enumerate_for_analysis(spec, p.n_max, p.tail_window)) {
    EscapeProfile::Part ep;
    ep.index = part.index;
    ep.infinite = part.infinite;
    for (const auto& m : part.members) ep.magnitudes.push_back(magnitude(m.eval(z)));
    for (const auto& [b, e] : part.windows) {
      Stat s;
      for (std::size_t k = b; k < e; ++k) s.add(ep.magnitudes[k]);
      ep.window_min.push_back(s.min());
      ep.window_max.push_back(s.max());
    }
    out.parts.push_back(std::move(ep));
  }
  return out;
}

EscapeVerdict escape_verdict(const EscapeProfile& profile, const EscapeParams& p) {
  EscapeVerdict v;
  bool any_infinite = false;
  bool all_I = true;
  bool any_U = false;
  double stat = kInf;
  for (const auto& part : profile.parts) {
    if (!part.infinite) continue;
    any_infinite = true;
    const PartVerdict pv =
        decide_part(part.window_min.data(), part.window_max.data(), static_cast<int>(part.window_min.size()), p);
    all_I &= pv.in_I;
    any_U |= pv.in_U;
    if (!part.window_min.empty()) stat = std::min(stat, part.window_min.back());
  }
  v.in_I = !any_infinite || all_I;
  v.in_U = any_infinite && (any_U || all_I);
  if (any_infinite && stat > 0.0) v.stat = stat == kInf ? std::log10(kOverflowThreshold) : std::log10(stat);
  return v;
}

EscapeMaps classify_escape(const FamilySpec& spec, const Window& w, const EscapeParams& p) {
  w.validate();
  p.validate();
  const int W = w.width;
  const int H = w.height;
  const Mask domain = domain_mask(w);
  EscapeMaps out;
  out.in_I = Mask(W, H, 0);
  out.in_U = Mask(W, H, 0);
  out.stat = Grid<double>(W, H, 0.0);

  const auto parts = enumerate_for_analysis(spec, p.n_max, p.tail_window);
  bool any_infinite = false;
  for (const auto& part : parts) {
    if (!part.infinite) {
      out.warnings.push_back("part " + std::to_string(part.index + 1) +
                             " is finite and excluded from the escape tests");
      continue;
    }
    any_infinite = true;
    if (part.members.size() < 2 * static_cast<std::size_t>(p.tail_window) &&
        !std::holds_alternative<Semigroup>(part.spec.node)) {
      out.warnings.push_back("part " + std::to_string(part.index + 1) + " has only " +
                             std::to_string(part.members.size()) + " members; escape needs two tail windows");
    }
    if (static_cast<int>(part.windows.size()) < p.u_hits) {
      out.warnings.push_back("part " + std::to_string(part.index + 1) + " has fewer than " +
                             std::to_string(p.u_hits) + " windows");
    }
  }
  if (!any_infinite) {
    out.vacuous = true;
    out.warnings.push_back("VACUOUS: no infinite part; I is all-true and U all-false by convention");
    for (int j = 0; j < H; ++j) {
      for (int i = 0; i < W; ++i) out.in_I.at(i, j) = domain.at(i, j);
    }
    return out;
  }

  // I starts true and is cut by each part; U starts false and is set by any.
  for (int j = 0; j < H; ++j) {
    for (int i = 0; i < W; ++i) out.in_I.at(i, j) = domain.at(i, j);
  }
  Grid<double> stat(W, H, kInf);
  for (const auto& part : parts) {
    if (!part.infinite) continue;
    const int B = static_cast<int>(part.windows.size());
    parallel_rows(H, p.threads, [&](int r0, int r1) {
      // one row of stats at a time keeps the buffer small
      std::vector<Stat> stats(static_cast<std::size_t>(W) * B);
      std::vector<double> mins(B), maxs(B);
      for (int j = r0; j < r1; ++j) {
        std::fill(stats.begin(), stats.end(), Stat{});
        for (int b = 0; b < B; ++b) {
          for (std::size_t k = part.windows[b].first; k < part.windows[b].second; ++k) {
            const Member& m = part.members[k];
            for (int i = 0; i < W; ++i) {
              if (domain.at(i, j)) stats[static_cast<std::size_t>(i) * B + b].add(magnitude(m.eval(w.pixel_center(i, j))));
            }
          }
        }
        for (int i = 0; i < W; ++i) {
          if (!domain.at(i, j)) continue;
          for (int b = 0; b < B; ++b) {
            mins[b] = stats[static_cast<std::size_t>(i) * B + b].min();
            maxs[b] = stats[static_cast<std::size_t>(i) * B + b].max();
          }
          const PartVerdict v = decide_part(mins.data(), maxs.data(), B, p);
          if (!v.in_I) out.in_I.at(i, j) = 0;
          if (v.in_U) out.in_U.at(i, j) = 1;
          if (B > 0 && !std::isnan(mins[B - 1])) stat.at(i, j) = std::min(stat.at(i, j), mins[B - 1]);
        }
      }
    });
  }
  for (int j = 0; j < H; ++j) {
    for (int i = 0; i < W; ++i) {
      if (!domain.at(i, j)) continue;
      if (out.in_I.at(i, j)) out.in_U.at(i, j) = 1;
      const double s = stat.at(i, j);
      // log10 of 0 is clamped so the JSON report stays finite
      out.stat.at(i, j) = s == kInf ? std::log10(kOverflowThreshold) : (s > 0.0 ? std::log10(s) : -300.0);
    }
  }
  return out;
}

Mask classify_I(const FamilySpec& spec, const Window& w, const EscapeParams& p) {
  return classify_escape(spec, w, p).in_I;
}

Mask classify_U(const FamilySpec& spec, const Window& w, const EscapeParams& p) {
  return classify_escape(spec, w, p).in_U;
}

void merge_escape(ClassificationMap& map, const EscapeMaps& e) {
  map.in_I = e.in_I;
  map.in_U = e.in_U;
  map.escape_stat = e.stat;
  map.warnings.insert(map.warnings.end(), e.warnings.begin(), e.warnings.end());
}

}  // namespace fatoukit
