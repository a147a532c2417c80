#include "fatoukit/normality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/parallel.hpp"

namespace fatoukit {

const char* label_name(Label l) {
  switch (l) {
    case Label::Fatou: return "FATOU";
    case Label::Julia: return "JULIA";
    case Label::Undecided: return "UNDECIDED";
  }
  return "?";
}

void NormalityParams::validate() const {
  if (n_max < 1 || window_len < 1 || growth_windows < 1 || neighborhood_radius_px < 0) {
    throw std::invalid_argument("normality parameters must be positive");
  }
  if (window_len > n_max || static_cast<long long>(growth_windows) * window_len > n_max) {
    throw std::invalid_argument("growth_windows * window_len must not exceed n_max");
  }
  if (!(marty_threshold > 0.0)) throw std::invalid_argument("marty_threshold must be positive");
  if (!(growth_ratio >= 1.0)) throw std::invalid_argument("growth_ratio must be at least 1");
}

std::optional<double> spherical_derivative(const EvalDual& d) {
  switch (d.status) {
    case EvalStatus::Pole: return std::nullopt;
    case EvalStatus::Escaped:
      // value overflowed: the spherical metric sees a point near infinity
      if (!is_finite(d.value) || std::abs(d.value) > kOverflowThreshold) return 0.0;
      return kOverflowThreshold;  // derivative alone overflowed
    case EvalStatus::Finite: break;
  }
  const double a2 = norm2(d.value);
  if (!(a2 < 1e300)) return 0.0;
  const double d2 = norm2(d.deriv);
  if (!(d2 < 1e300)) return std::abs(d.deriv) / (1.0 + a2);
  return std::sqrt(d2) / (1.0 + a2);
}

std::optional<double> spherical_derivative(const Member& m, cd z) { return spherical_derivative(m.eval_dual(z)); }

namespace {

constexpr double kMissing = -1.0;

struct Sampler {
  const Member& m;
  double best = kMissing;

  void take(const EvalDual& d) {
    if (auto s = spherical_derivative(d)) best = std::max(best, *s);
  }
};

// Argument change of f - w along the segment a -> b. The principal value
// is trusted once it matches the trapezoid estimate of the integral of
// f'/(f - w); otherwise the segment is split.
double edge_arg(const Member& m, cd w, cd a, cd b, const EvalDual& fa, const EvalDual& fb, int depth) {
  const cd ra = fa.value - w;
  const cd rb = fb.value - w;
  const double principal = std::arg(rb / ra);
  const double trap = (0.5 * (fa.deriv / ra + fb.deriv / rb) * (b - a)).imag();
  if (!(std::abs(trap - principal) >= 0.3) || depth >= 8) return principal;
  const cd mid = 0.5 * (a + b);
  const EvalDual fm = m.eval_dual(mid);
  if (!fm.finite() || fm.value == w) return principal;
  return edge_arg(m, w, a, mid, fa, fm, depth + 1) + edge_arg(m, w, mid, b, fm, fb, depth + 1);
}

struct Cell {
  cd lo;  // bottom-left corner
  cd hi;  // top-right corner
  double diam;

  bool contains(cd z, double slack) const {
    const double sx = slack * (hi.real() - lo.real());
    const double sy = slack * (hi.imag() - lo.imag());
    return z.real() >= lo.real() - sx && z.real() <= hi.real() + sx && z.imag() >= lo.imag() - sy &&
           z.imag() <= hi.imag() + sy;
  }
  cd center() const { return 0.5 * (lo + hi); }
};

std::optional<cd> newton(const Member& m, cd w, cd start, double mult, const Cell& cell) {
  cd z = start;
  for (int it = 0; it < 60; ++it) {
    const EvalDual d = m.eval_dual(z);
    if (!d.finite()) return std::nullopt;
    const cd r = d.value - w;
    if (r == cd{0.0, 0.0}) return z;
    if (d.deriv == cd{0.0, 0.0}) return std::nullopt;
    const cd step = mult * r / d.deriv;
    z -= step;
    if (std::abs(z - cell.center()) > 2.0 * cell.diam) return std::nullopt;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) return z;
  }
  return z;
}

// Samples the |f| = 1 level set next to a zero r, where the spherical
// derivative of a steep member peaks.
void sample_unit_crossings(Sampler& s, cd r, double reach) {
  static const cd dirs[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const cd d : dirs) {
    double hi = reach;
    const EvalDual far = s.m.eval_dual(r + hi * d);
    if (far.status == EvalStatus::Pole) continue;
    if (far.finite() && std::abs(far.value) <= 1.0) continue;
    double lo = reach * 1e-17;
    const EvalDual near = s.m.eval_dual(r + lo * d);
    if (!near.finite() || std::abs(near.value) > 1.0) {
      s.take(near);
      continue;
    }
    for (int it = 0; it < 80 && hi > lo * (1.0 + 1e-9); ++it) {
      const double mid = std::sqrt(lo * hi);
      const EvalDual e = s.m.eval_dual(r + mid * d);
      if (e.status == EvalStatus::Pole) break;
      if (!e.finite() || std::abs(e.value) > 1.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    s.take(s.m.eval_dual(r + hi * d));
    s.take(s.m.eval_dual(r + lo * d));
  }
}

// Looks for a solution of f = w inside the cell from the winding number
// of f - w around its boundary and samples the spherical derivative there.
void seek_target(Sampler& s, cd w, const Cell& cell, const cd* pts, const EvalDual* const* vals) {
  for (int k = 0; k < 4; ++k) {
    if (!vals[k]->finite()) return;
  }
  double min_gap = INFINITY;  // squared
  double max_slope = 0.0;     // squared
  for (int k = 0; k < 4; ++k) {
    const double gap = norm2(vals[k]->value - w);
    if (gap == 0.0) {
      // solution sits on the lattice; its own sample is already taken
      if (w == cd{0.0, 0.0}) sample_unit_crossings(s, pts[k], cell.diam);
      return;
    }
    min_gap = std::min(min_gap, gap);
    max_slope = std::max(max_slope, norm2(vals[k]->deriv));
  }
  if (min_gap > 16.0 * cell.diam * cell.diam * max_slope) return;
  double total = 0.0;
  for (int k = 0; k < 4; ++k) {
    const int n = (k + 1) % 4;
    total += edge_arg(s.m, w, pts[k], pts[n], *vals[k], *vals[n], 0);
  }
  const long winding = std::lround(total / (2.0 * kPi));
  if (winding <= 0) return;
  std::optional<cd> root = newton(s.m, w, cell.center(), static_cast<double>(winding), cell);
  if (winding > 1 && (!root || !cell.contains(*root, 0.1))) root = newton(s.m, w, cell.center(), 1.0, cell);
  if (!root || !cell.contains(*root, 0.1)) return;
  s.take(s.m.eval_dual(*root));
  if (w == cd{0.0, 0.0}) sample_unit_crossings(s, *root, cell.diam);
}

struct PartField {
  int windows = 0;
  std::vector<double> window_max;  // pixel-major: [pixel * windows + k]
  Grid<double> score;
  Mask growing;
};

bool is_growing(const double* maxima, int count, const NormalityParams& p) {
  if (count < p.growth_windows || p.growth_windows < 2) return false;
  const double* tail = maxima + (count - p.growth_windows);
  for (int k = 1; k < p.growth_windows; ++k) {
    if (!(tail[k] > tail[k - 1])) return false;
  }
  return tail[p.growth_windows - 1] >= p.growth_ratio * tail[0];
}

PartField score_part(const PartMembers& part, const Window& win, const Mask& domain, const NormalityParams& p) {
  const int W = win.width;
  const int H = win.height;
  const int B = static_cast<int>(part.windows.size());
  std::vector<double> cell_window(static_cast<std::size_t>(W) * H * std::max(B, 1), kMissing);
  const double dx = win.dx();
  const double dy = win.dy();
  const double diam = std::hypot(dx, dy);

  parallel_rows(H, p.threads, [&](int r0, int r1) {
    const int rows_c = r1 - r0 + 1;
    std::vector<EvalDual> corners(static_cast<std::size_t>(rows_c) * (W + 1));
    std::vector<double> corner_sph(corners.size(), kMissing);
    std::vector<std::uint8_t> need_corner(corners.size(), 0);
    for (int j = r0; j < r1; ++j) {
      for (int i = 0; i < W; ++i) {
        if (!domain.at(i, j)) continue;
        for (int dj = 0; dj <= 1; ++dj) {
          for (int di = 0; di <= 1; ++di) need_corner[static_cast<std::size_t>(j - r0 + dj) * (W + 1) + i + di] = 1;
        }
      }
    }
    for (int b = 0; b < B; ++b) {
      for (std::size_t k = part.windows[b].first; k < part.windows[b].second; ++k) {
        const Member& m = part.members[k];
        for (int jj = 0; jj < rows_c; ++jj) {
          for (int i = 0; i <= W; ++i) {
            const std::size_t idx = static_cast<std::size_t>(jj) * (W + 1) + i;
            if (!need_corner[idx]) continue;
            corners[idx] = m.eval_dual(win.corner(i, r0 + jj));
            corner_sph[idx] = spherical_derivative(corners[idx]).value_or(kMissing);
          }
        }
        for (int j = r0; j < r1; ++j) {
          for (int i = 0; i < W; ++i) {
            if (!domain.at(i, j)) continue;
            const auto slot_of = [&](int ci, int cj) { return static_cast<std::size_t>(cj - r0) * (W + 1) + ci; };
            const auto at = [&](int ci, int cj) -> const EvalDual& { return corners[slot_of(ci, cj)]; };
            Sampler s{m};
            s.best = std::max({corner_sph[slot_of(i, j)], corner_sph[slot_of(i + 1, j)],
                               corner_sph[slot_of(i, j + 1)], corner_sph[slot_of(i + 1, j + 1)]});
            // counter-clockwise: bottom-left, bottom-right, top-right, top-left
            const cd pts[4] = {win.corner(i, j + 1), win.corner(i + 1, j + 1), win.corner(i + 1, j),
                               win.corner(i, j)};
            const EvalDual* vals[4] = {&at(i, j + 1), &at(i + 1, j + 1), &at(i + 1, j), &at(i, j)};
            s.take(m.eval_dual(win.pixel_center(i, j)));
            const Cell cell{pts[0], pts[2], diam};
            seek_target(s, cd{0.0, 0.0}, cell, pts, vals);
            seek_target(s, cd{1.0, 0.0}, cell, pts, vals);
            double& slot = cell_window[(static_cast<std::size_t>(j) * W + i) * B + b];
            slot = std::max(slot, s.best);
          }
        }
      }
    }
  });

  PartField out;
  out.windows = B;
  out.window_max.assign(static_cast<std::size_t>(W) * H * std::max(B, 1), 0.0);
  out.score = Grid<double>(W, H, 0.0);
  out.growing = Mask(W, H, 0);
  const int r = p.neighborhood_radius_px;
  parallel_rows(H, p.threads, [&](int r0, int r1) {
    for (int j = r0; j < r1; ++j) {
      for (int i = 0; i < W; ++i) {
        if (!domain.at(i, j)) continue;
        double* mine = &out.window_max[(static_cast<std::size_t>(j) * W + i) * std::max(B, 1)];
        for (int dj = -r; dj <= r; ++dj) {
          for (int di = -r; di <= r; ++di) {
            const int ni = i + di;
            const int nj = j + dj;
            if (!domain.inside(ni, nj) || !domain.at(ni, nj)) continue;
            const double* theirs = &cell_window[(static_cast<std::size_t>(nj) * W + ni) * B];
            for (int b = 0; b < B; ++b) mine[b] = std::max(mine[b], theirs[b]);
          }
        }
        double best = 0.0;
        for (int b = 0; b < B; ++b) best = std::max(best, mine[b]);
        out.score.at(i, j) = best;
        out.growing.at(i, j) = is_growing(mine, B, p) ? 1 : 0;
      }
    }
  });
  return out;
}

Label part_label(double score, bool growing, const NormalityParams& p) {
  if (score > p.marty_threshold && growing) return Label::Julia;
  if (score <= p.marty_threshold && !growing) return Label::Fatou;
  return Label::Undecided;
}

struct Scored {
  ClassificationMap map;
  std::vector<PartMembers> parts;
  std::vector<PartField> fields;
};

Scored classify_impl(const FamilySpec& spec, const Window& w, const NormalityParams& p) {
  w.validate();
  p.validate();
  Scored out;
  ClassificationMap& map = out.map;
  map.window = w;
  map.domain = domain_mask(w);
  map.label = Grid<Label>(w.width, w.height, Label::Fatou);
  map.marty_score = Grid<double>(w.width, w.height, 0.0);
  map.growing = Mask(w.width, w.height, 0);
  map.in_I = Mask(w.width, w.height, 0);
  map.in_U = Mask(w.width, w.height, 0);
  map.escape_stat = Grid<double>(w.width, w.height, 0.0);

  out.parts = enumerate_for_analysis(spec, static_cast<std::size_t>(p.n_max), static_cast<std::size_t>(p.window_len));
  std::vector<Grid<Label>> labels;
  for (const auto& part : out.parts) {
    out.fields.push_back(score_part(part, w, map.domain, p));
    const PartField& f = out.fields.back();
    if (part.infinite && f.windows < p.growth_windows) {
      map.warnings.push_back("part " + std::to_string(part.index + 1) + " has " + std::to_string(f.windows) +
                             " member windows; growth needs " + std::to_string(p.growth_windows));
    }
    if (part.infinite && part.members.size() < static_cast<std::size_t>(p.n_max) &&
        !std::holds_alternative<Semigroup>(part.spec.node)) {
      map.warnings.push_back("part " + std::to_string(part.index + 1) + " enumerated only " +
                             std::to_string(part.members.size()) + " distinct members");
    }
  }
  bool any_infinite = false;
  for (const auto& part : out.parts) any_infinite |= part.infinite;
  for (int j = 0; j < w.height; ++j) {
    for (int i = 0; i < w.width; ++i) {
      if (!map.domain.at(i, j)) continue;
      bool any_julia = false;
      bool all_fatou = true;
      double score = 0.0;
      bool growing = false;
      for (std::size_t k = 0; k < out.parts.size(); ++k) {
        const double s = out.fields[k].score.at(i, j);
        score = std::max(score, s);
        if (!out.parts[k].infinite) continue;  // a finite family is normal
        const bool g = out.fields[k].growing.at(i, j) != 0;
        growing |= g;
        const Label l = part_label(s, g, p);
        any_julia |= l == Label::Julia;
        all_fatou &= l == Label::Fatou;
      }
      map.marty_score.at(i, j) = score;
      map.growing.at(i, j) = growing ? 1 : 0;
      map.label.at(i, j) = !any_infinite ? Label::Fatou
                           : any_julia   ? Label::Julia
                           : all_fatou   ? Label::Fatou
                                         : Label::Undecided;
    }
  }
  return out;
}

}  // namespace

ClassificationMap classify_normality(const FamilySpec& spec, const Window& w, const NormalityParams& p) {
  return std::move(classify_impl(spec, w, p).map);
}

MartyScore marty_score(const FamilySpec& spec, cd z, const NormalityParams& p, double pixel) {
  const int r = p.neighborhood_radius_px;
  const int side = 2 * r + 1;
  Window w;
  w.width = side;
  w.height = side;
  w.re_min = z.real() - pixel * side / 2.0;
  w.re_max = z.real() + pixel * side / 2.0;
  w.im_min = z.imag() - pixel * side / 2.0;
  w.im_max = z.imag() + pixel * side / 2.0;
  Scored s = classify_impl(spec, w, p);
  MartyScore out;
  out.score = s.map.marty_score.at(r, r);
  out.growing = s.map.growing.at(r, r) != 0;
  double best = -1.0;
  for (std::size_t k = 0; k < s.parts.size(); ++k) {
    const PartField& f = s.fields[k];
    if (f.score.at(r, r) <= best) continue;
    best = f.score.at(r, r);
    const double* m = &f.window_max[(static_cast<std::size_t>(r) * side + r) * std::max(f.windows, 1)];
    out.window_maxima.assign(m, m + f.windows);
  }
  return out;
}

}  // namespace fatoukit
