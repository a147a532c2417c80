#include "fatoukit/orbit.hpp"

#include <cmath>

#include "fatoukit/enumerate.hpp"
#include "fatoukit/roots.hpp"

namespace fatoukit {

void OrbitLimits::validate() const {
  if (n_pre < 1 || depth < 1 || max_points < 1 || !(dedup_tol > 0.0)) {
    throw std::invalid_argument("orbit limits must be positive");
  }
}

bool PointSet::contains(cd z) const {
  for (const cd& p : points_) {
    if (std::abs(p - z) <= tol_) return true;
  }
  return false;
}

bool PointSet::insert(cd z, std::string provenance) {
  if (contains(z)) return false;
  points_.push_back(z);
  provenance_.push_back(std::move(provenance));
  return true;
}

Preimages preimages(const Member& m, cd w, double dedup_tol) {
  Preimages out;
  const PolyForm pf = polynomial_form(m);
  if (pf.status != PolyStatus::Polynomial) {
    out.status = PreimageStatus::NotSupported;
    return out;
  }
  std::vector<cd> c = pf.coeffs;
  if (c.empty()) c.push_back(0.0);
  c[0] -= w;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) {
    out.status = PreimageStatus::NoSolution;
    return out;
  }
  PointSet seen(dedup_tol);
  for (const cd& r : aberth_roots(c).roots) {
    if (seen.insert(r)) out.roots.push_back(r);
  }
  return out;
}

namespace {

struct PolyMembers {
  std::vector<Member> members;
  std::vector<std::string> names;
};

PolyMembers polynomial_members(const FamilySpec& spec, int n_pre) {
  PolyMembers out;
  for (const auto& m : enumerate_members(spec, static_cast<std::size_t>(n_pre))) {
    if (polynomial_form(m).status != PolyStatus::Polynomial) continue;
    out.members.push_back(m);
    out.names.push_back(m.describe());
  }
  if (out.members.empty()) {
    throw OrbitError(OrbitError::Code::NotSupported, "NOT_SUPPORTED: no polynomial member among the first " +
                                                         std::to_string(n_pre));
  }
  return out;
}

}  // namespace

PointSet backward_orbit(const FamilySpec& spec, cd w, const OrbitLimits& lim) {
  lim.validate();
  const PolyMembers pm = polynomial_members(spec, lim.n_pre);
  PointSet orbit(lim.dedup_tol);
  orbit.insert(w);
  std::vector<cd> frontier = {w};
  for (int level = 0; level < lim.depth && !frontier.empty(); ++level) {
    std::vector<cd> next;
    for (const cd& target : frontier) {
      for (std::size_t k = 0; k < pm.members.size(); ++k) {
        for (const cd& r : preimages(pm.members[k], target, lim.dedup_tol).roots) {
          if (orbit.size() >= lim.max_points) return orbit;
          if (orbit.insert(r, pm.names[k])) next.push_back(r);
        }
      }
    }
    frontier = std::move(next);
  }
  return orbit;
}

ExceptionalCandidates exceptional_candidates(const FamilySpec& spec, const std::vector<cd>& seeds,
                                             const OrbitLimits& lim, std::size_t bound) {
  lim.validate();
  ExceptionalCandidates out;
  if (seeds.empty()) return out;
  const PolyMembers pm = polynomial_members(spec, lim.n_pre);
  const std::size_t half = pm.members.size() / 2;
  for (const cd& s : seeds) {
    PointSet pre(lim.dedup_tol);
    bool late_growth = false;
    for (std::size_t k = 0; k < pm.members.size(); ++k) {
      for (const cd& r : preimages(pm.members[k], s, lim.dedup_tol).roots) {
        if (pre.insert(r) && k >= half) late_growth = true;
      }
    }
    out.preimage_counts.push_back(pre.size());
    if (!late_growth && pre.size() <= bound) out.candidates.push_back(s);
  }
  return out;
}

std::vector<std::pair<int, int>> sample_pixels(const Mask& set, std::size_t count) {
  std::vector<std::pair<int, int>> all;
  for (int j = 0; j < set.height; ++j) {
    for (int i = 0; i < set.width; ++i) {
      if (set.at(i, j)) all.emplace_back(i, j);
    }
  }
  if (all.size() <= count) return all;
  std::vector<std::pair<int, int>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(all[k * all.size() / count]);
  return out;
}

namespace {

// Classifies one image point against the tolerance set.
void tally(InvarianceReport& r, const Window& w, const Mask& domain, const Mask& near_set, cd img) {
  const auto px = w.pixel_of(img);
  if (!px || !domain.at(px->first, px->second)) {
    ++r.out_of_window;
    return;
  }
  ++r.images;
  if (!near_set.at(px->first, px->second)) ++r.violations;
}

}  // namespace

InvarianceReport check_backward_invariance(const FamilySpec& spec, const Window& w, const Mask& member_set,
                                           const OrbitLimits& lim, std::size_t samples, int tol_px) {
  lim.validate();
  InvarianceReport r;
  const auto pts = sample_pixels(member_set, samples);
  r.sampled = pts.size();
  if (pts.empty()) return r;
  PolyMembers pm;
  try {
    pm = polynomial_members(spec, lim.n_pre);
  } catch (const OrbitError& e) {
    r.supported = false;
    r.notice = e.what();
    return r;
  }
  const Mask domain = domain_mask(w);
  const Mask near_set = dilate(member_set, tol_px);
  for (const auto& [i, j] : pts) {
    const cd z = w.pixel_center(i, j);
    for (const auto& m : pm.members) {
      for (const cd& r0 : preimages(m, z, lim.dedup_tol).roots) tally(r, w, domain, near_set, r0);
    }
  }
  return r;
}

InvarianceReport check_forward_invariance(const FamilySpec& spec, const Window& w, const Mask& member_set,
                                          std::size_t samples, int n_pre, int tol_px) {
  InvarianceReport r;
  const auto pts = sample_pixels(member_set, samples);
  r.sampled = pts.size();
  if (pts.empty()) return r;
  const auto members = enumerate_members(spec, static_cast<std::size_t>(n_pre));
  const Mask domain = domain_mask(w);
  const Mask near_set = dilate(member_set, tol_px);
  for (const auto& [i, j] : pts) {
    const cd z = w.pixel_center(i, j);
    for (const auto& m : members) {
      const EvalResult v = m.eval(z);
      if (v.status != EvalStatus::Finite) {
        ++r.out_of_window;
        continue;
      }
      tally(r, w, domain, near_set, v.value);
    }
  }
  return r;
}

namespace {

bool in_U(const FamilySpec& g, cd z, const EscapeParams& p) {
  return escape_verdict(escape_profile(g, z, p), p).in_U;
}

}  // namespace

std::optional<int> check_generator_escape(const std::vector<Expr>& generators, cd z, const EscapeParams& p, int L) {
  if (generators.empty() || L < 1) throw std::invalid_argument("generator escape needs generators and L >= 1");
  const FamilySpec g(Semigroup{generators, L});
  if (!in_U(g, z, p)) {
    throw OrbitError(OrbitError::Code::Precondition, "point is not in the computed U of the semigroup");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const EvalResult v = Member::from_expr(generators[i]).eval(z);
    if (v.status == EvalStatus::Pole) continue;
    // An image that overflowed has escaped already.
    if (v.status == EvalStatus::Escaped || in_U(g, v.value, p)) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

}  // namespace fatoukit
