#include "fatoukit/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace fatoukit {

namespace {

// Hard stop on index scans for parametric families whose members collapse
// numerically (e.g. all probes overflow), so enumeration always terminates.
std::int64_t scan_cap(std::size_t limit) { return 64 * static_cast<std::int64_t>(limit) + 1024; }

std::vector<Member> parametric(const Parametric& p, std::size_t limit, int part,
                               std::unordered_set<std::uint64_t>& seen) {
  std::vector<Member> out;
  const std::int64_t last = p.n_to ? *p.n_to : p.n_from + scan_cap(limit);
  for (std::int64_t n = p.n_from; n <= last && out.size() < limit; ++n) {
    Member m = Member::from_expr(bind_index(p.expr, n), n, part);
    if (seen.insert(fingerprint(m)).second) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Member> finite_set(const FiniteSet& s, std::size_t limit, int part,
                               std::unordered_set<std::uint64_t>& seen) {
  std::vector<Member> out;
  for (const auto& e : s.members) {
    if (out.size() >= limit) break;
    Member m = Member::from_expr(e, std::nullopt, part);
    if (seen.insert(fingerprint(m)).second) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<Member>> semigroup_levels(const Semigroup& g, std::size_t limit, int part,
                                                  std::unordered_set<std::uint64_t>& seen) {
  auto programs = std::make_shared<std::vector<Program>>();
  for (const auto& e : g.generators) programs->emplace_back(e);
  std::shared_ptr<const std::vector<Program>> gens = programs;

  std::vector<std::vector<Member>> levels;
  std::size_t total = 0;
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= g.max_word_len && total < limit && !frontier.empty(); ++len) {
    std::vector<Member> level;
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      for (int k = 0; k < static_cast<int>(g.generators.size()) && total < limit; ++k) {
        std::vector<int> word = w;
        word.push_back(k);
        Member m = Member::from_word(gens, word, part);
        if (seen.insert(fingerprint(m)).second) {
          level.push_back(std::move(m));
          next.push_back(std::move(word));
          ++total;
        }
      }
    }
    frontier = std::move(next);
    if (!level.empty()) levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Member> leaf(const FamilySpec& part_spec, std::size_t limit, int part,
                         std::unordered_set<std::uint64_t>& seen) {
  if (const auto* p = std::get_if<Parametric>(&part_spec.node)) return parametric(*p, limit, part, seen);
  if (const auto* s = std::get_if<FiniteSet>(&part_spec.node)) return finite_set(*s, limit, part, seen);
  if (const auto* g = std::get_if<Semigroup>(&part_spec.node)) {
    std::vector<Member> out;
    for (auto& level : semigroup_levels(*g, limit, part, seen)) {
      for (auto& m : level) out.push_back(std::move(m));
    }
    return out;
  }
  return {};
}

}  // namespace

std::vector<std::vector<Member>> enumerate_parts(const FamilySpec& spec, std::size_t limit) {
  std::vector<std::vector<Member>> out;
  const auto parts = flatten_parts(spec);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::unordered_set<std::uint64_t> seen;
    out.push_back(leaf(parts[i], limit, static_cast<int>(i), seen));
  }
  return out;
}

std::vector<std::vector<Member>> enumerate_semigroup_levels(const Semigroup& g, std::size_t limit,
                                                            int part) {
  std::unordered_set<std::uint64_t> seen;
  return semigroup_levels(g, limit, part, seen);
}

std::vector<Member> enumerate_members(const FamilySpec& spec, std::size_t limit) {
  const auto per_part = enumerate_parts(spec, limit);
  if (per_part.size() == 1) return per_part.front();
  std::vector<Member> out;
  std::unordered_set<std::uint64_t> seen;
  std::size_t longest = 0;
  for (const auto& p : per_part) longest = std::max(longest, p.size());
  for (std::size_t k = 0; k < longest && out.size() < limit; ++k) {
    for (const auto& p : per_part) {
      if (k >= p.size() || out.size() >= limit) continue;
      if (seen.insert(fingerprint(p[k])).second) out.push_back(p[k]);
    }
  }
  return out;
}

std::vector<PartMembers> enumerate_for_analysis(const FamilySpec& spec, std::size_t limit,
                                                std::size_t window_len) {
  std::vector<PartMembers> out;
  const auto parts = flatten_parts(spec);
  window_len = std::max<std::size_t>(window_len, 1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    PartMembers pm;
    pm.spec = parts[i];
    pm.index = static_cast<int>(i);
    pm.infinite = is_infinite_part(parts[i]);
    std::unordered_set<std::uint64_t> seen;
    if (const auto* g = std::get_if<Semigroup>(&parts[i].node)) {
      for (auto& level : semigroup_levels(*g, limit, pm.index, seen)) {
        const std::size_t begin = pm.members.size();
        for (auto& m : level) pm.members.push_back(std::move(m));
        pm.windows.emplace_back(begin, pm.members.size());
      }
    } else {
      pm.members = leaf(parts[i], limit, pm.index, seen);
      for (std::size_t b = 0; b < pm.members.size(); b += window_len) {
        pm.windows.emplace_back(b, std::min(b + window_len, pm.members.size()));
      }
    }
    out.push_back(std::move(pm));
  }
  return out;
}

FiniteSet intersect_families(const FamilySpec& a, const FamilySpec& b, std::size_t limit) {
  const auto ma = enumerate_members(a, limit);
  const auto mb = enumerate_members(b, limit);
  std::unordered_set<std::uint64_t> in_b;
  for (const auto& m : mb) in_b.insert(fingerprint(m));
  FiniteSet out;
  for (const auto& m : ma) {
    if (in_b.count(fingerprint(m))) out.members.push_back(m.expr());
  }
  out.infinite_truncation = has_infinite_part(a) && has_infinite_part(b) &&
                            out.members.size() >= std::max<std::size_t>(2, limit / 4);
  return out;
}

}  // namespace fatoukit
