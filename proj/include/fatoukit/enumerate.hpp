#pragma once

#include <cstddef>
#include <vector>

#include "fatoukit/family.hpp"
#include "fatoukit/member.hpp"

namespace fatoukit {

/// First `limit` distinct members in canonical order: ascending n,
/// set order, semigroup words by length (then lexicographic), unions
/// round-robin. Fewer than `limit` only when the family is finite.
std::vector<Member> enumerate_members(const FamilySpec& spec, std::size_t limit);

/// One list per leaf part (flatten_parts order), each deduplicated within
/// its part and truncated to `limit`. Members carry their part index.
std::vector<std::vector<Member>> enumerate_parts(const FamilySpec& spec, std::size_t limit);

/// Semigroup members grouped by word length (level k holds words of
/// length k+1 that survived dedup).
std::vector<std::vector<Member>> enumerate_semigroup_levels(const Semigroup& g, std::size_t limit,
                                                            int part = 0);

/// A leaf part prepared for per-pixel analysis.
struct PartMembers {
  FamilySpec spec;
  int index = 0;
  bool infinite = false;
  std::vector<Member> members;
  // Half-open member ranges analysed as consecutive windows: word-length
  // levels for semigroups, chunks of `window_len` otherwise.
  std::vector<std::pair<std::size_t, std::size_t>> windows;
};

/// Leaf parts with at most `limit` members each (deduplicated within the
/// part), windowed for the normality and escape tests.
std::vector<PartMembers> enumerate_for_analysis(const FamilySpec& spec, std::size_t limit,
                                                std::size_t window_len);

/// Members of `a` (first `limit`) whose fingerprint occurs among the first
/// `limit` members of `b`. The result is flagged as an infinite truncation
/// when both operands are infinite and the overlap is large (see README).
FiniteSet intersect_families(const FamilySpec& a, const FamilySpec& b, std::size_t limit);

}  // namespace fatoukit
