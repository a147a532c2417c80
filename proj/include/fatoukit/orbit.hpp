#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatoukit/escape.hpp"
#include "fatoukit/family.hpp"
#include "fatoukit/member.hpp"
#include "fatoukit/window.hpp"

namespace fatoukit {

struct OrbitLimits {
  int n_pre = 64;
  int depth = 3;
  double dedup_tol = 1e-9;
  std::size_t max_points = 10000;

  void validate() const;
};

class OrbitError : public std::runtime_error {
 public:
  enum class Code { NotSupported, Precondition };
  OrbitError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Points kept pairwise farther apart than `tol`, in insertion order, each
/// tagged with the member that produced it (empty for seeds).
class PointSet {
 public:
  explicit PointSet(double tol = 1e-9) : tol_(tol) {}

  // False when a point within tol is already present.
  bool insert(cd z, std::string provenance = {});
  bool contains(cd z) const;

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<cd>& points() const { return points_; }
  const std::vector<std::string>& provenance() const { return provenance_; }

 private:
  double tol_;
  std::vector<cd> points_;
  std::vector<std::string> provenance_;
};

enum class PreimageStatus { Ok, NotSupported, NoSolution };

struct Preimages {
  PreimageStatus status = PreimageStatus::Ok;
  std::vector<cd> roots;  // distinct up to dedup_tol
};

/// Solutions of m(z) = w for polynomial members.
Preimages preimages(const Member& m, cd w, double dedup_tol = 1e-9);

/// Breadth-first backward orbit of w under the first n_pre polynomial
/// members, level 0 being w itself. Throws OrbitError(NotSupported) when
/// none of the members is polynomial.
PointSet backward_orbit(const FamilySpec& spec, cd w, const OrbitLimits& lim);

struct ExceptionalCandidates {
  std::vector<cd> candidates;
  std::vector<std::size_t> preimage_counts;  // per seed
  bool heuristic = true;                     // always set
};

/// Seeds whose preimage set under the first n_pre polynomial members gains
/// no point over the second half of the scan and stays within `bound`.
ExceptionalCandidates exceptional_candidates(const FamilySpec& spec, const std::vector<cd>& seeds,
                                             const OrbitLimits& lim, std::size_t bound = 4);

struct InvarianceReport {
  bool supported = true;
  std::string notice;
  std::size_t sampled = 0;       // in-set pixels used
  std::size_t images = 0;        // in-window images or preimages checked
  std::size_t out_of_window = 0;
  std::size_t violations = 0;

  double fraction() const { return images == 0 ? 0.0 : static_cast<double>(violations) / images; }
};

/// Every in-window preimage of a sampled in-set pixel under the first
/// n_pre polynomial members must fall within tol_px of the set.
InvarianceReport check_backward_invariance(const FamilySpec& spec, const Window& w, const Mask& member_set,
                                           const OrbitLimits& lim, std::size_t samples = 500, int tol_px = 2);

/// Every in-window image f(z) of a sampled in-set pixel under the first
/// n_pre members must fall within tol_px of the set.
InvarianceReport check_forward_invariance(const FamilySpec& spec, const Window& w, const Mask& member_set,
                                          std::size_t samples = 500, int n_pre = 64, int tol_px = 2);

/// 1-based index of the first generator f_i with f_i(z) in U of the
/// semigroup truncated at word length L; nullopt means none was found.
/// Throws OrbitError(Precondition) when z itself is not in U.
std::optional<int> check_generator_escape(const std::vector<Expr>& generators, cd z, const EscapeParams& p, int L = 5);

/// Up to `count` in-set pixels spread evenly over the row-major order.
std::vector<std::pair<int, int>> sample_pixels(const Mask& set, std::size_t count);

}  // namespace fatoukit
