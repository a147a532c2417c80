#pragma once

#include <string>
#include <vector>

#include "fatoukit/family.hpp"
#include "fatoukit/normality.hpp"
#include "fatoukit/window.hpp"

namespace fatoukit {

struct EscapeParams {
  int n_max = 256;
  double escape_radius = 1e6;
  int tail_window = 32;
  int u_hits = 4;
  // Trend rule for escape that is too slow to pass R within n_max: the
  // last window minimum must exceed 1 and grow by this factor over the
  // last three windows (see README, "Escape tests").
  double trend_ratio = 1.25;
  int threads = 0;

  void validate() const;
};

/// Magnitudes along the canonical enumeration of each leaf part. Escaped
/// values are +inf; poles are NaN and ignored by the window statistics.
struct EscapeProfile {
  struct Part {
    int index = 0;
    bool infinite = false;
    std::vector<double> magnitudes;
    std::vector<double> window_min;
    std::vector<double> window_max;
  };
  std::vector<Part> parts;
};

EscapeProfile escape_profile(const FamilySpec& spec, cd z, const EscapeParams& p);

struct PartVerdict {
  bool in_I = false;
  bool in_U = false;
};

/// Decision for one infinite part from its window statistics.
PartVerdict decide_part(const double* window_min, const double* window_max, int windows, const EscapeParams& p);

struct EscapeVerdict {
  bool in_I = false;
  bool in_U = false;
  double stat = 0.0;  // log10 of the smallest last-window minimum
};

EscapeVerdict escape_verdict(const EscapeProfile& profile, const EscapeParams& p);

struct EscapeMaps {
  Mask in_I;
  Mask in_U;
  Grid<double> stat;
  bool vacuous = false;  // no infinite part: I is all-true by convention
  std::vector<std::string> warnings;
};

EscapeMaps classify_escape(const FamilySpec& spec, const Window& w, const EscapeParams& p);

Mask classify_I(const FamilySpec& spec, const Window& w, const EscapeParams& p);
Mask classify_U(const FamilySpec& spec, const Window& w, const EscapeParams& p);

/// Copies the escape bits and warnings into a classification map.
void merge_escape(ClassificationMap& map, const EscapeMaps& e);

}  // namespace fatoukit
