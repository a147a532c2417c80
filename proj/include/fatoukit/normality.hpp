#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatoukit/family.hpp"
#include "fatoukit/member.hpp"
#include "fatoukit/window.hpp"

namespace fatoukit {

enum class Label : std::uint8_t { Fatou, Julia, Undecided };

const char* label_name(Label l);

struct NormalityParams {
  int n_max = 256;
  int window_len = 32;
  // Spherical-derivative level above which a growing pixel is Julia-like.
  // The score at a Julia point of a linear family is n_max itself, so the
  // level must sit well below n_max (see README, "Thresholds").
  double marty_threshold = 40.0;
  int growth_windows = 3;
  int neighborhood_radius_px = 1;
  // The last window maximum must exceed the first of the compared windows
  // by this factor; plain strict increase also holds for bounded families
  // that creep toward their limit.
  double growth_ratio = 1.05;
  int threads = 0;

  void validate() const;
};

/// Per-pixel classification; masked pixels (outside the disk) carry
/// domain = 0 and are excluded from every count.
struct ClassificationMap {
  Window window;
  Mask domain;
  Grid<Label> label;
  Grid<double> marty_score;
  Mask growing;
  Mask in_I;
  Mask in_U;
  Grid<double> escape_stat;
  std::vector<std::string> warnings;
};

/// |f'(z)| / (1 + |f(z)|^2); 0 once f overflows; nullopt at a pole.
std::optional<double> spherical_derivative(const Member& m, cd z);
std::optional<double> spherical_derivative(const EvalDual& d);

struct MartyScore {
  double score = 0.0;
  bool growing = false;
  std::vector<double> window_maxima;  // of the part that decided `growing`
};

/// Score of the pixel of side `pixel` centred at z, including its 3x3
/// neighbourhood (radius from p).
MartyScore marty_score(const FamilySpec& spec, cd z, const NormalityParams& p, double pixel = 4.0 / 256);

/// Labels, scores and growth flags for every in-domain pixel.
ClassificationMap classify_normality(const FamilySpec& spec, const Window& w, const NormalityParams& p);

}  // namespace fatoukit
