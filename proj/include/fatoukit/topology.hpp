#pragma once

#include <cstddef>
#include <vector>

#include "fatoukit/normality.hpp"
#include "fatoukit/window.hpp"

namespace fatoukit {

struct LabeledComponents {
  struct Box {
    int i0 = 0, j0 = 0, i1 = 0, j1 = 0;  // inclusive
  };
  Grid<int> id;  // 0 = background, else 1..count
  int count = 0;
  int connectivity = 8;
  std::vector<std::size_t> sizes;  // index id - 1
  std::vector<Box> boxes;
};

/// Two-pass union-find labeling of the set pixels; ids follow the scan
/// order of each component's first pixel.
LabeledComponents label_components(const Mask& mask, int connectivity);

/// Inner boundary relative to the domain: component pixels with an
/// 8-neighbour that is in the domain but outside the component.
Mask boundary_of(const LabeledComponents& comp, int id, const Mask& domain);

/// True iff the set pixels form one component; an empty set counts as
/// connected and sets *empty.
bool is_connected(const Mask& pixels, int connectivity, bool* empty = nullptr);

/// True when the domain is one 4-component without holes.
bool simply_connected(const Mask& domain);

/// Euler number of the 8-connected foreground from 2x2 bit-quad counts.
int euler_number_bitquad(const Mask& mask);

struct ComponentBoundary {
  int id = 0;
  std::size_t pixels = 0;
  std::size_t boundary_pixels = 0;
  bool connected = true;
};

struct ConnectednessReport {
  std::size_t julia_pixels = 0;  // JULIA plus UNDECIDED
  int julia_components = 0;
  bool julia_connected = true;
  bool julia_empty = false;
  std::vector<ComponentBoundary> fatou;
  bool all_boundaries_connected = true;
  bool consistent = true;  // julia_connected == all_boundaries_connected
  bool simply_connected_domain = true;
};

/// J folds in UNDECIDED pixels; Fatou components use 4-connectivity and
/// J and boundaries 8-connectivity.
ConnectednessReport connectedness_report(const ClassificationMap& cls);

Mask julia_mask(const ClassificationMap& cls);
Mask fatou_mask(const ClassificationMap& cls);

}  // namespace fatoukit
