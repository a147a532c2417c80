#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fatoukit/numeric.hpp"

namespace fatoukit {

struct Disk {
  cd center;
  double radius = 1.0;
};

/// Rectangle [re_min, re_max] x [im_min, im_max] cut into width x height
/// cells. Pixel (i, j) counts columns from re_min and rows from im_max, so
/// row 0 is the top of the image. An optional disk restricts the domain.
struct Window {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;
  int width = 256;
  int height = 256;
  std::optional<Disk> disk;

  double dx() const { return (re_max - re_min) / width; }
  double dy() const { return (im_max - im_min) / height; }

  cd pixel_center(int i, int j) const {
    return {re_min + (i + 0.5) * dx(), im_max - (j + 0.5) * dy()};
  }
  // Cell corners form a (width+1) x (height+1) lattice.
  cd corner(int i, int j) const { return {re_min + i * dx(), im_max - j * dy()}; }

  // Cell containing z (points on a cell edge go right/down); nullopt outside.
  std::optional<std::pair<int, int>> pixel_of(cd z) const;

  bool in_domain(int i, int j) const;
  bool in_domain(cd z) const;

  std::size_t size() const { return static_cast<std::size_t>(width) * height; }

  // Throws std::invalid_argument on degenerate geometry.
  void validate() const;
};

template <class T>
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int w, int h, T fill = T{}) : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  T& at(int i, int j) { return data[static_cast<std::size_t>(j) * width + i]; }
  const T& at(int i, int j) const { return data[static_cast<std::size_t>(j) * width + i]; }
  bool inside(int i, int j) const { return i >= 0 && j >= 0 && i < width && j < height; }
  friend bool operator==(const Grid&, const Grid&) = default;
};

using Mask = Grid<std::uint8_t>;

Mask domain_mask(const Window& w);

// Pixels within Chebyshev distance r of a set pixel.
Mask dilate(const Mask& m, int r);

// Pixels whose 8-neighborhood contains both set and unset pixels.
Mask mask_edges(const Mask& m);

}  // namespace fatoukit
