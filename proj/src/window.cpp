#include "fatoukit/window.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fatoukit {

std::optional<std::pair<int, int>> Window::pixel_of(cd z) const {
  const double fi = (z.real() - re_min) / dx();
  const double fj = (im_max - z.imag()) / dy();
  // range check before the cast: far points overflow int
  if (!(fi >= 0.0 && fj >= 0.0 && fi <= width && fj <= height)) return std::nullopt;
  const int i = static_cast<int>(std::floor(fi));
  const int j = static_cast<int>(std::floor(fj));
  // the far frame belongs to the last cell
  return std::make_pair(std::min(i, width - 1), std::min(j, height - 1));
}

bool Window::in_domain(cd z) const {
  if (z.real() < re_min || z.real() > re_max || z.imag() < im_min || z.imag() > im_max) return false;
  if (disk) return std::abs(z - disk->center) < disk->radius;
  return true;
}

bool Window::in_domain(int i, int j) const {
  if (i < 0 || j < 0 || i >= width || j >= height) return false;
  if (!disk) return true;
  return std::abs(pixel_center(i, j) - disk->center) < disk->radius;
}

void Window::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max)) throw std::invalid_argument("window has empty extent");
  if (!std::isfinite(re_min) || !std::isfinite(re_max) || !std::isfinite(im_min) || !std::isfinite(im_max)) {
    throw std::invalid_argument("window bounds must be finite");
  }
  if (width < 1 || height < 1) throw std::invalid_argument("grid must be at least 1x1");
  if (disk && !(disk->radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
}

Mask domain_mask(const Window& w) {
  Mask m(w.width, w.height, 0);
  for (int j = 0; j < w.height; ++j) {
    for (int i = 0; i < w.width; ++i) m.at(i, j) = w.in_domain(i, j) ? 1 : 0;
  }
  return m;
}

Mask dilate(const Mask& m, int r) {
  // separable max filter
  Mask rows(m.width, m.height, 0);
  for (int j = 0; j < m.height; ++j) {
    for (int i = 0; i < m.width; ++i) {
      std::uint8_t v = 0;
      for (int d = -r; d <= r && !v; ++d) {
        if (m.inside(i + d, j)) v = m.at(i + d, j) ? 1 : 0;
      }
      rows.at(i, j) = v;
    }
  }
  Mask out(m.width, m.height, 0);
  for (int j = 0; j < m.height; ++j) {
    for (int i = 0; i < m.width; ++i) {
      std::uint8_t v = 0;
      for (int d = -r; d <= r && !v; ++d) {
        if (rows.inside(i, j + d)) v = rows.at(i, j + d);
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

Mask mask_edges(const Mask& m) {
  Mask out(m.width, m.height, 0);
  for (int j = 0; j < m.height; ++j) {
    for (int i = 0; i < m.width; ++i) {
      const bool self = m.at(i, j) != 0;
      for (int dj = -1; dj <= 1 && !out.at(i, j); ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (m.inside(i + di, j + dj) && (m.at(i + di, j + dj) != 0) != self) {
            out.at(i, j) = 1;
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace fatoukit
