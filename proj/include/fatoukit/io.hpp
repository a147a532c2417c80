#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fatoukit/normality.hpp"
#include "fatoukit/window.hpp"

namespace fatoukit {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Label palette of the classification raster.
inline constexpr std::uint8_t kPgmJulia = 0;
inline constexpr std::uint8_t kPgmUndecided = 128;
inline constexpr std::uint8_t kPgmFatou = 255;
inline constexpr std::uint8_t kPgmMasked = 64;  // outside the disk
inline constexpr std::uint8_t kPgmMember = 255;

/// Binary P5 image with maxval 255, rows top to bottom.
std::string encode_pgm(const Grid<std::uint8_t>& g);
Grid<std::uint8_t> decode_pgm(const std::string& bytes);

void write_pgm(const std::string& path, const Grid<std::uint8_t>& g);
Grid<std::uint8_t> read_pgm(const std::string& path);

Grid<std::uint8_t> label_raster(const ClassificationMap& m);
Grid<std::uint8_t> member_raster(const Mask& set);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace fatoukit
