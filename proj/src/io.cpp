#include "fatoukit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace fatoukit {

std::string encode_pgm(const Grid<std::uint8_t>& g) {
  std::string out = "P5\n" + std::to_string(g.width) + " " + std::to_string(g.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(g.data.data()), g.data.size());
  return out;
}

Grid<std::uint8_t> decode_pgm(const std::string& bytes) {
  std::size_t pos = 0;
  // Header tokens are separated by whitespace; '#' starts a comment line.
  auto token = [&]() {
    for (;;) {
      while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
      if (pos < bytes.size() && bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    return bytes.substr(start, pos - start);
  };
  if (token() != "P5") throw IoError("not a binary PGM (P5)");
  int w = 0, h = 0, maxval = 0;
  try {
    w = std::stoi(token());
    h = std::stoi(token());
    maxval = std::stoi(token());
  } catch (const std::exception&) {
    throw IoError("malformed PGM header");
  }
  if (w < 1 || h < 1 || maxval != 255) throw IoError("unsupported PGM geometry or maxval");
  ++pos;  // single whitespace before the raster
  const std::size_t n = static_cast<std::size_t>(w) * h;
  if (bytes.size() < pos + n) throw IoError("truncated PGM raster");
  Grid<std::uint8_t> g(w, h);
  std::copy(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.begin() + static_cast<std::ptrdiff_t>(pos + n),
            g.data.begin());
  return g;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw IoError("write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_pgm(const std::string& path, const Grid<std::uint8_t>& g) { write_text(path, encode_pgm(g)); }

Grid<std::uint8_t> read_pgm(const std::string& path) { return decode_pgm(read_text(path)); }

Grid<std::uint8_t> label_raster(const ClassificationMap& m) {
  Grid<std::uint8_t> g(m.label.width, m.label.height, kPgmMasked);
  for (std::size_t k = 0; k < g.data.size(); ++k) {
    if (!m.domain.data[k]) continue;
    switch (m.label.data[k]) {
      case Label::Julia: g.data[k] = kPgmJulia; break;
      case Label::Undecided: g.data[k] = kPgmUndecided; break;
      case Label::Fatou: g.data[k] = kPgmFatou; break;
    }
  }
  return g;
}

Grid<std::uint8_t> member_raster(const Mask& set) {
  Grid<std::uint8_t> g(set.width, set.height, 0);
  for (std::size_t k = 0; k < g.data.size(); ++k) g.data[k] = set.data[k] ? kPgmMember : 0;
  return g;
}

}  // namespace fatoukit
