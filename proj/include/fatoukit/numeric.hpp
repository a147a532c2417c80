#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace fatoukit {

using cd = std::complex<double>;

// Plain complex product without the C99 Annex G inf/nan recovery; callers
// classify non-finite results themselves.
inline cd cmul(cd a, cd b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

inline cd cdiv(cd a, cd b) { return a / b; }

inline bool is_finite(cd v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// |v|^2 without the overflow protection of std::abs.
inline double norm2(cd v) { return v.real() * v.real() + v.imag() * v.imag(); }

// Integer power by repeated squaring; k < 0 inverts.
inline cd int_pow(cd base, long long k) {
  const bool invert = k < 0;
  unsigned long long e = invert ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  cd result{1.0, 0.0};
  cd b = base;
  while (e != 0) {
    if (e & 1ULL) result = cmul(result, b);
    e >>= 1;
    if (e != 0) b = cmul(b, b);
  }
  return invert ? cd{1.0, 0.0} / result : result;
}

// True when v is a real integer of modest size (used to pick integer powers).
inline bool as_small_integer(cd v, int& out) {
  if (v.imag() != 0.0) return false;
  const double r = v.real();
  if (!(std::abs(r) <= 1e6) || std::nearbyint(r) != r) return false;
  out = static_cast<int>(r);
  return true;
}

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace fatoukit
