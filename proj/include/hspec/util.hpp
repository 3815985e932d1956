#pragma once

#include <cmath>
#include <random>
#include <span>
#include <string>

namespace hspec {

/// Format with 12 significant digits, trailing zeros kept ("3.00000000000").
std::string fmt12(double v);

/// Round to 12 significant decimal digits. Keeps JSON payloads stable under
/// reformatting without carrying formatter state around.
double round12(double v);

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits of the engine. The engine
/// itself is fully specified by the standard, so draws are reproducible
/// across platforms (std::uniform_real_distribution is not).
inline double canonical_u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// x^p for small nonnegative integer p, by squaring. ipow(0, 0) == 1.
inline double ipow(double x, int p) {
  double r = 1.0;
  double b = x;
  for (int e = p; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) {
  return std::sqrt(dot(a, a));
}

}  // namespace detail
}  // namespace hspec
