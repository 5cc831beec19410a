#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace llf {

/// One image channel as a row-major grid of normalized intensities.
/// Samples are nominally in [0,1] but band-pass coefficients are signed and
/// may leave that range; clamping happens only at 8-bit export.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> samples;

  Plane() = default;
  Plane(int w, int h, double fill = 0.0);

  double& at(int x, int y) { return samples[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const { return samples[static_cast<size_t>(y) * width + x]; }

  double at_clamped(int x, int y) const {
    x = std::clamp(x, 0, width - 1);
    y = std::clamp(y, 0, height - 1);
    return at(x, y);
  }

  bool same_dims(const Plane& other) const {
    return width == other.width && height == other.height;
  }
};

/// Fixed-point channel: value = sample / 2^frac_bits in normalized units.
/// Samples stay within 24 signed bits for every operation in this library,
/// which leaves enough headroom that shift-add convolution never overflows.
struct PlaneQ {
  static constexpr int frac_bits = 8;
  static constexpr int32_t one = 1 << frac_bits;

  int width = 0;
  int height = 0;
  std::vector<int32_t> samples;

  PlaneQ() = default;
  PlaneQ(int w, int h, int32_t fill = 0);

  int32_t& at(int x, int y) { return samples[static_cast<size_t>(y) * width + x]; }
  int32_t at(int x, int y) const { return samples[static_cast<size_t>(y) * width + x]; }

  int32_t at_clamped(int x, int y) const {
    x = std::clamp(x, 0, width - 1);
    y = std::clamp(y, 0, height - 1);
    return at(x, y);
  }

  bool same_dims(const PlaneQ& other) const {
    return width == other.width && height == other.height;
  }
};

/// Round-to-nearest quantization to Q8. Exact inverse of dequantize for
/// in-range integers.
PlaneQ quantize(const Plane& p);
Plane dequantize(const PlaneQ& p);

}  // namespace llf
