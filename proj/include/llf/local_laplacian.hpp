#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "llf/plane.hpp"
#include "llf/pyramid.hpp"
#include "llf/remap.hpp"

namespace llf {

enum class Arithmetic { reference, fixed_point };

/// One channel as plain 8-bit intensities; the accelerator path remaps raw
/// bytes through the lookup table.
struct ChannelU8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> samples;
};

/// Recover the 8-bit channel a normalized plane was loaded from.
ChannelU8 to_bytes(const Plane& p);

/// Geometry of the input region that feeds one output coefficient.
///
/// The coefficient for pyramid position (x,y) at level `level` is computed
/// from a square window of nominal half-width 2^(level+2)-1 around the
/// level-0 center (x<<level, y<<level). The window's low corner is then
/// pushed outward to a multiple of 2^(level+1): the window pyramid decimates
/// even indices of its own grid, so its level lattices coincide with the
/// full-image lattices only when the origin is aligned to the coarsest level
/// used (level+1). With that alignment the center always lands on the
/// window's level grid at ((center - origin) >> level), and the half-width
/// exceeds the dependency radius 3*2^level - 1 of a band coefficient, so
/// interior coefficients match the full-image computation exactly.
struct SubImageSpec {
  int level = 0;
  int x = 0;
  int y = 0;
  int center_x = 0;  // level-0 coordinates
  int center_y = 0;
  int half_width = 0;
  int x0 = 0, y0 = 0;  // inclusive clipped bounds, x0/y0 aligned
  int x1 = 0, y1 = 0;

  /// half_width_override widens the nominal window (tests use it to show
  /// footprint sufficiency); pass -1 for the default 2^(level+2)-1.
  static SubImageSpec make(int level, int x, int y, int image_w, int image_h,
                           int half_width_override = -1);

  int width() const { return x1 - x0 + 1; }
  int height() const { return y1 - y0 + 1; }
  int coeff_x() const { return (center_x - x0) >> level; }
  int coeff_y() const { return (center_y - y0) >> level; }
};

/// Configuration of one Level Processing Unit: which output band it
/// produces and how many filter+downsample passes that takes (level + 1).
struct LpuConfig {
  int level = 0;
  int iterations = 1;
  Arithmetic arithmetic = Arithmetic::fixed_point;

  static LpuConfig make(int level, Arithmetic mode);
};

/// One edge-aware Laplacian coefficient, reference arithmetic: remap the
/// sub-image against anchor g, build its Laplacian pyramid to depth
/// level+1, and read band `level` at the center position.
double llf_coefficient(const Plane& image, const SubImageSpec& spec, double g,
                       const RemapParams& params);

/// Fixed-point twin of llf_coefficient: LUT remap of the raw bytes against
/// the 8-bit anchor, shift-add pyramid, Q8 result.
int32_t llf_coefficient_fixed(const ChannelU8& channel, const SubImageSpec& spec,
                              int g8, const RemapLut& lut);

/// Wall-clock breakdown of one filter invocation, accumulated across
/// channels.
struct StageTimings {
  double host_pyramid_ms = 0.0;
  double bands_ms = 0.0;
  double collapse_ms = 0.0;
};

/// Full reference-path filter for one channel: every band coefficient comes
/// from its own remapped sub-image pyramid, the residual is the plain
/// Gaussian level, and the assembled pyramid is collapsed.
Plane llf_reference(const Plane& image, const RemapParams& params, int n_bands,
                    int threads = 1, StageTimings* timings = nullptr);

/// One output band computed the way the hardware unit does it: per pixel,
/// remap -> (filter+downsample)^iterations -> single-point upsample ->
/// subtract. Fixed-point only; bit-identical to llf_coefficient_fixed at
/// every pixel and for every thread count.
PlaneQ run_lpu(const Plane& channel, const Plane& gaussian_level, const LpuConfig& cfg,
               const RemapLut& lut, int threads = 1);

/// Behavioral model of the accelerator: per channel the host builds the
/// Gaussian pyramid of the 8-bit image (exact arithmetic, quantized to Q8
/// anchors for the remap units), nine logical LPUs (3 channels x 3 levels)
/// produce the output bands in truncating fixed point, the residual is the
/// fixed-point G_3 of the same truncating chain the bands subtract against,
/// and the host collapses. Values stay unclamped until 8-bit export.
std::array<Plane, 3> llf_accel_model(const std::array<Plane, 3>& rgb,
                                     const RemapParams& params, int threads = 1,
                                     StageTimings* timings = nullptr);

}  // namespace llf
