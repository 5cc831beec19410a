#pragma once

#include <array>
#include <cstdint>

namespace llf {

/// User parameters of the edge-aware remapping.
/// alpha shapes details (|i-g| <= sigma): alpha < 1 enhances, alpha > 1
/// smooths. beta scales edges (|i-g| > sigma): beta < 1 tone-maps,
/// beta > 1 inverse tone-maps. sigma is the detail/edge threshold in
/// normalized intensity units.
struct RemapParams {
  double alpha;
  double beta;
  double sigma;

  RemapParams(double alpha_, double beta_, double sigma_);
};

/// Point-wise remap of intensity i against anchor g.
/// Detail branch: g + sign(i-g) * sigma * (|i-g|/sigma)^alpha.
/// Edge branch:   g + sign(i-g) * (beta * (|i-g|-sigma) + sigma).
/// The two branches agree exactly at |i-g| == sigma. Output is not clamped;
/// signed pyramid arithmetic absorbs any overshoot.
double remap_pixel(double i, double g, const RemapParams& params);

/// Precomputed offset magnitudes indexed by the 8-bit difference |i-g|.
/// Entries at or below sigma_index carry the detail sub-expression, entries
/// above carry the edge sub-expression; the sign is applied at lookup. All
/// entries are non-negative Q8 values rounded to nearest.
struct RemapLut {
  std::array<int32_t, 256> table{};
  int sigma_index = 0;  // round(sigma * 255); the boundary index remaps as detail
  RemapParams params;
};

RemapLut build_lut(const RemapParams& params);

/// Table lookup plus one add: Q8(g/255) + sign(i-g) * table[|i-g|].
/// i and g are 8-bit intensities; the result is a signed Q8 intensity.
int32_t remap_lut_apply(int i, int g, const RemapLut& lut);

/// Q8 value of an 8-bit intensity: round(v * 256 / 255).
int32_t q8_of_byte(int v);

}  // namespace llf
