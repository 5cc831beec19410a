#pragma once

#include <vector>

#include "llf/convolution.hpp"
#include "llf/kernel.hpp"
#include "llf/plane.hpp"

namespace llf {

enum class PyramidKind { gaussian, laplacian };

/// Ordered list of levels. Level l+1 is ceil(w_l/2) x ceil(h_l/2).
/// A Laplacian pyramid with n band levels stores n+1 planes: the bands
/// followed by the low-pass residual.
struct Pyramid {
  PyramidKind kind = PyramidKind::gaussian;
  std::vector<Plane> levels;
};

struct PyramidQ {
  PyramidKind kind = PyramidKind::gaussian;
  std::vector<PlaneQ> levels;
};

/// Largest feasible pyramid depth for the given dimensions
/// (min(w,h) >= 2^(depth-1)).
int max_pyramid_depth(int width, int height);

/// Smooth with the 3x3 kernel, then keep even-indexed samples.
/// Output dims are ceil(w/2) x ceil(h/2).
Plane downsample(const Plane& p, const Kernel3& k = Kernel3());

/// Zero-insert onto the target grid (source sample (x,y) lands at (2x,2y)),
/// then convolve with 4*kernel; the gain compensates the 3/4 zero density so
/// every output parity class sums its weights to one. Border taps clamp in
/// source coordinates, which keeps constants constant all the way to the
/// edges. target dims must be 2w-1 or 2w (and likewise for height) so that
/// either parity of a finer level can be reconstructed.
Plane upsample(const Plane& p, int target_w, int target_h, const Kernel3& k = Kernel3());

Pyramid gaussian_pyramid(const Plane& p, int n_levels, const Kernel3& k = Kernel3());

/// Band l is G_l minus the upsampled G_{l+1}; the last entry is the
/// residual G_{n_bands}.
Pyramid laplacian_pyramid(const Plane& p, int n_bands, const Kernel3& k = Kernel3());

/// Inverse of laplacian_pyramid: starting from the residual, repeatedly
/// upsample and add the next finer band.
Plane collapse(const Pyramid& pyr, const Kernel3& k = Kernel3());

// Fixed-point variants. Downsampling filters through the shift-add engine;
// upsampling applies the gain-4 kernel as shifts (s-2, s-3, s-2). Each
// filtered stage stays within the 12 LSB shift-add error bound of its exact
// counterpart, and collapse_q inverts laplacian_pyramid_q bit-exactly
// because the subtracted and re-added upsample terms are identical integers.
PlaneQ downsample_q(const PlaneQ& p, int s = 4);
PlaneQ upsample_q(const PlaneQ& p, int target_w, int target_h, int s = 4);
PyramidQ gaussian_pyramid_q(const PlaneQ& p, int n_levels, int s = 4);
PyramidQ laplacian_pyramid_q(const PlaneQ& p, int n_bands, int s = 4);
PlaneQ collapse_q(const PyramidQ& pyr, int s = 4);

/// Single output sample of upsample(p, target_w, target_h); shares the tap
/// walk with the full-plane version so both produce identical bits.
double upsample_at(const Plane& p, int target_w, int target_h, int x, int y,
                   const Kernel3& k = Kernel3());
int32_t upsample_q_at(const PlaneQ& p, int target_w, int target_h, int x, int y, int s = 4);

}  // namespace llf
