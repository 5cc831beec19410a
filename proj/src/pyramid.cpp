#include "llf/pyramid.hpp"

#include <algorithm>
#include <string>

#include "llf/errors.hpp"

namespace llf {

namespace {

int half_dim(int d) { return (d + 1) / 2; }

void check_upsample_target(int w, int h, int target_w, int target_h) {
  const bool ok_w = target_w == 2 * w - 1 || target_w == 2 * w;
  const bool ok_h = target_h == 2 * h - 1 || target_h == 2 * h;
  if (!ok_w || !ok_h) {
    throw ValidationError("upsample target " + std::to_string(target_w) + "x" +
                          std::to_string(target_h) + " does not match source " +
                          std::to_string(w) + "x" + std::to_string(h) +
                          " (expected 2d-1 or 2d per axis)");
  }
}

void check_depth(int w, int h, int n_levels) {
  if (n_levels < 1) throw ValidationError("pyramid depth must be at least 1");
  const int max_depth = max_pyramid_depth(w, h);
  if (n_levels > max_depth) {
    throw ValidationError("image " + std::to_string(w) + "x" + std::to_string(h) +
                          " supports a pyramid of at most " + std::to_string(max_depth) +
                          " levels, requested " + std::to_string(n_levels));
  }
}

// Gain-4 zero-insert tap sum at one output position. Taps reach source
// samples only where both padded coordinates are even; clamping happens in
// source coordinates, so edge replication matches what an infinite
// clamp-extended input would produce.
double upsample_tap_sum(const Plane& p, int x, int y, const Kernel3& k) {
  double acc = 0.0;
  for (int dy = -1; dy <= 1; ++dy) {
    const int v = y + dy;
    if (v & 1) continue;
    const int sy = std::min(v / 2, p.height - 1);
    for (int dx = -1; dx <= 1; ++dx) {
      const int u = x + dx;
      if (u & 1) continue;
      const int sx = std::min(u / 2, p.width - 1);
      acc += 4.0 * k.weights[dy + 1][dx + 1] * p.at(sx, sy);
    }
  }
  return acc;
}

// Fixed-point stage-1 column of the gain-4 upsample: the vertical [1,2,1]
// taps over the zero-inserted lattice are accumulated first and truncated by
// a single shift of s-2, so each column loses less than one LSB. Needs
// s >= 2. The 24-bit sample headroom absorbs the pre-shift accumulation.
int32_t upsample_stage1_q(const PlaneQ& p, int u, int y, int s) {
  if (u & 1) return 0;
  const int sx = std::min(u / 2, p.width - 1);
  int32_t acc = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    const int v = y + dy;
    if (v & 1) continue;
    const int sy = std::min(v / 2, p.height - 1);
    acc += p.at(sx, sy) << (dy == 0 ? 1 : 0);
  }
  return acc >> (s - 2);
}

template <typename P>
P decimate(const P& filtered) {
  P out(half_dim(filtered.width), half_dim(filtered.height));
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      out.at(x, y) = filtered.at(2 * x, 2 * y);
    }
  }
  return out;
}

void check_laplacian_chain(int n_levels, const std::vector<std::pair<int, int>>& dims) {
  for (int l = 0; l + 1 < n_levels; ++l) {
    if (dims[l + 1].first != half_dim(dims[l].first) ||
        dims[l + 1].second != half_dim(dims[l].second)) {
      throw ValidationError("pyramid dimension chain mismatch between level " +
                            std::to_string(l) + " and level " + std::to_string(l + 1));
    }
  }
}

}  // namespace

int max_pyramid_depth(int width, int height) {
  int depth = 1;
  int d = std::min(width, height);
  while (d >= 2) {
    d /= 2;
    ++depth;
  }
  return depth;
}

Plane downsample(const Plane& p, const Kernel3& k) {
  return decimate(conv3_ref(p, k));
}

Plane upsample(const Plane& p, int target_w, int target_h, const Kernel3& k) {
  check_upsample_target(p.width, p.height, target_w, target_h);
  Plane out(target_w, target_h);
  for (int y = 0; y < target_h; ++y) {
    for (int x = 0; x < target_w; ++x) {
      out.at(x, y) = upsample_tap_sum(p, x, y, k);
    }
  }
  return out;
}

double upsample_at(const Plane& p, int target_w, int target_h, int x, int y,
                   const Kernel3& k) {
  check_upsample_target(p.width, p.height, target_w, target_h);
  return upsample_tap_sum(p, x, y, k);
}

Pyramid gaussian_pyramid(const Plane& p, int n_levels, const Kernel3& k) {
  check_depth(p.width, p.height, n_levels);
  Pyramid pyr{PyramidKind::gaussian, {}};
  pyr.levels.reserve(n_levels);
  pyr.levels.push_back(p);
  for (int l = 1; l < n_levels; ++l) {
    pyr.levels.push_back(downsample(pyr.levels.back(), k));
  }
  return pyr;
}

Pyramid laplacian_pyramid(const Plane& p, int n_bands, const Kernel3& k) {
  Pyramid gauss = gaussian_pyramid(p, n_bands + 1, k);
  Pyramid pyr{PyramidKind::laplacian, {}};
  pyr.levels.reserve(n_bands + 1);
  for (int l = 0; l < n_bands; ++l) {
    const Plane& fine = gauss.levels[l];
    Plane band = upsample(gauss.levels[l + 1], fine.width, fine.height, k);
    for (size_t i = 0; i < band.samples.size(); ++i) {
      band.samples[i] = fine.samples[i] - band.samples[i];
    }
    pyr.levels.push_back(std::move(band));
  }
  pyr.levels.push_back(std::move(gauss.levels[n_bands]));
  return pyr;
}

Plane collapse(const Pyramid& pyr, const Kernel3& k) {
  if (pyr.kind != PyramidKind::laplacian) {
    throw ValidationError("collapse requires a Laplacian pyramid");
  }
  if (pyr.levels.empty()) throw ValidationError("collapse on empty pyramid");
  std::vector<std::pair<int, int>> dims;
  for (const Plane& lv : pyr.levels) dims.emplace_back(lv.width, lv.height);
  check_laplacian_chain(static_cast<int>(pyr.levels.size()), dims);

  Plane acc = pyr.levels.back();
  for (int l = static_cast<int>(pyr.levels.size()) - 2; l >= 0; --l) {
    const Plane& band = pyr.levels[l];
    Plane up = upsample(acc, band.width, band.height, k);
    for (size_t i = 0; i < up.samples.size(); ++i) {
      up.samples[i] += band.samples[i];
    }
    acc = std::move(up);
  }
  return acc;
}

PlaneQ downsample_q(const PlaneQ& p, int s) {
  return decimate(conv3_shift_add(p, s));
}

PlaneQ upsample_q(const PlaneQ& p, int target_w, int target_h, int s) {
  if (s < 2) throw ValidationError("fixed-point upsample needs shift >= 2");
  check_upsample_target(p.width, p.height, target_w, target_h);
  PlaneQ out(target_w, target_h);
  for (int y = 0; y < target_h; ++y) {
    for (int x = 0; x < target_w; ++x) {
      out.at(x, y) = upsample_stage1_q(p, x - 1, y, s) +
                     (upsample_stage1_q(p, x, y, s) << 1) +
                     upsample_stage1_q(p, x + 1, y, s);
    }
  }
  return out;
}

int32_t upsample_q_at(const PlaneQ& p, int target_w, int target_h, int x, int y, int s) {
  if (s < 2) throw ValidationError("fixed-point upsample needs shift >= 2");
  check_upsample_target(p.width, p.height, target_w, target_h);
  return upsample_stage1_q(p, x - 1, y, s) + (upsample_stage1_q(p, x, y, s) << 1) +
         upsample_stage1_q(p, x + 1, y, s);
}

PyramidQ gaussian_pyramid_q(const PlaneQ& p, int n_levels, int s) {
  check_depth(p.width, p.height, n_levels);
  PyramidQ pyr{PyramidKind::gaussian, {}};
  pyr.levels.reserve(n_levels);
  pyr.levels.push_back(p);
  for (int l = 1; l < n_levels; ++l) {
    pyr.levels.push_back(downsample_q(pyr.levels.back(), s));
  }
  return pyr;
}

PyramidQ laplacian_pyramid_q(const PlaneQ& p, int n_bands, int s) {
  PyramidQ gauss = gaussian_pyramid_q(p, n_bands + 1, s);
  PyramidQ pyr{PyramidKind::laplacian, {}};
  pyr.levels.reserve(n_bands + 1);
  for (int l = 0; l < n_bands; ++l) {
    const PlaneQ& fine = gauss.levels[l];
    PlaneQ band = upsample_q(gauss.levels[l + 1], fine.width, fine.height, s);
    for (size_t i = 0; i < band.samples.size(); ++i) {
      band.samples[i] = fine.samples[i] - band.samples[i];
    }
    pyr.levels.push_back(std::move(band));
  }
  pyr.levels.push_back(std::move(gauss.levels[n_bands]));
  return pyr;
}

PlaneQ collapse_q(const PyramidQ& pyr, int s) {
  if (pyr.kind != PyramidKind::laplacian) {
    throw ValidationError("collapse requires a Laplacian pyramid");
  }
  if (pyr.levels.empty()) throw ValidationError("collapse on empty pyramid");
  std::vector<std::pair<int, int>> dims;
  for (const PlaneQ& lv : pyr.levels) dims.emplace_back(lv.width, lv.height);
  check_laplacian_chain(static_cast<int>(pyr.levels.size()), dims);

  PlaneQ acc = pyr.levels.back();
  for (int l = static_cast<int>(pyr.levels.size()) - 2; l >= 0; --l) {
    const PlaneQ& band = pyr.levels[l];
    PlaneQ up = upsample_q(acc, band.width, band.height, s);
    for (size_t i = 0; i < up.samples.size(); ++i) {
      up.samples[i] += band.samples[i];
    }
    acc = std::move(up);
  }
  return acc;
}

}  // namespace llf
