#include "llf/local_laplacian.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include "llf/errors.hpp"
#include "llf/parallel.hpp"

namespace llf {

namespace {

class StageClock {
 public:
  void restart() { start_ = std::chrono::steady_clock::now(); }
  void add_to(double& accumulator) const {
    accumulator += std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int ceil_half(int d) { return (d + 1) / 2; }

int level_dim(int d, int level) {
  for (int j = 0; j < level; ++j) d = ceil_half(d);
  return d;
}

int byte_of(double v) {
  const long b = std::lround(v * 255.0);
  return static_cast<int>(std::clamp(b, 0L, 255L));
}

Plane extract_remapped(const Plane& image, const SubImageSpec& spec, double g,
                       const RemapParams& params) {
  Plane sub(spec.width(), spec.height());
  for (int y = 0; y < sub.height; ++y) {
    for (int x = 0; x < sub.width; ++x) {
      sub.at(x, y) = remap_pixel(image.at(spec.x0 + x, spec.y0 + y), g, params);
    }
  }
  return sub;
}

PlaneQ extract_remapped_fixed(const ChannelU8& channel, const SubImageSpec& spec, int g8,
                              const RemapLut& lut) {
  PlaneQ sub(spec.width(), spec.height());
  for (int y = 0; y < sub.height; ++y) {
    for (int x = 0; x < sub.width; ++x) {
      const uint8_t i =
          channel.samples[static_cast<size_t>(spec.y0 + y) * channel.width + spec.x0 + x];
      sub.at(x, y) = remap_lut_apply(i, g8, lut);
    }
  }
  return sub;
}

void check_coeff_position(const SubImageSpec& spec, int grid_w, int grid_h) {
  const int lx = spec.coeff_x();
  const int ly = spec.coeff_y();
  if (lx < 0 || ly < 0 || lx >= grid_w || ly >= grid_h) {
    throw InternalError("sub-image level grid does not contain the target coefficient (level " +
                        std::to_string(spec.level) + ", position " + std::to_string(spec.x) +
                        "," + std::to_string(spec.y) + ")");
  }
}

// Band coefficient via the direct chain: the sub-image's Gaussian level,
// minus the single upsampled sample of the next coarser level.
double reference_coefficient_fast(const Plane& image, const SubImageSpec& spec, double g,
                                  const RemapParams& params, const Kernel3& k) {
  Plane fine = extract_remapped(image, spec, g, params);
  for (int j = 0; j < spec.level; ++j) fine = downsample(fine, k);
  check_coeff_position(spec, fine.width, fine.height);
  const Plane coarse = downsample(fine, k);
  return fine.at(spec.coeff_x(), spec.coeff_y()) -
         upsample_at(coarse, fine.width, fine.height, spec.coeff_x(), spec.coeff_y(), k);
}

int32_t fixed_coefficient_fast(const ChannelU8& channel, const SubImageSpec& spec, int g8,
                               const RemapLut& lut) {
  PlaneQ fine = extract_remapped_fixed(channel, spec, g8, lut);
  for (int j = 0; j < spec.level; ++j) fine = downsample_q(fine);
  check_coeff_position(spec, fine.width, fine.height);
  const PlaneQ coarse = downsample_q(fine);
  return fine.at(spec.coeff_x(), spec.coeff_y()) -
         upsample_q_at(coarse, fine.width, fine.height, spec.coeff_x(), spec.coeff_y());
}

// anchors holds the 8-bit Gaussian level the remap units index the LUT
// with; one rounding straight from the host pyramid.
PlaneQ run_lpu_q(const ChannelU8& channel, const ChannelU8& anchors, int level,
                 const RemapLut& lut, int threads) {
  PlaneQ band(anchors.width, anchors.height);
  parallel_for(0, band.height, threads, [&](int y_begin, int y_end) {
    for (int y = y_begin; y < y_end; ++y) {
      for (int x = 0; x < band.width; ++x) {
        const SubImageSpec spec = SubImageSpec::make(level, x, y, channel.width, channel.height);
        const int g8 = anchors.samples[static_cast<size_t>(y) * anchors.width + x];
        band.at(x, y) = fixed_coefficient_fast(channel, spec, g8, lut);
      }
    }
  });
  return band;
}

}  // namespace

ChannelU8 to_bytes(const Plane& p) {
  ChannelU8 ch{p.width, p.height, {}};
  ch.samples.resize(p.samples.size());
  for (size_t i = 0; i < p.samples.size(); ++i) {
    ch.samples[i] = static_cast<uint8_t>(byte_of(p.samples[i]));
  }
  return ch;
}

SubImageSpec SubImageSpec::make(int level, int x, int y, int image_w, int image_h,
                                int half_width_override) {
  if (level < 0) throw ValidationError("pyramid level must be non-negative");
  SubImageSpec spec;
  spec.level = level;
  spec.x = x;
  spec.y = y;
  spec.center_x = x << level;
  spec.center_y = y << level;
  if (x < 0 || y < 0 || spec.center_x >= image_w || spec.center_y >= image_h) {
    throw ValidationError("pyramid position outside the image");
  }
  spec.half_width = half_width_override > 0 ? half_width_override : (1 << (level + 2)) - 1;

  // Low corner pushed outward to the alignment grid; see the header note.
  const int align = 1 << (level + 1);
  const int lo_x = spec.center_x - spec.half_width;
  const int lo_y = spec.center_y - spec.half_width;
  spec.x0 = lo_x <= 0 ? 0 : (lo_x / align) * align;
  spec.y0 = lo_y <= 0 ? 0 : (lo_y / align) * align;
  spec.x1 = std::min(image_w - 1, spec.center_x + spec.half_width);
  spec.y1 = std::min(image_h - 1, spec.center_y + spec.half_width);
  return spec;
}

LpuConfig LpuConfig::make(int level, Arithmetic mode) {
  if (level < 0 || level > 2) {
    throw ValidationError("LPU level must be 0, 1 or 2, got " + std::to_string(level));
  }
  return LpuConfig{level, level + 1, mode};
}

double llf_coefficient(const Plane& image, const SubImageSpec& spec, double g,
                       const RemapParams& params) {
  const Kernel3 k;
  const Plane sub = extract_remapped(image, spec, g, params);
  const Pyramid lap = laplacian_pyramid(sub, spec.level + 1, k);
  const Plane& band = lap.levels[spec.level];
  check_coeff_position(spec, band.width, band.height);
  return band.at(spec.coeff_x(), spec.coeff_y());
}

int32_t llf_coefficient_fixed(const ChannelU8& channel, const SubImageSpec& spec, int g8,
                              const RemapLut& lut) {
  const PlaneQ sub = extract_remapped_fixed(channel, spec, g8, lut);
  const PyramidQ lap = laplacian_pyramid_q(sub, spec.level + 1);
  const PlaneQ& band = lap.levels[spec.level];
  check_coeff_position(spec, band.width, band.height);
  return band.at(spec.coeff_x(), spec.coeff_y());
}

Plane llf_reference(const Plane& image, const RemapParams& params, int n_bands, int threads,
                    StageTimings* timings) {
  const Kernel3 k;
  StageTimings local;
  StageClock clock;
  Pyramid gauss = gaussian_pyramid(image, n_bands + 1, k);
  clock.add_to(local.host_pyramid_ms);

  clock.restart();
  Pyramid out{PyramidKind::laplacian, {}};
  out.levels.resize(n_bands + 1);
  for (int l = 0; l < n_bands; ++l) {
    const Plane& gl = gauss.levels[l];
    Plane band(gl.width, gl.height);
    parallel_for(0, gl.height, threads, [&](int y_begin, int y_end) {
      for (int y = y_begin; y < y_end; ++y) {
        for (int x = 0; x < gl.width; ++x) {
          const SubImageSpec spec = SubImageSpec::make(l, x, y, image.width, image.height);
          band.at(x, y) = reference_coefficient_fast(image, spec, gl.at(x, y), params, k);
        }
      }
    });
    out.levels[l] = std::move(band);
  }
  out.levels[n_bands] = std::move(gauss.levels[n_bands]);
  clock.add_to(local.bands_ms);

  clock.restart();
  Plane result = collapse(out, k);
  clock.add_to(local.collapse_ms);
  if (timings != nullptr) {
    timings->host_pyramid_ms += local.host_pyramid_ms;
    timings->bands_ms += local.bands_ms;
    timings->collapse_ms += local.collapse_ms;
  }
  return result;
}

PlaneQ run_lpu(const Plane& channel, const Plane& gaussian_level, const LpuConfig& cfg,
               const RemapLut& lut, int threads) {
  if (cfg.arithmetic != Arithmetic::fixed_point) {
    throw ValidationError("run_lpu models the fixed-point unit; use llf_reference for the "
                          "reference path");
  }
  if (cfg.iterations != cfg.level + 1) {
    throw ValidationError("LPU iteration count must be level + 1");
  }
  if (gaussian_level.width != level_dim(channel.width, cfg.level) ||
      gaussian_level.height != level_dim(channel.height, cfg.level)) {
    throw ValidationError("gaussian_level dimensions do not match the configured level");
  }
  return run_lpu_q(to_bytes(channel), to_bytes(gaussian_level), cfg.level, lut, threads);
}

std::array<Plane, 3> llf_accel_model(const std::array<Plane, 3>& rgb, const RemapParams& params,
                                     int threads, StageTimings* timings) {
  constexpr int n_bands = 3;
  const RemapLut lut = build_lut(params);
  StageTimings local;
  std::array<Plane, 3> out;
  for (int c = 0; c < 3; ++c) {
    if (!rgb[c].same_dims(rgb[0])) {
      throw ValidationError("channel dimensions differ");
    }
    StageClock clock;
    const ChannelU8 bytes = to_bytes(rgb[c]);
    Plane host(rgb[c].width, rgb[c].height);
    for (size_t i = 0; i < host.samples.size(); ++i) host.samples[i] = bytes.samples[i] / 255.0;
    // Anchor pyramid: exact host arithmetic, rounded to 8 bits per level.
    // Feeding the LPUs anchors from the truncating chain instead would make
    // the anchor drift below the local mean and remap would see phantom
    // detail on flat regions.
    const Pyramid anchor_gauss = gaussian_pyramid(host, n_bands + 1);
    // Residual chain in LPU arithmetic: the collapse then re-adds exactly
    // the upsample terms the band construction subtracted.
    const PyramidQ chain = gaussian_pyramid_q(quantize(host), n_bands + 1);
    clock.add_to(local.host_pyramid_ms);

    clock.restart();
    PyramidQ assembled{PyramidKind::laplacian, {}};
    assembled.levels.reserve(n_bands + 1);
    for (int l = 0; l < n_bands; ++l) {
      assembled.levels.push_back(run_lpu_q(bytes, to_bytes(anchor_gauss.levels[l]), l, lut,
                                           threads));
    }
    assembled.levels.push_back(chain.levels[n_bands]);
    clock.add_to(local.bands_ms);

    clock.restart();
    out[c] = dequantize(collapse_q(assembled));
    clock.add_to(local.collapse_ms);
  }
  if (timings != nullptr) {
    timings->host_pyramid_ms += local.host_pyramid_ms;
    timings->bands_ms += local.bands_ms;
    timings->collapse_ms += local.collapse_ms;
  }
  return out;
}

}  // namespace llf
