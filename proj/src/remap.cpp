#include "llf/remap.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "llf/errors.hpp"
#include "llf/plane.hpp"

namespace llf {

RemapParams::RemapParams(double alpha_, double beta_, double sigma_)
    : alpha(alpha_), beta(beta_), sigma(sigma_) {
  if (!(alpha > 0.0)) throw ValidationError("alpha must be > 0, got " + std::to_string(alpha_));
  if (!(beta >= 0.0)) throw ValidationError("beta must be >= 0, got " + std::to_string(beta_));
  if (!(sigma > 0.0 && sigma <= 1.0)) {
    throw ValidationError("sigma must be in (0,1], got " + std::to_string(sigma_));
  }
}

double remap_pixel(double i, double g, const RemapParams& params) {
  const double d = i - g;
  const double ad = std::abs(d);
  const double sign = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
  if (ad <= params.sigma) {
    return g + sign * params.sigma * std::pow(ad / params.sigma, params.alpha);
  }
  return g + sign * (params.beta * (ad - params.sigma) + params.sigma);
}

RemapLut build_lut(const RemapParams& params) {
  RemapLut lut{{}, static_cast<int>(std::lround(params.sigma * 255.0)), params};
  for (int k = 0; k < 256; ++k) {
    const double d = k / 255.0;
    double value;
    if (k <= lut.sigma_index) {
      value = params.sigma * std::pow(d / params.sigma, params.alpha);
    } else {
      value = params.beta * (d - params.sigma) + params.sigma;
    }
    lut.table[k] = static_cast<int32_t>(std::llround(value * PlaneQ::one));
  }
  return lut;
}

int32_t q8_of_byte(int v) {
  return static_cast<int32_t>(std::llround(v * 256.0 / 255.0));
}

int32_t remap_lut_apply(int i, int g, const RemapLut& lut) {
  const int d = i - g;
  const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
  return q8_of_byte(g) + sign * lut.table[std::abs(d)];
}

}  // namespace llf
