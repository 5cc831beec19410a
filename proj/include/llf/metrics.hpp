#pragma once

#include <vector>

#include "llf/image_io.hpp"

namespace llf {

struct QualityReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when the images are identical
  bool identical = false;
  std::vector<double> per_channel_mse;
};

/// PSNR over 8-bit samples: 10*log10(255^2 / mse).
QualityReport psnr(const ImageU8& a, const ImageU8& b);

}  // namespace llf
