#include "llf/metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "llf/errors.hpp"

namespace llf {

QualityReport psnr(const ImageU8& a, const ImageU8& b) {
  if (a.width != b.width || a.height != b.height || a.channels != b.channels) {
    throw ValidationError("images differ in shape: " + std::to_string(a.width) + "x" +
                          std::to_string(a.height) + "x" + std::to_string(a.channels) +
                          " vs " + std::to_string(b.width) + "x" + std::to_string(b.height) +
                          "x" + std::to_string(b.channels));
  }
  QualityReport report;
  report.per_channel_mse.assign(a.channels, 0.0);
  double sum_sq = 0.0;
  const size_t px = static_cast<size_t>(a.width) * a.height;
  for (size_t i = 0; i < px; ++i) {
    for (int c = 0; c < a.channels; ++c) {
      const double d = static_cast<double>(a.data[i * a.channels + c]) -
                       static_cast<double>(b.data[i * a.channels + c]);
      sum_sq += d * d;
      report.per_channel_mse[c] += d * d;
    }
  }
  const double n = static_cast<double>(px) * a.channels;
  report.mse = sum_sq / n;
  for (double& m : report.per_channel_mse) m /= static_cast<double>(px);
  if (report.mse == 0.0) {
    report.identical = true;
    report.psnr_db = std::numeric_limits<double>::infinity();
  } else {
    report.psnr_db = 10.0 * std::log10(255.0 * 255.0 / report.mse);
  }
  return report;
}

}  // namespace llf
