#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "llf/plane.hpp"

namespace llf {

/// Interleaved 8-bit image buffer.
struct ImageU8 {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<uint8_t> data;
};

struct LoadedImage {
  std::array<Plane, 3> planes;  // normalized to [0,1] by /255
  ImageU8 raw;                  // original bytes (3 channels)
};

/// Reads an 8-bit PNG or binary PPM (P6). Grayscale inputs are replicated
/// to three channels. The format is detected from the file's magic bytes.
LoadedImage load_image(const std::string& path);

/// Clamps to [0,1], rounds half-up to 8 bits, and writes in the format
/// implied by the extension (.png, .ppm).
void save_image(const std::array<Plane, 3>& planes, const std::string& path);

/// The export step of save_image without touching the filesystem.
ImageU8 export_u8(const std::array<Plane, 3>& planes);

std::array<Plane, 3> planes_from_u8(const ImageU8& img);

}  // namespace llf
