#include "llf/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "llf/errors.hpp"

namespace llf {

namespace {

int export_byte(double v) {
  v = std::clamp(v, 0.0, 1.0);
  // round half up
  return static_cast<int>(std::floor(v * 255.0 + 0.5));
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  if (s.size() < suffix.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(),
                    [](char a, char b) { return std::tolower(a) == std::tolower(b); });
}

// --- PPM (binary P6, 8-bit) ---

void skip_ppm_whitespace(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

ImageU8 load_ppm(std::istream& in, const std::string& path) {
  std::string magic;
  in >> magic;
  if (magic != "P6") throw IoError(path + ": unsupported PPM variant '" + magic + "' (need P6)");
  int w = 0, h = 0, maxval = 0;
  skip_ppm_whitespace(in);
  in >> w;
  skip_ppm_whitespace(in);
  in >> h;
  skip_ppm_whitespace(in);
  in >> maxval;
  if (!in || w < 1 || h < 1) throw IoError(path + ": malformed PPM header");
  if (maxval != 255) {
    throw IoError(path + ": unsupported bit depth (maxval " + std::to_string(maxval) +
                  ", need 255)");
  }
  in.get();  // single whitespace byte before the payload
  ImageU8 img{w, h, 3, {}};
  const size_t expected = static_cast<size_t>(w) * h * 3;
  img.data.resize(expected);
  in.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(expected));
  const size_t actual = static_cast<size_t>(in.gcount());
  if (actual != expected) {
    throw IoError(path + ": truncated PPM payload, expected " + std::to_string(expected) +
                  " bytes but found " + std::to_string(actual));
  }
  return img;
}

void save_ppm(const ImageU8& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot open for writing");
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
  if (!out) throw IoError(path + ": write failed");
}

// --- PNG via libpng ---

struct PngReadCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* file = nullptr;
  ~PngReadCloser() {
    if (png != nullptr) png_destroy_read_struct(&png, info != nullptr ? &info : nullptr, nullptr);
    if (file != nullptr) std::fclose(file);
  }
};

struct PngWriteCloser {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FILE* file = nullptr;
  ~PngWriteCloser() {
    if (png != nullptr) png_destroy_write_struct(&png, info != nullptr ? &info : nullptr);
    if (file != nullptr) std::fclose(file);
  }
};

ImageU8 load_png(const std::string& path) {
  PngReadCloser ctx;
  ctx.file = std::fopen(path.c_str(), "rb");
  if (ctx.file == nullptr) throw IoError(path + ": cannot open");
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (ctx.png == nullptr) throw IoError(path + ": libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (ctx.info == nullptr) throw IoError(path + ": libpng init failed");
  if (setjmp(png_jmpbuf(ctx.png))) throw IoError(path + ": PNG decode failed");

  png_init_io(ctx.png, ctx.file);
  png_read_info(ctx.png, ctx.info);
  const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
  const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
  const int color_type = png_get_color_type(ctx.png, ctx.info);
  if (bit_depth == 16) {
    throw IoError(path + ": unsupported bit depth (16-bit PNG, need 8)");
  }
  // Normalize every variant to 8-bit RGB.
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(ctx.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
  if (png_get_valid(ctx.png, ctx.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(ctx.png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(ctx.png);
  }
  png_set_strip_alpha(ctx.png);
  png_read_update_info(ctx.png, ctx.info);
  if (png_get_rowbytes(ctx.png, ctx.info) != w * 3) {
    throw IoError(path + ": unexpected PNG row layout after normalization");
  }

  ImageU8 img{static_cast<int>(w), static_cast<int>(h), 3, {}};
  img.data.resize(static_cast<size_t>(w) * h * 3);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) {
    rows[y] = img.data.data() + static_cast<size_t>(y) * w * 3;
  }
  png_read_image(ctx.png, rows.data());
  png_read_end(ctx.png, nullptr);
  return img;
}

void save_png(const ImageU8& img, const std::string& path) {
  PngWriteCloser ctx;
  ctx.file = std::fopen(path.c_str(), "wb");
  if (ctx.file == nullptr) throw IoError(path + ": cannot open for writing");
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (ctx.png == nullptr) throw IoError(path + ": libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (ctx.info == nullptr) throw IoError(path + ": libpng init failed");
  if (setjmp(png_jmpbuf(ctx.png))) throw IoError(path + ": PNG encode failed");

  png_init_io(ctx.png, ctx.file);
  png_set_IHDR(ctx.png, ctx.info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(ctx.png, ctx.info);
  std::vector<png_bytep> rows(img.height);
  for (int y = 0; y < img.height; ++y) {
    rows[y] = const_cast<png_bytep>(img.data.data() + static_cast<size_t>(y) * img.width * 3);
  }
  png_write_image(ctx.png, rows.data());
  png_write_end(ctx.png, nullptr);
}

}  // namespace

std::array<Plane, 3> planes_from_u8(const ImageU8& img) {
  std::array<Plane, 3> planes{Plane(img.width, img.height), Plane(img.width, img.height),
                              Plane(img.width, img.height)};
  const size_t px = static_cast<size_t>(img.width) * img.height;
  for (size_t i = 0; i < px; ++i) {
    for (int c = 0; c < 3; ++c) {
      const uint8_t b = img.channels == 1 ? img.data[i] : img.data[i * img.channels + c];
      planes[c].samples[i] = b / 255.0;
    }
  }
  return planes;
}

LoadedImage load_image(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw IoError(path + ": cannot open");
  unsigned char magic[8] = {0};
  probe.read(reinterpret_cast<char*>(magic), sizeof(magic));
  const size_t magic_len = static_cast<size_t>(probe.gcount());
  probe.close();

  ImageU8 raw;
  if (magic_len >= 2 && magic[0] == 'P' && magic[1] == '6') {
    std::ifstream in(path, std::ios::binary);
    raw = load_ppm(in, path);
  } else if (magic_len >= 8 && png_sig_cmp(magic, 0, 8) == 0) {
    raw = load_png(path);
  } else {
    throw IoError(path + ": unsupported format (need 8-bit PNG or binary PPM P6)");
  }

  LoadedImage loaded{planes_from_u8(raw), std::move(raw)};
  return loaded;
}

ImageU8 export_u8(const std::array<Plane, 3>& planes) {
  for (int c = 1; c < 3; ++c) {
    if (!planes[c].same_dims(planes[0])) throw ValidationError("channel dimensions differ");
  }
  ImageU8 img{planes[0].width, planes[0].height, 3, {}};
  const size_t px = static_cast<size_t>(img.width) * img.height;
  img.data.resize(px * 3);
  for (size_t i = 0; i < px; ++i) {
    for (int c = 0; c < 3; ++c) {
      img.data[i * 3 + c] = static_cast<uint8_t>(export_byte(planes[c].samples[i]));
    }
  }
  return img;
}

void save_image(const std::array<Plane, 3>& planes, const std::string& path) {
  const ImageU8 img = export_u8(planes);
  if (has_suffix(path, ".ppm")) {
    save_ppm(img, path);
  } else if (has_suffix(path, ".png")) {
    save_png(img, path);
  } else {
    throw IoError(path + ": unsupported output extension (use .png or .ppm)");
  }
}

}  // namespace llf
