#include "mrr/image_io.h"

#include <png.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

#include "mrr/error.h"

namespace mrr {

static_assert(std::endian::native == std::endian::little,
              "float sidecar I/O assumes a little-endian host");

namespace {

std::uint8_t ToByte(Real v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, Real(0), Real(1)) * 255));
}

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File Open(const std::filesystem::path& path, const char* mode) {
  File f(std::fopen(path.c_str(), mode));
  if (!f) throw ParseError("cannot open " + path.string());
  return f;
}

void WriteRgb8(const std::filesystem::path& path, int w, int h,
               const std::vector<std::uint8_t>& rgb) {
  File f = Open(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw ParseError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw ParseError("failed writing " + path.string());
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, w, h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < h; ++y) {
    png_write_row(png, rgb.data() + static_cast<size_t>(y) * w * 3);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

Image3 Quantize(const Image3& img) {
  Image3 out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (size_t i = 0; i < src.size(); ++i) {
    dst[i] = {ToByte(src[i].x) / Real(255), ToByte(src[i].y) / Real(255),
              ToByte(src[i].z) / Real(255)};
  }
  return out;
}

void WritePng(const std::filesystem::path& path, const Image3& img) {
  std::vector<std::uint8_t> rgb;
  rgb.reserve(img.size() * 3);
  for (const Vec3& v : img.pixels()) {
    rgb.push_back(ToByte(v.x));
    rgb.push_back(ToByte(v.y));
    rgb.push_back(ToByte(v.z));
  }
  WriteRgb8(path, img.width(), img.height(), rgb);
}

void WritePng(const std::filesystem::path& path, const ImageF& gray) {
  Image3 rgb(gray.width(), gray.height());
  for (int y = 0; y < gray.height(); ++y) {
    for (int x = 0; x < gray.width(); ++x) rgb(x, y) = Vec3::Splat(gray(x, y));
  }
  WritePng(path, rgb);
}

void WritePng(const std::filesystem::path& path, const Mask& mask) {
  Image3 rgb(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) rgb(x, y) = Vec3::Splat(mask(x, y) ? 1 : 0);
  }
  WritePng(path, rgb);
}

Image3 ReadPng(const std::filesystem::path& path) {
  File f = Open(path, "rb");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ParseError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ParseError("failed reading " + path.string());
  }
  png_init_io(png, f.get());
  png_read_info(png, info);
  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);
  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  std::vector<std::uint8_t> row(png_get_rowbytes(png, info));
  Image3 out(w, h);
  for (int y = 0; y < h; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (int x = 0; x < w; ++x) {
      out(x, y) = Vec3(row[3 * x], row[3 * x + 1], row[3 * x + 2]) / Real(255);
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

void WriteFloatImage(const std::filesystem::path& path, const Image3& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << "MRRF\n" << img.width() << " " << img.height() << " 3\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.size() * sizeof(Vec3)));
  if (!out) throw ParseError("failed writing " + path.string());
}

Image3 ReadFloatImage(const std::filesystem::path& path) {
  static_assert(sizeof(Vec3) == 3 * sizeof(double));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::string magic;
  int w = 0, h = 0, c = 0;
  in >> magic >> w >> h >> c;
  if (magic != "MRRF" || w < 1 || h < 1 || c != 3) {
    throw ParseError(path.string() + ": not an MRRF image");
  }
  in.get();  // the newline ending the header
  Image3 img(w, h);
  in.read(reinterpret_cast<char*>(img.pixels().data()),
          static_cast<std::streamsize>(img.size() * sizeof(Vec3)));
  if (!in) throw ParseError(path.string() + ": truncated pixel data");
  return img;
}

}  // namespace mrr
