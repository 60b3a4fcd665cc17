#ifndef MRR_IMAGE_H_
#define MRR_IMAGE_H_

#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mrr/error.h"
#include "mrr/vec.h"

namespace mrr {

// Dense row-major 2-D grid. (x, y) with x in [0, width), y in [0, height);
// row 0 is the top of the screen.
template <typename T>
class Image2D {
 public:
  Image2D() = default;
  Image2D(int width, int height, const T& fill = T())
      : width_(width), height_(height) {
    Require(width >= 1 && height >= 1, "image dimensions must be >= 1");
    data_.assign(static_cast<size_t>(width) * height, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  bool InBounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  // Unchecked in release builds.
  T& operator()(int x, int y) {
    assert(InBounds(x, y));
    return data_[Index(x, y)];
  }
  const T& operator()(int x, int y) const {
    assert(InBounds(x, y));
    return data_[Index(x, y)];
  }

  // Checked access; out-of-bounds is a contract violation.
  const T& at(int x, int y) const {
    if (!InBounds(x, y)) {
      throw InvariantError("pixel (" + std::to_string(x) + ", " +
                           std::to_string(y) + ") outside " +
                           std::to_string(width_) + "x" + std::to_string(height_));
    }
    return data_[Index(x, y)];
  }
  T& at(int x, int y) {
    return const_cast<T&>(std::as_const(*this).at(x, y));
  }

  std::span<T> Row(int y) { return {data_.data() + Index(0, y), size_t(width_)}; }
  std::span<const T> Row(int y) const {
    return {data_.data() + Index(0, y), size_t(width_)};
  }
  std::span<const T> pixels() const { return data_; }
  std::span<T> pixels() { return data_; }

  template <typename U>
  bool SameShape(const Image2D<U>& o) const {
    return width_ == o.width() && height_ == o.height();
  }
  friend bool operator==(const Image2D&, const Image2D&) = default;

 private:
  size_t Index(int x, int y) const { return static_cast<size_t>(y) * width_ + x; }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using ImageF = Image2D<Real>;
using Image3 = Image2D<Vec3>;
// Binary images use bytes holding 0 or 1.
using Mask = Image2D<std::uint8_t>;

size_t Popcount(const Mask& mask);
Mask And(const Mask& a, const Mask& b);

// Clamp-to-edge bilinear sampling at normalized coordinates; texel (x, y)
// has its center at ((x + 0.5) / width, (y + 0.5) / height).
Real SampleBilinear(const ImageF& img, Real u, Real v);
Vec3 SampleBilinear(const Image3& img, Real u, Real v);

// Bilinear magnification; target dimensions must not be smaller than the
// source.
ImageF Upsample(const ImageF& img, int target_width, int target_height);
Image3 Upsample(const Image3& img, int target_width, int target_height);

// Bilinear magnification that only interpolates between texels whose
// `defined` bit is set, renormalizing the remaining weights. Output pixels
// whose footprint holds no defined texel are zero.
Image3 UpsampleDefined(const Image3& img, const Mask& defined, int target_width,
                       int target_height);

}  // namespace mrr

#endif  // MRR_IMAGE_H_
