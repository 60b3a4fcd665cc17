#include "mrr/image.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mrr {

size_t Popcount(const Mask& mask) {
  size_t n = 0;
  for (std::uint8_t b : mask.pixels()) n += b != 0;
  return n;
}

Mask And(const Mask& a, const Mask& b) {
  Require(a.SameShape(b), "mask shapes differ");
  Mask out(a.width(), a.height());
  auto pa = a.pixels();
  auto pb = b.pixels();
  auto po = out.pixels();
  for (size_t i = 0; i < po.size(); ++i) po[i] = (pa[i] && pb[i]) ? 1 : 0;
  return out;
}

namespace {

// Two clamped taps and the weight of the second, along one axis. `f` is the
// continuous texel coordinate (texel centers at integers).
struct Taps {
  int i0, i1;
  Real t;
};

Taps AxisTaps(Real f, int n) {
  // Snap values within rounding noise of a texel center so that sampling a
  // center returns the stored texel bit-exactly.
  const Real r = std::round(f);
  if (std::fabs(f - r) < 1e-9) f = r;
  const Real fl = std::floor(f);
  const int i = static_cast<int>(fl);
  Taps taps{std::clamp(i, 0, n - 1), std::clamp(i + 1, 0, n - 1), f - fl};
  return taps;
}

template <typename T>
T Bilerp(const Image2D<T>& img, Real fx, Real fy) {
  const Taps tx = AxisTaps(fx, img.width());
  const Taps ty = AxisTaps(fy, img.height());
  const T top = img(tx.i0, ty.i0) * (1 - tx.t) + img(tx.i1, ty.i0) * tx.t;
  const T bottom = img(tx.i0, ty.i1) * (1 - tx.t) + img(tx.i1, ty.i1) * tx.t;
  return top * (1 - ty.t) + bottom * ty.t;
}

template <typename T>
T SampleImpl(const Image2D<T>& img, Real u, Real v) {
  Require(!img.empty(), "sampling an empty image");
  Require(std::isfinite(u) && std::isfinite(v), "non-finite sample coordinate");
  return Bilerp(img, u * img.width() - Real(0.5), v * img.height() - Real(0.5));
}

template <typename T>
Image2D<T> UpsampleImpl(const Image2D<T>& img, int tw, int th) {
  Require(!img.empty(), "upsampling an empty image");
  Require(tw >= img.width() && th >= img.height(),
          "upsample target smaller than source");
  if (tw == img.width() && th == img.height()) return img;
  Image2D<T> out(tw, th);
  const Real sx = Real(img.width()) / tw;
  const Real sy = Real(img.height()) / th;
  for (int y = 0; y < th; ++y) {
    const Real fy = (y + Real(0.5)) * sy - Real(0.5);
    for (int x = 0; x < tw; ++x) {
      out(x, y) = Bilerp(img, (x + Real(0.5)) * sx - Real(0.5), fy);
    }
  }
  return out;
}

}  // namespace

Real SampleBilinear(const ImageF& img, Real u, Real v) { return SampleImpl(img, u, v); }
Vec3 SampleBilinear(const Image3& img, Real u, Real v) { return SampleImpl(img, u, v); }

ImageF Upsample(const ImageF& img, int tw, int th) { return UpsampleImpl(img, tw, th); }
Image3 Upsample(const Image3& img, int tw, int th) { return UpsampleImpl(img, tw, th); }

Image3 UpsampleDefined(const Image3& img, const Mask& defined, int tw, int th) {
  Require(img.SameShape(defined), "layer and mask shapes differ");
  Require(tw >= img.width() && th >= img.height(),
          "upsample target smaller than source");
  Image3 out(tw, th);
  const Real sx = Real(img.width()) / tw;
  const Real sy = Real(img.height()) / th;
  for (int y = 0; y < th; ++y) {
    const Taps ty = AxisTaps((y + Real(0.5)) * sy - Real(0.5), img.height());
    for (int x = 0; x < tw; ++x) {
      const Taps tx = AxisTaps((x + Real(0.5)) * sx - Real(0.5), img.width());
      const int xs[4] = {tx.i0, tx.i1, tx.i0, tx.i1};
      const int ys[4] = {ty.i0, ty.i0, ty.i1, ty.i1};
      const Real ws[4] = {(1 - tx.t) * (1 - ty.t), tx.t * (1 - ty.t),
                          (1 - tx.t) * ty.t, tx.t * ty.t};
      Vec3 sum;
      Real wsum = 0;
      for (int k = 0; k < 4; ++k) {
        if (!defined(xs[k], ys[k]) || ws[k] == 0) continue;
        sum += img(xs[k], ys[k]) * ws[k];
        wsum += ws[k];
      }
      out(x, y) = wsum > 0 ? sum / wsum : Vec3();
    }
  }
  return out;
}

}  // namespace mrr
