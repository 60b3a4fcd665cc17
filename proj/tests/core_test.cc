#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "mrr/error.h"
#include "mrr/image.h"
#include "mrr/parallel.h"
#include "mrr/random.h"
#include "mrr/vec.h"

namespace mrr {
namespace {

ImageF FromRows(std::initializer_list<std::initializer_list<Real>> rows) {
  const int h = static_cast<int>(rows.size());
  const int w = static_cast<int>(rows.begin()->size());
  ImageF img(w, h);
  int y = 0;
  for (const auto& row : rows) {
    int x = 0;
    for (Real v : row) img(x++, y) = v;
    ++y;
  }
  return img;
}

// Bilinear sample written out from the definition, for comparison.
Real BilinearByHand(const ImageF& img, Real u, Real v) {
  const Real fx = u * img.width() - 0.5, fy = v * img.height() - 0.5;
  const int x0 = static_cast<int>(std::floor(fx)), y0 = static_cast<int>(std::floor(fy));
  const Real tx = fx - x0, ty = fy - y0;
  auto at = [&](int x, int y) {
    return img(std::clamp(x, 0, img.width() - 1), std::clamp(y, 0, img.height() - 1));
  };
  return (1 - tx) * (1 - ty) * at(x0, y0) + tx * (1 - ty) * at(x0 + 1, y0) +
         (1 - tx) * ty * at(x0, y0 + 1) + tx * ty * at(x0 + 1, y0 + 1);
}

TEST(Image2D, StoresWidthTimesHeightValues) {
  ImageF img(5, 3, 2.5);
  EXPECT_EQ(img.size(), 15u);
  EXPECT_EQ(img.pixels().size(), 15u);
  img(4, 2) = 9;
  EXPECT_EQ(img.at(4, 2), 9);
  EXPECT_EQ(img.Row(2)[4], 9);
}

TEST(Image2D, RejectsEmptyDimensions) {
  EXPECT_THROW(ImageF(0, 4), InvariantError);
  EXPECT_THROW(ImageF(4, -1), InvariantError);
}

TEST(Image2D, CheckedAccessOutOfBoundsIsAnError) {
  ImageF img(4, 4);
  EXPECT_THROW(img.at(4, 0), InvariantError);
  EXPECT_THROW(img.at(0, -1), InvariantError);
  EXPECT_NO_THROW(img.at(3, 3));
}

TEST(SampleBilinear, SingleTexelIsConstant) {
  const ImageF img(1, 1, 7);
  for (Real u : {0.0, 0.3, 1.0}) {
    for (Real v : {0.0, 0.8}) EXPECT_EQ(SampleBilinear(img, u, v), 7);
  }
}

TEST(SampleBilinear, MidpointOfTwoTexels) {
  const ImageF img = FromRows({{0, 1}});
  EXPECT_DOUBLE_EQ(SampleBilinear(img, 0.5, 0.5), 0.5);
}

TEST(SampleBilinear, CheckerCenterIsHalf) {
  const ImageF img = FromRows({{0, 1}, {1, 0}});
  EXPECT_DOUBLE_EQ(SampleBilinear(img, 0.5, 0.5), 0.5);
}

TEST(SampleBilinear, ExactAtTexelCenters) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<Real> dist(-5, 5);
  ImageF img(7, 5);
  for (Real& v : img.pixels()) v = dist(rng);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 7; ++x) {
      EXPECT_EQ(SampleBilinear(img, (x + 0.5) / 7, (y + 0.5) / 5), img(x, y));
    }
  }
}

TEST(SampleBilinear, MatchesHandFormulaWithClampToEdge) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<Real> dist(0, 1);
  ImageF img(6, 4);
  for (Real& v : img.pixels()) v = dist(rng);
  for (int k = 0; k < 500; ++k) {
    const Real u = dist(rng), v = dist(rng);
    EXPECT_NEAR(SampleBilinear(img, u, v), BilinearByHand(img, u, v), 1e-12);
  }
}

TEST(SampleBilinear, NonFiniteCoordinatesAreErrors) {
  const ImageF img(2, 2);
  EXPECT_THROW(SampleBilinear(img, std::nan(""), 0.5), InvariantError);
  EXPECT_THROW(SampleBilinear(img, 0.5, std::numeric_limits<Real>::infinity()),
               InvariantError);
}

TEST(SampleBilinear, VectorImagesInterpolatePerChannel) {
  Image3 img(2, 1);
  img(0, 0) = {0, 1, 2};
  img(1, 0) = {1, 3, 2};
  const Vec3 v = SampleBilinear(img, 0.5, 0.5);
  EXPECT_DOUBLE_EQ(v.x, 0.5);
  EXPECT_DOUBLE_EQ(v.y, 2);
  EXPECT_DOUBLE_EQ(v.z, 2);
}

TEST(Upsample, ConstantStaysConstant) {
  const ImageF img(3, 2, 0.25);
  const ImageF up = Upsample(img, 17, 9);
  for (Real v : up.pixels()) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(Upsample, SingleTexelFillsTarget) {
  const ImageF up = Upsample(ImageF(1, 1, 4), 8, 8);
  EXPECT_EQ(up.width(), 8);
  for (Real v : up.pixels()) EXPECT_EQ(v, 4);
}

TEST(Upsample, CheckerTwoToFour) {
  const ImageF src = FromRows({{0, 1}, {1, 0}});
  const ImageF up = Upsample(src, 4, 4);
  // Output texel (1, 1) sits a quarter texel from source (0, 0) toward
  // (1, 1): weights 9/16, 3/16, 3/16, 1/16 over values 0, 1, 1, 0.
  EXPECT_DOUBLE_EQ(up(1, 1), 6.0 / 16);
  EXPECT_DOUBLE_EQ(up(2, 1), 10.0 / 16);
  EXPECT_DOUBLE_EQ(up(1, 2), 10.0 / 16);
  EXPECT_DOUBLE_EQ(up(2, 2), 6.0 / 16);
  EXPECT_DOUBLE_EQ((up(1, 1) + up(2, 1) + up(1, 2) + up(2, 2)) / 4, 0.5);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      EXPECT_NEAR(up(x, y), BilinearByHand(src, (x + 0.5) / 4, (y + 0.5) / 4), 1e-15);
    }
  }
}

TEST(Upsample, RangeIsBoundedBySource) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<Real> dist(-2, 3);
  for (int trial = 0; trial < 20; ++trial) {
    ImageF img(5, 4);
    for (Real& v : img.pixels()) v = dist(rng);
    const auto [lo, hi] = std::ranges::minmax(img.pixels());
    const ImageF up = Upsample(img, 40, 32);
    for (Real v : up.pixels()) {
      EXPECT_GE(v, lo - 1e-12);
      EXPECT_LE(v, hi + 1e-12);
    }
  }
}

TEST(Upsample, SmallerTargetIsAnError) {
  EXPECT_THROW(Upsample(ImageF(4, 4), 2, 4), InvariantError);
}

TEST(UpsampleDefined, IgnoresUndefinedTexels) {
  Image3 img(2, 1);
  img(0, 0) = Vec3::Splat(1);
  img(1, 0) = Vec3::Splat(0);  // undefined, would otherwise pull values down
  Mask defined(2, 1, 0);
  defined(0, 0) = 1;
  const Image3 up = UpsampleDefined(img, defined, 8, 4);
  // Columns 0-5 have texel 0 in their bilinear footprint with nonzero
  // weight; columns 6-7 lie past texel 1's center and see only texel 1.
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 8; ++x) EXPECT_EQ(up(x, y), Vec3::Splat(x < 6 ? 1 : 0)) << x;
  }
}

TEST(UpsampleDefined, NoDefinedTexelsGivesZero) {
  const Image3 up = UpsampleDefined(Image3(2, 2, Vec3::Splat(3)), Mask(2, 2, 0), 4, 4);
  for (const Vec3& v : up.pixels()) EXPECT_EQ(v, Vec3());
}

TEST(UpsampleDefined, AgreesWithUpsampleWhenEverythingIsDefined) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<Real> dist(0, 1);
  Image3 img(4, 3);
  for (Vec3& v : img.pixels()) v = {dist(rng), dist(rng), dist(rng)};
  const Image3 a = UpsampleDefined(img, Mask(4, 3, 1), 16, 12);
  const Image3 b = Upsample(img, 16, 12);
  for (size_t i = 0; i < a.size(); ++i) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(a.pixels()[i][c], b.pixels()[i][c], 1e-12);
  }
}

TEST(Mat4, InverseRoundTrips) {
  const Mat4 m = Mat4::FromBasis(Normalize(Vec3(1, 2, 0.5)), Normalize(Vec3(-2, 1, 0)),
                                 Normalize(Cross(Vec3(1, 2, 0.5), Vec3(-2, 1, 0))),
                                 Vec3(3, -1, 2));
  const Mat4 inv = m.Inverse();
  const Vec3 p(0.3, -4, 7);
  const Vec3 q = inv.TransformPoint(m.TransformPoint(p));
  EXPECT_NEAR(q.x, p.x, 1e-12);
  EXPECT_NEAR(q.y, p.y, 1e-12);
  EXPECT_NEAR(q.z, p.z, 1e-12);
  EXPECT_NEAR(std::fabs(m.Determinant()), 1, 1e-12);
}

TEST(Mat4, SingularInverseIsAnError) {
  Mat4 m = Mat4::Identity();
  m.at(2, 2) = 0;
  EXPECT_THROW(m.Inverse(), InvariantError);
}

TEST(PixelRng, IsAPureFunctionOfItsKey) {
  const PixelRng a(42, 3, 7), b(42, 3, 7), c(42, 7, 3), d(43, 3, 7);
  EXPECT_EQ(a.Uniform(5, 1), b.Uniform(5, 1));
  EXPECT_NE(a.Uniform(5, 1), c.Uniform(5, 1));
  EXPECT_NE(a.Uniform(5, 1), d.Uniform(5, 1));
  EXPECT_NE(a.Uniform(5, 0), a.Uniform(5, 1));
}

TEST(PixelRng, UniformMomentsAndRange) {
  const PixelRng rng(9, 1, 2);
  const int n = 200000;
  Real sum = 0, sum2 = 0;
  for (int k = 0; k < n; ++k) {
    const Real u = rng.Uniform(k, 0);
    ASSERT_GE(u, 0);
    ASSERT_LT(u, 1);
    sum += u;
    sum2 += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(sum2 / n, 1.0 / 3, 0.005);
}

TEST(ParallelForRows, VisitsEveryRowOnce) {
  std::vector<int> hits(1000, 0);
  ParallelForRows(1000, [&](int y) { ++hits[y]; });
  for (int h : hits) EXPECT_EQ(h, 1);
}

}  // namespace
}  // namespace mrr
