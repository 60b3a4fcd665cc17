#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mrr/effects.h"
#include "mrr/error.h"
#include "mrr/fixtures.h"
#include "mrr/scene.h"
#include "support/oracles.h"

namespace mrr {
namespace {

struct Frame {
  Scene scene;
  GBuffer g;
  ShadowMap sm;
};

Frame MakeFrame(Scene scene, int w, int h, int sm_res = 1024) {
  GBuffer g = RasterizeGBuffer(scene, w, h);
  ShadowMap sm = RasterizeShadowMap(scene, sm_res);
  return {std::move(scene), std::move(g), std::move(sm)};
}

Mask Full(int w, int h) { return Mask(w, h, 1); }

Mask Single(int w, int h, int x, int y) {
  Mask m(w, h, 0);
  m(x, y) = 1;
  return m;
}

// Log-log least-squares slope.
Real Slope(const std::vector<Real>& xs, const std::vector<Real>& ys) {
  const int n = static_cast<int>(xs.size());
  Real mx = 0, my = 0;
  for (int i = 0; i < n; ++i) {
    mx += std::log(xs[i]) / n;
    my += std::log(ys[i]) / n;
  }
  Real num = 0, den = 0;
  for (int i = 0; i < n; ++i) {
    num += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
    den += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
  }
  return num / den;
}

TEST(EffectNames, RoundTrip) {
  for (EffectKind k : {EffectKind::kSsao, EffectKind::kSsm, EffectKind::kSsgi}) {
    EXPECT_EQ(ParseEffect(EffectName(k)), k);
  }
  EXPECT_FALSE(ParseEffect("ssr").has_value());
}

TEST(Ssao, FrontoParallelPlaneIsUnoccluded) {
  const Frame f = MakeFrame(fixtures::FrontoParallelQuad(3), 64, 48);
  const EffectOutput out = EvalSsao(f.g, EffectParams::Defaults(EffectKind::kSsao), Full(64, 48));
  for (int y = 0; y < 48; ++y) {
    for (int x = 0; x < 64; ++x) EXPECT_NEAR(out.layer(x, y).x, 1.0, 0.05);
  }
}

TEST(Ssao, BackgroundPixelsCostNothing) {
  const Frame f = MakeFrame(fixtures::Empty(), 16, 16);
  const EffectOutput out = EvalSsao(f.g, EffectParams::Defaults(EffectKind::kSsao), Full(16, 16));
  EXPECT_EQ(out.shaded_pixels, 0u);
  EXPECT_EQ(out.samples_evaluated, 0u);
  for (const Vec3& v : out.layer.pixels()) EXPECT_EQ(v, Vec3());
}

TEST(Ssao, CreaseMatchesVisibilityOracle) {
  const int w = 256, h = 256;
  const Frame f = MakeFrame(fixtures::InteriorCorner(4), w, h);
  const oracle::PinholeCamera cam(f.scene.camera, w, h);
  EffectParams p = EffectParams::Defaults(EffectKind::kSsao);
  p.samples = 4096;
  Real max_err = 0;
  std::vector<Real> crease, flat;
  for (int x : {w / 2 - 12, w / 2 - 4, w / 2 - 1, w / 2, w / 2 + 3, w / 2 + 10, 16}) {
    const int y = h / 2 + 7;
    const EffectOutput out = EvalSsao(f.g, p, Single(w, h, x, y));
    const auto hit = oracle::RayCast(f.scene, cam.origin, cam.Ray(x + 0.5, y + 0.5));
    ASSERT_TRUE(hit.has_value());
    const Real expected = oracle::SsaoVisibilityOracle(f.scene, cam, hit->point, hit->normal,
                                                       p.radius, p.ssao_bias * p.radius, 48, 16);
    const Real got = out.layer(x, y).x;
    max_err = std::max(max_err, std::fabs(got - expected));
    (std::abs(x - w / 2) <= 1 ? crease : flat).push_back(got);
  }
  EXPECT_LT(max_err, 0.05);
  for (Real c : crease) {
    for (Real v : flat) EXPECT_LT(c, v);
  }
}

TEST(Ssao, VarianceFallsAsOneOverSamples) {
  const int w = 128, h = 128;
  const Frame f = MakeFrame(fixtures::InteriorCorner(4), w, h);
  const int x = w / 2 - 2, y = h / 2;
  const Mask domain = Single(w, h, x, y);
  std::vector<Real> ns, variances;
  for (int n : {16, 64, 256}) {
    EffectParams p = EffectParams::Defaults(EffectKind::kSsao);
    p.samples = n;
    std::vector<Real> values;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
      p.seed = seed;
      values.push_back(EvalSsao(f.g, p, domain).layer(x, y).x);
    }
    const Real mean = std::accumulate(values.begin(), values.end(), Real(0)) / values.size();
    Real var = 0;
    for (Real v : values) var += (v - mean) * (v - mean) / (values.size() - 1);
    ns.push_back(n);
    variances.push_back(var);
  }
  const Real slope = Slope(ns, variances);
  EXPECT_NEAR(slope, -1.0, 0.3);
}

// Visibility recovered from the SSM output on the floor.
Real FloorVisibility(const Frame& f, const Vec3& shaded) {
  const Vec3 to_light = -f.scene.light.direction;
  const Real cos_l = to_light.y;
  return (shaded.x / 0.8 - f.scene.light.ambient.x) / (f.scene.light.intensity.x * cos_l);
}

TEST(Ssm, UnoccludedAndUmbraValues) {
  const int w = 96, h = 64;
  const Frame f = MakeFrame(fixtures::ShadowedFloor(), w, h, 2048);
  const EffectOutput out = EvalSsm(f.g, f.sm, f.scene.light,
                                   EffectParams::Defaults(EffectKind::kSsm), Full(w, h));
  for (int y = 0; y < h; ++y) {
    EXPECT_NEAR(FloorVisibility(f, out.layer(w - 1, y)), 1.0, 1e-9);
    EXPECT_NEAR(FloorVisibility(f, out.layer(0, y)), 0.0, 1e-9);
  }
}

TEST(Ssm, PenumbraFollowsDiskCoverage) {
  const int w = 96, h = 64;
  const Frame f = MakeFrame(fixtures::ShadowedFloor(), w, h, 512);
  const EffectParams p = EffectParams::Defaults(EffectKind::kSsm);
  const EffectOutput out = EvalSsm(f.g, f.sm, f.scene.light, p, Full(w, h));
  const oracle::PinholeCamera cam(f.scene.camera, w, h);
  // Distance from the shadow line measured across the light direction.
  const Real cos_l = -f.scene.light.direction.y;
  Real max_err = 0;
  int penumbra = 0;
  for (int y = 0; y < h; ++y) {
    Real previous = -1;
    for (int x = 0; x < w; ++x) {
      const Real v = FloorVisibility(f, out.layer(x, y));
      EXPECT_GE(v, previous - 1e-12) << x << "," << y;
      previous = v;
      const auto hit = oracle::RayCast(f.scene, cam.origin, cam.Ray(x + 0.5, y + 0.5));
      ASSERT_TRUE(hit.has_value());
      const Real d = (hit->point.x - fixtures::kShadowLineX) * cos_l / f.sm.texel_size;
      const Real expected = 1 - oracle::DiskHalfPlaneFraction(d, p.pcf_radius);
      max_err = std::max(max_err, std::fabs(v - expected));
      if (y == 0 && v > 1e-9 && v < 1 - 1e-9) ++penumbra;
    }
  }
  EXPECT_LT(max_err, 0.15);
  // The filter disk spans 2 * pcf_radius texels across the boundary.
  const Real expected_px = 2 * p.pcf_radius * f.sm.texel_size / cos_l * cam.focal / 3;
  EXPECT_NEAR(penumbra, expected_px, 2.0);
}

TEST(Ssgi, ZeroLightGivesZero) {
  Scene s = fixtures::RedWallCorner();
  s.light.intensity = Vec3();
  const Frame f = MakeFrame(s, 64, 48);
  const EffectOutput out = EvalSsgi(f.g, f.sm, f.scene.light,
                                    EffectParams::Defaults(EffectKind::kSsgi), Full(64, 48));
  for (const Vec3& v : out.layer.pixels()) EXPECT_EQ(v, Vec3());
  EXPECT_GT(out.shaded_pixels, 0u);
}

TEST(Ssgi, RedWallBleedsOntoFloor) {
  const int w = 160, h = 120;
  const Frame f = MakeFrame(fixtures::RedWallCorner(), w, h, 2048);
  const oracle::PinholeCamera cam(f.scene.camera, w, h);
  const oracle::RayGBuffer rg = oracle::CastGBuffer(f.scene, w, h);
  EffectParams p = EffectParams::Defaults(EffectKind::kSsgi);
  p.samples = 40000;
  int checked = 0;
  for (int y = h / 2; y < h; y += 12) {
    for (int x = w / 2; x < w; x += 16) {
      if (!rg.valid(x, y) || rg.world_normal(x, y).y < 0.9) continue;
      const Vec3 got = EvalSsgi(f.g, f.sm, f.scene.light, p, Single(w, h, x, y)).layer(x, y);
      const Vec3 expected = oracle::SsgiGatherOracle(f.scene, rg, cam, x, y, p.radius, 8);
      if (expected.x < 1e-3) continue;
      ++checked;
      EXPECT_NEAR(got.x, expected.x, 0.05 * expected.x);
      EXPECT_NEAR(got.y, expected.y, 0.05 * expected.x);
      EXPECT_GT(got.x, got.y);
      EXPECT_GT(got.x, got.z);
    }
  }
  EXPECT_GT(checked, 3);
}

TEST(Ssgi, ConvexSurfacesExchangeNothing) {
  Scene s;
  AddBox(s, {-1, -1, -6}, {1, 1, -4}, Vec3::Splat(0.8));
  s.camera.position = {3, 2.5, 0};
  s.camera.direction = Normalize(Vec3(-3, -2.5, -5));
  s.light.direction = Normalize(Vec3(-0.5, -1, -0.3));
  const Frame f = MakeFrame(s, 64, 64);
  const EffectOutput out = EvalSsgi(f.g, f.sm, f.scene.light,
                                    EffectParams::Defaults(EffectKind::kSsgi), Full(64, 64));
  EXPECT_GT(out.shaded_pixels, 100u);
  // Same-face neighbours give form factors at roundoff level only.
  for (const Vec3& v : out.layer.pixels()) EXPECT_LT(MaxComponent(v), 1e-12);
}

class AllEffects : public ::testing::TestWithParam<EffectKind> {};

TEST_P(AllEffects, DeterministicAndSampleAccounting) {
  const int w = 48, h = 32;
  const Frame f = MakeFrame(fixtures::Crease(), w, h, 512);
  EffectParams p = EffectParams::Defaults(GetParam());
  p.samples = 24;
  const EffectOutput a = EvalEffect(GetParam(), f.g, f.sm, f.scene.light, p, Full(w, h));
  const EffectOutput b = EvalEffect(GetParam(), f.g, f.sm, f.scene.light, p, Full(w, h));
  EXPECT_TRUE(std::ranges::equal(a.layer.pixels(), b.layer.pixels()));
  EXPECT_EQ(a.shaded_pixels, Popcount(f.g.valid));
  EXPECT_EQ(a.samples_evaluated, 24u * Popcount(f.g.valid));
}

TEST_P(AllEffects, RestrictionMatchesFullEvaluation) {
  const int w = 48, h = 32;
  const Frame f = MakeFrame(fixtures::Occluder(), w, h, 512);
  EffectParams p = EffectParams::Defaults(GetParam());
  p.samples = 16;
  const EffectOutput full = EvalEffect(GetParam(), f.g, f.sm, f.scene.light, p, Full(w, h));
  Mask sub(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) sub(x, y) = (x * 7 + y * 3) % 5 == 0;
  }
  const EffectOutput part = EvalEffect(GetParam(), f.g, f.sm, f.scene.light, p, sub);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      EXPECT_EQ(part.layer(x, y), sub(x, y) ? full.layer(x, y) : Vec3()) << x << "," << y;
    }
  }
  EXPECT_EQ(part.samples_evaluated, 16u * part.shaded_pixels);
}

TEST_P(AllEffects, EmptyDomainCostsNothing) {
  const Frame f = MakeFrame(fixtures::Crease(), 32, 32, 256);
  const EffectOutput out = EvalEffect(GetParam(), f.g, f.sm, f.scene.light,
                                      EffectParams::Defaults(GetParam()), Mask(32, 32, 0));
  EXPECT_EQ(out.shaded_pixels, 0u);
  EXPECT_EQ(out.samples_evaluated, 0u);
}

TEST(EffectSeeds, StochasticEffectsDependOnSeed) {
  const Frame f = MakeFrame(fixtures::Crease(), 32, 32, 256);
  for (EffectKind kind : {EffectKind::kSsao, EffectKind::kSsgi}) {
    EffectParams p = EffectParams::Defaults(kind);
    p.samples = 8;
    const auto a = EvalEffect(kind, f.g, f.sm, f.scene.light, p, Full(32, 32));
    p.seed = 99;
    const auto b = EvalEffect(kind, f.g, f.sm, f.scene.light, p, Full(32, 32));
    EXPECT_FALSE(std::ranges::equal(a.layer.pixels(), b.layer.pixels())) << EffectName(kind);
  }
}

TEST_P(AllEffects, CoarseGridReadsContainingPixel) {
  const Frame f = MakeFrame(fixtures::Crease(), 64, 32, 256);
  EXPECT_EQ(GBufferPixelFor(f.g, 0, 0, 8, 4), (std::array<int, 2>{4, 4}));
  EXPECT_EQ(GBufferPixelFor(f.g, 7, 3, 8, 4), (std::array<int, 2>{60, 28}));
  const auto out = EvalEffect(GetParam(), f.g, f.sm, f.scene.light,
                              EffectParams::Defaults(GetParam()), Full(8, 4));
  EXPECT_EQ(out.layer.width(), 8);
  EXPECT_EQ(out.shaded_pixels, 32u);
}

TEST_P(AllEffects, RejectsBadParams) {
  const Frame f = MakeFrame(fixtures::Crease(), 16, 16, 128);
  EffectParams p = EffectParams::Defaults(GetParam());
  p.samples = 0;
  EXPECT_THROW(EvalEffect(GetParam(), f.g, f.sm, f.scene.light, p, Full(16, 16)),
               InvariantError);
  p = EffectParams::Defaults(GetParam());
  p.radius = 0;
  EXPECT_THROW(EvalEffect(GetParam(), f.g, f.sm, f.scene.light, p, Full(16, 16)),
               InvariantError);
}

INSTANTIATE_TEST_SUITE_P(Kinds, AllEffects,
                         ::testing::Values(EffectKind::kSsao, EffectKind::kSsm,
                                           EffectKind::kSsgi),
                         [](const auto& info) { return std::string(EffectName(info.param)); });

TEST(PcfTaps, InsideRadiusAndShared) {
  EffectParams p = EffectParams::Defaults(EffectKind::kSsm);
  const auto taps = PcfTaps(p);
  ASSERT_EQ(taps.size(), 196u);
  for (const auto& [x, y] : taps) EXPECT_LE(std::hypot(x, y), p.pcf_radius);
  EXPECT_EQ(taps, PcfTaps(p));
}

}  // namespace
}  // namespace mrr
