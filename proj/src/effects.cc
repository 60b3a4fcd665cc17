#include "mrr/effects.h"

#include <algorithm>
#include <cmath>

#include "mrr/error.h"
#include "mrr/parallel.h"
#include "mrr/random.h"

namespace mrr {

std::string_view EffectName(EffectKind kind) {
  switch (kind) {
    case EffectKind::kSsao: return "ssao";
    case EffectKind::kSsm: return "ssm";
    case EffectKind::kSsgi: return "ssgi";
  }
  return "?";
}

std::optional<EffectKind> ParseEffect(std::string_view name) {
  for (EffectKind k : {EffectKind::kSsao, EffectKind::kSsm, EffectKind::kSsgi}) {
    if (EffectName(k) == name) return k;
  }
  return std::nullopt;
}

EffectParams EffectParams::Defaults(EffectKind kind) {
  EffectParams p;
  switch (kind) {
    case EffectKind::kSsao:
      p.samples = 64;
      p.radius = 0.5;
      break;
    case EffectKind::kSsm:
      p.samples = 196;
      break;
    case EffectKind::kSsgi:
      p.samples = 288;
      p.radius = 1.5;
      break;
  }
  return p;
}

std::array<int, 2> GBufferPixelFor(const GBuffer& g, int x, int y, int grid_w, int grid_h) {
  const int px = static_cast<int>((x + Real(0.5)) * g.width() / grid_w);
  const int py = static_cast<int>((y + Real(0.5)) * g.height() / grid_h);
  return {std::min(px, g.width() - 1), std::min(py, g.height() - 1)};
}

namespace {

void CheckParams(const EffectParams& p, const Mask& domain) {
  Require(p.samples >= 1, "sample count must be >= 1");
  Require(p.radius > 0, "effect radius must be > 0");
  Require(p.pcf_radius > 0, "PCF radius must be > 0");
  Require(!domain.empty(), "empty domain image");
}

// Orthonormal tangent frame around a unit normal (Duff et al. 2017).
void TangentFrame(const Vec3& n, Vec3* t, Vec3* b) {
  const Real sign = std::copysign(Real(1), n.z);
  const Real a = -1 / (sign + n.z);
  const Real c = n.x * n.y * a;
  *t = {1 + sign * n.x * n.x * a, sign * c, -sign * n.x};
  *b = {c, sign + n.y * n.y * a, -n.y};
}

// Shared driver: runs `shade(px, py, rng) -> Vec3` for every valid domain
// pixel and does the bookkeeping.
template <typename Shade>
EffectOutput ForEachDomainPixel(const GBuffer& g, const EffectParams& p,
                                const Mask& domain, Shade&& shade) {
  const int w = domain.width(), h = domain.height();
  EffectOutput out{Image3(w, h), Mask(w, h, 0), 0, 0};
  ParallelForRows(h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      if (!domain(x, y)) continue;
      const auto [px, py] = GBufferPixelFor(g, x, y, w, h);
      if (!g.valid(px, py)) continue;
      out.shaded(x, y) = 1;
      out.layer(x, y) = shade(px, py, PixelRng(p.seed, x, y));
    }
  });
  out.shaded_pixels = Popcount(out.shaded);
  out.samples_evaluated = out.shaded_pixels * static_cast<std::uint64_t>(p.samples);
  return out;
}

Real ShadowBias(const EffectParams& p, const ShadowMap& sm) {
  return p.shadow_bias ? *p.shadow_bias : sm.DefaultBias();
}

}  // namespace

EffectOutput EvalSsao(const GBuffer& g, const EffectParams& p, const Mask& domain) {
  CheckParams(p, domain);
  const Real bias = p.ssao_bias * p.radius;
  return ForEachDomainPixel(g, p, domain, [&](int px, int py, const PixelRng& rng) {
    const Vec3& pos = g.position(px, py);
    const Vec3& n = g.normal(px, py);
    Vec3 t, b;
    TangentFrame(n, &t, &b);
    int occluded = 0;
    for (int k = 0; k < p.samples; ++k) {
      // Cosine-distributed direction, uniformly distributed distance.
      const Real u1 = rng.Uniform(k, 0), u2 = rng.Uniform(k, 1), u3 = rng.Uniform(k, 2);
      const Real r = std::sqrt(u1), phi = 2 * M_PI * u2;
      const Vec3 dir = t * (r * std::cos(phi)) + b * (r * std::sin(phi)) +
                       n * std::sqrt(std::max(Real(0), 1 - u1));
      const Vec3 s = pos + dir * (p.radius * u3);
      const auto proj = g.view.Project(s);
      if (!proj) continue;
      const int sx = static_cast<int>(std::floor((*proj)[0]));
      const int sy = static_cast<int>(std::floor((*proj)[1]));
      if (!g.valid.InBounds(sx, sy) || !g.valid(sx, sy)) continue;
      const Real scene_depth = g.depth(sx, sy);
      const Real sample_depth = -s.z;
      if (scene_depth < sample_depth - bias && sample_depth - scene_depth < p.radius) {
        ++occluded;
      }
    }
    return Vec3::Splat(1 - Real(occluded) / p.samples);
  });
}

std::vector<std::array<Real, 2>> PcfTaps(const EffectParams& p) {
  const PixelRng rng(p.seed, -1, -1);
  std::vector<std::array<Real, 2>> taps(p.samples);
  for (int k = 0; k < p.samples; ++k) {
    const Real r = p.pcf_radius * std::sqrt(rng.Uniform(k, 0));
    const Real phi = 2 * M_PI * rng.Uniform(k, 1);
    taps[k] = {r * std::cos(phi), r * std::sin(phi)};
  }
  return taps;
}

EffectOutput EvalSsm(const GBuffer& g, const ShadowMap& sm, const DirectionalLight& light,
                     const EffectParams& p, const Mask& domain) {
  CheckParams(p, domain);
  const Real bias = ShadowBias(p, sm);
  const Vec3 to_light = g.view.DirectionToView(-light.direction);
  const std::vector<std::array<Real, 2>> taps = PcfTaps(p);
  const Real res = sm.resolution();
  return ForEachDomainPixel(g, p, domain, [&](int px, int py, const PixelRng&) {
    const Vec3& n = g.normal(px, py);
    const Real cos_l = std::max(Real(0), Dot(n, to_light));
    const Vec3 l = sm.ToLightSpace(g.view.ViewToWorld(g.position(px, py)));
    int lit = 0;
    for (const auto& [ox, oy] : taps) {
      // One extra texel covers nearest-texel quantization at the tap.
      const Real b = SlopeScaledBias(sm, bias, cos_l, std::hypot(ox, oy) + 1);
      lit += sm.Lit(l.x + ox / res, l.y + oy / res, l.z, b);
    }
    const Real visibility = Real(lit) / p.samples;
    return Clamp01(g.albedo(px, py) * (light.ambient + light.intensity * (visibility * cos_l)));
  });
}

Image3 DirectRadiance(const GBuffer& g, const ShadowMap& sm, const DirectionalLight& light,
                      Real shadow_bias) {
  const Vec3 to_light = g.view.DirectionToView(-light.direction);
  Image3 out(g.width(), g.height());
  ParallelForRows(g.height(), [&](int y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!g.valid(x, y)) continue;
      const Real cos_l = std::max(Real(0), Dot(g.normal(x, y), to_light));
      if (cos_l == 0) continue;
      if (!ReceiverLit(sm, g.view.ViewToWorld(g.position(x, y)),
                       g.view.DirectionToWorld(g.normal(x, y)), shadow_bias)) {
        continue;
      }
      out(x, y) = g.albedo(x, y) * light.intensity * cos_l;
    }
  });
  return out;
}

EffectOutput EvalSsgi(const GBuffer& g, const ShadowMap& sm, const DirectionalLight& light,
                      const EffectParams& p, const Mask& domain) {
  CheckParams(p, domain);
  const Image3 direct = DirectRadiance(g, sm, light, ShadowBias(p, sm));
  const Real r2 = p.radius * p.radius;
  const Real eps = 1e-4 * r2;
  const Real norm = r2 / p.samples;
  return ForEachDomainPixel(g, p, domain, [&](int px, int py, const PixelRng& rng) {
    const Vec3& pos = g.position(px, py);
    const Vec3& n = g.normal(px, py);
    const Real radius_px = p.radius * g.view.focal() / g.depth(px, py);
    Vec3 sum;
    for (int k = 0; k < p.samples; ++k) {
      const Real r = radius_px * std::sqrt(rng.Uniform(k, 0));
      const Real phi = 2 * M_PI * rng.Uniform(k, 1);
      const int sx = static_cast<int>(std::floor(px + 0.5 + r * std::cos(phi)));
      const int sy = static_cast<int>(std::floor(py + 0.5 + r * std::sin(phi)));
      if (!g.valid.InBounds(sx, sy) || !g.valid(sx, sy)) continue;
      if (sx == px && sy == py) continue;
      const Vec3 d = g.position(sx, sy) - pos;
      const Real dist2 = Dot(d, d);
      if (dist2 == 0) continue;
      const Vec3 omega = d / std::sqrt(dist2);
      const Real form = std::max(Real(0), Dot(n, omega)) *
                        std::max(Real(0), -Dot(g.normal(sx, sy), omega)) / (eps + dist2);
      sum += direct(sx, sy) * form;
    }
    return Clamp01(g.albedo(px, py) * sum * norm);
  });
}

EffectOutput EvalEffect(EffectKind kind, const GBuffer& g, const ShadowMap& sm,
                        const DirectionalLight& light, const EffectParams& p,
                        const Mask& domain) {
  switch (kind) {
    case EffectKind::kSsao: return EvalSsao(g, p, domain);
    case EffectKind::kSsm: return EvalSsm(g, sm, light, p, domain);
    case EffectKind::kSsgi: return EvalSsgi(g, sm, light, p, domain);
  }
  throw InvariantError("unknown effect");
}

}  // namespace mrr
