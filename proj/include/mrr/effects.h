#ifndef MRR_EFFECTS_H_
#define MRR_EFFECTS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrr/image.h"
#include "mrr/scene.h"

namespace mrr {

enum class EffectKind { kSsao, kSsm, kSsgi };

std::string_view EffectName(EffectKind kind);  // "ssao", "ssm", "ssgi"
std::optional<EffectKind> ParseEffect(std::string_view name);

struct EffectParams {
  int samples = 64;
  // World units: SSAO hemisphere radius, SSGI gather radius.
  Real radius = 0.5;
  // Shadow-map texels (SSM only).
  Real pcf_radius = 2.5;
  std::uint64_t seed = 1;
  // SSAO depth-comparison bias as a fraction of `radius`.
  Real ssao_bias = 0.025;
  // Shadow-test bias in world units; unset means ShadowMap::DefaultBias.
  std::optional<Real> shadow_bias;

  static EffectParams Defaults(EffectKind kind);
};

struct EffectOutput {
  Image3 layer;  // at the domain's resolution; zero outside the shaded set
  Mask shaded;   // domain pixels whose G-buffer sample is valid
  std::uint64_t shaded_pixels = 0;
  std::uint64_t samples_evaluated = 0;
};

// All evaluators shade the pixels of `domain`, whose resolution may be
// coarser than the G-buffer: grid pixel (X, Y) reads the G-buffer at the
// full-resolution pixel containing its center. Pixels whose G-buffer sample
// is background are left at zero and cost no samples. Random numbers are a
// pure function of (seed, X, Y, sample index).

// Ambient occlusion: fraction of hemisphere sample points around the surface
// point that end up behind the depth buffer. Output is 1 - occlusion.
EffectOutput EvalSsao(const GBuffer& g, const EffectParams& p, const Mask& domain);

// Percentage-closer filtered directional light plus ambient. The PCF tap
// pattern is shared by all pixels so the filtered visibility is monotone
// across straight shadow boundaries.
EffectOutput EvalSsm(const GBuffer& g, const ShadowMap& sm, const DirectionalLight& light,
                     const EffectParams& p, const Mask& domain);

// One-bounce indirect light gathered from directly lit G-buffer pixels within
// the projected gather radius. Direct light is not included in the output.
EffectOutput EvalSsgi(const GBuffer& g, const ShadowMap& sm,
                      const DirectionalLight& light, const EffectParams& p,
                      const Mask& domain);

EffectOutput EvalEffect(EffectKind kind, const GBuffer& g, const ShadowMap& sm,
                        const DirectionalLight& light, const EffectParams& p,
                        const Mask& domain);

// Directly lit radiance of every G-buffer pixel under a single hard shadow
// test: albedo * lit * max(0, n . -L) * intensity. Background pixels are zero.
Image3 DirectRadiance(const GBuffer& g, const ShadowMap& sm, const DirectionalLight& light,
                      Real shadow_bias);

// Full-resolution pixel sampled by grid pixel (x, y) of a grid_w x grid_h
// evaluation grid.
std::array<int, 2> GBufferPixelFor(const GBuffer& g, int x, int y, int grid_w, int grid_h);

// Offsets (in shadow-map texels) of the shared PCF tap pattern.
std::vector<std::array<Real, 2>> PcfTaps(const EffectParams& p);

}  // namespace mrr

#endif  // MRR_EFFECTS_H_
