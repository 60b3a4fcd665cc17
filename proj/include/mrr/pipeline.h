#ifndef MRR_PIPELINE_H_
#define MRR_PIPELINE_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrr/effects.h"
#include "mrr/mask.h"
#include "mrr/metrics.h"
#include "mrr/pyramid.h"
#include "mrr/scene.h"

namespace mrr {

// Per-effect mask variances and blend weights; SSGI skips level 2.
std::vector<LevelConfig> DefaultLevels(EffectKind kind);

struct SsaoBlur {
  bool enabled = true;
  Real variance = 1.0;  // at each level's own resolution
};

struct PipelineConfig {
  EffectKind effect = EffectKind::kSsao;
  EffectParams effect_params;
  EdgeParams edge;
  std::vector<LevelConfig> levels;
  SsaoBlur ssao_blur;
  PyramidParams pyramid;
  int shadow_map_resolution = 1024;
  // Replace the detected edge image with all ones (every pixel at full
  // resolution). Used to check the decomposition against the reference.
  bool force_full_edges = false;

  // Defaults for an effect; SSM additionally takes shadow edges.
  static PipelineConfig Defaults(EffectKind kind);
  void Validate() const;
};

// Everything the effects read for one frame.
struct FrameInputs {
  GBuffer gbuffer;
  ShadowMap shadow_map;
  DirectionalLight light;
};

FrameInputs PrepareFrame(const PipelineConfig& cfg, const Scene& scene, int width, int height);

// Seed used for a level's RNG streams. Level 1 shares the reference seed.
std::uint64_t LevelSeed(std::uint64_t seed, int level_index);

// Renders one enabled level at its resolution, restricted to its stencil.
EffectOutput RenderLevel(const PipelineConfig& cfg, const LevelConfig& level,
                         const MaskPyramid& pyramid, const FrameInputs& frame);

// Gaussian blur whose weights are restricted to stencil pixels and
// renormalized; pixels outside the stencil stay zero.
Image3 BilateralBlurMasked(const Image3& layer, const Mask& stencil, Real variance);

// Per-level rendered layers, indexed by level - 1.
using LevelLayers = std::array<std::optional<EffectOutput>, kNumLevels>;

// Upsamples every layer to full resolution and composites from the coarsest
// level toward the finest with
//   c'_i = c_i * min(a_i w_i, 1) + c'_{i-1} * (1 - min(a_i w_i, 1)),
// starting from the coarsest layer.
Image3 Blend(const MaskPyramid& pyramid, const std::vector<LevelConfig>& levels,
             const LevelLayers& layers);

struct StageTimings {
  std::map<std::string, double> ms;
};

struct MultiResResult {
  Image3 image;
  WorkReport work;
  EdgeImage edges;
  MaskPyramid pyramid;
  LevelLayers layers;
  StageTimings timings;
};

struct ReferenceResult {
  Image3 image;
  std::uint64_t shaded_pixels = 0;
  std::uint64_t samples = 0;
  StageTimings timings;
};

// Multi-resolution path. Width and height must be divisible by 8.
MultiResResult RunMultiRes(const PipelineConfig& cfg, const FrameInputs& frame);
MultiResResult RunMultiRes(const PipelineConfig& cfg, const Scene& scene, int width, int height);

// Full-resolution path over every covered pixel; the level config is unused.
ReferenceResult RunReference(const PipelineConfig& cfg, const FrameInputs& frame);
ReferenceResult RunReference(const PipelineConfig& cfg, const Scene& scene, int width, int height);

}  // namespace mrr

#endif  // MRR_PIPELINE_H_
