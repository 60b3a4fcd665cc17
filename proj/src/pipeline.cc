#include "mrr/pipeline.h"

#include <chrono>
#include <cmath>

#include "mrr/error.h"
#include "mrr/parallel.h"
#include "mrr/random.h"

namespace mrr {

namespace {

class StageClock {
 public:
  explicit StageClock(StageTimings* t) : timings_(t), last_(Clock::now()) {}
  void Lap(const std::string& stage) {
    const auto now = Clock::now();
    timings_->ms[stage] += std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  using Clock = std::chrono::steady_clock;
  StageTimings* timings_;
  Clock::time_point last_;
};

void RequireLadderSize(int width, int height) {
  Require(width % 8 == 0 && height % 8 == 0,
          "frame size " + std::to_string(width) + "x" + std::to_string(height) +
              " is not divisible by 8");
}

}  // namespace

std::vector<LevelConfig> DefaultLevels(EffectKind kind) {
  struct Row {
    Real variance, weight;
    bool enabled;
  };
  std::array<Row, kNumLevels> rows;
  switch (kind) {
    case EffectKind::kSsao:
      rows = {{{0.924, 100, true}, {1.848, 50, true}, {3.696, 20, true}, {0, 1, true}}};
      break;
    case EffectKind::kSsm:
      rows = {{{0.924, 1000, true}, {1.848, 1000, true}, {3.696, 1000, true}, {0, 1, true}}};
      break;
    case EffectKind::kSsgi:
      // Level 2 is unused; its numbers only keep the config well-formed.
      rows = {{{0.924, 1000, true}, {0, 1, false}, {0.924, 100, true}, {0, 1, true}}};
      break;
  }
  std::vector<LevelConfig> levels;
  for (int i = 0; i < kNumLevels; ++i) {
    levels.push_back({i + 1, kLevelDivisors[i], rows[i].variance, rows[i].weight,
                      rows[i].enabled});
  }
  return levels;
}

PipelineConfig PipelineConfig::Defaults(EffectKind kind) {
  PipelineConfig cfg;
  cfg.effect = kind;
  cfg.effect_params = EffectParams::Defaults(kind);
  cfg.levels = DefaultLevels(kind);
  cfg.edge.use_shadow_edges = kind == EffectKind::kSsm;
  return cfg;
}

void PipelineConfig::Validate() const {
  ValidateLevels(levels);
  Require(effect_params.samples >= 1, "sample count must be >= 1");
  Require(effect_params.radius > 0, "effect radius must be > 0");
  Require(effect_params.pcf_radius > 0, "PCF radius must be > 0");
  Require(ssao_blur.variance >= 0, "SSAO blur variance must be >= 0");
  Require(shadow_map_resolution >= 8, "shadow map resolution must be >= 8");
  Require(edge.use_normal_edges || edge.use_depth_edges || edge.use_shadow_edges,
          "at least one edge source must be enabled");
}

FrameInputs PrepareFrame(const PipelineConfig& cfg, const Scene& scene, int width, int height) {
  scene.Validate();
  return {RasterizeGBuffer(scene, width, height),
          RasterizeShadowMap(scene, cfg.shadow_map_resolution), scene.light};
}

std::uint64_t LevelSeed(std::uint64_t seed, int level_index) {
  return level_index == 1 ? seed : Mix64(seed + static_cast<std::uint64_t>(level_index));
}

EffectOutput RenderLevel(const PipelineConfig& cfg, const LevelConfig& level,
                         const MaskPyramid& pyramid, const FrameInputs& frame) {
  Require(level.enabled, "level " + std::to_string(level.index) + " is disabled");
  const MaskLevel* ml = pyramid.level(level.index);
  Require(ml != nullptr, "pyramid has no level " + std::to_string(level.index));
  EffectParams params = cfg.effect_params;
  params.seed = LevelSeed(cfg.effect_params.seed, level.index);
  return EvalEffect(cfg.effect, frame.gbuffer, frame.shadow_map, frame.light, params,
                    ml->stencil);
}

Image3 BilateralBlurMasked(const Image3& layer, const Mask& stencil, Real variance) {
  Require(layer.SameShape(stencil), "layer and stencil shapes differ");
  Require(std::isfinite(variance) && variance >= 0, "blur variance must be >= 0");
  const int w = layer.width(), h = layer.height();
  Image3 out(w, h);
  if (variance == 0) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        if (stencil(x, y)) out(x, y) = layer(x, y);
      }
    }
    return out;
  }
  const int r = static_cast<int>(std::ceil(3 * std::sqrt(variance)));
  std::vector<Real> g(2 * r + 1);
  for (int i = -r; i <= r; ++i) g[i + r] = std::exp(-Real(i * i) / (2 * variance));
  ParallelForRows(h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      if (!stencil(x, y)) continue;
      Vec3 sum;
      Real wsum = 0;
      for (int dy = -r; dy <= r; ++dy) {
        const int yy = y + dy;
        if (yy < 0 || yy >= h) continue;
        for (int dx = -r; dx <= r; ++dx) {
          const int xx = x + dx;
          if (xx < 0 || xx >= w || !stencil(xx, yy)) continue;
          const Real wt = g[dx + r] * g[dy + r];
          sum += layer(xx, yy) * wt;
          wsum += wt;
        }
      }
      out(x, y) = sum / wsum;
    }
  });
  return out;
}

Image3 Blend(const MaskPyramid& pyramid, const std::vector<LevelConfig>& levels,
             const LevelLayers& layers) {
  ValidateLevels(levels);
  const int w = pyramid.full_width, h = pyramid.full_height;
  const std::vector<int> order = pyramid.CoarseToFine();
  Require(!order.empty() && order.front() == kNumLevels, "pyramid lacks the coarsest level");
  for (int i : order) {
    Require(layers[i - 1].has_value(), "missing layer for level " + std::to_string(i));
    Require(levels[i - 1].enabled, "layer given for disabled level " + std::to_string(i));
    const MaskLevel& ml = *pyramid.level(i);
    Require(layers[i - 1]->layer.SameShape(ml.alpha),
            "layer " + std::to_string(i) + " does not match its mask resolution");
  }

  const EffectOutput& base = *layers[kNumLevels - 1];
  Image3 composite = UpsampleDefined(base.layer, base.shaded, w, h);
  for (size_t k = 1; k < order.size(); ++k) {
    const int i = order[k];
    const EffectOutput& out = *layers[i - 1];
    const Image3 color = UpsampleDefined(out.layer, out.shaded, w, h);
    const ImageF alpha = Upsample(pyramid.level(i)->alpha, w, h);
    const Real weight = levels[i - 1].weight;
    auto c = composite.pixels();
    auto src = color.pixels();
    auto a = alpha.pixels();
    for (size_t p = 0; p < c.size(); ++p) {
      const Real t = std::min(a[p] * weight, Real(1));
      c[p] = src[p] * t + c[p] * (1 - t);
    }
  }
  return composite;
}

MultiResResult RunMultiRes(const PipelineConfig& cfg, const FrameInputs& frame) {
  cfg.Validate();
  const GBuffer& g = frame.gbuffer;
  RequireLadderSize(g.width(), g.height());
  MultiResResult result;
  StageClock clock(&result.timings);

  if (cfg.force_full_edges) {
    const int w = g.width(), h = g.height();
    result.edges = {ImageF(w, h, 1), Mask(w, h, 0), Mask(w, h, 0), Mask(w, h, 0)};
  } else {
    result.edges = BuildEdgeImage(g, &frame.shadow_map, cfg.edge);
  }
  clock.Lap("edges");
  result.pyramid = BuildPyramid(result.edges, cfg.levels, cfg.pyramid);
  clock.Lap("pyramid");

  for (const LevelConfig& level : cfg.levels) {
    if (!level.enabled) continue;
    EffectOutput out = RenderLevel(cfg, level, result.pyramid, frame);
    if (cfg.effect == EffectKind::kSsao && cfg.ssao_blur.enabled) {
      out.layer = BilateralBlurMasked(out.layer, out.shaded, cfg.ssao_blur.variance);
    }
    result.work.levels.push_back({level.index, level.divisor, out.layer.width(),
                                  out.layer.height(), out.shaded_pixels,
                                  out.samples_evaluated});
    result.layers[level.index - 1] = std::move(out);
    clock.Lap("level" + std::to_string(level.index));
  }

  result.image = Blend(result.pyramid, cfg.levels, result.layers);
  clock.Lap("blend");

  result.work.reference_samples =
      Popcount(g.valid) * static_cast<std::uint64_t>(cfg.effect_params.samples);
  result.work.Finalize();
  return result;
}

MultiResResult RunMultiRes(const PipelineConfig& cfg, const Scene& scene, int width,
                           int height) {
  RequireLadderSize(width, height);
  return RunMultiRes(cfg, PrepareFrame(cfg, scene, width, height));
}

ReferenceResult RunReference(const PipelineConfig& cfg, const FrameInputs& frame) {
  const GBuffer& g = frame.gbuffer;
  RequireLadderSize(g.width(), g.height());
  ReferenceResult result;
  StageClock clock(&result.timings);
  const Mask everything(g.width(), g.height(), 1);
  EffectParams params = cfg.effect_params;
  params.seed = LevelSeed(cfg.effect_params.seed, 1);
  EffectOutput out =
      EvalEffect(cfg.effect, g, frame.shadow_map, frame.light, params, everything);
  if (cfg.effect == EffectKind::kSsao && cfg.ssao_blur.enabled) {
    out.layer = BilateralBlurMasked(out.layer, out.shaded, cfg.ssao_blur.variance);
  }
  clock.Lap("reference");
  result.image = std::move(out.layer);
  result.shaded_pixels = out.shaded_pixels;
  result.samples = out.samples_evaluated;
  return result;
}

ReferenceResult RunReference(const PipelineConfig& cfg, const Scene& scene, int width,
                             int height) {
  RequireLadderSize(width, height);
  return RunReference(cfg, PrepareFrame(cfg, scene, width, height));
}

}  // namespace mrr
