#ifndef MRR_PYRAMID_H_
#define MRR_PYRAMID_H_

#include <array>
#include <optional>
#include <vector>

#include "mrr/image.h"
#include "mrr/mask.h"

namespace mrr {

inline constexpr int kNumLevels = 4;
// Per-axis resolution divisor of level i (1-based): full, half, quarter,
// eighth.
inline constexpr std::array<int, kNumLevels> kLevelDivisors = {1, 2, 4, 8};

struct LevelConfig {
  int index = 1;      // 1 = full resolution ... 4 = coarsest
  int divisor = 1;
  Real variance = 0;  // mask blur sigma^2 at the level's own resolution
  Real weight = 1;    // blend weight w_i
  bool enabled = true;
};

// Checks the four-level ladder: indices 1..4 in order, divisors 1/2/4/8,
// finite non-negative variances, positive weights, and a coarsest level that
// is enabled with weight 1 and variance 0.
void ValidateLevels(const std::vector<LevelConfig>& levels);

struct PyramidParams {
  // Blurred mask values below this are flushed to zero so Gaussian tails do
  // not grow stencils without bound.
  Real blur_cutoff = 1e-6;
};

struct MaskLevel {
  int index = 0;
  int divisor = 1;
  ImageF alpha;  // in [0, 1], at the level's resolution
  Mask stencil;  // alpha > 0
};

// Inclusive decomposition: every stencil pixel of an enabled level lies
// inside the stencil of the next enabled coarser level, and the coarsest
// level covers the whole frame.
struct MaskPyramid {
  int full_width = 0;
  int full_height = 0;
  std::array<std::optional<MaskLevel>, kNumLevels> levels;

  const MaskLevel* level(int index) const {
    const auto& l = levels.at(index - 1);
    return l ? &*l : nullptr;
  }
  // Enabled level indices ordered from coarsest to finest.
  std::vector<int> CoarseToFine() const;
};

// Max over divisor x divisor blocks; partial blocks at the right and bottom
// borders produce an extra (ceil-sized) output texel.
ImageF DownsampleMax(const ImageF& mask, int divisor);

// Separable, normalized, clamp-to-edge Gaussian with radius ceil(3 sigma).
// variance == 0 returns the input. Output is clamped to [0, 1] and values
// below `cutoff` are set to zero.
ImageF GaussianBlur(const ImageF& mask, Real variance, Real cutoff = 1e-6);

MaskPyramid BuildPyramid(const EdgeImage& edges, const std::vector<LevelConfig>& levels,
                         const PyramidParams& params = {});
MaskPyramid BuildPyramid(const ImageF& edge_mask, const std::vector<LevelConfig>& levels,
                         const PyramidParams& params = {});

// Debug visualization: red marks level-1 stencil pixels, green level 2 and
// blue level 3, each shown at full resolution.
Image3 PyramidVisualization(const MaskPyramid& pyramid);

}  // namespace mrr

#endif  // MRR_PYRAMID_H_
