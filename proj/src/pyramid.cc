#include "mrr/pyramid.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mrr/error.h"

namespace mrr {

void ValidateLevels(const std::vector<LevelConfig>& levels) {
  Require(levels.size() == kNumLevels, "expected exactly 4 level configs");
  for (int i = 0; i < kNumLevels; ++i) {
    const LevelConfig& l = levels[i];
    const std::string where = "level " + std::to_string(i + 1) + ": ";
    Require(l.index == i + 1, where + "levels must be listed in order 1..4");
    Require(l.divisor == kLevelDivisors[i], where + "divisor must be " +
                                                std::to_string(kLevelDivisors[i]));
    Require(std::isfinite(l.variance) && l.variance >= 0, where + "variance must be >= 0");
    Require(std::isfinite(l.weight) && l.weight > 0, where + "weight must be > 0");
  }
  const LevelConfig& last = levels.back();
  Require(last.enabled, "the coarsest level must be enabled");
  Require(last.weight == 1 && last.variance == 0,
          "the coarsest level must have weight 1 and variance 0");
}

std::vector<int> MaskPyramid::CoarseToFine() const {
  std::vector<int> order;
  for (int i = kNumLevels; i >= 1; --i) {
    if (levels[i - 1]) order.push_back(i);
  }
  return order;
}

ImageF DownsampleMax(const ImageF& mask, int divisor) {
  Require(divisor == 1 || divisor == 2 || divisor == 4 || divisor == 8,
          "divisor must be 1, 2, 4 or 8");
  Require(mask.width() >= divisor && mask.height() >= divisor,
          "mask smaller than the divisor");
  if (divisor == 1) return mask;
  const int w = (mask.width() + divisor - 1) / divisor;
  const int h = (mask.height() + divisor - 1) / divisor;
  ImageF out(w, h, 0);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      Real& o = out(x / divisor, y / divisor);
      o = std::max(o, mask(x, y));
    }
  }
  return out;
}

namespace {

std::vector<Real> GaussianKernel(Real variance) {
  const Real sigma = std::sqrt(variance);
  const int radius = static_cast<int>(std::ceil(3 * sigma));
  std::vector<Real> k(2 * radius + 1);
  Real sum = 0;
  for (int i = -radius; i <= radius; ++i) {
    k[i + radius] = std::exp(-Real(i * i) / (2 * variance));
    sum += k[i + radius];
  }
  for (Real& v : k) v /= sum;
  return k;
}

}  // namespace

ImageF GaussianBlur(const ImageF& mask, Real variance, Real cutoff) {
  Require(std::isfinite(variance) && variance >= 0, "blur variance must be >= 0");
  if (variance == 0) return mask;
  const std::vector<Real> k = GaussianKernel(variance);
  const int r = static_cast<int>(k.size() / 2);
  const int w = mask.width(), h = mask.height();
  ImageF tmp(w, h, 0), out(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      Real s = 0;
      for (int i = -r; i <= r; ++i) s += k[i + r] * mask(std::clamp(x + i, 0, w - 1), y);
      tmp(x, y) = s;
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      Real s = 0;
      for (int i = -r; i <= r; ++i) s += k[i + r] * tmp(x, std::clamp(y + i, 0, h - 1));
      s = std::clamp(s, Real(0), Real(1));
      out(x, y) = s < cutoff ? 0 : s;
    }
  }
  return out;
}

MaskPyramid BuildPyramid(const EdgeImage& edges, const std::vector<LevelConfig>& levels,
                         const PyramidParams& params) {
  return BuildPyramid(edges.mask, levels, params);
}

MaskPyramid BuildPyramid(const ImageF& edge_mask, const std::vector<LevelConfig>& levels,
                         const PyramidParams& params) {
  ValidateLevels(levels);
  Require(params.blur_cutoff >= 0, "blur cutoff must be >= 0");
  MaskPyramid p;
  p.full_width = edge_mask.width();
  p.full_height = edge_mask.height();

  for (const LevelConfig& cfg : levels) {
    if (!cfg.enabled) continue;
    MaskLevel level;
    level.index = cfg.index;
    level.divisor = cfg.divisor;
    if (cfg.index == kNumLevels) {
      const ImageF down = DownsampleMax(edge_mask, cfg.divisor);
      level.alpha = ImageF(down.width(), down.height(), 1);
    } else {
      level.alpha = GaussianBlur(DownsampleMax(edge_mask, cfg.divisor), cfg.variance,
                                 params.blur_cutoff);
    }
    p.levels[cfg.index - 1] = std::move(level);
  }

  // Raise each next-coarser enabled level to cover the finer one.
  const std::vector<int> fine_to_coarse = [&] {
    std::vector<int> v = p.CoarseToFine();
    std::reverse(v.begin(), v.end());
    return v;
  }();
  for (size_t k = 0; k + 1 < fine_to_coarse.size(); ++k) {
    const MaskLevel& fine = *p.levels[fine_to_coarse[k] - 1];
    MaskLevel& coarse = *p.levels[fine_to_coarse[k + 1] - 1];
    const int ratio = coarse.divisor / fine.divisor;
    for (int y = 0; y < fine.alpha.height(); ++y) {
      for (int x = 0; x < fine.alpha.width(); ++x) {
        Real& c = coarse.alpha(x / ratio, y / ratio);
        c = std::max(c, fine.alpha(x, y));
      }
    }
  }

  for (auto& level : p.levels) {
    if (!level) continue;
    level->stencil = Mask(level->alpha.width(), level->alpha.height(), 0);
    auto a = level->alpha.pixels();
    auto s = level->stencil.pixels();
    for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] > 0;
  }
  return p;
}

Image3 PyramidVisualization(const MaskPyramid& pyramid) {
  Image3 out(pyramid.full_width, pyramid.full_height);
  const Vec3 colors[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      for (int i = 1; i < kNumLevels; ++i) {
        const MaskLevel* l = pyramid.level(i);
        if (l && l->stencil(x / l->divisor, y / l->divisor)) {
          out(x, y) = colors[i - 1];
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace mrr
