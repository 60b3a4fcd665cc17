#include "support/checks.h"

#include <cmath>

#include "mrr/pipeline.h"

namespace mrr::check {

ImageF RandomEdgeImage(std::mt19937_64& rng, int width, int height) {
  ImageF img(width, height, 0);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> px(0, width - 1), py(0, height - 1);
  const int k = kind(rng);
  if (k == 0) return img;
  if (k == 1) return ImageF(width, height, 1);
  if (k <= 4) {
    // Scattered pixels at a random density.
    std::uniform_real_distribution<Real> u(0, 1);
    const Real density = std::pow(10.0, -3 + 2.5 * u(rng));
    for (Real& v : img.pixels()) v = u(rng) < density;
    return img;
  }
  if (k <= 7) {
    // Straight segments, like silhouettes and creases.
    std::uniform_int_distribution<int> count(1, 6);
    for (int s = count(rng); s > 0; --s) {
      const int x0 = px(rng), y0 = py(rng), x1 = px(rng), y1 = py(rng);
      const int steps = std::max(std::abs(x1 - x0), std::abs(y1 - y0)) + 1;
      for (int t = 0; t <= steps; ++t) {
        const int x = x0 + (x1 - x0) * t / steps, y = y0 + (y1 - y0) * t / steps;
        img(x, y) = 1;
      }
    }
    return img;
  }
  // Filled rectangles.
  std::uniform_int_distribution<int> count(1, 3);
  for (int s = count(rng); s > 0; --s) {
    int x0 = px(rng), x1 = px(rng), y0 = py(rng), y1 = py(rng);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) img(x, y) = 1;
    }
  }
  return img;
}

std::vector<LevelConfig> RandomLevels(std::mt19937_64& rng, Real max_variance) {
  std::uniform_int_distribution<int> effect(0, 2);
  std::uniform_real_distribution<Real> var(0, max_variance);
  std::vector<LevelConfig> levels = DefaultLevels(static_cast<EffectKind>(effect(rng)));
  for (int i = 0; i + 1 < kNumLevels; ++i) {
    if (levels[i].enabled) levels[i].variance = var(rng);
  }
  return levels;
}

std::vector<std::string> PyramidViolations(const MaskPyramid& pyramid,
                                           const std::vector<LevelConfig>& levels) {
  std::vector<std::string> out;
  const int w = pyramid.full_width, h = pyramid.full_height;
  int previous = 0;  // next finer enabled level
  for (int i = 1; i <= kNumLevels; ++i) {
    const MaskLevel* l = pyramid.level(i);
    const std::string name = "level " + std::to_string(i);
    if (!levels[i - 1].enabled) {
      if (l != nullptr) out.push_back(name + " is disabled but present");
      continue;
    }
    if (l == nullptr) {
      out.push_back(name + " is enabled but missing");
      continue;
    }
    const int d = kLevelDivisors[i - 1];
    if (l->alpha.width() != (w + d - 1) / d || l->alpha.height() != (h + d - 1) / d ||
        !l->alpha.SameShape(l->stencil)) {
      out.push_back(name + " has the wrong shape");
      continue;
    }
    for (int y = 0; y < l->alpha.height(); ++y) {
      for (int x = 0; x < l->alpha.width(); ++x) {
        const Real a = l->alpha(x, y);
        if (!(a >= 0 && a <= 1)) out.push_back(name + " alpha outside [0, 1]");
        if (l->stencil(x, y) != (a > 0)) out.push_back(name + " stencil != (alpha > 0)");
        if (i == kNumLevels && !l->stencil(x, y)) out.push_back(name + " not complete");
      }
    }
    if (previous != 0) {
      const MaskLevel* fine = pyramid.level(previous);
      const int ratio = d / kLevelDivisors[previous - 1];
      for (int y = 0; y < fine->stencil.height(); ++y) {
        for (int x = 0; x < fine->stencil.width(); ++x) {
          if (fine->stencil(x, y) && !l->stencil(x / ratio, y / ratio)) {
            out.push_back("level " + std::to_string(previous) + " pixel (" +
                          std::to_string(x) + ", " + std::to_string(y) +
                          ") not included in " + name);
          }
        }
      }
    }
    previous = i;
  }
  return out;
}

bool StencilsContained(const MaskPyramid& small, const MaskPyramid& large) {
  for (int i = 1; i <= kNumLevels; ++i) {
    const MaskLevel* a = small.level(i);
    const MaskLevel* b = large.level(i);
    if ((a == nullptr) != (b == nullptr)) return false;
    if (a == nullptr) continue;
    if (!a->stencil.SameShape(b->stencil)) return false;
    for (size_t k = 0; k < a->stencil.size(); ++k) {
      if (a->stencil.pixels()[k] && !b->stencil.pixels()[k]) return false;
    }
  }
  return true;
}

}  // namespace mrr::check
