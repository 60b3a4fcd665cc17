#include "mrr/metrics.h"

#include <algorithm>
#include <cmath>

#include "mrr/error.h"

namespace mrr {

void WorkReport::Finalize() {
  total_shaded_pixels = 0;
  total_samples = 0;
  for (const LevelWork& l : levels) {
    total_shaded_pixels += l.shaded_pixels;
    total_samples += l.samples;
  }
  work_ratio = reference_samples > 0
                   ? static_cast<Real>(total_samples) / static_cast<Real>(reference_samples)
                   : 0;
}

Real WorkReduction(const WorkReport& work) {
  Require(work.reference_samples > 0, "work reduction needs reference samples > 0");
  return 1 - static_cast<Real>(work.total_samples) / static_cast<Real>(work.reference_samples);
}

QualityReport RmsError(const Image3& a, const Image3& b, Real enhancement) {
  Require(a.SameShape(b), "RMS error of images with different dimensions");
  QualityReport q;
  q.difference = Image3(a.width(), a.height());
  const auto pa = a.pixels(), pb = b.pixels();
  auto pd = q.difference.pixels();
  Real sum = 0;
  for (size_t i = 0; i < pa.size(); ++i) {
    Vec3 d = pa[i] - pb[i];
    d = {std::fabs(d.x), std::fabs(d.y), std::fabs(d.z)};
    sum += Dot(d, d);
    q.max_abs = std::max(q.max_abs, MaxComponent(d));
    pd[i] = Clamp01(d * enhancement);
  }
  q.rms = std::sqrt(sum / (3.0 * static_cast<Real>(pa.size())));
  return q;
}

}  // namespace mrr
