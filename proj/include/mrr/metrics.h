#ifndef MRR_METRICS_H_
#define MRR_METRICS_H_

#include <cstdint>
#include <vector>

#include "mrr/image.h"

namespace mrr {

struct LevelWork {
  int index = 0;
  int divisor = 1;
  int width = 0;
  int height = 0;
  std::uint64_t shaded_pixels = 0;
  std::uint64_t samples = 0;
};

// Shading work of one multi-resolution frame. reference_samples is what the
// full-resolution path spends on the same frame.
struct WorkReport {
  std::vector<LevelWork> levels;  // enabled levels, finest first
  std::uint64_t total_shaded_pixels = 0;
  std::uint64_t total_samples = 0;
  std::uint64_t reference_samples = 0;
  Real work_ratio = 0;  // total_samples / reference_samples

  // Recomputes totals and the ratio from `levels`.
  void Finalize();
};

// Fraction of shading work removed: 1 - work_ratio. Negative when the
// overlapping levels cost more than the reference.
Real WorkReduction(const WorkReport& work);

struct QualityReport {
  Real rms = 0;      // over all pixels and the three channels jointly
  Real max_abs = 0;  // largest per-channel difference
  Image3 difference;  // |a - b| * enhancement, clamped to [0, 1]
};

inline constexpr Real kDefaultDiffEnhancement = 10;

QualityReport RmsError(const Image3& a, const Image3& b,
                       Real enhancement = kDefaultDiffEnhancement);

}  // namespace mrr

#endif  // MRR_METRICS_H_
