#ifndef MRR_REPORT_H_
#define MRR_REPORT_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "mrr/metrics.h"
#include "mrr/pipeline.h"

namespace mrr {

// report.json layout:
//
//   {
//     "effect": "ssao",
//     "scene": "<path as given>",
//     "resolution": [w, h],
//     "samples": N,
//     "seed": s,
//     "work": {"levels": [{"level", "divisor", "width", "height",
//                          "shaded_pixels", "samples"}...],
//              "total_shaded_pixels", "total_samples",
//              "reference_samples", "work_ratio", "work_reduction"},
//     "quality": {"rms", "max_abs", "diff_enhancement"} | null,
//     "timings_ms": {"<stage>": ms, ...}
//   }
//
// "work" is null for reference-only runs. "timings_ms" is wall clock and is
// excluded from determinism checks.
struct ReportInputs {
  std::string scene;
  const PipelineConfig* config = nullptr;
  int width = 0;
  int height = 0;
  const WorkReport* work = nullptr;
  const QualityReport* quality = nullptr;
  Real diff_enhancement = kDefaultDiffEnhancement;
  StageTimings timings;
};

nlohmann::json MakeReport(const ReportInputs& in);
// The report without its timings block.
nlohmann::json DeterministicPart(const nlohmann::json& report);

void WriteReport(const std::filesystem::path& path, const nlohmann::json& report);
// Throws ParseError when the file is unreadable or not a report.
nlohmann::json LoadReport(const std::filesystem::path& path);

struct CompareThresholds {
  std::optional<Real> max_rms_increase;
  std::optional<Real> max_work_ratio_increase;
};

struct CompareOutcome {
  bool regression = false;
};

// Prints a table of b - a deltas. Throws ParseError when the reports do not
// follow the schema or describe different effects/resolutions.
CompareOutcome CompareReports(const nlohmann::json& a, const nlohmann::json& b,
                              const CompareThresholds& thresholds, std::ostream& out);

}  // namespace mrr

#endif  // MRR_REPORT_H_
