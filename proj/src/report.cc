#include "mrr/report.h"

#include <cstdio>
#include <fstream>
#include <iomanip>

#include "mrr/error.h"

namespace mrr {

using nlohmann::json;

json MakeReport(const ReportInputs& in) {
  Require(in.config != nullptr, "report needs a pipeline config");
  const PipelineConfig& cfg = *in.config;
  json report;
  report["effect"] = std::string(EffectName(cfg.effect));
  report["scene"] = in.scene;
  report["resolution"] = {in.width, in.height};
  report["samples"] = cfg.effect_params.samples;
  report["seed"] = cfg.effect_params.seed;

  if (in.work != nullptr) {
    const WorkReport& w = *in.work;
    json levels = json::array();
    for (const LevelWork& l : w.levels) {
      levels.push_back({{"level", l.index},
                        {"divisor", l.divisor},
                        {"width", l.width},
                        {"height", l.height},
                        {"shaded_pixels", l.shaded_pixels},
                        {"samples", l.samples}});
    }
    report["work"] = {{"levels", levels},
                      {"total_shaded_pixels", w.total_shaded_pixels},
                      {"total_samples", w.total_samples},
                      {"reference_samples", w.reference_samples},
                      {"work_ratio", w.work_ratio},
                      {"work_reduction", w.reference_samples > 0 ? WorkReduction(w) : 0.0}};
  } else {
    report["work"] = nullptr;
  }

  if (in.quality != nullptr) {
    report["quality"] = {{"rms", in.quality->rms},
                         {"max_abs", in.quality->max_abs},
                         {"diff_enhancement", in.diff_enhancement}};
  } else {
    report["quality"] = nullptr;
  }

  json timings = json::object();
  for (const auto& [stage, ms] : in.timings.ms) timings[stage] = ms;
  report["timings_ms"] = timings;
  return report;
}

json DeterministicPart(const json& report) {
  json copy = report;
  copy.erase("timings_ms");
  return copy;
}

void WriteReport(const std::filesystem::path& path, const json& report) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << report.dump(2) << "\n";
  if (!out) throw ParseError("failed writing " + path.string());
}

namespace {

void Expect(bool ok, const std::filesystem::path& path, const std::string& what) {
  if (!ok) throw ParseError(path.string() + ": " + what);
}

}  // namespace

json LoadReport(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json report;
  try {
    in >> report;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  Expect(report.is_object(), path, "report must be an object");
  Expect(report.contains("effect") && report["effect"].is_string() &&
             ParseEffect(report["effect"].get<std::string>()).has_value(),
         path, "missing or invalid \"effect\"");
  Expect(report.contains("resolution") && report["resolution"].is_array() &&
             report["resolution"].size() == 2,
         path, "missing or invalid \"resolution\"");
  Expect(report.contains("samples") && report["samples"].is_number_integer(), path,
         "missing or invalid \"samples\"");
  Expect(report.contains("work"), path, "missing \"work\"");
  const json& work = report["work"];
  if (!work.is_null()) {
    Expect(work.is_object() && work.contains("work_ratio") && work["work_ratio"].is_number() &&
               work.contains("total_samples") && work.contains("reference_samples") &&
               work.contains("levels") && work["levels"].is_array(),
           path, "malformed \"work\"");
  }
  Expect(report.contains("quality"), path, "missing \"quality\"");
  const json& quality = report["quality"];
  if (!quality.is_null()) {
    Expect(quality.is_object() && quality.contains("rms") && quality["rms"].is_number() &&
               quality.contains("max_abs") && quality["max_abs"].is_number(),
           path, "malformed \"quality\"");
  }
  return report;
}

namespace {

std::optional<Real> Field(const json& report, const char* block, const char* key) {
  const json& b = report[block];
  if (b.is_null()) return std::nullopt;
  return b[key].get<Real>();
}

void Row(std::ostream& out, const std::string& name, std::optional<Real> a,
         std::optional<Real> b) {
  auto cell = [](std::optional<Real> v) {
    if (!v) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return std::string(buf);
  };
  std::string delta = "-";
  if (a && b) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%+.6f", *b - *a);
    delta = buf;
  }
  out << std::left << std::setw(16) << name << std::right << std::setw(12) << cell(a)
      << std::setw(12) << cell(b) << std::setw(12) << delta << "\n";
}

}  // namespace

CompareOutcome CompareReports(const json& a, const json& b, const CompareThresholds& thresholds,
                              std::ostream& out) {
  if (a["effect"] != b["effect"]) {
    throw ParseError("reports describe different effects: " + a["effect"].get<std::string>() +
                     " vs " + b["effect"].get<std::string>());
  }
  if (a["resolution"] != b["resolution"]) {
    throw ParseError("reports describe different resolutions");
  }
  const auto rms_a = Field(a, "quality", "rms");
  const auto rms_b = Field(b, "quality", "rms");
  const auto ratio_a = Field(a, "work", "work_ratio");
  const auto ratio_b = Field(b, "work", "work_ratio");
  const auto red_a = Field(a, "work", "work_reduction");
  const auto red_b = Field(b, "work", "work_reduction");

  out << std::left << std::setw(16) << "metric" << std::right << std::setw(12) << "a"
      << std::setw(12) << "b" << std::setw(12) << "b - a" << "\n";
  Row(out, "rms", rms_a, rms_b);
  Row(out, "max_abs", Field(a, "quality", "max_abs"), Field(b, "quality", "max_abs"));
  Row(out, "work_ratio", ratio_a, ratio_b);
  Row(out, "work_reduction", red_a, red_b);

  CompareOutcome outcome;
  if (thresholds.max_rms_increase) {
    if (!rms_a || !rms_b) throw ParseError("--max-rms needs quality in both reports");
    if (*rms_b - *rms_a > *thresholds.max_rms_increase) {
      out << "regression: rms increased by more than " << *thresholds.max_rms_increase << "\n";
      outcome.regression = true;
    }
  }
  if (thresholds.max_work_ratio_increase) {
    if (!ratio_a || !ratio_b) throw ParseError("--max-work-ratio needs work in both reports");
    if (*ratio_b - *ratio_a > *thresholds.max_work_ratio_increase) {
      out << "regression: work_ratio increased by more than "
          << *thresholds.max_work_ratio_increase << "\n";
      outcome.regression = true;
    }
  }
  return outcome;
}

}  // namespace mrr
