#include "mrr/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mrr/config.h"
#include "mrr/error.h"
#include "mrr/image_io.h"
#include "mrr/metrics.h"
#include "mrr/pipeline.h"
#include "mrr/report.h"
#include "mrr/scene_io.h"

namespace mrr {

namespace fs = std::filesystem;

namespace {

// Options shared by `render` and `masks`.
struct FrameOptions {
  std::string scene;
  std::string effect = "ssao";
  std::string size = "640x360";
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> radius;
  std::optional<int> shadow_map_resolution;
  std::vector<std::string> level_overrides;
  bool no_ssao_blur = false;
  bool force_full_res = false;
  std::string out = "out";
};

struct RenderOptions {
  bool reference_only = false;
  bool multires_only = false;
  bool no_debug_masks = false;
  bool no_diff = false;
};

struct CompareOptions {
  std::string a;
  std::string b;
  std::optional<double> max_rms;
  std::optional<double> max_work_ratio;
};

void AddFrameOptions(CLI::App* cmd, FrameOptions& o) {
  cmd->add_option("--scene", o.scene, "scene JSON file")->required();
  cmd->add_option("--effect", o.effect, "ssao, ssm or ssgi")->capture_default_str();
  cmd->add_option("--size", o.size, "output resolution WxH, both divisible by 8")
      ->capture_default_str();
  cmd->add_option("--samples", o.samples, "samples per shaded pixel");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--radius", o.radius, "SSAO/SSGI world-space radius");
  cmd->add_option("--shadow-map-res", o.shadow_map_resolution, "shadow map resolution");
  cmd->add_option("--level", o.level_overrides,
                  "level override i:variance:weight[:on|off] (repeatable)");
  cmd->add_flag("--no-ssao-blur", o.no_ssao_blur, "skip the per-level SSAO blur");
  cmd->add_flag("--force-full-res", o.force_full_res,
                "treat every pixel as an edge (full-resolution decomposition)");
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
}

std::pair<int, int> ParseSize(const std::string& text) {
  static const std::regex pattern(R"((\d{1,6})x(\d{1,6}))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw ParseError("--size '" + text + "': expected WxH");
  }
  const int w = std::stoi(m[1]);
  const int h = std::stoi(m[2]);
  Require(w >= 8 && h >= 8, "--size must be at least 8x8");
  Require(w % 8 == 0 && h % 8 == 0, "--size " + text + " is not divisible by 8");
  return {w, h};
}

struct Prepared {
  PipelineConfig cfg;
  int width = 0;
  int height = 0;
  Scene scene;
};

Prepared Prepare(const FrameOptions& o) {
  Prepared p;
  const auto kind = ParseEffect(o.effect);
  Require(kind.has_value(), "unknown effect '" + o.effect + "' (expected ssao, ssm or ssgi)");
  std::tie(p.width, p.height) = ParseSize(o.size);
  SceneDocument doc = LoadScene(o.scene);
  p.scene = std::move(doc.scene);

  p.cfg = PipelineConfig::Defaults(*kind);
  ApplyOverrides(p.cfg, doc.overrides);
  if (o.samples) p.cfg.effect_params.samples = *o.samples;
  if (o.seed) p.cfg.effect_params.seed = *o.seed;
  if (o.radius) p.cfg.effect_params.radius = *o.radius;
  if (o.shadow_map_resolution) p.cfg.shadow_map_resolution = *o.shadow_map_resolution;
  for (const std::string& text : o.level_overrides) ApplyLevelOverride(p.cfg, text);
  if (o.no_ssao_blur) p.cfg.ssao_blur.enabled = false;
  p.cfg.force_full_edges = o.force_full_res;
  p.cfg.Validate();
  return p;
}

void WriteMaskImages(const fs::path& dir, const MultiResResult& r) {
  WritePng(dir / "edges.png", EdgeVisualization(r.edges));
  WritePng(dir / "pyramid.png", PyramidVisualization(r.pyramid));
  for (int i = 1; i <= kNumLevels; ++i) {
    const MaskLevel* level = r.pyramid.level(i);
    if (level == nullptr) continue;
    const std::string stem = "level" + std::to_string(i);
    WritePng(dir / (stem + "_alpha.png"), level->alpha);
    WritePng(dir / (stem + "_stencil.png"), level->stencil);
  }
}

void PrintWork(std::ostream& out, const WorkReport& work) {
  for (const LevelWork& l : work.levels) {
    out << "  level " << l.index << " (" << l.width << "x" << l.height
        << "): " << l.shaded_pixels << " px, " << l.samples << " samples\n";
  }
  out << "  work ratio " << work.work_ratio << " (reduction " << WorkReduction(work) << ")\n";
}

int Render(const FrameOptions& fo, const RenderOptions& ro, std::ostream& out) {
  Require(!(ro.reference_only && ro.multires_only),
          "--reference-only and --multires-only are exclusive");
  Prepared p = Prepare(fo);
  const fs::path dir(fo.out);
  fs::create_directories(dir);

  StageTimings timings;
  const auto t0 = std::chrono::steady_clock::now();
  const FrameInputs frame = PrepareFrame(p.cfg, p.scene, p.width, p.height);
  timings.ms["frame_setup"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  std::optional<MultiResResult> multi;
  std::optional<ReferenceResult> ref;
  if (!ro.reference_only) {
    multi = RunMultiRes(p.cfg, frame);
    for (const auto& [stage, ms] : multi->timings.ms) timings.ms["multires_" + stage] = ms;
    WritePng(dir / "multires.png", multi->image);
    WriteFloatImage(dir / "multires.mrrf", multi->image);
    if (!ro.no_debug_masks) WriteMaskImages(dir, *multi);
  }
  if (!ro.multires_only) {
    ref = RunReference(p.cfg, frame);
    for (const auto& [stage, ms] : ref->timings.ms) timings.ms["reference_" + stage] = ms;
    WritePng(dir / "reference.png", ref->image);
    WriteFloatImage(dir / "reference.mrrf", ref->image);
  }

  std::optional<QualityReport> quality;
  if (multi && ref) {
    quality = RmsError(multi->image, ref->image);
    if (!ro.no_diff) WritePng(dir / "diff.png", quality->difference);
  }

  ReportInputs in;
  in.scene = fo.scene;
  in.config = &p.cfg;
  in.width = p.width;
  in.height = p.height;
  in.work = multi ? &multi->work : nullptr;
  in.quality = quality ? &*quality : nullptr;
  in.timings = timings;
  WriteReport(dir / "report.json", MakeReport(in));

  out << EffectName(p.cfg.effect) << " " << p.width << "x" << p.height << ", "
      << p.cfg.effect_params.samples << " samples\n";
  if (multi) PrintWork(out, multi->work);
  if (quality) out << "  rms " << quality->rms << ", max abs " << quality->max_abs << "\n";
  out << "  wrote " << (dir / "report.json").string() << "\n";
  return kExitOk;
}

int Masks(const FrameOptions& fo, std::ostream& out) {
  Prepared p = Prepare(fo);
  const fs::path dir(fo.out);
  fs::create_directories(dir);
  const FrameInputs frame = PrepareFrame(p.cfg, p.scene, p.width, p.height);
  const bool needs_map = p.cfg.edge.use_shadow_edges;
  EdgeImage edges = BuildEdgeImage(frame.gbuffer, needs_map ? &frame.shadow_map : nullptr,
                                   p.cfg.edge);
  if (p.cfg.force_full_edges) std::ranges::fill(edges.mask.pixels(), Real(1));
  const MaskPyramid pyramid = BuildPyramid(edges, p.cfg.levels, p.cfg.pyramid);

  MultiResResult view;
  view.edges = edges;
  view.pyramid = pyramid;
  WriteMaskImages(dir, view);

  std::uint64_t edge_pixels = 0;
  for (Real v : edges.mask.pixels()) edge_pixels += v > 0;
  out << "edge pixels " << edge_pixels << " of " << edges.mask.size() << "\n";
  for (int i = 1; i <= kNumLevels; ++i) {
    const MaskLevel* level = pyramid.level(i);
    if (level == nullptr) {
      out << "  level " << i << ": disabled\n";
      continue;
    }
    out << "  level " << i << " (" << level->stencil.width() << "x" << level->stencil.height()
        << "): stencil " << Popcount(level->stencil) << "\n";
  }
  return kExitOk;
}

int Compare(const CompareOptions& o, std::ostream& out) {
  const auto a = LoadReport(o.a);
  const auto b = LoadReport(o.b);
  CompareThresholds t;
  t.max_rms_increase = o.max_rms;
  t.max_work_ratio_increase = o.max_work_ratio;
  return CompareReports(a, b, t, out).regression ? kExitRegression : kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-resolution screen-space shading renderer", "mrr"};
  app.require_subcommand(1);

  FrameOptions render_frame;
  RenderOptions render;
  CLI::App* render_cmd = app.add_subcommand("render", "render multi-res and reference images");
  AddFrameOptions(render_cmd, render_frame);
  render_cmd->add_flag("--reference-only", render.reference_only, "skip the multi-res path");
  render_cmd->add_flag("--multires-only", render.multires_only, "skip the reference path");
  render_cmd->add_flag("--no-debug-masks", render.no_debug_masks, "skip mask images");
  render_cmd->add_flag("--no-diff", render.no_diff, "skip diff.png");

  FrameOptions masks_frame;
  CLI::App* masks_cmd = app.add_subcommand("masks", "write edge and pyramid masks only");
  AddFrameOptions(masks_cmd, masks_frame);

  CompareOptions compare;
  CLI::App* compare_cmd = app.add_subcommand("compare", "diff two report.json files");
  compare_cmd->add_option("a", compare.a, "baseline report")->required();
  compare_cmd->add_option("b", compare.b, "candidate report")->required();
  compare_cmd->add_option("--max-rms", compare.max_rms, "allowed rms increase");
  compare_cmd->add_option("--max-work-ratio", compare.max_work_ratio,
                          "allowed work ratio increase");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    if (render_cmd->parsed()) return Render(render_frame, render, out);
    if (masks_cmd->parsed()) return Masks(masks_frame, out);
    return Compare(compare, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace mrr
