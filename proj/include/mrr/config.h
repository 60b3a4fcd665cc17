#ifndef MRR_CONFIG_H_
#define MRR_CONFIG_H_

#include <string>

#include "json.hpp"
#include "mrr/pipeline.h"

namespace mrr {

// Applies a scene file's "overrides" block on top of the built-in defaults.
// Recognized keys (all optional):
//
//   "samples", "radius", "pcf_radius", "seed", "shadow_bias",
//   "shadow_map_resolution", "normal_threshold", "depth_threshold",
//   "blur_cutoff",
//   "ssao_blur": {"enabled": bool, "variance": number},
//   "levels": {"<effect>": [{"variance": v, "weight": w, "enabled": b}, x4]}
//
// Unknown keys and wrongly typed values throw ParseError.
void ApplyOverrides(PipelineConfig& cfg, const nlohmann::json& overrides);

// Parses a command-line level override "i:variance:weight[:on|off]" and
// applies it. Throws ParseError on malformed text.
void ApplyLevelOverride(PipelineConfig& cfg, const std::string& text);

}  // namespace mrr

#endif  // MRR_CONFIG_H_
