#include "mrr/config.h"

#include <set>
#include <sstream>
#include <vector>

#include "mrr/error.h"

namespace mrr {

using nlohmann::json;

namespace {

Real Number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ParseError("overrides." + key + ": expected a number");
  return j.get<Real>();
}

bool Bool(const json& j, const std::string& key) {
  if (!j.is_boolean()) throw ParseError("overrides." + key + ": expected true/false");
  return j.get<bool>();
}

int Integer(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ParseError("overrides." + key + ": expected an integer");
  return j.get<int>();
}

void ApplyLevels(PipelineConfig& cfg, const json& by_effect) {
  if (!by_effect.is_object()) throw ParseError("overrides.levels: expected an object");
  const std::string name(EffectName(cfg.effect));
  for (const auto& [effect, list] : by_effect.items()) {
    if (!ParseEffect(effect)) throw ParseError("overrides.levels: unknown effect " + effect);
    if (effect != name) continue;
    if (!list.is_array() || list.size() != kNumLevels) {
      throw ParseError("overrides.levels." + effect + ": expected 4 entries");
    }
    for (int i = 0; i < kNumLevels; ++i) {
      const json& entry = list[i];
      if (!entry.is_object()) {
        throw ParseError("overrides.levels." + effect + ": entries must be objects");
      }
      LevelConfig& level = cfg.levels[i];
      for (const auto& [key, value] : entry.items()) {
        const std::string where = "levels." + effect + "[" + std::to_string(i) + "]." + key;
        if (key == "variance") {
          level.variance = Number(value, where);
        } else if (key == "weight") {
          level.weight = Number(value, where);
        } else if (key == "enabled") {
          level.enabled = Bool(value, where);
        } else {
          throw ParseError("overrides." + where + ": unknown key");
        }
      }
    }
  }
}

}  // namespace

void ApplyOverrides(PipelineConfig& cfg, const json& overrides) {
  if (overrides.is_null()) return;
  if (!overrides.is_object()) throw ParseError("overrides: expected an object");
  for (const auto& [key, value] : overrides.items()) {
    if (key == "samples") {
      cfg.effect_params.samples = Integer(value, key);
    } else if (key == "radius") {
      cfg.effect_params.radius = Number(value, key);
    } else if (key == "pcf_radius") {
      cfg.effect_params.pcf_radius = Number(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ParseError("overrides.seed: expected an unsigned integer");
      cfg.effect_params.seed = value.get<std::uint64_t>();
    } else if (key == "shadow_bias") {
      cfg.effect_params.shadow_bias = Number(value, key);
      cfg.edge.shadow_bias = cfg.effect_params.shadow_bias;
    } else if (key == "shadow_map_resolution") {
      cfg.shadow_map_resolution = Integer(value, key);
    } else if (key == "normal_threshold") {
      cfg.edge.normal_threshold = Number(value, key);
    } else if (key == "depth_threshold") {
      cfg.edge.depth_threshold = Number(value, key);
    } else if (key == "blur_cutoff") {
      cfg.pyramid.blur_cutoff = Number(value, key);
    } else if (key == "ssao_blur") {
      if (!value.is_object()) throw ParseError("overrides.ssao_blur: expected an object");
      for (const auto& [k, v] : value.items()) {
        if (k == "enabled") {
          cfg.ssao_blur.enabled = Bool(v, "ssao_blur.enabled");
        } else if (k == "variance") {
          cfg.ssao_blur.variance = Number(v, "ssao_blur.variance");
        } else {
          throw ParseError("overrides.ssao_blur." + k + ": unknown key");
        }
      }
    } else if (key == "levels") {
      ApplyLevels(cfg, value);
    } else {
      throw ParseError("overrides." + key + ": unknown key");
    }
  }
}

void ApplyLevelOverride(PipelineConfig& cfg, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4) {
    throw ParseError("level override '" + text + "': expected i:variance:weight[:on|off]");
  }
  try {
    size_t used = 0;
    const int index = std::stoi(parts[0], &used);
    if (used != parts[0].size() || index < 1 || index > kNumLevels) throw std::invalid_argument("");
    LevelConfig& level = cfg.levels[index - 1];
    level.variance = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("");
    level.weight = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("");
    if (parts.size() == 4) {
      if (parts[3] != "on" && parts[3] != "off") throw std::invalid_argument("");
      level.enabled = parts[3] == "on";
    }
  } catch (const std::logic_error&) {
    throw ParseError("level override '" + text + "': expected i:variance:weight[:on|off]");
  }
}

}  // namespace mrr
