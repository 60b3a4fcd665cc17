#ifndef MRR_SCENE_IO_H_
#define MRR_SCENE_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "mrr/scene.h"

namespace mrr {

// Scene documents:
//
//   {
//     "triangles": [{"v": [[x,y,z], [x,y,z], [x,y,z]],
//                    "n": [[x,y,z], [x,y,z], [x,y,z]],
//                    "albedo": [r,g,b]}, ...],
//     "camera": {"position": [x,y,z], "direction": [x,y,z], "up": [x,y,z],
//                "fov_y": radians, "near": d, "far": d},
//     "light": {"direction": [x,y,z], "intensity": [r,g,b],
//               "ambient": [r,g,b]},
//     "overrides": { ... }            // optional, see config.h
//   }
//
// Camera and light directions are normalized on load; vertex normals must
// already be unit length.
struct SceneDocument {
  Scene scene;
  nlohmann::json overrides = nlohmann::json::object();
};

// Throw ParseError on malformed documents and InvariantError on scenes that
// violate Scene::Validate.
SceneDocument SceneFromJson(const nlohmann::json& doc);
SceneDocument LoadScene(const std::filesystem::path& path);

nlohmann::json SceneToJson(const Scene& scene,
                           const nlohmann::json& overrides = nlohmann::json::object());
void SaveScene(const std::filesystem::path& path, const Scene& scene,
               const nlohmann::json& overrides = nlohmann::json::object());

}  // namespace mrr

#endif  // MRR_SCENE_IO_H_
