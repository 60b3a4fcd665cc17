#include "mrr/scene_io.h"

#include <fstream>

#include "mrr/error.h"

namespace mrr {

using nlohmann::json;

namespace {

Vec3 ReadVec3(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(what + ": expected an array of 3 numbers");
  }
  Vec3 v;
  for (int k = 0; k < 3; ++k) {
    if (!j[k].is_number()) throw ParseError(what + ": expected numbers");
    v[k] = j[k].get<Real>();
  }
  return v;
}

const json& Field(const json& obj, const char* key, const std::string& what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(what + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

Real ReadReal(const json& obj, const char* key, const std::string& what) {
  const json& j = Field(obj, key, what);
  if (!j.is_number()) throw ParseError(what + "." + key + ": expected a number");
  return j.get<Real>();
}

json WriteVec3(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

SceneDocument SceneFromJson(const json& doc) {
  if (!doc.is_object()) throw ParseError("scene: expected a JSON object");
  SceneDocument out;
  Scene& scene = out.scene;

  const json& tris = Field(doc, "triangles", "scene");
  if (!tris.is_array()) throw ParseError("scene.triangles: expected an array");
  scene.triangles.reserve(tris.size());
  for (size_t t = 0; t < tris.size(); ++t) {
    const std::string what = "triangles[" + std::to_string(t) + "]";
    const json& v = Field(tris[t], "v", what);
    const json& n = Field(tris[t], "n", what);
    if (!v.is_array() || v.size() != 3 || !n.is_array() || n.size() != 3) {
      throw ParseError(what + ": 'v' and 'n' need exactly 3 entries");
    }
    Triangle tri;
    for (int k = 0; k < 3; ++k) {
      tri.v[k] = ReadVec3(v[k], what + ".v");
      tri.n[k] = ReadVec3(n[k], what + ".n");
    }
    tri.albedo = ReadVec3(Field(tris[t], "albedo", what), what + ".albedo");
    scene.triangles.push_back(tri);
  }

  const json& cam = Field(doc, "camera", "scene");
  scene.camera.position = ReadVec3(Field(cam, "position", "camera"), "camera.position");
  scene.camera.direction = ReadVec3(Field(cam, "direction", "camera"), "camera.direction");
  scene.camera.up = ReadVec3(Field(cam, "up", "camera"), "camera.up");
  scene.camera.fov_y = ReadReal(cam, "fov_y", "camera");
  scene.camera.near = ReadReal(cam, "near", "camera");
  scene.camera.far = ReadReal(cam, "far", "camera");
  for (Vec3* d : {&scene.camera.direction, &scene.camera.up}) {
    if (Length(*d) > 0) *d = Normalize(*d);
  }

  const json& light = Field(doc, "light", "scene");
  scene.light.direction = ReadVec3(Field(light, "direction", "light"), "light.direction");
  scene.light.intensity = ReadVec3(Field(light, "intensity", "light"), "light.intensity");
  scene.light.ambient = ReadVec3(Field(light, "ambient", "light"), "light.ambient");
  if (Length(scene.light.direction) > 0) {
    scene.light.direction = Normalize(scene.light.direction);
  }

  if (doc.contains("overrides")) {
    if (!doc["overrides"].is_object()) throw ParseError("scene.overrides: expected an object");
    out.overrides = doc["overrides"];
  }
  scene.Validate();
  return out;
}

SceneDocument LoadScene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scene file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return SceneFromJson(doc);
}

json SceneToJson(const Scene& scene, const json& overrides) {
  json tris = json::array();
  for (const Triangle& t : scene.triangles) {
    json v = json::array(), n = json::array();
    for (int k = 0; k < 3; ++k) {
      v.push_back(WriteVec3(t.v[k]));
      n.push_back(WriteVec3(t.n[k]));
    }
    tris.push_back({{"v", v}, {"n", n}, {"albedo", WriteVec3(t.albedo)}});
  }
  const Camera& c = scene.camera;
  json doc = {
      {"camera",
       {{"position", WriteVec3(c.position)},
        {"direction", WriteVec3(c.direction)},
        {"up", WriteVec3(c.up)},
        {"fov_y", c.fov_y},
        {"near", c.near},
        {"far", c.far}}},
      {"light",
       {{"direction", WriteVec3(scene.light.direction)},
        {"intensity", WriteVec3(scene.light.intensity)},
        {"ambient", WriteVec3(scene.light.ambient)}}},
      {"triangles", tris},
  };
  if (!overrides.empty()) doc["overrides"] = overrides;
  return doc;
}

void SaveScene(const std::filesystem::path& path, const Scene& scene,
               const json& overrides) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << SceneToJson(scene, overrides).dump(1) << "\n";
}

}  // namespace mrr
