#ifndef MRR_SCENE_H_
#define MRR_SCENE_H_

#include <array>
#include <optional>
#include <vector>

#include "mrr/image.h"
#include "mrr/vec.h"

namespace mrr {

struct Triangle {
  std::array<Vec3, 3> v;  // world-space positions
  std::array<Vec3, 3> n;  // unit vertex normals
  Vec3 albedo;
};

struct Camera {
  Vec3 position;
  Vec3 direction{0, 0, -1};
  Vec3 up{0, 1, 0};
  Real fov_y = 1.0471975511965976;  // 60 degrees
  Real near = 0.1;
  Real far = 100;
};

struct DirectionalLight {
  Vec3 direction{0, -1, 0};  // travels from the light into the scene
  Vec3 intensity{1, 1, 1};
  Vec3 ambient{0.1, 0.1, 0.1};
};

struct Scene {
  std::vector<Triangle> triangles;
  Camera camera;
  DirectionalLight light;

  // Throws InvariantError describing the first violated invariant.
  void Validate() const;
  // Axis-aligned bounds of all vertices.
  std::pair<Vec3, Vec3> Bounds() const;
  Real Diagonal() const;
};

// Camera frame plus the pinhole projection for one framebuffer size. View
// space is right-handed: +x right, +y up, the camera looks down -z, so the
// linear depth of a point is -z.
class CameraView {
 public:
  // Throws InvariantError for degenerate cameras.
  CameraView(const Camera& camera, int width, int height);

  const Camera& camera() const { return camera_; }
  int width() const { return width_; }
  int height() const { return height_; }
  Real focal() const { return focal_; }  // pixels

  Vec3 WorldToView(const Vec3& p) const;
  Vec3 ViewToWorld(const Vec3& p) const;
  Vec3 DirectionToView(const Vec3& d) const;
  Vec3 DirectionToWorld(const Vec3& d) const;

  // Continuous pixel coordinates (pixel (i, j) spans [i, i + 1)) of a view
  // space point; nullopt for points not in front of the camera.
  std::optional<std::array<Real, 2>> Project(const Vec3& view) const;
  // View-space ray direction through continuous pixel coordinates, scaled
  // so that its depth component is 1 (z = -1).
  Vec3 RayThrough(Real px, Real py) const;

 private:
  Camera camera_;
  int width_, height_;
  Real focal_;
  Vec3 right_, up_, forward_;
};

// Per-pixel attributes of the visible surface. Invalid pixels hold the
// background sentinel: depth = far, normal = (0, 0, 1), zero albedo and
// position.
struct GBuffer {
  CameraView view;
  Image3 position;  // view space
  ImageF depth;     // linear distance along the view axis
  Image3 normal;    // view space, unit
  Image3 albedo;
  Mask valid;

  int width() const { return view.width(); }
  int height() const { return view.height(); }
};

// Orthographic depth map rendered from a directional light. `transform` maps
// world space to (u, v, depth) with u, v in [0, 1) across the map and depth
// in world units increasing along the light direction.
struct ShadowMap {
  ImageF depth;
  Mat4 transform;
  Real scene_diagonal = 0;
  Vec3 light_direction;  // world space, unit length
  Real texel_size = 0;   // world-space edge length of one texel

  int resolution() const { return depth.width(); }
  Real DefaultBias() const { return 1e-3 * scene_diagonal; }
  // Light-space (u, v, depth) of a world-space point.
  Vec3 ToLightSpace(const Vec3& world) const { return transform.TransformPoint(world); }
  // Nearest-texel depth comparison at light-space coordinates; points
  // outside the map are lit.
  bool Lit(Real u, Real v, Real depth, Real bias) const;
};

// Perspective-correct, z-buffered rasterization of the scene from the camera.
GBuffer RasterizeGBuffer(const Scene& scene, int width, int height);

// Orthographic depth render from the light, fitted to the scene bounds.
ShadowMap RasterizeShadowMap(const Scene& scene, int resolution);

// Single-tap hard shadow test: true when lit.
bool ShadowTestHard(const ShadowMap& sm, const Vec3& world_pos, Real bias);

// `bias` plus the light-space depth change across `texels` texels of a
// receiver with cos(angle to the light) = cos_l (clamped away from grazing).
Real SlopeScaledBias(const ShadowMap& sm, Real bias, Real cos_l, Real texels);

// Hard shadow test for a surface point with a known world-space normal.
// Surfaces facing away from the light are unlit; others get one texel of
// slope-scaled bias on top of `bias`.
bool ReceiverLit(const ShadowMap& sm, const Vec3& world_pos, const Vec3& world_normal,
                 Real bias);

}  // namespace mrr

#endif  // MRR_SCENE_H_
