#ifndef MRR_FIXTURES_H_
#define MRR_FIXTURES_H_

#include <string>
#include <vector>

#include "mrr/scene.h"

namespace mrr {

// Geometry builders.
// Corners in order around the quad; `normal` is used for all four vertices.
void AddQuad(Scene& scene, const Vec3& p0, const Vec3& p1, const Vec3& p2,
             const Vec3& p3, const Vec3& normal, const Vec3& albedo);
void AddBox(Scene& scene, const Vec3& lo, const Vec3& hi, const Vec3& albedo);
void AddSphere(Scene& scene, const Vec3& center, Real radius, int slices,
               int stacks, const Vec3& albedo);

namespace fixtures {

// Full-screen plane perpendicular to the view axis at `distance`.
Scene FrontoParallelQuad(Real distance);

// Full-screen plane through (0, 0, -distance) tilted by `angle` radians
// about the camera's horizontal axis.
Scene TiltedQuad(Real distance, Real angle, Real fov_y);

// Concave 90-degree corner: two planes meeting along a vertical line that
// projects onto the central pixel boundary.
Scene InteriorCorner(Real distance);

// A wall with a parallel panel in front of it covering the left half of the
// screen.
Scene StepOccluder(Real wall_distance, Real panel_distance);

// Top-down view of a floor half-shadowed by a slab above the camera. The
// shadow boundary on the floor is the line x = kShadowLineX.
Scene ShadowedFloor();
inline constexpr Real kShadowLineX = 1.2;

// White floor meeting a lit red wall, seen from above the floor.
Scene RedWallCorner();

// Camera looking away from all geometry.
Scene Empty();

// The committed evaluation scenes: open-topped rooms that fill the whole
// frame, each with different occluders.
Scene Crease();
Scene Occluder();
Scene Spheres();

struct NamedScene {
  std::string name;
  Scene scene;
};
std::vector<NamedScene> EvaluationScenes();

}  // namespace fixtures
}  // namespace mrr

#endif  // MRR_FIXTURES_H_
