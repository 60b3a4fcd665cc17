#include "mrr/fixtures.h"

#include <cmath>

namespace mrr {

void AddQuad(Scene& scene, const Vec3& p0, const Vec3& p1, const Vec3& p2,
             const Vec3& p3, const Vec3& normal, const Vec3& albedo) {
  const Vec3 n = Normalize(normal);
  scene.triangles.push_back({{p0, p1, p2}, {n, n, n}, albedo});
  scene.triangles.push_back({{p0, p2, p3}, {n, n, n}, albedo});
}

void AddBox(Scene& scene, const Vec3& lo, const Vec3& hi, const Vec3& albedo) {
  const Real x0 = lo.x, y0 = lo.y, z0 = lo.z, x1 = hi.x, y1 = hi.y, z1 = hi.z;
  AddQuad(scene, {x0, y0, z1}, {x1, y0, z1}, {x1, y1, z1}, {x0, y1, z1}, {0, 0, 1}, albedo);
  AddQuad(scene, {x1, y0, z0}, {x0, y0, z0}, {x0, y1, z0}, {x1, y1, z0}, {0, 0, -1}, albedo);
  AddQuad(scene, {x1, y0, z1}, {x1, y0, z0}, {x1, y1, z0}, {x1, y1, z1}, {1, 0, 0}, albedo);
  AddQuad(scene, {x0, y0, z0}, {x0, y0, z1}, {x0, y1, z1}, {x0, y1, z0}, {-1, 0, 0}, albedo);
  AddQuad(scene, {x0, y1, z1}, {x1, y1, z1}, {x1, y1, z0}, {x0, y1, z0}, {0, 1, 0}, albedo);
  AddQuad(scene, {x0, y0, z0}, {x1, y0, z0}, {x1, y0, z1}, {x0, y0, z1}, {0, -1, 0}, albedo);
}

void AddSphere(Scene& scene, const Vec3& center, Real radius, int slices,
               int stacks, const Vec3& albedo) {
  auto dir = [&](int i, int j) {
    const Real theta = M_PI * j / stacks;
    const Real phi = 2 * M_PI * i / slices;
    return Vec3(std::sin(theta) * std::cos(phi), std::cos(theta),
                std::sin(theta) * std::sin(phi));
  };
  for (int j = 0; j < stacks; ++j) {
    for (int i = 0; i < slices; ++i) {
      const Vec3 n00 = dir(i, j), n10 = dir(i + 1, j);
      const Vec3 n01 = dir(i, j + 1), n11 = dir(i + 1, j + 1);
      auto tri = [&](const Vec3& a, const Vec3& b, const Vec3& c) {
        scene.triangles.push_back({{center + a * radius, center + b * radius,
                                    center + c * radius},
                                   {a, b, c},
                                   albedo});
      };
      if (j != 0) tri(n00, n10, n11);
      if (j != stacks - 1) tri(n00, n11, n01);
    }
  }
}

namespace fixtures {

namespace {

Camera LookAlongMinusZ(Real fov_y = M_PI / 3) {
  Camera c;
  c.position = {0, 0, 0};
  c.direction = {0, 0, -1};
  c.up = {0, 1, 0};
  c.fov_y = fov_y;
  c.near = 0.05;
  c.far = 100;
  return c;
}

DirectionalLight FrontLight() {
  DirectionalLight l;
  l.direction = Normalize(Vec3(0.2, -0.3, -1));
  l.intensity = Vec3::Splat(0.8);
  l.ambient = Vec3::Splat(0.15);
  return l;
}

const Vec3 kGrey(0.7, 0.7, 0.7);

// Open-topped room (floor plus back, left and right walls) seen from the
// open front side.
Scene Room() {
  Scene s;
  const Real h = 8;
  const Vec3 floor(0.75, 0.75, 0.72), back(0.7, 0.7, 0.75);
  const Vec3 left(0.75, 0.2, 0.15), right(0.3, 0.6, 0.35);
  AddQuad(s, {-4, 0, 8}, {4, 0, 8}, {4, 0, -4}, {-4, 0, -4}, {0, 1, 0}, floor);
  AddQuad(s, {-4, 0, -4}, {4, 0, -4}, {4, h, -4}, {-4, h, -4}, {0, 0, 1}, back);
  AddQuad(s, {-4, 0, 8}, {-4, 0, -4}, {-4, h, -4}, {-4, h, 8}, {1, 0, 0}, left);
  AddQuad(s, {4, 0, -4}, {4, 0, 8}, {4, h, 8}, {4, h, -4}, {-1, 0, 0}, right);
  s.camera.position = {0.5, 2.6, 6.5};
  s.camera.direction = Normalize(Vec3(-0.4, 0.9, -3) - s.camera.position);
  s.camera.up = {0, 1, 0};
  s.camera.fov_y = M_PI / 3;
  s.camera.near = 0.1;
  s.camera.far = 50;
  s.light.direction = Normalize(Vec3(-0.3, -1, -0.4));
  s.light.intensity = Vec3::Splat(0.9);
  s.light.ambient = Vec3::Splat(0.15);
  return s;
}

}  // namespace

Scene FrontoParallelQuad(Real distance) {
  Scene s;
  const Real e = 10 * distance;
  AddQuad(s, {-e, -e, -distance}, {e, -e, -distance}, {e, e, -distance},
          {-e, e, -distance}, {0, 0, 1}, kGrey);
  s.camera = LookAlongMinusZ();
  s.light = FrontLight();
  return s;
}

Scene TiltedQuad(Real distance, Real angle, Real fov_y) {
  Scene s;
  const Vec3 c(0, 0, -distance);
  const Vec3 n(0, std::sin(angle), std::cos(angle));
  const Vec3 e1(1, 0, 0);
  const Vec3 e2(0, std::cos(angle), -std::sin(angle));
  const Real big = 20 * distance;
  // Keep the far-below part of the plane in front of the camera.
  const Real t_lo = std::sin(angle) > 0.05 ? -0.9 * distance / std::sin(angle) : -big;
  AddQuad(s, c + e1 * -big + e2 * t_lo, c + e1 * big + e2 * t_lo,
          c + e1 * big + e2 * big, c + e1 * -big + e2 * big, n, kGrey);
  s.camera = LookAlongMinusZ(fov_y);
  s.light = FrontLight();
  return s;
}

Scene InteriorCorner(Real distance) {
  Scene s;
  const Real d = distance, x = 0.6 * distance, y = 10 * distance;
  AddQuad(s, {-x, -y, -d + x}, {0, -y, -d}, {0, y, -d}, {-x, y, -d + x}, {1, 0, 1}, kGrey);
  AddQuad(s, {0, -y, -d}, {x, -y, -d + x}, {x, y, -d + x}, {0, y, -d}, {-1, 0, 1}, kGrey);
  s.camera = LookAlongMinusZ();
  s.light = FrontLight();
  return s;
}

Scene StepOccluder(Real wall_distance, Real panel_distance) {
  Scene s;
  const Real e = 10 * wall_distance;
  AddQuad(s, {-e, -e, -wall_distance}, {e, -e, -wall_distance},
          {e, e, -wall_distance}, {-e, e, -wall_distance}, {0, 0, 1}, kGrey);
  AddQuad(s, {-e, -e, -panel_distance}, {0, -e, -panel_distance},
          {0, e, -panel_distance}, {-e, e, -panel_distance}, {0, 0, 1}, kGrey);
  s.camera = LookAlongMinusZ();
  s.light = FrontLight();
  return s;
}

Scene ShadowedFloor() {
  Scene s;
  AddQuad(s, {-10, 0, 10}, {10, 0, 10}, {10, 0, -10}, {-10, 0, -10}, {0, 1, 0},
          Vec3::Splat(0.8));
  AddQuad(s, {-10, 4, -10}, {0, 4, -10}, {0, 4, 10}, {-10, 4, 10}, {0, -1, 0},
          Vec3::Splat(0.5));
  s.camera.position = {2, 3, 0};
  s.camera.direction = {0, -1, 0};
  s.camera.up = {0, 0, -1};
  s.camera.fov_y = M_PI / 3;
  s.camera.near = 0.1;
  s.camera.far = 20;
  s.light.direction = Normalize(Vec3(0.3, -1, 0));
  s.light.intensity = Vec3::Splat(0.9);
  s.light.ambient = Vec3::Splat(0.1);
  return s;
}

Scene RedWallCorner() {
  Scene s;
  AddQuad(s, {0, 0, 20}, {20, 0, 20}, {20, 0, -20}, {0, 0, -20}, {0, 1, 0},
          Vec3::Splat(0.9));
  AddQuad(s, {0, 0, 20}, {0, 0, -20}, {0, 10, -20}, {0, 10, 20}, {1, 0, 0},
          Vec3(0.9, 0.1, 0.1));
  s.camera.position = {4, 2.5, 0};
  s.camera.direction = Normalize(Vec3(-4, -2, 0));
  s.camera.up = {0, 1, 0};
  s.camera.fov_y = M_PI / 3;
  s.camera.near = 0.1;
  s.camera.far = 60;
  s.light.direction = Normalize(Vec3(-1, -1, -0.2));
  s.light.intensity = Vec3::Splat(1);
  s.light.ambient = Vec3::Splat(0.05);
  return s;
}

Scene Empty() {
  Scene s = FrontoParallelQuad(5);
  s.camera.direction = {0, 0, 1};
  return s;
}

Scene Crease() {
  Scene s = Room();
  AddBox(s, {-2.2, 0, -2.6}, {-0.6, 1.4, -1.0}, Vec3(0.8, 0.8, 0.8));
  return s;
}

Scene Occluder() {
  Scene s = Room();
  AddBox(s, {-1.5, 2.2, -2.5}, {1.5, 2.4, -0.5}, Vec3(0.6, 0.6, 0.8));
  return s;
}

Scene Spheres() {
  Scene s = Room();
  AddSphere(s, {-1.2, 1.0, -1.5}, 1.0, 16, 10, Vec3(0.85, 0.85, 0.85));
  AddSphere(s, {1.6, 0.6, -0.5}, 0.6, 12, 8, Vec3(0.8, 0.7, 0.3));
  return s;
}

std::vector<NamedScene> EvaluationScenes() {
  return {{"crease", Crease()}, {"occluder", Occluder()}, {"spheres", Spheres()}};
}

}  // namespace fixtures
}  // namespace mrr
