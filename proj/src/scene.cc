#include "mrr/scene.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mrr/error.h"

namespace mrr {

namespace {

bool IsUnit(const Vec3& v, Real tol) { return std::fabs(Length(v) - 1) <= tol; }

std::string Where(size_t tri) { return "triangle " + std::to_string(tri) + ": "; }

}  // namespace

void Scene::Validate() const {
  Require(!triangles.empty(), "scene has no triangles");
  for (size_t t = 0; t < triangles.size(); ++t) {
    const Triangle& tri = triangles[t];
    for (int k = 0; k < 3; ++k) {
      Require(IsFinite(tri.v[k]), Where(t) + "non-finite vertex");
      Require(IsUnit(tri.n[k], 1e-4), Where(t) + "vertex normal is not unit length");
    }
    Require(tri.albedo.x >= 0 && tri.albedo.y >= 0 && tri.albedo.z >= 0 &&
                MaxComponent(tri.albedo) <= 1,
            Where(t) + "albedo outside [0, 1]");
  }
  Require(IsUnit(light.direction, 1e-4), "light direction is not unit length");
  Require(light.intensity.x >= 0 && light.intensity.y >= 0 && light.intensity.z >= 0,
          "negative light intensity");
  Require(light.ambient.x >= 0 && light.ambient.y >= 0 && light.ambient.z >= 0,
          "negative ambient light");
  // CameraView validates the camera itself.
  CameraView(camera, 8, 8);
}

std::pair<Vec3, Vec3> Scene::Bounds() const {
  constexpr Real inf = std::numeric_limits<Real>::infinity();
  Vec3 lo = Vec3::Splat(inf), hi = Vec3::Splat(-inf);
  for (const Triangle& tri : triangles) {
    for (const Vec3& v : tri.v) {
      lo = Min(lo, v);
      hi = Max(hi, v);
    }
  }
  return {lo, hi};
}

Real Scene::Diagonal() const {
  const auto [lo, hi] = Bounds();
  return Length(hi - lo);
}

CameraView::CameraView(const Camera& camera, int width, int height)
    : camera_(camera), width_(width), height_(height) {
  Require(width >= 1 && height >= 1, "framebuffer dimensions must be >= 1");
  Require(IsFinite(camera.position), "camera position is not finite");
  Require(camera.fov_y > 0 && camera.fov_y < M_PI, "camera fov_y outside (0, pi)");
  Require(camera.near > 0, "camera near plane must be > 0");
  Require(camera.far > camera.near, "camera far plane must exceed near");
  Require(IsFinite(camera.direction) && Length(camera.direction) > 0,
          "camera direction is degenerate");
  Require(IsFinite(camera.up) && Length(camera.up) > 0, "camera up is degenerate");
  forward_ = Normalize(camera.direction);
  const Vec3 side = Cross(forward_, camera.up);
  Require(Length(side) > 1e-6 * Length(camera.up),
          "camera direction is collinear with up");
  right_ = Normalize(side);
  up_ = Cross(right_, forward_);
  focal_ = 0.5 * height / std::tan(0.5 * camera.fov_y);
}

Vec3 CameraView::WorldToView(const Vec3& p) const {
  return DirectionToView(p - camera_.position);
}

Vec3 CameraView::ViewToWorld(const Vec3& p) const {
  return camera_.position + DirectionToWorld(p);
}

Vec3 CameraView::DirectionToView(const Vec3& d) const {
  return {Dot(d, right_), Dot(d, up_), -Dot(d, forward_)};
}

Vec3 CameraView::DirectionToWorld(const Vec3& d) const {
  return right_ * d.x + up_ * d.y - forward_ * d.z;
}

std::optional<std::array<Real, 2>> CameraView::Project(const Vec3& view) const {
  const Real depth = -view.z;
  if (!(depth > 0)) return std::nullopt;
  return std::array<Real, 2>{0.5 * width_ + focal_ * view.x / depth,
                             0.5 * height_ - focal_ * view.y / depth};
}

Vec3 CameraView::RayThrough(Real px, Real py) const {
  return {(px - 0.5 * width_) / focal_, (0.5 * height_ - py) / focal_, -1};
}

bool ShadowMap::Lit(Real u, Real v, Real point_depth, Real bias) const {
  if (!(u >= 0 && u < 1 && v >= 0 && v < 1)) return true;
  const int res = resolution();
  const int i = std::min(static_cast<int>(u * res), res - 1);
  const int j = std::min(static_cast<int>(v * res), res - 1);
  return depth(i, j) >= point_depth - bias;
}

bool ShadowTestHard(const ShadowMap& sm, const Vec3& world_pos, Real bias) {
  const Vec3 l = sm.ToLightSpace(world_pos);
  return sm.Lit(l.x, l.y, l.z, bias);
}

Real SlopeScaledBias(const ShadowMap& sm, Real bias, Real cos_l, Real texels) {
  const Real c = std::clamp(cos_l, Real(0.05), Real(1));
  return bias + texels * sm.texel_size * std::sqrt(1 - c * c) / c;
}

bool ReceiverLit(const ShadowMap& sm, const Vec3& world_pos, const Vec3& world_normal,
                 Real bias) {
  const Real cos_l = -Dot(world_normal, sm.light_direction);
  if (cos_l <= 0) return false;
  return ShadowTestHard(sm, world_pos, SlopeScaledBias(sm, bias, cos_l, 1));
}

namespace {

struct ScreenVertex {
  Real x, y;  // continuous pixel coordinates
};

// Visits every pixel whose center lies inside the triangle, passing the
// screen-space barycentric weights. Shared edges follow a top-left rule so a
// pixel center on an edge between two triangles is visited once.
template <typename Fn>
void ScanTriangle(ScreenVertex a, ScreenVertex b, ScreenVertex c, int width,
                  int height, Fn&& visit) {
  Real area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (!(std::fabs(area) > 0) || !std::isfinite(area)) return;
  bool swapped = false;
  if (area < 0) {
    std::swap(b, c);
    area = -area;
    swapped = true;
  }
  const int x0 = std::max(0, static_cast<int>(std::floor(std::min({a.x, b.x, c.x}))));
  const int x1 = std::min(width - 1, static_cast<int>(std::ceil(std::max({a.x, b.x, c.x}))));
  const int y0 = std::max(0, static_cast<int>(std::floor(std::min({a.y, b.y, c.y}))));
  const int y1 = std::min(height - 1, static_cast<int>(std::ceil(std::max({a.y, b.y, c.y}))));
  if (x0 > x1 || y0 > y1) return;

  // Edge function of (p, q) evaluated at s; positive inside for the
  // orientation fixed above (y grows downward).
  auto edge = [](const ScreenVertex& p, const ScreenVertex& q, Real sx, Real sy) {
    return (q.x - p.x) * (sy - p.y) - (q.y - p.y) * (sx - p.x);
  };
  auto top_left = [](const ScreenVertex& p, const ScreenVertex& q) {
    const Real dy = q.y - p.y, dx = q.x - p.x;
    return dy < 0 || (dy == 0 && dx > 0);
  };
  const bool tl0 = top_left(b, c), tl1 = top_left(c, a), tl2 = top_left(a, b);
  for (int py = y0; py <= y1; ++py) {
    const Real sy = py + 0.5;
    for (int px = x0; px <= x1; ++px) {
      const Real sx = px + 0.5;
      const Real e0 = edge(b, c, sx, sy);
      const Real e1 = edge(c, a, sx, sy);
      const Real e2 = edge(a, b, sx, sy);
      if (e0 < 0 || e1 < 0 || e2 < 0) continue;
      if ((e0 == 0 && !tl0) || (e1 == 0 && !tl1) || (e2 == 0 && !tl2)) continue;
      Real w0 = e0 / area, w1 = e1 / area, w2 = e2 / area;
      if (swapped) std::swap(w1, w2);
      visit(px, py, w0, w1, w2);
    }
  }
}

struct ClipVertex {
  Vec3 pos;     // view space
  Vec3 normal;  // view space
};

// Sutherland-Hodgman against depth >= near.
std::vector<ClipVertex> ClipNear(const std::array<ClipVertex, 3>& tri, Real near) {
  std::vector<ClipVertex> out;
  out.reserve(4);
  for (int i = 0; i < 3; ++i) {
    const ClipVertex& cur = tri[i];
    const ClipVertex& nxt = tri[(i + 1) % 3];
    const Real dc = -cur.pos.z - near;
    const Real dn = -nxt.pos.z - near;
    if (dc >= 0) out.push_back(cur);
    if ((dc >= 0) != (dn >= 0)) {
      const Real t = dc / (dc - dn);
      out.push_back({cur.pos + (nxt.pos - cur.pos) * t,
                     cur.normal + (nxt.normal - cur.normal) * t});
    }
  }
  return out;
}

}  // namespace

GBuffer RasterizeGBuffer(const Scene& scene, int width, int height) {
  Require(width >= 8 && height >= 8, "G-buffer dimensions must be >= 8");
  const CameraView view(scene.camera, width, height);
  const Camera& cam = scene.camera;
  GBuffer g{view,
            Image3(width, height),
            ImageF(width, height, cam.far),
            Image3(width, height, Vec3(0, 0, 1)),
            Image3(width, height),
            Mask(width, height, 0)};

  for (const Triangle& tri : scene.triangles) {
    std::array<ClipVertex, 3> verts;
    for (int k = 0; k < 3; ++k) {
      verts[k] = {view.WorldToView(tri.v[k]), view.DirectionToView(tri.n[k])};
    }
    const std::vector<ClipVertex> poly = ClipNear(verts, cam.near);
    if (poly.size() < 3) continue;

    std::vector<ScreenVertex> screen(poly.size());
    std::vector<Real> inv_depth(poly.size());
    for (size_t k = 0; k < poly.size(); ++k) {
      const auto p = view.Project(poly[k].pos);
      screen[k] = {(*p)[0], (*p)[1]};
      inv_depth[k] = -1 / poly[k].pos.z;
    }
    for (size_t k = 1; k + 1 < poly.size(); ++k) {
      const size_t idx[3] = {0, k, k + 1};
      ScanTriangle(
          screen[idx[0]], screen[idx[1]], screen[idx[2]], width, height,
          [&](int px, int py, Real b0, Real b1, Real b2) {
            const Real bw[3] = {b0 * inv_depth[idx[0]], b1 * inv_depth[idx[1]],
                                b2 * inv_depth[idx[2]]};
            const Real inv = bw[0] + bw[1] + bw[2];
            const Real depth = 1 / inv;
            if (!(depth < g.depth(px, py)) || depth < cam.near || depth > cam.far) {
              return;
            }
            Vec3 pos, nrm;
            for (int v = 0; v < 3; ++v) {
              const Real w = bw[v] / inv;
              pos += poly[idx[v]].pos * w;
              nrm += poly[idx[v]].normal * w;
            }
            g.depth(px, py) = depth;
            g.position(px, py) = pos;
            g.normal(px, py) = Normalize(nrm);
            g.albedo(px, py) = tri.albedo;
            g.valid(px, py) = 1;
          });
    }
  }
  return g;
}

ShadowMap RasterizeShadowMap(const Scene& scene, int resolution) {
  Require(resolution >= 8, "shadow map resolution must be >= 8");
  Require(!scene.triangles.empty(), "shadow map of an empty scene");
  const Vec3 forward = Normalize(scene.light.direction);
  const Vec3 helper = std::fabs(forward.y) < 0.99 ? Vec3(0, 1, 0) : Vec3(1, 0, 0);
  const Vec3 right = Normalize(Cross(forward, helper));
  const Vec3 up = Cross(right, forward);

  constexpr Real inf = std::numeric_limits<Real>::infinity();
  Vec3 lo = Vec3::Splat(inf), hi = Vec3::Splat(-inf);
  for (const Triangle& tri : scene.triangles) {
    for (const Vec3& v : tri.v) {
      const Vec3 l(Dot(v, right), Dot(v, up), Dot(v, forward));
      lo = Min(lo, l);
      hi = Max(hi, l);
    }
  }
  Require(IsFinite(lo) && IsFinite(hi), "scene bounds are not finite");
  const Real extent = 1.02 * std::max({hi.x - lo.x, hi.y - lo.y, Real(1e-6)});
  const Vec3 center = (lo + hi) * 0.5;

  // world -> (u, v, depth): u grows along `right`, v grows against `up`.
  Mat4 basis = Mat4::FromBasis(right, up, forward, Vec3());
  Mat4 to_tex = Mat4::Identity();
  to_tex.at(0, 0) = 1 / extent;
  to_tex.at(0, 3) = 0.5 - center.x / extent;
  to_tex.at(1, 1) = -1 / extent;
  to_tex.at(1, 3) = 0.5 + center.y / extent;
  to_tex.at(2, 3) = -lo.z;

  ShadowMap sm;
  sm.transform = to_tex * basis;
  Require(std::fabs(sm.transform.Determinant()) > 0, "shadow transform is singular");
  sm.scene_diagonal = scene.Diagonal();
  sm.light_direction = forward;
  sm.texel_size = extent / resolution;
  const Real background = (hi.z - lo.z) + sm.scene_diagonal;
  sm.depth = ImageF(resolution, resolution, background);

  for (const Triangle& tri : scene.triangles) {
    Vec3 l[3];
    ScreenVertex s[3];
    for (int k = 0; k < 3; ++k) {
      l[k] = sm.ToLightSpace(tri.v[k]);
      s[k] = {l[k].x * resolution, l[k].y * resolution};
    }
    ScanTriangle(s[0], s[1], s[2], resolution, resolution,
                 [&](int px, int py, Real b0, Real b1, Real b2) {
                   const Real d = b0 * l[0].z + b1 * l[1].z + b2 * l[2].z;
                   if (d < sm.depth(px, py)) sm.depth(px, py) = d;
                 });
  }
  return sm;
}

}  // namespace mrr
