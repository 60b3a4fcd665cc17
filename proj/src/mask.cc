#include "mrr/mask.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mrr/error.h"
#include "mrr/parallel.h"

namespace mrr {

Mask NormalEdges(const GBuffer& g, Real threshold) {
  const int w = g.width(), h = g.height();
  Mask out(w, h, 0);
  auto differs = [&](int x0, int y0, int x1, int y1) {
    const bool v0 = g.valid(x0, y0), v1 = g.valid(x1, y1);
    if (v0 != v1) return true;
    if (!v0) return false;
    return 1 - Dot(g.normal(x0, y0), g.normal(x1, y1)) > threshold;
  };
  ParallelForRows(h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      const bool edge = (x + 1 < w && differs(x, y, x + 1, y)) ||
                        (y + 1 < h && differs(x, y, x, y + 1));
      out(x, y) = edge;
    }
  });
  return out;
}

Mask DepthEdges(const GBuffer& g, Real threshold) {
  const int w = g.width(), h = g.height();
  Mask out(w, h, 0);
  ParallelForRows(h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      const bool v = g.valid(x, y);
      bool edge = false;
      const int nx[4] = {x - 1, x + 1, x, x};
      const int ny[4] = {y, y, y - 1, y + 1};
      for (int k = 0; k < 4 && !edge; ++k) {
        if (g.valid.InBounds(nx[k], ny[k]) && g.valid(nx[k], ny[k]) != v) edge = true;
      }
      if (!edge && v) {
        // 1/depth is affine in screen space across any plane, so its second
        // difference vanishes on planar ramps; d^2 converts back to depth
        // units.
        const Real d = g.depth(x, y);
        const Real scale = d * d;
        auto inv = [&](int xx, int yy) { return 1 / g.depth(xx, yy); };
        if (x > 0 && x + 1 < w) {
          edge |= std::fabs(inv(x - 1, y) - 2 / d + inv(x + 1, y)) * scale > threshold;
        }
        if (y > 0 && y + 1 < h) {
          edge |= std::fabs(inv(x, y - 1) - 2 / d + inv(x, y + 1)) * scale > threshold;
        }
      }
      out(x, y) = edge;
    }
  });
  return out;
}

Mask ShadowEdges(const GBuffer& g, const ShadowMap& sm, Real bias) {
  const int w = g.width(), h = g.height();
  Mask lit(w, h, 0);
  ParallelForRows(h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      if (!g.valid(x, y)) continue;
      lit(x, y) = ReceiverLit(sm, g.view.ViewToWorld(g.position(x, y)),
                              g.view.DirectionToWorld(g.normal(x, y)), bias);
    }
  });
  Mask out(w, h, 0);
  auto differs = [&](int x0, int y0, int x1, int y1) {
    return g.valid(x0, y0) && g.valid(x1, y1) && lit(x0, y0) != lit(x1, y1);
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out(x, y) = (x + 1 < w && differs(x, y, x + 1, y)) ||
                  (y + 1 < h && differs(x, y, x, y + 1));
    }
  }
  return out;
}

Real AutoDepthThreshold(const GBuffer& g) {
  Real lo = std::numeric_limits<Real>::infinity(), hi = -lo;
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) {
      if (!g.valid(x, y)) continue;
      lo = std::min(lo, g.depth(x, y));
      hi = std::max(hi, g.depth(x, y));
    }
  }
  if (!(hi >= lo)) return EdgeParams::kAutoDepthFraction;
  // A floor keeps rounding noise on constant-depth frames below threshold.
  return EdgeParams::kAutoDepthFraction * std::max(hi - lo, 1e-6 * std::max(hi, Real(1)));
}

EdgeImage BuildEdgeImage(const GBuffer& g, const ShadowMap* sm, const EdgeParams& p) {
  Require(p.use_normal_edges || p.use_depth_edges || p.use_shadow_edges,
          "at least one edge source must be enabled");
  Require(!p.use_shadow_edges || sm != nullptr,
          "shadow edges need a shadow map");
  Require(p.normal_threshold >= 0, "normal threshold must be >= 0");
  Require(!p.depth_threshold || *p.depth_threshold >= 0, "depth threshold must be >= 0");

  const int w = g.width(), h = g.height();
  EdgeImage e{ImageF(w, h, 0), Mask(w, h, 0), Mask(w, h, 0), Mask(w, h, 0)};
  if (p.use_normal_edges) e.normal = NormalEdges(g, p.normal_threshold);
  if (p.use_depth_edges) {
    e.depth = DepthEdges(g, p.depth_threshold ? *p.depth_threshold : AutoDepthThreshold(g));
  }
  if (p.use_shadow_edges) {
    e.shadow = ShadowEdges(g, *sm, p.shadow_bias ? *p.shadow_bias : sm->DefaultBias());
  }
  auto m = e.mask.pixels();
  auto n = e.normal.pixels(), d = e.depth.pixels(), s = e.shadow.pixels();
  for (size_t i = 0; i < m.size(); ++i) m[i] = (n[i] | d[i] | s[i]) ? 1 : 0;
  return e;
}

Image3 EdgeVisualization(const EdgeImage& edges) {
  Image3 out(edges.mask.width(), edges.mask.height());
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      out(x, y) = {Real(edges.normal(x, y)), Real(edges.depth(x, y)),
                   Real(edges.shadow(x, y))};
    }
  }
  return out;
}

}  // namespace mrr
