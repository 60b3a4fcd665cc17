#ifndef MRR_MASK_H_
#define MRR_MASK_H_

#include <optional>

#include "mrr/image.h"
#include "mrr/scene.h"

namespace mrr {

struct EdgeParams {
  Real normal_threshold = 0.05;
  // Second-difference threshold in view-space depth units. When unset it is
  // derived per frame as kAutoDepthFraction times the valid depth range.
  std::optional<Real> depth_threshold;
  bool use_normal_edges = true;
  bool use_depth_edges = true;
  bool use_shadow_edges = false;
  // Bias for the single-tap shadow test; unset means ShadowMap::DefaultBias.
  std::optional<Real> shadow_bias;

  static constexpr Real kAutoDepthFraction = 0.02;
};

// Binary edge image plus the contributing sources (all at full resolution).
struct EdgeImage {
  ImageF mask;  // max over enabled sources, values in {0, 1}
  Mask normal;
  Mask depth;
  Mask shadow;
};

// 1 - dot(n, n') against the right and lower neighbours; a valid/invalid
// adjacency is always an edge.
Mask NormalEdges(const GBuffer& g, Real threshold);

// Second difference of depth along each axis, taken on 1/d and scaled by
// d(x)^2 into depth units: |1/d(x-1) - 2/d(x) + 1/d(x+1)| * d(x)^2. Zero on
// every plane regardless of slant. Axes truncated by the image border do not
// contribute. A valid pixel next to an invalid one (or the reverse) is an
// edge.
Mask DepthEdges(const GBuffer& g, Real threshold);

// Hard-shadow discontinuities between valid neighbours.
Mask ShadowEdges(const GBuffer& g, const ShadowMap& sm, Real bias);

// The default depth threshold for a frame.
Real AutoDepthThreshold(const GBuffer& g);

// Throws InvariantError when no source is enabled or when shadow edges are
// requested without a shadow map.
EdgeImage BuildEdgeImage(const GBuffer& g, const ShadowMap* sm, const EdgeParams& p);

// Debug visualization: red = normal, green = depth, blue = shadow.
Image3 EdgeVisualization(const EdgeImage& edges);

}  // namespace mrr

#endif  // MRR_MASK_H_
