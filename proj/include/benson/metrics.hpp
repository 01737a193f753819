#ifndef BENSON_METRICS_HPP
#define BENSON_METRICS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "benson/geometry.hpp"

namespace benson {

struct DistanceReport {
  double d_h = 0.0;
  Vec witness_outer;  // vertex of the outer set attaining the max
  Vec witness_inner;  // nearest point of the inner set to it
  std::vector<std::pair<Vec, double>> per_vertex;
};

// Nearest point of conv(m.vertices) to p by Wolfe's minimum-norm-point
// algorithm; returns (distance, argmin). Optimality is certified by the
// variational inequality over the vertex set.
std::pair<double, Vec> dist_point_to_polytope(const Vec& p, const VRep& m);

// One-sided Hausdorff distance for nested polytopes: the max over outer
// vertices of the distance to conv(inner). Throws NotNested when an inner
// vertex lies outside the outer set beyond 1e-7.
DistanceReport hausdorff_nested(const VRep& inner, const VRep& outer);

// Deterministic sampling lower bound: max distance from sampled boundary
// points of the outer set; falls back to hull-interior samples when the
// outer set is not full-dimensional.
double hausdorff_sampled(const VRep& inner, const VRep& outer, int samples,
                         std::uint64_t seed);

}  // namespace benson

#endif
