#pragma once

#include <span>
#include <vector>

#include "garm/geom/types.hpp"

namespace garm {

// Symmetric Chamfer distance: mean_{a in A} min_b |a-b| + mean_{b in B}
// min_a |b-a|, unsquared Euclidean. Accelerated with a kd-tree above a
// small-set cutoff, exhaustive below it.
double chamfer_distance(std::span<const Vec3> a, std::span<const Vec3> b);
double chamfer_distance(std::span<const Vec2> a, std::span<const Vec2> b);

// Mixed-dimension guard used by callers holding type-erased point sets.
struct PointSet {
  std::vector<Vec3> p3;
  std::vector<Vec2> p2;
  int dim() const { return p3.empty() ? (p2.empty() ? 0 : 2) : 3; }
};
double chamfer_distance(const PointSet& a, const PointSet& b);

// Chamfer plus its gradient w.r.t. the points of A (B treated as fixed
// targets). Nearest-neighbor assignments are held constant for the
// gradient, matching the loss's piecewise-smooth structure.
struct Chamfer2Grad {
  double value = 0.0;
  std::vector<Vec2> dA;
};
Chamfer2Grad chamfer_distance_grad_a(std::span<const Vec2> a,
                                     std::span<const Vec2> b);

}  // namespace garm
