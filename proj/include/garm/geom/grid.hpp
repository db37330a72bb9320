#pragma once

#include <array>

#include "garm/geom/types.hpp"

namespace garm {

struct TrilinearSample {
  double value = 0.0;
  Vec3 gradient = Vec3::Zero();
};

// Trilinear interpolation of the eight enclosing cell corners with its
// analytic spatial gradient. Queries outside the grid box throw
// "out of domain"; callers clamp or pad explicitly.
TrilinearSample trilinear_sample(const SdfGrid& grid, const Vec3& p);

// Same blend, exposing the corner indices and weights so losses can
// chain gradients onto the stored grid values.
struct TrilinearStencil {
  std::array<size_t, 8> corner;   // linear value indices
  std::array<double, 8> weight;   // blend weights, sum to 1
  std::array<Vec3, 8> dweight;    // spatial gradient of each weight
  double value = 0.0;
  Vec3 gradient = Vec3::Zero();
};
TrilinearStencil trilinear_stencil(const SdfGrid& grid, const Vec3& p);

}  // namespace garm
