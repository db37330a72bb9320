#pragma once

#include "garm/geom/types.hpp"

namespace garm {

struct Projection {
  Vec2 pixel = Vec2::Zero();
  double depth = 0.0;
};

// Pinhole projection of a world-space point; throws "behind camera" for
// camera-space z <= 1e-6.
Projection project(const Camera& cam, const Vec3& p);

// Inverse: world-space point on the ray through `pixel` at camera depth.
Vec3 unproject(const Camera& cam, const Vec2& pixel, double depth);

// Projection of a point already expressed in camera space.
Projection project_camera_space(const Camera& cam, const Vec3& p_cam);

}  // namespace garm
