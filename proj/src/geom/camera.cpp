#include "garm/geom/camera.hpp"

namespace garm {

Projection project_camera_space(const Camera& cam, const Vec3& p_cam) {
  require(p_cam.z() > 1e-6, "behind camera");
  return {Vec2(cam.fx * p_cam.x() / p_cam.z() + cam.cx,
               cam.fy * p_cam.y() / p_cam.z() + cam.cy),
          p_cam.z()};
}

Projection project(const Camera& cam, const Vec3& p) {
  return project_camera_space(cam, cam.world_to_cam.apply(p));
}

Vec3 unproject(const Camera& cam, const Vec2& pixel, double depth) {
  const Vec3 p_cam((pixel.x() - cam.cx) / cam.fx * depth,
                   (pixel.y() - cam.cy) / cam.fy * depth, depth);
  return cam.world_to_cam.inverse().apply(p_cam);
}

}  // namespace garm
