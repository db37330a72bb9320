#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "garm/core/error.hpp"

namespace garm {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat34 = Eigen::Matrix<double, 3, 4>;
using Quat = Eigen::Quaterniond;

// Rigid transform q, t applied as p -> q * p + t.
struct RigidTransform {
  Quat rotation = Quat::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
  RigidTransform inverse() const {
    RigidTransform r;
    r.rotation = rotation.conjugate();
    r.translation = -(r.rotation * translation);
    return r;
  }
  RigidTransform compose(const RigidTransform& inner) const {
    // this ∘ inner
    RigidTransform r;
    r.rotation = rotation * inner.rotation;
    r.translation = rotation * inner.translation + translation;
    return r;
  }
  Mat34 matrix() const {
    Mat34 m;
    m.leftCols<3>() = rotation.toRotationMatrix();
    m.col(3) = translation;
    return m;
  }
};

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::optional<std::vector<std::vector<int>>> boundary_loops;

  bool empty() const { return faces.empty(); }
  void validate() const {
    const int nv = static_cast<int>(vertices.size());
    for (const auto& f : faces) {
      for (int k = 0; k < 3; ++k)
        require(f[k] >= 0 && f[k] < nv, "face index out of range");
      require(f[0] != f[1] && f[1] != f[2] && f[0] != f[2],
              "face repeats a vertex");
    }
  }
};

struct PolyCurve3 {
  std::vector<Vec3> points;
  bool closed = true;

  void validate() const {
    if (closed) require(points.size() >= 3, "closed curve needs >= 3 points");
    const size_t n = points.size();
    for (size_t i = 0; i + 1 < n || (closed && n > 1 && i < n); ++i) {
      const Vec3& a = points[i % n];
      const Vec3& b = points[(i + 1) % n];
      if (!closed && i + 1 >= n) break;
      require((a - b).norm() > 1e-9, "consecutive curve points coincide");
    }
  }
};

// Fixed curve-name vocabulary shared by templates, curve sets and
// per-frame observations.
const std::vector<std::string>& curve_name_vocabulary();
bool is_known_curve_name(const std::string& name);

struct PolyCurve2 {
  std::vector<Vec2> points;
  std::string label;

  void validate() const {
    require(is_known_curve_name(label), "unknown curve label");
    for (const auto& p : points)
      require(p.allFinite(), "non-finite curve coordinate");
  }
};

struct SdfGrid {
  Vec3 origin = Vec3::Zero();
  Vec3 spacing = Vec3::Ones();
  std::array<int, 3> dims = {2, 2, 2};
  std::vector<double> values;

  static SdfGrid allocate(const Vec3& origin, const Vec3& spacing,
                          const std::array<int, 3>& dims) {
    SdfGrid g;
    g.origin = origin;
    g.spacing = spacing;
    g.dims = dims;
    g.validate_shape();
    g.values.assign(static_cast<size_t>(dims[0]) * dims[1] * dims[2], 0.0);
    return g;
  }

  void validate_shape() const {
    for (int a = 0; a < 3; ++a) {
      require(dims[a] >= 2, "grid dims must be >= 2 per axis");
      require(spacing[a] > 0.0, "grid spacing must be positive");
    }
  }

  size_t index(int i, int j, int k) const {
    return static_cast<size_t>(i) +
           static_cast<size_t>(dims[0]) *
               (static_cast<size_t>(j) + static_cast<size_t>(dims[1]) * k);
  }
  double& at(int i, int j, int k) { return values[index(i, j, k)]; }
  double at(int i, int j, int k) const { return values[index(i, j, k)]; }

  Vec3 node_position(int i, int j, int k) const {
    return origin + Vec3(i * spacing[0], j * spacing[1], k * spacing[2]);
  }
  Vec3 max_corner() const {
    return node_position(dims[0] - 1, dims[1] - 1, dims[2] - 1);
  }
  bool contains(const Vec3& p) const {
    const Vec3 hi = max_corner();
    for (int a = 0; a < 3; ++a)
      if (p[a] < origin[a] || p[a] > hi[a]) return false;
    return true;
  }
  double max_spacing() const { return spacing.maxCoeff(); }

  // Fill from an arbitrary field, node by node.
  template <class F>
  void fill(F&& field) {
    for (int k = 0; k < dims[2]; ++k)
      for (int j = 0; j < dims[1]; ++j)
        for (int i = 0; i < dims[0]; ++i)
          at(i, j, k) = field(node_position(i, j, k));
  }
};

struct Camera {
  double fx = 1.0, fy = 1.0, cx = 0.0, cy = 0.0;
  RigidTransform world_to_cam;
  int width = 0, height = 0;

  void validate() const {
    require(fx > 0.0 && fy > 0.0, "focal lengths must be positive");
    const Mat3 r = world_to_cam.rotation.toRotationMatrix();
    require((r * r.transpose() - Mat3::Identity()).norm() < 1e-9 &&
                std::abs(r.determinant() - 1.0) < 1e-9,
            "rotation must be orthonormal with determinant +1");
  }
};

struct ScalarImage {
  int width = 0, height = 0;
  std::vector<double> data;

  static ScalarImage zeros(int w, int h) {
    ScalarImage img;
    img.width = w;
    img.height = h;
    img.data.assign(static_cast<size_t>(w) * h, 0.0);
    return img;
  }
  static ScalarImage constant(int w, int h, double v) {
    ScalarImage img = zeros(w, h);
    std::fill(img.data.begin(), img.data.end(), v);
    return img;
  }

  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }
  double at(int x, int y) const {
    return data[static_cast<size_t>(y) * width + x];
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  // Bilinear sample with clamped borders; pixel centers at integer coords.
  double sample(double x, double y) const;

  bool is_binary() const {
    for (double v : data)
      if (v != 0.0 && v != 1.0) return false;
    return true;
  }
};

}  // namespace garm
