#pragma once

#include <limits>
#include <vector>

#include "garm/geom/types.hpp"

namespace garm {

// Closest point on triangle (a, b, c) to p (Ericson).
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                               const Vec3& c);

struct RayHit {
  bool hit = false;
  double t = std::numeric_limits<double>::infinity();
  int face = -1;
};

struct ClosestHit {
  double distance = std::numeric_limits<double>::infinity();
  Vec3 point = Vec3::Zero();
  int face = -1;
  Vec3 barycentric = Vec3::Zero();
};

// Median-split AABB tree over mesh triangles; shared by distance queries,
// ray casting and nearest-surface-point lookups.
class TriangleBvh {
public:
  explicit TriangleBvh(const TriMesh& mesh);

  ClosestHit closest_point(const Vec3& p) const;
  // First intersection along origin + t * dir with t in (t_min, t_max).
  RayHit raycast(const Vec3& origin, const Vec3& dir, double t_min = 1e-9,
                 double t_max = std::numeric_limits<double>::infinity()) const;
  // Number of intersections with t > t_min (for parity-style queries).
  int count_hits(const Vec3& origin, const Vec3& dir,
                 double t_min = 1e-9) const;

  const TriMesh& mesh() const { return *mesh_; }

private:
  struct Node {
    Vec3 lo, hi;
    int left = -1, right = -1;
    int first = 0, count = 0;  // leaf triangle range
  };

  int build(int first, int count);
  double box_dist_sq(const Node& n, const Vec3& p) const;
  bool box_ray(const Node& n, const Vec3& o, const Vec3& inv_dir,
               double t_min, double t_max) const;
  void closest_rec(int node, const Vec3& p, ClosestHit& best) const;
  void raycast_rec(int node, const Vec3& o, const Vec3& d,
                   const Vec3& inv_dir, double t_min, RayHit& best) const;
  void count_rec(int node, const Vec3& o, const Vec3& d, const Vec3& inv_dir,
                 double t_min, int& count) const;

  const TriMesh* mesh_;
  std::vector<int> tri_order_;
  std::vector<Vec3> centroids_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Möller-Trumbore ray/triangle intersection; returns t or -1.
double ray_triangle(const Vec3& o, const Vec3& d, const Vec3& a, const Vec3& b,
                    const Vec3& c);

// Exact generalized winding number of p w.r.t. the mesh (1 inside a
// closed surface, 0 outside, fractional near open boundaries).
double winding_number(const TriMesh& mesh, const Vec3& p);

}  // namespace garm
