#include "garm/geom/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace garm {

Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b,
                               const Vec3& c) {
  const Vec3 ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + (d1 / (d1 - d3)) * ab;

  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + (d2 / (d2 - d6)) * ac;

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
    return b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);

  const double denom = 1.0 / (va + vb + vc);
  return a + ab * (vb * denom) + ac * (vc * denom);
}

double ray_triangle(const Vec3& o, const Vec3& d, const Vec3& a, const Vec3& b,
                    const Vec3& c) {
  const Vec3 e1 = b - a, e2 = c - a;
  const Vec3 pvec = d.cross(e2);
  const double det = e1.dot(pvec);
  if (std::abs(det) < 1e-14) return -1.0;
  const double inv_det = 1.0 / det;
  const Vec3 tvec = o - a;
  const double u = tvec.dot(pvec) * inv_det;
  if (u < 0.0 || u > 1.0) return -1.0;
  const Vec3 qvec = tvec.cross(e1);
  const double v = d.dot(qvec) * inv_det;
  if (v < 0.0 || u + v > 1.0) return -1.0;
  return e2.dot(qvec) * inv_det;
}

double winding_number(const TriMesh& mesh, const Vec3& p) {
  double total = 0.0;
  for (const auto& f : mesh.faces) {
    const Vec3 a = mesh.vertices[f[0]] - p;
    const Vec3 b = mesh.vertices[f[1]] - p;
    const Vec3 c = mesh.vertices[f[2]] - p;
    const double la = a.norm(), lb = b.norm(), lc = c.norm();
    const double det = a.dot(b.cross(c));
    const double denom =
        la * lb * lc + a.dot(b) * lc + b.dot(c) * la + c.dot(a) * lb;
    total += 2.0 * std::atan2(det, denom);
  }
  return total / (4.0 * M_PI);
}

TriangleBvh::TriangleBvh(const TriMesh& mesh) : mesh_(&mesh) {
  require(!mesh.faces.empty(), "empty mesh");
  const int n = static_cast<int>(mesh.faces.size());
  tri_order_.resize(n);
  std::iota(tri_order_.begin(), tri_order_.end(), 0);
  centroids_.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& f = mesh.faces[i];
    centroids_[i] = (mesh.vertices[f[0]] + mesh.vertices[f[1]] +
                     mesh.vertices[f[2]]) /
                    3.0;
  }
  nodes_.reserve(2 * n);
  root_ = build(0, n);
}

int TriangleBvh::build(int first, int count) {
  Node node;
  node.lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  node.hi = -node.lo;
  for (int i = first; i < first + count; ++i) {
    const auto& f = mesh_->faces[tri_order_[i]];
    for (int k = 0; k < 3; ++k) {
      node.lo = node.lo.cwiseMin(mesh_->vertices[f[k]]);
      node.hi = node.hi.cwiseMax(mesh_->vertices[f[k]]);
    }
  }
  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (count <= 4) {
    nodes_[self].first = first;
    nodes_[self].count = count;
    return self;
  }
  int axis = 0;
  const Vec3 ext = node.hi - node.lo;
  if (ext[1] > ext[0]) axis = 1;
  if (ext[2] > ext[axis]) axis = 2;
  const int mid = first + count / 2;
  std::nth_element(tri_order_.begin() + first, tri_order_.begin() + mid,
                   tri_order_.begin() + first + count, [&](int a, int b) {
                     return centroids_[a][axis] < centroids_[b][axis];
                   });
  const int l = build(first, mid - first);
  const int r = build(mid, first + count - mid);
  nodes_[self].left = l;
  nodes_[self].right = r;
  return self;
}

double TriangleBvh::box_dist_sq(const Node& n, const Vec3& p) const {
  double s = 0.0;
  for (int a = 0; a < 3; ++a) {
    const double d = std::max({n.lo[a] - p[a], 0.0, p[a] - n.hi[a]});
    s += d * d;
  }
  return s;
}

void TriangleBvh::closest_rec(int node, const Vec3& p, ClosestHit& best) const {
  const Node& n = nodes_[node];
  if (box_dist_sq(n, p) >= best.distance * best.distance) return;
  if (n.count > 0) {
    for (int i = n.first; i < n.first + n.count; ++i) {
      const int tri = tri_order_[i];
      const auto& f = mesh_->faces[tri];
      const Vec3 q = closest_point_on_triangle(p, mesh_->vertices[f[0]],
                                               mesh_->vertices[f[1]],
                                               mesh_->vertices[f[2]]);
      const double d = (p - q).norm();
      if (d < best.distance) {
        best.distance = d;
        best.point = q;
        best.face = tri;
      }
    }
    return;
  }
  const double dl = box_dist_sq(nodes_[n.left], p);
  const double dr = box_dist_sq(nodes_[n.right], p);
  if (dl < dr) {
    closest_rec(n.left, p, best);
    closest_rec(n.right, p, best);
  } else {
    closest_rec(n.right, p, best);
    closest_rec(n.left, p, best);
  }
}

ClosestHit TriangleBvh::closest_point(const Vec3& p) const {
  ClosestHit best;
  closest_rec(root_, p, best);
  // Barycentric coordinates of the closest point on its triangle.
  if (best.face >= 0) {
    const auto& f = mesh_->faces[best.face];
    const Vec3& a = mesh_->vertices[f[0]];
    const Vec3& b = mesh_->vertices[f[1]];
    const Vec3& c = mesh_->vertices[f[2]];
    const Vec3 v0 = b - a, v1 = c - a, v2 = best.point - a;
    const double d00 = v0.dot(v0), d01 = v0.dot(v1), d11 = v1.dot(v1);
    const double d20 = v2.dot(v0), d21 = v2.dot(v1);
    const double denom = d00 * d11 - d01 * d01;
    double v = 0.0, w = 0.0;
    if (std::abs(denom) > 1e-300) {
      v = (d11 * d20 - d01 * d21) / denom;
      w = (d00 * d21 - d01 * d20) / denom;
    }
    best.barycentric = Vec3(1.0 - v - w, v, w);
  }
  return best;
}

bool TriangleBvh::box_ray(const Node& n, const Vec3& o, const Vec3& inv_dir,
                          double t_min, double t_max) const {
  for (int a = 0; a < 3; ++a) {
    double t0 = (n.lo[a] - o[a]) * inv_dir[a];
    double t1 = (n.hi[a] - o[a]) * inv_dir[a];
    if (inv_dir[a] < 0.0) std::swap(t0, t1);
    t_min = std::max(t_min, t0);
    t_max = std::min(t_max, t1);
    if (t_max < t_min) return false;
  }
  return true;
}

void TriangleBvh::raycast_rec(int node, const Vec3& o, const Vec3& d,
                              const Vec3& inv_dir, double t_min,
                              RayHit& best) const {
  const Node& n = nodes_[node];
  if (!box_ray(n, o, inv_dir, t_min, best.t)) return;
  if (n.count > 0) {
    for (int i = n.first; i < n.first + n.count; ++i) {
      const int tri = tri_order_[i];
      const auto& f = mesh_->faces[tri];
      const double t = ray_triangle(o, d, mesh_->vertices[f[0]],
                                    mesh_->vertices[f[1]],
                                    mesh_->vertices[f[2]]);
      if (t > t_min && t < best.t) {
        best.hit = true;
        best.t = t;
        best.face = tri;
      }
    }
    return;
  }
  raycast_rec(n.left, o, d, inv_dir, t_min, best);
  raycast_rec(n.right, o, d, inv_dir, t_min, best);
}

RayHit TriangleBvh::raycast(const Vec3& origin, const Vec3& dir, double t_min,
                            double t_max) const {
  RayHit best;
  best.t = t_max;
  Vec3 inv_dir;
  for (int a = 0; a < 3; ++a)
    inv_dir[a] = dir[a] != 0.0 ? 1.0 / dir[a]
                               : std::numeric_limits<double>::infinity();
  raycast_rec(root_, origin, dir, inv_dir, t_min, best);
  if (!best.hit) best.t = std::numeric_limits<double>::infinity();
  return best;
}

void TriangleBvh::count_rec(int node, const Vec3& o, const Vec3& d,
                            const Vec3& inv_dir, double t_min,
                            int& count) const {
  const Node& n = nodes_[node];
  if (!box_ray(n, o, inv_dir, t_min,
               std::numeric_limits<double>::infinity()))
    return;
  if (n.count > 0) {
    for (int i = n.first; i < n.first + n.count; ++i) {
      const auto& f = mesh_->faces[tri_order_[i]];
      const double t = ray_triangle(o, d, mesh_->vertices[f[0]],
                                    mesh_->vertices[f[1]],
                                    mesh_->vertices[f[2]]);
      if (t > t_min) ++count;
    }
    return;
  }
  count_rec(n.left, o, d, inv_dir, t_min, count);
  count_rec(n.right, o, d, inv_dir, t_min, count);
}

int TriangleBvh::count_hits(const Vec3& origin, const Vec3& dir,
                            double t_min) const {
  int count = 0;
  Vec3 inv_dir;
  for (int a = 0; a < 3; ++a)
    inv_dir[a] = dir[a] != 0.0 ? 1.0 / dir[a]
                               : std::numeric_limits<double>::infinity();
  count_rec(root_, origin, dir, inv_dir, t_min, count);
  return count;
}

}  // namespace garm
