#include "garm/geom/mesh_ops.hpp"

#include <Eigen/Eigenvalues>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace garm {
namespace {

uint64_t dir_edge_key(int a, int b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}

// 2D proper/improper segment intersection for non-adjacent segments.
bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1,
                        const Vec2& q2) {
  auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    const double v = (b.x() - a.x()) * (c.y() - a.y()) -
                     (b.y() - a.y()) * (c.x() - a.x());
    if (v > 1e-14) return 1;
    if (v < -1e-14) return -1;
    return 0;
  };
  auto on_segment = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return std::min(a.x(), b.x()) - 1e-14 <= c.x() &&
           c.x() <= std::max(a.x(), b.x()) + 1e-14 &&
           std::min(a.y(), b.y()) - 1e-14 <= c.y() &&
           c.y() <= std::max(a.y(), b.y()) + 1e-14;
  };
  const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

bool loop_self_intersects(const std::vector<Vec3>& pts) {
  PlaneFit fit = best_fit_plane(pts);
  Vec3 u = fit.normal.unitOrthogonal();
  Vec3 v = fit.normal.cross(u);
  std::vector<Vec2> p2(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec3 d = pts[i] - fit.centroid;
    p2[i] = Vec2(d.dot(u), d.dot(v));
  }
  const size_t n = p2.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      // skip adjacent segments (shared endpoint)
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(p2[i], p2[(i + 1) % n], p2[j], p2[(j + 1) % n]))
        return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> compute_boundary_loops(const TriMesh& mesh) {
  std::set<uint64_t> directed;
  for (const auto& f : mesh.faces)
    for (int k = 0; k < 3; ++k)
      directed.insert(dir_edge_key(f[k], f[(k + 1) % 3]));

  // Boundary directed edges: winding-order edges with no opposite twin.
  std::map<int, int> next;  // ordered for determinism
  for (const auto& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[k], b = f[(k + 1) % 3];
      if (!directed.count(dir_edge_key(b, a))) next[a] = b;
    }
  }

  std::vector<std::vector<int>> loops;
  std::set<int> visited;
  for (const auto& [start, _] : next) {
    if (visited.count(start)) continue;
    std::vector<int> loop;
    int v = start;
    while (true) {
      loop.push_back(v);
      visited.insert(v);
      auto it = next.find(v);
      require(it != next.end(), "non-manifold boundary");
      v = it->second;
      if (v == start) break;
      require(loop.size() <= mesh.vertices.size(), "non-manifold boundary");
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

bool is_watertight(const TriMesh& mesh) {
  std::set<uint64_t> directed;
  for (const auto& f : mesh.faces)
    for (int k = 0; k < 3; ++k)
      directed.insert(dir_edge_key(f[k], f[(k + 1) % 3]));
  for (const auto& f : mesh.faces)
    for (int k = 0; k < 3; ++k)
      if (!directed.count(dir_edge_key(f[(k + 1) % 3], f[k]))) return false;
  return true;
}

TriMesh close_mesh(const TriMesh& mesh) {
  const std::vector<std::vector<int>> loops =
      mesh.boundary_loops ? *mesh.boundary_loops : compute_boundary_loops(mesh);
  if (loops.empty()) return mesh;

  TriMesh out = mesh;
  out.boundary_loops = std::nullopt;
  for (const auto& loop : loops) {
    require(loop.size() >= 3, "degenerate boundary");
    std::vector<Vec3> pts;
    pts.reserve(loop.size());
    for (int v : loop) pts.push_back(mesh.vertices[v]);
    require(!loop_self_intersects(pts), "degenerate boundary");

    Vec3 centroid = Vec3::Zero();
    for (const auto& p : pts) centroid += p;
    centroid /= static_cast<double>(pts.size());
    const int c = static_cast<int>(out.vertices.size());
    out.vertices.push_back(centroid);
    const int n = static_cast<int>(loop.size());
    for (int i = 0; i < n; ++i)
      out.faces.push_back({loop[(i + 1) % n], loop[i], c});
  }
  return out;
}

std::vector<Vec3> vertex_normals(const TriMesh& mesh) {
  std::vector<Vec3> normals(mesh.vertices.size(), Vec3::Zero());
  for (const auto& f : mesh.faces) {
    const Vec3 n = (mesh.vertices[f[1]] - mesh.vertices[f[0]])
                       .cross(mesh.vertices[f[2]] - mesh.vertices[f[0]]);
    for (int k = 0; k < 3; ++k) normals[f[k]] += n;  // area-weighted
  }
  for (auto& n : normals) {
    const double len = n.norm();
    if (len > 1e-300) n /= len;
  }
  return normals;
}

double surface_area(const TriMesh& mesh) {
  double area = 0.0;
  for (const auto& f : mesh.faces)
    area += 0.5 * (mesh.vertices[f[1]] - mesh.vertices[f[0]])
                      .cross(mesh.vertices[f[2]] - mesh.vertices[f[0]])
                      .norm();
  return area;
}

double signed_volume(const TriMesh& mesh) {
  double vol = 0.0;
  for (const auto& f : mesh.faces)
    vol += mesh.vertices[f[0]].dot(
               mesh.vertices[f[1]].cross(mesh.vertices[f[2]])) /
           6.0;
  return vol;
}

int euler_characteristic(const TriMesh& mesh) {
  std::set<uint64_t> edges;
  for (const auto& f : mesh.faces)
    for (int k = 0; k < 3; ++k) {
      const int a = std::min(f[k], f[(k + 1) % 3]);
      const int b = std::max(f[k], f[(k + 1) % 3]);
      edges.insert(dir_edge_key(a, b));
    }
  return static_cast<int>(mesh.vertices.size()) -
         static_cast<int>(edges.size()) + static_cast<int>(mesh.faces.size());
}

std::vector<Vec3> sample_surface(const TriMesh& mesh, int count,
                                 uint64_t seed) {
  require(!mesh.faces.empty(), "empty mesh");
  std::vector<double> cum(mesh.faces.size());
  double total = 0.0;
  for (size_t i = 0; i < mesh.faces.size(); ++i) {
    const auto& f = mesh.faces[i];
    total += 0.5 * (mesh.vertices[f[1]] - mesh.vertices[f[0]])
                       .cross(mesh.vertices[f[2]] - mesh.vertices[f[0]])
                       .norm();
    cum[i] = total;
  }
  require(total > 0.0, "empty mesh");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Vec3> samples;
  samples.reserve(count);
  for (int s = 0; s < count; ++s) {
    const double r = uni(rng) * total;
    const size_t tri =
        std::lower_bound(cum.begin(), cum.end(), r) - cum.begin();
    const auto& f = mesh.faces[std::min(tri, mesh.faces.size() - 1)];
    const double su = std::sqrt(uni(rng));
    const double v = uni(rng);
    const double b0 = 1.0 - su, b1 = su * (1.0 - v), b2 = su * v;
    samples.push_back(b0 * mesh.vertices[f[0]] + b1 * mesh.vertices[f[1]] +
                      b2 * mesh.vertices[f[2]]);
  }
  return samples;
}

PlaneFit best_fit_plane(const std::vector<Vec3>& points) {
  PlaneFit fit;
  require(points.size() >= 3, "plane fit needs >= 3 points");
  for (const auto& p : points) fit.centroid += p;
  fit.centroid /= static_cast<double>(points.size());
  Mat3 cov = Mat3::Zero();
  for (const auto& p : points) {
    const Vec3 d = p - fit.centroid;
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
  fit.normal = eig.eigenvectors().col(0).normalized();
  for (const auto& p : points)
    fit.max_deviation =
        std::max(fit.max_deviation, std::abs((p - fit.centroid).dot(fit.normal)));
  return fit;
}

}  // namespace garm
