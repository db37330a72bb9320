#pragma once

#include <vector>

#include "garm/geom/types.hpp"

namespace garm {

// Ordered cycles of boundary vertices, following face winding.
std::vector<std::vector<int>> compute_boundary_loops(const TriMesh& mesh);

bool is_watertight(const TriMesh& mesh);

// Caps every boundary loop with a triangle fan around its centroid.
// Requires boundary_loops to be present; a closed mesh passes through
// unchanged. Loops that self-intersect in their best-fit plane are
// rejected ("degenerate boundary").
TriMesh close_mesh(const TriMesh& mesh);

std::vector<Vec3> vertex_normals(const TriMesh& mesh);
double surface_area(const TriMesh& mesh);
double signed_volume(const TriMesh& mesh);
int euler_characteristic(const TriMesh& mesh);

// Area-uniform surface samples, deterministic for a given seed.
std::vector<Vec3> sample_surface(const TriMesh& mesh, int count,
                                 uint64_t seed);

struct PlaneFit {
  Vec3 centroid = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
  double max_deviation = 0.0;
};
PlaneFit best_fit_plane(const std::vector<Vec3>& points);

}  // namespace garm
