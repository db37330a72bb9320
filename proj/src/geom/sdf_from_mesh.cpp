#include "garm/geom/sdf_from_mesh.hpp"

#include <deque>

#include "garm/geom/bvh.hpp"
#include "garm/geom/mesh_ops.hpp"

namespace garm {

SdfGrid sdf_from_mesh(const TriMesh& mesh, const std::array<int, 3>& dims,
                      double margin) {
  require(!mesh.faces.empty(), "empty mesh");
  require(is_watertight(mesh), "open mesh");

  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (const auto& v : mesh.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  if (margin < 0.0) margin = 0.1 * (hi - lo).norm();
  lo -= Vec3::Constant(margin);
  hi += Vec3::Constant(margin);

  SdfGrid grid;
  grid.origin = lo;
  grid.dims = dims;
  for (int a = 0; a < 3; ++a)
    grid.spacing[a] = (hi[a] - lo[a]) / (dims[a] - 1);
  grid.validate_shape();
  grid.values.assign(static_cast<size_t>(dims[0]) * dims[1] * dims[2], 0.0);

  const TriangleBvh bvh(mesh);
  const double band = 1.5 * grid.max_spacing();

  // Unsigned distances plus exact winding-number signs inside the band.
  // 0 = undecided, 1 = outside, -1 = inside.
  std::vector<int8_t> state(grid.values.size(), 0);
  for (int k = 0; k < dims[2]; ++k)
    for (int j = 0; j < dims[1]; ++j)
      for (int i = 0; i < dims[0]; ++i) {
        const Vec3 p = grid.node_position(i, j, k);
        const double ud = bvh.closest_point(p).distance;
        const size_t idx = grid.index(i, j, k);
        grid.values[idx] = ud;
        if (ud <= band)
          state[idx] = winding_number(mesh, p) >= 0.5 ? -1 : 1;
      }

  // Flood fill the far field: crossing between off-band nodes cannot
  // cross the surface, so signs propagate from the grid boundary inward.
  std::deque<std::array<int, 3>> queue;
  auto try_seed = [&](int i, int j, int k, int8_t sign) {
    const size_t idx = grid.index(i, j, k);
    if (state[idx] != 0) return;
    state[idx] = sign;
    queue.push_back({i, j, k});
  };
  for (int k = 0; k < dims[2]; ++k)
    for (int j = 0; j < dims[1]; ++j)
      for (int i = 0; i < dims[0]; ++i)
        if (i == 0 || j == 0 || k == 0 || i == dims[0] - 1 ||
            j == dims[1] - 1 || k == dims[2] - 1)
          try_seed(i, j, k, 1);

  auto flood = [&]() {
    while (!queue.empty()) {
      const auto [i, j, k] = queue.front();
      queue.pop_front();
      const int8_t sign = state[grid.index(i, j, k)];
      const int nb[6][3] = {{i - 1, j, k}, {i + 1, j, k}, {i, j - 1, k},
                            {i, j + 1, k}, {i, j, k - 1}, {i, j, k + 1}};
      for (const auto& q : nb) {
        if (q[0] < 0 || q[1] < 0 || q[2] < 0 || q[0] >= dims[0] ||
            q[1] >= dims[1] || q[2] >= dims[2])
          continue;
        const size_t idx = grid.index(q[0], q[1], q[2]);
        if (state[idx] != 0) continue;
        state[idx] = sign;
        queue.push_back({q[0], q[1], q[2]});
      }
    }
  };
  flood();

  // Regions cut off from the grid boundary by the band (the interior,
  // enclosed pockets) inherit the adjacent band signs, which are exact.
  for (int k = 0; k < dims[2]; ++k)
    for (int j = 0; j < dims[1]; ++j)
      for (int i = 0; i < dims[0]; ++i)
        if (grid.values[grid.index(i, j, k)] <= band)
          queue.push_back({i, j, k});
  flood();

  for (int k = 0; k < dims[2]; ++k)
    for (int j = 0; j < dims[1]; ++j)
      for (int i = 0; i < dims[0]; ++i) {
        const size_t idx = grid.index(i, j, k);
        if (state[idx] == 0)
          state[idx] =
              winding_number(mesh, grid.node_position(i, j, k)) >= 0.5 ? -1
                                                                       : 1;
        grid.values[idx] *= state[idx];
      }
  return grid;
}

}  // namespace garm
