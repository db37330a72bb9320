#include "garm/geom/grid.hpp"

#include <cmath>

namespace garm {
namespace {

struct CellLocator {
  int base[3];
  double frac[3];
};

CellLocator locate(const SdfGrid& grid, const Vec3& p) {
  require(grid.contains(p), "out of domain");
  CellLocator c;
  for (int a = 0; a < 3; ++a) {
    const double u = (p[a] - grid.origin[a]) / grid.spacing[a];
    int i = static_cast<int>(std::floor(u));
    i = std::clamp(i, 0, grid.dims[a] - 2);  // inclusive upper boundary
    c.base[a] = i;
    c.frac[a] = u - i;
  }
  return c;
}

}  // namespace

TrilinearStencil trilinear_stencil(const SdfGrid& grid, const Vec3& p) {
  const CellLocator c = locate(grid, p);
  const double fx = c.frac[0], fy = c.frac[1], fz = c.frac[2];
  const double wx[2] = {1.0 - fx, fx};
  const double wy[2] = {1.0 - fy, fy};
  const double wz[2] = {1.0 - fz, fz};
  const double dx[2] = {-1.0 / grid.spacing[0], 1.0 / grid.spacing[0]};
  const double dy[2] = {-1.0 / grid.spacing[1], 1.0 / grid.spacing[1]};
  const double dz[2] = {-1.0 / grid.spacing[2], 1.0 / grid.spacing[2]};

  TrilinearStencil s;
  int n = 0;
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i) {
        const size_t idx =
            grid.index(c.base[0] + i, c.base[1] + j, c.base[2] + k);
        const double w = wx[i] * wy[j] * wz[k];
        s.corner[n] = idx;
        s.weight[n] = w;
        s.dweight[n] =
            Vec3(dx[i] * wy[j] * wz[k], wx[i] * dy[j] * wz[k],
                 wx[i] * wy[j] * dz[k]);
        const double v = grid.values[idx];
        s.value += w * v;
        s.gradient += s.dweight[n] * v;
        ++n;
      }
  return s;
}

TrilinearSample trilinear_sample(const SdfGrid& grid, const Vec3& p) {
  const TrilinearStencil s = trilinear_stencil(grid, p);
  return {s.value, s.gradient};
}

}  // namespace garm
