#pragma once

#include "garm/geom/types.hpp"

namespace garm {

// Extracts the iso-surface {p : f(p) = iso} as a triangle mesh. Vertices
// are placed by linear interpolation along sign-changing grid edges and
// shared between cells, so the output is watertight whenever the surface
// does not intersect the grid boundary. Returns an empty mesh if the
// field never crosses iso. Triangles are wound so normals point toward
// increasing field values (outward for a signed distance field).
TriMesh marching_cubes(const SdfGrid& grid, double iso);

}  // namespace garm
