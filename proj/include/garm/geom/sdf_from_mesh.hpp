#pragma once

#include "garm/geom/types.hpp"

namespace garm {

// Signed distance grid of a watertight mesh. The grid covers the mesh
// bounding box inflated by `margin` on every side (margin < 0 selects the
// default of 10% of the bounding-box diagonal). Magnitudes are exact
// point-to-surface distances; the sign is decided by the generalized
// winding number (>= 0.5 means inside), evaluated exactly in a band
// around the surface and propagated outward by flood fill elsewhere.
SdfGrid sdf_from_mesh(const TriMesh& mesh, const std::array<int, 3>& dims,
                      double margin = -1.0);

}  // namespace garm
