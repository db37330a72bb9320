#include "garm/geom/marching_cubes.hpp"

#include <cmath>
#include <unordered_map>

namespace garm {
namespace {

// Cell-local corner offsets (i, j, k deltas).
constexpr int kCorner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                               {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};

// Cell edges as corner pairs; each edge is axis-aligned.
constexpr int kEdge[12][2] = {{0, 1}, {1, 2}, {3, 2}, {0, 3},
                              {4, 5}, {5, 6}, {7, 6}, {4, 7},
                              {0, 4}, {1, 5}, {2, 6}, {3, 7}};

// Six cube faces, corners listed CCW as seen from outside the cell.
constexpr int kFace[6][4] = {
    {0, 3, 2, 1},  // -z
    {4, 5, 6, 7},  // +z
    {0, 1, 5, 4},  // -y
    {3, 7, 6, 2},  // +y
    {0, 4, 7, 3},  // -x
    {1, 2, 6, 5},  // +x
};

int edge_between(int a, int b) {
  for (int e = 0; e < 12; ++e) {
    if ((kEdge[e][0] == a && kEdge[e][1] == b) ||
        (kEdge[e][0] == b && kEdge[e][1] == a))
      return e;
  }
  return -1;
}

struct EdgeKey {
  // Global key for a grid edge: lower node linear index * 3 + axis.
  static uint64_t make(const SdfGrid& g, int ci, int cj, int ck, int edge) {
    const int* a = kCorner[kEdge[edge][0]];
    const int* b = kCorner[kEdge[edge][1]];
    const int lo[3] = {ci + std::min(a[0], b[0]), cj + std::min(a[1], b[1]),
                       ck + std::min(a[2], b[2])};
    int axis = 0;
    for (int d = 0; d < 3; ++d)
      if (a[d] != b[d]) axis = d;
    return static_cast<uint64_t>(g.index(lo[0], lo[1], lo[2])) * 3 + axis;
  }
};

}  // namespace

TriMesh marching_cubes(const SdfGrid& grid, double iso) {
  for (double v : grid.values) require(std::isfinite(v), "non-finite grid value");

  TriMesh mesh;
  std::unordered_map<uint64_t, int> edge_vertex;
  edge_vertex.reserve(1024);

  // Face-adjacency of edges, precomputed once.
  static int face_edge[6][4];
  static bool init = false;
  if (!init) {
    for (int f = 0; f < 6; ++f)
      for (int s = 0; s < 4; ++s)
        face_edge[f][s] =
            edge_between(kFace[f][s], kFace[f][(s + 1) % 4]);
    init = true;
  }

  auto vertex_on_edge = [&](int ci, int cj, int ck, int e,
                            const double val[8]) -> int {
    const uint64_t key = EdgeKey::make(grid, ci, cj, ck, e);
    auto it = edge_vertex.find(key);
    if (it != edge_vertex.end()) return it->second;
    const int a = kEdge[e][0], b = kEdge[e][1];
    const double fa = val[a], fb = val[b];
    const double denom = fb - fa;
    const double t =
        std::abs(denom) < 1e-300 ? 0.5 : std::clamp((iso - fa) / denom, 0.0, 1.0);
    const Vec3 pa = grid.node_position(ci + kCorner[a][0], cj + kCorner[a][1],
                                       ck + kCorner[a][2]);
    const Vec3 pb = grid.node_position(ci + kCorner[b][0], cj + kCorner[b][1],
                                       ck + kCorner[b][2]);
    const int idx = static_cast<int>(mesh.vertices.size());
    mesh.vertices.push_back(pa + t * (pb - pa));
    edge_vertex.emplace(key, idx);
    return idx;
  };

  for (int ck = 0; ck + 1 < grid.dims[2]; ++ck) {
    for (int cj = 0; cj + 1 < grid.dims[1]; ++cj) {
      for (int ci = 0; ci + 1 < grid.dims[0]; ++ci) {
        double val[8];
        bool inside[8];
        int n_inside = 0;
        for (int c = 0; c < 8; ++c) {
          val[c] = grid.at(ci + kCorner[c][0], cj + kCorner[c][1],
                           ck + kCorner[c][2]);
          inside[c] = val[c] < iso;
          n_inside += inside[c];
        }
        if (n_inside == 0 || n_inside == 8) continue;

        // Directed contour segments on the cell surface: one per maximal
        // cyclic run of inside corners on each face, oriented so the
        // inside region is to the left when viewed from outside. The
        // pairing on ambiguous faces depends only on the shared face's
        // corner signs, which keeps neighboring cells consistent.
        int next_edge[12];
        for (int e = 0; e < 12; ++e) next_edge[e] = -1;
        for (int f = 0; f < 6; ++f) {
          bool fin[4];
          int cnt = 0;
          for (int s = 0; s < 4; ++s) {
            fin[s] = inside[kFace[f][s]];
            cnt += fin[s];
          }
          if (cnt == 0 || cnt == 4) continue;
          for (int s = 0; s < 4; ++s) {
            if (!fin[s] || fin[(s + 3) % 4]) continue;  // s starts a run
            int end = s;
            while (fin[(end + 1) % 4]) end = (end + 1) % 4;
            const int from = face_edge[f][end];            // run_end -> next
            const int to = face_edge[f][(s + 3) % 4];      // prev -> run_start
            next_edge[from] = to;
          }
        }

        // Chain directed segments into loops and fan-triangulate.
        bool used[12] = {};
        for (int start = 0; start < 12; ++start) {
          if (next_edge[start] < 0 || used[start]) continue;
          int loop[12];
          int len = 0;
          int e = start;
          do {
            used[e] = true;
            loop[len++] = e;
            e = next_edge[e];
          } while (e != start && len < 12);
          if (len < 3) continue;
          int vid[12];
          for (int s = 0; s < len; ++s)
            vid[s] = vertex_on_edge(ci, cj, ck, loop[s], val);
          for (int s = 1; s + 1 < len; ++s) {
            if (vid[0] == vid[s] || vid[s] == vid[s + 1] ||
                vid[0] == vid[s + 1])
              continue;
            mesh.faces.push_back({vid[0], vid[s + 1], vid[s]});
          }
        }
      }
    }
  }
  return mesh;
}

}  // namespace garm
