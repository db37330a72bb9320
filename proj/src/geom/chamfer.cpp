#include "garm/geom/chamfer.hpp"

#include <limits>

#include "garm/geom/kdtree.hpp"

namespace garm {
namespace {

constexpr size_t kBruteCutoff = 384;

template <int D, class V>
std::array<double, D> to_array(const V& v) {
  std::array<double, D> a;
  for (int i = 0; i < D; ++i) a[i] = v[i];
  return a;
}

template <int D, class V>
double directed_mean(std::span<const V> from, std::span<const V> to) {
  double sum = 0.0;
  if (to.size() <= kBruteCutoff) {
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, (p - q).norm());
      sum += best;
    }
  } else {
    std::vector<std::array<double, D>> pts;
    pts.reserve(to.size());
    for (const auto& q : to) pts.push_back(to_array<D>(q));
    KdTree<D> tree(std::move(pts));
    for (const auto& p : from) sum += tree.nearest(to_array<D>(p)).second;
  }
  return sum / static_cast<double>(from.size());
}

template <int D, class V>
double chamfer_impl(std::span<const V> a, std::span<const V> b) {
  require(!a.empty() && !b.empty(), "empty point set");
  return directed_mean<D>(a, b) + directed_mean<D>(b, a);
}

}  // namespace

double chamfer_distance(std::span<const Vec3> a, std::span<const Vec3> b) {
  return chamfer_impl<3>(a, b);
}

double chamfer_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
  return chamfer_impl<2>(a, b);
}

double chamfer_distance(const PointSet& a, const PointSet& b) {
  require(a.dim() != 0 && b.dim() != 0, "empty point set");
  require(a.dim() == b.dim(), "dimension mismatch");
  if (a.dim() == 3)
    return chamfer_distance(std::span<const Vec3>(a.p3),
                            std::span<const Vec3>(b.p3));
  return chamfer_distance(std::span<const Vec2>(a.p2),
                          std::span<const Vec2>(b.p2));
}

Chamfer2Grad chamfer_distance_grad_a(std::span<const Vec2> a,
                                     std::span<const Vec2> b) {
  require(!a.empty() && !b.empty(), "empty point set");
  Chamfer2Grad out;
  out.dA.assign(a.size(), Vec2::Zero());
  const double inv_na = 1.0 / static_cast<double>(a.size());
  const double inv_nb = 1.0 / static_cast<double>(b.size());

  // a -> b term.
  for (size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    Vec2 diff = Vec2::Zero();
    for (const auto& q : b) {
      const Vec2 d = a[i] - q;
      const double n = d.norm();
      if (n < best) {
        best = n;
        diff = d;
      }
    }
    out.value += best * inv_na;
    if (best > 1e-12) out.dA[i] += diff / best * inv_na;
  }
  // b -> a term; gradient lands on the assigned a point.
  for (const auto& q : b) {
    double best = std::numeric_limits<double>::infinity();
    size_t arg = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      const double n = (q - a[i]).norm();
      if (n < best) {
        best = n;
        arg = i;
      }
    }
    out.value += best * inv_nb;
    if (best > 1e-12) out.dA[arg] += (a[arg] - q) / best * inv_nb;
  }
  return out;
}

}  // namespace garm
