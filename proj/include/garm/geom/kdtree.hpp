#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "garm/core/error.hpp"

namespace garm {

// Median-split kd-tree over fixed-dimension points, nearest-neighbor only.
template <int D>
class KdTree {
public:
  using Point = std::array<double, D>;

  explicit KdTree(std::vector<Point> points) : pts_(std::move(points)) {
    require(!pts_.empty(), "empty point set");
    order_.resize(pts_.size());
    std::iota(order_.begin(), order_.end(), 0);
    nodes_.reserve(2 * pts_.size());
    root_ = build(0, static_cast<int>(pts_.size()), 0);
  }

  // Returns (index into the original point order, distance).
  std::pair<int, double> nearest(const Point& q) const {
    int best = -1;
    double best_sq = std::numeric_limits<double>::infinity();
    search(root_, q, best, best_sq);
    return {best, std::sqrt(best_sq)};
  }

  size_t size() const { return pts_.size(); }

private:
  struct Node {
    int point = -1;   // index into order_
    int axis = 0;
    int left = -1, right = -1;
  };

  int build(int lo, int hi, int depth) {
    if (lo >= hi) return -1;
    const int axis = depth % D;
    const int mid = (lo + hi) / 2;
    std::nth_element(order_.begin() + lo, order_.begin() + mid,
                     order_.begin() + hi, [&](int a, int b) {
                       return pts_[a][axis] < pts_[b][axis];
                     });
    Node n;
    n.point = order_[mid];
    n.axis = axis;
    const int self = static_cast<int>(nodes_.size());
    nodes_.push_back(n);
    nodes_[self].left = build(lo, mid, depth + 1);
    nodes_[self].right = build(mid + 1, hi, depth + 1);
    return self;
  }

  static double dist_sq(const Point& a, const Point& b) {
    double s = 0.0;
    for (int i = 0; i < D; ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return s;
  }

  void search(int node, const Point& q, int& best, double& best_sq) const {
    if (node < 0) return;
    const Node& n = nodes_[node];
    const double d = dist_sq(q, pts_[n.point]);
    if (d < best_sq) {
      best_sq = d;
      best = n.point;
    }
    const double delta = q[n.axis] - pts_[n.point][n.axis];
    const int near = delta < 0.0 ? n.left : n.right;
    const int far = delta < 0.0 ? n.right : n.left;
    search(near, q, best, best_sq);
    if (delta * delta < best_sq) search(far, q, best, best_sq);
  }

  std::vector<Point> pts_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace garm
