#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "planeseg/geometry.hpp"

namespace planeseg {

/// Static k-d tree over a borrowed point array. Neighbors are ranked by
/// (squared distance, index), so results match an exhaustive search exactly,
/// ties included.
class KdTree {
 public:
  explicit KdTree(std::span<const Point3> points);

  /// Indices of the min(k, size) nearest points to `query`, nearest first.
  std::vector<std::size_t> nearest(Point3 query, std::size_t k) const;

 private:
  struct Node {
    std::size_t begin = 0;  // range in order_
    std::size_t end = 0;
    double split = 0.0;
    int axis = -1;          // -1 for leaves
    std::size_t left = 0;   // child node ids
    std::size_t right = 0;
  };

  std::size_t build(std::size_t begin, std::size_t end);

  std::span<const Point3> points_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

/// Exhaustive reference search with the same ranking as KdTree.
std::vector<std::size_t> brute_force_nearest(std::span<const Point3> points, Point3 query,
                                             std::size_t k);

}  // namespace planeseg
