#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "planeseg/knn.hpp"

using namespace planeseg;

TEST_CASE("k-d tree equals exhaustive search") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-5, 5);
  for (std::size_t n : {1u, 5u, 17u, 200u, 3000u}) {
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({u(rng), u(rng), u(rng)});
    const KdTree tree(pts);
    for (int q = 0; q < 50; ++q) {
      const Point3 query{u(rng), u(rng), u(rng)};
      for (std::size_t k : {1u, 3u, 20u, 64u}) {
        const auto expected = oracle::nearest(pts, query, k);
        CHECK(tree.nearest(query, k) == expected);
        CHECK(brute_force_nearest(pts, query, k) == expected);
      }
    }
  }
}

TEST_CASE("ties are broken by index") {
  std::vector<Point3> pts;
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      for (int z = 0; z < 2; ++z) pts.push_back({double(x), double(y), double(z)});
    }
  }
  pts.push_back({0, 0, 0});
  const KdTree tree(pts);
  for (const auto& q : pts) {
    for (std::size_t k : {1u, 4u, 9u, 30u}) CHECK(tree.nearest(q, k) == oracle::nearest(pts, q, k));
  }
}

TEST_CASE("empty and oversized queries") {
  std::vector<Point3> none;
  const KdTree empty(none);
  CHECK(empty.nearest({0, 0, 0}, 5).empty());
  std::vector<Point3> two{{0, 0, 0}, {1, 0, 0}};
  const KdTree tree(two);
  CHECK(tree.nearest({0.9, 0, 0}, 10) == std::vector<std::size_t>{1, 0});
  CHECK(tree.nearest({0.9, 0, 0}, 0).empty());
}
