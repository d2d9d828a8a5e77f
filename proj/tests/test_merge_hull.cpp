#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "planeseg/errors.hpp"
#include "planeseg/merge_hull.hpp"

using namespace planeseg;

namespace {

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v(end - begin);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

PlaneModel fit_subset(const PointCloud& cloud, std::vector<std::size_t> idx) {
  std::vector<Point3> pts;
  for (std::size_t i : idx) pts.push_back(cloud.points[i]);
  PlaneModel p = fit_plane_least_squares(pts);
  p.inliers = std::move(idx);
  return p;
}

bool same_planes(const std::vector<PlaneModel>& a, const std::vector<PlaneModel>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].normal == b[i].normal && a[i].offset == b[i].offset && a[i].inliers == b[i].inliers)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graham_scan small cases") {
  const std::vector<Point2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const Polygon2 h = graham_scan(square);
  CHECK(h.vertices == std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

  const std::vector<Point2> tri{{2, 3}, {0, 0}, {4, 0}};
  CHECK(graham_scan(tri).vertices == std::vector<Point2>{{0, 0}, {4, 0}, {2, 3}});

  const std::vector<Point2> edge_points{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}, {1, 1}};
  CHECK(graham_scan(edge_points).vertices == std::vector<Point2>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});

  CHECK_THROWS_AS(graham_scan(std::vector<Point2>{{0, 0}, {1, 1}}), DegenerateInput);
  CHECK_THROWS_AS(graham_scan(std::vector<Point2>{{0, 0}, {1, 1}, {2, 2}, {3, 3}}), DegenerateInput);
  CHECK_THROWS_AS(graham_scan(std::vector<Point2>{{1, 1}, {1, 1}, {1, 1}}), DegenerateInput);
  CHECK_THROWS_AS(graham_scan(std::vector<Point2>{{0, 0}, {1, 1}, {0, 0}, {1, 1}}), DegenerateInput);
}

TEST_CASE("the two hull oracles agree") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    auto pts = oracle::hull_instance(rng, t % 2 == 0);
    pts.resize(std::min<std::size_t>(pts.size(), 60));
    CHECK(oracle::normalize_cycle(oracle::hull_by_edges(pts)) == oracle::jarvis_march(pts));
  }
}

TEST_CASE("graham_scan matches the O(n^3) oracle on 500 random points") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Point2> pts;
  for (int i = 0; i < 500; ++i) pts.push_back({u(rng), u(rng)});
  CHECK(graham_scan(pts).vertices == oracle::normalize_cycle(oracle::hull_by_edges(pts)));
}

TEST_CASE("graham_scan properties") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    auto pts = oracle::hull_instance(rng, t % 3 == 0);
    const Polygon2 hull = graham_scan(pts);
    CHECK(is_strictly_convex(hull));
    CHECK(hull.vertices == oracle::jarvis_march(pts));
    for (const auto& p : pts) CHECK(convex_polygon_contains(hull, p, 1e-9));
    for (std::size_t drop = 0; drop < hull.vertices.size(); ++drop) {
      Polygon2 smaller = hull;
      smaller.vertices.erase(smaller.vertices.begin() + long(drop));
      const bool excludes = std::any_of(pts.begin(), pts.end(), [&](Point2 p) {
        return !convex_polygon_contains(smaller, p, 1e-9);
      });
      CHECK(excludes);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(graham_scan(pts).vertices == hull.vertices);
  }
}

TEST_CASE("project_to_plane_2d") {
  const PlaneModel z0 = make_plane({0, 0, 1}, 0);
  const auto two = project_to_plane_2d(z0, std::vector<Point3>{{0, 0, 0}, {1, 0, 0}});
  REQUIRE(two.size() == 2);
  CHECK(std::hypot(two[0].x - two[1].x, two[0].y - two[1].y) == doctest::Approx(1.0));
  const auto one = project_to_plane_2d(make_plane({1, 2, 3}, 4), std::vector<Point3>{{7, -2, 5}});
  CHECK(one.front() == Point2{0, 0});

  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-3, 3);
  const PlaneModel plane = make_plane({0.3, -0.4, 0.8}, 1.5);
  const auto [e1, e2] = plane_basis(plane.normal);
  std::vector<Point3> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(as_point(plane.offset * plane.normal) + u(rng) * e1 + u(rng) * e2);
  const auto flat = project_to_plane_2d(plane, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      CHECK(std::abs(std::hypot(flat[i].x - flat[j].x, flat[i].y - flat[j].y) - distance(pts[i], pts[j])) < 1e-9);
    }
  }
}

TEST_CASE("merge_overlapping") {
  PointCloud cloud;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 10; ++j) cloud.points.push_back({0.1 * i, 0.0, 0.1 * j});  // wall y=0, x 0..1.9
  }
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) cloud.points.push_back({0.1 * i, 0.1 * j, 0.0});  // floor
  }
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) cloud.points.push_back({0.1 * i, 0.1 * j, 3.0});  // ceiling
  }
  const PlaneModel left = fit_subset(cloud, range(0, 100));
  const PlaneModel right = fit_subset(cloud, range(100, 200));
  const PlaneModel floor = fit_subset(cloud, range(200, 300));
  const PlaneModel ceiling = fit_subset(cloud, range(300, 400));
  const MergeParams mp{0.1, 0.05};

  std::vector<std::vector<int>> groups;
  const std::vector<PlaneModel> halves{left, right};
  const auto merged = merge_overlapping(halves, cloud, mp, &groups);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].inliers == range(0, 200));
  CHECK(groups == std::vector<std::vector<int>>{{0, 1}});

  const std::vector<PlaneModel> fc{floor, ceiling};
  const auto apart = merge_overlapping(fc, cloud, mp);
  CHECK(apart.size() == 2);

  const std::vector<PlaneModel> single{floor};
  CHECK(same_planes(merge_overlapping(single, cloud, mp), single));

  const std::vector<PlaneModel> all{left, floor, right, ceiling};
  const auto once = merge_overlapping(all, cloud, mp, &groups);
  CHECK(groups == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
  CHECK(same_planes(merge_overlapping(once, cloud, mp), once));
}

TEST_CASE("disjoint coplanar patches stay apart") {
  PointCloud cloud;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      cloud.points.push_back({0.1 * i, 0.1 * j, 0.0});
      cloud.points.push_back({5.0 + 0.1 * i, 0.1 * j, 0.0});
    }
  }
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < cloud.size(); ++i) (i % 2 == 0 ? a : b).push_back(i);
  const std::vector<PlaneModel> planes{fit_subset(cloud, a), fit_subset(cloud, b)};
  CHECK(merge_overlapping(planes, cloud, MergeParams{}).size() == 2);
}

TEST_CASE("build_regions") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1), n(-0.005, 0.005);
  PointCloud cloud;
  for (int i = 0; i < 2000; ++i) cloud.points.push_back({u(rng), u(rng), 1.0 + n(rng)});
  cloud.points.push_back({0, 0, 5});
  cloud.points.push_back({1, 0, 5});
  cloud.points.push_back({0, 1, 5});
  for (int i = 0; i < 5; ++i) cloud.points.push_back({double(i), double(i), 7.0});

  const PlaneModel square = fit_subset(cloud, range(0, 2000));
  PlaneModel triangle = make_plane({0, 0, 1}, 5);
  triangle.inliers = range(2000, 2003);
  PlaneModel line = make_plane({0, 0, 1}, 7);
  line.inliers = range(2003, 2008);

  const std::vector<PlaneModel> planes{square, line, triangle};
  const RegionBuild rb = build_regions(planes, cloud);
  CHECK(rb.dropped == 1);
  REQUIRE(rb.regions.size() == 2);
  CHECK(polygon_area(rb.regions[0].hull) >= 0.9);
  CHECK(polygon_area(rb.regions[0].hull) <= 1.1);
  CHECK(rb.regions[0].source_plane_ids == std::vector<int>{0});
  CHECK(rb.regions[1].hull.vertices.size() == 3);
  CHECK(rb.regions[1].source_plane_ids == std::vector<int>{2});
  CHECK(polygon_area(rb.regions[1].hull) == doctest::Approx(0.5));
  for (const auto& r : rb.regions) {
    CHECK(is_valid(r.hull));
    for (const auto& v : r.hull.vertices) CHECK(point_plane_distance(r.plane, v) < 1e-9);
  }
}
