#include "planeseg/merge_hull.hpp"

#include <algorithm>
#include <numeric>

#include "planeseg/errors.hpp"

namespace planeseg {

namespace {

constexpr double kTurnEps = 1e-12;

struct Box {
  Point3 lo, hi;
};

Box bounds(const PlaneModel& plane, const PointCloud& cloud, double pad) {
  Box b{{+INFINITY, +INFINITY, +INFINITY}, {-INFINITY, -INFINITY, -INFINITY}};
  for (std::size_t i : plane.inliers) {
    const Point3 p = cloud.points[i];
    b.lo = {std::min(b.lo.x, p.x), std::min(b.lo.y, p.y), std::min(b.lo.z, p.z)};
    b.hi = {std::max(b.hi.x, p.x), std::max(b.hi.y, p.y), std::max(b.hi.z, p.z)};
  }
  const Vector3 d{pad, pad, pad};
  return {b.lo - d, b.hi + d};
}

bool overlaps(const Box& a, const Box& b) {
  return a.lo.x <= b.hi.x && b.lo.x <= a.hi.x && a.lo.y <= b.hi.y && b.lo.y <= a.hi.y &&
         a.lo.z <= b.hi.z && b.lo.z <= a.hi.z;
}

// Offset gap with the second plane's orientation aligned to the first.
double offset_gap(const PlaneModel& a, const PlaneModel& b) {
  const double sign = dot(a.normal, b.normal) < 0.0 ? -1.0 : 1.0;
  return std::abs(a.offset - sign * b.offset);
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<PlaneModel> merge_overlapping(std::span<const PlaneModel> planes, const PointCloud& cloud,
                                          const MergeParams& params,
                                          std::vector<std::vector<int>>* groups_out) {
  const std::size_t n = planes.size();
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (const auto& p : planes) boxes.push_back(bounds(p, cloud, params.dist_eps));

  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (angle_between(planes[i].normal, planes[j].normal) <= params.angle_eps &&
          offset_gap(planes[i], planes[j]) <= params.dist_eps && overlaps(boxes[i], boxes[j])) {
        sets.unite(i, j);
      }
    }
  }

  // Roots are the smallest member, so visiting roots in index order yields
  // groups ordered by first member.
  std::vector<std::vector<int>> groups;
  std::vector<std::size_t> group_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = sets.find(i);
    if (r == i) {
      group_of[i] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(static_cast<int>(i));
  }

  std::vector<PlaneModel> merged;
  merged.reserve(groups.size());
  for (const auto& g : groups) {
    if (g.size() == 1) {
      merged.push_back(planes[static_cast<std::size_t>(g.front())]);
      continue;
    }
    std::vector<std::size_t> inliers;
    for (int m : g) {
      const auto& in = planes[static_cast<std::size_t>(m)].inliers;
      inliers.insert(inliers.end(), in.begin(), in.end());
    }
    std::sort(inliers.begin(), inliers.end());
    inliers.erase(std::unique(inliers.begin(), inliers.end()), inliers.end());
    std::vector<Point3> pts;
    pts.reserve(inliers.size());
    for (std::size_t i : inliers) pts.push_back(cloud.points[i]);
    PlaneModel plane;
    try {
      plane = fit_plane_least_squares(pts);
    } catch (const DegenerateSample&) {
      plane = planes[static_cast<std::size_t>(g.front())];
    }
    plane.inliers = std::move(inliers);
    merged.push_back(std::move(plane));
  }
  if (groups_out) *groups_out = std::move(groups);
  return merged;
}

std::vector<Point2> project_to_plane_2d(const PlaneModel& plane, std::span<const Point3> points) {
  std::vector<Point2> out;
  if (points.empty()) return out;
  const Point3 c = centroid(points);
  const auto [u, v] = plane_basis(plane.normal);
  out.reserve(points.size());
  for (const auto& p : points) {
    const Vector3 d = p - c;
    out.push_back({dot(d, u), dot(d, v)});
  }
  return out;
}

Polygon2 graham_scan(std::span<const Point2> points) {
  if (points.size() < 3) throw DegenerateInput("convex hull needs at least 3 points");
  const auto pivot_it = std::min_element(points.begin(), points.end(), [](Point2 a, Point2 b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  const Point2 pivot = *pivot_it;

  std::vector<Point2> rest;
  rest.reserve(points.size());
  for (const auto& p : points) {
    if (!(p == pivot)) rest.push_back(p);
  }
  auto sq = [&](Point2 p) {
    const double dx = p.x - pivot.x, dy = p.y - pivot.y;
    return dx * dx + dy * dy;
  };
  // Every point lies in the half-plane above the pivot, so the sign of the
  // cross product orders polar angle.
  std::sort(rest.begin(), rest.end(), [&](Point2 a, Point2 b) {
    const double c = cross2(pivot, a, b);
    if (c != 0.0) return c > 0.0;
    const double da = sq(a), db = sq(b);
    if (da != db) return da < db;
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });

  std::vector<Point2> hull{pivot};
  for (const auto& p : rest) {
    while (hull.size() >= 2 && cross2(hull[hull.size() - 2], hull.back(), p) <= kTurnEps) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  // The last vertex may be collinear with its predecessor and the pivot.
  while (hull.size() >= 3 && cross2(hull[hull.size() - 2], hull.back(), hull.front()) <= kTurnEps) {
    hull.pop_back();
  }
  if (hull.size() < 3) throw DegenerateInput("convex hull input is collinear");
  return Polygon2{std::move(hull)};
}

RegionBuild build_regions(std::span<const PlaneModel> planes, const PointCloud& cloud,
                          std::span<const std::vector<int>> sources) {
  RegionBuild out;
  for (std::size_t k = 0; k < planes.size(); ++k) {
    const PlaneModel& plane = planes[k];
    std::vector<Point3> pts;
    pts.reserve(plane.inliers.size());
    for (std::size_t i : plane.inliers) pts.push_back(cloud.points[i]);

    Polygon2 hull2;
    try {
      hull2 = graham_scan(project_to_plane_2d(plane, pts));
    } catch (const DegenerateInput&) {
      ++out.dropped;
      continue;
    }

    const Point3 c = centroid(pts);
    const Point3 base = c - (dot(plane.normal, as_vector(c)) - plane.offset) * plane.normal;
    const auto [u, v] = plane_basis(plane.normal);
    PlanarRegion region;
    region.plane = plane;
    region.hull.vertices.reserve(hull2.vertices.size());
    for (const auto& q : hull2.vertices) region.hull.vertices.push_back(base + q.x * u + q.y * v);
    region.source_plane_ids =
        k < sources.size() ? sources[k] : std::vector<int>{static_cast<int>(k)};
    out.regions.push_back(std::move(region));
  }
  return out;
}

}  // namespace planeseg
