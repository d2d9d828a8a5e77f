#pragma once

// Merging of overlapping plane detections and convex-hull regions.

#include <span>
#include <vector>

#include "planeseg/geometry.hpp"

namespace planeseg {

struct MergeParams {
  double angle_eps = 0.1;   // rad
  double dist_eps = 0.05;   // m
};

/// Groups planes whose normals agree within angle_eps, offsets within
/// dist_eps, and whose inlier bounding boxes intersect, closing the relation
/// transitively. Each group of two or more is refit over the union of its
/// inliers; singleton groups pass through unchanged. Output follows the order
/// of each group's first member. Bounding boxes are dilated by dist_eps
/// before the overlap test. `groups_out`, when given, receives the input
/// positions merged into each output plane.
std::vector<PlaneModel> merge_overlapping(std::span<const PlaneModel> planes, const PointCloud& cloud,
                                          const MergeParams& params,
                                          std::vector<std::vector<int>>* groups_out = nullptr);

/// Coordinates in the plane's pinned (u, v) basis relative to the points'
/// centroid.
std::vector<Point2> project_to_plane_2d(const PlaneModel& plane, std::span<const Point3> points);

/// Counter-clockwise strictly convex hull by Graham's scan. Pivot is the
/// lowest-y (then lowest-x) point; ties in polar angle are visited nearest
/// first; turns with cross product <= 1e-12 are popped, so collinear boundary
/// points never become vertices. Throws DegenerateInput for fewer than three
/// distinct points or an all-collinear set.
Polygon2 graham_scan(std::span<const Point2> points);

struct PlanarRegion {
  PlaneModel plane;
  Polygon3 hull;
  std::vector<int> source_plane_ids;
};

struct RegionBuild {
  std::vector<PlanarRegion> regions;
  std::size_t dropped = 0;  // planes whose inliers have no 2D hull
};

/// Hull of each plane's inliers, lifted back onto the plane. `sources[i]`
/// becomes region i's source ids; without it, plane i reports {i}.
RegionBuild build_regions(std::span<const PlaneModel> planes, const PointCloud& cloud,
                          std::span<const std::vector<int>> sources = {});

}  // namespace planeseg
