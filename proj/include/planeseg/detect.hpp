#pragma once

// Sequential RANSAC extraction of planes from a point cloud.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "planeseg/geometry.hpp"

namespace planeseg {

struct RansacParams {
  double p_g = 0.3;             // chance a random active point lies on the sought plane
  double p_fail = 0.01;         // accepted chance of missing an existing plane
  double dist_tol_m = 0.05;     // consensus distance
  double angle_tol_rad = 0.35;  // sampled-normal vs candidate-normal agreement
  std::size_t min_inliers = 3000;
  std::size_t knn_k = 20;       // normal-estimation neighborhood
  std::uint64_t seed = 0;
};

/// Throws ConfigError naming the first out-of-range field.
void validate(const RansacParams& params);

using Rng = std::mt19937_64;

/// Copy of `cloud` with a canonical unit normal per point, fitted over its k
/// nearest neighbors (itself included). Throws InsufficientPoints when the
/// cloud has fewer than k points.
///
/// A neighborhood that is collinear or nearly so (a single scan line, say)
/// does not determine a surface normal; for those points k is doubled until
/// the neighborhood spans an area, see `kLinearNeighborhoodRatio`.
PointCloud estimate_normals(const PointCloud& cloud, std::size_t k);

/// A neighborhood whose second scatter eigenvalue is at most this fraction of
/// its largest is treated as a line and re-queried with a larger k.
inline constexpr double kLinearNeighborhoodRatio = 1e-2;

/// Smallest k >= 1 with (1 - p_g^3)^k <= p_fail.
std::size_t ransac_iterations(double p_g, double p_fail);

/// Number of `active` points within `tol` of `plane`.
std::size_t count_consensus(std::span<const Point3> points, std::span<const std::size_t> active,
                            const PlaneModel& plane, double tol);

/// One RANSAC round over the `active` subset of a cloud that carries normals.
/// Returns nullopt when no candidate reaches `params.min_inliers`. The
/// returned plane is least-squares refit on its consensus set, and its
/// inliers are the active points within tolerance of the refit.
/// `trials_out`, when given, is incremented by the number of trials run.
std::optional<PlaneModel> extract_one_plane(const PointCloud& cloud,
                                            std::span<const std::size_t> active,
                                            const RansacParams& params, Rng& rng,
                                            std::size_t* trials_out = nullptr);

struct DetectionResult {
  std::vector<PlaneModel> planes;             // extraction order
  std::vector<std::size_t> residual_indices;  // ascending
  std::size_t iterations_used = 0;
};

/// Sequential RANSAC: extract a plane, remove its inliers, repeat until a
/// round finds nothing or fewer than min_inliers points remain. Normals are
/// estimated first when the cloud has none. Deterministic in `params.seed`.
DetectionResult detect_planes(const PointCloud& cloud, const RansacParams& params);

/// Per-point plane id (index into result.planes), -1 for residuals.
std::vector<int> point_labels(const DetectionResult& result, std::size_t cloud_size);

}  // namespace planeseg
