#include "planeseg/detect.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "planeseg/errors.hpp"
#include "planeseg/knn.hpp"

namespace planeseg {

namespace {

Vector3 neighborhood_normal(std::span<const Point3> points, const KdTree& tree, Point3 query,
                            std::size_t k) {
  std::vector<Point3> nbrs;
  for (;;) {
    const auto idx = tree.nearest(query, k);
    nbrs.clear();
    for (std::size_t i : idx) nbrs.push_back(points[i]);
    const ScatterStats stats = scatter_stats(nbrs);
    const bool planar_extent = stats.values[1] > kLinearNeighborhoodRatio * stats.values[2];
    if (planar_extent || k >= points.size()) {
      try {
        return fit_plane_least_squares(nbrs).normal;
      } catch (const DegenerateSample&) {
        // Whole cloud is collinear: any normal perpendicular to the line.
        return canonical_direction(plane_basis(normalized(stats.axes[2])).first);
      }
    }
    k = std::min(2 * k, points.size());
  }
}

}  // namespace

void validate(const RansacParams& p) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("invalid ransac params: ") + what);
  };
  require(p.p_g > 0.0 && p.p_g <= 1.0, "p_g must be in (0, 1]");
  require(p.p_fail > 0.0 && p.p_fail < 1.0, "p_fail must be in (0, 1)");
  require(p.dist_tol_m > 0.0 && std::isfinite(p.dist_tol_m), "dist_tol_m must be > 0");
  require(p.angle_tol_rad > 0.0 && p.angle_tol_rad <= std::numbers::pi / 2,
          "angle_tol_rad must be in (0, pi/2]");
  require(p.min_inliers > 3, "min_inliers must be > 3");
  require(p.knn_k >= 3, "knn_k must be >= 3");
}

PointCloud estimate_normals(const PointCloud& cloud, std::size_t k) {
  if (k < 3) throw InsufficientPoints("normal estimation needs k >= 3");
  if (cloud.size() < k) {
    throw InsufficientPoints("normal estimation needs at least k = " + std::to_string(k) +
                             " points, cloud has " + std::to_string(cloud.size()));
  }
  const KdTree tree(cloud.points);
  std::vector<Vector3> normals;
  normals.reserve(cloud.size());
  for (const auto& p : cloud.points) normals.push_back(neighborhood_normal(cloud.points, tree, p, k));
  PointCloud out{cloud.points, std::move(normals)};
  return out;
}

std::size_t ransac_iterations(double p_g, double p_fail) {
  const double p_good_sample = p_g * p_g * p_g;
  if (p_good_sample >= 1.0) return 1;
  const double k = std::ceil(std::log(p_fail) / std::log1p(-p_good_sample));
  std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(k));
  // Guard the ceil against rounding on either side.
  while (n > 1 && std::pow(1.0 - p_good_sample, static_cast<double>(n - 1)) <= p_fail) --n;
  while (std::pow(1.0 - p_good_sample, static_cast<double>(n)) > p_fail) ++n;
  return n;
}

std::size_t count_consensus(std::span<const Point3> points, std::span<const std::size_t> active,
                            const PlaneModel& plane, double tol) {
  std::size_t n = 0;
  for (std::size_t i : active) n += point_plane_distance(plane, points[i]) <= tol ? 1 : 0;
  return n;
}

std::optional<PlaneModel> extract_one_plane(const PointCloud& cloud,
                                            std::span<const std::size_t> active,
                                            const RansacParams& params, Rng& rng,
                                            std::size_t* trials_out) {
  if (!cloud.normals) throw InsufficientPoints("extract_one_plane requires per-point normals");
  const std::size_t n = active.size();
  if (n < 3 || n < params.min_inliers) return std::nullopt;
  const auto& normals = *cloud.normals;

  // Contiguous copy of the active points for the consensus loop.
  std::vector<Point3> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = cloud.points[active[i]];
  auto consensus = [&](const PlaneModel& plane) {
    std::size_t c = 0;
    for (const auto& p : pts) c += point_plane_distance(plane, p) <= params.dist_tol_m ? 1 : 0;
    return c;
  };

  const std::size_t trials = ransac_iterations(params.p_g, params.p_fail);
  if (trials_out) *trials_out += trials;

  std::optional<PlaneModel> best;
  std::size_t best_count = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    // Three distinct positions in [0, n).
    std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
    std::size_t c = std::uniform_int_distribution<std::size_t>(0, n - 3)(rng);
    if (b >= a) ++b;
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    if (c >= lo) ++c;
    if (c >= hi) ++c;

    PlaneModel candidate;
    try {
      candidate = plane_from_points(pts[a], pts[b], pts[c]);
    } catch (const DegenerateSample&) {
      continue;
    }
    const std::size_t sample[3] = {a, b, c};
    const bool normals_agree =
        std::all_of(std::begin(sample), std::end(sample), [&](std::size_t s) {
          return angle_between(candidate.normal, normals[active[s]]) <= params.angle_tol_rad;
        });
    if (!normals_agree) continue;

    const std::size_t count = consensus(candidate);
    if (count > best_count) {
      best_count = count;
      best = std::move(candidate);
    }
  }
  if (!best || best_count < params.min_inliers) return std::nullopt;

  auto inliers_of = [&](const PlaneModel& plane) {
    std::vector<std::size_t> in;
    in.reserve(best_count);
    for (std::size_t i = 0; i < n; ++i) {
      if (point_plane_distance(plane, pts[i]) <= params.dist_tol_m) in.push_back(active[i]);
    }
    return in;
  };

  best->inliers = inliers_of(*best);
  std::vector<Point3> support;
  support.reserve(best->inliers.size());
  for (std::size_t i : best->inliers) support.push_back(cloud.points[i]);
  try {
    PlaneModel refit = fit_plane_least_squares(support);
    refit.inliers = inliers_of(refit);
    // The refit can only lose support on pathological consensus sets; keep
    // the sampled plane then so the threshold contract still holds.
    if (refit.inliers.size() >= params.min_inliers) return refit;
  } catch (const DegenerateSample&) {
  }
  return best;
}

DetectionResult detect_planes(const PointCloud& cloud, const RansacParams& params) {
  validate(params);
  DetectionResult result;
  std::vector<std::size_t> active(cloud.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;

  if (cloud.size() >= std::max<std::size_t>(params.min_inliers, 3)) {
    PointCloud with_normals;
    const PointCloud* src = &cloud;
    if (!cloud.normals) {
      with_normals = estimate_normals(cloud, std::min(params.knn_k, cloud.size()));
      src = &with_normals;
    }
    Rng rng(params.seed);
    std::vector<char> taken(cloud.size(), 0);
    while (active.size() >= params.min_inliers) {
      auto plane = extract_one_plane(*src, active, params, rng, &result.iterations_used);
      if (!plane) break;
      for (std::size_t i : plane->inliers) taken[i] = 1;
      std::erase_if(active, [&](std::size_t i) { return taken[i] != 0; });
      result.planes.push_back(std::move(*plane));
    }
  }
  result.residual_indices = std::move(active);
  return result;
}

std::vector<int> point_labels(const DetectionResult& result, std::size_t cloud_size) {
  std::vector<int> labels(cloud_size, -1);
  for (std::size_t p = 0; p < result.planes.size(); ++p) {
    for (std::size_t i : result.planes[p].inliers) labels[i] = static_cast<int>(p);
  }
  return labels;
}

}  // namespace planeseg
