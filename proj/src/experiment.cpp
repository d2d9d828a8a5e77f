#include "planeseg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "planeseg/errors.hpp"

namespace planeseg {

namespace {

bool facet_matches(const PlanarRegion& region, Point3 center, const Facet& facet,
                   const ClassifyParams& params) {
  const PlaneModel fp = polygon_plane(facet.polygon);
  if (angle_between(region.plane.normal, fp.normal) > params.angle_eps) return false;
  if (point_plane_distance(fp, center) > params.dist_eps) return false;

  const auto [u, v] = plane_basis(fp.normal);
  const Point3 origin = facet.polygon.vertices.front();
  Polygon2 flat;
  for (const auto& p : facet.polygon.vertices) flat.vertices.push_back({dot(p - origin, u), dot(p - origin, v)});
  const Point2 c{dot(center - origin, u), dot(center - origin, v)};
  return convex_polygon_contains(flat, c, params.dist_eps);
}

}  // namespace

bool region_matches_scene(const PlanarRegion& region, const SceneModel& scene,
                          const ClassifyParams& params) {
  const Point3 center = polygon_centroid(region.hull);
  return std::any_of(scene.facets.begin(), scene.facets.end(),
                     [&](const Facet& f) { return facet_matches(region, center, f, params); });
}

Classification classify_false_detections(std::span<const PlanarRegion> regions,
                                         const SceneModel& scene, const ClassifyParams& params) {
  Classification c;
  for (const auto& r : regions) {
    if (region_matches_scene(r, scene, params)) {
      ++c.true_count;
    } else {
      ++c.false_count;
    }
  }
  return c;
}

void validate(const SweepSpec& spec) {
  if (spec.trials < 1) throw ConfigError("sweep: trials must be >= 1");
  if (!spec.seeds.empty() && spec.seeds.size() != spec.trials) {
    throw ConfigError("sweep: seeds must list exactly one seed per trial");
  }
  if (spec.densities.empty()) throw ConfigError("sweep: at least one density is required");
  for (const auto& d : spec.densities) {
    if (d.thresholds.size() < 2) throw ConfigError("sweep: density " + d.label + " needs >= 2 thresholds");
    if (!std::is_sorted(d.thresholds.begin(), d.thresholds.end(), std::less_equal<>{})) {
      throw ConfigError("sweep: thresholds for " + d.label + " must be strictly increasing");
    }
    ScannerConfig sc = spec.scanner;
    sc.yaw_step_deg = d.yaw_step_deg;
    validate(sc);
    RansacParams rp = spec.ransac;
    rp.min_inliers = d.thresholds.front();
    validate(rp);
  }
  validate(spec.scene);
}

std::vector<DensitySpec> default_densities() {
  const std::vector<std::size_t> hd{5000, 10000, 15000, 20000, 30000, 40000, 50000, 60000, 70000, 80000};
  std::vector<std::size_t> ld;
  for (auto t : hd) ld.push_back(t / 5);
  return {{"HD", 1.0, hd}, {"LD", 6.0, ld}};
}

SweepSpec default_sweep_spec(const std::string& scene_name) {
  SweepSpec spec;
  spec.environment = scene_name;
  spec.scene = builtin_scene(scene_name);
  spec.densities = default_densities();
  return spec;
}

double mean(std::span<const std::size_t> values) {
  if (values.empty()) return 0.0;
  const double sum = std::accumulate(values.begin(), values.end(), 0.0,
                                     [](double acc, std::size_t v) { return acc + static_cast<double>(v); });
  return sum / static_cast<double>(values.size());
}

PipelineResult run_pipeline(const PointCloud& cloud, const RansacParams& ransac,
                            const MergeParams& merge) {
  PipelineResult r;
  r.detection = detect_planes(cloud, ransac);
  r.merged = merge_overlapping(r.detection.planes, cloud, merge, &r.groups);
  r.regions = build_regions(r.merged, cloud, r.groups);
  return r;
}

SweepReport run_threshold_sweep(const SweepSpec& spec) {
  validate(spec);
  SweepReport report;

  for (const auto& density : spec.densities) {
    ScannerConfig sc = spec.scanner;
    sc.yaw_step_deg = density.yaw_step_deg;
    const ScanResult scan = simulate_scan(spec.scene, sc, spec.sensor_origin);
    report.cloud_size[density.label] = scan.cloud.size();
    const PointCloud cloud = scan.cloud.size() >= spec.ransac.knn_k
                                 ? estimate_normals(scan.cloud, spec.ransac.knn_k)
                                 : scan.cloud;

    const std::size_t n_thr = density.thresholds.size();
    std::vector<Classification> cells(n_thr * spec.trials);

    auto run_cell = [&](std::size_t cell) {
      const std::size_t ti = cell / spec.trials;
      const std::size_t trial = cell % spec.trials;
      RansacParams rp = spec.ransac;
      rp.min_inliers = density.thresholds[ti];
      rp.seed = spec.seeds.empty() ? spec.ransac.seed + trial : spec.seeds[trial];
      if (spec.count_pre_merge) {
        const DetectionResult det = detect_planes(cloud, rp);
        const RegionBuild regions = build_regions(det.planes, cloud);
        cells[cell] = classify_false_detections(regions.regions, spec.scene, spec.classify);
      } else {
        const PipelineResult pr = run_pipeline(cloud, rp, spec.merge);
        cells[cell] = classify_false_detections(pr.regions.regions, spec.scene, spec.classify);
      }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(cells.size())));
    if (workers == 1) {
      for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t c = next++; c < cells.size(); c = next++) run_cell(c);
        });
      }
    }

    for (std::size_t ti = 0; ti < n_thr; ++ti) {
      SweepRow row;
      row.environment = spec.environment;
      row.density = density.label;
      row.threshold = density.thresholds[ti];
      for (std::size_t t = 0; t < spec.trials; ++t) {
        const Classification& c = cells[ti * spec.trials + t];
        row.plane_counts.push_back(c.true_count + c.false_count);
        row.false_counts.push_back(c.false_count);
      }
      row.mean_plane_count = mean(row.plane_counts);
      row.mean_false_count = mean(row.false_counts);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::optional<std::size_t> min_clean_threshold(const SweepReport& report, const std::string& density) {
  std::optional<std::size_t> best;
  for (const auto& row : report.rows) {
    if (row.density != density) continue;
    if (row.mean_false_count == 0.0 && row.mean_true_count() > 0.0) {
      if (!best || row.threshold < *best) best = row.threshold;
    }
  }
  return best;
}

}  // namespace planeseg
