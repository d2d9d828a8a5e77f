#pragma once

// Threshold-vs-density sweeps over simulated scans, with false detections
// classified against the scene's ground truth.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planeseg/detect.hpp"
#include "planeseg/merge_hull.hpp"
#include "planeseg/scan_sim.hpp"

namespace planeseg {

struct ClassifyParams {
  double angle_eps = 0.15;  // rad
  double dist_eps = 0.15;   // m
};

struct Classification {
  std::size_t true_count = 0;
  std::size_t false_count = 0;
};

/// A region is true when some facet is parallel to it within angle_eps, its
/// hull's area centroid is within dist_eps of the facet plane, and that
/// centroid projects inside the facet polygon dilated by dist_eps. Anything
/// else is a detection in empty space.
bool region_matches_scene(const PlanarRegion& region, const SceneModel& scene,
                          const ClassifyParams& params);
Classification classify_false_detections(std::span<const PlanarRegion> regions,
                                         const SceneModel& scene, const ClassifyParams& params);

struct DensitySpec {
  std::string label;  // "HD", "LD"
  double yaw_step_deg = 1.0;
  std::vector<std::size_t> thresholds;  // strictly increasing
};

struct SweepSpec {
  std::string environment;
  SceneModel scene;
  Point3 sensor_origin = kDefaultSensorOrigin;
  ScannerConfig scanner;  // yaw_step_deg is taken from each DensitySpec
  std::vector<DensitySpec> densities;
  std::size_t trials = 5;
  std::vector<std::uint64_t> seeds;  // per trial; empty means ransac.seed + trial
  RansacParams ransac;               // min_inliers and seed are overridden per cell
  MergeParams merge;
  ClassifyParams classify;
  bool count_pre_merge = false;
  unsigned threads = 1;
};

/// Throws ConfigError naming the first violated constraint.
void validate(const SweepSpec& spec);

/// HD at 1 deg with thresholds 5k, 10k, 15k, 20k, 30k ... 80k; LD at 6 deg
/// with the same grid divided by 5.
std::vector<DensitySpec> default_densities();

/// Default sweep over one built-in scene.
SweepSpec default_sweep_spec(const std::string& scene_name);

struct SweepRow {
  std::string environment;
  std::string density;
  std::size_t threshold = 0;
  std::vector<std::size_t> plane_counts;  // one per trial
  std::vector<std::size_t> false_counts;
  double mean_plane_count = 0.0;
  double mean_false_count = 0.0;

  double mean_true_count() const { return mean_plane_count - mean_false_count; }
};

struct SweepReport {
  std::vector<SweepRow> rows;                     // ordered by density, then threshold
  std::map<std::string, std::size_t> cloud_size;  // returned points per density
};

double mean(std::span<const std::size_t> values);

/// Runs every (density, threshold, trial) cell. Each density's scan and
/// normals are computed once and shared by all of its cells.
SweepReport run_threshold_sweep(const SweepSpec& spec);

/// Smallest threshold for `density` whose mean false count is 0 and mean true
/// count is positive.
std::optional<std::size_t> min_clean_threshold(const SweepReport& report, const std::string& density);

/// Outcome of one detection pass through the full pipeline.
struct PipelineResult {
  DetectionResult detection;
  std::vector<PlaneModel> merged;
  std::vector<std::vector<int>> groups;
  RegionBuild regions;
};

/// detect_planes, merge_overlapping, build_regions.
PipelineResult run_pipeline(const PointCloud& cloud, const RansacParams& ransac,
                            const MergeParams& merge);

}  // namespace planeseg
