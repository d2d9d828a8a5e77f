#pragma once

// File formats: XYZ / ASCII PLY clouds, JSON scenes, configs, planes and
// regions, CSV labels and sweep reports.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "planeseg/detect.hpp"
#include "planeseg/experiment.hpp"
#include "planeseg/merge_hull.hpp"
#include "planeseg/scan_sim.hpp"

namespace planeseg {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

enum class CloudFormat { Xyz, Ply };

/// ".ply" selects PLY, anything else XYZ.
CloudFormat format_from_path(const std::filesystem::path& path);

/// One "x y z" line per point; blank lines and '#' comments are skipped.
PointCloud read_xyz(std::istream& in);
/// ASCII PLY. x, y, z vertex properties of type float or double are read;
/// nx, ny, nz are kept as normals when all three are present; every other
/// property and element is skipped. Binary PLY throws UnsupportedFormat.
PointCloud read_ply(std::istream& in);
void write_xyz(std::ostream& out, const PointCloud& cloud);
/// Writes double x, y, z (and nx, ny, nz when the cloud has normals).
void write_ply(std::ostream& out, const PointCloud& cloud);

PointCloud read_cloud(const std::filesystem::path& path, CloudFormat format);
void write_cloud(const PointCloud& cloud, const std::filesystem::path& path, CloudFormat format);

/// "index,facet_id" per returned point.
void write_provenance_csv(std::ostream& out, const std::vector<int>& provenance);
/// "index,plane_id", plane_id -1 for residual points.
void write_labels_csv(std::ostream& out, const std::vector<int>& labels);

struct IoPaths {
  std::optional<std::string> scene;
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::optional<std::string> provenance;
  std::optional<std::string> labels;
  std::optional<std::string> planes;
  std::optional<std::string> regions_ply;
};

struct AppConfig {
  ScannerConfig scanner;
  Point3 sensor_origin = kDefaultSensorOrigin;
  RansacParams ransac;
  MergeParams merge;
  ClassifyParams classify;
  IoPaths io;
};

/// Parses and validates a config document. Unknown keys, wrong types,
/// out-of-range values, and "scanner"/"ransac" sections without a "seed" all
/// throw ConfigError.
AppConfig parse_config(const std::string& text);
AppConfig load_config(const std::filesystem::path& path);
std::string dump_config(const AppConfig& config);

/// {name, facets: [{id, vertices: [[x, y, z], ...]}]}
SceneModel parse_scene(const std::string& text);
SceneModel load_scene(const std::filesystem::path& path);
std::string dump_scene(const SceneModel& scene);

/// {planes: [{id, normal, offset, inlier_count, inliers}], residual_count,
/// iterations_used}
std::string dump_planes(const DetectionResult& result);
/// Planes with their inlier lists, as written by dump_planes.
std::vector<PlaneModel> parse_planes(const std::string& text);

/// {regions: [{id, normal, offset, inlier_count, source_ids, hull}], dropped}
std::string dump_regions(const RegionBuild& regions);
/// Hull vertices as PLY vertices plus one polygon face per region.
void write_regions_ply(std::ostream& out, const RegionBuild& regions);

/// Sweep spec document. "environment" names a built-in scene unless a
/// "scene" object is given inline.
SweepSpec parse_sweep_spec(const std::string& text);
SweepSpec load_sweep_spec(const std::filesystem::path& path);

/// environment,density,threshold,trial,plane_count,false_count
void write_sweep_trials_csv(std::ostream& out, const SweepReport& report);
/// environment,density,threshold,mean_plane_count,mean_false_count,mean_true_count
void write_sweep_means_csv(std::ostream& out, const SweepReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace planeseg
