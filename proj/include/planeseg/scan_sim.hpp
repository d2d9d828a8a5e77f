#pragma once

// Simulated 2-DOF (tilt + pan) laser range finder over a polygonal scene.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planeseg/geometry.hpp"

namespace planeseg {

/// Scan geometry. Defaults reproduce a 270 deg / 0.25 deg LRF tilted 30 deg
/// and panned 0..300 deg at 1 deg steps.
struct ScannerConfig {
  double pitch_deg = 30.0;
  double yaw_start_deg = 0.0;
  double yaw_end_deg = 300.0;
  double yaw_step_deg = 1.0;
  double beam_fov_deg = 270.0;
  double beam_step_deg = 0.25;
  double max_range_m = 30.0;
  double noise_sigma_m = 0.01;
  std::uint64_t seed = 0;
};

/// Throws ConfigError naming the first violated constraint.
void validate(const ScannerConfig& config);

std::size_t yaw_steps(const ScannerConfig& config);
std::size_t beams_per_line(const ScannerConfig& config);

/// Number of beams fired per full scan (returns plus misses).
std::size_t scan_point_count(const ScannerConfig& config);

/// Beam direction: pan about world z applied after tilt about the sensor y
/// axis, acting on the in-plane fan direction (cos b, sin b, 0).
Vector3 ray_direction(const ScannerConfig& config, double yaw_deg, double beam_deg);

struct Facet {
  int id = 0;
  Polygon3 polygon;
};

struct SceneModel {
  std::string name;
  std::vector<Facet> facets;
};

/// Unique facet ids and valid convex polygons. Throws ConfigError otherwise.
void validate(const SceneModel& scene);

struct RayHit {
  Point3 point;
  double range = 0.0;
  int facet_id = 0;
};

/// Nearest facet hit with range in (1e-6, max_range]. Ties go to the facet
/// listed first.
std::optional<RayHit> intersect_ray_scene(Point3 origin, Vector3 dir, const SceneModel& scene,
                                          double max_range);

struct ScanResult {
  PointCloud cloud;
  std::vector<int> provenance;  // source facet id per returned point
};

/// Fires every beam (yaw-major, then beam), drops misses, and perturbs each
/// return by Gaussian range noise along its ray. Deterministic in
/// `config.seed`.
ScanResult simulate_scan(const SceneModel& scene, const ScannerConfig& config, Point3 sensor_origin);

/// Stand-ins for five indoor environments, built from convex facets:
/// "box", "partition", "lhall", "corridor", "cluttered".
std::vector<std::string> builtin_scene_names();

/// Throws ConfigError for unknown names.
SceneModel builtin_scene(const std::string& name);

/// Sensor position used with the built-in scenes.
inline constexpr Point3 kDefaultSensorOrigin{0.0, 0.0, 1.0};

}  // namespace planeseg
