#include "planeseg/scan_sim.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "planeseg/errors.hpp"

namespace planeseg {

namespace {

constexpr double kMinRange = 1e-6;
constexpr double kEdgeTol = 1e-9;
constexpr double kParallelEps = 1e-12;

double deg2rad(double d) { return d * std::numbers::pi / 180.0; }

// Step counts tolerate representation error in ratios like 270 / 0.25.
std::size_t floor_ratio(double num, double den) {
  return static_cast<std::size_t>(std::floor(num / den + 1e-9));
}

struct PreparedFacet {
  const Facet* facet;
  PlaneModel plane;  // winding-oriented
};

bool inside_facet(const PreparedFacet& f, Point3 p) {
  const auto& v = f.facet->polygon.vertices;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Vector3 edge = v[(i + 1) % n] - v[i];
    const double side = dot(cross(edge, p - v[i]), f.plane.normal);
    if (side < -kEdgeTol * norm(edge)) return false;
  }
  return true;
}

std::vector<PreparedFacet> prepare(const SceneModel& scene) {
  std::vector<PreparedFacet> out;
  out.reserve(scene.facets.size());
  for (const auto& f : scene.facets) out.push_back({&f, polygon_plane(f.polygon)});
  return out;
}

std::optional<RayHit> cast(Point3 origin, Vector3 dir, const std::vector<PreparedFacet>& facets,
                           double max_range) {
  std::optional<RayHit> best;
  for (const auto& f : facets) {
    const double denom = dot(f.plane.normal, dir);
    if (std::abs(denom) < kParallelEps) continue;
    const double t = (f.plane.offset - dot(f.plane.normal, as_vector(origin))) / denom;
    if (!(t > kMinRange) || t > max_range) continue;
    if (best && !(t < best->range)) continue;
    const Point3 p = origin + t * dir;
    if (!inside_facet(f, p)) continue;
    best = RayHit{p, t, f.facet->id};
  }
  return best;
}

Facet rect(int id, Point3 corner, Vector3 e1, Vector3 e2) {
  return {id, Polygon3{{corner, corner + e1, corner + e1 + e2, corner + e2}}};
}

// Axis-aligned room [x0,x1] x [y0,y1] x [0,h]; ids start at `first_id`.
std::vector<Facet> box_facets(double x0, double x1, double y0, double y1, double h, int first_id) {
  const double dx = x1 - x0, dy = y1 - y0;
  int id = first_id;
  return {
      rect(id++, {x0, y0, 0}, {dx, 0, 0}, {0, dy, 0}),  // floor
      rect(id++, {x0, y0, h}, {dx, 0, 0}, {0, dy, 0}),  // ceiling
      rect(id++, {x0, y0, 0}, {dx, 0, 0}, {0, 0, h}),
      rect(id++, {x0, y1, 0}, {dx, 0, 0}, {0, 0, h}),
      rect(id++, {x0, y0, 0}, {0, dy, 0}, {0, 0, h}),
      rect(id++, {x1, y0, 0}, {0, dy, 0}, {0, 0, h}),
  };
}

SceneModel make_box() {
  return {"box", box_facets(-5, 5, -5, 5, 2.5, 1)};
}

SceneModel make_partition() {
  SceneModel s{"partition", box_facets(-5, 5, -5, 5, 2.5, 1)};
  s.facets.push_back(rect(7, {2, -5, 0}, {0, 6, 0}, {0, 0, 2.5}));
  return s;
}

SceneModel make_lhall() {
  // Walls trace the L; floor and ceiling span its bounding square, the parts
  // outside the walls are never visible.
  const double h = 2.5;
  SceneModel s{"lhall", {}};
  s.facets = {
      rect(1, {-2, -2, 0}, {10, 0, 0}, {0, 10, 0}),
      rect(2, {-2, -2, h}, {10, 0, 0}, {0, 10, 0}),
      rect(3, {-2, -2, 0}, {10, 0, 0}, {0, 0, h}),  // y = -2
      rect(4, {8, -2, 0}, {0, 4, 0}, {0, 0, h}),    // x = 8
      rect(5, {2, 2, 0}, {6, 0, 0}, {0, 0, h}),     // y = 2
      rect(6, {2, 2, 0}, {0, 6, 0}, {0, 0, h}),     // x = 2
      rect(7, {-2, 8, 0}, {4, 0, 0}, {0, 0, h}),    // y = 8
      rect(8, {-2, -2, 0}, {0, 10, 0}, {0, 0, h}),  // x = -2
  };
  return s;
}

SceneModel make_corridor() {
  return {"corridor", box_facets(-8, 8, -1.2, 1.2, 2.5, 1)};
}

SceneModel make_cluttered() {
  SceneModel s{"cluttered", box_facets(-4, 4, -4, 4, 2.5, 1)};
  s.facets.push_back(rect(7, {1.0, -1.0, 0.75}, {1.5, 0, 0}, {0, 2.0, 0}));   // table top
  s.facets.push_back(rect(8, {-2.5, 1.0, 0}, {0, 2.0, 0}, {0, 0, 1.8}));      // cabinet face
  s.facets.push_back(rect(9, {2.8, -3.5, 0}, {0, 2.0, 0}, {1.0, 0, 1.0}));    // leaning board
  return s;
}

}  // namespace

void validate(const ScannerConfig& c) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("invalid scanner config: ") + what);
  };
  require(std::isfinite(c.pitch_deg), "pitch_deg must be finite");
  require(std::isfinite(c.yaw_start_deg) && std::isfinite(c.yaw_end_deg), "yaw bounds must be finite");
  require(c.yaw_end_deg > c.yaw_start_deg, "yaw_end_deg must exceed yaw_start_deg");
  require(c.yaw_step_deg > 0.0, "yaw_step_deg must be > 0");
  require(c.beam_fov_deg >= 0.0 && std::isfinite(c.beam_fov_deg), "beam_fov_deg must be >= 0");
  require(c.beam_step_deg > 0.0, "beam_step_deg must be > 0");
  require(c.max_range_m > 0.0, "max_range_m must be > 0");
  require(c.noise_sigma_m >= 0.0 && std::isfinite(c.noise_sigma_m), "noise_sigma_m must be >= 0");
}

void validate(const SceneModel& scene) {
  std::set<int> ids;
  for (const auto& f : scene.facets) {
    if (!ids.insert(f.id).second) {
      throw ConfigError("scene '" + scene.name + "': duplicate facet id " + std::to_string(f.id));
    }
    if (!is_valid(f.polygon)) {
      throw ConfigError("scene '" + scene.name + "': facet " + std::to_string(f.id) +
                        " is not a planar strictly convex polygon");
    }
  }
}

std::size_t yaw_steps(const ScannerConfig& c) {
  return floor_ratio(c.yaw_end_deg - c.yaw_start_deg, c.yaw_step_deg);
}

std::size_t beams_per_line(const ScannerConfig& c) {
  return static_cast<std::size_t>(std::llround(c.beam_fov_deg / c.beam_step_deg)) + 1;
}

std::size_t scan_point_count(const ScannerConfig& c) { return yaw_steps(c) * beams_per_line(c); }

Vector3 ray_direction(const ScannerConfig& c, double yaw_deg, double beam_deg) {
  const double b = deg2rad(beam_deg);
  const double p = deg2rad(c.pitch_deg);
  const double y = deg2rad(yaw_deg);
  // Fan direction in the sensor plane, tilted about sensor y, panned about z.
  const Vector3 fan{std::cos(b), std::sin(b), 0.0};
  const Vector3 tilted{std::cos(p) * fan.x, fan.y, -std::sin(p) * fan.x};
  return {std::cos(y) * tilted.x - std::sin(y) * tilted.y,
          std::sin(y) * tilted.x + std::cos(y) * tilted.y, tilted.z};
}

std::optional<RayHit> intersect_ray_scene(Point3 origin, Vector3 dir, const SceneModel& scene,
                                          double max_range) {
  return cast(origin, dir, prepare(scene), max_range);
}

ScanResult simulate_scan(const SceneModel& scene, const ScannerConfig& config, Point3 sensor_origin) {
  validate(config);
  ScanResult result;
  if (scene.facets.empty()) return result;

  const auto facets = prepare(scene);
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  const std::size_t n_yaw = yaw_steps(config);
  const std::size_t n_beam = beams_per_line(config);
  const double beam0 = -0.5 * config.beam_fov_deg;
  result.cloud.points.reserve(n_yaw * n_beam);
  result.provenance.reserve(n_yaw * n_beam);

  for (std::size_t i = 0; i < n_yaw; ++i) {
    const double yaw = config.yaw_start_deg + static_cast<double>(i) * config.yaw_step_deg;
    for (std::size_t j = 0; j < n_beam; ++j) {
      const double beam = beam0 + static_cast<double>(j) * config.beam_step_deg;
      const Vector3 dir = ray_direction(config, yaw, beam);
      const auto hit = cast(sensor_origin, dir, facets, config.max_range_m);
      if (!hit) continue;
      Point3 p = hit->point;
      if (config.noise_sigma_m > 0.0) {
        p = sensor_origin + (hit->range + config.noise_sigma_m * noise(rng)) * dir;
      }
      result.cloud.points.push_back(p);
      result.provenance.push_back(hit->facet_id);
    }
  }
  return result;
}

std::vector<std::string> builtin_scene_names() {
  return {"box", "partition", "lhall", "corridor", "cluttered"};
}

SceneModel builtin_scene(const std::string& name) {
  if (name == "box") return make_box();
  if (name == "partition") return make_partition();
  if (name == "lhall") return make_lhall();
  if (name == "corridor") return make_corridor();
  if (name == "cluttered") return make_cluttered();
  throw ConfigError("unknown built-in scene '" + name + "'");
}

}  // namespace planeseg
