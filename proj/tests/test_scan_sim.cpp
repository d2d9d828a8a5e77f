#include <doctest.h>

#include <algorithm>
#include <map>

#include "planeseg/errors.hpp"
#include "planeseg/scan_sim.hpp"

using namespace planeseg;

namespace {

ScannerConfig noise_free(double yaw_step) {
  ScannerConfig c;
  c.yaw_step_deg = yaw_step;
  c.noise_sigma_m = 0.0;
  return c;
}

std::map<int, PlaneModel> facet_planes(const SceneModel& scene) {
  std::map<int, PlaneModel> out;
  for (const auto& f : scene.facets) out[f.id] = polygon_plane(f.polygon);
  return out;
}

Facet square(int id, double z, double half) {
  return {id, Polygon3{{{-half, -half, z}, {half, -half, z}, {half, half, z}, {-half, half, z}}}};
}

}  // namespace

TEST_CASE("scan_point_count") {
  ScannerConfig c;
  CHECK(beams_per_line(c) == 1081);
  CHECK(yaw_steps(c) == 300);
  CHECK(scan_point_count(c) == 324300);
  c.yaw_step_deg = 6.0;
  CHECK(yaw_steps(c) == 50);
  CHECK(scan_point_count(c) == 54050);
  c.yaw_end_deg = c.yaw_start_deg + c.yaw_step_deg;
  CHECK(scan_point_count(c) == 1081);
}

TEST_CASE("scanner config validation") {
  ScannerConfig c;
  c.yaw_step_deg = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = {};
  c.noise_sigma_m = -1.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = {};
  c.beam_step_deg = -0.25;
  CHECK_THROWS_AS(validate(c), ConfigError);
  CHECK_NOTHROW(validate(ScannerConfig{}));
}

TEST_CASE("ray_direction") {
  ScannerConfig c;
  c.pitch_deg = 0.0;
  Vector3 d = ray_direction(c, 0.0, 0.0);
  CHECK(norm(d - Vector3{1, 0, 0}) < 1e-12);
  d = ray_direction(c, 90.0, 0.0);
  CHECK(norm(d - Vector3{0, 1, 0}) < 1e-12);
  c.pitch_deg = 30.0;
  d = ray_direction(c, 0.0, 0.0);
  CHECK(d.x == doctest::Approx(0.8660254037844386));
  CHECK(d.y == doctest::Approx(0.0));
  CHECK(d.z == doctest::Approx(-0.5));
  for (double yaw : {0.0, 37.0, 299.0}) {
    for (double beam : {-135.0, -20.0, 0.0, 90.0, 135.0}) CHECK(is_unit(ray_direction(c, yaw, beam)));
  }
}

TEST_CASE("intersect_ray_scene") {
  SceneModel floor{"floor", {square(1, -1.0, 10.0)}};
  auto hit = intersect_ray_scene({0, 0, 0}, {0, 0, -1}, floor, 30.0);
  REQUIRE(hit);
  CHECK(hit->point == Point3{0, 0, -1});
  CHECK(hit->facet_id == 1);
  CHECK(hit->range == doctest::Approx(1.0));

  CHECK_FALSE(intersect_ray_scene({0, 0, 0}, {1, 0, 0}, floor, 30.0));
  CHECK_FALSE(intersect_ray_scene({0, 0, 0}, {0, 0, 1}, floor, 30.0));
  CHECK_FALSE(intersect_ray_scene({0, 0, 0}, {0, 0, -1}, floor, 0.5));

  SceneModel two{"two", {square(2, -2.0, 10.0), square(1, -1.0, 10.0)}};
  hit = intersect_ray_scene({0, 0, 0}, {0, 0, -1}, two, 30.0);
  REQUIRE(hit);
  CHECK(hit->point.z == -1.0);
  CHECK(hit->facet_id == 1);

  SceneModel small{"small", {square(3, -1.0, 1.0)}};
  CHECK_FALSE(intersect_ray_scene({5, 0, 0}, {0, 0, -1}, small, 30.0));
}

TEST_CASE("noise-free box scan lies on the facets") {
  const SceneModel box = builtin_scene("box");
  const ScanResult scan = simulate_scan(box, noise_free(6.0), kDefaultSensorOrigin);
  CHECK(scan.cloud.size() <= 54050);
  CHECK(scan.cloud.size() > 40000);
  REQUIRE(scan.provenance.size() == scan.cloud.size());
  const auto planes = facet_planes(box);
  std::map<int, std::size_t> per_facet;
  for (std::size_t i = 0; i < scan.cloud.size(); ++i) {
    const PlaneModel& p = planes.at(scan.provenance[i]);
    CHECK(point_plane_distance(p, scan.cloud.points[i]) < 1e-9);
    ++per_facet[scan.provenance[i]];
  }
  CHECK(per_facet.size() == 6);
}

TEST_CASE("density ratio between 1 and 6 degree scans") {
  for (const auto& name : builtin_scene_names()) {
    const SceneModel scene = builtin_scene(name);
    const double hd = double(simulate_scan(scene, noise_free(1.0), kDefaultSensorOrigin).cloud.size());
    const double ld = double(simulate_scan(scene, noise_free(6.0), kDefaultSensorOrigin).cloud.size());
    INFO(name);
    CHECK(hd / ld >= 5.5);
    CHECK(hd / ld <= 6.5);
  }
}

TEST_CASE("range noise stays within three sigma") {
  const SceneModel box = builtin_scene("box");
  ScannerConfig c;
  c.yaw_step_deg = 6.0;
  c.noise_sigma_m = 0.01;
  c.seed = 42;
  const ScanResult scan = simulate_scan(box, c, kDefaultSensorOrigin);
  REQUIRE(scan.cloud.size() >= 10000);
  const auto planes = facet_planes(box);
  std::size_t within = 0;
  for (std::size_t i = 0; i < scan.cloud.size(); ++i) {
    if (point_plane_distance(planes.at(scan.provenance[i]), scan.cloud.points[i]) <= 0.03) ++within;
  }
  CHECK(double(within) >= 0.99 * double(scan.cloud.size()));
}

TEST_CASE("simulation is deterministic") {
  const SceneModel scene = builtin_scene("cluttered");
  ScannerConfig c;
  c.yaw_step_deg = 6.0;
  c.seed = 9;
  const ScanResult a = simulate_scan(scene, c, kDefaultSensorOrigin);
  const ScanResult b = simulate_scan(scene, c, kDefaultSensorOrigin);
  CHECK(a.cloud.points == b.cloud.points);
  CHECK(a.provenance == b.provenance);
  c.seed = 10;
  const ScanResult other = simulate_scan(scene, c, kDefaultSensorOrigin);
  CHECK(other.cloud.points != a.cloud.points);
}

TEST_CASE("empty scene gives empty cloud") {
  const ScanResult r = simulate_scan(SceneModel{"empty", {}}, ScannerConfig{}, kDefaultSensorOrigin);
  CHECK(r.cloud.empty());
  CHECK(r.provenance.empty());
}

TEST_CASE("built-in scenes are valid") {
  const auto names = builtin_scene_names();
  CHECK(names.size() == 5);
  for (const auto& n : names) {
    const SceneModel s = builtin_scene(n);
    CHECK(s.name == n);
    CHECK_NOTHROW(validate(s));
  }
  CHECK_THROWS_AS(builtin_scene("atrium"), ConfigError);
  SceneModel dup{"dup", {square(1, 0.0, 1.0), square(1, 1.0, 1.0)}};
  CHECK_THROWS_AS(validate(dup), ConfigError);
}
