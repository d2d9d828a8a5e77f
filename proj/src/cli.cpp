#include "planeseg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "planeseg/errors.hpp"
#include "planeseg/experiment.hpp"
#include "planeseg/io.hpp"

namespace planeseg {

namespace {

struct NoPlanes {};

struct SimulateArgs {
  std::string scene;
  std::string config;
  std::optional<double> yaw_step;
  std::optional<double> noise;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string provenance;
};

struct DetectArgs {
  std::string in;
  std::string config;
  std::optional<std::size_t> threshold;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string labels;
  bool require_planes = false;
};

struct MergeHullArgs {
  std::string planes;
  std::string in;
  std::string config;
  std::string out;
  std::string ply;
  bool require_planes = false;
};

struct SweepArgs {
  std::string spec;
  std::string out;
  std::string means;
  std::optional<unsigned> threads;
};

struct ScenesArgs {
  std::string emit;
  std::string out;
};

AppConfig load_optional_config(const std::string& path) {
  return path.empty() ? AppConfig{} : load_config(path);
}

std::string pick(const std::string& flag, const std::optional<std::string>& fallback) {
  return !flag.empty() ? flag : fallback.value_or("");
}

SceneModel resolve_scene(const std::string& name_or_path) {
  const auto names = builtin_scene_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin_scene(name_or_path);
  return load_scene(name_or_path);
}

template <class Fn>
void write_stream(const std::string& path, Fn&& fn) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  fn(out);
  if (!out) throw IoError("write failed: " + path);
}

void require(const std::string& value, const char* what) {
  if (value.empty()) throw CLI::RequiredError(what);
}

void run_simulate(const SimulateArgs& a, std::ostream& out) {
  AppConfig cfg = load_optional_config(a.config);
  const std::string scene_ref = pick(a.scene, cfg.io.scene);
  const std::string out_path = pick(a.out, cfg.io.output);
  require(scene_ref, "--scene");
  require(out_path, "--out");
  if (a.yaw_step) cfg.scanner.yaw_step_deg = *a.yaw_step;
  if (a.noise) cfg.scanner.noise_sigma_m = *a.noise;
  if (a.seed) cfg.scanner.seed = *a.seed;
  validate(cfg.scanner);

  const ScanResult scan = simulate_scan(resolve_scene(scene_ref), cfg.scanner, cfg.sensor_origin);
  write_cloud(scan.cloud, out_path, format_from_path(out_path));
  const std::string prov = pick(a.provenance, cfg.io.provenance);
  if (!prov.empty()) write_stream(prov, [&](std::ostream& s) { write_provenance_csv(s, scan.provenance); });
  out << scan.cloud.size() << " points written to " << out_path << '\n';
}

void run_detect(const DetectArgs& a, std::ostream& out) {
  AppConfig cfg = load_optional_config(a.config);
  const std::string in_path = pick(a.in, cfg.io.input);
  const std::string out_path = pick(a.out, cfg.io.planes);
  require(in_path, "--in");
  require(out_path, "--out");
  if (a.threshold) cfg.ransac.min_inliers = *a.threshold;
  if (a.seed) cfg.ransac.seed = *a.seed;
  validate(cfg.ransac);

  const PointCloud cloud = read_cloud(in_path, format_from_path(in_path));
  const DetectionResult result = detect_planes(cloud, cfg.ransac);
  write_text_file(out_path, dump_planes(result));
  const std::string labels = pick(a.labels, cfg.io.labels);
  if (!labels.empty()) {
    write_stream(labels, [&](std::ostream& s) { write_labels_csv(s, point_labels(result, cloud.size())); });
  }
  out << result.planes.size() << " planes, " << result.residual_indices.size() << " residual points\n";
  if (a.require_planes && result.planes.empty()) throw NoPlanes{};
}

void run_merge_hull(const MergeHullArgs& a, std::ostream& out) {
  const AppConfig cfg = load_optional_config(a.config);
  const std::string planes_path = pick(a.planes, cfg.io.planes);
  const std::string in_path = pick(a.in, cfg.io.input);
  const std::string out_path = pick(a.out, cfg.io.output);
  require(planes_path, "--planes");
  require(in_path, "--in");
  require(out_path, "--out");

  const PointCloud cloud = read_cloud(in_path, format_from_path(in_path));
  const std::vector<PlaneModel> planes = parse_planes(read_text_file(planes_path));
  for (const auto& p : planes) {
    for (std::size_t i : p.inliers) {
      if (i >= cloud.size()) throw ConfigError("planes file refers to point " + std::to_string(i) + " beyond the cloud");
    }
  }
  std::vector<std::vector<int>> groups;
  const std::vector<PlaneModel> merged = merge_overlapping(planes, cloud, cfg.merge, &groups);
  const RegionBuild regions = build_regions(merged, cloud, groups);
  write_text_file(out_path, dump_regions(regions));
  const std::string ply = pick(a.ply, cfg.io.regions_ply);
  if (!ply.empty()) write_stream(ply, [&](std::ostream& s) { write_regions_ply(s, regions); });
  out << planes.size() << " planes merged into " << regions.regions.size() << " regions ("
      << regions.dropped << " dropped)\n";
  if (a.require_planes && regions.regions.empty()) throw NoPlanes{};
}

void run_sweep(const SweepArgs& a, std::ostream& out) {
  SweepSpec spec = load_sweep_spec(a.spec);
  if (a.threads) spec.threads = *a.threads;
  const SweepReport report = run_threshold_sweep(spec);
  write_stream(a.out, [&](std::ostream& s) { write_sweep_trials_csv(s, report); });
  if (!a.means.empty()) write_stream(a.means, [&](std::ostream& s) { write_sweep_means_csv(s, report); });
  else write_sweep_means_csv(out, report);
}

void run_scenes(const ScenesArgs& a, std::ostream& out) {
  if (a.emit.empty()) {
    for (const auto& name : builtin_scene_names()) out << name << '\n';
    return;
  }
  const std::string text = dump_scene(builtin_scene(a.emit));
  if (a.out.empty()) {
    out << text;
  } else {
    write_text_file(a.out, text);
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane detection for simulated and recorded 3D scans", "planeseg"};
  app.require_subcommand(1, 1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Ray-cast a scene into a point cloud");
  simulate->add_option("--scene", sim.scene, "Built-in scene name or scene JSON path");
  simulate->add_option("--config", sim.config, "Config JSON");
  simulate->add_option("--yaw-step", sim.yaw_step, "Yaw step in degrees");
  simulate->add_option("--noise", sim.noise, "Range noise sigma in metres");
  simulate->add_option("--seed", sim.seed, "Noise seed");
  simulate->add_option("--out", sim.out, "Output cloud (.xyz or .ply)");
  simulate->add_option("--provenance", sim.provenance, "Per-point facet id CSV");

  DetectArgs det;
  auto* detect = app.add_subcommand("detect", "Sequential RANSAC plane detection");
  detect->add_option("--in", det.in, "Input cloud (.xyz or .ply)");
  detect->add_option("--config", det.config, "Config JSON");
  detect->add_option("--threshold", det.threshold, "Minimum inliers per plane");
  detect->add_option("--seed", det.seed, "RANSAC seed");
  detect->add_option("--out", det.out, "Planes JSON");
  detect->add_option("--labels", det.labels, "Per-point plane id CSV");
  detect->add_flag("--require-planes", det.require_planes, "Exit 3 when no plane is found");

  MergeHullArgs mh;
  auto* merge_hull = app.add_subcommand("merge-hull", "Merge planes and build convex regions");
  merge_hull->add_option("--planes", mh.planes, "Planes JSON from detect");
  merge_hull->add_option("--in", mh.in, "Cloud the planes were detected in");
  merge_hull->add_option("--config", mh.config, "Config JSON");
  merge_hull->add_option("--out", mh.out, "Regions JSON");
  merge_hull->add_option("--ply", mh.ply, "Regions as PLY polygons");
  merge_hull->add_flag("--require-planes", mh.require_planes, "Exit 3 when no region is built");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Threshold-versus-density experiment");
  sweep->add_option("--spec", sw.spec, "Sweep spec JSON")->required();
  sweep->add_option("--out", sw.out, "Per-trial CSV")->required();
  sweep->add_option("--means", sw.means, "Mean CSV (stdout when omitted)");
  sweep->add_option("--threads", sw.threads, "Worker threads");

  ScenesArgs sc;
  auto* scenes = app.add_subcommand("scenes", "List built-in scenes or emit one as JSON");
  scenes->add_option("--emit", sc.emit, "Scene to emit");
  scenes->add_option("--out", sc.out, "Write the emitted scene here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (simulate->parsed()) run_simulate(sim, out);
    if (detect->parsed()) run_detect(det, out);
    if (merge_hull->parsed()) run_merge_hull(mh, out);
    if (sweep->parsed()) run_sweep(sw, out);
    if (scenes->parsed()) run_scenes(sc, out);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const NoPlanes&) {
    err << "error: no planes detected\n";
    return kExitNoPlanes;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace planeseg
