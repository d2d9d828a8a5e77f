#include "planeseg/io.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <json.hpp>
#include <sstream>

#include "planeseg/errors.hpp"

namespace planeseg {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

double parse_number(std::string_view s, std::size_t line) {
  const auto v = to_double(s);
  if (!v) throw ParseError("not a finite number: '" + std::string(s) + "'", line);
  return *v;
}

// ---- JSON helpers ---------------------------------------------------------

// Object reader that rejects keys it was not asked about.
class Section {
 public:
  Section(const json& j, std::string name) : j_(j), name_(std::move(name)) {
    if (!j_.is_object()) throw ConfigError(name_ + ": expected an object");
  }

  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : j_.items()) {
      bool known = false;
      for (const char* a : keys) known = known || k == a;
      if (!known) throw ConfigError(name_ + ": unknown key '" + k + "'");
    }
  }

  bool has(const char* key) const { return j_.contains(key); }
  const json& at(const char* key) const { return j_.at(key); }
  std::string path(const char* key) const { return name_ + "." + key; }

  void number(const char* key, double& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number()) throw ConfigError(path(key) + ": expected a number");
    out = v.get<double>();
  }

  template <class T>
  void integer(const char* key, T& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number_unsigned()) throw ConfigError(path(key) + ": expected a non-negative integer");
    out = v.get<T>();
  }

  void boolean(const char* key, bool& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_boolean()) throw ConfigError(path(key) + ": expected true or false");
    out = v.get<bool>();
  }

  void string(const char* key, std::optional<std::string>& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_string()) throw ConfigError(path(key) + ": expected a string");
    out = v.get<std::string>();
  }

  void require(const char* key) const {
    if (!has(key)) throw ConfigError(path(key) + ": required");
  }

 private:
  const json& j_;
  std::string name_;
};

Point3 parse_point(const json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 3) throw ConfigError(what + ": expected [x, y, z]");
  for (const auto& c : v) {
    if (!c.is_number()) throw ConfigError(what + ": coordinates must be numbers");
  }
  const Point3 p{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
  if (!is_finite(p)) throw ConfigError(what + ": coordinates must be finite");
  return p;
}

json point_json(Point3 p) { return json::array({p.x, p.y, p.z}); }
json vector_json(Vector3 v) { return json::array({v.x, v.y, v.z}); }

void read_scanner(const json& j, ScannerConfig& c, const std::string& name) {
  Section s(j, name);
  s.allow({"pitch_deg", "yaw_start_deg", "yaw_end_deg", "yaw_step_deg", "beam_fov_deg",
           "beam_step_deg", "max_range_m", "noise_sigma_m", "seed"});
  s.require("seed");
  s.number("pitch_deg", c.pitch_deg);
  s.number("yaw_start_deg", c.yaw_start_deg);
  s.number("yaw_end_deg", c.yaw_end_deg);
  s.number("yaw_step_deg", c.yaw_step_deg);
  s.number("beam_fov_deg", c.beam_fov_deg);
  s.number("beam_step_deg", c.beam_step_deg);
  s.number("max_range_m", c.max_range_m);
  s.number("noise_sigma_m", c.noise_sigma_m);
  s.integer("seed", c.seed);
}

void read_ransac(const json& j, RansacParams& p, const std::string& name) {
  Section s(j, name);
  s.allow({"p_g", "p_fail", "dist_tol_m", "angle_tol_rad", "min_inliers", "knn_k", "seed"});
  s.require("seed");
  s.number("p_g", p.p_g);
  s.number("p_fail", p.p_fail);
  s.number("dist_tol_m", p.dist_tol_m);
  s.number("angle_tol_rad", p.angle_tol_rad);
  s.integer("min_inliers", p.min_inliers);
  s.integer("knn_k", p.knn_k);
  s.integer("seed", p.seed);
}

void read_eps_pair(const json& j, double& angle, double& dist, const std::string& name) {
  Section s(j, name);
  s.allow({"angle_eps", "dist_eps"});
  s.number("angle_eps", angle);
  s.number("dist_eps", dist);
  if (!(angle > 0.0) || !(dist > 0.0)) throw ConfigError(name + ": angle_eps and dist_eps must be > 0");
}

json scanner_json(const ScannerConfig& c) {
  return {{"pitch_deg", c.pitch_deg},         {"yaw_start_deg", c.yaw_start_deg},
          {"yaw_end_deg", c.yaw_end_deg},     {"yaw_step_deg", c.yaw_step_deg},
          {"beam_fov_deg", c.beam_fov_deg},   {"beam_step_deg", c.beam_step_deg},
          {"max_range_m", c.max_range_m},     {"noise_sigma_m", c.noise_sigma_m},
          {"seed", c.seed}};
}

json ransac_json(const RansacParams& p) {
  return {{"p_g", p.p_g},
          {"p_fail", p.p_fail},
          {"dist_tol_m", p.dist_tol_m},
          {"angle_tol_rad", p.angle_tol_rad},
          {"min_inliers", p.min_inliers},
          {"knn_k", p.knn_k},
          {"seed", p.seed}};
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

SceneModel scene_from_json(const json& j) {
  Section s(j, "scene");
  s.allow({"name", "facets"});
  SceneModel scene;
  std::optional<std::string> name;
  s.string("name", name);
  scene.name = name.value_or("");
  s.require("facets");
  const json& facets = s.at("facets");
  if (!facets.is_array()) throw ConfigError("scene.facets: expected an array");
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "scene.facets[" + std::to_string(i) + "]";
    Section f(facets[i], where);
    f.allow({"id", "vertices"});
    f.require("id");
    f.require("vertices");
    if (!f.at("id").is_number_integer()) throw ConfigError(where + ".id: expected an integer");
    Facet facet;
    facet.id = f.at("id").get<int>();
    const json& verts = f.at("vertices");
    if (!verts.is_array()) throw ConfigError(where + ".vertices: expected an array");
    for (const auto& v : verts) facet.polygon.vertices.push_back(parse_point(v, where + ".vertices"));
    scene.facets.push_back(std::move(facet));
  }
  validate(scene);
  return scene;
}

json scene_to_json(const SceneModel& scene) {
  json facets = json::array();
  for (const auto& f : scene.facets) {
    json verts = json::array();
    for (const auto& v : f.polygon.vertices) verts.push_back(point_json(v));
    facets.push_back({{"id", f.id}, {"vertices", verts}});
  }
  return {{"name", scene.name}, {"facets", facets}};
}

// ---- PLY -----------------------------------------------------------------

struct PlyProperty {
  std::string name;
  bool is_list = false;
};

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<PlyProperty> props;
};

bool getline_counted(std::istream& in, std::string& line, std::size_t& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw IoError("cannot format number");
  return std::string(buf, ptr);
}

CloudFormat format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".ply" ? CloudFormat::Ply : CloudFormat::Xyz;
}

PointCloud read_xyz(std::istream& in) {
  PointCloud cloud;
  std::string line;
  std::size_t line_no = 0;
  while (getline_counted(in, line, line_no)) {
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 3) {
      throw ParseError("expected 3 values per line, got " + std::to_string(tokens.size()), line_no);
    }
    cloud.points.push_back({parse_number(tokens[0], line_no), parse_number(tokens[1], line_no),
                            parse_number(tokens[2], line_no)});
  }
  return cloud;
}

PointCloud read_ply(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!getline_counted(in, line, line_no) || line != "ply") throw ParseError("missing 'ply' magic", 1);

  std::vector<PlyElement> elements;
  bool saw_format = false;
  for (;;) {
    if (!getline_counted(in, line, line_no)) throw ParseError("unterminated PLY header", line_no);
    const auto t = split_ws(line);
    if (t.empty()) continue;
    if (t[0] == "end_header") break;
    if (t[0] == "comment" || t[0] == "obj_info") continue;
    if (t[0] == "format") {
      if (t.size() < 2) throw ParseError("malformed format line", line_no);
      if (t[1] != "ascii") throw UnsupportedFormat("only ASCII PLY is supported, got " + std::string(t[1]));
      saw_format = true;
    } else if (t[0] == "element") {
      if (t.size() != 3) throw ParseError("malformed element line", line_no);
      const auto count = to_double(t[2]);
      if (!count || *count < 0 || *count != std::floor(*count)) throw ParseError("bad element count", line_no);
      elements.push_back({std::string(t[1]), static_cast<std::size_t>(*count), {}});
    } else if (t[0] == "property") {
      if (elements.empty()) throw ParseError("property before element", line_no);
      if (t.size() >= 2 && t[1] == "list") {
        if (t.size() != 5) throw ParseError("malformed list property", line_no);
        elements.back().props.push_back({std::string(t[4]), true});
      } else {
        if (t.size() != 3) throw ParseError("malformed property line", line_no);
        elements.back().props.push_back({std::string(t[2]), false});
      }
    } else {
      throw ParseError("unknown header keyword '" + std::string(t[0]) + "'", line_no);
    }
  }
  if (!saw_format) throw ParseError("PLY header has no format line", line_no);

  PointCloud cloud;
  for (const auto& el : elements) {
    const bool is_vertex = el.name == "vertex";
    int ix = -1, iy = -1, iz = -1, inx = -1, iny = -1, inz = -1;
    bool has_list = false;
    for (std::size_t k = 0; k < el.props.size(); ++k) {
      const auto& p = el.props[k];
      has_list = has_list || p.is_list;
      const int ki = static_cast<int>(k);
      if (p.is_list) continue;
      if (p.name == "x") ix = ki;
      if (p.name == "y") iy = ki;
      if (p.name == "z") iz = ki;
      if (p.name == "nx") inx = ki;
      if (p.name == "ny") iny = ki;
      if (p.name == "nz") inz = ki;
    }
    if (is_vertex && (ix < 0 || iy < 0 || iz < 0)) throw ParseError("vertex element lacks x, y, z");
    if (is_vertex && has_list) throw UnsupportedFormat("list properties on vertices are not supported");
    const bool normals = is_vertex && inx >= 0 && iny >= 0 && inz >= 0;
    if (normals) cloud.normals.emplace();

    for (std::size_t r = 0; r < el.count; ++r) {
      if (!getline_counted(in, line, line_no)) throw ParseError("unexpected end of PLY data", line_no);
      if (!is_vertex) continue;
      const auto t = split_ws(line);
      if (t.size() != el.props.size()) {
        throw ParseError("expected " + std::to_string(el.props.size()) + " values, got " +
                             std::to_string(t.size()),
                         line_no);
      }
      auto val = [&](int k) { return parse_number(t[static_cast<std::size_t>(k)], line_no); };
      cloud.points.push_back({val(ix), val(iy), val(iz)});
      if (normals) cloud.normals->push_back({val(inx), val(iny), val(inz)});
    }
  }
  return cloud;
}

void write_xyz(std::ostream& out, const PointCloud& cloud) {
  for (const auto& p : cloud.points) {
    out << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z) << '\n';
  }
}

void write_ply(std::ostream& out, const PointCloud& cloud) {
  const bool normals = cloud.normals.has_value();
  out << "ply\nformat ascii 1.0\nelement vertex " << cloud.size() << '\n'
      << "property double x\nproperty double y\nproperty double z\n";
  if (normals) out << "property double nx\nproperty double ny\nproperty double nz\n";
  out << "end_header\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point3 p = cloud.points[i];
    out << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z);
    if (normals) {
      const Vector3 n = (*cloud.normals)[i];
      out << ' ' << format_double(n.x) << ' ' << format_double(n.y) << ' ' << format_double(n.z);
    }
    out << '\n';
  }
}

PointCloud read_cloud(const std::filesystem::path& path, CloudFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return format == CloudFormat::Ply ? read_ply(in) : read_xyz(in);
}

void write_cloud(const PointCloud& cloud, const std::filesystem::path& path, CloudFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  if (format == CloudFormat::Ply) {
    write_ply(out, cloud);
  } else {
    write_xyz(out, cloud);
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_provenance_csv(std::ostream& out, const std::vector<int>& provenance) {
  out << "index,facet_id\n";
  for (std::size_t i = 0; i < provenance.size(); ++i) out << i << ',' << provenance[i] << '\n';
}

void write_labels_csv(std::ostream& out, const std::vector<int>& labels) {
  out << "index,plane_id\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << labels[i] << '\n';
}

AppConfig parse_config(const std::string& text) {
  const json j = parse_json(text, "config");
  Section s(j, "config");
  s.allow({"scanner", "sensor_origin", "ransac", "merge", "classify", "io"});
  AppConfig c;
  if (s.has("scanner")) read_scanner(s.at("scanner"), c.scanner, "config.scanner");
  if (s.has("sensor_origin")) c.sensor_origin = parse_point(s.at("sensor_origin"), "config.sensor_origin");
  if (s.has("ransac")) read_ransac(s.at("ransac"), c.ransac, "config.ransac");
  if (s.has("merge")) read_eps_pair(s.at("merge"), c.merge.angle_eps, c.merge.dist_eps, "config.merge");
  if (s.has("classify")) {
    read_eps_pair(s.at("classify"), c.classify.angle_eps, c.classify.dist_eps, "config.classify");
  }
  if (s.has("io")) {
    Section io(s.at("io"), "config.io");
    io.allow({"scene", "input", "output", "provenance", "labels", "planes", "regions_ply"});
    io.string("scene", c.io.scene);
    io.string("input", c.io.input);
    io.string("output", c.io.output);
    io.string("provenance", c.io.provenance);
    io.string("labels", c.io.labels);
    io.string("planes", c.io.planes);
    io.string("regions_ply", c.io.regions_ply);
  }
  validate(c.scanner);
  validate(c.ransac);
  return c;
}

AppConfig load_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

std::string dump_config(const AppConfig& c) {
  json io = json::object();
  auto put = [&](const char* k, const std::optional<std::string>& v) {
    if (v) io[k] = *v;
  };
  put("scene", c.io.scene);
  put("input", c.io.input);
  put("output", c.io.output);
  put("provenance", c.io.provenance);
  put("labels", c.io.labels);
  put("planes", c.io.planes);
  put("regions_ply", c.io.regions_ply);
  const json j = {{"scanner", scanner_json(c.scanner)},
                  {"sensor_origin", point_json(c.sensor_origin)},
                  {"ransac", ransac_json(c.ransac)},
                  {"merge", {{"angle_eps", c.merge.angle_eps}, {"dist_eps", c.merge.dist_eps}}},
                  {"classify", {{"angle_eps", c.classify.angle_eps}, {"dist_eps", c.classify.dist_eps}}},
                  {"io", io}};
  return j.dump(2) + "\n";
}

SceneModel parse_scene(const std::string& text) { return scene_from_json(parse_json(text, "scene")); }
SceneModel load_scene(const std::filesystem::path& path) { return parse_scene(read_text_file(path)); }
std::string dump_scene(const SceneModel& scene) { return scene_to_json(scene).dump(2) + "\n"; }

std::string dump_planes(const DetectionResult& result) {
  json planes = json::array();
  for (std::size_t i = 0; i < result.planes.size(); ++i) {
    const auto& p = result.planes[i];
    planes.push_back({{"id", i},
                      {"normal", vector_json(p.normal)},
                      {"offset", p.offset},
                      {"inlier_count", p.inliers.size()},
                      {"inliers", p.inliers}});
  }
  const json j = {{"planes", planes},
                  {"residual_count", result.residual_indices.size()},
                  {"iterations_used", result.iterations_used}};
  return j.dump(2) + "\n";
}

std::vector<PlaneModel> parse_planes(const std::string& text) {
  const json j = parse_json(text, "planes");
  Section s(j, "planes document");
  s.allow({"planes", "residual_count", "iterations_used"});
  s.require("planes");
  const json& arr = s.at("planes");
  if (!arr.is_array()) throw ConfigError("planes: expected an array");
  std::vector<PlaneModel> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "planes[" + std::to_string(i) + "]";
    Section p(arr[i], where);
    p.allow({"id", "normal", "offset", "inlier_count", "inliers"});
    p.require("normal");
    p.require("offset");
    p.require("inliers");
    const Point3 n = parse_point(p.at("normal"), where + ".normal");
    PlaneModel plane;
    plane.normal = {n.x, n.y, n.z};
    if (!is_unit(plane.normal)) throw ConfigError(where + ".normal: not a unit vector");
    p.number("offset", plane.offset);
    const json& in = p.at("inliers");
    if (!in.is_array()) throw ConfigError(where + ".inliers: expected an array");
    for (const auto& v : in) {
      if (!v.is_number_unsigned()) throw ConfigError(where + ".inliers: expected indices");
      plane.inliers.push_back(v.get<std::size_t>());
    }
    out.push_back(std::move(plane));
  }
  return out;
}

std::string dump_regions(const RegionBuild& regions) {
  json arr = json::array();
  for (std::size_t i = 0; i < regions.regions.size(); ++i) {
    const auto& r = regions.regions[i];
    json hull = json::array();
    for (const auto& v : r.hull.vertices) hull.push_back(point_json(v));
    arr.push_back({{"id", i},
                   {"normal", vector_json(r.plane.normal)},
                   {"offset", r.plane.offset},
                   {"inlier_count", r.plane.inliers.size()},
                   {"source_ids", r.source_plane_ids},
                   {"hull", hull}});
  }
  const json j = {{"regions", arr}, {"dropped", regions.dropped}};
  return j.dump(2) + "\n";
}

void write_regions_ply(std::ostream& out, const RegionBuild& regions) {
  std::size_t n_vertices = 0;
  for (const auto& r : regions.regions) n_vertices += r.hull.vertices.size();
  out << "ply\nformat ascii 1.0\nelement vertex " << n_vertices << '\n'
      << "property double x\nproperty double y\nproperty double z\n"
      << "element face " << regions.regions.size() << '\n'
      << "property list uchar int vertex_indices\nend_header\n";
  for (const auto& r : regions.regions) {
    for (const auto& v : r.hull.vertices) {
      out << format_double(v.x) << ' ' << format_double(v.y) << ' ' << format_double(v.z) << '\n';
    }
  }
  std::size_t base = 0;
  for (const auto& r : regions.regions) {
    out << r.hull.vertices.size();
    for (std::size_t k = 0; k < r.hull.vertices.size(); ++k) out << ' ' << base + k;
    out << '\n';
    base += r.hull.vertices.size();
  }
}

SweepSpec parse_sweep_spec(const std::string& text) {
  const json j = parse_json(text, "sweep spec");
  Section s(j, "sweep");
  s.allow({"environment", "scene", "sensor_origin", "scanner", "densities", "trials", "seeds",
           "ransac", "merge", "classify", "count_pre_merge", "threads"});
  SweepSpec spec;
  std::optional<std::string> env;
  s.string("environment", env);
  if (s.has("scene")) {
    spec.scene = scene_from_json(s.at("scene"));
    spec.environment = env.value_or(spec.scene.name);
  } else {
    if (!env) throw ConfigError("sweep: give a built-in 'environment' or an inline 'scene'");
    spec.environment = *env;
    spec.scene = builtin_scene(*env);
  }
  if (s.has("sensor_origin")) spec.sensor_origin = parse_point(s.at("sensor_origin"), "sweep.sensor_origin");
  if (s.has("scanner")) read_scanner(s.at("scanner"), spec.scanner, "sweep.scanner");
  if (s.has("ransac")) read_ransac(s.at("ransac"), spec.ransac, "sweep.ransac");
  if (s.has("merge")) read_eps_pair(s.at("merge"), spec.merge.angle_eps, spec.merge.dist_eps, "sweep.merge");
  if (s.has("classify")) {
    read_eps_pair(s.at("classify"), spec.classify.angle_eps, spec.classify.dist_eps, "sweep.classify");
  }
  s.integer("trials", spec.trials);
  s.boolean("count_pre_merge", spec.count_pre_merge);
  s.integer("threads", spec.threads);
  if (s.has("seeds")) {
    const json& seeds = s.at("seeds");
    if (!seeds.is_array()) throw ConfigError("sweep.seeds: expected an array");
    for (const auto& v : seeds) {
      if (!v.is_number_unsigned()) throw ConfigError("sweep.seeds: expected non-negative integers");
      spec.seeds.push_back(v.get<std::uint64_t>());
    }
  }
  if (s.has("densities")) {
    const json& arr = s.at("densities");
    if (!arr.is_array()) throw ConfigError("sweep.densities: expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "sweep.densities[" + std::to_string(i) + "]";
      Section d(arr[i], where);
      d.allow({"label", "yaw_step_deg", "thresholds"});
      d.require("label");
      d.require("yaw_step_deg");
      d.require("thresholds");
      DensitySpec ds;
      std::optional<std::string> label;
      d.string("label", label);
      ds.label = *label;
      d.number("yaw_step_deg", ds.yaw_step_deg);
      const json& th = d.at("thresholds");
      if (!th.is_array()) throw ConfigError(where + ".thresholds: expected an array");
      for (const auto& v : th) {
        if (!v.is_number_unsigned()) throw ConfigError(where + ".thresholds: expected integers");
        ds.thresholds.push_back(v.get<std::size_t>());
      }
      spec.densities.push_back(std::move(ds));
    }
  } else {
    spec.densities = default_densities();
  }
  validate(spec);
  return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  return parse_sweep_spec(read_text_file(path));
}

void write_sweep_trials_csv(std::ostream& out, const SweepReport& report) {
  out << "environment,density,threshold,trial,plane_count,false_count\n";
  for (const auto& r : report.rows) {
    for (std::size_t t = 0; t < r.plane_counts.size(); ++t) {
      out << r.environment << ',' << r.density << ',' << r.threshold << ',' << t << ','
          << r.plane_counts[t] << ',' << r.false_counts[t] << '\n';
    }
  }
}

void write_sweep_means_csv(std::ostream& out, const SweepReport& report) {
  out << "environment,density,threshold,mean_plane_count,mean_false_count,mean_true_count\n";
  for (const auto& r : report.rows) {
    out << r.environment << ',' << r.density << ',' << r.threshold << ','
        << format_double(r.mean_plane_count) << ',' << format_double(r.mean_false_count) << ','
        << format_double(r.mean_true_count()) << '\n';
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace planeseg
