#include "planeseg/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <numbers>

#include "planeseg/errors.hpp"

namespace planeseg {

namespace {

constexpr double kOrientationEps = 1e-12;
constexpr double kCollinearRel = 1e-12;
constexpr double kCoplanarTol = 1e-6;

bool lex_less(Point3 a, Point3 b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

}  // namespace

Vector3 normalized(Vector3 v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw DegenerateSample("cannot normalize a zero vector");
  return (1.0 / n) * v;
}

bool is_finite(Point3 p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

void canonicalize(Vector3& normal, double& offset) {
  for (double c : {normal.z, normal.y, normal.x}) {
    if (std::abs(c) > kOrientationEps) {
      if (c < 0.0) {
        normal = -normal;
        offset = -offset;
      }
      return;
    }
  }
}

Vector3 canonical_direction(Vector3 normal) {
  double unused = 0.0;
  canonicalize(normal, unused);
  return normal;
}

PlaneModel make_plane(Vector3 normal, double offset) {
  PlaneModel plane;
  const double n = norm(normal);
  if (!(n > 0.0)) throw DegenerateSample("plane normal is zero");
  plane.normal = (1.0 / n) * normal;
  plane.offset = offset / n;
  canonicalize(plane.normal, plane.offset);
  return plane;
}

bool is_valid(const PointCloud& cloud) {
  if (!std::all_of(cloud.points.begin(), cloud.points.end(), is_finite)) return false;
  if (!cloud.normals) return true;
  if (cloud.normals->size() != cloud.points.size()) return false;
  return std::all_of(cloud.normals->begin(), cloud.normals->end(), is_unit);
}

PlaneModel plane_from_points(Point3 p1, Point3 p2, Point3 p3) {
  // Sorting makes the floating-point evaluation order, and therefore the
  // result, independent of argument order.
  std::array<Point3, 3> pts{p1, p2, p3};
  std::sort(pts.begin(), pts.end(), lex_less);

  const Vector3 e1 = pts[1] - pts[0];
  const Vector3 e2 = pts[2] - pts[0];
  const Vector3 n = cross(e1, e2);
  const double scale = norm(e1) * norm(e2);
  const double n_len = norm(n);
  if (!(scale > 0.0) || n_len < kCollinearRel * scale) {
    throw DegenerateSample("sample points are collinear");
  }
  PlaneModel plane;
  plane.normal = (1.0 / n_len) * n;
  const Point3 c{(pts[0].x + pts[1].x + pts[2].x) / 3.0, (pts[0].y + pts[1].y + pts[2].y) / 3.0,
                 (pts[0].z + pts[1].z + pts[2].z) / 3.0};
  plane.offset = dot(plane.normal, as_vector(c));
  canonicalize(plane.normal, plane.offset);
  return plane;
}

double angle_between(Vector3 u, Vector3 v) {
  const double c = std::clamp(std::abs(dot(u, v)), -1.0, 1.0);
  return std::acos(c);
}

Point3 centroid(std::span<const Point3> points) {
  double sx = 0.0, sy = 0.0, sz = 0.0;
  for (const auto& p : points) {
    sx += p.x;
    sy += p.y;
    sz += p.z;
  }
  const double n = static_cast<double>(points.size());
  return {sx / n, sy / n, sz / n};
}

ScatterStats scatter_stats(std::span<const Point3> points) {
  ScatterStats stats;
  stats.centroid = centroid(points);
  Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
  for (const auto& p : points) {
    const Eigen::Vector3d d(p.x - stats.centroid.x, p.y - stats.centroid.y, p.z - stats.centroid.z);
    scatter.noalias() += d * d.transpose();
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(scatter);
  for (int i = 0; i < 3; ++i) {
    stats.values[i] = std::max(solver.eigenvalues()(i), 0.0);
    const auto col = solver.eigenvectors().col(i);
    stats.axes[i] = Vector3{col(0), col(1), col(2)};
  }
  return stats;
}

PlaneModel fit_plane_least_squares(std::span<const Point3> points) {
  if (points.size() < 3) throw DegenerateSample("plane fit needs at least 3 points");
  const ScatterStats stats = scatter_stats(points);
  if (stats.values[1] - stats.values[0] <= kCollinearRel * stats.values[2]) {
    throw DegenerateSample("plane fit is ill-defined (collinear or isotropic points)");
  }
  PlaneModel plane;
  plane.normal = normalized(stats.axes[0]);
  plane.offset = dot(plane.normal, as_vector(stats.centroid));
  canonicalize(plane.normal, plane.offset);
  return plane;
}

double signed_area(const Polygon2& poly) {
  const auto& v = poly.vertices;
  double a = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const Point2 p = v[i];
    const Point2 q = v[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

bool convex_polygon_contains(const Polygon2& poly, Point2 p, double tol) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % n];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (len == 0.0) continue;
    // Signed distance to the edge line; positive on the interior side.
    if (cross2(a, b, p) / len < -tol) return false;
  }
  return true;
}

bool is_strictly_convex(const Polygon2& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cross2(v[i], v[(i + 1) % n], v[(i + 2) % n]) > 0.0)) return false;
  }
  // Left turns everywhere plus a total turning of 2*pi means simple. The
  // winding check catches star polygons that only ever turn left.
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i], b = v[(i + 1) % n], c = v[(i + 2) % n];
    const double h1 = std::atan2(b.y - a.y, b.x - a.x);
    const double h2 = std::atan2(c.y - b.y, c.x - b.x);
    double d = h2 - h1;
    while (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    turning += d;
  }
  return std::abs(turning - 2.0 * std::numbers::pi) < 1e-6;
}

PlaneModel polygon_plane(const Polygon3& poly) {
  // Newell's method: the normal follows the vertex winding.
  const auto& v = poly.vertices;
  Vector3 n{};
  for (std::size_t i = 0, m = v.size(); i < m; ++i) {
    const Point3 a = v[i];
    const Point3 b = v[(i + 1) % m];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  PlaneModel plane;
  plane.normal = normalized(n);
  plane.offset = dot(plane.normal, as_vector(centroid(v)));
  return plane;
}

std::pair<Vector3, Vector3> plane_basis(Vector3 n) {
  const Vector3 axis = std::abs(n.x) <= std::abs(n.y) && std::abs(n.x) <= std::abs(n.z)
                           ? Vector3{1, 0, 0}
                           : (std::abs(n.y) <= std::abs(n.z) ? Vector3{0, 1, 0} : Vector3{0, 0, 1});
  const Vector3 u = normalized(cross(n, axis));
  return {u, cross(n, u)};
}

namespace {

Polygon2 flatten(const Polygon3& poly, Vector3 n) {
  const auto [u, w] = plane_basis(n);
  Polygon2 out;
  out.vertices.reserve(poly.vertices.size());
  const Point3 o = poly.vertices.front();
  for (const auto& p : poly.vertices) {
    const Vector3 d = p - o;
    out.vertices.push_back({dot(d, u), dot(d, w)});
  }
  return out;
}

}  // namespace

bool is_valid(const Polygon3& poly) {
  if (poly.vertices.size() < 3) return false;
  if (!std::all_of(poly.vertices.begin(), poly.vertices.end(), is_finite)) return false;
  PlaneModel plane;
  try {
    plane = polygon_plane(poly);
  } catch (const DegenerateSample&) {
    return false;
  }
  for (const auto& p : poly.vertices) {
    if (point_plane_distance(plane, p) > kCoplanarTol) return false;
  }
  return is_strictly_convex(flatten(poly, plane.normal));
}

double polygon_area(const Polygon3& poly) {
  const PlaneModel plane = polygon_plane(poly);
  return std::abs(signed_area(flatten(poly, plane.normal)));
}

Point3 polygon_centroid(const Polygon3& poly) {
  const Point3 o = poly.vertices.front();
  Vector3 weighted{};
  double total = 0.0;
  const Vector3 n = polygon_plane(poly).normal;
  for (std::size_t i = 1; i + 1 < poly.vertices.size(); ++i) {
    const Point3 b = poly.vertices[i];
    const Point3 c = poly.vertices[i + 1];
    const double a = 0.5 * dot(cross(b - o, c - o), n);
    const Vector3 g = (1.0 / 3.0) * ((o - Point3{}) + (b - Point3{}) + (c - Point3{}));
    weighted = weighted + a * g;
    total += a;
  }
  if (total == 0.0) return centroid(poly.vertices);
  return as_point((1.0 / total) * weighted);
}

}  // namespace planeseg
