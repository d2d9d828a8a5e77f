#pragma once

// Core 3D/2D primitives: points, directions, planes, clouds, polygons.

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace planeseg {

/// Direction or displacement. Unit-ness is a property of the value, not the
/// type; see `is_unit`.
struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vector3 operator+(Vector3 a, Vector3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vector3 operator-(Vector3 a, Vector3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vector3 operator-(Vector3 a) { return {-a.x, -a.y, -a.z}; }
  friend Vector3 operator*(double s, Vector3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vector3 operator*(Vector3 a, double s) { return s * a; }
  friend bool operator==(const Vector3&, const Vector3&) = default;
};

/// Position in meters.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vector3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator+(Point3 p, Vector3 v) { return {p.x + v.x, p.y + v.y, p.z + v.z}; }
  friend Point3 operator-(Point3 p, Vector3 v) { return {p.x - v.x, p.y - v.y, p.z - v.z}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double dot(Vector3 a, Vector3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vector3 cross(Vector3 a, Vector3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vector3 a) { return std::sqrt(dot(a, a)); }
inline Vector3 as_vector(Point3 p) { return {p.x, p.y, p.z}; }
inline Point3 as_point(Vector3 v) { return {v.x, v.y, v.z}; }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }

/// Throws DegenerateSample on a zero vector.
Vector3 normalized(Vector3 v);

inline constexpr double kUnitTolerance = 1e-9;
inline bool is_unit(Vector3 v) { return std::abs(norm(v) - 1.0) <= kUnitTolerance; }
bool is_finite(Point3 p);

/// Plane {x : normal . x = offset} with a unit normal in canonical
/// orientation (first nonzero of z, y, x is positive). `inliers` indexes into
/// whatever cloud the plane was estimated from.
struct PlaneModel {
  Vector3 normal{0.0, 0.0, 1.0};
  double offset = 0.0;
  std::vector<std::size_t> inliers;
};

/// Canonical plane for the equation normal . x = offset with any nonzero
/// normal; both sides are divided by |normal|.
PlaneModel make_plane(Vector3 normal, double offset);

/// Flips (normal, offset) so the first component of normal with magnitude
/// above 1e-12, in z, y, x order, is positive.
void canonicalize(Vector3& normal, double& offset);
Vector3 canonical_direction(Vector3 normal);

struct PointCloud {
  std::vector<Point3> points;
  std::optional<std::vector<Vector3>> normals;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
  bool has_normals() const noexcept { return normals.has_value(); }
};

/// Lengths match and every normal is unit.
bool is_valid(const PointCloud& cloud);

struct Polygon2 {
  std::vector<Point2> vertices;  // counter-clockwise
};

struct Polygon3 {
  std::vector<Point3> vertices;  // counter-clockwise about the polygon normal
};

/// Plane through three points. Input order does not affect the result.
/// Throws DegenerateSample when the points are collinear.
PlaneModel plane_from_points(Point3 p1, Point3 p2, Point3 p3);

inline double point_plane_distance(const PlaneModel& plane, Point3 p) {
  return std::abs(dot(plane.normal, as_vector(p)) - plane.offset);
}

/// Angle between undirected lines, in [0, pi/2].
double angle_between(Vector3 u, Vector3 v);

/// Total least squares plane through the centroid. Throws DegenerateSample
/// for fewer than 3 points or when the normal direction is not unique.
PlaneModel fit_plane_least_squares(std::span<const Point3> points);

/// Eigen-decomposition of a point set's scatter matrix about its centroid.
/// Eigenvalues ascending; `axes[i]` is the unit eigenvector for `values[i]`.
struct ScatterStats {
  Point3 centroid;
  double values[3] = {0.0, 0.0, 0.0};
  Vector3 axes[3];
};
ScatterStats scatter_stats(std::span<const Point3> points);

Point3 centroid(std::span<const Point3> points);

/// Orthonormal in-plane basis (u, v) for unit normal n: u = normalize(n x e)
/// with e the coordinate axis least aligned with n (x before y before z on
/// ties), v = n x u, so (u, v, n) is right-handed.
std::pair<Vector3, Vector3> plane_basis(Vector3 n);

// 2D helpers used by the hull code.
inline double cross2(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
double signed_area(const Polygon2& poly);

/// Closed convex CCW polygon test; points within `tol` of the boundary count
/// as inside.
bool convex_polygon_contains(const Polygon2& poly, Point2 p, double tol);

/// Strictly convex, CCW, simple, at least 3 vertices.
bool is_strictly_convex(const Polygon2& poly);

/// Best-fit plane of the polygon's vertices, oriented so its vertices run
/// counter-clockwise about the returned normal (not canonicalized).
PlaneModel polygon_plane(const Polygon3& poly);

/// Valid Polygon3: >= 3 vertices, all within 1e-6 m of a common plane,
/// strictly convex and simple.
bool is_valid(const Polygon3& poly);

double polygon_area(const Polygon3& poly);

/// Area centroid of a planar polygon.
Point3 polygon_centroid(const Polygon3& poly);

}  // namespace planeseg
