#pragma once

// Slow reference implementations used to check the library.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "planeseg/geometry.hpp"

namespace oracle {

using planeseg::Point2;
using planeseg::Point3;

inline double turn(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double sq_dist(Point2 a, Point2 b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

inline std::vector<Point2> unique_points(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  pts.erase(std::unique(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a == b; }), pts.end());
  return pts;
}

/// Rotates a CCW vertex cycle to start at its lowest-y, then lowest-x vertex.
inline std::vector<Point2> normalize_cycle(std::vector<Point2> cycle) {
  if (cycle.empty()) return cycle;
  const auto first = std::min_element(cycle.begin(), cycle.end(), [](Point2 a, Point2 b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::rotate(cycle.begin(), first, cycle.end());
  return cycle;
}

/// O(n^3): i->j is a CCW hull edge when every other point is strictly left
/// of it or lies strictly inside the segment. Strict vertices only.
inline std::vector<Point2> hull_by_edges(const std::vector<Point2>& input) {
  const auto pts = unique_points(input);
  const std::size_t n = pts.size();
  std::vector<int> next(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool edge = true;
      for (std::size_t k = 0; k < n && edge; ++k) {
        if (k == i || k == j) continue;
        const double t = turn(pts[i], pts[j], pts[k]);
        if (t > 0) continue;
        if (t < 0) {
          edge = false;
          continue;
        }
        const double d = (pts[k].x - pts[i].x) * (pts[j].x - pts[i].x) + (pts[k].y - pts[i].y) * (pts[j].y - pts[i].y);
        edge = d > 0 && d < sq_dist(pts[i], pts[j]);
      }
      if (edge) next[i] = static_cast<int>(j);
    }
  }
  std::vector<Point2> hull;
  int start = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (next[i] >= 0 && (start < 0 || pts[i].y < pts[start].y ||
                         (pts[i].y == pts[start].y && pts[i].x < pts[start].x))) {
      start = static_cast<int>(i);
    }
  }
  if (start < 0) return hull;
  int cur = start;
  do {
    hull.push_back(pts[static_cast<std::size_t>(cur)]);
    cur = next[static_cast<std::size_t>(cur)];
  } while (cur != start && cur >= 0 && hull.size() <= n);
  return hull;
}

/// Gift wrapping, O(nh). Among collinear candidates the farthest wins, so
/// only strict vertices are reported.
inline std::vector<Point2> jarvis_march(const std::vector<Point2>& input) {
  const auto pts = unique_points(input);
  if (pts.size() < 3) return {};
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].y < pts[start].y || (pts[i].y == pts[start].y && pts[i].x < pts[start].x)) start = i;
  }
  std::vector<Point2> hull;
  std::size_t cur = start;
  do {
    hull.push_back(pts[cur]);
    std::size_t cand = cur == 0 ? 1 : 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == cur) continue;
      const double t = turn(pts[cur], pts[cand], pts[k]);
      if (t < 0 || (t == 0 && sq_dist(pts[cur], pts[k]) > sq_dist(pts[cur], pts[cand]))) cand = k;
    }
    cur = cand;
  } while (cur != start && hull.size() <= pts.size());
  if (hull.size() < 3) return {};
  return hull;
}

/// Random hull input of 10..500 points. Grid instances use small integer
/// coordinates, so they are dense in collinear triples, many on the boundary.
inline std::vector<Point2> hull_instance(std::mt19937_64& rng, bool grid) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(10, 500)(rng);
  std::vector<Point2> pts;
  pts.reserve(n);
  if (grid) {
    const int span = std::uniform_int_distribution<int>(3, 20)(rng);
    std::uniform_int_distribution<int> c(-span, span);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({double(c(rng)), double(c(rng))});
    for (int k = -span; k <= span; k += 2) pts.push_back({double(k), double(-span)});
  } else {
    std::uniform_real_distribution<double> c(-100.0, 100.0);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({c(rng), c(rng)});
  }
  return pts;
}

inline bool has_collinear_triple(const std::vector<Point2>& input) {
  const auto pts = unique_points(input);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (turn(pts[i], pts[j], pts[k]) == 0.0) return true;
      }
    }
  }
  return false;
}

inline std::size_t consensus(const std::vector<Point3>& pts, planeseg::Vector3 n, double d, double tol) {
  std::size_t c = 0;
  for (const auto& p : pts) {
    if (std::abs(n.x * p.x + n.y * p.y + n.z * p.z - d) <= tol) ++c;
  }
  return c;
}

inline std::vector<std::size_t> nearest(const std::vector<Point3>& pts, Point3 q, std::size_t k) {
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dx = pts[i].x - q.x, dy = pts[i].y - q.y, dz = pts[i].z - q.z;
    all.push_back({dx * dx + dy * dy + dz * dz, i});
  }
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < std::min(k, all.size()); ++i) out.push_back(all[i].second);
  return out;
}

}  // namespace oracle
