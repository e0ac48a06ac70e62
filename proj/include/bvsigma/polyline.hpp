// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bvsigma/line.hpp"
#include "bvsigma/sigma.hpp"

namespace bvsigma {

/// A piecewise linear path given by its vertices, in traversal order.
/// Adjacent duplicate vertices are collapsed on construction, so an
/// all-equal vertex list degenerates to a single point.
class Polyline {
 public:
  explicit Polyline(std::vector<Point> vertices) {
    if (vertices.empty()) throw ValidationError("polyline needs at least one vertex");
    for (auto& v : vertices) {
      if (vertices_.empty() || !(vertices_.back() == v)) vertices_.push_back(std::move(v));
    }
  }

  size_t size() const { return vertices_.size(); }
  size_t segments() const { return vertices_.size() - 1; }
  const Point& operator[](size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }

 private:
  std::vector<Point> vertices_;
};

/// Number of connected components of {t in [0,1] : gamma(t) on the line},
/// for the arc-length-ordered parametrization of the polyline. 0 iff the
/// line misses the curve. Only vertex sides matter: an interior crossing
/// happens exactly between two vertices of strictly opposite sign.
inline int entry_components(const Polyline& poly, const Line& line) {
  int components = 0;
  int prev = line.side(poly[0]);
  if (prev == 0) components = 1;
  for (size_t i = 1; i < poly.size(); ++i) {
    int s = line.side(poly[i]);
    if (s == 0) {
      if (prev != 0) ++components;
    } else if (prev != 0 && s != prev) {
      ++components;
    }
    prev = s;
  }
  return components;
}

namespace detail {

/// Canonical representative of a line direction (mod pi): upper half-plane,
/// with (1,0) for horizontal.
inline Direction line_direction(const Direction& d) {
  if (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) return d;
  return Direction(-d.x, -d.y);
}

/// Angular order on upper-half-plane directions (angles in [0, pi)).
inline bool halfplane_angle_less(const Direction& a, const Direction& b) {
  Integer cr = a.x * b.y - a.y * b.x;
  return sgn(cr) > 0;
}

/// All critical line directions of a point set: pair directions plus a
/// strictly-between direction for each angular gap (and the wrap-around
/// gap). The in-between directions are exact integer sums of adjacent
/// unit-free representatives, never floating trig. Every realizable
/// side-sign pattern of the points is realized by some candidate
/// direction together with a candidate offset.
inline std::vector<Direction> critical_directions(const std::vector<Point>& pts) {
  std::vector<Direction> dirs;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (!(pts[i] == pts[j])) dirs.push_back(line_direction(direction_of(pts[j] - pts[i])));
  if (dirs.empty()) {
    dirs.emplace_back(1, 0);
    dirs.emplace_back(0, 1);
    return dirs;
  }
  std::sort(dirs.begin(), dirs.end(), halfplane_angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  std::vector<Direction> result = dirs;
  if (dirs.size() == 1) {
    result.push_back(line_direction(Direction(-dirs[0].y, dirs[0].x)));
    return result;
  }
  for (size_t i = 0; i + 1 < dirs.size(); ++i) {
    // Both in [0, pi) with gap < pi, so the sum lies strictly between.
    result.push_back(Direction(dirs[i].x + dirs[i + 1].x, dirs[i].y + dirs[i + 1].y));
  }
  // Wrap-around gap between the last direction and the first one plus pi.
  result.push_back(
      line_direction(Direction(dirs.back().x - dirs.front().x, dirs.back().y - dirs.front().y)));
  return result;
}

struct DirectionSlab {
  Direction dir;        // line direction
  Integer na, nb;       // normal (unreduced is fine for sign tests)
  std::vector<Rational> offsets;  // candidate offsets (projections + midpoints)
};

/// Candidate (direction, offset) grid of a point set. The side-sign
/// pattern of the points is constant on each cell of the induced dual
/// arrangement, and every cell has a representative in this grid.
inline std::vector<DirectionSlab> candidate_slabs(const std::vector<Point>& pts) {
  std::vector<DirectionSlab> slabs;
  for (const Direction& d : critical_directions(pts)) {
    DirectionSlab slab;
    slab.dir = d;
    slab.na = -d.y;
    slab.nb = d.x;
    std::vector<Rational> proj;
    proj.reserve(pts.size());
    for (const Point& p : pts) proj.emplace_back(slab.na * p.x + slab.nb * p.y);
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    std::vector<Rational> offsets;
    for (size_t i = 0; i < proj.size(); ++i) {
      offsets.push_back(proj[i]);
      if (i + 1 < proj.size()) offsets.push_back((proj[i] + proj[i + 1]) / 2);
    }
    slab.offsets = std::move(offsets);
    slabs.push_back(std::move(slab));
  }
  return slabs;
}

}  // namespace detail

/// Result of the exact variation-factor search: the maximal number of
/// entry components over all lines meeting the curve, with a witness.
struct VfResult {
  int vf = 1;
  Rational rho = 1;
  Line witness_line;
};

/// vf(gamma): maximum over lines of entry_components, by exact enumeration
/// of the critical (direction, offset) grid. A single-point polyline has
/// vf = 1 by convention, witnessed by the horizontal line through it.
inline VfResult variation_factor(const Polyline& poly) {
  VfResult result;
  if (poly.size() == 1) {
    result.vf = 1;
    result.rho = 1;
    result.witness_line = Line(Integer(0), Integer(1), poly[0].y);
    return result;
  }
  const auto& pts = poly.vertices();
  int best = 0;
  Line best_line;
  for (const auto& slab : detail::candidate_slabs(pts)) {
    std::vector<Rational> proj;
    proj.reserve(pts.size());
    for (const Point& p : pts) proj.emplace_back(slab.na * p.x + slab.nb * p.y);
    for (const Rational& c : slab.offsets) {
      int components = 0;
      int prev = cmp(proj[0], c);
      if (prev == 0) components = 1;
      for (size_t i = 1; i < proj.size(); ++i) {
        int s = cmp(proj[i], c);
        if (s == 0) {
          if (prev != 0) ++components;
        } else if (prev != 0 && s != prev) {
          ++components;
        }
        prev = s;
      }
      if (components > best) {
        best = components;
        best_line = Line(slab.na, slab.nb, c);
      }
    }
  }
  result.vf = best;
  result.rho = Rational(1) / best;
  result.witness_line = best_line;
  return result;
}

/// The sigma-points met by the curve, in traversal order: for each segment
/// all points of sigma on it sorted by parameter, concatenated, adjacent
/// duplicates collapsed. A point revisited non-consecutively is listed
/// once per visit.
inline std::vector<Point> sigma_hits(const Polyline& poly, const SigmaSet& sigma) {
  std::vector<Point> hits;
  auto push = [&hits](const Point& p) {
    if (hits.empty() || !(hits.back() == p)) hits.push_back(p);
  };
  if (poly.size() == 1) {
    if (sigma.contains(poly[0])) push(poly[0]);
    return hits;
  }
  for (size_t s = 0; s + 1 < poly.size(); ++s) {
    const Point& a = poly[s];
    const Point& b = poly[s + 1];
    const Point ab = b - a;
    const Rational len_sq = dot(ab, ab);
    std::vector<std::pair<Rational, const Point*>> on_segment;
    for (const Point& p : sigma) {
      const Point ap = p - a;
      if (sgn(cross(ab, ap)) != 0) continue;
      Rational t = dot(ap, ab) / len_sq;
      if (sgn(t) < 0 || t > 1) continue;
      on_segment.emplace_back(std::move(t), &p);
    }
    std::sort(on_segment.begin(), on_segment.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [t, p] : on_segment) push(*p);
  }
  return hits;
}

}  // namespace bvsigma
