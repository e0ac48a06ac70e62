// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bvsigma/bv_norm.hpp"

namespace bvsigma {

/// Every finite sigma is a spoke set: each nonzero point lies on exactly
/// one ray from the origin, identified by its primitive direction. Rays
/// are ordered by angle; points on a ray by increasing radius.
struct SpokeSet {
  std::vector<Direction> rays;
  std::vector<std::vector<Point>> per_ray_points;
  bool origin_present = false;
  int N = 0;
};

inline SpokeSet detect_spokes(const SigmaSet& sigma) {
  if (sigma.empty()) throw ValidationError("detect_spokes on an empty sigma");
  SpokeSet spokes;
  std::vector<std::pair<Direction, std::vector<Point>>> groups;
  for (const Point& p : sigma) {
    if (p.is_origin()) {
      spokes.origin_present = true;
      continue;
    }
    Direction d = direction_of(p);
    bool found = false;
    for (auto& [dir, pts] : groups) {
      if (dir == d) {
        pts.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) groups.push_back({d, {p}});
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& l, const auto& r) { return angle_less(l.first, r.first); });
  for (auto& [dir, pts] : groups) {
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a.modulus_sq() < b.modulus_sq(); });
    spokes.rays.push_back(dir);
    spokes.per_ray_points.push_back(std::move(pts));
  }
  spokes.N = static_cast<int>(spokes.rays.size());
  return spokes;
}

/// f = f0 + sum of f_n, with f0 the constant f(0) and f_n supported on the
/// n-th ray, f_n(z) = f(z) - f(0) there. When the origin is not in sigma,
/// f(0) is taken to be 0, which keeps the reassembly identity exact.
struct SpokeDecomposition {
  RatComplex f0;
  std::vector<FiniteFunction> components;
};

inline SpokeDecomposition decompose(const FiniteFunction& f, const SpokeSet& spokes) {
  SpokeDecomposition dec;
  dec.f0 = f.value_at_origin_or_zero();
  const SigmaSet& sigma = f.domain();
  for (const auto& ray_pts : spokes.per_ray_points) {
    std::vector<RatComplex> vals(sigma.size(), RatComplex(0, 0));
    for (const Point& p : ray_pts) {
      auto idx = sigma.index_of(p);
      if (!idx) throw ValidationError("spoke point " + p.str() + " not in the function domain");
      vals[*idx] = f.value_at_index(*idx) - dec.f0;
    }
    dec.components.emplace_back(f.domain_ptr(), std::move(vals));
  }
  return dec;
}

inline FiniteFunction reassemble(const SpokeDecomposition& dec, const FiniteFunction& like) {
  FiniteFunction sum = FiniteFunction::constant(like.domain_ptr(), dec.f0);
  for (const auto& fn : dec.components) sum = sum + fn;
  return sum;
}

/// The sigma points of one ray, together with the origin when present.
inline SigmaSet ray_slice(const SpokeSet& spokes, size_t ray_index, const SigmaSet& sigma) {
  std::vector<Point> pts = spokes.per_ray_points.at(ray_index);
  if (spokes.origin_present && sigma.contains_origin()) pts.push_back(Point(Rational(0), Rational(0)));
  return SigmaSet(pts);
}

/// ||f||_Sp = |f(0)| + sum of the 1-D BV norms of the ray components
/// restricted to their rays. Exactly computable: each term is a sup plus
/// a sorted variation along a line.
inline double spoke_norm(const FiniteFunction& f, const SpokeSet& spokes) {
  SpokeDecomposition dec = decompose(f, spokes);
  double total = dec.f0.modulus();
  for (size_t n = 0; n < spokes.per_ray_points.size(); ++n) {
    SigmaSet slice = ray_slice(spokes, n, f.domain());
    FiniteFunction restricted = dec.components[n].restrict_to(slice);
    total += one_d_bv_norm(restricted);
  }
  return total;
}

}  // namespace bvsigma
