// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "bvsigma/point.hpp"

namespace bvsigma {

/// A finite compact subset of the plane: sorted, duplicate-free exact points.
class SigmaSet {
 public:
  SigmaSet() = default;

  explicit SigmaSet(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(), lex_less);
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::optional<size_t> index_of(const Point& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p, lex_less);
    if (it != points_.end() && *it == p) return static_cast<size_t>(it - points_.begin());
    return std::nullopt;
  }

  bool contains(const Point& p) const { return index_of(p).has_value(); }
  bool contains_origin() const { return contains(Point(Rational(0), Rational(0))); }

  bool operator==(const SigmaSet& o) const { return points_ == o.points_; }

 private:
  std::vector<Point> points_;
};

}  // namespace bvsigma
