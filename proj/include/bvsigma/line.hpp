// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <tuple>
#include <utility>

#include "bvsigma/point.hpp"

namespace bvsigma {

/// A primitive integer direction (gcd of components 1, not both zero).
/// Orientation is kept: (0,1) and (0,-1) are distinct rays from the origin.
struct Direction {
  Integer x;
  Integer y;

  Direction() : x(1), y(0) {}
  Direction(Integer dx, Integer dy) : x(std::move(dx)), y(std::move(dy)) { reduce(); }
  Direction(long dx, long dy) : x(dx), y(dy) { reduce(); }

  bool operator==(const Direction& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Direction& o) const { return !(*this == o); }

  std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }

 private:
  void reduce() {
    if (sgn(x) == 0 && sgn(y) == 0) throw ValidationError("zero direction vector");
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    x /= g;
    y /= g;
  }
};

/// Primitive direction of a nonzero rational vector.
inline Direction direction_of(const Point& v) {
  if (v.is_origin()) throw ValidationError("direction of zero vector");
  // Clear denominators, then reduce.
  Integer dx = v.x.get_num() * v.y.get_den();
  Integer dy = v.y.get_num() * v.x.get_den();
  return Direction(std::move(dx), std::move(dy));
}

/// Dictionary order helper for containers keyed by direction.
inline bool dir_lex_less(const Direction& a, const Direction& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

/// Exact comparison of angles in [0, 2*pi): true when angle(a) < angle(b).
/// No floating trig; half-plane classification plus a cross product.
inline bool angle_less(const Direction& a, const Direction& b) {
  auto half = [](const Direction& d) {
    // 0 for angle in [0, pi), 1 for [pi, 2 pi).
    if (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) return 0;
    return 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Integer cr = a.x * b.y - a.y * b.x;
  return sgn(cr) > 0;
}

inline bool same_angle(const Direction& a, const Direction& b) {
  return !angle_less(a, b) && !angle_less(b, a);
}

/// The line {(x,y) : a x + b y = c} with (a,b) a primitive integer normal,
/// sign-normalized (a > 0, or a = 0 and b > 0) so each geometric line has
/// exactly one representation.
struct Line {
  Integer a;
  Integer b;
  Rational c;

  Line() : a(0), b(1), c(0) {}
  Line(Integer na, Integer nb, Rational off)
      : a(std::move(na)), b(std::move(nb)), c(std::move(off)) {
    normalize();
  }

  /// Line through two distinct points.
  static Line through(const Point& p, const Point& q) {
    Direction d = direction_of(q - p);
    // Normal is the direction rotated by 90 degrees.
    Line line(-d.y, d.x, Rational(0));
    line.c = line.a * p.x + line.b * p.y;
    line.normalize_offset_sign();
    return line;
  }

  /// Line with the given (unnormalized) normal vector through a point.
  static Line with_normal_through(const Integer& na, const Integer& nb, const Point& p) {
    Line line(na, nb, Rational(0));
    line.c = line.a * p.x + line.b * p.y;
    line.normalize_offset_sign();
    return line;
  }

  bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }

  /// Sign of a x + b y - c at a point: 0 on the line.
  int side(const Point& p) const { return sgn(Rational(a * p.x + b * p.y - c)); }

  bool contains(const Point& p) const { return side(p) == 0; }

  std::string str() const {
    return a.get_str() + "x + " + b.get_str() + "y = " + to_fraction_string(c);
  }

 private:
  void normalize() {
    if (sgn(a) == 0 && sgn(b) == 0) throw ValidationError("degenerate line normal");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    c /= Rational(g);
    normalize_offset_sign();
  }

  void normalize_offset_sign() {
    if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) {
      a = -a;
      b = -b;
      c = -c;
    }
  }
};

inline bool line_lex_less(const Line& l, const Line& r) {
  int c0 = cmp(l.a, r.a);
  if (c0 != 0) return c0 < 0;
  c0 = cmp(l.b, r.b);
  if (c0 != 0) return c0 < 0;
  return cmp(l.c, r.c) < 0;
}

}  // namespace bvsigma
