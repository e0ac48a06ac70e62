// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>

#include "bvsigma/rational.hpp"

namespace bvsigma {

/// A point of the plane with exact rational coordinates. Equality is exact.
struct Point {
  Rational x;
  Rational y;

  Point() : x(0), y(0) {}
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }

  bool is_origin() const { return sgn(x) == 0 && sgn(y) == 0; }

  Point operator-(const Point& o) const { return Point(x - o.x, y - o.y); }
  Point operator+(const Point& o) const { return Point(x + o.x, y + o.y); }

  /// Squared Euclidean modulus, exact.
  Rational modulus_sq() const { return x * x + y * y; }

  std::string str() const {
    return "(" + to_fraction_string(x) + ", " + to_fraction_string(y) + ")";
  }
};

/// Lexicographic (x, then y) order; the canonical order for point sets.
inline bool lex_less(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  if (c != 0) return c < 0;
  return cmp(a.y, b.y) < 0;
}

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// A complex number with exact rational real and imaginary parts.
/// Function values, spectra and multiplier coefficients all live here, so
/// pointwise identities can be checked without tolerances.
struct RatComplex {
  Rational re;
  Rational im;

  RatComplex() : re(0), im(0) {}
  RatComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  RatComplex(long r, long i) : re(r), im(i) {}

  bool operator==(const RatComplex& o) const { return re == o.re && im == o.im; }
  bool operator!=(const RatComplex& o) const { return !(*this == o); }

  RatComplex operator+(const RatComplex& o) const { return {re + o.re, im + o.im}; }
  RatComplex operator-(const RatComplex& o) const { return {re - o.re, im - o.im}; }
  RatComplex operator*(const RatComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  RatComplex operator-() const { return {-re, -im}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  Rational modulus_sq() const { return re * re + im * im; }
  double modulus() const { return sqrt_to_double(modulus_sq()); }

  std::string str() const {
    return to_fraction_string(re) + (sgn(im) < 0 ? "" : "+") + to_fraction_string(im) + "i";
  }
};

/// The point z viewed as the complex number x + iy.
inline RatComplex as_complex(const Point& p) { return RatComplex(p.x, p.y); }

}  // namespace bvsigma
