// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>

#include "bvsigma/errors.hpp"

namespace bvsigma {

using Rational = mpq_class;
using Integer = mpz_class;

/// Three-way sign of a rational.
inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Round-trip a rational to double (GMP rounds to nearest).
inline double to_double(const Rational& q) { return q.get_d(); }

/// Parse a decimal string ("-12", "0.25", "+3.50") into an exact rational
/// with a power-of-ten denominator. No binary-float rounding is involved.
/// Throws ValidationError on malformed input.
inline Rational parse_decimal(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw ValidationError("empty decimal literal: '" + original + "'");

  std::string digits;
  size_t frac_len = 0;
  bool seen_dot = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_dot) throw ValidationError("two decimal points in '" + original + "'");
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ValidationError("invalid character in decimal literal '" + original + "'");
    digits.push_back(ch);
    if (seen_dot) ++frac_len;
  }
  if (digits.empty()) throw ValidationError("no digits in decimal literal '" + original + "'");

  Integer numerator(digits, 10);
  Integer denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac_len);
  Rational value(numerator, denominator);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

/// Exact "num/den" rendering (den omitted when 1).
inline std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// sqrt of a nonnegative rational, as a double.
inline double sqrt_to_double(const Rational& q) {
  return std::sqrt(to_double(q));
}

}  // namespace bvsigma
