// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace bvsigma {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad schema, violated structural hypothesis, point
/// outside a function domain, non-collinear input to a 1-D routine.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// A computation would exceed a configured budget (search-node limit,
/// arrangement size). Never a silent truncation.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

/// Precision escalation reached its cap before the rationalized data
/// passed its structural assertions. The message names the assertion.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error(what) {}
};

}  // namespace bvsigma
