// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "bvsigma/sigma.hpp"

namespace bvsigma {

/// A complex-valued function on a finite sigma, stored as exact rational
/// values aligned with the domain's canonical point order. Pointwise
/// algebra is exact; only magnitudes are ever taken in floating form.
class FiniteFunction {
 public:
  FiniteFunction(std::shared_ptr<const SigmaSet> domain, std::vector<RatComplex> values)
      : domain_(std::move(domain)), values_(std::move(values)) {
    if (!domain_ || values_.size() != domain_->size())
      throw ValidationError("function values must cover the domain exactly");
  }

  FiniteFunction(const SigmaSet& domain, std::vector<RatComplex> values)
      : FiniteFunction(std::make_shared<SigmaSet>(domain), std::move(values)) {}

  static FiniteFunction constant(std::shared_ptr<const SigmaSet> domain, RatComplex c) {
    std::vector<RatComplex> vals(domain->size(), c);
    return FiniteFunction(std::move(domain), std::move(vals));
  }

  /// chi_A for A a subset of the domain.
  static FiniteFunction indicator(std::shared_ptr<const SigmaSet> domain,
                                  const std::vector<Point>& subset) {
    std::vector<RatComplex> vals(domain->size(), RatComplex(0, 0));
    for (const Point& p : subset) {
      auto idx = domain->index_of(p);
      if (!idx) throw ValidationError("indicator point " + p.str() + " not in domain");
      vals[*idx] = RatComplex(1, 0);
    }
    return FiniteFunction(std::move(domain), std::move(vals));
  }

  /// The coordinate function x(z) = Re z.
  static FiniteFunction coordinate_x(std::shared_ptr<const SigmaSet> domain) {
    std::vector<RatComplex> vals;
    vals.reserve(domain->size());
    for (const Point& p : *domain) vals.emplace_back(p.x, Rational(0));
    return FiniteFunction(std::move(domain), std::move(vals));
  }

  /// The coordinate function y(z) = Im z.
  static FiniteFunction coordinate_y(std::shared_ptr<const SigmaSet> domain) {
    std::vector<RatComplex> vals;
    vals.reserve(domain->size());
    for (const Point& p : *domain) vals.emplace_back(p.y, Rational(0));
    return FiniteFunction(std::move(domain), std::move(vals));
  }

  /// The identity function lambda(z) = z = x + iy.
  static FiniteFunction identity(std::shared_ptr<const SigmaSet> domain) {
    std::vector<RatComplex> vals;
    vals.reserve(domain->size());
    for (const Point& p : *domain) vals.emplace_back(p.x, p.y);
    return FiniteFunction(std::move(domain), std::move(vals));
  }

  const SigmaSet& domain() const { return *domain_; }
  std::shared_ptr<const SigmaSet> domain_ptr() const { return domain_; }
  const std::vector<RatComplex>& values() const { return values_; }

  const RatComplex& value_at_index(size_t i) const { return values_[i]; }

  const RatComplex& value_at(const Point& p) const {
    auto idx = domain_->index_of(p);
    if (!idx) throw ValidationError("point " + p.str() + " outside the function domain");
    return values_[*idx];
  }

  /// Value at the origin, or 0 when the origin is not in sigma (the
  /// convention used by the spoke decomposition).
  RatComplex value_at_origin_or_zero() const {
    auto idx = domain_->index_of(Point(Rational(0), Rational(0)));
    return idx ? values_[*idx] : RatComplex(0, 0);
  }

  /// Exact max of |f|^2 over the domain; empty domain gives 0.
  Rational sup_sq() const {
    Rational best(0);
    for (const auto& v : values_) {
      Rational m = v.modulus_sq();
      if (m > best) best = m;
    }
    return best;
  }

  double sup_norm() const { return sqrt_to_double(sup_sq()); }

  bool operator==(const FiniteFunction& o) const {
    return *domain_ == *o.domain_ && values_ == o.values_;
  }

  FiniteFunction operator+(const FiniteFunction& o) const { return zip(o, std::plus<>()); }
  FiniteFunction operator-(const FiniteFunction& o) const { return zip(o, std::minus<>()); }
  FiniteFunction operator*(const FiniteFunction& o) const { return zip(o, std::multiplies<>()); }

  FiniteFunction scaled(const RatComplex& c) const {
    std::vector<RatComplex> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(c * v);
    return FiniteFunction(domain_, std::move(vals));
  }

  /// Restriction to a subset of the domain (every point must belong).
  FiniteFunction restrict_to(const SigmaSet& sub) const {
    std::vector<RatComplex> vals;
    vals.reserve(sub.size());
    for (const Point& p : sub) vals.push_back(value_at(p));
    return FiniteFunction(sub, std::move(vals));
  }

  std::vector<Point> support() const {
    std::vector<Point> pts;
    for (size_t i = 0; i < values_.size(); ++i)
      if (!values_[i].is_zero()) pts.push_back((*domain_)[i]);
    return pts;
  }

 private:
  template <class Op>
  FiniteFunction zip(const FiniteFunction& o, Op op) const {
    if (!(*domain_ == *o.domain_))
      throw ValidationError("pointwise algebra requires identical domains");
    std::vector<RatComplex> vals;
    vals.reserve(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) vals.push_back(op(values_[i], o.values_[i]));
    return FiniteFunction(domain_, std::move(vals));
  }

  std::shared_ptr<const SigmaSet> domain_;
  std::vector<RatComplex> values_;
};

}  // namespace bvsigma
