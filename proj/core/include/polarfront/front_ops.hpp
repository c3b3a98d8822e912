#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "polarfront/geometry.hpp"

namespace polarfront {

/// Scoring rule S(estimate, observed) >= 0 compared along each direction.
class ScoringSpec {
 public:
  enum class Kind { squared, pinball, hv_absolute };

  static ScoringSpec squared() { return ScoringSpec(Kind::squared, 0.0); }
  /// (1[observed <= estimate] - alpha) * (estimate - observed); minimised by the alpha-quantile.
  static ScoringSpec pinball(double alpha);
  /// |c_M x^M - c_M y^M|; the dimension comes from the fronts being compared.
  static ScoringSpec hv_absolute() { return ScoringSpec(Kind::hv_absolute, 0.0); }

  /// Parses "squared", "pinball:<alpha>" or "hv-absolute".
  static ScoringSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  std::string name() const;

  double score(double estimate, double observed, std::size_t dim) const;

 private:
  ScoringSpec(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  Kind kind_;
  double alpha_;
};

/// Strictly increasing map applied to scalarised lengths before averaging.
class TransformSpec {
 public:
  enum class Kind { identity, hypervolume_power, user_monotone };

  static TransformSpec identity();
  /// c_M x^M, evaluated in log space for M >= 8.
  static TransformSpec hypervolume(std::size_t dim);
  /// Caller-provided transform; the caller guarantees strict monotonicity on [0, inf).
  static TransformSpec user_monotone(std::string tag, std::function<double(double)> fn);

  Kind kind() const noexcept { return kind_; }
  const std::string& tag() const noexcept { return tag_; }
  double operator()(double x) const;

 private:
  TransformSpec(Kind kind, std::size_t dim, std::string tag, std::function<double(double)> fn);
  Kind kind_;
  std::size_t dim_;
  double log_constant_;
  std::string tag_;
  std::function<double(double)> fn_;
};

/// lengths[k] = max over points of the length scalarisation along direction k.
/// O(K |A| M). Points that do not strongly dominate eta contribute zero, so a
/// set with no such point yields the degenerate front.
GridFront front_from_points(const PointFront& points, const GridHandle& grid);

/// Exact projected length of a point set along an arbitrary direction.
double point_front_length(const PointFront& points, std::span<const double> lam);

GridFront union_fronts(const GridFront& a, const GridFront& b);
GridFront add_fronts(const GridFront& a, const GridFront& b);
GridFront scale_front(const GridFront& a, double factor);

/// Mean over the grid of transform(max over points of s). With a Monte-Carlo
/// grid this is an unbiased estimate of the direction-averaged utility.
double r2_utility(const PointFront& points, const GridHandle& grid, const TransformSpec& transform);

/// Same average for a front that is already a length field.
double r2_utility(const GridFront& front, const TransformSpec& transform);

/// Mean over the grid of S(l_a, l_b).
double frontier_loss(const GridFront& a, const GridFront& b, const ScoringSpec& scoring);

/// Volume of the symmetric difference of the truncated domination regions,
/// evaluated on the shared grid as 2 U[a v b] - U[a] - U[b].
double hypervolume_distance(const GridFront& a, const GridFront& b);

}  // namespace polarfront
