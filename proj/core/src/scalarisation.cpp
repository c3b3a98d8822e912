#include "polarfront/scalarisation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"

namespace polarfront {

double length_scalarisation(std::span<const double> y, std::span<const double> eta,
                            std::span<const double> lam) {
  const std::size_t dim = y.size();
  if (eta.size() != dim || lam.size() != dim) {
    throw InvalidArgument("length scalarisation: dimension mismatch");
  }
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < dim; ++m) {
    if (!std::isfinite(y[m]) || !std::isfinite(eta[m]) || !std::isfinite(lam[m])) {
      throw InvalidArgument("length scalarisation: non-finite input");
    }
    if (!(lam[m] > 0.0)) throw InvalidArgument("length scalarisation: direction must be positive");
    s = std::min(s, std::max(y[m] - eta[m], 0.0) / lam[m]);
  }
  return s;
}

double length_scalarisation(const ObjectiveVector& y, const ReferenceVector& eta,
                            const Direction& lam) {
  return length_scalarisation(y.values(), eta.values(), lam.components());
}

bool strongly_dominates_reference(std::span<const double> y, std::span<const double> eta) noexcept {
  if (y.size() != eta.size()) return false;
  for (std::size_t m = 0; m < y.size(); ++m) {
    if (!(y[m] > eta[m])) return false;
  }
  return true;
}

Direction optimal_direction(const ObjectiveVector& y, const ReferenceVector& eta) {
  if (y.dim() != eta.dim()) throw InvalidArgument("optimal direction: dimension mismatch");
  if (!strongly_dominates_reference(y.values(), eta.values())) {
    throw DomainError("vector does not strongly dominate the reference vector");
  }
  std::vector<double> diff(y.dim());
  for (std::size_t m = 0; m < diff.size(); ++m) diff[m] = y[m] - eta[m];
  return Direction::normalize(diff);
}

PolarCoordinates to_polar(const ObjectiveVector& y, const ReferenceVector& eta) {
  Direction lam = optimal_direction(y, eta);
  std::vector<double> diff(y.dim());
  for (std::size_t m = 0; m < diff.size(); ++m) diff[m] = y[m] - eta[m];
  return {std::move(lam), euclidean_norm(diff)};
}

ObjectiveVector from_polar(const ReferenceVector& eta, const Direction& lam, double length) {
  if (eta.dim() != lam.dim()) throw InvalidArgument("from_polar: dimension mismatch");
  if (!std::isfinite(length) || !(length > 0.0)) {
    throw DomainError("from_polar: length must be positive");
  }
  std::vector<double> y(eta.dim());
  for (std::size_t m = 0; m < y.size(); ++m) y[m] = eta[m] + length * lam[m];
  return ObjectiveVector(std::move(y));
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b, Dominance relation) {
  if (a.dim() != b.dim()) throw InvalidArgument("dominates: dimension mismatch");
  bool all_ge = true;
  bool all_gt = true;
  bool any_gt = false;
  for (std::size_t m = 0; m < a.dim(); ++m) {
    all_ge = all_ge && a[m] >= b[m];
    all_gt = all_gt && a[m] > b[m];
    any_gt = any_gt || a[m] > b[m];
  }
  switch (relation) {
    case Dominance::weak:
      return all_ge;
    case Dominance::strict:
      return all_ge && any_gt;
    case Dominance::strong:
      return all_gt;
  }
  return false;
}

std::string_view to_string(FrontRelation relation) noexcept {
  switch (relation) {
    case FrontRelation::strictly_below:
      return "strictly-below";
    case FrontRelation::dominated_weak:
      return "dominated-weak";
    case FrontRelation::strictly_above:
      return "strictly-above";
  }
  return "dominated-weak";
}

namespace {

FrontRelation classify(double radial, double length) noexcept {
  if (std::abs(radial - length) <= kBoundaryTolerance) return FrontRelation::dominated_weak;
  return radial < length ? FrontRelation::strictly_below : FrontRelation::strictly_above;
}

}  // namespace

DominationQuery front_domination_query(const ObjectiveVector& y, const GridFront& front) {
  const auto [lam, radial] = to_polar(y, front.reference());
  const auto nearest = nearest_direction(*front.grid(), lam.components());
  const double length = front.length(nearest.index);
  return {classify(radial, length), radial, length, nearest.index, nearest.angle};
}

DominationQuery front_domination_query(const ObjectiveVector& y, const PointFront& front) {
  const auto [lam, radial] = to_polar(y, front.reference());
  double length = 0.0;
  for (const auto& p : front.points()) {
    length = std::max(length, length_scalarisation(p.values(), front.reference().values(),
                                                   lam.components()));
  }
  return {classify(radial, length), radial, length, 0, 0.0};
}

bool in_region(const DominationQuery& q, FrontRegion region) noexcept {
  switch (region) {
    case FrontRegion::weakly_dominated:
      return q.radial <= q.front_length + kBoundaryTolerance;
    case FrontRegion::strongly_dominated:
      return q.radial < q.front_length - kBoundaryTolerance;
    case FrontRegion::strongly_dominating:
      return q.radial > q.front_length + kBoundaryTolerance;
    case FrontRegion::weakly_dominating:
      return q.radial >= q.front_length - kBoundaryTolerance;
  }
  return false;
}

ParetoCheck check_pareto_conditions(const GridFront& front, double tol) {
  const std::size_t count = front.size();
  for (std::size_t k = 0; k < count; ++k) {
    if (!(front.length(k) > tol)) return {ParetoCheckStatus::fails_c1, k, k};
  }
  const auto& grid = *front.grid();
  const std::size_t dim = grid.dim();
  for (std::size_t a = 0; a < count; ++a) {
    const auto la = grid.direction(a);
    const double len_a = front.length(a);
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      const auto lb = grid.direction(b);
      const double len_b = front.length(b);
      double ratio = 0.0;
      for (std::size_t m = 0; m < dim; ++m) {
        ratio = std::max(ratio, (len_a * la[m]) / (len_b * lb[m]));
      }
      if (ratio < 1.0 - tol) return {ParetoCheckStatus::fails_c2, a, b};
    }
  }
  return {};
}

}  // namespace polarfront
