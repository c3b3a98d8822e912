#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "polarfront/geometry.hpp"

namespace polarfront {

/// Absolute tolerance used when comparing a radial distance to a projected
/// length. Ties count as weakly dominated.
inline constexpr double kBoundaryTolerance = 1e-9;

/// min_m max(y_m - eta_m, 0) / lam_m: how far the ray eta + t*lam travels
/// before leaving the box spanned by eta and y. Zero unless y strongly
/// dominates eta. Components of `lam` must be strictly positive.
double length_scalarisation(std::span<const double> y, std::span<const double> eta,
                            std::span<const double> lam);

double length_scalarisation(const ObjectiveVector& y, const ReferenceVector& eta,
                            const Direction& lam);

/// True when every component of y exceeds the matching component of eta.
bool strongly_dominates_reference(std::span<const double> y, std::span<const double> eta) noexcept;

/// (y - eta) / ||y - eta||, the direction maximising the length scalarisation of y.
/// Throws DomainError unless y strongly dominates eta.
Direction optimal_direction(const ObjectiveVector& y, const ReferenceVector& eta);

struct PolarCoordinates {
  Direction direction;
  double length;
};

PolarCoordinates to_polar(const ObjectiveVector& y, const ReferenceVector& eta);
ObjectiveVector from_polar(const ReferenceVector& eta, const Direction& lam, double length);

enum class Dominance { weak, strict, strong };

/// Pareto dominance of a over b under maximisation.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b, Dominance relation);

/// Where a vector sits relative to a front along its own optimal direction.
enum class FrontRelation {
  strictly_below,  ///< strongly dominated by the front
  dominated_weak,  ///< on the front, within kBoundaryTolerance
  strictly_above,  ///< strongly dominates part of the front
};

std::string_view to_string(FrontRelation relation) noexcept;

/// The four domination regions a vector can be tested against.
enum class FrontRegion {
  weakly_dominated,      ///< radial <= length
  strongly_dominated,    ///< radial <  length
  strongly_dominating,   ///< radial >  length
  weakly_dominating,     ///< radial >= length
};

struct DominationQuery {
  FrontRelation relation;
  double radial;        ///< ||y - eta||
  double front_length;  ///< front length along the optimal direction of y
  std::size_t grid_index;  ///< grid direction used for the lookup (GridFront only)
  double angular_error;    ///< radians between optimal direction and grid direction
};

/// Classifies y against a grid front. The front length along the optimal
/// direction of y comes from the nearest grid direction, so the answer is
/// exact only when that direction belongs to the grid.
DominationQuery front_domination_query(const ObjectiveVector& y, const GridFront& front);

/// Exact classification against a finite point set.
DominationQuery front_domination_query(const ObjectiveVector& y, const PointFront& front);

bool in_region(const DominationQuery& query, FrontRegion region) noexcept;

enum class ParetoCheckStatus { valid, fails_c1, fails_c2 };

struct ParetoCheck {
  ParetoCheckStatus status = ParetoCheckStatus::valid;
  std::size_t first = 0;   ///< offending index (C1) or first index of the pair (C2)
  std::size_t second = 0;  ///< second index of the pair (C2)

  bool valid() const noexcept { return status == ParetoCheckStatus::valid; }
};

/// Positive-lengths (C1) and maximum-ratio (C2) conditions on the grid.
/// C1 requires every length > tol; C2 requires, for every ordered pair (a, b),
/// max_m (l_a lam_a[m]) / (l_b lam_b[m]) >= 1 - tol. O(K^2 M).
ParetoCheck check_pareto_conditions(const GridFront& front, double tol);

}  // namespace polarfront
