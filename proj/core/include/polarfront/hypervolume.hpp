#pragma once

#include <cstddef>

#include "polarfront/geometry.hpp"

namespace polarfront {

/// Volume of the M-ball of unit diameter: pi^{M/2} 2^{-M} / Gamma(M/2 + 1).
double hv_constant(std::size_t dim);

/// Polar Monte-Carlo hypervolume: grid mean of c_M * (max_a s)^M.
double hypervolume_mc(const PointFront& points, const GridHandle& grid);

/// Same estimator applied to a length field.
double grid_hypervolume(const GridFront& front);

/// Largest point count accepted by the inclusion-exclusion routine.
inline constexpr std::size_t kInclusionExclusionMaxPoints = 12;

/// Exact hypervolume of the region between eta and the points. Two objectives
/// use a sorted sweep over the non-dominated points; three or more use
/// inclusion-exclusion and throw Unsupported above 12 contributing points.
double hypervolume_exact_small(const PointFront& points);

/// Inclusion-exclusion over all non-empty subsets of contributing points, any
/// dimension. Throws Unsupported above 12 contributing points.
double hypervolume_inclusion_exclusion(const PointFront& points);

}  // namespace polarfront
