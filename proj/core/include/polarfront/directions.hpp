#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "polarfront/geometry.hpp"

namespace polarfront {

/// Components below this are rejected when sampling; the length
/// scalarisation divides by each component.
inline constexpr double kDirectionFloor = 1e-9;

/// K directions uniform on the positive orthant of the unit sphere: absolute
/// values of iid standard normals, normalised. Deterministic in (dim, count, seed).
GridHandle sample_directions(std::size_t dim, std::size_t count, std::uint64_t seed);

/// Angles (k - 1/2) * (pi/2) / K for k = 1..K, i.e. uniform on the quarter circle.
GridHandle equi_angular_grid_2d(std::size_t count);

/// The single direction (1) of the one-dimensional sphere.
GridHandle unit_grid_1d();

struct NearestDirection {
  std::size_t index;
  double angle;  ///< radians between the query and the chosen grid direction
};

/// Grid direction with the smallest angular distance to `lam`.
NearestDirection nearest_direction(const DirectionGrid& grid, std::span<const double> lam);

}  // namespace polarfront
