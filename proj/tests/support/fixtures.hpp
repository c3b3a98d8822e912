#pragma once

// Builders for common test inputs on top of the library types.

#include <random>
#include <vector>

#include "oracles.hpp"
#include "polarfront/directions.hpp"
#include "polarfront/ensemble.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/geometry.hpp"

namespace fixture {

using namespace polarfront;

inline std::vector<ObjectiveVector> to_objectives(const std::vector<oracle::Vec>& pts) {
  std::vector<ObjectiveVector> out;
  for (const auto& p : pts) out.emplace_back(p);
  return out;
}

inline ReferenceVector zero_reference(std::size_t dim) {
  return ReferenceVector(std::vector<double>(dim, 0.0));
}

/// Random point set in (0.1, 1]^dim; every point strongly dominates eta = 0,
/// so the resulting front is valid.
inline PointFront random_point_front(std::mt19937_64& rng, std::size_t dim, std::size_t count) {
  return PointFront(zero_reference(dim), to_objectives(oracle::uniform_points(rng, dim, count, 0.1, 1.0)));
}

inline GridHandle grid_for(std::size_t dim, std::size_t k, std::uint64_t seed) {
  return dim == 2 ? equi_angular_grid_2d(k) : sample_directions(dim, k, seed);
}

/// N rows, each the front of a random point set, on one shared grid.
inline FrontEnsemble random_valid_ensemble(std::mt19937_64& rng, std::size_t dim, std::size_t rows,
                                           const GridHandle& grid) {
  std::uniform_int_distribution<std::size_t> count(1, 8);
  std::vector<GridFront> fronts;
  for (std::size_t n = 0; n < rows; ++n) {
    fronts.push_back(front_from_points(random_point_front(rng, dim, count(rng)), grid));
  }
  return FrontEnsemble::from_fronts(fronts);
}

/// Every row is the unit sphere (all lengths 1) around eta = 0; with an
/// objective-table source the rows are dense samples of the sphere instead.
inline FrontEnsemble sphere_ensemble(std::size_t dim, std::size_t rows, const GridHandle& grid) {
  std::vector<double> flat(rows * grid->size(), 1.0);
  return FrontEnsemble(zero_reference(dim), grid, rows, std::move(flat));
}

inline GridFront constant_front(const GridHandle& grid, double length) {
  return GridFront(zero_reference(grid->dim()), grid, std::vector<double>(grid->size(), length));
}

}  // namespace fixture
