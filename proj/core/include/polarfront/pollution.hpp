#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polarfront/ensemble.hpp"
#include "polarfront/geometry.hpp"

namespace polarfront {

/// Front distribution of one period (typically a year), realised by
/// resampling that period's daily-maximum vectors with replacement.
struct PeriodEnsemble {
  std::string label;
  /// Row b holds the front of resample b. The resampled days are kept as the
  /// objective-table source so component subsets can be re-fronted exactly.
  FrontEnsemble ensemble;
};

/// Indices of B with-replacement resamples of `count` days, row-major
/// (B x count). Depends only on (count, rounds, seed): periods of equal size
/// share their resampling pattern.
std::vector<std::size_t> day_resample_indices(std::size_t count, std::size_t rounds,
                                              std::uint64_t seed);

PeriodEnsemble period_front_ensemble(std::string label, std::span<const ObjectiveVector> days,
                                     const ReferenceVector& eta, const GridHandle& grid,
                                     std::size_t rounds, std::uint64_t seed);

/// Evaluation points eta + radii[r] * lambda_k.
struct PolarLattice {
  GridHandle directions;
  std::vector<double> radii;

  std::size_t size() const noexcept { return directions->size() * radii.size(); }
};

/// radii = fractions * bounding_length; fractions must lie in (0, 1] and
/// increase strictly.
PolarLattice make_polar_lattice(GridHandle directions, std::span<const double> fractions,
                                double bounding_length);

/// Largest Euclidean distance from (eta_i, eta_j) to any resampled day of the
/// given periods, clipped at the reference. No pairwise front can reach
/// further.
double pair_bounding_length(std::span<const PeriodEnsemble> periods, std::size_t i, std::size_t j);

struct DominationMap {
  std::size_t first;   ///< objective index i
  std::size_t second;  ///< objective index j
  ReferenceVector reference;  ///< (eta_i, eta_j)
  PolarLattice lattice;
  /// values[k * radii + r]: probability that eta + radii[r] lambda_k is weakly
  /// dominated by the pairwise front.
  std::vector<double> values;

  double at(std::size_t direction, std::size_t radius) const noexcept {
    return values[direction * lattice.radii.size() + radius];
  }
};

/// Drops every component except i and j from the resampled days, rebuilds
/// the 2-D fronts and evaluates domination probabilities on the lattice.
DominationMap pairwise_domination_map(const PeriodEnsemble& pe, std::size_t i, std::size_t j,
                                      const PolarLattice& lattice);

struct SignedChanges {
  double mean_negative;  ///< mean of min(field, 0) over the lattice
  double mean_positive;  ///< mean of max(field, 0) over the lattice
  double total;          ///< |mean_negative| + mean_positive
  std::vector<double> field;  ///< later - earlier
};

SignedChanges signed_yearly_changes(const DominationMap& earlier, const DominationMap& later);

}  // namespace polarfront
