#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polarfront/ensemble.hpp"
#include "polarfront/geometry.hpp"

namespace polarfront {

/// Slice of the direction sphere: components in `kept` vary along a
/// lower-dimensional direction, the remaining components are pinned to
/// `fixed`. Indices are 0-based.
class SliceSpec {
 public:
  /// kept must be non-empty and strictly increasing within [0, dim); fixed
  /// must hold dim - |kept| positive values with Euclidean norm < 1.
  SliceSpec(std::size_t dim, std::vector<std::size_t> kept, std::vector<double> fixed);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t slice_dim() const noexcept { return kept_.size(); }
  const std::vector<std::size_t>& kept() const noexcept { return kept_; }
  const std::vector<std::size_t>& complement() const noexcept { return complement_; }
  const std::vector<double>& fixed() const noexcept { return fixed_; }
  /// sqrt(1 - ||fixed||^2)
  double scale() const noexcept { return scale_; }

 private:
  std::size_t dim_;
  std::vector<std::size_t> kept_;
  std::vector<std::size_t> complement_;
  std::vector<double> fixed_;
  double scale_;
};

/// Unit vector whose kept components equal scale() * lam and whose complement
/// components equal the fixed vector.
Direction reconstruct_direction(const SliceSpec& spec, std::span<const double> lam);

struct ProjectedFront {
  GridFront front;          ///< slice_dim()-dimensional, reference = kept part of eta
  bool exact;               ///< false when lengths came from nearest-grid lookup
  double max_angular_error; ///< radians, worst lookup over the sub-grid
};

/// Projected lengths l[phi(v, lam)] * scale() over a sub-grid of the slice
/// sphere. Grid fronts are looked up at the nearest grid direction.
ProjectedFront project_front(const GridFront& front, const SliceSpec& spec,
                             const GridHandle& sub_grid);
/// Exact: point sets are rescalarised along every reconstructed direction.
ProjectedFront project_front(const PointFront& front, const SliceSpec& spec,
                             const GridHandle& sub_grid);

/// Complement coordinates eta_J + l[phi(v, lam)] * v of the sliced points, one
/// vector per sub-grid direction.
std::vector<std::vector<double>> fixed_component_trace(const GridFront& front, const SliceSpec& spec,
                                                       const GridHandle& sub_grid);
std::vector<std::vector<double>> fixed_component_trace(const PointFront& front,
                                                       const SliceSpec& spec,
                                                       const GridHandle& sub_grid);

struct SliceQuantile {
  double alpha;
  GridFront front;
};

struct SliceStatistics {
  GridFront mean;
  std::vector<SliceQuantile> quantiles;
  /// Complement coordinates of the mean slice, one vector per sub-grid direction.
  std::vector<std::vector<double>> mean_trace;
  bool exact;
  double max_angular_error;
};

/// Projects every ensemble row onto the slice and summarises per direction
/// (sample mean and lower empirical quantiles). Exact when the ensemble
/// carries its objective table.
SliceStatistics slice_statistics(const FrontEnsemble& e, const SliceSpec& spec,
                                 const GridHandle& sub_grid, std::span<const double> alphas);

}  // namespace polarfront
