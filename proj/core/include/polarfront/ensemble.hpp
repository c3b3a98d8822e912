#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polarfront/geometry.hpp"

namespace polarfront {

/// Objective samples f(x, omega_n) over a finite input set: N samples, each
/// holding one M-vector per input.
class ObjectiveTable {
 public:
  ObjectiveTable(std::vector<std::string> inputs, std::size_t samples, std::size_t dim,
                 std::vector<double> values);

  std::size_t samples() const noexcept { return samples_; }
  std::size_t inputs() const noexcept { return ids_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& input_ids() const noexcept { return ids_; }

  /// f(x, omega_n)
  std::span<const double> value(std::size_t sample, std::size_t input) const noexcept {
    return {values_.data() + (sample * ids_.size() + input) * dim_, dim_};
  }
  std::span<const double> raw() const noexcept { return values_; }

  /// Keeps only the listed objective components, in the given order.
  ObjectiveTable select_components(std::span<const std::size_t> components) const;

 private:
  std::vector<std::string> ids_;
  std::size_t samples_;
  std::size_t dim_;
  std::vector<double> values_;
};

using TableHandle = std::shared_ptr<const ObjectiveTable>;

/// Lengths of N sampled fronts over a shared grid (row n = sample n). When
/// built from an objective table the table is kept so lengths along
/// off-grid directions can be evaluated exactly.
class FrontEnsemble {
 public:
  FrontEnsemble(ReferenceVector reference, GridHandle grid, std::size_t rows,
                std::vector<double> lengths, TableHandle source = nullptr);

  static FrontEnsemble from_fronts(std::span<const GridFront> fronts);

  const ReferenceVector& reference() const noexcept { return reference_; }
  const GridHandle& grid() const noexcept { return grid_; }
  std::size_t dim() const noexcept { return reference_.dim(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t columns() const noexcept { return grid_->size(); }
  const TableHandle& source() const noexcept { return source_; }
  bool has_source() const noexcept { return source_ != nullptr; }

  double length(std::size_t row, std::size_t column) const noexcept {
    return lengths_[row * columns() + column];
  }
  std::span<const double> row(std::size_t n) const noexcept {
    return {lengths_.data() + n * columns(), columns()};
  }
  std::vector<double> column(std::size_t k) const;
  std::span<const double> raw() const noexcept { return lengths_; }

  GridFront row_front(std::size_t n) const;
  std::vector<GridFront> fronts() const;

  /// Per-row lengths along an arbitrary direction.
  struct DirectionalLengths {
    std::vector<double> lengths;
    bool exact;            ///< evaluated from the objective table
    double angular_error;  ///< radians to the grid direction used otherwise
  };
  DirectionalLengths lengths_along(std::span<const double> lam) const;

 private:
  ReferenceVector reference_;
  GridHandle grid_;
  std::size_t rows_;
  std::vector<double> lengths_;
  TableHandle source_;
};

/// Row n, column k = max over inputs x of s(f(x, omega_n); eta, lambda_k).
FrontEnsemble ensemble_from_objective_table(TableHandle table, const ReferenceVector& eta,
                                            const GridHandle& grid);

/// Throws InvalidArgument unless the ensemble and front share reference and grid.
void require_compatible(const FrontEnsemble& e, const GridFront& front);

}  // namespace polarfront
