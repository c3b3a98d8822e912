#include "polarfront/ensemble.hpp"

#include <algorithm>
#include <cmath>

#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/scalarisation.hpp"

namespace polarfront {

ObjectiveTable::ObjectiveTable(std::vector<std::string> inputs, std::size_t samples,
                               std::size_t dim, std::vector<double> values)
    : ids_(std::move(inputs)), samples_(samples), dim_(dim), values_(std::move(values)) {
  if (ids_.empty() || samples_ == 0 || dim_ == 0) {
    throw InvalidArgument("objective table needs at least one sample, input and objective");
  }
  if (values_.size() != samples_ * ids_.size() * dim_) {
    throw InvalidArgument("objective table size does not match samples x inputs x objectives");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("objective table values must be finite");
  }
}

ObjectiveTable ObjectiveTable::select_components(std::span<const std::size_t> components) const {
  if (components.empty()) throw InvalidArgument("component selection is empty");
  for (std::size_t c : components) {
    if (c >= dim_) throw InvalidArgument("component index out of range");
  }
  std::vector<double> out;
  out.reserve(samples_ * ids_.size() * components.size());
  for (std::size_t n = 0; n < samples_; ++n) {
    for (std::size_t x = 0; x < ids_.size(); ++x) {
      const auto y = value(n, x);
      for (std::size_t c : components) out.push_back(y[c]);
    }
  }
  return ObjectiveTable(ids_, samples_, components.size(), std::move(out));
}

FrontEnsemble::FrontEnsemble(ReferenceVector reference, GridHandle grid, std::size_t rows,
                             std::vector<double> lengths, TableHandle source)
    : reference_(std::move(reference)),
      grid_(std::move(grid)),
      rows_(rows),
      lengths_(std::move(lengths)),
      source_(std::move(source)) {
  if (!grid_) throw InvalidArgument("ensemble requires a direction grid");
  if (grid_->dim() != reference_.dim()) {
    throw InvalidArgument("grid dimension does not match reference dimension");
  }
  if (rows_ == 0) throw InvalidArgument("ensemble needs at least one row");
  if (lengths_.size() != rows_ * grid_->size()) {
    throw InvalidArgument("ensemble length matrix must be rows x grid size");
  }
  for (double l : lengths_) {
    if (!std::isfinite(l) || l < 0.0) {
      throw InvalidArgument("ensemble lengths must be finite and non-negative");
    }
  }
  if (source_) {
    if (source_->dim() != reference_.dim()) {
      throw InvalidArgument("objective table dimension does not match reference");
    }
    if (source_->samples() != rows_) {
      throw InvalidArgument("objective table sample count does not match ensemble rows");
    }
  }
}

FrontEnsemble FrontEnsemble::from_fronts(std::span<const GridFront> fronts) {
  if (fronts.empty()) throw InvalidArgument("ensemble needs at least one front");
  std::vector<double> lengths;
  lengths.reserve(fronts.size() * fronts.front().size());
  for (const auto& f : fronts) {
    require_compatible(fronts.front(), f);
    lengths.insert(lengths.end(), f.lengths().begin(), f.lengths().end());
  }
  return FrontEnsemble(fronts.front().reference(), fronts.front().grid(), fronts.size(),
                       std::move(lengths));
}

std::vector<double> FrontEnsemble::column(std::size_t k) const {
  std::vector<double> out(rows_);
  for (std::size_t n = 0; n < rows_; ++n) out[n] = length(n, k);
  return out;
}

GridFront FrontEnsemble::row_front(std::size_t n) const {
  const auto r = row(n);
  return GridFront(reference_, grid_, std::vector<double>(r.begin(), r.end()));
}

std::vector<GridFront> FrontEnsemble::fronts() const {
  std::vector<GridFront> out;
  out.reserve(rows_);
  for (std::size_t n = 0; n < rows_; ++n) out.push_back(row_front(n));
  return out;
}

FrontEnsemble::DirectionalLengths FrontEnsemble::lengths_along(std::span<const double> lam) const {
  if (lam.size() != dim()) throw InvalidArgument("direction dimension does not match ensemble");
  DirectionalLengths out{std::vector<double>(rows_), source_ != nullptr, 0.0};
  if (source_) {
    const auto eta = reference_.values();
    for (std::size_t n = 0; n < rows_; ++n) {
      double best = 0.0;
      for (std::size_t x = 0; x < source_->inputs(); ++x) {
        best = std::max(best, length_scalarisation(source_->value(n, x), eta, lam));
      }
      out.lengths[n] = best;
    }
    return out;
  }
  const auto nearest = nearest_direction(*grid_, lam);
  out.angular_error = nearest.angle;
  for (std::size_t n = 0; n < rows_; ++n) out.lengths[n] = length(n, nearest.index);
  return out;
}

FrontEnsemble ensemble_from_objective_table(TableHandle table, const ReferenceVector& eta,
                                            const GridHandle& grid) {
  if (!table) throw InvalidArgument("objective table is empty");
  if (!grid) throw InvalidArgument("ensemble construction needs a grid");
  if (table->dim() != eta.dim() || grid->dim() != eta.dim()) {
    throw InvalidArgument("objective table, reference and grid dimensions differ");
  }
  const std::size_t rows = table->samples();
  const std::size_t cols = grid->size();
  std::vector<double> lengths(rows * cols, 0.0);
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t k = 0; k < cols; ++k) {
      const auto lam = grid->direction(k);
      double best = 0.0;
      for (std::size_t x = 0; x < table->inputs(); ++x) {
        best = std::max(best, length_scalarisation(table->value(n, x), eta.values(), lam));
      }
      lengths[n * cols + k] = best;
    }
  }
  return FrontEnsemble(eta, grid, rows, std::move(lengths), std::move(table));
}

void require_compatible(const FrontEnsemble& e, const GridFront& front) {
  if (!(e.reference() == front.reference())) {
    throw InvalidArgument("front and ensemble have different reference vectors");
  }
  if (!same_grid(e.grid(), front.grid())) {
    throw InvalidArgument("front and ensemble are defined on different grids");
  }
}

}  // namespace polarfront
