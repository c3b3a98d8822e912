#include "polarfront/projection.hpp"

#include <algorithm>
#include <cmath>

#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/numeric.hpp"

namespace polarfront {

SliceSpec::SliceSpec(std::size_t dim, std::vector<std::size_t> kept, std::vector<double> fixed)
    : dim_(dim), kept_(std::move(kept)), fixed_(std::move(fixed)) {
  if (kept_.empty()) throw InvalidArgument("slice must keep at least one objective");
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    if (kept_[i] >= dim_) throw InvalidArgument("kept index out of range");
    if (i > 0 && kept_[i] <= kept_[i - 1]) {
      throw InvalidArgument("kept indices must be strictly increasing");
    }
  }
  for (std::size_t m = 0; m < dim_; ++m) {
    if (!std::binary_search(kept_.begin(), kept_.end(), m)) complement_.push_back(m);
  }
  if (fixed_.size() != complement_.size()) {
    throw InvalidArgument("fixed vector must have one entry per dropped objective");
  }
  double norm2 = 0.0;
  for (double v : fixed_) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw InvalidArgument("fixed vector components must be positive");
    }
    norm2 += v * v;
  }
  if (!(norm2 < 1.0)) throw InvalidArgument("fixed vector must have norm < 1");
  scale_ = std::sqrt(1.0 - norm2);
}

Direction reconstruct_direction(const SliceSpec& spec, std::span<const double> lam) {
  if (lam.size() != spec.slice_dim()) {
    throw InvalidArgument("slice direction dimension does not match kept indices");
  }
  std::vector<double> out(spec.dim());
  for (std::size_t p = 0; p < lam.size(); ++p) out[spec.kept()[p]] = spec.scale() * lam[p];
  for (std::size_t q = 0; q < spec.complement().size(); ++q) {
    out[spec.complement()[q]] = spec.fixed()[q];
  }
  return Direction(std::move(out));
}

namespace {

void require_slice_inputs(std::size_t front_dim, const SliceSpec& spec, const GridHandle& sub_grid) {
  if (front_dim != spec.dim()) throw InvalidArgument("slice dimension does not match front");
  if (!sub_grid || sub_grid->dim() != spec.slice_dim()) {
    throw InvalidArgument("sub-grid dimension must equal the number of kept objectives");
  }
}

ReferenceVector kept_reference(const ReferenceVector& eta, const SliceSpec& spec) {
  std::vector<double> out;
  for (std::size_t i : spec.kept()) out.push_back(eta[i]);
  return ReferenceVector(std::move(out));
}

// Full-space lengths along each reconstructed direction, plus the worst
// angular lookup error.
template <class LengthAt>
std::pair<std::vector<double>, double> sliced_lengths(const SliceSpec& spec,
                                                      const GridHandle& sub_grid,
                                                      LengthAt length_at) {
  std::vector<double> lengths(sub_grid->size());
  double worst = 0.0;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    const Direction phi = reconstruct_direction(spec, sub_grid->direction(k));
    const auto [l, err] = length_at(phi.components());
    lengths[k] = l;
    worst = std::max(worst, err);
  }
  return {std::move(lengths), worst};
}

std::vector<std::vector<double>> trace_from(const ReferenceVector& eta, const SliceSpec& spec,
                                            std::span<const double> full_lengths) {
  std::vector<std::vector<double>> out;
  out.reserve(full_lengths.size());
  for (double l : full_lengths) {
    std::vector<double> t(spec.complement().size());
    for (std::size_t q = 0; q < t.size(); ++q) {
      t[q] = eta[spec.complement()[q]] + l * spec.fixed()[q];
    }
    out.push_back(std::move(t));
  }
  return out;
}

auto grid_lookup(const GridFront& front) {
  return [&front](std::span<const double> phi) {
    const auto nearest = nearest_direction(*front.grid(), phi);
    return std::pair{front.length(nearest.index), nearest.angle};
  };
}

auto point_lookup(const PointFront& front) {
  return [&front](std::span<const double> phi) {
    return std::pair{point_front_length(front, phi), 0.0};
  };
}

ProjectedFront assemble(const ReferenceVector& eta, const SliceSpec& spec, const GridHandle& sub_grid,
                        std::vector<double> full_lengths, bool exact, double worst) {
  for (double& l : full_lengths) l *= spec.scale();
  return {GridFront(kept_reference(eta, spec), sub_grid, std::move(full_lengths)), exact, worst};
}

}  // namespace

ProjectedFront project_front(const GridFront& front, const SliceSpec& spec,
                             const GridHandle& sub_grid) {
  require_slice_inputs(front.dim(), spec, sub_grid);
  auto [lengths, worst] = sliced_lengths(spec, sub_grid, grid_lookup(front));
  return assemble(front.reference(), spec, sub_grid, std::move(lengths), false, worst);
}

ProjectedFront project_front(const PointFront& front, const SliceSpec& spec,
                             const GridHandle& sub_grid) {
  require_slice_inputs(front.dim(), spec, sub_grid);
  auto [lengths, worst] = sliced_lengths(spec, sub_grid, point_lookup(front));
  return assemble(front.reference(), spec, sub_grid, std::move(lengths), true, worst);
}

std::vector<std::vector<double>> fixed_component_trace(const GridFront& front, const SliceSpec& spec,
                                                       const GridHandle& sub_grid) {
  require_slice_inputs(front.dim(), spec, sub_grid);
  const auto [lengths, worst] = sliced_lengths(spec, sub_grid, grid_lookup(front));
  return trace_from(front.reference(), spec, lengths);
}

std::vector<std::vector<double>> fixed_component_trace(const PointFront& front,
                                                       const SliceSpec& spec,
                                                       const GridHandle& sub_grid) {
  require_slice_inputs(front.dim(), spec, sub_grid);
  const auto [lengths, worst] = sliced_lengths(spec, sub_grid, point_lookup(front));
  return trace_from(front.reference(), spec, lengths);
}

SliceStatistics slice_statistics(const FrontEnsemble& e, const SliceSpec& spec,
                                 const GridHandle& sub_grid, std::span<const double> alphas) {
  require_slice_inputs(e.dim(), spec, sub_grid);
  const std::size_t k_sub = sub_grid->size();
  const std::size_t rows = e.rows();

  std::vector<double> mean_full(k_sub);
  std::vector<std::vector<double>> quantile_full(alphas.size(), std::vector<double>(k_sub));
  std::vector<std::size_t> ranks;
  for (double a : alphas) ranks.push_back(lower_quantile_rank(a, rows));

  bool exact = true;
  double worst = 0.0;
  for (std::size_t k = 0; k < k_sub; ++k) {
    const Direction phi = reconstruct_direction(spec, sub_grid->direction(k));
    auto along = e.lengths_along(phi.components());
    exact = exact && along.exact;
    worst = std::max(worst, along.angular_error);
    mean_full[k] = compensated_mean(along.lengths);
    for (std::size_t q = 0; q < ranks.size(); ++q) {
      auto nth = along.lengths.begin() + static_cast<std::ptrdiff_t>(ranks[q] - 1);
      std::nth_element(along.lengths.begin(), nth, along.lengths.end());
      quantile_full[q][k] = *nth;
    }
  }

  auto mean_trace = trace_from(e.reference(), spec, mean_full);
  auto mean = assemble(e.reference(), spec, sub_grid, std::move(mean_full), exact, worst);
  std::vector<SliceQuantile> quantiles;
  for (std::size_t q = 0; q < alphas.size(); ++q) {
    quantiles.push_back(
        {alphas[q],
         assemble(e.reference(), spec, sub_grid, std::move(quantile_full[q]), exact, worst).front});
  }
  return {std::move(mean.front), std::move(quantiles), std::move(mean_trace), exact, worst};
}

}  // namespace polarfront
