#include "polarfront/pollution.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/scalarisation.hpp"

namespace polarfront {

std::vector<std::size_t> day_resample_indices(std::size_t count, std::size_t rounds,
                                              std::uint64_t seed) {
  if (count == 0) throw InvalidArgument("resampling needs at least one day");
  if (rounds == 0) throw InvalidArgument("bootstrap rounds must be >= 1");
  std::mt19937_64 rng(derive_seed(seed, "day-bootstrap"));
  std::uniform_int_distribution<std::size_t> pick(0, count - 1);
  std::vector<std::size_t> out(count * rounds);
  for (auto& idx : out) idx = pick(rng);
  return out;
}

PeriodEnsemble period_front_ensemble(std::string label, std::span<const ObjectiveVector> days,
                                     const ReferenceVector& eta, const GridHandle& grid,
                                     std::size_t rounds, std::uint64_t seed) {
  if (days.empty()) throw InvalidArgument("period '" + label + "' has no complete days");
  const std::size_t dim = eta.dim();
  for (const auto& d : days) {
    if (d.dim() != dim) throw InvalidArgument("day vector dimension does not match reference");
  }
  const auto picks = day_resample_indices(days.size(), rounds, seed);
  std::vector<std::string> slots(days.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = "slot" + std::to_string(i);
  std::vector<double> values;
  values.reserve(picks.size() * dim);
  for (std::size_t idx : picks) {
    const auto y = days[idx].values();
    values.insert(values.end(), y.begin(), y.end());
  }
  auto table = std::make_shared<const ObjectiveTable>(std::move(slots), rounds, dim, std::move(values));
  return {std::move(label), ensemble_from_objective_table(std::move(table), eta, grid)};
}

PolarLattice make_polar_lattice(GridHandle directions, std::span<const double> fractions,
                                double bounding_length) {
  if (!directions) throw InvalidArgument("lattice needs a direction grid");
  if (fractions.empty()) throw InvalidArgument("lattice needs at least one radial level");
  if (!std::isfinite(bounding_length) || !(bounding_length > 0.0)) {
    throw InvalidArgument("bounding length must be positive");
  }
  std::vector<double> radii;
  for (std::size_t r = 0; r < fractions.size(); ++r) {
    const double f = fractions[r];
    if (!(f > 0.0 && f <= 1.0)) throw InvalidArgument("radial fractions must lie in (0, 1]");
    if (r > 0 && !(f > fractions[r - 1])) {
      throw InvalidArgument("radial fractions must increase strictly");
    }
    radii.push_back(f * bounding_length);
  }
  return {std::move(directions), std::move(radii)};
}

namespace {

void require_pair(std::size_t dim, std::size_t i, std::size_t j) {
  if (i >= dim || j >= dim || i == j) {
    throw InvalidArgument("objective pair (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") is invalid for " + std::to_string(dim) + " objectives");
  }
}

const ObjectiveTable& require_source(const PeriodEnsemble& pe) {
  if (!pe.ensemble.has_source()) {
    throw InvalidArgument("period '" + pe.label + "' does not carry its resampled days");
  }
  return *pe.ensemble.source();
}

}  // namespace

double pair_bounding_length(std::span<const PeriodEnsemble> periods, std::size_t i, std::size_t j) {
  if (periods.empty()) throw InvalidArgument("no periods supplied");
  double best = 0.0;
  for (const auto& pe : periods) {
    require_pair(pe.ensemble.dim(), i, j);
    const auto& table = require_source(pe);
    const auto& eta = pe.ensemble.reference();
    for (std::size_t n = 0; n < table.samples(); ++n) {
      for (std::size_t x = 0; x < table.inputs(); ++x) {
        const auto y = table.value(n, x);
        const double di = std::max(y[i] - eta[i], 0.0);
        const double dj = std::max(y[j] - eta[j], 0.0);
        best = std::max(best, std::hypot(di, dj));
      }
    }
  }
  if (!(best > 0.0)) throw InsufficientData("no day strongly dominates the reference in this pair");
  return best;
}

DominationMap pairwise_domination_map(const PeriodEnsemble& pe, std::size_t i, std::size_t j,
                                      const PolarLattice& lattice) {
  require_pair(pe.ensemble.dim(), i, j);
  if (!lattice.directions || lattice.directions->dim() != 2) {
    throw InvalidArgument("pairwise lattice must use two-dimensional directions");
  }
  const std::size_t comps[] = {i, j};
  auto table = std::make_shared<const ObjectiveTable>(require_source(pe).select_components(comps));
  const auto& eta = pe.ensemble.reference();
  ReferenceVector eta2{eta[i], eta[j]};
  const FrontEnsemble pair = ensemble_from_objective_table(table, eta2, lattice.directions);

  const std::size_t k_dirs = lattice.directions->size();
  const std::size_t levels = lattice.radii.size();
  std::vector<double> values(k_dirs * levels);
  // Each lattice point lies on a grid ray, so its optimal direction is the
  // grid direction itself and the column lengths are exact.
  for (std::size_t k = 0; k < k_dirs; ++k) {
    auto col = pair.column(k);
    std::sort(col.begin(), col.end());
    for (std::size_t r = 0; r < levels; ++r) {
      const double cut = lattice.radii[r] - kBoundaryTolerance;
      const auto below = std::lower_bound(col.begin(), col.end(), cut) - col.begin();
      values[k * levels + r] =
          static_cast<double>(col.size() - static_cast<std::size_t>(below)) / static_cast<double>(col.size());
    }
  }
  return {i, j, std::move(eta2), lattice, std::move(values)};
}

SignedChanges signed_yearly_changes(const DominationMap& earlier, const DominationMap& later) {
  if (earlier.first != later.first || earlier.second != later.second ||
      !(earlier.reference == later.reference) ||
      !same_grid(earlier.lattice.directions, later.lattice.directions) ||
      earlier.lattice.radii != later.lattice.radii || earlier.values.size() != later.values.size()) {
    throw InvalidArgument("domination maps were evaluated on different lattices");
  }
  std::vector<double> field(earlier.values.size());
  CompensatedSum neg;
  CompensatedSum pos;
  for (std::size_t p = 0; p < field.size(); ++p) {
    field[p] = later.values[p] - earlier.values[p];
    if (field[p] < 0.0) neg.add(field[p]);
    else pos.add(field[p]);
  }
  const double n = static_cast<double>(field.size());
  const double mean_negative = neg.value() / n;
  const double mean_positive = pos.value() / n;
  return {mean_negative, mean_positive, std::abs(mean_negative) + mean_positive, std::move(field)};
}

}  // namespace polarfront
