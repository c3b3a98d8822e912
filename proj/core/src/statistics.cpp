#include "polarfront/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "polarfront/error.hpp"
#include "polarfront/hypervolume.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/scalarisation.hpp"

namespace polarfront {

namespace {

std::vector<double> column_means(const FrontEnsemble& e) {
  std::vector<double> out(e.columns());
  for (std::size_t k = 0; k < out.size(); ++k) {
    CompensatedSum acc;
    for (std::size_t n = 0; n < e.rows(); ++n) acc.add(e.length(n, k));
    out[k] = acc.value() / static_cast<double>(e.rows());
  }
  return out;
}

// Per-column order statistic at 1-based rank r.
std::vector<double> column_order_statistic(const FrontEnsemble& e, std::size_t rank) {
  std::vector<double> out(e.columns());
  std::vector<double> col;
  for (std::size_t k = 0; k < out.size(); ++k) {
    col = e.column(k);
    auto nth = col.begin() + static_cast<std::ptrdiff_t>(rank - 1);
    std::nth_element(col.begin(), nth, col.end());
    out[k] = *nth;
  }
  return out;
}

double unbiased_covariance(const FrontEnsemble& e, std::size_t i, std::size_t j) {
  if (e.rows() < 2) throw InsufficientData("covariance needs at least two samples");
  if (i >= e.columns() || j >= e.columns()) throw InvalidArgument("grid index out of range");
  const auto ci = e.column(i);
  const auto cj = e.column(j);
  const double mi = compensated_mean(ci);
  const double mj = compensated_mean(cj);
  CompensatedSum acc;
  for (std::size_t n = 0; n < ci.size(); ++n) acc.add((ci[n] - mi) * (cj[n] - mj));
  return acc.value() / static_cast<double>(e.rows() - 1);
}

}  // namespace

GridFront mean_front(const FrontEnsemble& e) {
  return GridFront(e.reference(), e.grid(), column_means(e));
}

GridFront weighted_front(const FrontEnsemble& e, std::span<const double> weights) {
  if (weights.size() != e.rows()) throw InvalidArgument("one weight per ensemble row required");
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidArgument("weights must be non-negative");
  }
  if (std::abs(compensated_sum(weights) - 1.0) > 1e-9) throw InvalidArgument("weights must sum to 1");
  std::vector<double> out(e.columns());
  for (std::size_t k = 0; k < out.size(); ++k) {
    CompensatedSum acc;
    for (std::size_t n = 0; n < e.rows(); ++n) acc.add(weights[n] * e.length(n, k));
    out[k] = std::max(acc.value(), 0.0);
  }
  return GridFront(e.reference(), e.grid(), std::move(out));
}

std::vector<GridFront> bayesian_bootstrap_front(const FrontEnsemble& e, std::size_t rounds,
                                                std::uint64_t seed) {
  if (rounds < 1) throw InvalidArgument("bootstrap needs at least one round");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exponential(1.0);
  std::vector<GridFront> out;
  out.reserve(rounds);
  std::vector<double> w(e.rows());
  for (std::size_t r = 0; r < rounds; ++r) {
    for (double& x : w) x = exponential(rng);
    const double total = compensated_sum(w);
    for (double& x : w) x /= total;
    out.push_back(weighted_front(e, w));
  }
  return out;
}

double length_covariance(const FrontEnsemble& e, std::size_t i, std::size_t j) {
  return unbiased_covariance(e, i, j);
}

double SquareMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t r = 0; r < size; ++r) t += data[r * size + r];
  return t;
}

SquareMatrix covariance_matrix_pair(const FrontEnsemble& e, std::size_t i, std::size_t j) {
  const double c = unbiased_covariance(e, i, j);
  const auto li = e.grid()->direction(i);
  const auto lj = e.grid()->direction(j);
  SquareMatrix out{e.dim(), std::vector<double>(e.dim() * e.dim())};
  for (std::size_t r = 0; r < e.dim(); ++r) {
    for (std::size_t s = 0; s < e.dim(); ++s) out.data[r * e.dim() + s] = li[r] * lj[s] * c;
  }
  return out;
}

DeviationSurfaces deviation_surfaces(const FrontEnsemble& e, double beta) {
  if (e.rows() < 2) throw InsufficientData("deviation surfaces need at least two samples");
  if (!std::isfinite(beta) || beta < 0.0) throw InvalidArgument("beta must be non-negative");
  const auto mean = column_means(e);
  std::vector<double> upper(e.columns());
  std::vector<double> lower(e.columns());
  for (std::size_t k = 0; k < e.columns(); ++k) {
    const double sd = std::sqrt(std::max(unbiased_covariance(e, k, k), 0.0));
    upper[k] = std::max(mean[k] + beta * sd, 0.0);
    lower[k] = std::max(mean[k] - beta * sd, 0.0);
  }
  return {GridFront(e.reference(), e.grid(), std::move(upper)),
          GridFront(e.reference(), e.grid(), std::move(lower))};
}

GridFront quantile_front(const FrontEnsemble& e, double alpha) {
  const std::size_t rank = lower_quantile_rank(alpha, e.rows());
  return GridFront(e.reference(), e.grid(), column_order_statistic(e, rank));
}

double domination_probability(const FrontEnsemble& e, const ObjectiveVector& y) {
  const auto [lam, radial] = to_polar(y, e.reference());
  const auto along = e.lengths_along(lam.components());
  const auto hits = std::count_if(along.lengths.begin(), along.lengths.end(), [r = radial](double l) {
    return l >= r - kBoundaryTolerance;
  });
  return static_cast<double>(hits) / static_cast<double>(e.rows());
}

double deviation_probability(const FrontEnsemble& a, const FrontEnsemble& b,
                             const ObjectiveVector& y) {
  if (a.rows() != b.rows()) throw InvalidArgument("deviation probability needs paired samples");
  if (!(a.reference() == b.reference())) {
    throw InvalidArgument("ensembles have different reference vectors");
  }
  const auto [lam, radial] = to_polar(y, a.reference());
  const auto la = a.lengths_along(lam.components());
  const auto lb = b.lengths_along(lam.components());
  std::size_t hits = 0;
  for (std::size_t n = 0; n < a.rows(); ++n) {
    const double product = (la.lengths[n] / radial - 1.0) * (lb.lengths[n] / radial - 1.0);
    if (product < 0.0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(a.rows());
}

GridFront vorobev_quantile_front(const FrontEnsemble& e, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("Vorob'ev level must lie strictly inside (0, 1)");
  }
  return quantile_front(e, 1.0 - alpha);
}

VorobevMean vorobev_mean_front(const FrontEnsemble& e, const VorobevOptions& options) {
  if (!(options.hv_tol > 0.0)) throw InvalidArgument("hv_tol must be positive");
  const std::size_t n = e.rows();

  CompensatedSum hv_acc;
  for (std::size_t r = 0; r < n; ++r) hv_acc.add(grid_hypervolume(e.row_front(r)));
  const double target = hv_acc.value() / static_cast<double>(n);

  std::map<std::size_t, double> hv_by_rank;
  auto rank_of = [n](double alpha) { return lower_quantile_rank(1.0 - alpha, n); };
  auto hv_of = [&](double alpha) {
    const std::size_t rank = rank_of(alpha);
    auto it = hv_by_rank.find(rank);
    if (it == hv_by_rank.end()) {
      const GridFront f(e.reference(), e.grid(), column_order_statistic(e, rank));
      it = hv_by_rank.emplace(rank, grid_hypervolume(f)).first;
    }
    return it->second;
  };

  // ranks n and 1 respectively
  const double half_step = 0.5 / static_cast<double>(n);
  double lo = half_step;
  double hi = 1.0 - half_step;
  std::size_t iterations = 0;
  bool converged = false;

  if (n == 1 || hv_of(hi) >= target) {
    lo = hi;
    converged = true;
  }
  while (!converged) {
    const bool single_step = rank_of(lo) - rank_of(hi) <= 1;
    const bool tight = hv_of(lo) - hv_of(hi) <= options.hv_tol * target;
    if (single_step || tight) {
      converged = true;
      break;
    }
    if (iterations >= options.max_iters) break;
    ++iterations;
    const double mid = 0.5 * (lo + hi);
    if (hv_of(mid) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  return VorobevMean{vorobev_quantile_front(e, lo), lo, hi, target, hv_of(lo), hv_of(hi),
                     iterations, converged};
}

double vorobev_deviation(const FrontEnsemble& e, const GridFront& a) {
  require_compatible(e, a);
  CompensatedSum acc;
  for (std::size_t r = 0; r < e.rows(); ++r) acc.add(hypervolume_distance(a, e.row_front(r)));
  return acc.value() / static_cast<double>(e.rows());
}

GridFront functional_front(const FrontEnsemble& e, const ScoringSpec& scoring) {
  switch (scoring.kind()) {
    case ScoringSpec::Kind::squared:
      return mean_front(e);
    case ScoringSpec::Kind::pinball:
      return quantile_front(e, scoring.alpha());
    case ScoringSpec::Kind::hv_absolute:
      break;
  }
  throw InvalidArgument("functional front supports squared and pinball scoring only");
}

}  // namespace polarfront
