#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "polarfront/ensemble.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/geometry.hpp"

namespace polarfront {

/// Per-direction arithmetic mean of the sampled lengths.
GridFront mean_front(const FrontEnsemble& e);

/// Bayesian bootstrap: each round draws simplex weights from normalised iid
/// Exp(1) variables and returns the weighted per-direction average.
std::vector<GridFront> bayesian_bootstrap_front(const FrontEnsemble& e, std::size_t rounds,
                                                std::uint64_t seed);

/// Weighted per-direction average; weights must be non-negative and sum to 1.
GridFront weighted_front(const FrontEnsemble& e, std::span<const double> weights);

/// Unbiased sample covariance of length columns i and j. Needs N >= 2.
double length_covariance(const FrontEnsemble& e, std::size_t i, std::size_t j);

struct SquareMatrix {
  std::size_t size = 0;
  std::vector<double> data;  ///< row-major
  double operator()(std::size_t r, std::size_t c) const noexcept { return data[r * size + c]; }
  double trace() const noexcept;
};

/// Covariance of the front points eta + l_i lambda_i and eta + l_j lambda_j:
/// lambda_i lambda_j^T scaled by the scalar length covariance.
SquareMatrix covariance_matrix_pair(const FrontEnsemble& e, std::size_t i, std::size_t j);

struct DeviationSurfaces {
  GridFront upper;
  GridFront lower;
};

/// Lengths (mean +/- beta * sd)_+. These are polar surfaces but need not be
/// valid Pareto fronts.
DeviationSurfaces deviation_surfaces(const FrontEnsemble& e, double beta);

/// Lower empirical alpha-quantile per direction: the sorted column value at
/// rank ceil(alpha N).
GridFront quantile_front(const FrontEnsemble& e, double alpha);

/// Fraction of sampled fronts whose truncated domination region contains y.
double domination_probability(const FrontEnsemble& e, const ObjectiveVector& y);

/// Fraction of paired samples for which y lies strictly between the two fronts.
double deviation_probability(const FrontEnsemble& a, const FrontEnsemble& b,
                             const ObjectiveVector& y);

/// Front of the Vorob'ev alpha-quantile; identical to quantile_front(1 - alpha).
GridFront vorobev_quantile_front(const FrontEnsemble& e, double alpha);

struct VorobevOptions {
  double hv_tol = 1e-3;
  std::size_t max_iters = 50;
};

struct VorobevMean {
  GridFront front;          ///< vorobev_quantile_front(alpha_star)
  double alpha_star;        ///< largest probed level whose hypervolume reaches the target
  double alpha_above;       ///< smallest probed level whose hypervolume falls below it
  double expected_hv;       ///< mean over rows of the grid hypervolume
  double hv_at_star;
  double hv_above;
  std::size_t iterations;
  bool converged;           ///< false: bracket reported after max_iters
};

/// Bisection on alpha for the level whose quantile-front hypervolume brackets
/// the expected hypervolume. Converges once the bracket straddles a single
/// rank step of the empirical quantile or the hypervolume gap is within hv_tol.
VorobevMean vorobev_mean_front(const FrontEnsemble& e, const VorobevOptions& options = {});

/// Mean over rows of hypervolume_distance(a, row).
double vorobev_deviation(const FrontEnsemble& e, const GridFront& a);

/// Per-direction minimiser of the empirical expected score: squared gives the
/// mean front, pinball(alpha) the lower alpha-quantile front.
GridFront functional_front(const FrontEnsemble& e, const ScoringSpec& scoring);

}  // namespace polarfront
