#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polarfront/ensemble.hpp"
#include "polarfront/geometry.hpp"

namespace polarfront::evt {

/// Independent Weibull objectives with CDF 1 - exp(-(rate_m x)^shape).
struct WeibullSpec {
  double shape;
  std::vector<double> rates;

  void validate() const;
  std::size_t dim() const noexcept { return rates.size(); }
};

/// Gumbel normalisation (l - location) / scale for the maximum projected
/// length along one direction.
struct GumbelNorm {
  double scale;     ///< a_N
  double location;  ///< b_N
  double rate;      ///< k_lambda = (sum_m (rate_m lam_m)^shape)^(1/shape)
};

GumbelNorm weibull_norm_constants(const WeibullSpec& spec, const Direction& lam, std::size_t n);

/// Single-parameter-rate Weibull law: CDF 1 - exp(-(rate x)^shape) on x >= 0.
struct WeibullDistribution {
  double shape;
  double rate;

  double cdf(double x) const noexcept;
  double quantile(double p) const;
};

/// Law of s(Y; 0, lam) when the components of Y follow `spec`:
/// Weibull(shape, k_lambda).
WeibullDistribution scalarised_length_distribution(const WeibullSpec& spec, const Direction& lam);

double gumbel_cdf(double x) noexcept;
/// exp(-(1 + xi z)_+^{-1/xi}), z = (x - mu)/sigma; |xi| < 1e-8 uses the Gumbel form.
double gev_cdf(double x, double xi, double mu, double sigma);
/// 1 - (1 + xi x / beta)_+^{-1/xi} for x >= 0; |xi| < 1e-8 uses 1 - exp(-x / beta).
double gpd_cdf(double x, double xi, double beta);

/// Threshold-dependent GPD scale sigma + xi (u - mu) matched to a GEV fit.
double gpd_scale_for_threshold(double sigma, double xi, double mu, double threshold);

/// Draws `count` vectors from the independent Weibull model.
std::vector<ObjectiveVector> sample_weibull_vectors(const WeibullSpec& spec, std::size_t count,
                                                    std::uint64_t seed);

/// Replicates the maximum projected length of n Weibull vectors (eta = 0)
/// along `lam`, normalised with weibull_norm_constants.
std::vector<double> simulate_normalized_maxima(const WeibullSpec& spec, const Direction& lam,
                                               std::size_t n, std::size_t replications,
                                               std::uint64_t seed);

/// Kolmogorov-Smirnov distance sup |F_n - F| of a sample against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Polar surface used as a threshold for conditional excesses.
struct ThresholdSurface {
  GridFront front;
};

ThresholdSurface excess_threshold_from_quantile(const FrontEnsemble& e, double alpha);

struct ExcessEstimate {
  double probability;
  std::size_t exceedances;  ///< samples with s(Y) > u along the optimal direction of z
  double threshold;         ///< u used
  double excess;            ///< s(z) - u
  double angular_error;     ///< nearest-grid lookup error for the threshold
};

/// Empirical P[s(Y) - u <= s(z) - u | s(Y) > u] along the optimal direction of z
/// (reference taken from the threshold front). Throws InsufficientData when
/// no sample exceeds the threshold.
ExcessEstimate conditional_excess_probability(std::span<const ObjectiveVector> samples,
                                              const ThresholdSurface& threshold,
                                              const ObjectiveVector& z);

/// Same, with the threshold length along the optimal direction supplied exactly.
ExcessEstimate conditional_excess_probability(std::span<const ObjectiveVector> samples,
                                              const ReferenceVector& eta, double threshold,
                                              const ObjectiveVector& z);

/// Fraction of rows whose length exceeds the threshold, per grid direction.
std::vector<double> exceedance_rates(const FrontEnsemble& e, const ThresholdSurface& threshold);

}  // namespace polarfront::evt
