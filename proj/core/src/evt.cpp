#include "polarfront/evt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/scalarisation.hpp"
#include "polarfront/statistics.hpp"

namespace polarfront::evt {

namespace {

constexpr double kShapeCrossover = 1e-8;

}  // namespace

void WeibullSpec::validate() const {
  if (!std::isfinite(shape) || !(shape > 0.0)) throw InvalidArgument("Weibull shape must be positive");
  if (rates.empty()) throw InvalidArgument("Weibull model needs at least one rate");
  for (double b : rates) {
    if (!std::isfinite(b) || !(b > 0.0)) throw InvalidArgument("Weibull rates must be positive");
  }
}

namespace {

double direction_rate(const WeibullSpec& spec, const Direction& lam) {
  spec.validate();
  if (lam.dim() != spec.dim()) throw InvalidArgument("direction dimension does not match rates");
  double acc = 0.0;
  for (std::size_t m = 0; m < spec.dim(); ++m) acc += std::pow(spec.rates[m] * lam[m], spec.shape);
  return std::pow(acc, 1.0 / spec.shape);
}

}  // namespace

GumbelNorm weibull_norm_constants(const WeibullSpec& spec, const Direction& lam, std::size_t n) {
  if (n < 2) throw InvalidArgument("normalising constants need N >= 2");
  const double k = direction_rate(spec, lam);
  const double log_n = std::log(static_cast<double>(n));
  const double a = spec.shape;
  return {std::pow(log_n, 1.0 / a - 1.0) / (a * k), std::pow(log_n, 1.0 / a) / k, k};
}

double WeibullDistribution::cdf(double x) const noexcept {
  if (!(x > 0.0)) return 0.0;
  return -std::expm1(-std::pow(rate * x, shape));
}

double WeibullDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("Weibull quantile level must be in [0, 1)");
  return std::pow(-std::log1p(-p), 1.0 / shape) / rate;
}

WeibullDistribution scalarised_length_distribution(const WeibullSpec& spec, const Direction& lam) {
  return {spec.shape, direction_rate(spec, lam)};
}

double gumbel_cdf(double x) noexcept { return std::exp(-std::exp(-x)); }

double gev_cdf(double x, double xi, double mu, double sigma) {
  if (!std::isfinite(sigma) || !(sigma > 0.0)) throw InvalidArgument("GEV scale must be positive");
  const double z = (x - mu) / sigma;
  if (std::abs(xi) < kShapeCrossover) return gumbel_cdf(z);
  const double t = 1.0 + xi * z;
  if (t <= 0.0) return xi > 0.0 ? 0.0 : 1.0;
  return std::exp(-std::pow(t, -1.0 / xi));
}

double gpd_cdf(double x, double xi, double beta) {
  if (!std::isfinite(beta) || !(beta > 0.0)) throw InvalidArgument("GPD scale must be positive");
  if (x <= 0.0) return 0.0;
  if (std::abs(xi) < kShapeCrossover) return -std::expm1(-x / beta);
  const double t = 1.0 + xi * x / beta;
  if (t <= 0.0) return 1.0;
  return 1.0 - std::pow(t, -1.0 / xi);
}

double gpd_scale_for_threshold(double sigma, double xi, double mu, double threshold) {
  const double beta = sigma + xi * (threshold - mu);
  if (!(beta > 0.0)) throw DomainError("threshold gives a non-positive GPD scale");
  return beta;
}

std::vector<ObjectiveVector> sample_weibull_vectors(const WeibullSpec& spec, std::size_t count,
                                                    std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);
  std::vector<std::weibull_distribution<double>> dists;
  for (double b : spec.rates) dists.emplace_back(spec.shape, 1.0 / b);
  std::vector<ObjectiveVector> out;
  out.reserve(count);
  std::vector<double> y(spec.dim());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t m = 0; m < y.size(); ++m) y[m] = dists[m](rng);
    out.emplace_back(y);
  }
  return out;
}

std::vector<double> simulate_normalized_maxima(const WeibullSpec& spec, const Direction& lam,
                                               std::size_t n, std::size_t replications,
                                               std::uint64_t seed) {
  const GumbelNorm norm = weibull_norm_constants(spec, lam, n);
  std::mt19937_64 rng(seed);
  std::vector<std::weibull_distribution<double>> dists;
  for (double b : spec.rates) dists.emplace_back(spec.shape, 1.0 / b);
  std::vector<double> out(replications);
  for (std::size_t r = 0; r < replications; ++r) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = std::numeric_limits<double>::infinity();
      for (std::size_t m = 0; m < spec.dim(); ++m) s = std::min(s, dists[m](rng) / lam[m]);
      best = std::max(best, s);
    }
    out[r] = (best - norm.location) / norm.scale;
  }
  return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw InsufficientData("KS statistic of an empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

ThresholdSurface excess_threshold_from_quantile(const FrontEnsemble& e, double alpha) {
  return {quantile_front(e, alpha)};
}

ExcessEstimate conditional_excess_probability(std::span<const ObjectiveVector> samples,
                                              const ReferenceVector& eta, double threshold,
                                              const ObjectiveVector& z) {
  if (!std::isfinite(threshold) || threshold < 0.0) {
    throw InvalidArgument("threshold length must be finite and non-negative");
  }
  const auto [lam, radial] = to_polar(z, eta);
  std::size_t exceed = 0;
  std::size_t within = 0;
  const double excess = radial - threshold;
  for (const auto& y : samples) {
    const double s = length_scalarisation(y.values(), eta.values(), lam.components());
    if (s > threshold) {
      ++exceed;
      if (s - threshold <= excess) ++within;
    }
  }
  if (exceed == 0) throw InsufficientData("no sample exceeds the threshold along this direction");
  return {static_cast<double>(within) / static_cast<double>(exceed), exceed, threshold, excess, 0.0};
}

ExcessEstimate conditional_excess_probability(std::span<const ObjectiveVector> samples,
                                              const ThresholdSurface& threshold,
                                              const ObjectiveVector& z) {
  const auto& front = threshold.front;
  const Direction lam = optimal_direction(z, front.reference());
  const auto nearest = nearest_direction(*front.grid(), lam.components());
  auto out = conditional_excess_probability(samples, front.reference(),
                                            front.length(nearest.index), z);
  out.angular_error = nearest.angle;
  return out;
}

std::vector<double> exceedance_rates(const FrontEnsemble& e, const ThresholdSurface& threshold) {
  require_compatible(e, threshold.front);
  std::vector<double> out(e.columns());
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t hits = 0;
    for (std::size_t n = 0; n < e.rows(); ++n) {
      if (e.length(n, k) > threshold.front.length(k)) ++hits;
    }
    out[k] = static_cast<double>(hits) / static_cast<double>(e.rows());
  }
  return out;
}

}  // namespace polarfront::evt
