#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace polarfront {

/// Neumaier-compensated accumulator. Reductions over grid directions go
/// through this so results do not depend on loop blocking.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double compensated_sum(std::span<const double> xs) noexcept;
double compensated_mean(std::span<const double> xs) noexcept;

double euclidean_norm(std::span<const double> xs) noexcept;

/// Lower empirical quantile rank ceil(alpha * n), clamped to [1, n]. Products
/// that land within 1e-9 above an integer are snapped down so that e.g.
/// 0.07 * 100 yields rank 7.
std::size_t lower_quantile_rank(double alpha, std::size_t n);

/// Derives an independent RNG seed for a named sub-stream.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept;

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace polarfront
