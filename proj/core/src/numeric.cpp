#include "polarfront/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "polarfront/error.hpp"

namespace polarfront {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> xs) noexcept {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

double compensated_mean(std::span<const double> xs) noexcept {
  if (xs.empty()) return 0.0;
  return compensated_sum(xs) / static_cast<double>(xs.size());
}

double euclidean_norm(std::span<const double> xs) noexcept {
  double scale = 0.0;
  for (double x : xs) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double acc = 0.0;
  for (double x : xs) {
    const double r = x / scale;
    acc += r * r;
  }
  return scale * std::sqrt(acc);
}

std::size_t lower_quantile_rank(double alpha, std::size_t n) {
  if (n == 0) throw InvalidArgument("quantile of an empty sample");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("quantile level must lie strictly inside (0, 1)");
  }
  const double t = alpha * static_cast<double>(n);
  double rank = std::ceil(t);
  if (rank - t > 1.0 - 1e-9) rank -= 1.0;
  return std::clamp<std::size_t>(static_cast<std::size_t>(rank), 1, n);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept {
  // splitmix64 finaliser over the mixed seed/label pair
  std::uint64_t z = seed ^ fnv1a64(label);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace polarfront
