#include "polarfront/directions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"

namespace polarfront {

GridHandle sample_directions(std::size_t dim, std::size_t count, std::uint64_t seed) {
  if (dim < 2) throw InvalidArgument("direction sampling needs dimension >= 2");
  if (count < 1) throw InvalidArgument("direction sampling needs at least one direction");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Direction> out;
  out.reserve(count);
  std::vector<double> draw(dim);
  while (out.size() < count) {
    for (double& x : draw) x = std::abs(normal(rng));
    const double norm = euclidean_norm(draw);
    if (!(norm > 0.0)) continue;
    const bool too_small = std::any_of(draw.begin(), draw.end(),
                                       [norm](double x) { return x / norm < kDirectionFloor; });
    if (too_small) continue;
    out.push_back(Direction::normalize(draw));
  }
  return make_grid(std::move(out), GridScheme::gaussian_abs_mc, seed);
}

GridHandle equi_angular_grid_2d(std::size_t count) {
  if (count < 1) throw InvalidArgument("equi-angular grid needs at least one direction");
  std::vector<Direction> out;
  out.reserve(count);
  const double step = (std::numbers::pi / 2.0) / static_cast<double>(count);
  for (std::size_t k = 1; k <= count; ++k) {
    const double theta = (static_cast<double>(k) - 0.5) * step;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    out.push_back(Direction({c, s}));
  }
  return make_grid(std::move(out), GridScheme::equi_angular_2d);
}

GridHandle unit_grid_1d() {
  return make_grid({Direction({1.0})}, GridScheme::user_supplied);
}

NearestDirection nearest_direction(const DirectionGrid& grid, std::span<const double> lam) {
  if (lam.size() != grid.dim()) throw InvalidArgument("direction dimension does not match grid");
  std::size_t best = 0;
  double best_dot = -2.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto d = grid.direction(k);
    double dot = 0.0;
    for (std::size_t m = 0; m < d.size(); ++m) dot += d[m] * lam[m];
    if (dot > best_dot) {
      best_dot = dot;
      best = k;
    }
  }
  return {best, std::acos(std::clamp(best_dot, -1.0, 1.0))};
}

}  // namespace polarfront
