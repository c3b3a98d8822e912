#include "polarfront/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polarfront/error.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/scalarisation.hpp"

namespace polarfront {

double hv_constant(std::size_t dim) {
  if (dim < 1) throw InvalidArgument("hypervolume constant needs dimension >= 1");
  const double m = static_cast<double>(dim);
  const double log_c = 0.5 * m * std::log(std::numbers::pi) - m * std::numbers::ln2 -
                       std::lgamma(0.5 * m + 1.0);
  return std::exp(log_c);
}

double hypervolume_mc(const PointFront& points, const GridHandle& grid) {
  return r2_utility(points, grid, TransformSpec::hypervolume(points.dim()));
}

double grid_hypervolume(const GridFront& front) {
  return r2_utility(front, TransformSpec::hypervolume(front.dim()));
}

namespace {

// Upper corners of the boxes [eta, a] for points strictly inside the
// truncated space, with exact duplicates and weakly dominated points removed.
std::vector<std::vector<double>> contributing_corners(const PointFront& points) {
  const auto eta = points.reference().values();
  std::vector<std::vector<double>> corners;
  for (const auto& p : points.points()) {
    if (strongly_dominates_reference(p.values(), eta)) {
      corners.emplace_back(p.values().begin(), p.values().end());
    }
  }
  std::vector<std::vector<double>> kept;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < corners.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool weak = std::equal(corners[j].begin(), corners[j].end(), corners[i].begin(),
                                   [](double a, double b) { return a >= b; });
      // identical points: keep the first copy only
      dominated = weak && (corners[j] != corners[i] || j < i);
    }
    if (!dominated) kept.push_back(corners[i]);
  }
  return kept;
}

double sweep_2d(std::vector<std::vector<double>> corners, std::span<const double> eta) {
  std::sort(corners.begin(), corners.end(),
            [](const auto& a, const auto& b) { return a[0] > b[0]; });
  double area = 0.0;
  double covered = eta[1];
  for (const auto& c : corners) {
    if (c[1] > covered) {
      area += (c[0] - eta[0]) * (c[1] - covered);
      covered = c[1];
    }
  }
  return area;
}

double inclusion_exclusion(const std::vector<std::vector<double>>& corners,
                           std::span<const double> eta) {
  if (corners.size() > kInclusionExclusionMaxPoints) {
    throw Unsupported("inclusion-exclusion is limited to 12 contributing points");
  }
  const std::size_t n = corners.size();
  const std::size_t dim = eta.size();
  double total = 0.0;
  std::vector<double> lo(dim);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::fill(lo.begin(), lo.end(), std::numeric_limits<double>::infinity());
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++bits;
      for (std::size_t m = 0; m < dim; ++m) lo[m] = std::min(lo[m], corners[i][m]);
    }
    double vol = 1.0;
    for (std::size_t m = 0; m < dim; ++m) vol *= lo[m] - eta[m];
    total += (bits % 2 == 1) ? vol : -vol;
  }
  return total;
}

}  // namespace

double hypervolume_exact_small(const PointFront& points) {
  const auto corners = contributing_corners(points);
  if (corners.empty()) return 0.0;
  if (points.dim() == 1) {
    double best = 0.0;
    for (const auto& c : corners) best = std::max(best, c[0] - points.reference()[0]);
    return best;
  }
  if (points.dim() == 2) return sweep_2d(corners, points.reference().values());
  return inclusion_exclusion(corners, points.reference().values());
}

double hypervolume_inclusion_exclusion(const PointFront& points) {
  const auto corners = contributing_corners(points);
  if (corners.empty()) return 0.0;
  return inclusion_exclusion(corners, points.reference().values());
}

}  // namespace polarfront
