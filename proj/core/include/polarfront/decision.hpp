#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polarfront/ensemble.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/geometry.hpp"

namespace polarfront {

struct InputDecision {
  std::size_t index;
  std::string id;
  std::vector<double> losses;  ///< expected empirical loss per input
  double target_length;        ///< ||target - eta||
};

/// argmin over inputs of the mean over samples of
/// S(s(f(x, w_n); eta, lam*), ||target - eta||), lam* the optimal direction
/// of the target. Ties go to the lowest input index. Throws DomainError when
/// the target does not strongly dominate eta.
InputDecision select_best_input(const ObjectiveTable& table, const ObjectiveVector& target,
                                const ReferenceVector& eta, const ScoringSpec& scoring);

/// Component-wise affine map (y - l) / (u - l).
class AffineNormalizer {
 public:
  AffineNormalizer(std::vector<double> lower, std::vector<double> upper);

  std::size_t dim() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }
  std::vector<double> forward(std::span<const double> y) const;
  std::vector<double> inverse(std::span<const double> z) const;
  /// l - 0.2 (u - l), in original units.
  ReferenceVector default_reference() const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

struct NormalizedObjectives {
  std::vector<ObjectiveVector> points;
  ReferenceVector eta_default;  ///< original units
  AffineNormalizer normalizer;
};

NormalizedObjectives normalize_objectives(std::span<const ObjectiveVector> points,
                                          std::vector<double> lower, std::vector<double> upper);

/// Direction proportional to (u - l) * (w / ||w||): slider weights expressed
/// in normalised units, mapped back to the original objective scale.
Direction reweighted_direction(std::span<const double> weights, std::span<const double> lower,
                               std::span<const double> upper);

}  // namespace polarfront
