#include "polarfront/decision.hpp"

#include <cmath>

#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/scalarisation.hpp"

namespace polarfront {

InputDecision select_best_input(const ObjectiveTable& table, const ObjectiveVector& target,
                                const ReferenceVector& eta, const ScoringSpec& scoring) {
  if (target.dim() != table.dim() || eta.dim() != table.dim()) {
    throw InvalidArgument("target, reference and table dimensions differ");
  }
  const auto [lam, target_length] = to_polar(target, eta);
  InputDecision out{0, {}, std::vector<double>(table.inputs()), target_length};
  for (std::size_t x = 0; x < table.inputs(); ++x) {
    CompensatedSum acc;
    for (std::size_t n = 0; n < table.samples(); ++n) {
      const double s = length_scalarisation(table.value(n, x), eta.values(), lam.components());
      acc.add(scoring.score(s, target_length, table.dim()));
    }
    out.losses[x] = acc.value() / static_cast<double>(table.samples());
    if (out.losses[x] < out.losses[out.index]) out.index = x;
  }
  out.id = table.input_ids()[out.index];
  return out;
}

AffineNormalizer::AffineNormalizer(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw InvalidArgument("bounds must be non-empty and of equal dimension");
  }
  for (std::size_t m = 0; m < lower_.size(); ++m) {
    if (!std::isfinite(lower_[m]) || !std::isfinite(upper_[m]) || !(upper_[m] > lower_[m])) {
      throw InvalidArgument("upper bound must exceed lower bound in objective " + std::to_string(m));
    }
  }
}

std::vector<double> AffineNormalizer::forward(std::span<const double> y) const {
  if (y.size() != dim()) throw InvalidArgument("vector dimension does not match bounds");
  std::vector<double> out(y.size());
  for (std::size_t m = 0; m < y.size(); ++m) out[m] = (y[m] - lower_[m]) / (upper_[m] - lower_[m]);
  return out;
}

std::vector<double> AffineNormalizer::inverse(std::span<const double> z) const {
  if (z.size() != dim()) throw InvalidArgument("vector dimension does not match bounds");
  std::vector<double> out(z.size());
  for (std::size_t m = 0; m < z.size(); ++m) out[m] = lower_[m] + z[m] * (upper_[m] - lower_[m]);
  return out;
}

ReferenceVector AffineNormalizer::default_reference() const {
  std::vector<double> eta(dim());
  for (std::size_t m = 0; m < eta.size(); ++m) eta[m] = lower_[m] - 0.2 * (upper_[m] - lower_[m]);
  return ReferenceVector(std::move(eta));
}

NormalizedObjectives normalize_objectives(std::span<const ObjectiveVector> points,
                                          std::vector<double> lower, std::vector<double> upper) {
  AffineNormalizer norm(std::move(lower), std::move(upper));
  std::vector<ObjectiveVector> out;
  out.reserve(points.size());
  for (const auto& y : points) out.emplace_back(norm.forward(y.values()));
  auto eta = norm.default_reference();
  return {std::move(out), std::move(eta), std::move(norm)};
}

Direction reweighted_direction(std::span<const double> weights, std::span<const double> lower,
                               std::span<const double> upper) {
  if (weights.size() != lower.size() || weights.size() != upper.size()) {
    throw InvalidArgument("weights and bounds must have equal dimension");
  }
  const double wn = euclidean_norm(weights);
  std::vector<double> r(weights.size());
  for (std::size_t m = 0; m < r.size(); ++m) {
    if (!std::isfinite(weights[m]) || !(weights[m] > 0.0)) {
      throw InvalidArgument("weights must be positive");
    }
    if (!(upper[m] > lower[m])) throw InvalidArgument("upper bound must exceed lower bound");
    r[m] = (upper[m] - lower[m]) * (weights[m] / wn);
  }
  return Direction::normalize(r);
}

}  // namespace polarfront
