#include "polarfront/front_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polarfront/error.hpp"
#include "polarfront/hypervolume.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/scalarisation.hpp"

namespace polarfront {

ScoringSpec ScoringSpec::pinball(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("pinball level must lie strictly inside (0, 1)");
  }
  return ScoringSpec(Kind::pinball, alpha);
}

ScoringSpec ScoringSpec::parse(const std::string& text) {
  if (text == "squared") return squared();
  if (text == "hv-absolute" || text == "hv") return hv_absolute();
  const std::string prefix = "pinball:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    const std::string tail = text.substr(prefix.size());
    double alpha = 0.0;
    try {
      alpha = std::stod(tail, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse pinball level '" + tail + "'");
    }
    if (used != tail.size()) throw InvalidArgument("cannot parse pinball level '" + tail + "'");
    return pinball(alpha);
  }
  throw InvalidArgument("unknown scoring rule '" + text + "'");
}

std::string ScoringSpec::name() const {
  switch (kind_) {
    case Kind::squared:
      return "squared";
    case Kind::pinball:
      return "pinball:" + std::to_string(alpha_);
    case Kind::hv_absolute:
      return "hv-absolute";
  }
  return "squared";
}

double ScoringSpec::score(double estimate, double observed, std::size_t dim) const {
  switch (kind_) {
    case Kind::squared: {
      const double d = estimate - observed;
      return d * d;
    }
    case Kind::pinball: {
      const double indicator = observed <= estimate ? 1.0 : 0.0;
      return (indicator - alpha_) * (estimate - observed);
    }
    case Kind::hv_absolute: {
      const auto tau = TransformSpec::hypervolume(dim);
      return std::abs(tau(estimate) - tau(observed));
    }
  }
  return 0.0;
}

TransformSpec::TransformSpec(Kind kind, std::size_t dim, std::string tag,
                             std::function<double(double)> fn)
    : kind_(kind),
      dim_(dim),
      log_constant_(kind == Kind::hypervolume_power ? std::log(hv_constant(dim)) : 0.0),
      tag_(std::move(tag)),
      fn_(std::move(fn)) {}

TransformSpec TransformSpec::identity() { return TransformSpec(Kind::identity, 0, "identity", {}); }

TransformSpec TransformSpec::hypervolume(std::size_t dim) {
  if (dim < 1) throw InvalidArgument("hypervolume transform needs dimension >= 1");
  return TransformSpec(Kind::hypervolume_power, dim, "hypervolume", {});
}

TransformSpec TransformSpec::user_monotone(std::string tag, std::function<double(double)> fn) {
  if (!fn) throw InvalidArgument("user transform must be callable");
  return TransformSpec(Kind::user_monotone, 0, std::move(tag), std::move(fn));
}

double TransformSpec::operator()(double x) const {
  switch (kind_) {
    case Kind::identity:
      return x;
    case Kind::hypervolume_power:
      if (x <= 0.0) return 0.0;
      if (dim_ >= 8) return std::exp(log_constant_ + static_cast<double>(dim_) * std::log(x));
      return std::exp(log_constant_) * std::pow(x, static_cast<double>(dim_));
    case Kind::user_monotone:
      return fn_(x);
  }
  return x;
}

double point_front_length(const PointFront& points, std::span<const double> lam) {
  const auto eta = points.reference().values();
  double best = 0.0;
  for (const auto& p : points.points()) {
    best = std::max(best, length_scalarisation(p.values(), eta, lam));
  }
  return best;
}

GridFront front_from_points(const PointFront& points, const GridHandle& grid) {
  if (!grid) throw InvalidArgument("front construction needs a grid");
  if (grid->dim() != points.dim()) throw InvalidArgument("grid dimension does not match points");
  std::vector<double> lengths(grid->size());
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    lengths[k] = point_front_length(points, grid->direction(k));
  }
  return GridFront(points.reference(), grid, std::move(lengths));
}

namespace {

template <class Op>
GridFront combine(const GridFront& a, const GridFront& b, Op op) {
  require_compatible(a, b);
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(a.length(k), b.length(k));
  return GridFront(a.reference(), a.grid(), std::move(out));
}

}  // namespace

GridFront union_fronts(const GridFront& a, const GridFront& b) {
  return combine(a, b, [](double x, double y) { return std::max(x, y); });
}

GridFront add_fronts(const GridFront& a, const GridFront& b) {
  return combine(a, b, [](double x, double y) { return x + y; });
}

GridFront scale_front(const GridFront& a, double factor) {
  if (!std::isfinite(factor) || !(factor > 0.0)) {
    throw InvalidArgument("scale factor must be finite and positive");
  }
  std::vector<double> out(a.lengths().begin(), a.lengths().end());
  for (double& l : out) l *= factor;
  return GridFront(a.reference(), a.grid(), std::move(out));
}

double r2_utility(const PointFront& points, const GridHandle& grid, const TransformSpec& transform) {
  if (!grid) throw InvalidArgument("utility needs a grid");
  if (grid->dim() != points.dim()) throw InvalidArgument("grid dimension does not match points");
  CompensatedSum acc;
  for (std::size_t k = 0; k < grid->size(); ++k) {
    acc.add(transform(point_front_length(points, grid->direction(k))));
  }
  return acc.value() / static_cast<double>(grid->size());
}

double r2_utility(const GridFront& front, const TransformSpec& transform) {
  CompensatedSum acc;
  for (double l : front.lengths()) acc.add(transform(l));
  return acc.value() / static_cast<double>(front.size());
}

double frontier_loss(const GridFront& a, const GridFront& b, const ScoringSpec& scoring) {
  require_compatible(a, b);
  CompensatedSum acc;
  for (std::size_t k = 0; k < a.size(); ++k) {
    acc.add(scoring.score(a.length(k), b.length(k), a.dim()));
  }
  return acc.value() / static_cast<double>(a.size());
}

double hypervolume_distance(const GridFront& a, const GridFront& b) {
  require_compatible(a, b);
  const double u = grid_hypervolume(union_fronts(a, b));
  const double d = 2.0 * u - grid_hypervolume(a) - grid_hypervolume(b);
  return std::max(d, 0.0);
}

}  // namespace polarfront
