#include "polarfront/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"

namespace polarfront {

namespace detail {

template <class Tag>
FiniteVector<Tag>::FiniteVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("vector must have at least one component");
  for (double x : values_) {
    if (!std::isfinite(x)) throw InvalidArgument("vector components must be finite");
  }
}

template class FiniteVector<ObjectiveTag>;
template class FiniteVector<ReferenceTag>;

}  // namespace detail

namespace {

void require_positive_finite(std::span<const double> xs) {
  if (xs.empty()) throw InvalidArgument("direction must have at least one component");
  for (double x : xs) {
    if (!std::isfinite(x) || !(x > 0.0)) {
      throw InvalidArgument("direction components must be finite and strictly positive");
    }
  }
}

}  // namespace

Direction::Direction(std::vector<double> components) : components_(std::move(components)) {
  require_positive_finite(components_);
  const double norm = euclidean_norm(components_);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InvalidArgument("direction must have unit Euclidean norm");
  }
}

Direction Direction::normalize(std::span<const double> positive) {
  require_positive_finite(positive);
  const double norm = euclidean_norm(positive);
  std::vector<double> out(positive.begin(), positive.end());
  for (double& x : out) x /= norm;
  require_positive_finite(out);
  return Direction(std::move(out), Unchecked{});
}

std::string_view to_string(GridScheme scheme) noexcept {
  switch (scheme) {
    case GridScheme::equi_angular_2d:
      return "equi-angular-2d";
    case GridScheme::gaussian_abs_mc:
      return "gaussian-abs-mc";
    case GridScheme::user_supplied:
      return "user-supplied";
  }
  return "user-supplied";
}

GridScheme grid_scheme_from_string(std::string_view name) {
  if (name == "equi-angular-2d") return GridScheme::equi_angular_2d;
  if (name == "gaussian-abs-mc") return GridScheme::gaussian_abs_mc;
  if (name == "user-supplied") return GridScheme::user_supplied;
  throw InvalidArgument("unknown grid scheme '" + std::string(name) + "'");
}

DirectionGrid::DirectionGrid(std::vector<Direction> directions, GridScheme scheme,
                             std::optional<std::uint64_t> seed)
    : scheme_(scheme), seed_(seed) {
  if (directions.empty()) throw InvalidArgument("direction grid must be non-empty");
  dim_ = directions.front().dim();
  size_ = directions.size();
  data_.reserve(dim_ * size_);
  for (const auto& d : directions) {
    if (d.dim() != dim_) throw InvalidArgument("grid directions must share one dimension");
    data_.insert(data_.end(), d.components().begin(), d.components().end());
  }
}

Direction DirectionGrid::at(std::size_t k) const {
  if (k >= size_) throw InvalidArgument("grid index out of range");
  const auto d = direction(k);
  return Direction(std::vector<double>(d.begin(), d.end()));
}

bool DirectionGrid::same_directions(const DirectionGrid& other) const noexcept {
  return dim_ == other.dim_ && size_ == other.size_ && data_ == other.data_;
}

GridHandle make_grid(std::vector<Direction> directions, GridScheme scheme,
                     std::optional<std::uint64_t> seed) {
  return std::make_shared<const DirectionGrid>(std::move(directions), scheme, seed);
}

bool same_grid(const GridHandle& a, const GridHandle& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_directions(*b);
}

GridFront::GridFront(ReferenceVector reference, GridHandle grid, std::vector<double> lengths)
    : reference_(std::move(reference)), grid_(std::move(grid)), lengths_(std::move(lengths)) {
  if (!grid_) throw InvalidArgument("front requires a direction grid");
  if (grid_->dim() != reference_.dim()) {
    throw InvalidArgument("grid dimension does not match reference dimension");
  }
  if (lengths_.size() != grid_->size()) {
    throw InvalidArgument("front needs exactly one length per grid direction");
  }
  for (double l : lengths_) {
    if (!std::isfinite(l) || l < 0.0) {
      throw InvalidArgument("projected lengths must be finite and non-negative");
    }
  }
}

bool GridFront::is_degenerate() const noexcept {
  return std::all_of(lengths_.begin(), lengths_.end(), [](double l) { return l == 0.0; });
}

std::vector<double> GridFront::point(std::size_t k) const {
  const auto lam = grid_->direction(k);
  std::vector<double> y(dim());
  for (std::size_t m = 0; m < y.size(); ++m) y[m] = reference_[m] + lengths_[k] * lam[m];
  return y;
}

PointFront::PointFront(ReferenceVector reference, std::vector<ObjectiveVector> points)
    : reference_(std::move(reference)), points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("point front needs at least one point");
  for (const auto& p : points_) {
    if (p.dim() != reference_.dim()) {
      throw InvalidArgument("point dimension does not match reference dimension");
    }
  }
}

void require_compatible(const GridFront& a, const GridFront& b) {
  if (!(a.reference() == b.reference())) {
    throw InvalidArgument("fronts have different reference vectors");
  }
  if (!same_grid(a.grid(), b.grid())) {
    throw InvalidArgument("fronts are defined on different direction grids");
  }
}

}  // namespace polarfront
