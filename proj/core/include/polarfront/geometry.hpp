#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace polarfront {

namespace detail {

// Finite real vector with at least one component. The tag keeps objective
// vectors and reference vectors from being mixed up at call sites.
template <class Tag>
class FiniteVector {
 public:
  FiniteVector() = default;
  explicit FiniteVector(std::vector<double> values);
  explicit FiniteVector(std::span<const double> values)
      : FiniteVector(std::vector<double>(values.begin(), values.end())) {}
  FiniteVector(std::initializer_list<double> values)
      : FiniteVector(std::vector<double>(values)) {}

  std::size_t dim() const noexcept { return values_.size(); }
  double operator[](std::size_t m) const noexcept { return values_[m]; }
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const FiniteVector&, const FiniteVector&) = default;

 private:
  std::vector<double> values_;
};

struct ObjectiveTag {};
struct ReferenceTag {};

}  // namespace detail

/// A vector in objective space, maximisation convention.
using ObjectiveVector = detail::FiniteVector<detail::ObjectiveTag>;
/// The anchor of the polar coordinate system.
using ReferenceVector = detail::FiniteVector<detail::ReferenceTag>;

/// Positive unit vector.
class Direction {
 public:
  /// Accepts components that are all > 0 and already have unit norm
  /// (within 1e-12).
  explicit Direction(std::vector<double> components);
  Direction(std::initializer_list<double> components)
      : Direction(std::vector<double>(components)) {}

  /// Scales a strictly positive vector to unit length.
  static Direction normalize(std::span<const double> positive);

  std::size_t dim() const noexcept { return components_.size(); }
  double operator[](std::size_t m) const noexcept { return components_[m]; }
  std::span<const double> components() const noexcept { return components_; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  struct Unchecked {};
  Direction(std::vector<double> components, Unchecked) : components_(std::move(components)) {}
  std::vector<double> components_;
};

enum class GridScheme { equi_angular_2d, gaussian_abs_mc, user_supplied };

std::string_view to_string(GridScheme scheme) noexcept;
GridScheme grid_scheme_from_string(std::string_view name);

/// Ordered, immutable set of directions shared by every front built on it.
class DirectionGrid {
 public:
  DirectionGrid(std::vector<Direction> directions, GridScheme scheme,
                std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return size_; }
  GridScheme scheme() const noexcept { return scheme_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  std::span<const double> direction(std::size_t k) const noexcept {
    return {data_.data() + k * dim_, dim_};
  }
  Direction at(std::size_t k) const;

  /// Directions compare by value; scheme and seed are metadata.
  bool same_directions(const DirectionGrid& other) const noexcept;

 private:
  std::size_t dim_ = 0;
  std::size_t size_ = 0;
  GridScheme scheme_;
  std::optional<std::uint64_t> seed_;
  std::vector<double> data_;
};

using GridHandle = std::shared_ptr<const DirectionGrid>;

GridHandle make_grid(std::vector<Direction> directions, GridScheme scheme,
                     std::optional<std::uint64_t> seed = std::nullopt);

/// True when both handles describe the same direction set.
bool same_grid(const GridHandle& a, const GridHandle& b) noexcept;

/// Polar surface: eta + lengths[k] * direction(k) over a shared grid.
class GridFront {
 public:
  GridFront(ReferenceVector reference, GridHandle grid, std::vector<double> lengths);

  const ReferenceVector& reference() const noexcept { return reference_; }
  const GridHandle& grid() const noexcept { return grid_; }
  std::size_t dim() const noexcept { return reference_.dim(); }
  std::size_t size() const noexcept { return lengths_.size(); }
  double length(std::size_t k) const noexcept { return lengths_[k]; }
  std::span<const double> lengths() const noexcept { return lengths_; }

  /// All lengths zero: the front collapsed onto the reference vector.
  bool is_degenerate() const noexcept;

  /// eta + lengths[k] * lambda_k
  std::vector<double> point(std::size_t k) const;

 private:
  ReferenceVector reference_;
  GridHandle grid_;
  std::vector<double> lengths_;
};

/// Finite point set; its lengths are evaluated exactly on demand.
class PointFront {
 public:
  PointFront(ReferenceVector reference, std::vector<ObjectiveVector> points);

  const ReferenceVector& reference() const noexcept { return reference_; }
  const std::vector<ObjectiveVector>& points() const noexcept { return points_; }
  std::size_t dim() const noexcept { return reference_.dim(); }

 private:
  ReferenceVector reference_;
  std::vector<ObjectiveVector> points_;
};

/// Throws InvalidArgument unless both fronts share reference and grid.
void require_compatible(const GridFront& a, const GridFront& b);

}  // namespace polarfront
