#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/projection.hpp"
#include "polarfront/scalarisation.hpp"
#include "polarfront/statistics.hpp"

using namespace polarfront;

namespace {

// Random positive vector with norm in (0.05, 0.95).
std::vector<double> random_fixed(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::uniform_real_distribution<double> r(0.05, 0.95);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  const double scale = r(rng) / euclidean_norm(v);
  for (auto& x : v) x *= scale;
  return v;
}

GridHandle slice_grid(std::size_t p, std::size_t k) {
  return p == 1 ? unit_grid_1d() : fixture::grid_for(p, k, 17);
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("slice spec validation") {
  const SliceSpec s(3, {0, 1}, {0.6});
  CHECK(s.complement() == std::vector<std::size_t>{2});
  CHECK(s.scale() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(SliceSpec(3, {}, {0.1, 0.1, 0.1}), InvalidArgument);
  CHECK_THROWS_AS(SliceSpec(3, {1, 0}, {0.5}), InvalidArgument);
  CHECK_THROWS_AS(SliceSpec(3, {0, 3}, {0.5}), InvalidArgument);
  CHECK_THROWS_AS(SliceSpec(3, {0, 1}, {1.0}), InvalidArgument);
  CHECK_THROWS_AS(SliceSpec(3, {0, 1}, {0.0}), InvalidArgument);
  CHECK_THROWS_AS(SliceSpec(3, {0, 1}, {0.3, 0.3}), InvalidArgument);
  CHECK_THROWS_AS(SliceSpec(4, {0, 1}, {0.8, 0.7}), InvalidArgument);
}

TEST_CASE("reconstruct direction") {
  const SliceSpec s(3, {0, 1}, {0.6});
  const auto d = reconstruct_direction(s, std::vector<double>{0.6, 0.8});
  CHECK(d[0] == doctest::Approx(0.48).epsilon(1e-14));
  CHECK(d[1] == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(d[2] == 0.6);

  const SliceSpec full(2, {0, 1}, {});
  const auto same = reconstruct_direction(full, std::vector<double>{0.6, 0.8});
  CHECK(same[0] == 0.6);
  CHECK(same[1] == 0.8);
  CHECK_THROWS_AS(reconstruct_direction(s, std::vector<double>{1.0}), InvalidArgument);

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t dim = 3 + rep % 3;
    const std::size_t p = 1 + rep % (dim - 1);
    std::vector<std::size_t> kept(p);
    for (std::size_t i = 0; i < p; ++i) kept[i] = i;
    const SliceSpec spec(dim, kept, random_fixed(rng, dim - p));
    const auto lam_grid = p == 1 ? unit_grid_1d() : sample_directions(p, 1, static_cast<std::uint64_t>(rep));
    const auto lam = lam_grid->direction(0);
    const auto out = reconstruct_direction(spec, lam);
    CHECK(std::abs(euclidean_norm(out.components()) - 1.0) < 1e-12);
  }
}

TEST_CASE("reconstruction is injective and covers the sphere") {
  // For M = 3 and P = 2, sweeping (v, lam) reaches every direction.
  const auto sub = equi_angular_grid_2d(200);
  std::vector<Direction> sweep;
  for (int i = 1; i < 200; ++i) {
    const SliceSpec spec(3, {0, 1}, {i / 200.0});
    for (std::size_t k = 0; k < sub->size(); ++k) sweep.push_back(reconstruct_direction(spec, sub->direction(k)));
  }
  const auto g = make_grid(sweep, GridScheme::user_supplied);
  const auto targets = sample_directions(3, 500, 8);
  for (std::size_t t = 0; t < targets->size(); ++t) {
    CHECK(nearest_direction(*g, targets->direction(t)).angle < 0.02);
  }
  const SliceSpec spec(3, {0, 1}, {0.3});
  const auto a = reconstruct_direction(spec, sub->direction(3));
  const auto b = reconstruct_direction(spec, sub->direction(4));
  CHECK_FALSE(a == b);
}

TEST_CASE("sphere slices have the closed-form length") {
  std::mt19937_64 rng(5);
  for (std::size_t dim : {3u, 4u, 5u}) {
    const auto g = fixture::grid_for(dim, 512, dim);
    const auto sphere = fixture::constant_front(g, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
      const std::size_t p = 1 + static_cast<std::size_t>(rep) % 2;
      std::vector<std::size_t> kept;
      for (std::size_t i = dim - p; i < dim; ++i) kept.push_back(i);
      const SliceSpec spec(dim, kept, random_fixed(rng, dim - p));
      const auto pr = project_front(sphere, spec, slice_grid(p, 33));
      const double want = std::sqrt(1.0 - std::pow(euclidean_norm(spec.fixed()), 2));
      for (double l : pr.front.lengths()) CHECK(std::abs(l - want) < 1e-12);
      CHECK_FALSE(pr.exact);
    }
  }
  const auto g = fixture::grid_for(3, 256, 1);
  const SliceSpec spec(3, {0, 1}, {0.6});
  const auto pr = project_front(fixture::constant_front(g, 1.0), spec, equi_angular_grid_2d(181));
  for (double l : pr.front.lengths()) CHECK(std::abs(l - 0.8) < 1e-12);
  for (const auto& t : fixed_component_trace(fixture::constant_front(g, 1.0), spec, equi_angular_grid_2d(9))) {
    CHECK(t.size() == 1);
    CHECK(t[0] == doctest::Approx(0.6).epsilon(1e-15));
  }
}

TEST_CASE("full slice reproduces the front") {
  std::mt19937_64 rng(9);
  const auto pf = fixture::random_point_front(rng, 2, 5);
  const auto g = equi_angular_grid_2d(64);
  const auto pr = project_front(pf, SliceSpec(2, {0, 1}, {}), g);
  const auto f = front_from_points(pf, g);
  CHECK(pr.exact);
  for (std::size_t k = 0; k < g->size(); ++k) CHECK(pr.front.length(k) == doctest::Approx(f.length(k)).epsilon(1e-14));
}

TEST_CASE("point-set slices are exact rescalarisations") {
  std::mt19937_64 rng(12);
  const auto pf = fixture::random_point_front(rng, 3, 6);
  const SliceSpec spec(3, {0, 2}, {0.4});
  const auto sub = equi_angular_grid_2d(31);
  const auto pr = project_front(pf, spec, sub);
  std::vector<oracle::Vec> pts;
  for (const auto& p : pf.points()) pts.emplace_back(p.values().begin(), p.values().end());
  for (std::size_t k = 0; k < sub->size(); ++k) {
    const auto phi = reconstruct_direction(spec, sub->direction(k));
    const double want = oracle::bisection_length(pts, {0.0, 0.0, 0.0},
                                                 {phi[0], phi[1], phi[2]}) * spec.scale();
    CHECK(oracle::rel_err(pr.front.length(k), want) < 1e-9);
  }
  CHECK(pr.front.reference() == ReferenceVector{0.0, 0.0});
}

TEST_CASE("projected fronts of valid point sets stay valid") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t dim = 3 + rep % 2;
    const std::size_t p = 1 + (rep / 2) % 2;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < p; ++i) kept.push_back(i);
    const auto pf = fixture::random_point_front(rng, dim, 1 + rep % 7);
    const SliceSpec spec(dim, kept, random_fixed(rng, dim - p));
    const auto pr = project_front(pf, spec, slice_grid(p, 64));
    CHECK(check_pareto_conditions(pr.front, 1e-9).valid());
  }
}

TEST_CASE("fixed component trace") {
  std::mt19937_64 rng(4);
  const auto pf = fixture::random_point_front(rng, 3, 4);
  const SliceSpec spec(3, {0, 1}, {0.5});
  const auto sub = equi_angular_grid_2d(41);
  const auto pr = project_front(pf, spec, sub);
  const auto trace = fixed_component_trace(pf, spec, sub);
  REQUIRE(trace.size() == sub->size());
  for (std::size_t k = 0; k < sub->size(); ++k) {
    // projected length l * scale; the trace is eta + l * v
    const double l = pr.front.length(k) / spec.scale();
    CHECK(trace[k][0] == doctest::Approx(0.5 * l).epsilon(1e-12));
    CHECK(trace[k][0] > 0.0);
  }
  const auto [lo, hi] = std::minmax_element(trace.begin(), trace.end());
  CHECK((*hi)[0] > (*lo)[0]);
}

TEST_CASE("slice statistics") {
  const auto g = fixture::grid_for(3, 256, 2);
  const SliceSpec spec(3, {0, 1}, {0.6});
  const auto sub = equi_angular_grid_2d(25);
  const std::vector<double> alphas{0.05, 0.95};
  const auto flat = slice_statistics(fixture::sphere_ensemble(3, 5, g), spec, sub, alphas);
  for (std::size_t k = 0; k < sub->size(); ++k) {
    CHECK(std::abs(flat.mean.length(k) - 0.8) < 1e-12);
    CHECK(flat.quantiles[0].front.length(k) == flat.mean.length(k));
  }

  std::mt19937_64 rng(8);
  const auto e = fixture::random_valid_ensemble(rng, 3, 30, g);
  const auto st = slice_statistics(e, spec, sub, alphas);
  const auto projected_mean = project_front(mean_front(e), spec, sub);
  for (std::size_t k = 0; k < sub->size(); ++k) {
    CHECK(st.mean.length(k) == doctest::Approx(projected_mean.front.length(k)).epsilon(1e-12));
    CHECK(st.quantiles[0].front.length(k) <= st.quantiles[1].front.length(k));
  }
  CHECK(st.quantiles[1].alpha == 0.95);
  CHECK_FALSE(st.exact);
  CHECK(st.mean_trace.size() == sub->size());

  // With an objective-table source the slice is exact.
  std::vector<double> values;
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int n = 0; n < 10; ++n) {
    for (int x = 0; x < 4 * 3; ++x) values.push_back(u(rng));
  }
  auto table = std::make_shared<const ObjectiveTable>(std::vector<std::string>{"a", "b", "c", "d"}, 10, 3, values);
  const auto te = ensemble_from_objective_table(table, fixture::zero_reference(3), g);
  const auto ts = slice_statistics(te, spec, sub, alphas);
  CHECK(ts.exact);
  CHECK(ts.max_angular_error == 0.0);
  for (std::size_t k = 0; k < sub->size(); ++k) {
    const auto phi = reconstruct_direction(spec, sub->direction(k));
    double sum = 0.0;
    for (std::size_t n = 0; n < 10; ++n) {
      std::vector<oracle::Vec> pts;
      for (std::size_t x = 0; x < 4; ++x) {
        const auto v = table->value(n, x);
        pts.emplace_back(v.begin(), v.end());
      }
      sum += oracle::bisection_length(pts, {0.0, 0.0, 0.0}, {phi[0], phi[1], phi[2]});
    }
    CHECK(oracle::rel_err(ts.mean.length(k), sum / 10.0 * spec.scale()) < 1e-9);
  }
}

}  // TEST_SUITE
