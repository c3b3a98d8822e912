#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/hypervolume.hpp"
#include "polarfront/scalarisation.hpp"
#include "polarfront/statistics.hpp"

using namespace polarfront;

namespace {

// Rows with constant lengths, one value per row.
FrontEnsemble constant_rows(const GridHandle& g, const std::vector<double>& per_row) {
  std::vector<double> flat;
  for (double l : per_row) flat.insert(flat.end(), g->size(), l);
  return FrontEnsemble(fixture::zero_reference(g->dim()), g, per_row.size(), flat);
}

}  // namespace

TEST_SUITE("front_stats") {

TEST_CASE("ensemble from an objective table") {
  const auto g = equi_angular_grid_2d(64);
  // two deterministic inputs, three identical samples
  std::vector<double> values;
  for (int n = 0; n < 3; ++n) values.insert(values.end(), {1.0, 2.0, 2.0, 1.0});
  auto table = std::make_shared<const ObjectiveTable>(std::vector<std::string>{"a", "b"}, 3, 2, values);
  const auto e = ensemble_from_objective_table(table, ReferenceVector{0.0, 0.0}, g);
  const auto want = front_from_points(
      PointFront(ReferenceVector{0.0, 0.0}, {ObjectiveVector{1.0, 2.0}, ObjectiveVector{2.0, 1.0}}), g);
  for (std::size_t n = 0; n < 3; ++n) {
    for (std::size_t k = 0; k < g->size(); ++k) CHECK(e.length(n, k) == want.length(k));
  }
  // input order does not matter
  std::vector<double> swapped;
  for (int n = 0; n < 3; ++n) swapped.insert(swapped.end(), {2.0, 1.0, 1.0, 2.0});
  auto table2 = std::make_shared<const ObjectiveTable>(std::vector<std::string>{"b", "a"}, 3, 2, swapped);
  const auto e2 = ensemble_from_objective_table(table2, ReferenceVector{0.0, 0.0}, g);
  CHECK(std::equal(e.raw().begin(), e.raw().end(), e2.raw().begin()));
  CHECK_THROWS_AS(ObjectiveTable({}, 1, 2, {}), InvalidArgument);
  CHECK_THROWS_AS(ensemble_from_objective_table(nullptr, ReferenceVector{0.0, 0.0}, g), InvalidArgument);
}

TEST_CASE("exact directional lengths through the source") {
  const auto g = equi_angular_grid_2d(8);
  auto table = std::make_shared<const ObjectiveTable>(std::vector<std::string>{"a", "b"}, 1, 2,
                                                      std::vector<double>{1.0, 2.0, 2.0, 1.0});
  const auto e = ensemble_from_objective_table(table, ReferenceVector{0.0, 0.0}, g);
  const Direction lam({0.6, 0.8});
  const auto exact = e.lengths_along(lam.components());
  CHECK(exact.exact);
  CHECK(exact.lengths[0] == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  const FrontEnsemble no_source(e.reference(), g, 1, std::vector<double>(e.raw().begin(), e.raw().end()));
  const auto looked_up = no_source.lengths_along(lam.components());
  CHECK_FALSE(looked_up.exact);
  CHECK(looked_up.angular_error > 0.0);
}

TEST_CASE("mean front") {
  const auto g = equi_angular_grid_2d(16);
  const auto e = constant_rows(g, {1.0, 3.0});
  const auto m = mean_front(e);
  for (double l : m.lengths()) CHECK(l == 2.0);
  const auto same = mean_front(constant_rows(g, {1.5, 1.5, 1.5}));
  for (double l : same.lengths()) CHECK(l == 1.5);
}

TEST_CASE("bootstrap fronts") {
  std::mt19937_64 rng(1);
  const auto g = equi_angular_grid_2d(32);
  const auto e = fixture::random_valid_ensemble(rng, 2, 12, g);
  const auto boots = bayesian_bootstrap_front(e, 20, 99);
  CHECK(boots.size() == 20);
  for (std::size_t k = 0; k < g->size(); ++k) {
    const auto col = e.column(k);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    for (const auto& b : boots) {
      CHECK(b.length(k) >= *lo - 1e-12);
      CHECK(b.length(k) <= *hi + 1e-12);
    }
  }
  const auto again = bayesian_bootstrap_front(e, 20, 99);
  CHECK(std::equal(boots[7].lengths().begin(), boots[7].lengths().end(), again[7].lengths().begin()));

  const auto single = constant_rows(g, {2.5});
  for (const auto& b : bayesian_bootstrap_front(single, 5, 3)) CHECK(b.length(4) == doctest::Approx(2.5));

  const std::vector<double> uniform(e.rows(), 1.0 / static_cast<double>(e.rows()));
  const auto wf = weighted_front(e, uniform);
  const auto mf = mean_front(e);
  for (std::size_t k = 0; k < g->size(); ++k) CHECK(wf.length(k) == doctest::Approx(mf.length(k)).epsilon(1e-14));
  CHECK_THROWS_AS(bayesian_bootstrap_front(e, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(weighted_front(e, std::vector<double>(e.rows(), 0.5)), InvalidArgument);
}

TEST_CASE("length covariance") {
  const auto g = equi_angular_grid_2d(4);
  const auto e = constant_rows(g, {1.0, 3.0});
  CHECK(length_covariance(e, 0, 0) == doctest::Approx(2.0));
  CHECK(length_covariance(constant_rows(g, {2.0, 2.0, 2.0}), 1, 2) == 0.0);
  const auto m = covariance_matrix_pair(e, 0, 3);
  double dot = 0.0;
  for (std::size_t c = 0; c < 2; ++c) dot += g->direction(0)[c] * g->direction(3)[c];
  CHECK(m.trace() == doctest::Approx(length_covariance(e, 0, 3) * dot).epsilon(1e-14));
  CHECK_THROWS_AS(length_covariance(constant_rows(g, {1.0}), 0, 0), InsufficientData);
}

TEST_CASE("deviation surfaces") {
  const auto g = equi_angular_grid_2d(8);
  std::mt19937_64 rng(6);
  const auto e = fixture::random_valid_ensemble(rng, 2, 10, g);
  const auto zero = deviation_surfaces(e, 0.0);
  const auto mean = mean_front(e);
  for (std::size_t k = 0; k < g->size(); ++k) {
    CHECK(zero.upper.length(k) == doctest::Approx(mean.length(k)));
    CHECK(zero.lower.length(k) == doctest::Approx(mean.length(k)));
  }
  const auto wide = deviation_surfaces(e, 50.0);
  for (double l : wide.lower.lengths()) CHECK(l >= 0.0);
  const auto flat = deviation_surfaces(constant_rows(g, {2.0, 2.0}), 3.0);
  for (double l : flat.upper.lengths()) CHECK(l == doctest::Approx(2.0));
  CHECK_THROWS_AS(deviation_surfaces(constant_rows(g, {2.0}), 1.0), InsufficientData);
}

TEST_CASE("quantile fronts") {
  const auto g = make_grid({Direction({0.6, 0.8})}, GridScheme::user_supplied);
  std::vector<double> col;
  for (int i = 100; i >= 1; --i) col.push_back(i / 100.0);
  const FrontEnsemble e(ReferenceVector{0.0, 0.0}, g, 100, col);
  CHECK(quantile_front(e, 0.05).length(0) == 0.05);
  CHECK(quantile_front(e, 0.07).length(0) == 0.07);
  CHECK(quantile_front(e, 0.999).length(0) == 1.0);

  std::mt19937_64 rng(2);
  const auto g2 = equi_angular_grid_2d(64);
  const auto r = fixture::random_valid_ensemble(rng, 2, 30, g2);
  const auto q1 = quantile_front(r, 0.2);
  const auto q2 = quantile_front(r, 0.8);
  for (std::size_t k = 0; k < g2->size(); ++k) CHECK(q1.length(k) <= q2.length(k));
  CHECK_THROWS_AS(quantile_front(r, 1.0), InvalidArgument);
}

TEST_CASE("domination probability") {
  const auto g = equi_angular_grid_2d(4);
  const auto e = constant_rows(g, {1.0, 2.0, 3.0, 4.0});
  const auto lam = g->at(1);
  CHECK(domination_probability(e, from_polar(e.reference(), lam, 2.5)) == 0.5);
  CHECK(domination_probability(e, from_polar(e.reference(), lam, 0.5)) == 1.0);
  CHECK(domination_probability(e, from_polar(e.reference(), lam, 5.0)) == 0.0);
  CHECK_THROWS_AS(domination_probability(e, ObjectiveVector{-1.0, 1.0}), DomainError);

  // boundary of the alpha-quantile front is covered with probability >= 1 - alpha (one rank)
  std::mt19937_64 rng(13);
  const auto g2 = equi_angular_grid_2d(32);
  const auto r = fixture::random_valid_ensemble(rng, 2, 40, g2);
  for (double alpha : {0.1, 0.3, 0.5, 0.9}) {
    const auto q = quantile_front(r, alpha);
    for (std::size_t k = 0; k < g2->size(); k += 5) {
      const auto y = from_polar(r.reference(), g2->at(k), q.length(k));
      CHECK(domination_probability(r, y) >= 1.0 - alpha - 1.0 / 40.0);
    }
  }
}

TEST_CASE("deviation probability") {
  const auto g = equi_angular_grid_2d(4);
  const auto a = constant_rows(g, {2.0, 2.0});
  const auto b = constant_rows(g, {3.0, 3.0});
  const auto lam = g->at(2);
  CHECK(deviation_probability(a, b, from_polar(a.reference(), lam, 2.5)) == 1.0);
  CHECK(deviation_probability(a, b, from_polar(a.reference(), lam, 1.0)) == 0.0);
  CHECK(deviation_probability(a, a, from_polar(a.reference(), lam, 2.0)) == 0.0);
  CHECK_THROWS_AS(deviation_probability(a, constant_rows(g, {1.0}), from_polar(a.reference(), lam, 1.0)),
                  InvalidArgument);
}

TEST_CASE("Vorob'ev quantile equals the complementary quantile") {
  std::mt19937_64 rng(4);
  const auto g = equi_angular_grid_2d(64);
  const auto e = fixture::random_valid_ensemble(rng, 2, 25, g);
  for (double alpha : {0.05, 0.2, 0.5, 0.8, 0.95}) {
    const auto v = vorobev_quantile_front(e, alpha);
    const auto q = quantile_front(e, 1.0 - alpha);
    CHECK(std::equal(v.lengths().begin(), v.lengths().end(), q.lengths().begin()));
  }
  const auto low = vorobev_quantile_front(e, 0.999);
  for (std::size_t k = 0; k < g->size(); ++k) {
    const auto col = e.column(k);
    CHECK(low.length(k) == *std::min_element(col.begin(), col.end()));
  }
}

TEST_CASE("Vorob'ev mean on nested fronts") {
  const auto g = equi_angular_grid_2d(128);
  const auto e = constant_rows(g, {1.0, 3.0});
  const auto vm = vorobev_mean_front(e);
  const double c2 = hv_constant(2);
  // enumeration: the two quantile levels give HV c*1 and c*9, target c*5
  CHECK(vm.expected_hv == doctest::Approx(5.0 * c2).epsilon(1e-12));
  CHECK(vm.converged);
  CHECK(vm.alpha_star <= 0.5);
  CHECK(vm.front.length(0) == 3.0);
  CHECK(vm.hv_at_star >= vm.expected_hv);
  CHECK(vm.hv_above <= vm.expected_hv);
  CHECK(check_pareto_conditions(vm.front, 1e-9).valid());

  const auto flat = constant_rows(g, {2.0, 2.0, 2.0});
  const auto vf = vorobev_mean_front(flat);
  CHECK(vf.front.length(3) == 2.0);
  CHECK(vf.hv_at_star == doctest::Approx(vf.expected_hv).epsilon(1e-14));
}

TEST_CASE("Vorob'ev mean brackets the expected hypervolume on random ensembles") {
  std::mt19937_64 rng(21);
  const auto g = sample_directions(3, 256, 5);
  for (int rep = 0; rep < 10; ++rep) {
    const auto e = fixture::random_valid_ensemble(rng, 3, 5 + rep * 4, g);
    const auto vm = vorobev_mean_front(e);
    CHECK(vm.converged);
    CHECK(vm.hv_at_star >= vm.expected_hv * (1 - 1e-12));
    CHECK(vm.hv_above <= vm.expected_hv * (1 + 1e-12));
    CHECK(vm.alpha_star <= vm.alpha_above);
  }
}

TEST_CASE("Vorob'ev deviation") {
  const auto g = equi_angular_grid_2d(64);
  const auto flat = constant_rows(g, {2.0, 2.0});
  CHECK(vorobev_deviation(flat, fixture::constant_front(g, 2.0)) == 0.0);

  const auto e = constant_rows(g, {1.0, 3.0});
  const auto mean = mean_front(e);
  const double d_mean = vorobev_deviation(e, mean);
  CHECK(d_mean <= vorobev_deviation(e, e.row_front(0)) * (1 + 1e-12));
  CHECK(d_mean <= vorobev_deviation(e, e.row_front(1)) * (1 + 1e-12));
  const auto vm = vorobev_mean_front(e);
  CHECK(vorobev_deviation(e, vm.front) <= vorobev_deviation(e, e.row_front(0)) * (1 + 1e-12));
  CHECK(vorobev_deviation(constant_rows(g, {3.0, 1.0}), mean) == doctest::Approx(d_mean).epsilon(1e-14));
}

TEST_CASE("functional fronts") {
  std::mt19937_64 rng(10);
  const auto g = equi_angular_grid_2d(16);
  const auto e = fixture::random_valid_ensemble(rng, 2, 20, g);
  const auto sq = functional_front(e, ScoringSpec::squared());
  const auto mean = mean_front(e);
  CHECK(std::equal(sq.lengths().begin(), sq.lengths().end(), mean.lengths().begin()));
  const auto pin = functional_front(e, ScoringSpec::pinball(0.3));
  const auto q = quantile_front(e, 0.3);
  CHECK(std::equal(pin.lengths().begin(), pin.lengths().end(), q.lengths().begin()));
  // the pinball minimiser beats nearby candidates on the empirical score
  for (std::size_t k = 0; k < g->size(); ++k) {
    const auto col = e.column(k);
    auto loss = [&](double x) {
      double s = 0.0;
      for (double y : col) s += ScoringSpec::pinball(0.3).score(x, y, 2);
      return s;
    };
    CHECK(loss(pin.length(k)) <= loss(pin.length(k) * 1.01) + 1e-12);
    CHECK(loss(pin.length(k)) <= loss(pin.length(k) * 0.99) + 1e-12);
  }
  CHECK_THROWS_AS(functional_front(e, ScoringSpec::hv_absolute()), InvalidArgument);
}

TEST_CASE("closure of statistics over valid ensembles") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t dim = 2 + rep % 2;
    const auto g = fixture::grid_for(dim, 64, static_cast<std::uint64_t>(rep));
    const auto e = fixture::random_valid_ensemble(rng, dim, 3 + rep, g);
    CHECK(check_pareto_conditions(mean_front(e), 1e-9).valid());
    for (double a : {0.1, 0.5, 0.9}) CHECK(check_pareto_conditions(quantile_front(e, a), 1e-9).valid());
    for (const auto& b : bayesian_bootstrap_front(e, 3, 1)) CHECK(check_pareto_conditions(b, 1e-9).valid());
  }
}

}  // TEST_SUITE
