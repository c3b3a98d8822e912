#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polarfront/decision.hpp"
#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/pollution.hpp"
#include "polarfront/scalarisation.hpp"
#include "polarfront/series.hpp"
#include "polarfront/statistics.hpp"

using namespace polarfront;
using namespace std::chrono;

namespace {

std::vector<ObjectiveVector> random_days(std::mt19937_64& rng, std::size_t count, double shift) {
  std::gamma_distribution<double> g(3.0, 1.0);
  std::vector<ObjectiveVector> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(ObjectiveVector{g(rng) - shift, g(rng) - shift, g(rng) - shift});
  return out;
}

}  // namespace

TEST_SUITE("workflows") {

TEST_CASE("iso-8601 timestamps") {
  CHECK(parse_iso8601("2020-03-01") == sys_days{2020y / March / 1});
  CHECK(parse_iso8601("2020-03-01T10:30") == sys_days{2020y / March / 1} + 10h + 30min);
  CHECK(parse_iso8601("2020-03-01 10:30:15") == sys_days{2020y / March / 1} + 10h + 30min + 15s);
  CHECK(parse_iso8601("2020-03-01T10:30:15.250Z") == sys_days{2020y / March / 1} + 10h + 30min + 15s);
  CHECK(parse_iso8601("2020-03-01T01:00+02:00") == sys_days{2020y / February / 29} + 23h);
  CHECK(parse_iso8601("2020-03-01T23:00-0130") == sys_days{2020y / March / 2} + 30min);
  CHECK(format_day(sys_days{2021y / January / 9}) == "2021-01-09");
  for (const char* bad : {"", "2020-13-01", "2020-02-30", "2020-03-01T", "2020-03-01T25:00", "2020/03/01",
                          "2020-03-01T10:30x"}) {
    CHECK_THROWS_AS(parse_iso8601(bad), InvalidArgument);
  }
}

TEST_CASE("series csv") {
  std::istringstream in(
      "timestamp,no2,o3\n"
      "2020-01-02T05:00,1,\n"
      "2020-01-01T12:00,NA,4\n"
      "2020-01-01T08:00,2,3\n"
      "2020-01-01T08:00,1,5\n");
  const auto ds = read_series_csv(in);
  CHECK(ds.labels() == std::vector<std::string>{"no2", "o3"});
  REQUIRE(ds.size() == 3);
  CHECK(ds.row(0)[0] == 2.0);  // duplicate timestamps merge by maximum
  CHECK(ds.row(0)[1] == 5.0);
  CHECK_FALSE(ds.row(1)[0].has_value());
  CHECK_FALSE(ds.row(2)[1].has_value());

  std::istringstream bad_header("time,no2\n2020-01-01,1\n");
  CHECK_THROWS_AS(read_series_csv(bad_header), InvalidArgument);
  std::istringstream ragged("timestamp,a,b\n2020-01-01,1\n");
  CHECK_THROWS_AS(read_series_csv(ragged), InvalidArgument);
  std::istringstream text("timestamp,a\n2020-01-01,high\n");
  CHECK_THROWS_AS(read_series_csv(text), InvalidArgument);
}

TEST_CASE("daily maxima") {
  const auto d1 = sys_days{2020y / June / 1};
  const auto d2 = sys_days{2020y / June / 2};
  const auto d3 = sys_days{2020y / June / 3};
  const SeriesDataset ds({"a", "b"},
                         {d1 + 1h, d1 + 5h, d2 + 2h, d3 + 1h},
                         {{1.0, 2.0}, {3.0, 1.0}, {std::nullopt, std::nullopt}, {std::nullopt, 7.0}});
  const auto days = daily_max(ds);
  REQUIRE(days.size() == 2);  // the second day has no readings
  CHECK(days[0].day == d1);
  CHECK(days[0].values[0] == 3.0);
  CHECK(days[0].values[1] == 2.0);
  CHECK(days[1].day == d3);
  CHECK_FALSE(days[1].values[0].has_value());

  const std::vector<std::size_t> both{0, 1}, second{1};
  CHECK(complete_vectors(days, both).size() == 1);
  const auto partial = complete_vectors(days, second);
  REQUIRE(partial.size() == 2);
  CHECK(partial[1] == ObjectiveVector{7.0});

  CHECK_THROWS_AS(daily_max(SeriesDataset({"a"}, {}, {})), InvalidArgument);

  const SeriesDataset years({"a"}, {d1, sys_days{2021y / March / 3}, sys_days{2021y / May / 1}},
                            {{1.0}, {2.0}, {3.0}});
  const auto groups = group_by_year(daily_max(years));
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].year == 2020);
  CHECK(groups[1].days.size() == 2);
}

TEST_CASE("period ensembles by day bootstrap") {
  std::mt19937_64 rng(1);
  const auto days = random_days(rng, 40, 0.0);
  const auto eta = fixture::zero_reference(3);
  const auto g = sample_directions(3, 128, 4);
  const auto pe = period_front_ensemble("2020", days, eta, g, 30, 7);
  CHECK(pe.ensemble.rows() == 30);
  const auto full = front_from_points(PointFront(eta, days), g);
  for (std::size_t n = 0; n < 30; ++n) {
    for (std::size_t k = 0; k < g->size(); ++k) CHECK(pe.ensemble.length(n, k) <= full.length(k));
  }
  // each row is the front of the resampled days
  const auto idx = day_resample_indices(40, 30, 7);
  std::vector<ObjectiveVector> pick;
  for (std::size_t c = 0; c < 40; ++c) pick.push_back(days[idx[3 * 40 + c]]);
  const auto row3 = front_from_points(PointFront(eta, pick), g);
  for (std::size_t k = 0; k < g->size(); ++k) CHECK(pe.ensemble.length(3, k) == row3.length(k));

  const auto single = period_front_ensemble("x", std::span(days).first(1), eta, g, 5, 3);
  const auto one = front_from_points(PointFront(eta, {days[0]}), g);
  for (std::size_t n = 0; n < 5; ++n) CHECK(single.ensemble.length(n, 11) == one.length(11));

  // a seed whose single resample is a permutation reproduces the full front
  const std::vector<ObjectiveVector> pair{days[0], days[1]};
  std::uint64_t seed = 0;
  while (true) {
    const auto i = day_resample_indices(2, 1, seed);
    if (i[0] != i[1]) break;
    ++seed;
  }
  const auto whole = period_front_ensemble("p", pair, eta, g, 1, seed);
  const auto ref = front_from_points(PointFront(eta, pair), g);
  for (std::size_t k = 0; k < g->size(); ++k) CHECK(whole.ensemble.length(0, k) == ref.length(k));

  CHECK_THROWS_AS(period_front_ensemble("e", {}, eta, g, 5, 1), InvalidArgument);
  CHECK_THROWS_AS(period_front_ensemble("e", days, eta, g, 0, 1), InvalidArgument);
  CHECK(day_resample_indices(10, 4, 9) == day_resample_indices(10, 4, 9));
}

TEST_CASE("polar lattice") {
  const auto g = equi_angular_grid_2d(8);
  const std::vector<double> fr{0.25, 0.5, 1.0};
  const auto lat = make_polar_lattice(g, fr, 4.0);
  CHECK(lat.size() == 24);
  CHECK(lat.radii == std::vector<double>{1.0, 2.0, 4.0});
  const std::vector<double> unsorted{0.5, 0.25}, zero{0.0, 0.5}, over{0.5, 1.5};
  CHECK_THROWS_AS(make_polar_lattice(g, unsorted, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_polar_lattice(g, zero, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_polar_lattice(g, over, 1.0), InvalidArgument);
  CHECK_THROWS_AS(make_polar_lattice(g, fr, 0.0), InvalidArgument);
}

TEST_CASE("pairwise domination maps") {
  std::mt19937_64 rng(5);
  const auto days = random_days(rng, 60, 0.0);
  const auto eta = fixture::zero_reference(3);
  const auto g = sample_directions(3, 64, 1);
  std::vector<PeriodEnsemble> periods{period_front_ensemble("a", days, eta, g, 40, 2)};
  const double bound = pair_bounding_length(periods, 0, 2);
  double want = 0.0;
  for (const auto& d : days) want = std::max(want, std::hypot(std::max(d[0], 0.0), std::max(d[2], 0.0)));
  CHECK(bound == doctest::Approx(want).epsilon(1e-14));

  std::vector<double> fr;
  for (int r = 1; r <= 20; ++r) fr.push_back(r / 20.0);
  const auto dirs = equi_angular_grid_2d(24);
  const auto lat = make_polar_lattice(dirs, fr, bound);
  const auto map = pairwise_domination_map(periods[0], 0, 2, lat);
  CHECK(map.values.size() == lat.size());
  CHECK(map.reference == ReferenceVector{0.0, 0.0});

  // oracle: a lattice point is dominated by row b when some resampled day covers it
  const auto idx = day_resample_indices(60, 40, 2);
  for (std::size_t k = 0; k < dirs->size(); k += 5) {
    const auto lam = dirs->direction(k);
    for (std::size_t r = 0; r < fr.size(); r += 3) {
      const double y0 = lat.radii[r] * lam[0], y1 = lat.radii[r] * lam[1];
      std::size_t hits = 0;
      for (std::size_t b = 0; b < 40; ++b) {
        bool covered = false;
        for (std::size_t c = 0; c < 60 && !covered; ++c) {
          const auto& d = days[idx[b * 60 + c]];
          covered = d[0] >= y0 - 1e-9 && d[2] >= y1 - 1e-9;
        }
        hits += covered;
      }
      CHECK(map.at(k, r) == doctest::Approx(hits / 40.0));
    }
    for (std::size_t r = 1; r < fr.size(); ++r) CHECK(map.at(k, r) <= map.at(k, r - 1));
  }
  for (double v : map.values) CHECK((v >= 0.0 && v <= 1.0));
  CHECK(map.at(0, fr.size() - 1) < 1.0);

  CHECK_THROWS_AS(pairwise_domination_map(periods[0], 1, 1, lat), InvalidArgument);
  CHECK_THROWS_AS(pairwise_domination_map(periods[0], 0, 3, lat), InvalidArgument);
}

TEST_CASE("signed changes") {
  std::mt19937_64 rng(6);
  const auto days = random_days(rng, 50, 0.0);
  std::vector<ObjectiveVector> lower;
  for (const auto& d : days) lower.push_back(ObjectiveVector{d[0] - 0.5, d[1] - 0.5, d[2] - 0.5});
  const ReferenceVector eta{-1.0, -1.0, -1.0};
  const auto g = sample_directions(3, 64, 3);
  std::vector<PeriodEnsemble> periods{period_front_ensemble("a", days, eta, g, 50, 9),
                                      period_front_ensemble("b", lower, eta, g, 50, 9)};
  std::vector<double> fr;
  for (int r = 1; r <= 10; ++r) fr.push_back(r / 10.0);
  const auto lat = make_polar_lattice(equi_angular_grid_2d(16), fr, pair_bounding_length(periods, 0, 1));
  const auto ma = pairwise_domination_map(periods[0], 0, 1, lat);
  const auto mb = pairwise_domination_map(periods[1], 0, 1, lat);
  const auto ch = signed_yearly_changes(ma, mb);
  CHECK(ch.mean_negative < 0.0);
  CHECK(ch.mean_positive == 0.0);

  const auto same = signed_yearly_changes(ma, ma);
  CHECK(same.mean_negative == 0.0);
  CHECK(same.mean_positive == 0.0);
  CHECK(same.total == 0.0);

  DominationMap shifted = ma;
  for (auto& v : shifted.values) v -= 0.1;
  const auto down = signed_yearly_changes(ma, shifted);
  CHECK(down.mean_negative == doctest::Approx(-0.1));
  CHECK(down.mean_positive == 0.0);

  double abs_mean = 0.0;
  for (double f : ch.field) abs_mean += std::abs(f);
  abs_mean /= static_cast<double>(ch.field.size());
  CHECK(ch.total == doctest::Approx(abs_mean).epsilon(1e-12));

  DominationMap other = ma;
  other.lattice.radii.back() *= 2.0;
  CHECK_THROWS_AS(signed_yearly_changes(ma, other), InvalidArgument);
}

TEST_CASE("input decisions") {
  // two inputs with deterministic scalarised values 2 and 3 along the diagonal
  const double d = std::numbers::sqrt2 / 2.0;
  auto table = std::make_shared<const ObjectiveTable>(
      std::vector<std::string>{"low", "high"}, 2, 2,
      std::vector<double>{2 * d, 2 * d, 3 * d, 3 * d, 2 * d, 2 * d, 3 * d, 3 * d});
  const ReferenceVector eta{0.0, 0.0};
  const auto target = ObjectiveVector{2.9 * d, 2.9 * d};
  const auto pick = select_best_input(*table, target, eta, ScoringSpec::squared());
  CHECK(pick.id == "high");
  CHECK(pick.index == 1);
  CHECK(pick.losses[0] == doctest::Approx(0.81));
  CHECK(pick.losses[1] == doctest::Approx(0.01));
  CHECK(pick.target_length == doctest::Approx(2.9));

  // planted exact hit has zero loss; ties go to the lowest index
  auto planted = std::make_shared<const ObjectiveTable>(
      std::vector<std::string>{"a", "b", "c"}, 1, 2, std::vector<double>{1.0, 1.0, 2.0, 1.0, 2.0, 1.0});
  const auto hit = select_best_input(*planted, ObjectiveVector{2.0, 1.0}, ReferenceVector{0.0, 0.0},
                                     ScoringSpec::squared());
  CHECK(hit.index == 1);
  CHECK(hit.losses[1] == 0.0);

  // 1-D argmin equivalence: nearest scalarised length wins
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> vals;
    std::vector<std::string> ids;
    for (int x = 0; x < 6; ++x) {
      ids.push_back("x" + std::to_string(x));
      vals.push_back(u(rng));
      vals.push_back(u(rng));
    }
    const ObjectiveTable t(ids, 1, 2, vals);
    const ObjectiveVector y{u(rng), u(rng)};
    const auto lam = optimal_direction(y, eta);
    const double target_len = std::hypot(y[0], y[1]);
    std::size_t best = 0;
    double best_gap = INFINITY;
    for (std::size_t x = 0; x < 6; ++x) {
      const double s = std::min(vals[2 * x] / lam[0], vals[2 * x + 1] / lam[1]);
      if (std::abs(s - target_len) < best_gap) best_gap = std::abs(s - target_len), best = x;
    }
    CHECK(select_best_input(t, y, eta, ScoringSpec::squared()).index == best);
  }
  CHECK_THROWS_AS(select_best_input(*table, ObjectiveVector{-1.0, 1.0}, eta, ScoringSpec::squared()), DomainError);
  CHECK_THROWS_AS(select_best_input(*table, ObjectiveVector{1.0, 1.0, 1.0}, ReferenceVector{0.0, 0.0, 0.0},
                                    ScoringSpec::squared()),
                  InvalidArgument);
}

TEST_CASE("affine normalisation") {
  const AffineNormalizer id({0.0, 0.0}, {1.0, 1.0});
  const std::vector<double> y{0.3, 0.7};
  CHECK(id.forward(y) == y);
  CHECK(id.default_reference() == ReferenceVector{-0.2, -0.2});

  const AffineNormalizer n({1.0, -2.0}, {3.0, 8.0});
  CHECK(n.default_reference() == ReferenceVector{0.6, -4.0});
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int rep = 0; rep < 100; ++rep) {
    const std::vector<double> p{u(rng), u(rng)};
    const auto back = n.inverse(n.forward(p));
    CHECK(std::abs(back[0] - p[0]) < 1e-12 * std::max(1.0, std::abs(p[0])));
    CHECK(std::abs(back[1] - p[1]) < 1e-12 * std::max(1.0, std::abs(p[1])));
  }
  CHECK_THROWS_AS(AffineNormalizer({1.0}, {1.0}), InvalidArgument);
  CHECK_THROWS_AS(AffineNormalizer({1.0, 0.0}, {2.0}), InvalidArgument);

  // fronts commute with the affine map: lengths scale by ||D lam|| along D lam
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<ObjectiveVector> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(ObjectiveVector{u(rng), u(rng)});
    const auto norm = normalize_objectives(pts, {-10.0, -10.0}, {10.0, 30.0});
    const auto eta_o = norm.eta_default;
    const ReferenceVector eta_t(norm.normalizer.forward(eta_o.values()));
    const PointFront original(eta_o, pts);
    const PointFront transformed(eta_t, norm.points);
    for (double angle : {0.2, 0.7, 1.3}) {
      const std::vector<double> lam{std::cos(angle), std::sin(angle)};
      const std::vector<double> dl{lam[0] / 20.0, lam[1] / 40.0};
      const double scale = std::hypot(dl[0], dl[1]);
      const std::vector<double> mapped{dl[0] / scale, dl[1] / scale};
      CHECK(point_front_length(transformed, mapped) ==
            doctest::Approx(point_front_length(original, lam) * scale).epsilon(1e-12));
    }
  }
}

TEST_CASE("reweighted directions") {
  const std::vector<double> w{1.0, 1.0}, l{0.0, 0.0}, uu{1.0, 3.0};
  const auto d = reweighted_direction(w, l, uu);
  CHECK(d[1] / d[0] == doctest::Approx(3.0));
  const std::vector<double> bad{0.0, 1.0};
  CHECK_THROWS_AS(reweighted_direction(bad, l, uu), InvalidArgument);
}

}  // TEST_SUITE
