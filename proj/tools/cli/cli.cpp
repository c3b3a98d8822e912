#include "cli.hpp"

#include <CLI11.hpp>
#include <httplib.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "http_server.hpp"
#include "polarfront/decision.hpp"
#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/evt.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/io.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/pollution.hpp"
#include "polarfront/projection.hpp"
#include "polarfront/scalarisation.hpp"
#include "polarfront/series.hpp"
#include "polarfront/slice_service.hpp"
#include "polarfront/statistics.hpp"

namespace polarfront::cli {

namespace {

using io::Json;

// Flags shared by the data subcommands.
struct Common {
  std::string eta;
  std::size_t grid_k = 256;
  std::optional<std::uint64_t> grid_seed;
  std::string grid_file;
  std::uint64_t seed = 0;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--eta", c.eta, "Reference vector, comma-separated (e.g. 0,0)");
  cmd->add_option("--grid-k", c.grid_k, "Number of grid directions")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
  cmd->add_option("--grid-seed", c.grid_seed,
                  "Seed of the Monte-Carlo grid; forces a Monte-Carlo grid in 2-D "
                  "(default: derived from --seed)");
  cmd->add_option("--grid-file", c.grid_file, "Grid JSON {scheme, seed, directions}; overrides --grid-k");
  cmd->add_option("--seed", c.seed, "Master seed for every random stream")->capture_default_str();
  cmd->add_option("--out", c.out, "Output path (default: stdout)");
}

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      throw InvalidArgument(what + " must be a comma-separated list of numbers");
    }
    if (used != cell.size() || !std::isfinite(v)) {
      throw InvalidArgument(what + " must be a comma-separated list of numbers");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument(what + " is empty");
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  for (double v : parse_doubles(text, what)) {
    if (v < 0.0 || v != std::floor(v)) throw InvalidArgument(what + " must hold non-negative integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return in;
}

Json read_json_file(const std::string& path) {
  auto in = open_input(path);
  return io::read_json(in);
}

GridHandle build_grid(const Common& c, std::size_t dim) {
  if (!c.grid_file.empty()) {
    auto grid = io::grid_from_json(read_json_file(c.grid_file));
    if (grid->dim() != dim) throw InvalidArgument("grid file dimension does not match the data");
    return grid;
  }
  if (dim == 1) return unit_grid_1d();
  if (dim == 2 && !c.grid_seed) return equi_angular_grid_2d(c.grid_k);
  return sample_directions(dim, c.grid_k, c.grid_seed.value_or(derive_seed(c.seed, "grid")));
}

std::optional<ReferenceVector> eta_flag(const Common& c, std::size_t dim) {
  if (c.eta.empty()) return std::nullopt;
  auto v = parse_doubles(c.eta, "--eta");
  if (v.size() != dim) {
    throw InvalidArgument("--eta has " + std::to_string(v.size()) + " components, the data has " +
                          std::to_string(dim));
  }
  return ReferenceVector(std::move(v));
}

// Reference from the flag, else l - 0.2 (u - l) over the given vectors.
ReferenceVector eta_or_default(const Common& c, std::span<const std::span<const double>> ys,
                               std::size_t dim) {
  if (auto eta = eta_flag(c, dim)) return *eta;
  std::vector<double> lo(dim, INFINITY), hi(dim, -INFINITY);
  for (const auto& y : ys) {
    for (std::size_t m = 0; m < dim; ++m) {
      lo[m] = std::min(lo[m], y[m]);
      hi[m] = std::max(hi[m], y[m]);
    }
  }
  for (std::size_t m = 0; m < dim; ++m) {
    if (!(hi[m] > lo[m])) {
      throw InvalidArgument("objective " + std::to_string(m) +
                            " is constant; pass --eta explicitly");
    }
  }
  return AffineNormalizer(lo, hi).default_reference();
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw DataError("cannot write '" + c.out + "'");
  f << text;
}

Json lengths_json(const GridFront& f) {
  return Json(std::vector<double>(f.lengths().begin(), f.lengths().end()));
}

// Loads an ensemble from an ensemble JSON, an objective-table JSON or an
// ensemble CSV (the latter needs --grid-file).
FrontEnsemble load_ensemble(const std::string& path, const Common& c) {
  auto in = open_input(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DataError("'" + path + "' is empty");
  if (text.compare(first, 4, "eta:") == 0) {
    if (c.grid_file.empty()) throw InvalidArgument("ensemble CSV input needs --grid-file");
    std::stringstream s(text);
    auto grid = io::grid_from_json(read_json_file(c.grid_file));
    return io::read_ensemble_csv(s, grid);
  }
  std::stringstream s(text);
  const Json doc = io::read_json(s);
  if (io::looks_like_table(doc)) {
    auto table = io::table_from_json(doc);
    std::vector<std::span<const double>> ys;
    for (std::size_t n = 0; n < table->samples(); ++n) {
      for (std::size_t x = 0; x < table->inputs(); ++x) ys.push_back(table->value(n, x));
    }
    const auto eta = eta_or_default(c, ys, table->dim());
    return ensemble_from_objective_table(table, eta, build_grid(c, table->dim()));
  }
  return io::ensemble_from_json(doc).ensemble;
}

// ---------------------------------------------------------------- front

struct FrontArgs {
  Common common;
  std::string points;
  std::string plot_csv;
};

std::string cmd_front(const FrontArgs& a) {
  auto in = open_input(a.points);
  const auto points = io::read_points(in);
  const std::size_t dim = points.front().dim();
  const auto eta = eta_flag(a.common, dim);
  if (!eta) throw InvalidArgument("front needs --eta");
  const PointFront pf(*eta, points);
  const GridFront front = front_from_points(pf, build_grid(a.common, dim));
  if (!a.plot_csv.empty()) {
    std::ofstream csv(a.plot_csv);
    if (!csv) throw DataError("cannot write '" + a.plot_csv + "'");
    for (std::size_t m = 0; m < dim; ++m) csv << (m ? "," : "") << "y" << m + 1;
    csv << "\n";
    for (std::size_t k = 0; k < front.size(); ++k) {
      const auto p = front.point(k);
      for (std::size_t m = 0; m < dim; ++m) csv << (m ? "," : "") << Json(p[m]).dump();
      csv << "\n";
    }
  }
  return io::dump(io::front_to_json(front));
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  Common common;
  std::string ensemble;
  std::string stats = "mean,quantiles,vorobev,deviation";
  std::string alphas = "0.05,0.5,0.95";
  double beta = 1.0;
  std::size_t bootstrap = 100;
};

std::string cmd_stats(const StatsArgs& a) {
  const FrontEnsemble e = load_ensemble(a.ensemble, a.common);
  std::vector<std::string> wanted;
  {
    std::stringstream ss(a.stats);
    std::string s;
    while (std::getline(ss, s, ',')) {
      static const std::vector<std::string> known{"mean", "quantiles", "vorobev", "deviation",
                                                  "bootstrap", "covariance"};
      if (std::find(known.begin(), known.end(), s) == known.end()) {
        throw InvalidArgument("unknown statistic '" + s + "'");
      }
      wanted.push_back(s);
    }
  }
  auto want = [&](const char* s) { return std::find(wanted.begin(), wanted.end(), s) != wanted.end(); };

  Json out = Json::object();
  const auto eta = e.reference().values();
  out["reference"] = std::vector<double>(eta.begin(), eta.end());
  out["grid"] = io::grid_to_json(*e.grid());
  out["rows"] = e.rows();
  if (want("mean")) out["mean"] = lengths_json(mean_front(e));
  if (want("quantiles")) {
    Json qs = Json::array();
    for (double alpha : parse_doubles(a.alphas, "--alphas")) {
      qs.push_back(Json{{"alpha", alpha}, {"lengths", lengths_json(quantile_front(e, alpha))}});
    }
    out["quantiles"] = std::move(qs);
  }
  if (want("vorobev")) {
    const auto vm = vorobev_mean_front(e);
    Json v = Json::object();
    v["alpha_star"] = vm.alpha_star;
    v["alpha_above"] = vm.alpha_above;
    v["expected_hv"] = vm.expected_hv;
    v["hv_at_star"] = vm.hv_at_star;
    v["hv_above"] = vm.hv_above;
    v["iterations"] = vm.iterations;
    v["converged"] = vm.converged;
    v["deviation"] = vorobev_deviation(e, vm.front);
    v["lengths"] = lengths_json(vm.front);
    out["vorobev"] = std::move(v);
  }
  if (want("deviation")) {
    const auto d = deviation_surfaces(e, a.beta);
    out["deviation"] = Json{{"beta", a.beta}, {"upper", lengths_json(d.upper)}, {"lower", lengths_json(d.lower)}};
  }
  if (want("covariance")) {
    std::vector<double> var(e.columns());
    for (std::size_t k = 0; k < var.size(); ++k) var[k] = length_covariance(e, k, k);
    out["variance"] = std::move(var);
  }
  if (want("bootstrap")) {
    if (a.bootstrap == 0) throw InvalidArgument("--bootstrap must be >= 1");
    Json b = Json::array();
    for (const auto& f : bayesian_bootstrap_front(e, a.bootstrap, derive_seed(a.common.seed, "bayesian-bootstrap"))) {
      b.push_back(lengths_json(f));
    }
    out["bootstrap"] = std::move(b);
  }
  return io::dump(out);
}

// ---------------------------------------------------------------- slices

struct SliceArgs {
  Common common;
  std::string ensemble;
  std::string kept;
  std::string v;
  std::string spec;
  std::string alphas = "0.05,0.95";
  std::size_t sub_k = SliceService::kDefaultSliceAngles;
};

std::string cmd_slices(const SliceArgs& a) {
  const FrontEnsemble e = load_ensemble(a.ensemble, a.common);
  std::optional<SliceSpec> spec;
  if (!a.spec.empty()) {
    spec.emplace(io::slice_spec_from_json(read_json_file(a.spec), e.dim()));
  } else {
    if (a.kept.empty()) throw InvalidArgument("slices needs --kept or --spec");
    const auto kept = parse_indices(a.kept, "--kept");
    std::vector<double> v;
    if (!a.v.empty()) v = parse_doubles(a.v, "--v");
    spec.emplace(e.dim(), kept, v);
  }
  GridHandle sub;
  switch (spec->slice_dim()) {
    case 1: sub = unit_grid_1d(); break;
    case 2: sub = equi_angular_grid_2d(a.sub_k); break;
    default: sub = sample_directions(spec->slice_dim(), a.sub_k, derive_seed(a.common.seed, "slice-grid"));
  }
  const auto alphas = parse_doubles(a.alphas, "--alphas");
  const auto st = slice_statistics(e, *spec, sub, alphas);

  auto surface = [&](const GridFront& f) {
    Json pts = Json::array();
    for (std::size_t k = 0; k < f.size(); ++k) pts.push_back(Json(f.point(k)));
    return Json{{"lengths", lengths_json(f)}, {"points", std::move(pts)}};
  };
  Json out = io::slice_spec_to_json(*spec);
  out["scale"] = spec->scale();
  out["exact"] = st.exact;
  out["max_angular_error"] = st.max_angular_error;
  out["sub_grid"] = io::grid_to_json(*sub);
  out["mean"] = surface(st.mean);
  Json qs = Json::array();
  for (const auto& q : st.quantiles) {
    Json entry = surface(q.front);
    entry["alpha"] = q.alpha;
    qs.push_back(std::move(entry));
  }
  out["quantiles"] = std::move(qs);
  out["trace"] = st.mean_trace;
  return io::dump(out);
}

// ---------------------------------------------------------------- evt

struct EvtArgs {
  Common common;
  double shape = 1.0;
  std::string rates = "1,1";
  std::string direction;
  std::size_t n = 256;
  std::size_t reps = 5000;
  std::size_t samples = 100000;
  double threshold_level = 0.9;
  std::string excess = "0.1,0.25,0.5,1,2";
};

std::string cmd_evt(const EvtArgs& a) {
  evt::WeibullSpec spec{a.shape, parse_doubles(a.rates, "--rates")};
  spec.validate();
  std::vector<double> lam_raw(spec.dim(), 1.0);
  if (!a.direction.empty()) lam_raw = parse_doubles(a.direction, "--direction");
  if (lam_raw.size() != spec.dim()) throw InvalidArgument("--direction must match --rates in dimension");
  const Direction lam = Direction::normalize(lam_raw);
  if (!(a.threshold_level > 0.0 && a.threshold_level < 1.0)) {
    throw InvalidArgument("--threshold-level must lie in (0, 1)");
  }
  if (a.reps == 0 || a.samples == 0) throw InvalidArgument("--reps and --samples must be positive");

  const auto norm = evt::weibull_norm_constants(spec, lam, a.n);
  const auto maxima =
      evt::simulate_normalized_maxima(spec, lam, a.n, a.reps, derive_seed(a.common.seed, "evt-maxima"));
  const double ks = evt::ks_statistic(maxima, evt::gumbel_cdf);

  // Conditional excesses of single draws along lam above an empirical threshold.
  const auto ys = evt::sample_weibull_vectors(spec, a.samples, derive_seed(a.common.seed, "evt-excess"));
  const ReferenceVector eta(std::vector<double>(spec.dim(), 0.0));
  std::vector<double> s(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    s[i] = length_scalarisation(ys[i].values(), eta.values(), lam.components());
  }
  const auto rank = lower_quantile_rank(a.threshold_level, s.size());
  auto nth = s.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(s.begin(), nth, s.end());
  const double u = *nth;
  const auto law = evt::scalarised_length_distribution(spec, lam);

  Json excess = Json::array();
  for (double x : parse_doubles(a.excess, "--excess")) {
    if (!(x > 0.0)) throw InvalidArgument("--excess values must be positive");
    const auto z = from_polar(eta, lam, u + x);
    const auto est = evt::conditional_excess_probability(ys, eta, u, z);
    // P[s - u <= x | s > u] for s ~ Weibull(shape, k)
    const double closed = -std::expm1(std::pow(law.rate * u, a.shape) - std::pow(law.rate * (u + x), a.shape));
    excess.push_back(Json{{"excess", x},
                          {"empirical", est.probability},
                          {"closed_form", closed},
                          {"exceedances", est.exceedances}});
  }

  Json out = Json::object();
  out["shape"] = spec.shape;
  out["rates"] = spec.rates;
  out["direction"] = std::vector<double>(lam.components().begin(), lam.components().end());
  out["maxima"] = Json{{"n", a.n},
                       {"replications", a.reps},
                       {"scale", norm.scale},
                       {"location", norm.location},
                       {"ks_gumbel", ks}};
  out["excess"] = Json{{"samples", a.samples},
                       {"threshold_level", a.threshold_level},
                       {"threshold", u},
                       {"rate", law.rate},
                       {"points", std::move(excess)}};
  return io::dump(out);
}

// ---------------------------------------------------------------- pollution

struct PollutionArgs {
  Common common;
  std::string csv;
  std::string targets;
  std::size_t bootstrap = 200;
  std::size_t radii = 20;
};

std::string cmd_pollution(const PollutionArgs& a) {
  if (a.bootstrap == 0) throw InvalidArgument("--bootstrap must be >= 1");
  if (a.radii == 0) throw InvalidArgument("--radii must be >= 1");
  auto in = open_input(a.csv);
  SeriesDataset ds = [&] {
    try {
      return read_series_csv(in);
    } catch (const InvalidArgument& e) {
      throw DataError(std::string("series CSV: ") + e.what());
    }
  }();
  const auto& labels = ds.labels();
  std::vector<std::size_t> targets;
  if (a.targets.empty()) {
    targets.resize(labels.size());
    std::iota(targets.begin(), targets.end(), 0);
  } else {
    std::stringstream ss(a.targets);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw InvalidArgument("unknown target column '" + name + "'");
      targets.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
  }
  if (targets.size() < 2) throw InvalidArgument("pairwise analysis needs at least two targets");

  const auto days = daily_max(ds);
  const auto years = group_by_year(days);
  std::vector<std::vector<ObjectiveVector>> per_period;
  std::vector<std::string> period_labels;
  for (const auto& y : years) {
    auto vecs = complete_vectors(y.days, targets);
    if (vecs.empty()) continue;
    per_period.push_back(std::move(vecs));
    period_labels.push_back(std::to_string(y.year));
  }
  if (per_period.size() < 1) throw InsufficientData("no period has a day with every target observed");

  const std::size_t dim = targets.size();
  std::vector<std::span<const double>> all;
  for (const auto& p : per_period) {
    for (const auto& y : p) all.push_back(y.values());
  }
  const auto eta = eta_or_default(a.common, all, dim);
  const auto grid = build_grid(a.common, dim);
  std::vector<PeriodEnsemble> periods;
  for (std::size_t p = 0; p < per_period.size(); ++p) {
    periods.push_back(period_front_ensemble(period_labels[p], per_period[p], eta, grid, a.bootstrap,
                                            a.common.seed));
  }

  std::vector<double> fractions(a.radii);
  for (std::size_t r = 0; r < a.radii; ++r) fractions[r] = static_cast<double>(r + 1) / static_cast<double>(a.radii);
  const auto pair_dirs = equi_angular_grid_2d(a.common.grid_k);

  Json pairs = Json::array();
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = p + 1; q < dim; ++q) {
      const auto lattice = make_polar_lattice(pair_dirs, fractions, pair_bounding_length(periods, p, q));
      std::vector<DominationMap> maps;
      Json maps_json = Json::array();
      for (const auto& pe : periods) {
        maps.push_back(pairwise_domination_map(pe, p, q, lattice));
        maps_json.push_back(Json{{"period", pe.label}, {"values", maps.back().values}});
      }
      Json changes = Json::array();
      for (std::size_t t = 1; t < maps.size(); ++t) {
        const auto sc = signed_yearly_changes(maps[t - 1], maps[t]);
        changes.push_back(Json{{"from", periods[t - 1].label},
                               {"to", periods[t].label},
                               {"mean_negative", sc.mean_negative},
                               {"mean_positive", sc.mean_positive},
                               {"total", sc.total},
                               {"field", sc.field}});
      }
      Json dirs = Json::array();
      for (std::size_t k = 0; k < pair_dirs->size(); ++k) {
        const auto d = pair_dirs->direction(k);
        dirs.push_back(Json::array({d[0], d[1]}));
      }
      Json pj = Json::object();
      pj["i"] = p;
      pj["j"] = q;
      pj["labels"] = Json::array({labels[targets[p]], labels[targets[q]]});
      pj["reference"] = Json::array({eta[p], eta[q]});
      pj["lattice"] = Json{{"directions", std::move(dirs)}, {"radii", lattice.radii}};
      pj["maps"] = std::move(maps_json);
      pj["changes"] = std::move(changes);
      pairs.push_back(std::move(pj));
    }
  }

  Json out = Json::object();
  std::vector<std::string> target_labels;
  for (std::size_t t : targets) target_labels.push_back(labels[t]);
  out["targets"] = target_labels;
  const auto ev = eta.values();
  out["reference"] = std::vector<double>(ev.begin(), ev.end());
  out["bootstrap"] = a.bootstrap;
  Json ps = Json::array();
  for (std::size_t p = 0; p < periods.size(); ++p) {
    ps.push_back(Json{{"label", period_labels[p]}, {"days", per_period[p].size()}});
  }
  out["periods"] = std::move(ps);
  out["pairs"] = std::move(pairs);
  return io::dump(out);
}

// ---------------------------------------------------------------- decide

struct DecideArgs {
  Common common;
  std::string table;
  std::string target;
  std::string scoring = "squared";
};

std::string cmd_decide(const DecideArgs& a) {
  const auto table = io::table_from_json(read_json_file(a.table));
  std::vector<std::span<const double>> ys;
  for (std::size_t n = 0; n < table->samples(); ++n) {
    for (std::size_t x = 0; x < table->inputs(); ++x) ys.push_back(table->value(n, x));
  }
  const auto eta = eta_or_default(a.common, ys, table->dim());
  const ObjectiveVector target(parse_doubles(a.target, "--target"));
  const auto scoring = ScoringSpec::parse(a.scoring);
  const auto d = select_best_input(*table, target, eta, scoring);
  Json losses = Json::object();
  for (std::size_t x = 0; x < d.losses.size(); ++x) losses[table->input_ids()[x]] = d.losses[x];
  Json out = Json::object();
  out["input"] = d.id;
  out["index"] = d.index;
  out["scoring"] = scoring.name();
  const auto ev = eta.values();
  out["reference"] = std::vector<double>(ev.begin(), ev.end());
  out["target_length"] = d.target_length;
  out["losses"] = std::move(losses);
  return io::dump(out);
}

// ---------------------------------------------------------------- serve

struct ServeArgs {
  std::string data;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  std::size_t grid_k = 256;
  std::uint64_t grid_seed = 0;
};

int cmd_serve(const ServeArgs& a, std::ostream& out) {
  SessionOptions options;
  options.grid_k = a.grid_k;
  options.grid_seed = a.grid_seed;
  SliceService service;
  service.load(make_session(read_json_file(a.data), options));
  httplib::Server server;
  std::optional<std::string> static_dir;
  if (!a.static_dir.empty()) static_dir = a.static_dir;
  http::bind_routes(server, service, static_dir);
  out << "serving " << a.data << " on http://" << a.host << ":" << a.port << std::endl;
  if (!server.listen(a.host, a.port)) throw DataError("cannot listen on " + a.host + ":" + std::to_string(a.port));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar Pareto front toolkit: fronts, ensemble statistics, slices, extremes, workflows"};
  app.name("polarfront");
  app.require_subcommand(1);

  FrontArgs front;
  auto* c_front = app.add_subcommand("front", "Front lengths of a point set on a direction grid");
  c_front->add_option("--points", front.points, "CSV rows or JSON array of objective vectors")->required();
  c_front->add_option("--plot-csv", front.plot_csv, "Also write the boundary polyline (eta + l*lambda per direction) as CSV");
  add_common(c_front, front.common);

  StatsArgs stats;
  auto* c_stats = app.add_subcommand("stats", "Statistics of a front ensemble");
  c_stats->add_option("--ensemble", stats.ensemble, "Ensemble JSON, objective-table JSON, or ensemble CSV")->required();
  c_stats->add_option("--stats", stats.stats,
                      "Comma list of mean,quantiles,vorobev,deviation,bootstrap,covariance")
      ->capture_default_str();
  c_stats->add_option("--alphas", stats.alphas, "Quantile levels")->capture_default_str();
  c_stats->add_option("--beta", stats.beta, "Deviation-surface multiplier")->capture_default_str();
  c_stats->add_option("--bootstrap", stats.bootstrap, "Bayesian bootstrap rounds")->capture_default_str();
  add_common(c_stats, stats.common);

  SliceArgs slices;
  auto* c_slices = app.add_subcommand("slices", "Projected-front statistics on a slice of the direction sphere");
  c_slices->add_option("--ensemble", slices.ensemble, "Ensemble JSON, objective-table JSON, or ensemble CSV")->required();
  c_slices->add_option("--kept", slices.kept, "Kept objective indices, 0-based, increasing (e.g. 0,1)");
  c_slices->add_option("--v", slices.v, "Fixed components for the dropped objectives (norm < 1)");
  c_slices->add_option("--spec", slices.spec, "SliceSpec JSON {kept, v}; overrides --kept/--v");
  c_slices->add_option("--alphas", slices.alphas, "Quantile levels")->capture_default_str();
  c_slices->add_option("--sub-k", slices.sub_k, "Directions on the slice sphere")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  add_common(c_slices, slices.common);

  EvtArgs evt_args;
  auto* c_evt = app.add_subcommand("evt", "Extreme-value checks for independent Weibull objectives");
  c_evt->add_option("--shape", evt_args.shape, "Weibull shape")->capture_default_str();
  c_evt->add_option("--rates", evt_args.rates, "Weibull rates, one per objective")->capture_default_str();
  c_evt->add_option("--direction", evt_args.direction, "Direction (normalised; default equal components)");
  c_evt->add_option("--n", evt_args.n, "Sample size per maximum")->capture_default_str();
  c_evt->add_option("--reps", evt_args.reps, "Replications of the maximum")->capture_default_str();
  c_evt->add_option("--samples", evt_args.samples, "Draws for conditional excesses")->capture_default_str();
  c_evt->add_option("--threshold-level", evt_args.threshold_level, "Empirical quantile level of the threshold")
      ->capture_default_str();
  c_evt->add_option("--excess", evt_args.excess, "Excess lengths to evaluate")->capture_default_str();
  add_common(c_evt, evt_args.common);

  PollutionArgs pollution;
  auto* c_poll = app.add_subcommand("pollution", "Yearly pairwise domination maps and signed changes from a time series");
  c_poll->add_option("--csv", pollution.csv, "CSV with header timestamp,<name1>,...")->required();
  c_poll->add_option("--targets", pollution.targets, "Comma list of column names (default: all)");
  c_poll->add_option("--bootstrap", pollution.bootstrap, "Day-bootstrap rounds per period")->capture_default_str();
  c_poll->add_option("--radii", pollution.radii, "Radial levels of the evaluation lattice")->capture_default_str();
  add_common(c_poll, pollution.common);

  DecideArgs decide;
  auto* c_decide = app.add_subcommand("decide", "Input whose scalarised outcomes best match a target vector");
  c_decide->add_option("--table", decide.table, "Objective-table JSON")->required();
  c_decide->add_option("--target", decide.target, "Target objective vector")->required();
  c_decide->add_option("--scoring", decide.scoring, "squared | pinball:<alpha> | hv-absolute")->capture_default_str();
  add_common(c_decide, decide.common);

  ServeArgs serve;
  auto* c_serve = app.add_subcommand("serve", "HTTP/JSON slice service for the dashboard");
  c_serve->add_option("--data", serve.data, "Ensemble or objective-table JSON")->required();
  c_serve->add_option("--host", serve.host, "Bind address")->capture_default_str();
  c_serve->add_option("--port", serve.port, "Port")->capture_default_str()->check(CLI::Range(1, 65535));
  c_serve->add_option("--static", serve.static_dir, "Directory served at /");
  c_serve->add_option("--grid-k", serve.grid_k, "Grid size for objective-table data")->capture_default_str();
  c_serve->add_option("--grid-seed", serve.grid_seed, "Monte-Carlo grid seed (M >= 3)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    if (c_front->parsed()) text = cmd_front(front);
    else if (c_stats->parsed()) text = cmd_stats(stats);
    else if (c_slices->parsed()) text = cmd_slices(slices);
    else if (c_evt->parsed()) text = cmd_evt(evt_args);
    else if (c_poll->parsed()) text = cmd_pollution(pollution);
    else if (c_decide->parsed()) text = cmd_decide(decide);
    else if (c_serve->parsed()) return cmd_serve(serve, out);

    const Common* common = nullptr;
    if (c_front->parsed()) common = &front.common;
    else if (c_stats->parsed()) common = &stats.common;
    else if (c_slices->parsed()) common = &slices.common;
    else if (c_evt->parsed()) common = &evt_args.common;
    else if (c_poll->parsed()) common = &pollution.common;
    else common = &decide.common;
    emit(*common, out, text);
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const InsufficientData& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace polarfront::cli
