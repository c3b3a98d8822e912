#include "polarfront/slice_service.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "polarfront/directions.hpp"
#include "polarfront/error.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/numeric.hpp"
#include "polarfront/projection.hpp"
#include "polarfront/scalarisation.hpp"
#include "polarfront/statistics.hpp"

namespace polarfront {

namespace {

constexpr double kMaxFixedNorm = 0.99;

using io::Json;

// Thrown inside handlers and turned into an error response.
struct HttpError {
  int status;
  std::string message;
};

ServiceResponse error_response(int status, const std::string& message) {
  return {status, Json{{"error", message}}};
}

GridHandle default_grid(std::size_t dim, const SessionOptions& options) {
  if (dim == 1) return unit_grid_1d();
  if (dim == 2) return equi_angular_grid_2d(options.grid_k);
  return sample_directions(dim, options.grid_k, options.grid_seed);
}

AffineNormalizer bounds_from_table(const ObjectiveTable& table) {
  std::vector<double> lo(table.dim(), std::numeric_limits<double>::infinity());
  std::vector<double> hi(table.dim(), -std::numeric_limits<double>::infinity());
  for (std::size_t n = 0; n < table.samples(); ++n) {
    for (std::size_t x = 0; x < table.inputs(); ++x) {
      const auto y = table.value(n, x);
      for (std::size_t m = 0; m < y.size(); ++m) {
        lo[m] = std::min(lo[m], y[m]);
        hi[m] = std::max(hi[m], y[m]);
      }
    }
  }
  try {
    return AffineNormalizer(std::move(lo), std::move(hi));
  } catch (const InvalidArgument& e) {
    throw DataError(std::string("objective table has a constant objective: ") + e.what());
  }
}

AffineNormalizer bounds_from_fronts(const FrontEnsemble& e) {
  const auto eta = e.reference().values();
  std::vector<double> hi(eta.begin(), eta.end());
  for (std::size_t n = 0; n < e.rows(); ++n) {
    for (std::size_t k = 0; k < e.columns(); ++k) {
      const auto lam = e.grid()->direction(k);
      for (std::size_t m = 0; m < hi.size(); ++m) hi[m] = std::max(hi[m], eta[m] + e.length(n, k) * lam[m]);
    }
  }
  // eta = l - 0.2 (u - l)  =>  l = (eta + 0.2 u) / 1.2
  std::vector<double> lo(hi.size());
  for (std::size_t m = 0; m < lo.size(); ++m) lo[m] = (eta[m] + 0.2 * hi[m]) / 1.2;
  try {
    return AffineNormalizer(std::move(lo), std::move(hi));
  } catch (const InvalidArgument&) {
    throw DataError("ensemble fronts are degenerate; bounds cannot be derived");
  }
}

std::vector<std::string> default_labels(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t m = 0; m < dim; ++m) out.push_back("f" + std::to_string(m + 1));
  return out;
}

std::vector<double> parse_list(const QueryParams& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw HttpError{400, "missing parameter '" + key + "'"};
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      throw HttpError{400, "parameter '" + key + "' must be a comma-separated list of numbers"};
    }
    if (used != cell.size() || !std::isfinite(v)) {
      throw HttpError{400, "parameter '" + key + "' must be a comma-separated list of numbers"};
    }
    out.push_back(v);
  }
  if (out.empty()) throw HttpError{400, "parameter '" + key + "' is empty"};
  return out;
}

std::size_t parse_index(const QueryParams& params, const std::string& key, std::size_t dim) {
  const auto it = params.find(key);
  if (it == params.end()) throw HttpError{400, "missing parameter '" + key + "'"};
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    if (!it->second.empty() && it->second.front() == '-') throw std::invalid_argument("negative");
    v = std::stoul(it->second, &used);
  } catch (const std::exception&) {
    throw HttpError{400, "parameter '" + key + "' must be an objective index"};
  }
  if (used != it->second.size() || v >= dim) {
    throw HttpError{400, "parameter '" + key + "' must be an objective index below " + std::to_string(dim)};
  }
  return static_cast<std::size_t>(v);
}

void require_weights(std::span<const double> w, std::size_t dim) {
  if (w.size() != dim) {
    throw HttpError{400, "expected " + std::to_string(dim) + " weights, got " + std::to_string(w.size())};
  }
  for (double x : w) {
    if (!(x > 0.0 && x < 1.0)) throw HttpError{400, "weights must lie in the open interval (0, 1)"};
  }
}

// Runs a handler body and maps library errors onto HTTP statuses.
template <class Fn>
ServiceResponse handle(const std::shared_ptr<const SessionState>& state, Fn&& fn) {
  if (!state) return error_response(503, "no ensemble loaded");
  try {
    return {200, fn(*state)};
  } catch (const HttpError& e) {
    return error_response(e.status, e.message);
  } catch (const InvalidArgument& e) {
    return error_response(400, e.what());
  } catch (const DomainError& e) {
    return error_response(400, e.what());
  } catch (const DataError& e) {
    return error_response(400, e.what());
  } catch (const InsufficientData& e) {
    return error_response(422, e.what());
  } catch (const Unsupported& e) {
    return error_response(422, e.what());
  }
}

double lower_quantile(std::vector<double> xs, double alpha) {
  const auto rank = lower_quantile_rank(alpha, xs.size());
  auto nth = xs.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(xs.begin(), nth, xs.end());
  return *nth;
}

Json polyline(const GridFront& front, bool swapped) {
  Json points = Json::array();
  const auto eta = front.reference().values();
  for (std::size_t k = 0; k < front.size(); ++k) {
    const auto lam = front.grid()->direction(k);
    double a = eta[0] + front.length(k) * lam[0];
    double b = eta[1] + front.length(k) * lam[1];
    if (swapped) std::swap(a, b);
    points.push_back(Json::array({a, b}));
  }
  Json out = Json::object();
  out["lengths"] = std::vector<double>(front.lengths().begin(), front.lengths().end());
  out["points"] = std::move(points);
  return out;
}

}  // namespace

std::vector<double> slider_fixed_vector(std::span<const double> complement_weights,
                                        std::span<const double> complement_ranges,
                                        double widest_range) {
  if (complement_weights.size() != complement_ranges.size()) {
    throw InvalidArgument("one range per complement weight required");
  }
  if (!(widest_range > 0.0)) throw InvalidArgument("widest range must be positive");
  std::vector<double> v(complement_weights.size());
  for (std::size_t q = 0; q < v.size(); ++q) {
    v[q] = complement_weights[q] * complement_ranges[q] / widest_range;
  }
  const double shrink = std::max(1.0, euclidean_norm(v) / kMaxFixedNorm);
  for (double& x : v) x /= shrink;
  return v;
}

std::shared_ptr<const SessionState> make_session(const io::Json& data, const SessionOptions& options) {
  if (io::looks_like_table(data)) {
    auto table = io::table_from_json(data);
    auto bounds = bounds_from_table(*table);
    auto eta = bounds.default_reference();
    auto grid = default_grid(table->dim(), options);
    auto ensemble = ensemble_from_objective_table(table, eta, grid);
    std::vector<std::string> labels;
    if (data.contains("labels")) labels = data.at("labels").get<std::vector<std::string>>();
    if (labels.empty()) labels = default_labels(table->dim());
    if (labels.size() != table->dim()) throw DataError("one label per objective required");
    return std::make_shared<const SessionState>(
        SessionState{std::move(ensemble), std::move(labels), std::move(bounds)});
  }
  auto doc = io::ensemble_from_json(data);
  const std::size_t dim = doc.ensemble.dim();
  auto labels = doc.labels.empty() ? default_labels(dim) : doc.labels;
  std::optional<AffineNormalizer> bounds;
  if (doc.bounds) {
    try {
      bounds.emplace(doc.bounds->lower, doc.bounds->upper);
    } catch (const InvalidArgument& e) {
      throw DataError(std::string("bounds: ") + e.what());
    }
  } else {
    bounds.emplace(bounds_from_fronts(doc.ensemble));
  }
  return std::make_shared<const SessionState>(
      SessionState{std::move(doc.ensemble), std::move(labels), std::move(*bounds)});
}

void SliceService::load(std::shared_ptr<const SessionState> state) {
  std::unique_lock lock(mutex_);
  state_ = std::move(state);
}

std::shared_ptr<const SessionState> SliceService::snapshot() const {
  std::shared_lock lock(mutex_);
  return state_;
}

ServiceResponse SliceService::meta() const {
  return handle(snapshot(), [](const SessionState& s) {
    const auto& e = s.ensemble;
    const auto eta = e.reference().values();
    const ReferenceVector rule_ref = s.bounds.default_reference();
    const auto rule = rule_ref.values();
    Json out = Json::object();
    out["M"] = e.dim();
    out["N"] = e.rows();
    out["K"] = e.columns();
    out["labels"] = s.labels;
    out["bounds"] = Json{{"lower", s.bounds.lower()}, {"upper", s.bounds.upper()}};
    out["eta"] = std::vector<double>(eta.begin(), eta.end());
    out["eta_default"] = std::vector<double>(rule.begin(), rule.end());
    out["grid"] = Json{{"scheme", std::string(to_string(e.grid()->scheme()))}, {"size", e.columns()}};
    out["exact"] = e.has_source();
    return out;
  });
}

ServiceResponse SliceService::marginal(const QueryParams& params) const {
  return handle(snapshot(), [&](const SessionState& s) {
    const auto& e = s.ensemble;
    const auto w = parse_list(params, "weights");
    require_weights(w, e.dim());
    const Direction r = reweighted_direction(w, s.bounds.lower(), s.bounds.upper());
    const auto along = e.lengths_along(r.components());
    const auto eta = e.reference().values();

    auto stat = [&](double length) {
      std::vector<double> point(eta.size());
      for (std::size_t m = 0; m < point.size(); ++m) point[m] = eta[m] + length * r[m];
      return Json{{"length", length}, {"point", point}};
    };
    Json stats = Json::object();
    stats["mean"] = stat(compensated_mean(along.lengths));
    stats["q05"] = stat(lower_quantile(along.lengths, 0.05));
    stats["q95"] = stat(lower_quantile(along.lengths, 0.95));

    Json out = Json::object();
    out["labels"] = s.labels;
    out["direction"] = std::vector<double>(r.components().begin(), r.components().end());
    out["exact"] = along.exact;
    out["angular_error"] = along.angular_error;
    out["stats"] = std::move(stats);
    return out;
  });
}

ServiceResponse SliceService::slice(const QueryParams& params) const {
  return handle(snapshot(), [&](const SessionState& s) {
    const auto& e = s.ensemble;
    const std::size_t dim = e.dim();
    if (dim < 2) throw HttpError{400, "slices need at least two objectives"};
    const std::size_t i = parse_index(params, "i", dim);
    const std::size_t j = parse_index(params, "j", dim);
    if (i == j) throw HttpError{400, "i and j must differ"};

    std::vector<std::size_t> kept{std::min(i, j), std::max(i, j)};
    std::vector<std::size_t> complement;
    for (std::size_t m = 0; m < dim; ++m) {
      if (m != i && m != j) complement.push_back(m);
    }

    std::vector<double> v;
    if (params.count("v")) {
      v = parse_list(params, "v");
    } else if (complement.empty()) {
      // nothing to pin; weights are optional
      if (params.count("weights")) require_weights(parse_list(params, "weights"), dim);
    } else {
      const auto w = parse_list(params, "weights");
      require_weights(w, dim);
      const auto& lo = s.bounds.lower();
      const auto& hi = s.bounds.upper();
      double widest = 0.0;
      for (std::size_t m = 0; m < dim; ++m) widest = std::max(widest, hi[m] - lo[m]);
      std::vector<double> wc;
      std::vector<double> ranges;
      for (std::size_t m : complement) {
        wc.push_back(w[m]);
        ranges.push_back(hi[m] - lo[m]);
      }
      v = slider_fixed_vector(wc, ranges, widest);
    }
    const SliceSpec spec(dim, kept, v);

    std::vector<double> alphas{0.05, 0.95};
    if (params.count("alphas")) alphas = parse_list(params, "alphas");
    std::size_t angles = kDefaultSliceAngles;
    if (params.count("k")) {
      const auto k = parse_list(params, "k");
      if (k.size() != 1 || !(k[0] >= 1.0 && k[0] <= 100000.0) || k[0] != std::floor(k[0])) {
        throw HttpError{400, "k must be an integer in [1, 100000]"};
      }
      angles = static_cast<std::size_t>(k[0]);
    }
    const auto sub_grid = equi_angular_grid_2d(angles);
    const auto stats = slice_statistics(e, spec, sub_grid, alphas);
    const bool swapped = i > j;

    Json quantiles = Json::array();
    for (const auto& q : stats.quantiles) {
      Json entry = polyline(q.front, swapped);
      entry["alpha"] = q.alpha;
      quantiles.push_back(std::move(entry));
    }
    Json out = Json::object();
    out["i"] = i;
    out["j"] = j;
    out["complement"] = complement;
    out["v"] = spec.fixed();
    out["scale"] = spec.scale();
    out["exact"] = stats.exact;
    out["max_angular_error"] = stats.max_angular_error;
    out["mean"] = polyline(stats.mean, swapped);
    out["quantiles"] = std::move(quantiles);
    out["trace"] = stats.mean_trace;
    return out;
  });
}

ServiceResponse SliceService::domination(const QueryParams& params) const {
  return handle(snapshot(), [&](const SessionState& s) {
    const auto& e = s.ensemble;
    const auto y = parse_list(params, "y");
    if (y.size() != e.dim()) throw HttpError{400, "y must have " + std::to_string(e.dim()) + " components"};
    const ObjectiveVector point(y);
    if (!strongly_dominates_reference(point.values(), e.reference().values())) {
      throw HttpError{400, "y must strongly dominate the reference vector"};
    }
    const Direction lam = optimal_direction(point, e.reference());
    double angular_error = 0.0;
    if (!e.has_source()) angular_error = nearest_direction(*e.grid(), lam.components()).angle;
    Json out = Json::object();
    out["probability"] = domination_probability(e, point);
    out["exact"] = e.has_source();
    out["angular_error"] = angular_error;
    return out;
  });
}

ServiceResponse SliceService::decide(const std::string& body) const {
  return handle(snapshot(), [&](const SessionState& s) {
    Json req;
    try {
      req = Json::parse(body);
    } catch (const nlohmann::json::parse_error&) {
      throw HttpError{400, "request body must be JSON"};
    }
    if (!req.is_object() || !req.contains("target")) throw HttpError{400, "missing 'target'"};
    const auto& e = s.ensemble;
    if (!e.has_source()) throw HttpError{409, "loaded ensemble carries no objective table"};
    const ObjectiveVector target(io::to_vector(req.at("target"), "target"));
    ScoringSpec scoring = ScoringSpec::squared();
    if (req.contains("scoring")) {
      if (!req.at("scoring").is_string()) throw HttpError{400, "'scoring' must be a string"};
      scoring = ScoringSpec::parse(req.at("scoring").get<std::string>());
    }
    const auto decision = select_best_input(*e.source(), target, e.reference(), scoring);
    Json losses = Json::object();
    for (std::size_t x = 0; x < decision.losses.size(); ++x) {
      losses[e.source()->input_ids()[x]] = decision.losses[x];
    }
    Json out = Json::object();
    out["input"] = decision.id;
    out["index"] = decision.index;
    out["scoring"] = scoring.name();
    out["target_length"] = decision.target_length;
    out["losses"] = std::move(losses);
    return out;
  });
}

}  // namespace polarfront
