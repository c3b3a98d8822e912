#include "polarfront/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "polarfront/error.hpp"
#include "polarfront/numeric.hpp"

namespace polarfront::io {

namespace {

// Runs a reader and reports every failure as a DataError naming the document.
template <class Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DataError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(what) + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw DataError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw DataError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::string trim_copy(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::vector<double>> parse_numeric_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell = trim_copy(cell);
    std::size_t used = 0;
    try {
      out.push_back(std::stod(cell, &used));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != cell.size()) return std::nullopt;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

std::vector<double> to_vector(const Json& doc, const char* what) {
  if (!doc.is_array()) throw DataError(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(doc.size());
  for (const auto& v : doc) {
    if (!v.is_number()) throw DataError(std::string(what) + " must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Json read_json(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (trim_copy(text).empty()) throw DataError("input is empty");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json grid_to_json(const DirectionGrid& grid) {
  Json dirs = Json::array();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto d = grid.direction(k);
    dirs.push_back(Json(std::vector<double>(d.begin(), d.end())));
  }
  Json out = Json::object();
  out["scheme"] = std::string(to_string(grid.scheme()));
  if (grid.seed()) out["seed"] = *grid.seed();
  else out["seed"] = nullptr;
  out["directions"] = std::move(dirs);
  return out;
}

GridHandle grid_from_json(const Json& doc) {
  return guarded("grid", [&] {
    const GridScheme scheme = grid_scheme_from_string(field(doc, "scheme").get<std::string>());
    std::optional<std::uint64_t> seed;
    if (doc.contains("seed") && !doc.at("seed").is_null()) seed = doc.at("seed").get<std::uint64_t>();
    std::vector<Direction> dirs;
    for (const auto& d : field(doc, "directions")) {
      auto v = to_vector(d, "grid direction");
      // Hand-written grids are normalised; generated ones must already be unit.
      if (scheme == GridScheme::user_supplied) dirs.push_back(Direction::normalize(v));
      else dirs.emplace_back(std::move(v));
    }
    return make_grid(std::move(dirs), scheme, seed);
  });
}

Json front_to_json(const GridFront& front) {
  Json out = Json::object();
  const auto eta = front.reference().values();
  out["reference"] = std::vector<double>(eta.begin(), eta.end());
  out["grid"] = grid_to_json(*front.grid());
  out["lengths"] = std::vector<double>(front.lengths().begin(), front.lengths().end());
  return out;
}

GridFront front_from_json(const Json& doc) {
  return guarded("front", [&] {
    return GridFront(ReferenceVector(to_vector(field(doc, "reference"), "reference")),
                     grid_from_json(field(doc, "grid")),
                     to_vector(field(doc, "lengths"), "lengths"));
  });
}

Json table_to_json(const ObjectiveTable& table) {
  Json samples = Json::array();
  for (std::size_t n = 0; n < table.samples(); ++n) {
    Json per_input = Json::array();
    for (std::size_t x = 0; x < table.inputs(); ++x) {
      const auto y = table.value(n, x);
      per_input.push_back(Json(std::vector<double>(y.begin(), y.end())));
    }
    samples.push_back(std::move(per_input));
  }
  Json out = Json::object();
  out["inputs"] = table.input_ids();
  out["samples"] = std::move(samples);
  return out;
}

bool looks_like_table(const Json& doc) {
  return doc.is_object() && doc.contains("inputs") && doc.contains("samples");
}

TableHandle table_from_json(const Json& doc) {
  return guarded("objective table", [&] {
    std::vector<std::string> ids;
    for (const auto& id : field(doc, "inputs")) {
      ids.push_back(id.is_string() ? id.get<std::string>() : id.dump());
    }
    const auto& samples = field(doc, "samples");
    if (!samples.is_array() || samples.empty()) throw DataError("objective table has no samples");
    std::size_t dim = 0;
    std::vector<double> values;
    for (const auto& per_input : samples) {
      if (!per_input.is_array() || per_input.size() != ids.size()) {
        throw DataError("every sample must hold one vector per input");
      }
      for (const auto& y : per_input) {
        auto v = to_vector(y, "objective vector");
        if (dim == 0) dim = v.size();
        if (v.size() != dim || dim == 0) throw DataError("objective vectors differ in dimension");
        values.insert(values.end(), v.begin(), v.end());
      }
    }
    return std::make_shared<const ObjectiveTable>(std::move(ids), samples.size(), dim,
                                                  std::move(values));
  });
}

Json ensemble_to_json(const FrontEnsemble& e, const std::vector<std::string>& labels,
                      const std::optional<Bounds>& bounds) {
  Json out = Json::object();
  const auto eta = e.reference().values();
  out["reference"] = std::vector<double>(eta.begin(), eta.end());
  out["grid"] = grid_to_json(*e.grid());
  Json rows = Json::array();
  for (std::size_t n = 0; n < e.rows(); ++n) {
    const auto r = e.row(n);
    rows.push_back(Json(std::vector<double>(r.begin(), r.end())));
  }
  out["lengths"] = std::move(rows);
  if (e.has_source()) out["source"] = table_to_json(*e.source());
  if (!labels.empty()) out["labels"] = labels;
  if (bounds) out["bounds"] = Json{{"lower", bounds->lower}, {"upper", bounds->upper}};
  return out;
}

EnsembleDocument ensemble_from_json(const Json& doc) {
  return guarded("ensemble", [&] {
    ReferenceVector eta(to_vector(field(doc, "reference"), "reference"));
    GridHandle grid = grid_from_json(field(doc, "grid"));
    TableHandle source;
    if (doc.contains("source")) source = table_from_json(doc.at("source"));

    std::optional<FrontEnsemble> ensemble;
    if (doc.contains("lengths")) {
      const auto& rows = doc.at("lengths");
      if (!rows.is_array() || rows.empty()) throw DataError("ensemble has no rows");
      std::vector<double> flat;
      for (const auto& r : rows) {
        auto v = to_vector(r, "ensemble row");
        if (v.size() != grid->size()) throw DataError("ensemble row length differs from grid size");
        flat.insert(flat.end(), v.begin(), v.end());
      }
      if (source && source->samples() != rows.size()) {
        throw DataError("source sample count differs from ensemble rows");
      }
      ensemble.emplace(eta, grid, rows.size(), std::move(flat), source);
    } else if (source) {
      ensemble.emplace(ensemble_from_objective_table(source, eta, grid));
    } else {
      throw DataError("ensemble needs 'lengths' or 'source'");
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
      labels = doc.at("labels").get<std::vector<std::string>>();
      if (labels.size() != eta.dim()) throw DataError("one label per objective required");
    }
    std::optional<Bounds> bounds;
    if (doc.contains("bounds")) {
      const auto& b = doc.at("bounds");
      bounds = Bounds{to_vector(field(b, "lower"), "bounds.lower"),
                      to_vector(field(b, "upper"), "bounds.upper")};
      if (bounds->lower.size() != eta.dim() || bounds->upper.size() != eta.dim()) {
        throw DataError("bounds dimension differs from reference");
      }
    }
    return EnsembleDocument{std::move(*ensemble), std::move(labels), std::move(bounds)};
  });
}

std::string grid_ref(const DirectionGrid& grid) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(grid_to_json(grid).dump())));
  return buf;
}

void write_ensemble_csv(std::ostream& out, const FrontEnsemble& e) {
  const auto eta = e.reference().values();
  out << "eta:" << Json(std::vector<double>(eta.begin(), eta.end())).dump()
      << " grid_ref:" << grid_ref(*e.grid()) << "\n";
  for (std::size_t n = 0; n < e.rows(); ++n) {
    const auto r = e.row(n);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out << ',';
      out << Json(r[k]).dump();
    }
    out << "\n";
  }
}

FrontEnsemble read_ensemble_csv(std::istream& in, const GridHandle& grid) {
  return guarded("ensemble CSV", [&] {
    if (!grid) throw DataError("ensemble CSV needs a grid");
    std::string header;
    if (!std::getline(in, header)) throw DataError("input is empty");
    header = trim_copy(header);
    const auto eta_pos = header.find("eta:");
    const auto ref_pos = header.find(" grid_ref:");
    if (eta_pos != 0 || ref_pos == std::string::npos) {
      throw DataError("header must read 'eta:[..] grid_ref:<hash>'");
    }
    ReferenceVector eta(to_vector(Json::parse(header.substr(4, ref_pos - 4)), "eta"));
    const std::string ref = trim_copy(header.substr(ref_pos + 10));
    if (ref != grid_ref(*grid)) {
      throw DataError("grid_ref " + ref + " does not match the supplied grid (" + grid_ref(*grid) + ")");
    }
    std::vector<double> flat;
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (trim_copy(line).empty()) continue;
      auto row = parse_numeric_row(line);
      if (!row || row->size() != grid->size()) {
        throw DataError("row " + std::to_string(rows + 1) + " is not a length vector of grid size");
      }
      flat.insert(flat.end(), row->begin(), row->end());
      ++rows;
    }
    if (rows == 0) throw DataError("ensemble CSV has no rows");
    return FrontEnsemble(std::move(eta), grid, rows, std::move(flat));
  });
}

Json slice_spec_to_json(const SliceSpec& spec) {
  Json out = Json::object();
  out["kept"] = spec.kept();
  out["v"] = spec.fixed();
  return out;
}

SliceSpec slice_spec_from_json(const Json& doc, std::size_t dim) {
  return guarded("slice spec", [&] {
    return SliceSpec(dim, field(doc, "kept").get<std::vector<std::size_t>>(),
                     to_vector(field(doc, "v"), "v"));
  });
}

std::vector<ObjectiveVector> read_points(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DataError("points file is empty");
  return guarded("points", [&] {
    std::vector<std::vector<double>> rows;
    if (text[first] == '[') {
      const Json doc = Json::parse(text);
      for (const auto& p : doc) rows.push_back(to_vector(p, "point"));
    } else {
      std::stringstream lines(text);
      std::string line;
      bool header_allowed = true;
      std::size_t line_no = 0;
      while (std::getline(lines, line)) {
        ++line_no;
        const std::string t = trim_copy(line);
        if (t.empty() || t.front() == '#') continue;
        auto row = parse_numeric_row(t);
        if (!row) {
          if (header_allowed) {
            header_allowed = false;
            continue;
          }
          throw DataError("line " + std::to_string(line_no) + " is not numeric");
        }
        header_allowed = false;
        rows.push_back(std::move(*row));
      }
    }
    if (rows.empty()) throw DataError("points file holds no points");
    const std::size_t dim = rows.front().size();
    std::vector<ObjectiveVector> out;
    for (auto& r : rows) {
      if (r.size() != dim) throw DataError("points differ in dimension");
      out.emplace_back(std::move(r));
    }
    return out;
  });
}

}  // namespace polarfront::io
