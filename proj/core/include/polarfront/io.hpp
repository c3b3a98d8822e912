#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polarfront/ensemble.hpp"
#include "polarfront/geometry.hpp"
#include "polarfront/projection.hpp"

namespace polarfront::io {

/// Insertion-ordered so documents keep the canonical field order.
using Json = nlohmann::ordered_json;

// Every reader throws DataError when the document is malformed or violates
// the invariants of the type it describes.

Json read_json(std::istream& in);
/// Pretty-printed with a trailing newline. Doubles use the shortest
/// representation that round-trips.
std::string dump(const Json& doc);

Json grid_to_json(const DirectionGrid& grid);
GridHandle grid_from_json(const Json& doc);

/// {"reference", "grid": {"scheme", "seed", "directions"}, "lengths"}
Json front_to_json(const GridFront& front);
GridFront front_from_json(const Json& doc);

/// {"inputs": [ids], "samples": [[[y per input] ...] per sample]}
Json table_to_json(const ObjectiveTable& table);
TableHandle table_from_json(const Json& doc);
bool looks_like_table(const Json& doc);

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;
};

struct EnsembleDocument {
  FrontEnsemble ensemble;
  std::vector<std::string> labels;  ///< empty when the file carries none
  std::optional<Bounds> bounds;
};

/// {"reference", "grid", "lengths": [[...] per row]} plus optional "source"
/// (objective table), "labels" and "bounds": {"lower", "upper"}. "lengths"
/// may be omitted when "source" is present.
Json ensemble_to_json(const FrontEnsemble& e, const std::vector<std::string>& labels = {},
                      const std::optional<Bounds>& bounds = std::nullopt);
EnsembleDocument ensemble_from_json(const Json& doc);

/// Hex FNV-1a of the compact canonical grid JSON.
std::string grid_ref(const DirectionGrid& grid);

/// Header `eta:[..] grid_ref:<hash>`, then one comma-separated row of lengths
/// per sample.
void write_ensemble_csv(std::ostream& out, const FrontEnsemble& e);
/// The grid is supplied separately and must match the header hash.
FrontEnsemble read_ensemble_csv(std::istream& in, const GridHandle& grid);

/// {"kept": [i..], "v": [..]}
Json slice_spec_to_json(const SliceSpec& spec);
SliceSpec slice_spec_from_json(const Json& doc, std::size_t dim);

/// A JSON array of vectors, or CSV rows (blank lines, '#' comments and a
/// non-numeric header line are skipped). Throws DataError when no point is
/// found or rows differ in width.
std::vector<ObjectiveVector> read_points(std::istream& in);

std::vector<double> to_vector(const Json& doc, const char* what);

}  // namespace polarfront::io
