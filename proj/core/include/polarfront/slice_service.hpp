#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "polarfront/decision.hpp"
#include "polarfront/ensemble.hpp"
#include "polarfront/io.hpp"

namespace polarfront {

/// Immutable state behind the slice service.
struct SessionState {
  FrontEnsemble ensemble;
  std::vector<std::string> labels;
  AffineNormalizer bounds;
};

struct SessionOptions {
  std::size_t grid_k = 256;            ///< grid size when the data is an objective table
  std::uint64_t grid_seed = 0;         ///< Monte-Carlo grid seed (M >= 3)
};

/// Builds a session from an ensemble document or an objective table.
/// Objective tables take their bounds from the sample range and use the
/// reference l - 0.2 (u - l). Ensembles without bounds derive u from the
/// largest front coordinates and invert the same rule for l.
std::shared_ptr<const SessionState> make_session(const io::Json& data,
                                                 const SessionOptions& options = {});

/// Complement vector v from the slider weights of the dropped objectives:
/// the weights are rescaled by the objective ranges (relative to the widest)
/// and shrunk so that ||v|| <= 0.99.
std::vector<double> slider_fixed_vector(std::span<const double> complement_weights,
                                        std::span<const double> complement_ranges,
                                        double widest_range);

struct ServiceResponse {
  int status;
  io::Json body;
};

using QueryParams = std::map<std::string, std::string>;

/// Request handlers. Every handler works on one snapshot of the session, so
/// a concurrent load() never affects a request in flight.
class SliceService {
 public:
  static constexpr std::size_t kDefaultSliceAngles = 181;

  void load(std::shared_ptr<const SessionState> state);
  std::shared_ptr<const SessionState> snapshot() const;

  ServiceResponse meta() const;
  /// weights=w1,...,wM with every w in (0, 1).
  ServiceResponse marginal(const QueryParams& params) const;
  /// i, j (0-based, distinct); weights=w1,...,wM or v=v1,...; optional
  /// alphas=a1,... (default 0.05,0.95) and k=<sub-grid angles>.
  ServiceResponse slice(const QueryParams& params) const;
  /// y=y1,...,yM
  ServiceResponse domination(const QueryParams& params) const;
  /// Body {"target": [..], "scoring": "squared" | "pinball:<a>" | "hv-absolute"}.
  ServiceResponse decide(const std::string& body) const;

 private:
  mutable std::shared_mutex mutex_;
  std::shared_ptr<const SessionState> state_;
};

}  // namespace polarfront
