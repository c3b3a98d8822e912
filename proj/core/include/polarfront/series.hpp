#pragma once

#include <chrono>
#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarfront/geometry.hpp"

namespace polarfront {

using Timestamp = std::chrono::sys_seconds;
using Day = std::chrono::sys_days;

/// Multivariate time series with missing cells.
class SeriesDataset {
 public:
  /// Rows are sorted by timestamp; rows sharing a timestamp are merged by
  /// per-column maximum so timestamps end up strictly increasing.
  SeriesDataset(std::vector<std::string> labels, std::vector<Timestamp> timestamps,
                std::vector<std::vector<std::optional<double>>> rows);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t columns() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return timestamps_.size(); }
  const std::vector<Timestamp>& timestamps() const noexcept { return timestamps_; }
  const std::vector<std::optional<double>>& row(std::size_t i) const noexcept { return rows_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<Timestamp> timestamps_;
  std::vector<std::vector<std::optional<double>>> rows_;
};

/// Parses "YYYY-MM-DD", "YYYY-MM-DD[T ]HH:MM[:SS[.fff]]" with an optional
/// "Z" or "+HH:MM"/"-HH:MM" suffix, converted to UTC.
Timestamp parse_iso8601(std::string_view text);

std::string format_day(Day day);

/// CSV with header `timestamp,<name1>,...,<nameM>`; empty, "NA" and "NaN"
/// cells are missing.
SeriesDataset read_series_csv(std::istream& in);

struct DailyMaximum {
  Day day;
  std::vector<std::optional<double>> values;  ///< empty when nothing was observed
};

/// Component-wise maximum of the readings within each UTC day. Days with no
/// reading in any column are dropped.
std::vector<DailyMaximum> daily_max(const SeriesDataset& ds);

/// Daily vectors restricted to `components`; a day is skipped when any of
/// those components is missing.
std::vector<ObjectiveVector> complete_vectors(std::span<const DailyMaximum> days,
                                              std::span<const std::size_t> components);

struct YearGroup {
  int year;
  std::vector<DailyMaximum> days;
};

std::vector<YearGroup> group_by_year(std::span<const DailyMaximum> days);

}  // namespace polarfront
