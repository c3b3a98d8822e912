#include "polarfront/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "polarfront/error.hpp"

namespace polarfront {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("malformed " + std::string(what) + " in timestamp");
  }
  return value;
}

std::optional<double> parse_cell(std::string_view cell) {
  if (cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan") return std::nullopt;
  // std::from_chars for double is unavailable on some toolchains.
  std::string owned(cell);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("non-numeric cell '" + owned + "'");
  }
  if (used != owned.size() || !std::isfinite(v)) {
    throw InvalidArgument("non-numeric cell '" + owned + "'");
  }
  return v;
}

}  // namespace

SeriesDataset::SeriesDataset(std::vector<std::string> labels, std::vector<Timestamp> timestamps,
                             std::vector<std::vector<std::optional<double>>> rows)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidArgument("series needs at least one column");
  if (timestamps.size() != rows.size()) {
    throw InvalidArgument("one timestamp per row required");
  }
  for (const auto& r : rows) {
    if (r.size() != labels_.size()) throw InvalidArgument("row width does not match header");
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return timestamps[a] < timestamps[b]; });
  for (std::size_t idx : order) {
    if (!timestamps_.empty() && timestamps_.back() == timestamps[idx]) {
      auto& merged = rows_.back();
      for (std::size_t c = 0; c < merged.size(); ++c) {
        const auto& v = rows[idx][c];
        if (v && (!merged[c] || *v > *merged[c])) merged[c] = v;
      }
      continue;
    }
    timestamps_.push_back(timestamps[idx]);
    rows_.push_back(std::move(rows[idx]));
  }
}

Timestamp parse_iso8601(std::string_view text) {
  using namespace std::chrono;
  text = trim(text);
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') {
    throw InvalidArgument("timestamp '" + std::string(text) + "' is not ISO-8601");
  }
  const year_month_day ymd{year{parse_int(text.substr(0, 4), "year")},
                           month{static_cast<unsigned>(parse_int(text.substr(5, 2), "month"))},
                           day{static_cast<unsigned>(parse_int(text.substr(8, 2), "day"))}};
  if (!ymd.ok()) throw InvalidArgument("invalid calendar date '" + std::string(text) + "'");
  sys_seconds t = sys_days{ymd};
  std::string_view rest = text.substr(10);
  if (rest.empty()) return t;
  if (rest.front() != 'T' && rest.front() != ' ') {
    throw InvalidArgument("timestamp '" + std::string(text) + "' is not ISO-8601");
  }
  rest.remove_prefix(1);
  if (rest.size() < 5 || rest[2] != ':') {
    throw InvalidArgument("timestamp '" + std::string(text) + "' has a malformed time");
  }
  const int hh = parse_int(rest.substr(0, 2), "hour");
  const int mm = parse_int(rest.substr(3, 2), "minute");
  int ss = 0;
  rest.remove_prefix(5);
  if (!rest.empty() && rest.front() == ':') {
    ss = parse_int(rest.substr(1, 2), "second");
    rest.remove_prefix(3);
    if (!rest.empty() && rest.front() == '.') {
      rest.remove_prefix(1);
      while (!rest.empty() && rest.front() >= '0' && rest.front() <= '9') rest.remove_prefix(1);
    }
  }
  if (hh > 24 || mm > 59 || ss > 60) throw InvalidArgument("time of day out of range");
  t += hours{hh} + minutes{mm} + seconds{ss};
  if (rest.empty() || rest == "Z") return t;
  if (rest.front() == '+' || rest.front() == '-') {
    const int sign = rest.front() == '+' ? 1 : -1;
    rest.remove_prefix(1);
    const int oh = parse_int(rest.substr(0, 2), "offset hour");
    int om = 0;
    if (rest.size() == 5 && rest[2] == ':') {
      om = parse_int(rest.substr(3, 2), "offset minute");
    } else if (rest.size() == 4) {
      om = parse_int(rest.substr(2, 2), "offset minute");
    } else if (rest.size() != 2) {
      throw InvalidArgument("malformed UTC offset");
    }
    return t - sign * (hours{oh} + minutes{om});
  }
  throw InvalidArgument("timestamp '" + std::string(text) + "' has trailing characters");
}

std::string format_day(Day d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

SeriesDataset read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("series CSV is empty");
  const auto header = split_csv(line);
  if (header.size() < 2 || header.front() != "timestamp") {
    throw InvalidArgument("series CSV header must start with 'timestamp'");
  }
  std::vector<std::string> labels(header.begin() + 1, header.end());
  std::vector<Timestamp> stamps;
  std::vector<std::vector<std::optional<double>>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw InvalidArgument("series CSV line " + std::to_string(line_no) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(header.size()));
    }
    stamps.push_back(parse_iso8601(cells.front()));
    std::vector<std::optional<double>> row;
    row.reserve(labels.size());
    for (std::size_t c = 1; c < cells.size(); ++c) row.push_back(parse_cell(cells[c]));
    rows.push_back(std::move(row));
  }
  return SeriesDataset(std::move(labels), std::move(stamps), std::move(rows));
}

std::vector<DailyMaximum> daily_max(const SeriesDataset& ds) {
  if (ds.size() == 0) throw InvalidArgument("series has no readings");
  std::vector<DailyMaximum> out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Day d = std::chrono::floor<std::chrono::days>(ds.timestamps()[i]);
    if (out.empty() || out.back().day != d) {
      out.push_back({d, std::vector<std::optional<double>>(ds.columns())});
    }
    auto& acc = out.back().values;
    const auto& r = ds.row(i);
    for (std::size_t c = 0; c < acc.size(); ++c) {
      if (r[c] && (!acc[c] || *r[c] > *acc[c])) acc[c] = r[c];
    }
  }
  std::erase_if(out, [](const DailyMaximum& d) {
    return std::none_of(d.values.begin(), d.values.end(), [](const auto& v) { return v.has_value(); });
  });
  return out;
}

std::vector<ObjectiveVector> complete_vectors(std::span<const DailyMaximum> days,
                                              std::span<const std::size_t> components) {
  if (components.empty()) throw InvalidArgument("no target components selected");
  std::vector<ObjectiveVector> out;
  std::vector<double> y(components.size());
  for (const auto& d : days) {
    bool complete = true;
    for (std::size_t q = 0; q < components.size() && complete; ++q) {
      if (components[q] >= d.values.size()) throw InvalidArgument("component index out of range");
      const auto& v = d.values[components[q]];
      complete = v.has_value();
      if (complete) y[q] = *v;
    }
    if (complete) out.emplace_back(y);
  }
  return out;
}

std::vector<YearGroup> group_by_year(std::span<const DailyMaximum> days) {
  std::map<int, std::vector<DailyMaximum>> groups;
  for (const auto& d : days) {
    const int y = static_cast<int>(std::chrono::year_month_day{d.day}.year());
    groups[y].push_back(d);
  }
  std::vector<YearGroup> out;
  for (auto& [year, list] : groups) out.push_back({year, std::move(list)});
  return out;
}

}  // namespace polarfront
