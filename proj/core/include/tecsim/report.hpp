#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tecsim/scenario.hpp"

namespace tecsim {

using Json = nlohmann::ordered_json;

/// Header row plus one row per control step, columns per series_columns(),
/// values printed with %.9g.
void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& series);

/// Reads a CSV produced by write_series_csv. Throws ConfigError when the
/// header does not match the fixed column order.
std::vector<SeriesRow> read_series_csv(std::istream& in);

Json metrics_to_json(const Metrics& metrics);
Json metrics_spec_to_json(const MetricsSpec& spec);
MetricsSpec metrics_spec_from_json(const Json& j);
Json trim_to_json(const TrimPoint& trim);
Json allocation_to_json(const AllocationMatrix& allocation);

/// Contents of `<name>_metrics.json`.
Json run_report(const ScenarioResult& result);

/// Writes `<stem>_series.csv` and `<stem>_metrics.json` into `dir`.
void write_run_outputs(const std::filesystem::path& dir, const std::string& stem,
                       const ScenarioResult& result);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

}  // namespace tecsim
