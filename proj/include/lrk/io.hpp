#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lrk/cycles.hpp"
#include "lrk/spectrum.hpp"
#include "lrk/sweep.hpp"

namespace lrk::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits ("%.17g"); NaN is written as "nan".
std::string format_double(double x);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

/// Header row plus one line per row, comma separated, LF line endings.
std::string to_csv(const Table& table);
/// Array of objects keyed by column name, NaN as null.
Json to_json(const Table& table);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const Json& value);

Table spectrum_table(const std::vector<SpectrumLevels>& scan);
Table sweep_table(const SweepCurve& curve);
Table region_table(const RegionMap& map);

struct MaxRatioRow {
  double alpha = 0.0;
  double beta_ratio = 0.0;
  std::optional<MaxRatioPoint> point;
};
Table max_ratio_table(const std::vector<MaxRatioRow>& rows);
std::vector<MaxRatioRow> max_ratio_rows(const MaxRatioSurface& surface);

Json to_json(const OttoResult& r);
Json to_json(const StirlingResult& r);
Json to_json(const WindingResult& r);
Json to_json(const OptimalCondition& o, CycleKind kind, double beta_c);

}  // namespace lrk::io
