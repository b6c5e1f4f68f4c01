#include "lrk/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "lrk/errors.hpp"

namespace lrk::io {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw InvalidParameter("table row has the wrong width");
  rows.push_back(std::move(row));
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

Json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? Json(*d) : Json(nullptr);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

double or_nan(const std::optional<double>& x) { return x ? *x : std::nan(""); }

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

Json to_json(const Table& t) {
  Json arr = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoFailure("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoFailure("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw IoFailure("failed writing " + path.string());
}

void write_json(const std::filesystem::path& path, const Json& value) {
  write_text(path, value.dump(2) + "\n");
}

Table spectrum_table(const std::vector<SpectrumLevels>& scan) {
  Table t{{"mu", "level_index", "energy"}, {}};
  for (const auto& s : scan) {
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      t.add({s.mu, static_cast<std::int64_t>(i), s.levels[i]});
    }
  }
  return t;
}

Table sweep_table(const SweepCurve& curve) {
  Table t{{"mu_ratio", "R_W", "R_eta", "dQ_rel", "xi", "engine_lr", "engine_sr"}, {}};
  for (const auto& r : curve.rows) {
    t.add({r.mu_ratio, or_nan(r.ratios.R_W), or_nan(r.ratios.R_eta), or_nan(r.ratios.dQ_rel),
           or_nan(r.ratios.xi), std::int64_t{r.engine_lr}, std::int64_t{r.engine_sr}});
  }
  return t;
}

Table region_table(const RegionMap& map) {
  Table t{{"mu_ratio", "beta_ratio", "enhanced"}, {}};
  for (std::size_t i = 0; i < map.mu_ratio_grid.size(); ++i) {
    for (std::size_t j = 0; j < map.beta_ratio_grid.size(); ++j) {
      t.add({map.mu_ratio_grid[i], map.beta_ratio_grid[j], std::int64_t{map.at(i, j)}});
    }
  }
  return t;
}

Table max_ratio_table(const std::vector<MaxRatioRow>& rows) {
  Table t{{"alpha", "beta_ratio", "R_W_max", "R_eta_max", "arg_W", "arg_eta"}, {}};
  const double nan = std::nan("");
  for (const auto& r : rows) {
    if (r.point) {
      t.add({r.alpha, r.beta_ratio, r.point->R_W_max, r.point->R_eta_max, r.point->arg_mu_ratio_W,
             r.point->arg_mu_ratio_eta});
    } else {
      t.add({r.alpha, r.beta_ratio, nan, nan, nan, nan});
    }
  }
  return t;
}

std::vector<MaxRatioRow> max_ratio_rows(const MaxRatioSurface& s) {
  std::vector<MaxRatioRow> rows;
  for (std::size_t a = 0; a < s.alpha_grid.size(); ++a) {
    for (std::size_t b = 0; b < s.beta_ratio_grid.size(); ++b) {
      rows.push_back({s.alpha_grid[a], s.beta_ratio_grid[b], s.at(a, b)});
    }
  }
  return rows;
}

namespace {

Json eta_json(const std::optional<double>& eta) { return eta ? Json(*eta) : Json(nullptr); }

}  // namespace

Json to_json(const OttoResult& r) {
  Json j;
  j["cycle"] = "otto";
  j["Q"] = Json{{"h", r.Q_h}, {"c", r.Q_c}};
  j["W"] = r.W;
  j["eta"] = eta_json(r.eta);
  j["engine_valid"] = r.engine_valid;
  return j;
}

Json to_json(const StirlingResult& r) {
  Json j;
  j["cycle"] = "stirling";
  j["Q"] = Json{{"I", r.Q_I}, {"II", r.Q_II}, {"III", r.Q_III}, {"IV", r.Q_IV}, {"h", r.Q_h}};
  j["W"] = r.W;
  j["eta"] = eta_json(r.eta);
  j["engine_valid"] = r.engine_valid;
  return j;
}

Json to_json(const WindingResult& r) {
  return Json{{"w", r.w}, {"residual", r.residual}, {"grid_density", r.grid_density}};
}

Json to_json(const OptimalCondition& o, CycleKind kind, double beta_c) {
  Json j;
  j["cycle"] = to_string(kind);
  j["beta_c"] = beta_c;
  j["work"] = Json{{"alpha", o.alpha_W}, {"beta_ratio", o.beta_ratio_W}, {"R_W_max", o.R_W_max}};
  j["efficiency"] =
      Json{{"alpha", o.alpha_eta}, {"beta_ratio", o.beta_ratio_eta}, {"R_eta_max", o.R_eta_max}};
  j["coincident"] = o.coincident;
  return j;
}

}  // namespace lrk::io
