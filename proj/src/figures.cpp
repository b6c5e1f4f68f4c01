#include "lrk/figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "lrk/errors.hpp"
#include "lrk/parallel.hpp"
#include "lrk/spectrum.hpp"
#include "lrk/sweep.hpp"

namespace lrk::figures {

Output::Output(std::filesystem::path dir, bool json_tables, bool plots)
    : dir_(std::move(dir)), json_tables_(json_tables), plots_(plots) {}

void Output::table(const std::string& stem, const io::Table& t) {
  if (json_tables_) {
    io::write_json(dir_ / (stem + ".json"), io::to_json(t));
    files_.push_back(stem + ".json");
  } else {
    io::write_text(dir_ / (stem + ".csv"), io::to_csv(t));
    files_.push_back(stem + ".csv");
  }
}

void Output::json(const std::string& name, const io::Json& value) {
  io::write_json(dir_ / name, value);
  files_.push_back(name);
}

void Output::plot(const std::string& stem, const std::string& body) {
  if (!plots_ || json_tables_) return;
  const std::string png = std::filesystem::path(stem).filename().string() + ".png";
  std::string script;
  script += "set datafile separator ','\n";
  script += "set datafile missing 'nan'\n";
  script += "set terminal pngcairo size 900,650\n";
  script += "set output '" + png + "'\n";
  script += body;
  io::write_text(dir_ / (stem + ".gp"), script);
  files_.push_back(stem + ".gp");
}

void Output::diagnostic(const std::string& key, io::Json value) { diagnostics_[key] = std::move(value); }

namespace {

std::string labels(const std::string& title, const std::string& xlabel, const std::string& ylabel) {
  return "set title '" + title + "'\nset xlabel '" + xlabel + "'\nset ylabel '" + ylabel + "'\n";
}

std::string short_label(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

std::string line_plot(const std::string& data, const std::string& title, const std::string& xlabel,
                      const std::string& ylabel,
                      const std::vector<std::pair<std::string, std::string>>& y_columns) {
  std::string s = labels(title, xlabel, ylabel) + "plot ";
  for (std::size_t i = 0; i < y_columns.size(); ++i) {
    if (i) s += ", \\\n     ";
    s += "'" + data + "' skip 1 using 1:" + y_columns[i].first + " with lines title '" +
         y_columns[i].second + "'";
  }
  return s + "\n";
}

std::string family_plot(const std::string& data, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel, int filter_column,
                        const std::vector<double>& values, const std::string& value_name,
                        int x_column, int y_column) {
  std::string s = labels(title, xlabel, ylabel) + "set key outside right\nplot ";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", \\\n     ";
    s += "'" + data + "' skip 1 using " + std::to_string(x_column) + ":($" +
         std::to_string(filter_column) + "==" + io::format_double(values[i]) + " ? $" +
         std::to_string(y_column) + " : 1/0) with lines title '" + value_name + "=" +
         short_label(values[i]) + "'";
  }
  return s + "\n";
}

std::string scatter_plot(const std::string& data, const std::string& title,
                         const std::string& xlabel, const std::string& ylabel, int x_column,
                         int y_column) {
  return labels(title, xlabel, ylabel) + "plot '" + data + "' skip 1 using " +
         std::to_string(x_column) + ":" + std::to_string(y_column) + " with dots notitle\n";
}

std::string map_plot(const std::string& data, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel) {
  return labels(title, xlabel, ylabel) + "plot '" + data +
         "' skip 1 using 1:2:3 with points pt 5 ps 0.5 lc palette notitle\n";
}

std::vector<double> figure_alphas(bool dense) {
  if (dense) return logspace(1.05, 6.0, 100);
  return {1.05, 1.2, 1.5, 2.0, 3.0, 6.0};
}

namespace {

constexpr int kFigureL = 2000;
constexpr double kMuI = 2.0;
constexpr double kBetaRatio = 0.2;

std::string dir_of(int figure) { return "fig" + std::to_string(figure) + "/"; }

std::string betac_tag(double beta_c) { return "betac_" + short_label(beta_c); }

SweepConfig figure_sweep(CycleKind kind, double beta_c, const cli::RunConfig& c) {
  SweepConfig s;
  s.kind = kind;
  s.base = ChainParams{kFigureL, 1.0, 1.0, 0.0, InteractionRange::short_range()};
  s.mu_i = kMuI;
  s.beta_c = beta_c;
  s.workers = resolve_workers(c.workers);
  s.refine = c.refine;
  return s;
}

void figure_1(const cli::RunConfig&, Output& out) {
  const auto mus = linspace(-3.0, 3.0, 601);
  for (double a : {0.4, 1.7, 4.0}) {
    const ChainParams p{200, 1.0, 1.0, 0.0, InteractionRange::power_law(a)};
    const std::string stem = dir_of(1) + "spectrum_alpha_" + short_label(a);
    out.table(stem, io::spectrum_table(spectrum_scan(p, mus)));
    out.plot(stem, scatter_plot("spectrum_alpha_" + short_label(a) + ".csv",
                                "L = 200, alpha = " + short_label(a), "mu", "energy", 1, 3));
  }

  io::Table t{{"alpha", "mu", "w", "residual"}, {}};
  const double nan = std::nan("");
  for (double a : linspace(0.2, 4.0, 39)) {
    const WindingCalculator calc(ChainParams{200, 1.0, 1.0, 0.0, InteractionRange::power_law(a)}, 2001);
    for (double mu : linspace(-3.0, 3.0, 121)) {
      try {
        const auto w = calc.evaluate(mu);
        t.add({a, mu, w.w, w.residual});
      } catch (const GaplessConfiguration&) {
        t.add({a, mu, nan, nan});
      }
    }
  }
  out.table(dir_of(1) + "winding", t);
  out.plot(dir_of(1) + "winding", map_plot("winding.csv", "winding number", "alpha", "mu"));
}

void figure_3(const cli::RunConfig&, Output& out) {
  const auto ratios = linspace(0.0, 1.0, 101);
  for (const auto& range : {InteractionRange::power_law(1.05), InteractionRange::power_law(2.0),
                            InteractionRange::power_law(10.0), InteractionRange::short_range()}) {
    const SpectrumBuilder b(ChainParams{kFigureL, 1.0, 1.0, kMuI, range});
    const auto& k = b.grid().k;
    std::vector<double> eps(k.size());
    io::Table t{{"k_over_pi", "mu_ratio", "energy"}, {}};
    for (double r : ratios) {
      b.energies_into(r * kMuI, eps);
      for (std::size_t i = 0; i < k.size(); i += 10) t.add({k[i] / std::numbers::pi, r, eps[i]});
    }
    const std::string name = "energy_alpha_" + short_label(range.alpha());
    out.table(dir_of(3) + name, t);
    out.plot(dir_of(3) + name, map_plot(name + ".csv", "quasiparticle energy, alpha = " +
                                                           short_label(range.alpha()),
                                        "k/pi", "mu_f/mu_i"));
  }
}

// Ratio curves against mu_f/mu_i: panels (a) R_W and (c) R_eta at beta_c = 5,
// (b) R_W and (d) R_eta at beta_c = 0.05.
void ratio_curves(int figure, CycleKind kind, const cli::RunConfig& c, Output& out) {
  const auto alphas = figure_alphas(c.dense);
  const std::pair<double, std::pair<const char*, const char*>> panels[] = {
      {5.0, {"a", "c"}}, {0.05, {"b", "d"}}};
  const std::string cycle = kind == CycleKind::otto ? "Otto" : "Stirling";
  for (const auto& [beta_c, names] : panels) {
    Sweeper sweeper(figure_sweep(kind, beta_c, c));
    io::Table work{{"alpha", "mu_ratio", "R_W"}, {}};
    io::Table eff{{"alpha", "mu_ratio", "R_eta"}, {}};
    const double nan = std::nan("");
    for (double a : alphas) {
      const auto curve = sweeper.sweep_mu(InteractionRange::power_law(a), kBetaRatio);
      for (const auto& row : curve.rows) {
        work.add({a, row.mu_ratio, row.ratios.R_W.value_or(nan)});
        eff.add({a, row.mu_ratio, row.usable() ? *row.ratios.R_eta : nan});
      }
    }
    const std::string suffix = ", beta_c = " + short_label(beta_c);
    const std::string wa = std::string("panel_") + names.first;
    const std::string ea = std::string("panel_") + names.second;
    out.table(dir_of(figure) + wa, work);
    out.table(dir_of(figure) + ea, eff);
    out.plot(dir_of(figure) + wa, family_plot(wa + ".csv", cycle + " R_W" + suffix, "mu_f/mu_i",
                                              "R_W", 1, alphas, "alpha", 2, 3));
    out.plot(dir_of(figure) + ea, family_plot(ea + ".csv", cycle + " R_eta" + suffix, "mu_f/mu_i",
                                              "R_eta", 1, alphas, "alpha", 2, 3));
  }
}

// dQ_rel and xi against alpha for a few mu_f/mu_i at both cold-bath temperatures.
void diagnostics(int figure, CycleKind kind, const cli::RunConfig& c, Output& out) {
  const auto alphas = figure_alphas(c.dense);
  const std::vector<double> mus{0.1, 0.3, 0.7, 0.9};
  for (double beta_c : {5.0, 0.05}) {
    auto cfg = figure_sweep(kind, beta_c, c);
    cfg.mu_ratio_grid = mus;
    Sweeper sweeper(cfg);
    io::Table t{{"alpha", "mu_ratio", "dQ_rel", "xi"}, {}};
    const double nan = std::nan("");
    for (double a : alphas) {
      const auto curve = sweeper.sweep_mu(InteractionRange::power_law(a), kBetaRatio);
      for (const auto& row : curve.rows) {
        t.add({a, row.mu_ratio, row.ratios.dQ_rel.value_or(nan), row.ratios.xi.value_or(nan)});
      }
    }
    const std::string name = "diagnostics_" + betac_tag(beta_c);
    out.table(dir_of(figure) + name, t);
    out.plot(dir_of(figure) + name + "_dQ",
             family_plot(name + ".csv", "dQ_h / Q_h_inf, beta_c = " + short_label(beta_c), "alpha",
                         "dQ_rel", 2, mus, "mu_f/mu_i", 1, 3));
    out.plot(dir_of(figure) + name + "_xi",
             family_plot(name + ".csv", "xi, beta_c = " + short_label(beta_c), "alpha", "xi", 2,
                         mus, "mu_f/mu_i", 1, 4));
  }
}

// Maximum ratios against alpha (several beta ratios) and against beta ratio (several alpha).
void max_ratios(int figure, CycleKind kind, double beta_c, const cli::RunConfig& c, Output& out) {
  const std::string tag = betac_tag(beta_c);
  {
    auto cfg = figure_sweep(kind, beta_c, c);
    cfg.alpha_grid = figure_alphas(c.dense);
    cfg.beta_ratio_grid = {0.2, 0.4, 0.6, 0.8};
    Sweeper sweeper(cfg);
    const auto surface = sweeper.max_ratio_surface();
    const std::string name = "max_vs_alpha_" + tag;
    out.table(dir_of(figure) + name, io::max_ratio_table(io::max_ratio_rows(surface)));
    out.plot(dir_of(figure) + name + "_W",
             family_plot(name + ".csv", "R_W,m, beta_c = " + short_label(beta_c), "alpha", "R_W,m",
                         2, cfg.beta_ratio_grid, "beta_h/beta_c", 1, 3));
    out.plot(dir_of(figure) + name + "_eta",
             family_plot(name + ".csv", "R_eta,m, beta_c = " + short_label(beta_c), "alpha",
                         "R_eta,m", 2, cfg.beta_ratio_grid, "beta_h/beta_c", 1, 4));
  }
  {
    auto cfg = figure_sweep(kind, beta_c, c);
    cfg.alpha_grid = figure_alphas(false);
    Sweeper sweeper(cfg);
    const auto surface = sweeper.max_ratio_surface();
    const std::string name = "max_vs_beta_" + tag;
    out.table(dir_of(figure) + name, io::max_ratio_table(io::max_ratio_rows(surface)));
    out.plot(dir_of(figure) + name + "_W",
             family_plot(name + ".csv", "R_W,m, beta_c = " + short_label(beta_c), "beta_h/beta_c",
                         "R_W,m", 1, cfg.alpha_grid, "alpha", 2, 3));
    out.plot(dir_of(figure) + name + "_eta",
             family_plot(name + ".csv", "R_eta,m, beta_c = " + short_label(beta_c),
                         "beta_h/beta_c", "R_eta,m", 1, cfg.alpha_grid, "alpha", 2, 4));
  }
}

void regions(int figure, CycleKind kind, const std::vector<double>& beta_cs,
             const cli::RunConfig& c, Output& out) {
  for (double beta_c : beta_cs) {
    Sweeper sweeper(figure_sweep(kind, beta_c, c));
    for (double a : {1.05, 1.5, 3.0}) {
      const auto map = sweeper.enhancement_regions(InteractionRange::power_law(a));
      const std::string name = "regions_" + betac_tag(beta_c) + "_alpha_" + short_label(a);
      out.table(dir_of(figure) + name, io::region_table(map));
      out.diagnostic(name + "_area", map.area());
      out.plot(dir_of(figure) + name,
               map_plot(name + ".csv",
                        "enhancement, alpha = " + short_label(a) + ", beta_c = " + short_label(beta_c),
                        "mu_f/mu_i", "beta_h/beta_c"));
    }
  }
}

}  // namespace

void reproduce_figure(const cli::RunConfig& c, Output& out) {
  switch (c.figure) {
    case 1:
      return figure_1(c, out);
    case 3:
      return figure_3(c, out);
    case 4:
      return ratio_curves(4, CycleKind::otto, c, out);
    case 5:
      return diagnostics(5, CycleKind::otto, c, out);
    case 6:
      max_ratios(6, CycleKind::otto, 5.0, c, out);
      return max_ratios(6, CycleKind::otto, 0.05, c, out);
    case 7:
      return regions(7, CycleKind::otto, {5.0, 0.05}, c, out);
    case 8:
      return ratio_curves(8, CycleKind::stirling, c, out);
    case 9:
      diagnostics(9, CycleKind::stirling, c, out);
      return max_ratios(9, CycleKind::stirling, 5.0, c, out);
    case 10:
      return regions(10, CycleKind::stirling, {5.0}, c, out);
    case 2:
      throw cli::ConfigError("figure 2 is a schematic; there is nothing to compute");
    default:
      throw cli::ConfigError("unsupported figure " + std::to_string(c.figure) +
                             " (expected 1 or 3-10)");
  }
}

}  // namespace lrk::figures
