#include "lrk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "lrk/errors.hpp"
#include "lrk/figures.hpp"
#include "lrk/io.hpp"
#include "lrk/parallel.hpp"
#include "lrk/spectrum.hpp"
#include "lrk/sweep.hpp"

namespace lrk::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || end != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError("expected a finite number, got '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || end != t.data() + t.size()) {
    throw ConfigError("expected an integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& text) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError("expected true or false, got '" + text + "'");
}

// "lo:hi:n" (uniform), "log:lo:hi:n" (log-spaced) or "a,b,c".
std::vector<double> parse_grid(const std::string& text) {
  const std::string t = trim(text);
  if (t.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(t);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    const bool log = !parts.empty() && trim(parts[0]) == "log";
    if (log) parts.erase(parts.begin());
    if (parts.size() != 3) throw ConfigError("grid must be lo:hi:n, log:lo:hi:n or a list");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const int n = parse_int(parts[2]);
    if (n < 1) throw ConfigError("grid point count must be positive");
    if (log && !(lo > 0.0 && hi > 0.0)) throw ConfigError("log grid needs positive bounds");
    return log ? logspace(lo, hi, static_cast<std::size_t>(n))
               : linspace(lo, hi, static_cast<std::size_t>(n));
  }
  std::vector<double> out;
  std::stringstream ss(t);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_double(p));
  if (out.empty()) throw ConfigError("grid must not be empty");
  return out;
}

std::string grid_text(const std::vector<double>& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ',';
    s += io::format_double(g[i]);
  }
  return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Key {
  std::string name;
  std::string help;
  bool is_flag = false;
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::string(const RunConfig&)> get;
};

Key real_key(std::string name, std::string help, double RunConfig::*field) {
  return {std::move(name), std::move(help), false,
          [field](RunConfig& c, const std::string& v) { c.*field = parse_double(v); },
          [field](const RunConfig& c) { return io::format_double(c.*field); }};
}

Key int_key(std::string name, std::string help, int RunConfig::*field) {
  return {std::move(name), std::move(help), false,
          [field](RunConfig& c, const std::string& v) { c.*field = parse_int(v); },
          [field](const RunConfig& c) { return std::to_string(c.*field); }};
}

Key flag_key(std::string name, std::string help, bool RunConfig::*field) {
  return {std::move(name), std::move(help), true,
          [field](RunConfig& c, const std::string& v) { c.*field = parse_bool(v); },
          [field](const RunConfig& c) { return bool_text(c.*field); }};
}

Key grid_key(std::string name, std::string help, std::vector<double> RunConfig::*field) {
  return {std::move(name), std::move(help), false,
          [field](RunConfig& c, const std::string& v) { c.*field = parse_grid(v); },
          [field](const RunConfig& c) { return grid_text(c.*field); }};
}

const std::vector<Key>& registry() {
  static const std::vector<Key> keys = [] {
    std::vector<Key> k;
    k.push_back(int_key("L", "number of sites (even)", &RunConfig::L));
    k.push_back(real_key("J", "hopping amplitude", &RunConfig::J));
    k.push_back(real_key("Delta", "pairing amplitude", &RunConfig::Delta));
    k.push_back({"alpha", "pairing decay exponent, or inf for the short-range chain", false,
                 [](RunConfig& c, const std::string& v) {
                   try {
                     c.alpha = InteractionRange::parse(trim(v));
                   } catch (const InvalidParameter& e) {
                     throw ConfigError(e.what());
                   }
                 },
                 [](const RunConfig& c) { return c.alpha.to_string(); }});
    k.push_back(real_key("mu", "chemical potential (winding)", &RunConfig::mu));
    k.push_back(real_key("mu_min", "lower end of the spectrum scan", &RunConfig::mu_min));
    k.push_back(real_key("mu_max", "upper end of the spectrum scan", &RunConfig::mu_max));
    k.push_back(int_key("mu_points", "points in the spectrum scan", &RunConfig::mu_points));
    k.push_back(int_key("density", "winding probe points on [-pi, pi]", &RunConfig::density));
    k.push_back({"cycle", "otto or stirling", false,
                 [](RunConfig& c, const std::string& v) {
                   try {
                     c.cycle = parse_cycle_kind(trim(v));
                   } catch (const InvalidParameter& e) {
                     throw ConfigError(e.what());
                   }
                 },
                 [](const RunConfig& c) { return std::string(to_string(c.cycle)); }});
    k.push_back(real_key("mu_i", "initial chemical potential", &RunConfig::mu_i));
    k.push_back(real_key("mu_f", "final chemical potential", &RunConfig::mu_f));
    k.push_back({"beta_h", "hot-bath inverse temperature (default beta_ratio * beta_c)", false,
                 [](RunConfig& c, const std::string& v) {
                   if (trim(v).empty()) {
                     c.beta_h.reset();
                   } else {
                     c.beta_h = parse_double(v);
                   }
                 },
                 [](const RunConfig& c) {
                   return c.beta_h ? io::format_double(*c.beta_h) : std::string();
                 }});
    k.push_back(real_key("beta_c", "cold-bath inverse temperature", &RunConfig::beta_c));
    k.push_back(real_key("beta_ratio", "beta_h / beta_c", &RunConfig::beta_ratio));
    k.push_back(flag_key("sweep_mu", "sweep mu_f / mu_i instead of a single cycle", &RunConfig::sweep_mu));
    k.push_back(grid_key("mu_ratio_grid", "mu_f / mu_i values", &RunConfig::mu_ratio_grid));
    k.push_back(grid_key("alpha_grid", "alpha values", &RunConfig::alpha_grid));
    k.push_back(grid_key("beta_ratio_grid", "beta_h / beta_c values", &RunConfig::beta_ratio_grid));
    k.push_back(int_key("workers", "worker threads (0: automatic; LRK_WORKERS overrides)", &RunConfig::workers));
    k.push_back(flag_key("refine", "golden-section refinement of maxima", &RunConfig::refine));
    k.push_back({"output_dir", "directory for results", false,
                 [](RunConfig& c, const std::string& v) {
                   if (trim(v).empty()) throw ConfigError("output_dir must not be empty");
                   c.output_dir = trim(v);
                 },
                 [](const RunConfig& c) { return c.output_dir.string(); }});
    k.push_back({"format", "csv or json", false,
                 [](RunConfig& c, const std::string& v) {
                   const auto t = trim(v);
                   if (t == "csv") {
                     c.format = OutputFormat::csv;
                   } else if (t == "json") {
                     c.format = OutputFormat::json;
                   } else {
                     throw ConfigError("format must be csv or json, got '" + v + "'");
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(c.format == OutputFormat::csv ? "csv" : "json");
                 }});
    k.push_back(flag_key("emit_plots", "write gnuplot scripts next to the data", &RunConfig::emit_plots));
    k.push_back(int_key("figure", "figure number for reproduce-figure", &RunConfig::figure));
    k.push_back(flag_key("dense", "100-point alpha sampling in figure runs", &RunConfig::dense));
    return k;
  }();
  return keys;
}

const Key& find_key(const std::string& name) {
  for (const auto& k : registry()) {
    if (k.name == name) return k;
  }
  throw ConfigError("unknown key '" + name + "'");
}

std::string flag_name(const std::string& key) {
  std::string s = key;
  std::replace(s.begin(), s.end(), '_', '-');
  return "--" + s;
}

SweepConfig sweep_config(const RunConfig& c, CycleKind kind, double beta_c) {
  SweepConfig s;
  s.kind = kind;
  s.base = ChainParams{c.L, c.J, c.Delta, 0.0, InteractionRange::short_range()};
  s.mu_i = c.mu_i;
  s.mu_ratio_grid = c.mu_ratio_grid;
  s.alpha_grid = c.alpha_grid;
  s.beta_c = beta_c;
  s.beta_ratio_grid = c.beta_ratio_grid;
  s.workers = resolve_workers(c.workers);
  s.refine = c.refine;
  return s;
}

ChainParams chain_of(const RunConfig& c, double mu) { return {c.L, c.J, c.Delta, mu, c.alpha}; }

void run_spectrum(const RunConfig& c, figures::Output& out) {
  if (c.mu_points < 1) throw InvalidParameter("mu_points must be positive");
  const auto mus = linspace(c.mu_min, c.mu_max, static_cast<std::size_t>(c.mu_points));
  out.table("spectrum", io::spectrum_table(spectrum_scan(chain_of(c, 0.0), mus)));
  out.plot("spectrum", figures::scatter_plot("spectrum.csv", "alpha = " + c.alpha.to_string(),
                                             "mu", "energy", 1, 3));
}

void run_winding(const RunConfig& c, figures::Output& out) {
  const WindingCalculator calc(chain_of(c, c.mu), c.density);
  out.json("winding.json", io::to_json(calc.evaluate(c.mu)));
}

void run_sweep(const RunConfig& c, CycleKind kind, figures::Output& out) {
  Sweeper sweeper(sweep_config(c, kind, c.beta_c));
  const auto curve = sweeper.sweep_mu(c.alpha, c.beta_ratio);
  out.table("sweep", io::sweep_table(curve));
  out.diagnostic("excluded_points", static_cast<std::int64_t>(curve.excluded));
  out.plot("sweep", figures::line_plot("sweep.csv", std::string(to_string(kind)) + " ratios",
                                       "mu_f/mu_i", "ratio", {{"2", "R_W"}, {"3", "R_eta"}}));
}

void run_cycle(const RunConfig& c, CycleKind kind, figures::Output& out) {
  if (c.sweep_mu) {
    run_sweep(c, kind, out);
    return;
  }
  CycleSpec spec;
  spec.base = chain_of(c, c.mu_i);
  spec.mu_i = c.mu_i;
  spec.mu_f = c.mu_f;
  spec.baths = {c.hot_beta(), c.beta_c};
  out.json("cycle.json", kind == CycleKind::otto ? io::to_json(otto_cycle(spec))
                                                 : io::to_json(stirling_cycle(spec)));
}

void run_regions(const RunConfig& c, figures::Output& out) {
  Sweeper sweeper(sweep_config(c, c.cycle, c.beta_c));
  const auto map = sweeper.enhancement_regions(c.alpha);
  out.table("regions", io::region_table(map));
  out.diagnostic("excluded_points", static_cast<std::int64_t>(map.excluded));
  out.diagnostic("area", map.area());
  out.plot("regions", figures::map_plot("regions.csv", "enhancement regions", "mu_f/mu_i",
                                        "beta_h/beta_c"));
}

void run_optimal(const RunConfig& c, figures::Output& out) {
  Sweeper sweeper(sweep_config(c, c.cycle, c.beta_c));
  const auto surface = sweeper.max_ratio_surface();
  out.table("max_ratios", io::max_ratio_table(io::max_ratio_rows(surface)));
  out.diagnostic("insufficient_cells", static_cast<std::int64_t>(surface.insufficient));
  out.json("optimal.json", io::to_json(optimal_condition(surface), c.cycle, c.beta_c));
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"spectrum", "winding", "otto",    "stirling",
                                              "sweep",    "regions", "optimal", "reproduce-figure"};
  return names;
}

const char* describe(const std::string& command) {
  static const std::map<std::string, const char*> text{
      {"spectrum", "quasiparticle energies over a mu scan"},
      {"winding", "winding number at one (alpha, mu)"},
      {"otto", "one Otto cycle, or a mu_f/mu_i sweep with --sweep-mu"},
      {"stirling", "one Stirling cycle, or a mu_f/mu_i sweep with --sweep-mu"},
      {"sweep", "ratio curves against mu_f/mu_i for --cycle"},
      {"regions", "enhancement map over (mu_f/mu_i, beta_h/beta_c)"},
      {"optimal", "maximum ratios over (alpha, beta_h/beta_c) and their argmax"},
      {"reproduce-figure", "data and gnuplot scripts for one figure"}};
  return text.at(command);
}

void dispatch(const std::string& command, const RunConfig& c, figures::Output& out) {
  if (command == "spectrum") return run_spectrum(c, out);
  if (command == "winding") return run_winding(c, out);
  if (command == "otto") return run_cycle(c, CycleKind::otto, out);
  if (command == "stirling") return run_cycle(c, CycleKind::stirling, out);
  if (command == "sweep") return run_sweep(c, c.cycle, out);
  if (command == "regions") return run_regions(c, out);
  if (command == "optimal") return run_optimal(c, out);
  if (command == "reproduce-figure") return figures::reproduce_figure(c, out);
  throw ConfigError("unknown command '" + command + "'");
}

}  // namespace

RunConfig::RunConfig()
    : mu_ratio_grid(default_mu_ratio_grid()),
      alpha_grid(default_alpha_grid()),
      beta_ratio_grid(default_beta_ratio_grid()) {}

std::vector<std::string> config_keys() {
  std::vector<std::string> names;
  for (const auto& k : registry()) names.push_back(k.name);
  return names;
}

void apply(RunConfig& config, const std::string& key, const std::string& value) {
  const Key& k = find_key(key);
  try {
    k.set(config, value);
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

std::string value_of(const RunConfig& config, const std::string& key) {
  return find_key(key).get(config);
}

void load_ini(RunConfig& config, const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    const auto where = source + ":" + std::to_string(number) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      apply(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError(path.string() + ": cannot open config file");
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    io::Json manifest;
    try {
      manifest = io::Json::parse(text);
    } catch (const io::Json::parse_error& e) {
      throw ConfigError(path.string() + ": invalid JSON: " + e.what());
    }
    if (!manifest.contains("inputs") || !manifest["inputs"].is_object()) {
      throw ConfigError(path.string() + ": manifest has no \"inputs\" object");
    }
    for (const auto& [key, value] : manifest["inputs"].items()) {
      if (!value.is_string()) throw ConfigError(path.string() + ": input '" + key + "' is not a string");
      try {
        apply(config, key, value.get<std::string>());
      } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
      }
    }
    return;
  }
  load_ini(config, text, path.string());
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Long-range Kitaev chain quantum heat engines", "lrk"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  struct Pending {
    CLI::App* sub = nullptr;
    std::string config_path;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    std::map<std::string, CLI::Option*> options;
    int figure = 0;
    CLI::Option* figure_option = nullptr;
  };
  std::map<std::string, Pending> pending;

  for (const auto& name : command_names()) {
    auto& p = pending[name];
    p.sub = app.add_subcommand(name, describe(name));
    p.sub->add_option("--config", p.config_path, "INI config file or run-manifest.json");
    for (const auto& k : registry()) {
      if (k.is_flag) {
        p.flags[k.name] = false;
        p.options[k.name] = p.sub->add_flag(flag_name(k.name) + ",!--no-" + flag_name(k.name).substr(2),
                                            p.flags[k.name], k.help);
      } else {
        p.options[k.name] = p.sub->add_option(flag_name(k.name), p.values[k.name], k.help);
      }
    }
    if (name == "reproduce-figure") {
      p.figure_option = p.sub->add_option("n", p.figure, "figure number (1, 3-10)");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  std::string command;
  for (const auto& [name, p] : pending) {
    if (p.sub->parsed()) command = name;
  }
  const auto& p = pending.at(command);

  const auto started = std::chrono::steady_clock::now();
  RunConfig config;
  try {
    if (!p.config_path.empty()) load_config_file(config, p.config_path);
    for (const auto& k : registry()) {
      if (p.options.at(k.name)->count() == 0) continue;
      apply(config, k.name, k.is_flag ? bool_text(p.flags.at(k.name)) : p.values.at(k.name));
    }
    if (p.figure_option && p.figure_option->count() > 0) config.figure = p.figure;
    if (const char* env = std::getenv("LRK_WORKERS")) {
      if (!trim(env).empty()) config.workers = parse_int(env);
    }
  } catch (const ConfigError& e) {
    std::cerr << "lrk: config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    figures::Output out(config.output_dir, config.format == OutputFormat::json, config.emit_plots);
    dispatch(command, config, out);

    io::Json manifest;
    manifest["tool"] = "lrk";
    manifest["version"] = kToolVersion;
    manifest["command"] = command;
    io::Json inputs = io::Json::object();
    for (const auto& k : registry()) inputs[k.name] = k.get(config);
    manifest["inputs"] = inputs;
    manifest["outputs"] = out.files();
    manifest["diagnostics"] = out.diagnostics();
    manifest["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    io::write_json(config.output_dir / "run-manifest.json", manifest);
  } catch (const ConfigError& e) {
    std::cerr << "lrk: config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvalidParameter& e) {
    std::cerr << "lrk: invalid parameter: " << e.what() << "\n";
    return kConfigError;
  } catch (const IoFailure& e) {
    std::cerr << "lrk: I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    std::cerr << "lrk: " << e.what() << "\n";
    return kContractError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "lrk: I/O error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace lrk::cli
