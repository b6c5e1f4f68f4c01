#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrk/chain.hpp"
#include "lrk/cycles.hpp"

namespace lrk::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kConfigError = 2, kContractError = 3, kIoError = 4 };

/// Bad configuration text; the message carries the file and line where known.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct RunConfig {
  // chain
  int L = 2000;
  double J = 1.0;
  double Delta = 1.0;
  InteractionRange alpha = InteractionRange::power_law(1.05);
  // spectrum / winding
  double mu = 0.0;
  double mu_min = -4.0;
  double mu_max = 4.0;
  int mu_points = 401;
  int density = 2001;
  // cycles
  CycleKind cycle = CycleKind::otto;
  double mu_i = 2.0;
  double mu_f = 1.0;
  std::optional<double> beta_h;  // defaults to beta_ratio * beta_c
  double beta_c = 5.0;
  double beta_ratio = 0.2;
  bool sweep_mu = false;
  // sweeps
  std::vector<double> mu_ratio_grid;
  std::vector<double> alpha_grid;
  std::vector<double> beta_ratio_grid;
  int workers = 0;
  bool refine = false;
  // output
  std::filesystem::path output_dir = "results";
  OutputFormat format = OutputFormat::csv;
  bool emit_plots = true;
  // reproduce-figure
  int figure = 0;
  bool dense = false;

  RunConfig();
  double hot_beta() const { return beta_h ? *beta_h : beta_ratio * beta_c; }
};

/// Every configuration key, in the order used for manifests.
std::vector<std::string> config_keys();

/// Applies one key; throws ConfigError on unknown keys or bad values.
void apply(RunConfig& config, const std::string& key, const std::string& value);

/// Canonical text of a key's current value; parsing it back gives the same value.
std::string value_of(const RunConfig& config, const std::string& key);

/// Flat "key = value" file. '#' and ';' start comments; "[section]" lines are ignored.
void load_ini(RunConfig& config, const std::string& text, const std::string& source_name);

/// Loads a config file: INI text, or a run manifest (JSON with an "inputs" object).
void load_config_file(RunConfig& config, const std::filesystem::path& path);

/// Runs one command; returns an ExitCode. Messages go to stderr.
int run(const std::vector<std::string>& args);
int main(int argc, char** argv);

}  // namespace lrk::cli
