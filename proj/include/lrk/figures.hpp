#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "lrk/cli.hpp"
#include "lrk/io.hpp"

namespace lrk::figures {

/// Collects everything one run writes below its output directory.
class Output {
 public:
  Output(std::filesystem::path dir, bool json_tables, bool plots);

  /// Writes `stem`.csv (or .json); `stem` may contain a subdirectory.
  void table(const std::string& stem, const io::Table& table);
  void json(const std::string& name, const io::Json& value);
  /// Writes `stem`.gp rendering to `stem`.png; skipped for JSON tables or when plots are off.
  void plot(const std::string& stem, const std::string& body);
  void diagnostic(const std::string& key, io::Json value);

  const std::vector<std::string>& files() const noexcept { return files_; }
  const io::Json& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::filesystem::path dir_;
  bool json_tables_;
  bool plots_;
  std::vector<std::string> files_;
  io::Json diagnostics_ = io::Json::object();
};

// gnuplot script bodies. Column numbers are 1-based; data files are given relative to the script.

std::string line_plot(const std::string& data, const std::string& title, const std::string& xlabel,
                      const std::string& ylabel,
                      const std::vector<std::pair<std::string, std::string>>& y_columns);

/// One curve per value of `filter_column`.
std::string family_plot(const std::string& data, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel, int filter_column,
                        const std::vector<double>& values, const std::string& value_name,
                        int x_column, int y_column);

std::string scatter_plot(const std::string& data, const std::string& title,
                         const std::string& xlabel, const std::string& ylabel, int x_column,
                         int y_column);

/// Colour map of column 3 over columns 1 and 2.
std::string map_plot(const std::string& data, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel);

/// The representative alpha values of the ratio figures, or 100 log-spaced values when dense.
std::vector<double> figure_alphas(bool dense);

/// Reproduces figure config.figure (1, 3-10) with the captioned parameters.
void reproduce_figure(const cli::RunConfig& config, Output& out);

}  // namespace lrk::figures
