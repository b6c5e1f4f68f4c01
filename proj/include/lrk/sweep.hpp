#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lrk/chain.hpp"
#include "lrk/cycles.hpp"

namespace lrk {

std::vector<double> default_mu_ratio_grid();    // 201 points on [0, 1]
std::vector<double> default_beta_ratio_grid();  // 0.01, 0.02, ..., 0.99
std::vector<double> default_alpha_grid();       // 100 log-spaced points on [1.025, 6]

std::vector<double> linspace(double lo, double hi, std::size_t n);
std::vector<double> logspace(double lo, double hi, std::size_t n);

struct SweepConfig {
  CycleKind kind = CycleKind::otto;
  ChainParams base{2000, 1.0, 1.0, 0.0, InteractionRange::short_range()};  // range and mu unused
  double mu_i = 2.0;
  std::vector<double> mu_ratio_grid = default_mu_ratio_grid();
  std::vector<double> alpha_grid = default_alpha_grid();
  double beta_c = 5.0;
  std::vector<double> beta_ratio_grid = default_beta_ratio_grid();
  int workers = 0;  // 0: LRK_WORKERS or hardware concurrency
  bool refine = false;
};

void validate(const SweepConfig& config);

struct SweepRow {
  double mu_ratio = 0.0;
  RatioDiagnostics ratios;
  bool engine_lr = false;
  bool engine_sr = false;

  /// Both runs are engines and both ratios exist.
  bool usable() const noexcept { return engine_lr && engine_sr && ratios.R_W && ratios.R_eta; }
};

struct SweepCurve {
  InteractionRange range = InteractionRange::short_range();
  double beta_ratio = 0.0;
  std::vector<SweepRow> rows;
  std::size_t excluded = 0;  // rows that are not usable()
};

struct MaxRatioPoint {
  double R_W_max = 0.0;
  double R_eta_max = 0.0;
  double arg_mu_ratio_W = 0.0;
  double arg_mu_ratio_eta = 0.0;
  std::size_t excluded = 0;
};

/// Maximum ratios over mu_ratio_grid for one curve. Throws InsufficientData
/// when fewer than 3 points are usable.
MaxRatioPoint max_ratios(const SweepCurve& curve);

struct RegionMap {
  CycleKind kind = CycleKind::otto;
  InteractionRange range = InteractionRange::short_range();
  std::vector<double> mu_ratio_grid;
  std::vector<double> beta_ratio_grid;
  std::vector<std::uint8_t> mask;  // mask[i * beta_ratio_grid.size() + j]
  std::size_t excluded = 0;

  bool at(std::size_t mu_index, std::size_t beta_index) const {
    return mask[mu_index * beta_ratio_grid.size() + beta_index] != 0;
  }
  /// Fraction of true cells.
  double area() const;
};

struct MaxRatioSurface {
  std::vector<double> alpha_grid;
  std::vector<double> beta_ratio_grid;
  std::vector<std::optional<MaxRatioPoint>> cells;  // cells[a * beta_ratio_grid.size() + b]
  std::size_t insufficient = 0;

  const std::optional<MaxRatioPoint>& at(std::size_t alpha_index, std::size_t beta_index) const {
    return cells[alpha_index * beta_ratio_grid.size() + beta_index];
  }
};

struct OptimalCondition {
  double alpha_W = 0.0;
  double beta_ratio_W = 0.0;
  double R_W_max = 0.0;
  double alpha_eta = 0.0;
  double beta_ratio_eta = 0.0;
  double R_eta_max = 0.0;
  std::size_t alpha_index_W = 0, beta_index_W = 0;
  std::size_t alpha_index_eta = 0, beta_index_eta = 0;
  /// The two argmax cells are at most one cell apart along each axis.
  bool coincident = false;
};

/// Argmax of R_W_max and R_eta_max over the surface; throws InsufficientData if it has no cells.
OptimalCondition optimal_condition(const MaxRatioSurface& surface);

/// Runs sweeps for one configuration. Short-range reference cycles are computed
/// once per (beta ratio, mu ratio) and shared by every alpha; the count of such
/// evaluations is exposed for inspection.
class Sweeper {
 public:
  explicit Sweeper(SweepConfig config);
  ~Sweeper();

  Sweeper(const Sweeper&) = delete;
  Sweeper& operator=(const Sweeper&) = delete;

  const SweepConfig& config() const noexcept { return config_; }

  SweepCurve sweep_mu(const InteractionRange& range, double beta_ratio);

  /// Grid maximum, optionally refined by golden-section search around it.
  MaxRatioPoint max_ratios(const InteractionRange& range, double beta_ratio);

  RegionMap enhancement_regions(const InteractionRange& range);

  /// max_ratios for every (alpha, beta ratio) of the configured grids.
  MaxRatioSurface max_ratio_surface();

  OptimalCondition optimal_condition();

  /// Number of short-range reference cycles evaluated so far.
  std::size_t reference_evaluations() const noexcept { return reference_evaluations_.load(); }

  /// Long-range outcomes over beta_ratio_grid x mu_ratio_grid, index b * n_mu + j.
  std::vector<CycleOutcome> outcomes(const InteractionRange& range) const;

  /// Short-range outcomes along mu_ratio_grid at one beta ratio (shared with the sweeps).
  std::vector<CycleOutcome> reference_outcomes(double beta_ratio);

  /// Single-point evaluation, identical to what the grid sweeps compute.
  CycleOutcome evaluate(const InteractionRange& range, double mu_ratio, double beta_ratio) const;

 private:
  struct Tables;

  std::shared_ptr<const Tables> tables_for(const InteractionRange& range) const;
  std::shared_ptr<const std::vector<CycleOutcome>> reference_curve(double beta_ratio);
  std::vector<CycleOutcome> long_range_block(const Tables& tables,
                                             const std::vector<double>& beta_ratios) const;
  CycleSpec spec_at(const InteractionRange& range, double mu_ratio, double beta_ratio) const;
  void refine(const InteractionRange& range, double beta_ratio, const SweepCurve& curve,
              MaxRatioPoint& point);

  SweepConfig config_;
  int workers_;
  std::shared_ptr<const Tables> reference_tables_;
  std::mutex cache_mutex_;
  std::map<double, std::shared_ptr<const std::vector<CycleOutcome>>> reference_cache_;
  std::atomic<std::size_t> reference_evaluations_{0};
};

}  // namespace lrk
