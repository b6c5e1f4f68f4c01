#include "lrk/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lrk/errors.hpp"
#include "lrk/parallel.hpp"
#include "lrk/spectrum.hpp"
#include "lrk/thermo.hpp"

namespace lrk {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + step * static_cast<double>(i);
  v.back() = hi;
  return v;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  auto v = linspace(std::log(lo), std::log(hi), n);
  for (double& x : v) x = std::exp(x);
  if (n > 0) {
    v.front() = lo;
    v.back() = hi;
  }
  return v;
}

std::vector<double> default_mu_ratio_grid() {
  std::vector<double> v(201);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i) / 200.0;
  return v;
}

std::vector<double> default_beta_ratio_grid() {
  std::vector<double> v(99);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i + 1) / 100.0;
  return v;
}

std::vector<double> default_alpha_grid() { return logspace(1.025, 6.0, 100); }

namespace {

void require_sorted(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) throw InvalidParameter(std::string(name) + " must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw InvalidParameter(std::string(name) + " has a non-finite value");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw InvalidParameter(std::string(name) + " must be strictly increasing");
    }
  }
}

}  // namespace

void validate(const SweepConfig& c) {
  validate(c.base);
  if (!std::isfinite(c.mu_i) || c.mu_i < 0.0) throw InvalidParameter("mu_i must be finite and >= 0");
  if (!(c.beta_c > 0.0) || !std::isfinite(c.beta_c)) {
    throw InvalidParameter("beta_c must be finite and positive");
  }
  if (c.workers < 0) throw InvalidParameter("workers must be positive (0 selects automatically)");
  require_sorted(c.mu_ratio_grid, "mu_ratio grid");
  require_sorted(c.alpha_grid, "alpha grid");
  require_sorted(c.beta_ratio_grid, "beta_ratio grid");
  if (c.mu_ratio_grid.front() < 0.0 || c.mu_ratio_grid.back() > 1.0) {
    throw InvalidParameter("mu_ratio grid must lie in [0, 1]");
  }
  if (!(c.alpha_grid.front() > 1.0)) throw InvalidParameter("alpha grid must lie above 1");
  if (!(c.beta_ratio_grid.front() > 0.0) || !(c.beta_ratio_grid.back() < 1.0)) {
    throw InvalidParameter("beta_ratio grid must lie in (0, 1)");
  }
}

double RegionMap::area() const {
  if (mask.empty()) return 0.0;
  const auto on = std::count(mask.begin(), mask.end(), std::uint8_t{1});
  return static_cast<double>(on) / static_cast<double>(mask.size());
}

MaxRatioPoint max_ratios(const SweepCurve& curve) {
  MaxRatioPoint p;
  std::size_t usable = 0;
  bool have_w = false;
  bool have_eta = false;
  for (const auto& row : curve.rows) {
    if (!row.usable()) {
      ++p.excluded;
      continue;
    }
    ++usable;
    if (!have_w || *row.ratios.R_W > p.R_W_max) {
      p.R_W_max = *row.ratios.R_W;
      p.arg_mu_ratio_W = row.mu_ratio;
      have_w = true;
    }
    if (!have_eta || *row.ratios.R_eta > p.R_eta_max) {
      p.R_eta_max = *row.ratios.R_eta;
      p.arg_mu_ratio_eta = row.mu_ratio;
      have_eta = true;
    }
  }
  if (usable < 3) {
    throw InsufficientData("only " + std::to_string(usable) +
                           " engine-valid grid points; at least 3 are needed");
  }
  return p;
}

OptimalCondition optimal_condition(const MaxRatioSurface& s) {
  OptimalCondition o;
  bool any = false;
  const std::size_t nb = s.beta_ratio_grid.size();
  for (std::size_t a = 0; a < s.alpha_grid.size(); ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& cell = s.at(a, b);
      if (!cell) continue;
      if (!any || cell->R_W_max > o.R_W_max) {
        o.R_W_max = cell->R_W_max;
        o.alpha_index_W = a;
        o.beta_index_W = b;
      }
      if (!any || cell->R_eta_max > o.R_eta_max) {
        o.R_eta_max = cell->R_eta_max;
        o.alpha_index_eta = a;
        o.beta_index_eta = b;
      }
      any = true;
    }
  }
  if (!any) throw InsufficientData("no (alpha, beta ratio) cell has enough engine-valid points");
  o.alpha_W = s.alpha_grid[o.alpha_index_W];
  o.beta_ratio_W = s.beta_ratio_grid[o.beta_index_W];
  o.alpha_eta = s.alpha_grid[o.alpha_index_eta];
  o.beta_ratio_eta = s.beta_ratio_grid[o.beta_index_eta];
  const auto apart = [](std::size_t x, std::size_t y) { return x > y ? x - y : y - x; };
  o.coincident = apart(o.alpha_index_W, o.alpha_index_eta) <= 1 &&
                 apart(o.beta_index_W, o.beta_index_eta) <= 1;
  return o;
}

struct Sweeper::Tables {
  ChainParams base;
  SpectrumBuilder builder;
  std::vector<double> eps_initial;
  std::vector<std::vector<double>> eps_final;
  ModeThermals initial_cold;
  std::vector<ModeThermals> final_cold;

  explicit Tables(const ChainParams& p) : base(p), builder(p) {}
};

Sweeper::Sweeper(SweepConfig config) : config_(std::move(config)) {
  validate(config_);
  workers_ = resolve_workers(config_.workers);
  reference_tables_ = tables_for(InteractionRange::short_range());
}

Sweeper::~Sweeper() = default;

std::shared_ptr<const Sweeper::Tables> Sweeper::tables_for(const InteractionRange& range) const {
  if (range.is_short_range() && reference_tables_) return reference_tables_;
  ChainParams p = config_.base;
  p.range = range;
  p.mu = config_.mu_i;
  validate_for_engine(p);

  auto t = std::make_shared<Tables>(p);
  const bool lncosh = config_.kind == CycleKind::stirling;
  const std::size_t modes = t->builder.grid().size();
  t->eps_initial.resize(modes);
  t->builder.energies_into(config_.mu_i, t->eps_initial);
  t->initial_cold = mode_thermals(t->eps_initial, config_.beta_c, lncosh);

  const std::size_t n = config_.mu_ratio_grid.size();
  t->eps_final.assign(n, std::vector<double>(modes));
  t->final_cold.resize(n);
  parallel_for(n, workers_, [&](std::size_t j) {
    t->builder.energies_into(config_.mu_ratio_grid[j] * config_.mu_i, t->eps_final[j]);
    t->final_cold[j] = mode_thermals(t->eps_final[j], config_.beta_c, lncosh);
  });
  return t;
}

CycleSpec Sweeper::spec_at(const InteractionRange& range, double mu_ratio,
                           double beta_ratio) const {
  CycleSpec spec;
  spec.base = config_.base;
  spec.base.range = range;
  spec.base.mu = config_.mu_i;
  spec.mu_i = config_.mu_i;
  spec.mu_f = mu_ratio * config_.mu_i;
  spec.baths = {beta_ratio * config_.beta_c, config_.beta_c};
  return spec;
}

std::vector<CycleOutcome> Sweeper::long_range_block(const Tables& t,
                                                    const std::vector<double>& beta_ratios) const {
  const bool stirling = config_.kind == CycleKind::stirling;
  const std::size_t nm = config_.mu_ratio_grid.size();
  const std::size_t nb = beta_ratios.size();

  std::vector<ModeThermals> initial_hot(nb);
  parallel_for(nb, workers_, [&](std::size_t b) {
    initial_hot[b] = mode_thermals(t.eps_initial, beta_ratios[b] * config_.beta_c, stirling);
  });

  std::vector<CycleOutcome> out(nb * nm);
  parallel_for(nb * nm, workers_, [&](std::size_t idx) {
    const std::size_t b = idx / nm;
    const std::size_t j = idx % nm;
    const CycleSpec spec = spec_at(t.base.range, config_.mu_ratio_grid[j], beta_ratios[b]);
    if (stirling) {
      const auto final_hot = mode_thermals(t.eps_final[j], spec.baths.beta_h, true);
      out[idx] = outcome(make_stirling_result(
          spec, stirling_heats(t.eps_initial, t.eps_final[j], initial_hot[b], t.initial_cold,
                               final_hot, t.final_cold[j])));
    } else {
      out[idx] = outcome(make_otto_result(
          spec, otto_heats(t.eps_initial, t.eps_final[j], initial_hot[b].tanh_half,
                           t.final_cold[j].tanh_half)));
    }
  });
  return out;
}

std::shared_ptr<const std::vector<CycleOutcome>> Sweeper::reference_curve(double beta_ratio) {
  std::lock_guard lock(cache_mutex_);
  if (auto it = reference_cache_.find(beta_ratio); it != reference_cache_.end()) return it->second;
  auto curve = std::make_shared<const std::vector<CycleOutcome>>(
      long_range_block(*reference_tables_, {beta_ratio}));
  reference_evaluations_ += curve->size();
  reference_cache_.emplace(beta_ratio, curve);
  return curve;
}

namespace {

SweepCurve assemble_curve(const InteractionRange& range, double beta_ratio,
                          const std::vector<double>& mu_grid, const CycleOutcome* lr,
                          const std::vector<CycleOutcome>& sr) {
  SweepCurve c;
  c.range = range;
  c.beta_ratio = beta_ratio;
  c.rows.resize(mu_grid.size());
  for (std::size_t j = 0; j < mu_grid.size(); ++j) {
    auto& row = c.rows[j];
    row.mu_ratio = mu_grid[j];
    row.ratios = ratio_diagnostics(lr[j], sr[j]);
    row.engine_lr = lr[j].engine_valid;
    row.engine_sr = sr[j].engine_valid;
    if (!row.usable()) ++c.excluded;
  }
  return c;
}

}  // namespace

SweepCurve Sweeper::sweep_mu(const InteractionRange& range, double beta_ratio) {
  if (!(beta_ratio > 0.0) || !(beta_ratio < 1.0)) {
    throw InvalidParameter("beta ratio must lie in (0, 1)");
  }
  const auto tables = tables_for(range);
  const auto reference = reference_curve(beta_ratio);
  const auto lr = long_range_block(*tables, {beta_ratio});
  return assemble_curve(range, beta_ratio, config_.mu_ratio_grid, lr.data(), *reference);
}

std::vector<CycleOutcome> Sweeper::outcomes(const InteractionRange& range) const {
  return long_range_block(*tables_for(range), config_.beta_ratio_grid);
}

std::vector<CycleOutcome> Sweeper::reference_outcomes(double beta_ratio) {
  return *reference_curve(beta_ratio);
}

CycleOutcome Sweeper::evaluate(const InteractionRange& range, double mu_ratio,
                               double beta_ratio) const {
  const CycleSpec spec = spec_at(range, mu_ratio, beta_ratio);
  return evaluate_cycle(config_.kind, spec, SpectrumBuilder(spec.base));
}

void Sweeper::refine(const InteractionRange& range, double beta_ratio, const SweepCurve& curve,
                     MaxRatioPoint& point) {
  const auto tables = tables_for(range);
  const auto ratio_at = [&](double mu_ratio, bool work) {
    const CycleSpec lr_spec = spec_at(range, mu_ratio, beta_ratio);
    const CycleSpec sr_spec = spec_at(InteractionRange::short_range(), mu_ratio, beta_ratio);
    const auto lr = evaluate_cycle(config_.kind, lr_spec, tables->builder);
    const auto sr = evaluate_cycle(config_.kind, sr_spec, reference_tables_->builder);
    ++reference_evaluations_;
    const auto d = ratio_diagnostics(lr, sr);
    const auto& r = work ? d.R_W : d.R_eta;
    if (!lr.engine_valid || !sr.engine_valid || !r) return -std::numeric_limits<double>::infinity();
    return *r;
  };

  const auto search = [&](double arg, bool work, double& best, double& best_arg) {
    const auto& rows = curve.rows;
    std::size_t i = 0;
    while (i < rows.size() && rows[i].mu_ratio != arg) ++i;
    if (i == 0 || i + 1 >= rows.size()) return;
    double lo = rows[i - 1].mu_ratio;
    double hi = rows[i + 1].mu_ratio;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = ratio_at(x1, work);
    double f2 = ratio_at(x2, work);
    for (int iter = 0; iter < 60 && hi - lo > 1e-10; ++iter) {
      if (f1 >= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = ratio_at(x1, work);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = ratio_at(x2, work);
      }
    }
    const double x = f1 >= f2 ? x1 : x2;
    const double f = std::max(f1, f2);
    if (f > best) {
      best = f;
      best_arg = x;
    }
  };

  search(point.arg_mu_ratio_W, true, point.R_W_max, point.arg_mu_ratio_W);
  search(point.arg_mu_ratio_eta, false, point.R_eta_max, point.arg_mu_ratio_eta);
}

MaxRatioPoint Sweeper::max_ratios(const InteractionRange& range, double beta_ratio) {
  const auto curve = sweep_mu(range, beta_ratio);
  auto point = lrk::max_ratios(curve);
  if (config_.refine) refine(range, beta_ratio, curve, point);
  return point;
}

RegionMap Sweeper::enhancement_regions(const InteractionRange& range) {
  const auto tables = tables_for(range);
  const auto& betas = config_.beta_ratio_grid;
  const auto& mus = config_.mu_ratio_grid;
  const auto lr = long_range_block(*tables, betas);

  RegionMap map;
  map.kind = config_.kind;
  map.range = range;
  map.mu_ratio_grid = mus;
  map.beta_ratio_grid = betas;
  map.mask.assign(mus.size() * betas.size(), 0);
  for (std::size_t b = 0; b < betas.size(); ++b) {
    const auto reference = reference_curve(betas[b]);
    const auto curve = assemble_curve(range, betas[b], mus, lr.data() + b * mus.size(), *reference);
    map.excluded += curve.excluded;
    for (std::size_t i = 0; i < mus.size(); ++i) {
      const auto& row = curve.rows[i];
      map.mask[i * betas.size() + b] =
          row.usable() && *row.ratios.R_W > 1.0 && *row.ratios.R_eta > 1.0 ? 1 : 0;
    }
  }
  return map;
}

MaxRatioSurface Sweeper::max_ratio_surface() {
  MaxRatioSurface s;
  s.alpha_grid = config_.alpha_grid;
  s.beta_ratio_grid = config_.beta_ratio_grid;
  const auto& betas = config_.beta_ratio_grid;
  const auto& mus = config_.mu_ratio_grid;
  s.cells.resize(s.alpha_grid.size() * betas.size());

  std::vector<std::shared_ptr<const std::vector<CycleOutcome>>> references(betas.size());
  for (std::size_t b = 0; b < betas.size(); ++b) references[b] = reference_curve(betas[b]);

  for (std::size_t a = 0; a < s.alpha_grid.size(); ++a) {
    const auto range = InteractionRange::power_law(s.alpha_grid[a]);
    const auto tables = tables_for(range);
    const auto lr = long_range_block(*tables, betas);
    for (std::size_t b = 0; b < betas.size(); ++b) {
      const auto curve =
          assemble_curve(range, betas[b], mus, lr.data() + b * mus.size(), *references[b]);
      try {
        auto point = lrk::max_ratios(curve);
        if (config_.refine) refine(range, betas[b], curve, point);
        s.cells[a * betas.size() + b] = point;
      } catch (const InsufficientData&) {
        ++s.insufficient;
      }
    }
  }
  return s;
}

OptimalCondition Sweeper::optimal_condition() { return lrk::optimal_condition(max_ratio_surface()); }

}  // namespace lrk
