#pragma once

#include <optional>
#include <span>

#include "lrk/chain.hpp"
#include "lrk/spectrum.hpp"
#include "lrk/thermo.hpp"

namespace lrk {

/// Inverse temperatures of the hot and cold reservoirs; 0 < beta_h <= beta_c.
struct BathPair {
  double beta_h = 1.0;
  double beta_c = 5.0;

  friend bool operator==(const BathPair&, const BathPair&) = default;
};

void validate(const BathPair& baths);

/// Carnot bound 1 - beta_h / beta_c.
double carnot_efficiency(const BathPair& baths);

/// One cycle between mu_i and mu_f (0 <= mu_f <= mu_i). base.mu is ignored.
struct CycleSpec {
  ChainParams base;
  double mu_i = 2.0;
  double mu_f = 1.0;
  BathPair baths;
};

void validate(const CycleSpec& spec);

enum class CycleKind { otto, stirling };

const char* to_string(CycleKind kind);
CycleKind parse_cycle_kind(const std::string& text);

/// All heats are positive when absorbed by the working medium.
struct OttoResult {
  CycleSpec spec;
  double Q_h = 0.0;
  double Q_c = 0.0;
  double W = 0.0;
  std::optional<double> eta;  // set only when engine_valid
  bool engine_valid = false;
};

struct StirlingResult {
  CycleSpec spec;
  double Q_I = 0.0;    // isothermal mu_i -> mu_f at beta_h
  double Q_II = 0.0;   // mu_f, beta_h -> beta_c
  double Q_III = 0.0;  // isothermal mu_f -> mu_i at beta_c
  double Q_IV = 0.0;   // mu_i, beta_c -> beta_h
  double W = 0.0;
  double Q_h = 0.0;  // Q_I + Q_IV
  std::optional<double> eta;
  bool engine_valid = false;
};

/// The fields shared by both cycle kinds; the input of ratio_diagnostics.
struct CycleOutcome {
  CycleKind kind = CycleKind::otto;
  CycleSpec spec;
  double W = 0.0;
  double Q_h = 0.0;
  std::optional<double> eta;
  bool engine_valid = false;
};

CycleOutcome outcome(const OttoResult& r);
CycleOutcome outcome(const StirlingResult& r);

OttoResult otto_cycle(const CycleSpec& spec);
StirlingResult stirling_cycle(const CycleSpec& spec);

/// Variants that reuse a builder made for spec.base (same L, J, Delta, range).
OttoResult otto_cycle(const CycleSpec& spec, const SpectrumBuilder& builder);
StirlingResult stirling_cycle(const CycleSpec& spec, const SpectrumBuilder& builder);

CycleOutcome evaluate_cycle(CycleKind kind, const CycleSpec& spec, const SpectrumBuilder& builder);

// Mode-sum kernels. Inputs are aligned per-mode arrays over k > 0.

struct OttoHeats {
  double Q_h = 0.0;
  double Q_c = 0.0;
  double W = 0.0;
};

/// tanh_initial_hot[k] = tanh(beta_h eps_k^i / 2), tanh_final_cold[k] = tanh(beta_c eps_k^f / 2).
OttoHeats otto_heats(std::span<const double> eps_initial, std::span<const double> eps_final,
                     std::span<const double> tanh_initial_hot,
                     std::span<const double> tanh_final_cold);

struct StirlingHeats {
  double Q_I = 0.0;
  double Q_II = 0.0;
  double Q_III = 0.0;
  double Q_IV = 0.0;
};

/// The four thermals must carry lncosh values.
StirlingHeats stirling_heats(std::span<const double> eps_initial,
                             std::span<const double> eps_final, const ModeThermals& initial_hot,
                             const ModeThermals& initial_cold, const ModeThermals& final_hot,
                             const ModeThermals& final_cold);

/// W_S from its two lncosh brackets, computed without going through Q_I..Q_IV.
double stirling_work_closed_form(std::span<const double> eps_initial,
                                 std::span<const double> eps_final, const BathPair& baths);

bool otto_engine_valid(const OttoHeats& heats);
bool stirling_engine_valid(double W, double Q_h);

/// Assemble a result (W, validity, eta) from kernel output. The spec is not re-validated.
OttoResult make_otto_result(const CycleSpec& spec, const OttoHeats& heats);
StirlingResult make_stirling_result(const CycleSpec& spec, const StirlingHeats& heats);

/// Finite-alpha cycle compared with its short-range reference.
struct RatioDiagnostics {
  std::optional<double> R_W;     // W / W_inf
  std::optional<double> R_eta;   // eta / eta_inf, both runs engine-valid
  std::optional<double> dQ_rel;  // (Q_h_inf - Q_h) / Q_h_inf
  std::optional<double> xi;      // (W_inf - W) / (eta_inf (Q_h_inf - Q_h))

  bool defined() const noexcept { return R_W && R_eta && dQ_rel && xi; }
};

/// Throws ContractViolation unless both outcomes describe the same cycle up to base.range.
RatioDiagnostics ratio_diagnostics(const CycleOutcome& long_range, const CycleOutcome& reference);

}  // namespace lrk
