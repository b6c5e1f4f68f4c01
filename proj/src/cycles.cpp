#include "lrk/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lrk/errors.hpp"

namespace lrk {

namespace {

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      c_ += (sum_ - t) + x;
    } else {
      c_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw InvalidParameter("mode arrays must have equal length");
}

struct SpectrumPair {
  std::vector<double> initial;
  std::vector<double> final_;
};

SpectrumPair spectra_for(const CycleSpec& spec, const SpectrumBuilder& builder) {
  const auto& b = builder.base();
  if (b.L != spec.base.L || b.J != spec.base.J || b.Delta != spec.base.Delta ||
      !(b.range == spec.base.range)) {
    throw InvalidParameter("spectrum builder does not match the cycle's chain");
  }
  SpectrumPair out;
  out.initial.resize(builder.grid().size());
  out.final_.resize(builder.grid().size());
  builder.energies_into(spec.mu_i, out.initial);
  builder.energies_into(spec.mu_f, out.final_);
  return out;
}

}  // namespace

void validate(const BathPair& baths) {
  if (!(baths.beta_h > 0.0) || !(baths.beta_c > 0.0) || !std::isfinite(baths.beta_h) ||
      !std::isfinite(baths.beta_c)) {
    throw InvalidParameter("bath inverse temperatures must be finite and positive");
  }
  if (baths.beta_h > baths.beta_c) {
    throw InvalidParameter("hot bath must not be colder than the cold bath (beta_h <= beta_c)");
  }
}

double carnot_efficiency(const BathPair& baths) {
  validate(baths);
  return 1.0 - baths.beta_h / baths.beta_c;
}

void validate(const CycleSpec& spec) {
  validate_for_engine(spec.base);
  validate(spec.baths);
  if (!std::isfinite(spec.mu_i) || !std::isfinite(spec.mu_f)) {
    throw InvalidParameter("mu_i and mu_f must be finite");
  }
  if (!(spec.mu_f >= 0.0) || spec.mu_f > spec.mu_i) {
    throw InvalidParameter("cycle requires 0 <= mu_f <= mu_i");
  }
}

const char* to_string(CycleKind kind) { return kind == CycleKind::otto ? "otto" : "stirling"; }

CycleKind parse_cycle_kind(const std::string& text) {
  if (text == "otto") return CycleKind::otto;
  if (text == "stirling") return CycleKind::stirling;
  throw InvalidParameter("unknown cycle '" + text + "' (expected otto or stirling)");
}

CycleOutcome outcome(const OttoResult& r) {
  return {CycleKind::otto, r.spec, r.W, r.Q_h, r.eta, r.engine_valid};
}

CycleOutcome outcome(const StirlingResult& r) {
  return {CycleKind::stirling, r.spec, r.W, r.Q_h, r.eta, r.engine_valid};
}

OttoHeats otto_heats(std::span<const double> eps_initial, std::span<const double> eps_final,
                     std::span<const double> tanh_initial_hot,
                     std::span<const double> tanh_final_cold) {
  require_same_size(eps_initial.size(), eps_final.size());
  require_same_size(eps_initial.size(), tanh_initial_hot.size());
  require_same_size(eps_initial.size(), tanh_final_cold.size());
  CompensatedSum q_h, q_c, w;
  for (std::size_t k = 0; k < eps_initial.size(); ++k) {
    const double occupation_change = tanh_final_cold[k] - tanh_initial_hot[k];
    q_h.add(eps_initial[k] * occupation_change);
    q_c.add(-eps_final[k] * occupation_change);
    w.add((eps_initial[k] - eps_final[k]) * occupation_change);
  }
  return {q_h.value(), q_c.value(), w.value()};
}

StirlingHeats stirling_heats(std::span<const double> eps_initial,
                             std::span<const double> eps_final, const ModeThermals& ih,
                             const ModeThermals& ic, const ModeThermals& fh,
                             const ModeThermals& fc) {
  const std::size_t n = eps_initial.size();
  require_same_size(n, eps_final.size());
  for (const ModeThermals* m : {&ih, &ic, &fh, &fc}) {
    require_same_size(n, m->tanh_half.size());
    require_same_size(n, m->lncosh_half.size());
  }
  const double two_over_hot = 2.0 / ih.beta;
  const double two_over_cold = 2.0 / ic.beta;
  CompensatedSum q1, q2, q3, q4;
  for (std::size_t k = 0; k < n; ++k) {
    const double ei = eps_initial[k];
    const double ef = eps_final[k];
    q1.add(two_over_hot * (fh.lncosh_half[k] - ih.lncosh_half[k]) -
           (ef * fh.tanh_half[k] - ei * ih.tanh_half[k]));
    q2.add(ef * (fh.tanh_half[k] - fc.tanh_half[k]));
    q3.add(two_over_cold * (ic.lncosh_half[k] - fc.lncosh_half[k]) -
           (ei * ic.tanh_half[k] - ef * fc.tanh_half[k]));
    q4.add(ei * (ic.tanh_half[k] - ih.tanh_half[k]));
  }
  return {q1.value(), q2.value(), q3.value(), q4.value()};
}

double stirling_work_closed_form(std::span<const double> eps_initial,
                                 std::span<const double> eps_final, const BathPair& baths) {
  require_same_size(eps_initial.size(), eps_final.size());
  const double bh = baths.beta_h;
  const double bc = baths.beta_c;
  CompensatedSum w;
  for (std::size_t k = 0; k < eps_initial.size(); ++k) {
    const double ei = eps_initial[k];
    const double ef = eps_final[k];
    w.add((2.0 / bh) * (lncosh(0.5 * bh * ef) - lncosh(0.5 * bh * ei)) +
          (2.0 / bc) * (lncosh(0.5 * bc * ei) - lncosh(0.5 * bc * ef)));
  }
  return w.value();
}

bool otto_engine_valid(const OttoHeats& h) { return h.W > 0.0 && h.Q_h > -h.Q_c && -h.Q_c > 0.0; }

bool stirling_engine_valid(double W, double Q_h) { return W > 0.0 && Q_h > 0.0; }

OttoResult make_otto_result(const CycleSpec& spec, const OttoHeats& heats) {
  OttoResult r;
  r.spec = spec;
  r.Q_h = heats.Q_h;
  r.Q_c = heats.Q_c;
  r.W = heats.W;
  r.engine_valid = otto_engine_valid(heats);
  if (r.engine_valid) r.eta = r.W / r.Q_h;
  return r;
}

StirlingResult make_stirling_result(const CycleSpec& spec, const StirlingHeats& heats) {
  StirlingResult r;
  r.spec = spec;
  r.Q_I = heats.Q_I;
  r.Q_II = heats.Q_II;
  r.Q_III = heats.Q_III;
  r.Q_IV = heats.Q_IV;
  r.W = heats.Q_I + heats.Q_II + heats.Q_III + heats.Q_IV;
  r.Q_h = heats.Q_I + heats.Q_IV;
  r.engine_valid = stirling_engine_valid(r.W, r.Q_h);
  if (r.engine_valid) r.eta = r.W / r.Q_h;
  return r;
}

OttoResult otto_cycle(const CycleSpec& spec, const SpectrumBuilder& builder) {
  validate(spec);
  const auto eps = spectra_for(spec, builder);
  const auto hot_initial = mode_thermals(eps.initial, spec.baths.beta_h, false);
  const auto cold_final = mode_thermals(eps.final_, spec.baths.beta_c, false);
  return make_otto_result(spec, otto_heats(eps.initial, eps.final_, hot_initial.tanh_half,
                                           cold_final.tanh_half));
}

StirlingResult stirling_cycle(const CycleSpec& spec, const SpectrumBuilder& builder) {
  validate(spec);
  const auto eps = spectra_for(spec, builder);
  const double bh = spec.baths.beta_h;
  const double bc = spec.baths.beta_c;
  return make_stirling_result(
      spec, stirling_heats(eps.initial, eps.final_, mode_thermals(eps.initial, bh, true),
                           mode_thermals(eps.initial, bc, true),
                           mode_thermals(eps.final_, bh, true),
                           mode_thermals(eps.final_, bc, true)));
}

OttoResult otto_cycle(const CycleSpec& spec) {
  validate(spec);
  return otto_cycle(spec, SpectrumBuilder(spec.base));
}

StirlingResult stirling_cycle(const CycleSpec& spec) {
  validate(spec);
  return stirling_cycle(spec, SpectrumBuilder(spec.base));
}

CycleOutcome evaluate_cycle(CycleKind kind, const CycleSpec& spec,
                            const SpectrumBuilder& builder) {
  return kind == CycleKind::otto ? outcome(otto_cycle(spec, builder))
                                 : outcome(stirling_cycle(spec, builder));
}

RatioDiagnostics ratio_diagnostics(const CycleOutcome& lr, const CycleOutcome& sr) {
  const auto& a = lr.spec;
  const auto& b = sr.spec;
  if (lr.kind != sr.kind) throw ContractViolation("ratio of an Otto and a Stirling result");
  if (a.base.L != b.base.L || a.base.J != b.base.J || a.base.Delta != b.base.Delta ||
      a.mu_i != b.mu_i || a.mu_f != b.mu_f || !(a.baths == b.baths)) {
    throw ContractViolation("ratio diagnostics need cycles differing only in interaction range");
  }

  const double tol = 1e-14 * std::max({std::abs(sr.W), std::abs(sr.Q_h), 1.0});
  const auto nonzero = [tol](double x) { return std::abs(x) > tol; };

  RatioDiagnostics d;
  if (nonzero(sr.W)) d.R_W = lr.W / sr.W;
  if (lr.eta && sr.eta && nonzero(*sr.eta)) d.R_eta = *lr.eta / *sr.eta;
  const double delta_q = sr.Q_h - lr.Q_h;
  if (nonzero(sr.Q_h)) d.dQ_rel = delta_q / sr.Q_h;
  if (nonzero(delta_q) && nonzero(sr.Q_h) && nonzero(sr.W)) {
    const double eta_ref = sr.W / sr.Q_h;
    d.xi = (sr.W - lr.W) / (eta_ref * delta_q);
  }
  return d;
}

}  // namespace lrk
