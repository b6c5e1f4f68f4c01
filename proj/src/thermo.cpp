#include "lrk/thermo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lrk/errors.hpp"

namespace lrk {

namespace {

double half_argument(double beta, double energy) {
  return energy < kZeroEnergy ? 0.0 : 0.5 * beta * energy;
}

}  // namespace

InverseTemperature::InverseTemperature(double beta) : beta_(beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidParameter("inverse temperature must be finite and >= 0, got " +
                           std::to_string(beta));
  }
}

double lncosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double log_partition(const QuasiparticleSpectrum& spectrum, InverseTemperature beta) {
  double sum = 0.0;
  for (double e : spectrum.energies()) sum += 2.0 * lncosh(half_argument(beta.value(), e));
  return spectrum.L() * std::numbers::ln2 + sum;
}

double internal_energy(const QuasiparticleSpectrum& spectrum, InverseTemperature beta) {
  double sum = 0.0;
  for (double e : spectrum.energies()) sum += e * std::tanh(half_argument(beta.value(), e));
  return -sum;
}

double free_energy(const QuasiparticleSpectrum& spectrum, InverseTemperature beta) {
  if (beta.value() == 0.0) throw UndefinedLimit("free energy is undefined at beta = 0");
  return -log_partition(spectrum, beta) / beta.value();
}

double entropy(const QuasiparticleSpectrum& spectrum, InverseTemperature beta) {
  // per mode: 2 log1p(e^{-2x}) + 2x (1 - tanh x), with 1 - tanh x = 2 e^{-2x} / (1 + e^{-2x})
  double sum = 0.0;
  for (double e : spectrum.energies()) {
    const double x = half_argument(beta.value(), e);
    const double t = std::exp(-2.0 * x);
    sum += 2.0 * std::log1p(t) + 4.0 * x * t / (1.0 + t);
  }
  return sum;
}

ThermoState thermo_state(const QuasiparticleSpectrum& spectrum, InverseTemperature beta) {
  ThermoState state;
  state.log_Z = log_partition(spectrum, beta);
  state.U = internal_energy(spectrum, beta);
  state.S = entropy(spectrum, beta);
  if (beta.value() > 0.0) state.F = -state.log_Z / beta.value();
  return state;
}

ModeThermals mode_thermals(std::span<const double> energies, double beta, bool with_lncosh) {
  ModeThermals out;
  out.beta = beta;
  out.tanh_half.resize(energies.size());
  if (with_lncosh) out.lncosh_half.resize(energies.size());
  for (std::size_t i = 0; i < energies.size(); ++i) {
    const double x = half_argument(beta, energies[i]);
    out.tanh_half[i] = std::tanh(x);
    if (with_lncosh) out.lncosh_half[i] = lncosh(x);
  }
  return out;
}

}  // namespace lrk
