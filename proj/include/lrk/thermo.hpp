#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lrk/spectrum.hpp"

namespace lrk {

/// beta = 1 / T with k_B = 1. Zero is allowed and means infinite temperature.
class InverseTemperature {
 public:
  explicit InverseTemperature(double beta);

  double value() const noexcept { return beta_; }

 private:
  double beta_;
};

/// ln cosh x evaluated as |x| + log1p(exp(-2|x|)) - ln 2; finite for any finite x.
double lncosh(double x);

/// ln Z = L ln 2 + sum_{k>0} 2 lncosh(beta eps_k / 2)
double log_partition(const QuasiparticleSpectrum& spectrum, InverseTemperature beta);

/// U = -sum_{k>0} eps_k tanh(beta eps_k / 2)
double internal_energy(const QuasiparticleSpectrum& spectrum, InverseTemperature beta);

/// F = -ln Z / beta. Throws UndefinedLimit at beta = 0.
double free_energy(const QuasiparticleSpectrum& spectrum, InverseTemperature beta);

/// S = L ln 2 + sum_{k>0} [2 lncosh(beta eps_k / 2) - beta eps_k tanh(beta eps_k / 2)].
/// The L ln 2 term is cancelled against the -ln 2 of each lncosh analytically,
/// so large beta does not lose precision to cancellation.
double entropy(const QuasiparticleSpectrum& spectrum, InverseTemperature beta);

struct ThermoState {
  double log_Z = 0.0;
  double U = 0.0;
  std::optional<double> F;  // empty at beta = 0
  double S = 0.0;
};

ThermoState thermo_state(const QuasiparticleSpectrum& spectrum, InverseTemperature beta);

/// Per-mode tanh(beta eps / 2) and lncosh(beta eps / 2) for one spectrum at
/// one temperature. Cycle kernels consume these so that sweeps can reuse them.
struct ModeThermals {
  double beta = 0.0;
  std::vector<double> tanh_half;
  std::vector<double> lncosh_half;  // empty unless requested
};

ModeThermals mode_thermals(std::span<const double> energies, double beta, bool with_lncosh);

/// Energies below this are treated as exact zeros in tanh / lncosh arguments.
inline constexpr double kZeroEnergy = 1e-30;

}  // namespace lrk
