#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrk/chain.hpp"

namespace lrk {

/// Positive momenta pi(2n-1)/L, n = 1..L/2, of the antiperiodic ring, ascending.
struct MomentumGrid {
  std::vector<double> k;

  std::size_t size() const noexcept { return k.size(); }
};

MomentumGrid momentum_grid(int L);

/// Power-law pairing profile f(k) = sum_{l=1}^{L-1} sin(k l) / d_l^alpha with
/// d_l = min(l, L-l). The weights d_l^-alpha are computed once on construction.
/// In the short-range limit f(k) = 2 sin k exactly.
class PairingKernel {
 public:
  PairingKernel(int L, InteractionRange range);

  int L() const noexcept { return L_; }
  const InteractionRange& range() const noexcept { return range_; }

  /// Literal O(L) sum with std::sin per term.
  double operator()(double k) const;

  /// f at every momentum of momentum_grid(L). Uses a sine table indexed by
  /// (2n-1) l mod 2L, so no trigonometric calls inside the O(L^2) loop.
  std::vector<double> on_grid() const;

  /// Continuous extension 2 sum_{l<L/2} sin(k l) / l^alpha + sin(k L/2) / (L/2)^alpha,
  /// equal to f on the momentum grid (where sin((L-l) k) = sin(l k)). The
  /// literal sum pairs l with L-l differently off the grid and vanishes at
  /// k = pi/2 whenever L is a multiple of 4. Uses a rotation recurrence for e^{ikl}.
  std::vector<double> sample(std::span<const double> ks) const;

 private:
  int L_;
  InteractionRange range_;
  std::vector<double> weights_;  // weights_[l] = d_l^-alpha, l = 1..L-1
};

double pairing_function(double k, const ChainParams& params);

/// eps_k = sqrt((J cos k + mu)^2 + (Delta f(k) / 2)^2)
double quasiparticle_energy(double k, const ChainParams& params);

/// Quasiparticle energies eps_k for k > 0, aligned with momentum_grid(params.L).
class QuasiparticleSpectrum {
 public:
  QuasiparticleSpectrum(ChainParams params, std::vector<double> energies);

  const ChainParams& params() const noexcept { return params_; }
  std::span<const double> energies() const noexcept { return energies_; }
  std::size_t size() const noexcept { return energies_.size(); }
  /// Number of sites (twice the number of positive momenta).
  int L() const noexcept { return params_.L; }

 private:
  ChainParams params_;
  std::vector<double> energies_;
};

/// Builds spectra of one chain at many chemical potentials. The pairing
/// profile depends only on (L, alpha), so it is evaluated once and each
/// build(mu) is O(L).
class SpectrumBuilder {
 public:
  explicit SpectrumBuilder(const ChainParams& base);

  QuasiparticleSpectrum build(double mu) const;
  /// Same values as build(mu).energies(), written into `out` (size L/2).
  void energies_into(double mu, std::span<double> out) const;

  const ChainParams& base() const noexcept { return base_; }
  const MomentumGrid& grid() const noexcept { return grid_; }
  std::span<const double> pairing() const noexcept { return pairing_; }

 private:
  ChainParams base_;
  MomentumGrid grid_;
  std::vector<double> cos_k_;
  std::vector<double> pairing_;
};

QuasiparticleSpectrum build_spectrum(const ChainParams& params);

/// theta_k = atan2(-Delta f(k) / 2, J cos k + mu) / 2, in (-pi/2, pi/2].
/// Throws DegenerateMode when both arguments vanish.
double bogoliubov_angle(double k, const ChainParams& params);

struct WindingResult {
  double w = 0.0;
  double residual = 0.0;
  int grid_density = 0;
};

/// Distance from x to the nearest multiple of 1/2.
double half_integer_residual(double x);

/// Winding of the Bloch vector (J cos k + mu, Delta f(k) / 2) around the
/// origin as k runs over [-pi, pi], sampled on `grid_density` uniformly spaced
/// points (endpoints included) and unwrapped sample to sample.
/// The pairing profile is cached, so evaluating many mu values is cheap.
class WindingCalculator {
 public:
  /// `base.mu` is ignored. grid_density must be >= 1000.
  WindingCalculator(const ChainParams& base, int grid_density);

  /// Throws GaplessConfiguration if any sample has eps below `gap_floor`.
  /// A negative floor selects the default 1e-6 * max(|J|, |Delta|, |mu|).
  WindingResult evaluate(double mu, double gap_floor = -1.0) const;

 private:
  ChainParams base_;
  int density_;
  std::vector<double> cos_k_;
  std::vector<double> pairing_;
};

WindingResult winding_number(const ChainParams& params, int grid_density);

struct SpectrumLevels {
  double mu = 0.0;
  /// {+eps_k, -eps_k : k > 0}, sorted ascending (L entries).
  std::vector<double> levels;
};

std::vector<SpectrumLevels> spectrum_scan(const ChainParams& base,
                                          std::span<const double> mu_values);

/// Smallest eps_k over the momentum grid.
double min_gap(const ChainParams& params);

}  // namespace lrk
