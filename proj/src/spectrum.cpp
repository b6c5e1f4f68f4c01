#include "lrk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lrk/errors.hpp"

namespace lrk {

namespace {

constexpr double kPi = std::numbers::pi;

double bloch_x(const ChainParams& p, double cos_k) { return p.J * cos_k + p.mu; }

}  // namespace

MomentumGrid momentum_grid(int L) {
  if (L < 2 || L % 2 != 0) {
    throw InvalidParameter("L must be an even integer >= 2, got " + std::to_string(L));
  }
  MomentumGrid grid;
  grid.k.reserve(static_cast<std::size_t>(L / 2));
  for (int n = 1; n <= L / 2; ++n) {
    grid.k.push_back(kPi * static_cast<double>(2 * n - 1) / static_cast<double>(L));
  }
  return grid;
}

PairingKernel::PairingKernel(int L, InteractionRange range) : L_(L), range_(range) {
  if (L < 2 || L % 2 != 0) {
    throw InvalidParameter("L must be an even integer >= 2, got " + std::to_string(L));
  }
  if (!range_.is_short_range()) {
    const double alpha = range_.alpha();
    weights_.assign(static_cast<std::size_t>(L), 0.0);
    for (int l = 1; l < L; ++l) {
      const int d = std::min(l, L - l);
      weights_[static_cast<std::size_t>(l)] = std::pow(static_cast<double>(d), -alpha);
    }
  }
}

double PairingKernel::operator()(double k) const {
  if (range_.is_short_range()) return 2.0 * std::sin(k);
  double sum = 0.0;
  for (int l = 1; l < L_; ++l) {
    sum += std::sin(k * static_cast<double>(l)) * weights_[static_cast<std::size_t>(l)];
  }
  return sum;
}

std::vector<double> PairingKernel::on_grid() const {
  const auto grid = momentum_grid(L_);
  std::vector<double> out(grid.size());
  if (range_.is_short_range()) {
    std::transform(grid.k.begin(), grid.k.end(), out.begin(),
                   [](double k) { return 2.0 * std::sin(k); });
    return out;
  }
  // sin(pi (2n-1) l / L) = table[((2n-1) l) mod 2L]
  const int period = 2 * L_;
  std::vector<double> table(static_cast<std::size_t>(period));
  for (int m = 0; m < period; ++m) {
    table[static_cast<std::size_t>(m)] = std::sin(kPi * static_cast<double>(m) / L_);
  }
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const int step = 2 * static_cast<int>(n) + 1;
    int index = 0;
    double sum = 0.0;
    for (int l = 1; l < L_; ++l) {
      index += step;
      if (index >= period) index -= period;
      sum += table[static_cast<std::size_t>(index)] * weights_[static_cast<std::size_t>(l)];
    }
    out[n] = sum;
  }
  return out;
}

std::vector<double> PairingKernel::sample(std::span<const double> ks) const {
  std::vector<double> out(ks.size());
  if (range_.is_short_range()) {
    std::transform(ks.begin(), ks.end(), out.begin(), [](double k) { return 2.0 * std::sin(k); });
    return out;
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double c = std::cos(ks[i]);
    const double s = std::sin(ks[i]);
    double re = c;
    double im = s;
    double sum = 0.0;
    const int half = L_ / 2;
    for (int l = 1; l <= half; ++l) {
      sum += (l < half ? 2.0 : 1.0) * im * weights_[static_cast<std::size_t>(l)];
      const double next_re = re * c - im * s;
      im = re * s + im * c;
      re = next_re;
    }
    out[i] = sum;
  }
  return out;
}

double pairing_function(double k, const ChainParams& params) {
  validate(params);
  return PairingKernel(params.L, params.range)(k);
}

double quasiparticle_energy(double k, const ChainParams& params) {
  const double f = pairing_function(k, params);
  const double x = bloch_x(params, std::cos(k));
  const double y = 0.5 * params.Delta * f;
  return std::sqrt(x * x + y * y);
}

QuasiparticleSpectrum::QuasiparticleSpectrum(ChainParams params, std::vector<double> energies)
    : params_(std::move(params)), energies_(std::move(energies)) {
  validate(params_);
  if (energies_.size() != static_cast<std::size_t>(params_.L / 2)) {
    throw InvalidParameter("spectrum must hold L/2 energies");
  }
  for (double e : energies_) {
    if (!(e >= 0.0)) throw InvalidParameter("quasiparticle energies must be non-negative");
  }
}

SpectrumBuilder::SpectrumBuilder(const ChainParams& base)
    : base_(base), grid_(momentum_grid(base.L)) {
  validate(base_);
  cos_k_.reserve(grid_.size());
  for (double k : grid_.k) cos_k_.push_back(std::cos(k));
  pairing_ = PairingKernel(base_.L, base_.range).on_grid();
}

void SpectrumBuilder::energies_into(double mu, std::span<double> out) const {
  if (out.size() != grid_.size()) throw InvalidParameter("output span must hold L/2 energies");
  const double half_delta = 0.5 * base_.Delta;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const double x = base_.J * cos_k_[i] + mu;
    const double y = half_delta * pairing_[i];
    out[i] = std::sqrt(x * x + y * y);
  }
}

QuasiparticleSpectrum SpectrumBuilder::build(double mu) const {
  if (!std::isfinite(mu)) throw InvalidParameter("mu must be finite");
  std::vector<double> energies(grid_.size());
  energies_into(mu, energies);
  return QuasiparticleSpectrum(with_mu(base_, mu), std::move(energies));
}

QuasiparticleSpectrum build_spectrum(const ChainParams& params) {
  return SpectrumBuilder(params).build(params.mu);
}

double bogoliubov_angle(double k, const ChainParams& params) {
  const double y = -0.5 * params.Delta * pairing_function(k, params);
  const double x = bloch_x(params, std::cos(k));
  if (x == 0.0 && y == 0.0) {
    throw DegenerateMode("Bogoliubov angle undefined at gapless mode k = " + std::to_string(k));
  }
  return 0.5 * std::atan2(y, x);
}

double half_integer_residual(double x) { return std::abs(x - 0.5 * std::round(2.0 * x)); }

WindingCalculator::WindingCalculator(const ChainParams& base, int grid_density)
    : base_(base), density_(grid_density) {
  validate(base_);
  if (grid_density < 1000) {
    throw InvalidParameter("winding grid density must be >= 1000, got " +
                           std::to_string(grid_density));
  }
  std::vector<double> ks(static_cast<std::size_t>(density_));
  const double step = 2.0 * kPi / static_cast<double>(density_ - 1);
  for (int j = 0; j < density_; ++j) ks[static_cast<std::size_t>(j)] = -kPi + step * j;
  ks.back() = kPi;
  cos_k_.reserve(ks.size());
  for (double k : ks) cos_k_.push_back(std::cos(k));
  pairing_ = PairingKernel(base_.L, base_.range).sample(ks);
}

WindingResult WindingCalculator::evaluate(double mu, double gap_floor) const {
  if (!std::isfinite(mu)) throw InvalidParameter("mu must be finite");
  if (gap_floor < 0.0) {
    gap_floor = 1e-6 * std::max({std::abs(base_.J), std::abs(base_.Delta), std::abs(mu)});
  }
  const double half_delta = 0.5 * base_.Delta;
  double total = 0.0;
  double previous = 0.0;
  for (std::size_t j = 0; j < cos_k_.size(); ++j) {
    const double x = base_.J * cos_k_[j] + mu;
    const double y = half_delta * pairing_[j];
    if (std::sqrt(x * x + y * y) < gap_floor) {
      throw GaplessConfiguration("quasiparticle gap below floor at mu = " + std::to_string(mu));
    }
    const double phase = std::atan2(y, x);
    if (j > 0) {
      double step = phase - previous;
      if (step > kPi) step -= 2.0 * kPi;
      if (step < -kPi) step += 2.0 * kPi;
      total += step;
    }
    previous = phase;
  }
  WindingResult result;
  result.w = total / (2.0 * kPi);
  result.residual = half_integer_residual(result.w);
  result.grid_density = density_;
  return result;
}

WindingResult winding_number(const ChainParams& params, int grid_density) {
  return WindingCalculator(params, grid_density).evaluate(params.mu);
}

std::vector<SpectrumLevels> spectrum_scan(const ChainParams& base,
                                          std::span<const double> mu_values) {
  const SpectrumBuilder builder(base);
  std::vector<double> eps(builder.grid().size());
  std::vector<SpectrumLevels> table;
  table.reserve(mu_values.size());
  for (double mu : mu_values) {
    builder.energies_into(mu, eps);
    SpectrumLevels row;
    row.mu = mu;
    row.levels.reserve(2 * eps.size());
    for (double e : eps) {
      row.levels.push_back(-e);
      row.levels.push_back(e);
    }
    std::sort(row.levels.begin(), row.levels.end());
    table.push_back(std::move(row));
  }
  return table;
}

double min_gap(const ChainParams& params) {
  const auto spectrum = build_spectrum(params);
  const auto e = spectrum.energies();
  return *std::min_element(e.begin(), e.end());
}

}  // namespace lrk
