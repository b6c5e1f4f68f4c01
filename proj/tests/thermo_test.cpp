#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lrk/errors.hpp"
#include "lrk/thermo.hpp"

using namespace lrk;

namespace {

QuasiparticleSpectrum single_mode(double mu) {
  return build_spectrum(ChainParams{2, 1.0, 1.0, mu, InteractionRange::power_law(2.0)});
}

QuasiparticleSpectrum chain(int L, double alpha, double mu) {
  return build_spectrum(ChainParams{L, 1.0, 1.0, mu, InteractionRange::power_law(alpha)});
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("lncosh is stable for large arguments") {
  CHECK(lncosh(0.0) == 0.0);
  CHECK(std::abs(lncosh(0.3) - std::log(std::cosh(0.3))) < 1e-15);
  CHECK(lncosh(1e6) == doctest::Approx(1e6 - std::numbers::ln2));
  CHECK(lncosh(-800.0) == lncosh(800.0));
}

TEST_CASE("single-mode reference values") {
  const auto s = single_mode(2.0);
  CHECK(rel(log_partition(s, InverseTemperature(5.0)), 10.307830808883971310) < 1e-14);
  CHECK(rel(internal_energy(s, InverseTemperature(1.0)), -1.5960944764393789220) < 1e-14);
  CHECK(rel(free_energy(s, InverseTemperature(5.0)), -2.0615661617767942620) < 1e-14);
  CHECK(rel(entropy(s, InverseTemperature(1.0)), 0.70503143328076208869) < 1e-13);
}

TEST_CASE("infinite temperature") {
  const auto s = chain(10, 1.5, 0.3);
  const InverseTemperature zero(0.0);
  CHECK(log_partition(s, zero) == doctest::Approx(10 * std::numbers::ln2));
  CHECK(entropy(s, zero) == doctest::Approx(10 * std::numbers::ln2));
  CHECK(internal_energy(s, zero) == 0.0);
  CHECK_THROWS_AS(free_energy(s, zero), UndefinedLimit);
  CHECK_FALSE(thermo_state(s, zero).F.has_value());
  CHECK_THROWS_AS(InverseTemperature(-1.0), InvalidParameter);
  CHECK_THROWS_AS(InverseTemperature{HUGE_VAL}, InvalidParameter);
}

TEST_CASE("thermodynamic identities") {
  const auto s = chain(200, 1.3, 0.8);
  for (double beta : {0.05, 0.7, 3.0, 20.0}) {
    const auto st = thermo_state(s, InverseTemperature(beta));
    // F = U - T S
    CHECK(std::abs(*st.F - (st.U - st.S / beta)) < 1e-10 * std::abs(st.U));
    // U = -d ln Z / d beta
    const double h = 1e-5 * beta;
    const double d = (log_partition(s, InverseTemperature(beta + h)) -
                      log_partition(s, InverseTemperature(beta - h))) /
                     (2 * h);
    CHECK(rel(-d, st.U) < 1e-7);
  }
}

TEST_CASE("entropy decreases with beta and stays finite") {
  const auto s = chain(100, 2.0, 0.5);
  double previous = INFINITY;
  for (double beta = 0.0; beta < 50.0; beta += 0.5) {
    const double S = entropy(s, InverseTemperature(beta));
    CHECK(S <= previous + 1e-12);
    CHECK(S >= 0.0);
    previous = S;
  }
  const auto st = thermo_state(s, InverseTemperature(1e6));
  CHECK(std::isfinite(st.log_Z));
  CHECK(std::isfinite(st.U));
  CHECK(std::isfinite(*st.F));
  CHECK(std::abs(st.S) < 1e-12);
}

TEST_CASE("zero-energy modes") {
  // Delta = 0 and mu = 0 at L = 2: the only mode sits at cos(pi/2) = 0.
  const auto s = build_spectrum(ChainParams{2, 1.0, 0.0, 0.0, InteractionRange::short_range()});
  CHECK(log_partition(s, InverseTemperature(3.0)) == doctest::Approx(2 * std::numbers::ln2));
  CHECK(entropy(s, InverseTemperature(3.0)) == doctest::Approx(2 * std::numbers::ln2));
}

TEST_CASE("mode thermals match the direct formulas") {
  const auto s = chain(50, 1.7, 0.2);
  const auto m = mode_thermals(s.energies(), 2.0, true);
  REQUIRE(m.tanh_half.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(m.tanh_half[i] == doctest::Approx(std::tanh(s.energies()[i])));
    CHECK(m.lncosh_half[i] == doctest::Approx(std::log(std::cosh(s.energies()[i]))));
  }
  CHECK(mode_thermals(s.energies(), 2.0, false).lncosh_half.empty());
}
