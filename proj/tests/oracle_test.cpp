#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lrk/errors.hpp"
#include "lrk/oracle.hpp"
#include "lrk/thermo.hpp"

using namespace lrk;

namespace {

std::vector<double> doubled_sorted(const QuasiparticleSpectrum& s) {
  std::vector<double> out;
  for (double e : s.energies()) {
    out.push_back(e);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Jacobi eigensolver on simple matrices") {
  oracle::BdgMatrix id(5);
  for (std::size_t i = 0; i < 5; ++i) id(i, i) = 1.0;
  for (double e : oracle::eigenvalues(id)) CHECK(e == 1.0);

  oracle::BdgMatrix m(2);
  m(0, 0) = 2.0;
  m(0, 1) = m(1, 0) = 1.0;
  m(1, 1) = 2.0;
  const auto ev = oracle::eigenvalues(m);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(3.0));
}

TEST_CASE("free hopping without pairing") {
  const auto m = oracle::bdg_matrix(ChainParams{4, 1.0, 0.0, 0.0, InteractionRange::short_range()});
  for (double e : oracle::exact_spectrum(m)) CHECK(std::abs(e - std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("two-site chain is the analytic single mode") {
  const auto p = ChainParams{2, 1.0, 1.0, 2.0, InteractionRange::power_law(2.0)};
  const auto ev = oracle::exact_spectrum(oracle::bdg_matrix(p));
  REQUIRE(ev.size() == 2);
  for (double e : ev) CHECK(std::abs(e - 2.0615528128088302749) < 1e-12);
}

TEST_CASE("BdG spectrum equals the momentum-space energies") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int L : {2, 4, 8, 12}) {
    for (const auto& range : {InteractionRange::power_law(0.6), InteractionRange::power_law(1.05),
                              InteractionRange::power_law(3.0), InteractionRange::short_range()}) {
      const ChainParams p{L, 1.0 + 0.3 * u(rng), 1.0 + 0.3 * u(rng), u(rng), range};
      const auto m = oracle::bdg_matrix(p);
      const auto all = oracle::eigenvalues(m);
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(std::abs(all[i] + all[all.size() - 1 - i]) < 1e-10);
      }
      const auto exact = oracle::exact_spectrum(m);
      const auto expected = doubled_sorted(build_spectrum(p));
      REQUIRE(exact.size() == expected.size());
      for (std::size_t i = 0; i < exact.size(); ++i) CHECK(std::abs(exact[i] - expected[i]) < 1e-10);
    }
  }
}

TEST_CASE("enumerated partition function") {
  const auto s = build_spectrum(ChainParams{2, 1.0, 1.0, 2.0, InteractionRange::power_law(2.0)});
  const double eps = s.energies()[0];
  CHECK(oracle::enumerate_partition(s, 1.0) ==
        doctest::Approx(4.0 * std::pow(std::cosh(eps / 2), 2)).epsilon(1e-14));
  CHECK(std::abs(oracle::enumerate_partition(s, 1.0) - 9.9854188081637823799) < 1e-12);

  const auto big = build_spectrum(ChainParams{8, 1.2, 0.7, -0.3, InteractionRange::power_law(1.4)});
  CHECK(oracle::enumerate_partition(big, 0.0) == 256.0);
  for (double beta : {0.05, 1.0, 5.0}) {
    const double z = oracle::enumerate_partition(big, beta);
    const double expected = std::exp(log_partition(big, InverseTemperature(beta)));
    CHECK(std::abs(z - expected) / expected < 1e-12);
  }
}

TEST_CASE("oracle size limits") {
  CHECK_THROWS_AS(oracle::bdg_matrix(ChainParams{66}), OracleLimit);
  CHECK_THROWS_AS(oracle::enumerate_partition(build_spectrum(ChainParams{18}), 1.0), OracleLimit);
}
