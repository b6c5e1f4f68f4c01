#include <doctest.h>

#include <cmath>
#include <random>

#include "lrk/cycles.hpp"
#include "lrk/errors.hpp"

using namespace lrk;

namespace {

CycleSpec single_mode_spec() {
  CycleSpec s;
  s.base = ChainParams{2, 1.0, 1.0, 0.0, InteractionRange::power_law(2.0)};
  s.mu_i = 2.0;
  s.mu_f = 1.0;
  s.baths = {1.0, 5.0};
  return s;
}

CycleSpec figure_spec(double alpha, double mu_ratio, double beta_c) {
  CycleSpec s;
  s.base = ChainParams{2000, 1.0, 1.0, 0.0, InteractionRange::power_law(alpha)};
  s.mu_i = 2.0;
  s.mu_f = 2.0 * mu_ratio;
  s.baths = {0.2 * beta_c, beta_c};
  return s;
}

CycleSpec short_range(CycleSpec s) {
  s.base.range = InteractionRange::short_range();
  return s;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("Otto single-mode reference values") {
  const auto r = otto_cycle(single_mode_spec());
  CHECK(close(r.Q_h, 0.45011832450115293860, 1e-14));
  CHECK(close(r.Q_c, -0.24411093551650387120, 1e-14));
  CHECK(close(r.W, 0.20600738898464906740, 1e-14));
  REQUIRE(r.engine_valid);
  CHECK(close(*r.eta, 0.45767385545335957000, 1e-14));
  // a single mode gives eta = 1 - eps_f / eps_i
  CHECK(close(*r.eta, 1.0 - 1.1180339887498948482 / 2.0615528128088302749, 1e-14));
}

TEST_CASE("Stirling single-mode reference values") {
  const auto r = stirling_cycle(single_mode_spec());
  CHECK(close(r.Q_I, 0.41160615607369221843, 1e-13));
  CHECK(close(r.Q_II, -0.54259450874883871067, 1e-13));
  CHECK(close(r.Q_III, -0.0096593198651153818830, 1e-11));
  CHECK(close(r.Q_IV, 0.46532074065314387158, 1e-13));
  CHECK(close(r.W, 0.32467306811288199746, 1e-13));
  CHECK(close(r.Q_h, 0.87692689672683609001, 1e-13));
  REQUIRE(r.engine_valid);
  CHECK(close(*r.eta, 0.37023960529063130752, 1e-13));
}

TEST_CASE("stroke heats agree with thermodynamic state functions") {
  const auto spec = figure_spec(1.5, 0.35, 5.0);
  const auto r = stirling_cycle(spec);
  const auto si = build_spectrum(with_mu(spec.base, spec.mu_i));
  const auto sf = build_spectrum(with_mu(spec.base, spec.mu_f));
  const InverseTemperature bh(spec.baths.beta_h), bc(spec.baths.beta_c);
  const double scale = std::abs(r.Q_I) + std::abs(r.Q_II);
  CHECK(std::abs(r.Q_II - (internal_energy(sf, bc) - internal_energy(sf, bh))) < 1e-12 * scale);
  CHECK(std::abs(r.Q_IV - (internal_energy(si, bh) - internal_energy(si, bc))) < 1e-12 * scale);
  CHECK(std::abs(r.Q_I - (entropy(sf, bh) - entropy(si, bh)) / bh.value()) < 1e-10 * scale);
  CHECK(std::abs(r.Q_III - (entropy(si, bc) - entropy(sf, bc)) / bc.value()) < 1e-10 * scale);
}

TEST_CASE("first laws over random specifications") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha(1.01, 6.0), ratio(0.0, 1.0), bratio(0.05, 0.95);
  for (int n = 0; n < 50; ++n) {
    CycleSpec s;
    s.base = ChainParams{200, 1.0, 1.0, 0.0, InteractionRange::power_law(alpha(rng))};
    s.mu_i = 2.0;
    s.mu_f = 2.0 * ratio(rng);
    const double bc = n % 2 ? 5.0 : 0.05;
    s.baths = {bratio(rng) * bc, bc};

    const auto o = otto_cycle(s);
    CHECK(std::abs(o.W - (o.Q_h + o.Q_c)) <= 1e-12 * std::max(std::abs(o.Q_h), std::abs(o.Q_c)));

    const auto st = stirling_cycle(s);
    const double sum = st.Q_I + st.Q_II + st.Q_III + st.Q_IV;
    const double scale = std::max({std::abs(st.Q_I), std::abs(st.Q_II), std::abs(st.Q_III),
                                   std::abs(st.Q_IV)});
    CHECK(std::abs(st.W - sum) <= 1e-12 * scale);
    const auto eps_i = build_spectrum(with_mu(s.base, s.mu_i));
    const auto eps_f = build_spectrum(with_mu(s.base, s.mu_f));
    CHECK(std::abs(st.W - stirling_work_closed_form(eps_i.energies(), eps_f.energies(), s.baths)) <=
          1e-10 * scale);

    const double carnot = carnot_efficiency(s.baths);
    if (o.engine_valid) CHECK(*o.eta <= carnot + 1e-12);
    if (st.engine_valid) CHECK(*st.eta <= carnot + 1e-12);
  }
}

TEST_CASE("engine validity gates the efficiency") {
  auto s = single_mode_spec();
  s.mu_f = s.mu_i;
  const auto o = otto_cycle(s);
  CHECK(o.W == 0.0);
  CHECK_FALSE(o.engine_valid);
  CHECK_FALSE(o.eta.has_value());

  s.baths = {2.0, 2.0};
  s.mu_f = 0.5;
  const auto st = stirling_cycle(s);
  CHECK(std::abs(st.W) < 1e-14);
}

TEST_CASE("cycle preconditions") {
  auto s = single_mode_spec();
  s.mu_f = 3.0;
  CHECK_THROWS_AS(otto_cycle(s), InvalidParameter);
  s = single_mode_spec();
  s.mu_f = -0.1;
  CHECK_THROWS_AS(stirling_cycle(s), InvalidParameter);
  s = single_mode_spec();
  s.baths = {5.0, 1.0};
  CHECK_THROWS_AS(otto_cycle(s), InvalidParameter);
  s = single_mode_spec();
  s.base.range = InteractionRange::power_law(0.8);
  CHECK_THROWS_AS(otto_cycle(s), InvalidParameter);
  CHECK(parse_cycle_kind("stirling") == CycleKind::stirling);
  CHECK_THROWS_AS(parse_cycle_kind("diesel"), InvalidParameter);
}

TEST_CASE("ratio diagnostics") {
  for (auto kind : {CycleKind::otto, CycleKind::stirling}) {
    for (double r : {0.2, 0.7, 0.9}) {
      const auto spec = figure_spec(1.3, r, 5.0);
      const SpectrumBuilder lr_b(spec.base), sr_b(short_range(spec).base);
      const auto lr = evaluate_cycle(kind, spec, lr_b);
      const auto sr = evaluate_cycle(kind, short_range(spec), sr_b);
      const auto d = ratio_diagnostics(lr, sr);
      REQUIRE(d.R_W);
      REQUIRE(d.dQ_rel);
      REQUIRE(d.xi);
      CHECK(std::abs(*d.R_W - (1.0 - *d.xi * *d.dQ_rel)) < 1e-10);
      CHECK(*d.R_W == doctest::Approx(lr.W / sr.W));
      if (lr.engine_valid && sr.engine_valid) CHECK(d.R_eta);
    }
  }

  const auto spec = figure_spec(1.3, 0.8, 5.0);
  const auto sr = outcome(otto_cycle(short_range(spec)));
  const auto self = ratio_diagnostics(sr, sr);
  CHECK(*self.R_W == 1.0);
  CHECK(*self.R_eta == 1.0);
  CHECK(*self.dQ_rel == 0.0);
  CHECK_FALSE(self.xi.has_value());
  CHECK_FALSE(self.defined());

  auto other = sr;
  other.spec.mu_f = 1.0;
  CHECK_THROWS_AS(ratio_diagnostics(other, sr), ContractViolation);
  other = sr;
  other.kind = CycleKind::stirling;
  CHECK_THROWS_AS(ratio_diagnostics(other, sr), ContractViolation);
}

TEST_CASE("large alpha reproduces the short-range cycle") {
  for (auto kind : {CycleKind::otto, CycleKind::stirling}) {
    const auto spec = figure_spec(30.0, 0.8, 5.0);
    const auto lr = evaluate_cycle(kind, spec, SpectrumBuilder(spec.base));
    const auto sr = evaluate_cycle(kind, short_range(spec), SpectrumBuilder(short_range(spec).base));
    CHECK(std::abs(lr.W / sr.W - 1.0) < 1e-6);
    REQUIRE(lr.eta);
    REQUIRE(sr.eta);
    CHECK(std::abs(*lr.eta / *sr.eta - 1.0) < 1e-6);
  }
}
