#include "lrk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "lrk/errors.hpp"

namespace lrk::oracle {

BdgMatrix::BdgMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

double BdgMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

BdgMatrix bdg_matrix(const ChainParams& params) {
  validate(params);
  const int L = params.L;
  if (L > kMaxMatrixSites) {
    throw OracleLimit("BdG oracle is limited to L <= " + std::to_string(kMaxMatrixSites));
  }
  const auto n = static_cast<std::size_t>(L);
  BdgMatrix m(2 * n);

  // Particle block A and anomalous block B (antisymmetric); M = [[A, B], [-B, -A]].
  // Hopping and pairing enter at half strength so that the positive eigenvalues are eps_k.
  const double hop = 0.5 * params.J;
  const double pair = 0.5 * params.Delta;
  auto add_particle = [&](std::size_t i, std::size_t j, double v) {
    m(i, j) += v;
    m(n + i, n + j) -= v;
  };
  auto add_anomalous = [&](std::size_t i, std::size_t j, double v) {
    m(i, n + j) += v;
    m(n + i, j) -= v;
  };

  for (int j = 0; j < L; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    add_particle(uj, uj, -params.mu);

    const int next = (j + 1) % L;
    const double wrap = j + 1 >= L ? -1.0 : 1.0;
    add_particle(uj, static_cast<std::size_t>(next), -hop * wrap);
    add_particle(static_cast<std::size_t>(next), uj, -hop * wrap);

    const int max_l = params.range.is_short_range() ? 1 : L - 1;
    for (int l = 1; l <= max_l; ++l) {
      const int other = (j + l) % L;
      const double s = j + l >= L ? -1.0 : 1.0;
      const double w = params.range.is_short_range()
                           ? 2.0
                           : std::pow(static_cast<double>(std::min(l, L - l)),
                                      -params.range.alpha());
      const double v = 0.5 * pair * s * w;
      const auto uo = static_cast<std::size_t>(other);
      add_anomalous(uo, uj, v);
      add_anomalous(uj, uo, -v);
    }
  }
  return m;
}

std::vector<double> eigenvalues(const BdgMatrix& input) {
  const std::size_t n = input.dim();
  BdgMatrix a = input;
  const double tol = 1e-12 * std::max(input.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 100;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  while (off_norm() > tol) {
    if (++sweep > kMaxSweeps) throw ConvergenceFailure("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> exact_spectrum(const BdgMatrix& m) {
  auto ev = eigenvalues(m);
  // The spectrum is symmetric about zero; keep the upper half so that zero modes survive.
  std::vector<double> upper(ev.begin() + static_cast<std::ptrdiff_t>(ev.size() / 2), ev.end());
  for (double& e : upper) e = std::max(e, 0.0);
  return upper;
}

double enumerate_partition(const QuasiparticleSpectrum& spectrum, double beta) {
  const int L = spectrum.L();
  if (L > kMaxEnumerationSites) {
    throw OracleLimit("partition enumeration is limited to L <= " +
                      std::to_string(kMaxEnumerationSites));
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidParameter("beta must be finite and non-negative");
  }
  std::vector<double> modes;
  modes.reserve(static_cast<std::size_t>(L));
  for (double e : spectrum.energies()) {
    modes.push_back(e);
    modes.push_back(e);
  }
  const std::uint32_t patterns = 1u << L;
  double z = 0.0;
  for (std::uint32_t bits = 0; bits < patterns; ++bits) {
    double energy = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      energy += modes[k] * (((bits >> k) & 1u) ? 0.5 : -0.5);
    }
    z += std::exp(-beta * energy);
  }
  return z;
}

}  // namespace lrk::oracle
