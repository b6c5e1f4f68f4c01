#pragma once

#include <cstddef>
#include <vector>

#include "lrk/chain.hpp"
#include "lrk/spectrum.hpp"

// Small-L ground truth built from the real-space Hamiltonian. Used by tests only.
namespace lrk::oracle {

inline constexpr int kMaxMatrixSites = 64;
inline constexpr int kMaxEnumerationSites = 16;

/// Dense symmetric matrix in the (c_1..c_L, c_1^dag..c_L^dag) basis, row-major.
class BdgMatrix {
 public:
  explicit BdgMatrix(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  double frobenius_norm() const;

 private:
  std::size_t dim_;
  std::vector<double> a_;
};

BdgMatrix bdg_matrix(const ChainParams& params);

/// All eigenvalues, ascending (cyclic Jacobi).
std::vector<double> eigenvalues(const BdgMatrix& m);

/// Upper half of the spectrum, ascending. Each eps_k appears twice (for +k and -k).
std::vector<double> exact_spectrum(const BdgMatrix& m);

/// Z summed over all 2^L occupation patterns of the L Bogoliubov modes.
double enumerate_partition(const QuasiparticleSpectrum& spectrum, double beta);

}  // namespace lrk::oracle
