#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "luinv/combinatorics.hpp"
#include "luinv/subset.hpp"

namespace luinv {

using Complex = std::complex<double>;

// Index convention everywhere: row-major over subsystems, last subsystem
// varying fastest. Density matrices are row-major over (row, column).

/// Vector of a k-partite system with local dimensions dims. Not necessarily normalized.
class PureState {
 public:
  /// Throws std::invalid_argument if a dimension is < 1 or coeffs has the wrong length.
  PureState(std::vector<int> dims, std::vector<Complex> coeffs);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int subsystems() const noexcept { return static_cast<int>(dims_.size()); }
  std::size_t total_dim() const noexcept { return coeffs_.size(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  std::span<Complex> coeffs() noexcept { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

  double norm2() const;
  PureState normalized() const;

 private:
  std::vector<int> dims_;
  std::vector<Complex> coeffs_;
};

/// Operator on the k-partite space. Hermiticity is checked on construction;
/// positivity and trace bounds only by is_physical().
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;

  /// Throws std::invalid_argument on bad shape or if |M - M^dagger| exceeds
  /// kHermitianTolerance (relative to max(1, largest entry)).
  DensityMatrix(std::vector<int> dims, std::vector<Complex> entries);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int subsystems() const noexcept { return static_cast<int>(dims_.size()); }
  std::size_t side() const noexcept { return side_; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * side_ + c]; }
  /// Row r as a contiguous span.
  std::span<const Complex> row(std::size_t r) const { return {entries_.data() + r * side_, side_}; }

  double trace() const;  // real part; the imaginary part vanishes for Hermitian input
  /// Positive semidefinite and trace <= 1, both up to tol.
  bool is_physical(double tol = 1e-10) const;

  Eigen::MatrixXcd to_matrix() const;
  static DensityMatrix from_matrix(std::vector<int> dims, const Eigen::MatrixXcd& m);

 private:
  std::vector<int> dims_;
  std::size_t side_;
  std::vector<Complex> entries_;
};

/// psi psi^dagger.
DensityMatrix projector(const PureState& psi);

/// Traces out the subsystems in `traced` (1-based labels); the result lives on
/// the remaining factors in their original order. Tracing out everything
/// gives a 1x1 matrix with no subsystems.
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsetMask& traced);

/// partial_trace(projector(psi), traced) without forming the full projector.
DensityMatrix reduced_state(const PureState& psi, const SubsetMask& traced);

/// Purification with the environment appended as the last subsystem, its
/// dimension equal to the numerical rank of rho (eigenvalues > 1e-12).
/// Throws std::invalid_argument if rho has a negative eigenvalue below -1e-10
/// or nonpositive trace.
PureState purify(const DensityMatrix& rho);

/// Independent standard complex Gaussian coefficients, normalized. Identical
/// (dims, seed) pairs give bit-identical states.
PureState random_pure_state(const std::vector<int>& dims, std::uint64_t seed);
PureState random_pure_state(const std::vector<int>& dims, std::mt19937_64& rng);

/// Reduced state of a random pure state on dims + {env_dim}; rank <= env_dim, unit trace.
DensityMatrix random_density_matrix(const std::vector<int>& dims, int env_dim, std::uint64_t seed);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase correction).
Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng);

/// (U_1 (x) ... (x) U_k) psi.
PureState apply_local_unitaries(const PureState& psi, std::span<const Eigen::MatrixXcd> unitaries);
/// U rho U^dagger with U = U_1 (x) ... (x) U_k.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, std::span<const Eigen::MatrixXcd> unitaries);

/// sum over index rows I_1..I_m of prod_j psi[I_j] conj(psi[J_j]), where the
/// subsystem-l digit of J_j is the subsystem-l digit of I_{perms[l](j)}.
/// Needs one permutation of a common degree m per subsystem.
Complex permutation_contraction(const PureState& psi, std::span<const Permutation> perms);

/// Same contraction evaluated on rho = Tr_env psi psi^dagger, with the
/// environment permutation fixed to the identity:
/// sum over I of prod_j rho[I_j][J_j].
Complex reduced_contraction(const DensityMatrix& rho, std::span<const Permutation> perms);

/// Numerical rank of the (sample_count x (m!)^k) matrix of permutation
/// contractions over random states on dims + {prod(dims)}, k = dims.size().
/// Singular values above 1e-8 times the largest count.
std::size_t invariant_space_rank(const std::vector<int>& dims, int m, std::size_t sample_count, std::uint64_t seed);

/// 3 (m!)^k, the default sample count for the rank oracle.
std::size_t default_rank_samples(std::size_t k, int m);

}  // namespace luinv
