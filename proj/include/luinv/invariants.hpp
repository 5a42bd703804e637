#pragma once

#include <vector>

#include "luinv/states.hpp"
#include "luinv/subset.hpp"

namespace luinv {

/// One real value per subset of {1..k}, indexed by SubsetMask::bits().
class InvariantVector {
 public:
  InvariantVector(int k, std::vector<double> values);
  static InvariantVector zeros(int k) { return InvariantVector(k, std::vector<double>(std::size_t{1} << k, 0.0)); }

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double& operator[](std::uint32_t bits) { return values_.at(bits); }
  double operator[](std::uint32_t bits) const { return values_.at(bits); }
  double at(const SubsetMask& s) const;

 private:
  int k_;
  std::vector<double> values_;
};

/// In-place unnormalized Walsh-Hadamard transform over subsets:
/// x_S <- sum_A (-1)^{|A & S|} x_A. Size must be a power of two.
void subset_parity_transform(std::span<double> x);

/// Degree-4 invariant attached to the component of S^2(H) in which exactly the
/// factors in A carry the alternating square:
///   2^{-k} sum over index pairs (lo_j <= hi_j) of 2^{-c} |sum_b (-1)^{|A & B|} psi_{x_b} psi_{y_b}|^2
/// where c counts the subsystems with lo_j == hi_j. Defined for every A; zero for odd |A|.
double invariant_I(const PureState& psi, const SubsetMask& a);

/// All 2^k values of invariant_I in one pass.
InvariantVector invariant_I_vector(const PureState& psi);

/// Tr((Tr_A rho)^2).
double invariant_J(const DensityMatrix& rho, const SubsetMask& a);
/// invariant_J(projector(psi), a) without forming the projector.
double invariant_J(const PureState& psi, const SubsetMask& a);

InvariantVector invariant_J_vector(const DensityMatrix& rho);
InvariantVector invariant_J_vector(const PureState& psi);

/// J_S = sum_A (-1)^{|A & S|} I_A.
InvariantVector j_from_i(const InvariantVector& i);
/// I_A = 2^{-k} sum_B (-1)^{|A & B|} J_B.
InvariantVector i_from_j(const InvariantVector& j);

/// D/(D-1) (1 - J_A) with D the product of the local dimensions in A.
/// Needs A nonempty and proper and Tr rho = 1 within 1e-9. The value lies in
/// [0, 1] for pure states; mixed states with a large complement can exceed 1.
double eta(const DensityMatrix& rho, const SubsetMask& a);

struct MeyerWallachForms {
  double from_j;  // 2 - (2/k) sum_i J_{i}
  double from_i;  // sum_A (4|A|/k) I_A
};

/// Both expressions; needs ||psi|| = 1 within 1e-9.
MeyerWallachForms meyer_wallach_forms(const PureState& psi);

/// The J-form, after checking the I-form agrees within 1e-9 (InvariantViolation otherwise).
double meyer_wallach(const PureState& psi);

}  // namespace luinv
