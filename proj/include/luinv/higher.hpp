#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "luinv/states.hpp"
#include "luinv/subset.hpp"

namespace luinv {

/// Element of the symmetric power S^m(H), H = C^{n_1} (x) ... (x) C^{n_k}.
///
/// Stored as coefficients on symmetric products of computational basis
/// vectors, keyed by the sorted list of their linear indices. A symmetric
/// product is realized in H^{(x)m} as the average of the tensor products over
/// all m! orderings, so ||psi^m|| = ||psi||^m and a product with multiplicities
/// mu has squared norm prod(mu!) / m!.
class SymmetricTensor {
 public:
  using Key = std::vector<std::uint32_t>;

  SymmetricTensor(std::vector<int> dims, int m);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int degree() const noexcept { return m_; }
  const std::map<Key, Complex>& terms() const noexcept { return terms_; }

  /// Adds `coeff` times the symmetric product of the given basis indices (any order).
  void add(std::span<const std::uint32_t> indices, Complex coeff);

  double norm2() const;
  /// <this, other>, conjugate-linear in this.
  Complex inner(const SymmetricTensor& other) const;
  /// <this, psi^m>.
  Complex overlap_with_power(const PureState& psi) const;
  /// Realization in H^{(x)m}, row-major over the m tensor factors.
  std::vector<Complex> to_dense() const;

  static double product_norm2(const Key& key, int m);

 private:
  std::vector<int> dims_;
  int m_;
  std::size_t total_;
  std::map<Key, Complex> terms_;
};

struct IndexPair {
  int lo;
  int hi;
};

/// sum_b (-1)^{|A & B|} e_{x_b} e_{y_b}: x_b takes hi_j on subsystems with
/// b_j = 1 and lo_j elsewhere, y_b the opposite. Indices are 0-based and need
/// lo_j <= hi_j < n_j, with lo_j != hi_j for j in A.
SymmetricTensor basis_vector_m2(const std::vector<int>& dims, const SubsetMask& a, std::span<const IndexPair> pairs);

/// rows[j] lists the m indices used on subsystem j (0-based).
using IndexTable = std::vector<std::vector<int>>;

/// sum over (pi_1..pi_k) in S_m^k of prod_{j in A} sign(pi_j) times the
/// symmetric product of the m basis vectors whose subsystem-j index is
/// rows[j][pi_j(l)], l = 0..m-1. |A| must be even; rows outside A weakly
/// increasing, rows in A strictly increasing.
SymmetricTensor higher_basis_vector(const std::vector<int>& dims, const SubsetMask& a, int m, const IndexTable& rows);

/// Every admissible index table for (dims, A, m), in lexicographic order.
std::vector<IndexTable> admissible_tables(const std::vector<int>& dims, const SubsetMask& a, int m);

inline constexpr int kHigherMaxDegree = 3;
inline constexpr std::size_t kHigherMaxDimension = 81;

/// <psi^m, P_A psi^m> = sum over admissible tables of |<v, psi^m>|^2 / ||v||^2.
/// Throws std::invalid_argument for odd |A| or m < 1, EnumerationBoundError
/// beyond m = 3 or total dimension 81.
double higher_invariant(const PureState& psi, const SubsetMask& a, int m);

}  // namespace luinv
