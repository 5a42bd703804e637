#include <gtest/gtest.h>

#include "luinv/errors.hpp"
#include "luinv/higher.hpp"
#include "luinv/invariants.hpp"
#include "support.hpp"

using namespace luinv;

namespace {

std::vector<std::vector<IndexPair>> all_pairs(const std::vector<int>& dims, const SubsetMask& a) {
  std::vector<std::vector<IndexPair>> out{{}};
  for (std::size_t j = 0; j < dims.size(); ++j) {
    std::vector<std::vector<IndexPair>> next;
    for (const auto& prefix : out)
      for (int lo = 0; lo < dims[j]; ++lo)
        for (int hi = lo; hi < dims[j]; ++hi) {
          if (a.contains(static_cast<int>(j) + 1) && lo == hi) continue;
          auto p = prefix;
          p.push_back({lo, hi});
          next.push_back(p);
        }
    out = std::move(next);
  }
  return out;
}

Complex dense_inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace

TEST(SymmetricTensor, NormConvention) {
  EXPECT_DOUBLE_EQ(SymmetricTensor::product_norm2({0, 1}, 2), 0.5);
  EXPECT_DOUBLE_EQ(SymmetricTensor::product_norm2({1, 1}, 2), 1);
  EXPECT_DOUBLE_EQ(SymmetricTensor::product_norm2({0, 0, 2}, 3), 1.0 / 3);
}

TEST(SymmetricTensor, SparseMatchesDense) {
  SymmetricTensor a({2, 2}, 3), b({2, 2}, 3);
  const std::vector<std::uint32_t> k1{0, 1, 1}, k2{3, 1, 0}, k3{2, 2, 2};
  a.add(k1, {1, 2});
  a.add(k2, -0.5);
  b.add(k2, {0, 1});
  b.add(k3, 2);
  b.add(k1, 1);
  const auto da = a.to_dense(), db = b.to_dense();
  EXPECT_LT(std::abs(a.inner(b) - dense_inner(da, db)), 1e-14);
  EXPECT_NEAR(a.norm2(), dense_inner(da, da).real(), 1e-14);

  const PureState psi = random_pure_state({2, 2}, 5);
  std::vector<Complex> power{1.0};
  for (int f = 0; f < 3; ++f) {
    std::vector<Complex> next;
    for (auto x : power)
      for (auto y : psi.coeffs()) next.push_back(x * y);
    power = std::move(next);
  }
  EXPECT_LT(std::abs(a.overlap_with_power(psi) - dense_inner(da, power)), 1e-14);
  EXPECT_NEAR(dense_inner(power, power).real(), 1, 1e-13);
}

TEST(BasisVectorM2, Examples) {
  const IndexPair distinct{0, 1}, same{1, 1};
  EXPECT_DOUBLE_EQ(basis_vector_m2({2}, SubsetMask::empty(1), std::span(&distinct, 1)).norm2(), 2);
  EXPECT_DOUBLE_EQ(basis_vector_m2({2}, SubsetMask::empty(1), std::span(&same, 1)).norm2(), 4);
  EXPECT_THROW(basis_vector_m2({2}, SubsetMask::full(1), std::span(&same, 1)), std::invalid_argument);
}

TEST(BasisVectorM2, NormLawAndOrthogonality) {
  for (const std::vector<int>& dims : {std::vector<int>{2, 2}, std::vector<int>{2, 3, 2}}) {
    const int k = static_cast<int>(dims.size());
    std::vector<SymmetricTensor> vs;
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
      const SubsetMask a(k, s);
      if (a.size() % 2) continue;
      for (const auto& pairs : all_pairs(dims, a)) {
        int c = 0;
        for (const auto& p : pairs) c += p.lo == p.hi;
        vs.push_back(basis_vector_m2(dims, a, pairs));
        EXPECT_NEAR(vs.back().norm2(), std::ldexp(1.0, k + c), 1e-10);
      }
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) EXPECT_LT(std::abs(vs[i].inner(vs[j])), 1e-12);
  }
}

TEST(HigherBasis, DegreeTwoEqualsPairConstruction) {
  const std::vector<int> dims{2, 3, 2};
  for (std::uint32_t s = 0; s < 8; ++s) {
    const SubsetMask a(3, s);
    if (a.size() % 2) continue;
    for (const auto& rows : admissible_tables(dims, a, 2)) {
      std::vector<IndexPair> pairs;
      for (const auto& r : rows) pairs.push_back({r[0], r[1]});
      const SymmetricTensor h = higher_basis_vector(dims, a, 2, rows);
      const SymmetricTensor b = basis_vector_m2(dims, a, pairs);
      // The scalar relating the two is exactly 1.
      EXPECT_EQ(h.terms(), b.terms());
    }
  }
}

TEST(HigherBasis, Examples) {
  const IndexTable same{{1, 1, 1}, {2, 2, 2}};
  const SymmetricTensor v = higher_basis_vector({3, 3}, SubsetMask::empty(2), 3, same);
  ASSERT_EQ(v.terms().size(), 1u);
  EXPECT_EQ(v.terms().begin()->first, (SymmetricTensor::Key{5, 5, 5}));
  EXPECT_GT(std::abs(v.terms().begin()->second), 0);

  const auto tables = admissible_tables({3, 3}, SubsetMask::full(2), 3);
  ASSERT_EQ(tables.size(), 1u);
  EXPECT_THROW(higher_basis_vector({3, 3}, SubsetMask::from_members(2, {1}), 3, same), std::invalid_argument);
  EXPECT_THROW(higher_basis_vector({3, 3}, SubsetMask::full(2), 3, same), std::invalid_argument);
}

TEST(HigherBasis, GramMatrixDiagonal) {
  std::vector<SymmetricTensor> vs;
  for (std::uint32_t s : {0u, 3u})
    for (const auto& rows : admissible_tables({3, 3}, SubsetMask(2, s), 3))
      vs.push_back(higher_basis_vector({3, 3}, SubsetMask(2, s), 3, rows));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) EXPECT_LT(std::abs(vs[i].inner(vs[j])), 1e-12);
}

TEST(HigherInvariant, Examples) {
  const PureState psi = random_pure_state({2, 3}, 31);
  std::vector<Complex> c(psi.coeffs().begin(), psi.coeffs().end());
  for (auto& z : c) z *= 1.2;
  const PureState scaled({2, 3}, c);
  EXPECT_NEAR(higher_invariant(scaled, SubsetMask::empty(2), 1), scaled.norm2(), 1e-12);
  for (std::uint32_t s : {0u, 3u})
    EXPECT_NEAR(higher_invariant(psi, SubsetMask(2, s), 2), invariant_I(psi, SubsetMask(2, s)), 1e-12);
  EXPECT_THROW(higher_invariant(psi, SubsetMask::from_members(2, {1}), 2), std::invalid_argument);
  EXPECT_THROW(higher_invariant(psi, SubsetMask::empty(2), 4), EnumerationBoundError);
  EXPECT_THROW(higher_invariant(random_pure_state({3, 3, 3, 4}, 1), SubsetMask::empty(4), 2), EnumerationBoundError);
}

TEST(HigherInvariant, DegreeThreeComponentsBoundedByNorm) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PureState psi = random_pure_state({3, 3}, seed);
    const double total = higher_invariant(psi, SubsetMask::empty(2), 3) + higher_invariant(psi, SubsetMask::full(2), 3);
    EXPECT_LE(total, 1 + 1e-9);
    EXPECT_GT(total, 0);
  }
}

TEST(HigherInvariant, LocalUnitaryInvariance) {
  std::mt19937_64 rng(8);
  const PureState psi = random_pure_state({2, 3}, rng);
  const std::vector<Eigen::MatrixXcd> us{random_unitary(2, rng), random_unitary(3, rng)};
  const PureState moved = apply_local_unitaries(psi, us);
  for (std::uint32_t s : {0u, 3u})
    EXPECT_NEAR(higher_invariant(psi, SubsetMask(2, s), 3), higher_invariant(moved, SubsetMask(2, s), 3), 1e-10);
}
