#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "luinv/combinatorics.hpp"
#include "luinv/exact.hpp"

namespace luinv {

/// Rational-valued function on the conjugacy classes of S_m. Values are indexed
/// by cycle type in the order of partitions_of(m).
class ClassFunction {
 public:
  /// Constant function; constant(m, 1) is the trivial character.
  static ClassFunction constant(int m, const Rational& value);

  ClassFunction(int m, std::vector<Rational> values);

  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  /// Value on the class with cycle structure `cls`.
  const Rational& at(const Partition& cls) const;

  bool is_integral() const;

  ClassFunction& operator+=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int m_;
  std::vector<Rational> values_;
};

/// chi_lambda(mu) by Murnaghan-Nakayama rim-hook removal. Memoized; thread-safe.
std::int64_t character_value(const Partition& lambda, const Partition& cycle_structure);

ClassFunction irreducible_character(const Partition& lambda);

/// (f, g) = sum over classes a of f(a) g(a) / z(a). Characters are real, so no conjugation.
/// Throws std::invalid_argument on degree mismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);
ClassFunction pointwise_power(const ClassFunction& f, unsigned exponent);

/// sum of chi_lambda^2 over lambda |- m with at most max_rows parts. With no
/// row limit this is the conjugation character: its value on a class is z(a).
ClassFunction squared_character_sum(int m, int max_rows);
ClassFunction conjugation_character(int m);

/// Multiplicity of V_nu in V_{lambda_1} (x) ... (x) V_{lambda_k}.
Integer kronecker_multiplicity(const Partition& nu, std::span<const Partition> lambdas);

}  // namespace luinv
