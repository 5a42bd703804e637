#include "luinv/dimensions.hpp"

#include <stdexcept>
#include <string>

#include "luinv/characters.hpp"
#include "luinv/combinatorics.hpp"
#include "luinv/errors.hpp"

namespace luinv {

namespace {

void check_args(int k, int m) {
  if (k < 1) throw std::invalid_argument("number of subsystems must be at least 1");
  if (m < 0) throw std::invalid_argument("degree must be nonnegative");
}

Integer require_integer(const Rational& q, const char* what) {
  if (!is_integral(q) || q < 0)
    throw InvariantViolation(std::string(what) + " is not a nonnegative integer: " + q.str());
  return to_integer(q);
}

}  // namespace

Integer stable_dimension(int k, int m) {
  check_args(k, m);
  Rational sum = 0;
  for (const auto& lambda : partitions_of(m)) {
    const Rational z(centralizer_order(partition_to_cycle_type(lambda)));
    Rational term = 1;
    if (k >= 2) {
      for (int e = 0; e < k - 2; ++e) term *= z;
    } else {
      term = 1 / z;
    }
    sum += term;
  }
  return require_integer(sum, "stable dimension");
}

Integer stable_dimension_via_characters(int k, int m) {
  check_args(k, m);
  const ClassFunction conj = conjugation_character(m);
  const Rational d = inner_product(ClassFunction::constant(m, 1), pointwise_power(conj, k - 1));
  return require_integer(d, "stable dimension");
}

Integer restricted_dimension(std::span<const int> local_dims, int m) {
  if (m < 0) throw std::invalid_argument("degree must be nonnegative");
  ClassFunction product = ClassFunction::constant(m, 1);
  for (int n : local_dims) {
    if (n < 1) throw std::invalid_argument("local dimensions must be positive");
    product = pointwise_product(product, squared_character_sum(m, n));
  }
  return require_integer(inner_product(ClassFunction::constant(m, 1), product), "restricted dimension");
}

Integer mixed_dimension(int k, int m) {
  check_args(k, m);
  return stable_dimension(k + 1, m);
}

}  // namespace luinv
