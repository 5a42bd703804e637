#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "luinv/exact.hpp"

namespace luinv {

/// Weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }  // m, the sum of the parts
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// "(2,1,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// counts[i-1] = number of i-cycles. Always holds m entries, trailing zeros included.
class CycleType {
 public:
  CycleType() = default;
  /// Throws std::invalid_argument unless counts are nonnegative and sum(i * a_i) == counts.size().
  explicit CycleType(std::vector<int> counts);

  const std::vector<int>& counts() const noexcept { return counts_; }
  int m() const noexcept { return static_cast<int>(counts_.size()); }
  /// Number of i-cycles, 1-based; zero past m.
  int count(int i) const noexcept;
  int cycle_count() const noexcept;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> counts_;
};

/// All partitions of m in reverse-lexicographic order: (m) first, (1,...,1) last.
/// The returned reference stays valid for the life of the program.
const std::vector<Partition>& partitions_of(int m);

/// Position of lambda in partitions_of(lambda.size()).
std::size_t partition_index(const Partition& lambda);

CycleType partition_to_cycle_type(const Partition& lambda);
Partition cycle_type_to_partition(const CycleType& a);

/// prod_i i^{a_i} a_i!, the order of the centralizer of any permutation of type a.
Integer centralizer_order(const CycleType& a);

Integer factorial(int n);

// ---------------------------------------------------------------------------
// Permutations in one-line notation on {0, ..., m-1}.

using Permutation = std::vector<int>;

/// All m! permutations in lexicographic order of their one-line arrays.
const std::vector<Permutation>& all_permutations(int m);

Permutation identity_permutation(int m);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer after inner
Permutation inverse(const Permutation& p);
int sign(const Permutation& p);
/// Lengths of the cycles of p, sorted into a partition.
Partition cycle_partition(const Permutation& p);

}  // namespace luinv
