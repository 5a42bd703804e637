#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace luinv {

/// Subset of the subsystem labels {1, ..., k}. Member j is stored as bit j-1,
/// so iterating bits 0..2^k-1 visits subsets in binary order.
class SubsetMask {
 public:
  static constexpr int kMaxSubsystems = 30;

  SubsetMask(int k, std::uint32_t bits);
  /// Members are 1-based labels. Throws std::out_of_range for labels outside 1..k.
  static SubsetMask from_members(int k, std::span<const int> members);
  static SubsetMask from_members(int k, std::initializer_list<int> members) {
    return from_members(k, std::span<const int>(members.begin(), members.size()));
  }
  static SubsetMask empty(int k) { return SubsetMask(k, 0); }
  static SubsetMask full(int k) { return SubsetMask(k, (1u << k) - 1); }

  int universe() const noexcept { return k_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool contains(int label) const noexcept { return label >= 1 && label <= k_ && ((bits_ >> (label - 1)) & 1u); }
  int size() const noexcept;
  std::vector<int> members() const;
  SubsetMask complement() const { return SubsetMask(k_, ~bits_ & ((1u << k_) - 1)); }

  /// "{1,3}", or "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

 private:
  int k_;
  std::uint32_t bits_;
};

/// Parity of |a & b| as +1 / -1.
inline int intersection_sign(std::uint32_t a, std::uint32_t b) { return (__builtin_popcount(a & b) & 1) ? -1 : 1; }

}  // namespace luinv
