#include "luinv/subset.hpp"

#include <bit>
#include <stdexcept>

namespace luinv {

SubsetMask::SubsetMask(int k, std::uint32_t bits) : k_(k), bits_(bits) {
  if (k < 0 || k > kMaxSubsystems) throw std::invalid_argument("subset universe size out of range");
  if (k < 32 && (bits >> k) != 0) throw std::out_of_range("subset has members outside 1..k");
}

SubsetMask SubsetMask::from_members(int k, std::span<const int> members) {
  std::uint32_t bits = 0;
  for (int j : members) {
    if (j < 1 || j > k) throw std::out_of_range("subsystem label " + std::to_string(j) + " outside 1.." + std::to_string(k));
    bits |= 1u << (j - 1);
  }
  return SubsetMask(k, bits);
}

int SubsetMask::size() const noexcept { return std::popcount(bits_); }

std::vector<int> SubsetMask::members() const {
  std::vector<int> out;
  for (int j = 1; j <= k_; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int j : members()) {
    if (!first) s += ',';
    s += std::to_string(j);
    first = false;
  }
  return s + "}";
}

}  // namespace luinv
