#include "luinv/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace luinv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

CycleType::CycleType(std::vector<int> counts) : counts_(std::move(counts)) {
  long total = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0) throw std::invalid_argument("cycle counts must be nonnegative");
    total += static_cast<long>(i + 1) * counts_[i];
  }
  if (total != static_cast<long>(counts_.size()))
    throw std::invalid_argument("cycle type does not sum to its degree");
}

int CycleType::count(int i) const noexcept {
  return (i >= 1 && i <= m()) ? counts_[i - 1] : 0;
}

int CycleType::cycle_count() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::mutex partition_cache_mutex;
std::map<int, std::vector<Partition>> partition_cache;

std::mutex permutation_cache_mutex;
std::map<int, std::vector<Permutation>> permutation_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: m must be nonnegative");
  std::lock_guard lock(partition_cache_mutex);
  auto it = partition_cache.find(m);
  if (it != partition_cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(m, m, prefix, out);
  return partition_cache.emplace(m, std::move(out)).first->second;
}

std::size_t partition_index(const Partition& lambda) {
  const auto& all = partitions_of(lambda.size());
  // Reverse-lexicographic order means the list is sorted descending.
  auto it = std::lower_bound(all.begin(), all.end(), lambda,
                             [](const Partition& a, const Partition& b) { return a > b; });
  if (it == all.end() || *it != lambda) throw std::logic_error("partition missing from enumeration");
  return static_cast<std::size_t>(it - all.begin());
}

CycleType partition_to_cycle_type(const Partition& lambda) {
  std::vector<int> counts(lambda.size(), 0);
  for (int part : lambda.parts()) ++counts[part - 1];
  return CycleType(std::move(counts));
}

Partition cycle_type_to_partition(const CycleType& a) {
  std::vector<int> parts;
  for (int i = a.m(); i >= 1; --i) parts.insert(parts.end(), a.count(i), i);
  return Partition(std::move(parts));
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer centralizer_order(const CycleType& a) {
  Integer z = 1;
  for (int i = 1; i <= a.m(); ++i) {
    Integer power = boost::multiprecision::pow(Integer(i), static_cast<unsigned>(a.count(i)));
    z *= power * factorial(a.count(i));
  }
  return z;
}

const std::vector<Permutation>& all_permutations(int m) {
  if (m < 0) throw std::invalid_argument("all_permutations: m must be nonnegative");
  std::lock_guard lock(permutation_cache_mutex);
  auto it = permutation_cache.find(m);
  if (it != permutation_cache.end()) return it->second;
  std::vector<Permutation> out;
  Permutation p = identity_permutation(m);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_cache.emplace(m, std::move(out)).first->second;
}

Permutation identity_permutation(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Partition cycle_partition(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

int sign(const Permutation& p) {
  const Partition c = cycle_partition(p);
  int even_cycles = 0;
  for (int len : c.parts()) even_cycles += (len % 2 == 0);
  return even_cycles % 2 ? -1 : 1;
}

}  // namespace luinv
