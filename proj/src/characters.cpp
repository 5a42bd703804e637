#include "luinv/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "luinv/errors.hpp"

namespace luinv {

ClassFunction ClassFunction::constant(int m, const Rational& value) {
  return ClassFunction(m, std::vector<Rational>(partitions_of(m).size(), value));
}

ClassFunction::ClassFunction(int m, std::vector<Rational> values) : m_(m), values_(std::move(values)) {
  if (values_.size() != partitions_of(m).size())
    throw std::invalid_argument("class function needs one value per conjugacy class");
}

const Rational& ClassFunction::at(const Partition& cls) const {
  if (cls.size() != m_) throw std::invalid_argument("class function: degree mismatch");
  return values_[partition_index(cls)];
}

bool ClassFunction::is_integral() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return luinv::is_integral(q); });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.m_ != m_) throw std::invalid_argument("class function sum: degree mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

namespace {

// A partition with l parts maps to the bead positions lambda_i + (l - i).
std::vector<int> to_beads(const std::vector<int>& parts) {
  const int l = static_cast<int>(parts.size());
  std::vector<int> beads(parts.size());
  for (int i = 0; i < l; ++i) beads[i] = parts[i] + (l - 1 - i);
  return beads;  // strictly decreasing
}

std::vector<int> from_beads(std::vector<int> beads) {
  std::sort(beads.rbegin(), beads.rend());
  const int l = static_cast<int>(beads.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int part = beads[i] - (l - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex memo_mutex;
std::map<MemoKey, std::int64_t> memo;

// cycles is sorted descending; the largest cycle is stripped first.
std::int64_t mn_value(const std::vector<int>& shape, const std::vector<int>& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  MemoKey key{shape, cycles};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const int hook = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const std::vector<int> beads = to_beads(shape);

  std::int64_t total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int target = beads[i] - hook;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    // Leg length = number of beads strictly between target and the moved bead.
    int between = 0;
    for (int b : beads) between += (b > target && b < beads[i]);
    std::vector<int> moved = beads;
    moved[i] = target;
    const std::int64_t sub = mn_value(from_beads(std::move(moved)), rest);
    total += (between % 2 ? -sub : sub);
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(std::move(key), total);
  return total;
}

void require_same_degree(const ClassFunction& f, const ClassFunction& g) {
  if (f.m() != g.m()) throw std::invalid_argument("class functions of different degree");
}

}  // namespace

std::int64_t character_value(const Partition& lambda, const Partition& cycle_structure) {
  if (lambda.size() != cycle_structure.size())
    throw std::invalid_argument("character_value: degree mismatch");
  return mn_value(lambda.parts(), cycle_structure.parts());
}

ClassFunction irreducible_character(const Partition& lambda) {
  const auto& classes = partitions_of(lambda.size());
  std::vector<Rational> values;
  values.reserve(classes.size());
  for (const auto& cls : classes) values.emplace_back(character_value(lambda, cls));
  return ClassFunction(lambda.size(), std::move(values));
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_same_degree(f, g);
  const auto& classes = partitions_of(f.m());
  Rational sum = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Integer z = centralizer_order(partition_to_cycle_type(classes[i]));
    sum += f[i] * g[i] / Rational(z);
  }
  return sum;
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
  require_same_degree(f, g);
  std::vector<Rational> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = f[i] * g[i];
  return ClassFunction(f.m(), std::move(values));
}

ClassFunction pointwise_power(const ClassFunction& f, unsigned exponent) {
  ClassFunction result = ClassFunction::constant(f.m(), 1);
  for (unsigned e = 0; e < exponent; ++e) result = pointwise_product(result, f);
  return result;
}

ClassFunction squared_character_sum(int m, int max_rows) {
  ClassFunction sum = ClassFunction::constant(m, 0);
  for (const auto& lambda : partitions_of(m)) {
    if (lambda.length() > max_rows) continue;
    const ClassFunction chi = irreducible_character(lambda);
    sum += pointwise_product(chi, chi);
  }
  return sum;
}

ClassFunction conjugation_character(int m) { return squared_character_sum(m, m); }

Integer kronecker_multiplicity(const Partition& nu, std::span<const Partition> lambdas) {
  ClassFunction product = ClassFunction::constant(nu.size(), 1);
  for (const auto& lambda : lambdas) {
    if (lambda.size() != nu.size()) throw std::invalid_argument("kronecker_multiplicity: degree mismatch");
    product = pointwise_product(product, irreducible_character(lambda));
  }
  const Rational c = inner_product(irreducible_character(nu), product);
  if (!is_integral(c) || c < 0)
    throw InvariantViolation("Kronecker multiplicity is not a nonnegative integer: " + c.str());
  return to_integer(c);
}

}  // namespace luinv
