#include "luinv/higher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "luinv/errors.hpp"

namespace luinv {

namespace {

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t j = dims.size(); j-- > 1;) strides[j - 1] = strides[j] * static_cast<std::size_t>(dims[j]);
  return strides;
}

double factorial_double(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_universe(const std::vector<int>& dims, const SubsetMask& a) {
  if (a.universe() != static_cast<int>(dims.size()))
    throw std::out_of_range("subset universe does not match the number of subsystems");
}

// All nondecreasing (or strictly increasing) length-m sequences over [0, n).
std::vector<std::vector<int>> monotone_rows(int n, int m, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> row;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(row.size()) == m) {
      out.push_back(row);
      return;
    }
    for (int v = start; v < n; ++v) {
      row.push_back(v);
      self(self, strict ? v + 1 : v);
      row.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

SymmetricTensor::SymmetricTensor(std::vector<int> dims, int m) : dims_(std::move(dims)), m_(m), total_(1) {
  if (m < 0) throw std::invalid_argument("symmetric power degree must be nonnegative");
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("local dimensions must be positive");
    total_ *= static_cast<std::size_t>(d);
  }
}

void SymmetricTensor::add(std::span<const std::uint32_t> indices, Complex coeff) {
  if (static_cast<int>(indices.size()) != m_) throw std::invalid_argument("symmetric product needs m factors");
  Key key(indices.begin(), indices.end());
  for (auto x : key)
    if (x >= total_) throw std::out_of_range("basis index out of range");
  std::sort(key.begin(), key.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == Complex(0)) terms_.erase(it);
  }
}

double SymmetricTensor::product_norm2(const Key& key, int m) {
  double mult = 1;
  for (std::size_t i = 0; i < key.size();) {
    std::size_t j = i;
    while (j < key.size() && key[j] == key[i]) ++j;
    mult *= factorial_double(static_cast<int>(j - i));
    i = j;
  }
  return mult / factorial_double(m);
}

double SymmetricTensor::norm2() const {
  double s = 0;
  for (const auto& [key, c] : terms_) s += std::norm(c) * product_norm2(key, m_);
  return s;
}

Complex SymmetricTensor::inner(const SymmetricTensor& other) const {
  if (other.dims_ != dims_ || other.m_ != m_) throw std::invalid_argument("symmetric tensors live in different spaces");
  Complex s = 0;
  for (const auto& [key, c] : terms_) {
    auto it = other.terms_.find(key);
    if (it != other.terms_.end()) s += std::conj(c) * it->second * product_norm2(key, m_);
  }
  return s;
}

Complex SymmetricTensor::overlap_with_power(const PureState& psi) const {
  if (psi.dims() != dims_) throw std::invalid_argument("state dimensions do not match the tensor");
  // Every ordering of a symmetric product pairs with psi^m to the same monomial.
  Complex s = 0;
  for (const auto& [key, c] : terms_) {
    Complex mono = 1;
    for (auto x : key) mono *= psi[x];
    s += std::conj(c) * mono;
  }
  return s;
}

std::vector<Complex> SymmetricTensor::to_dense() const {
  std::size_t size = 1;
  for (int i = 0; i < m_; ++i) size *= total_;
  std::vector<Complex> out(size, 0);
  const double inv_orderings = 1.0 / factorial_double(m_);
  for (const auto& [key, c] : terms_) {
    // Summing over all m! orderings (repeats included) realizes the average.
    std::vector<std::size_t> order(key.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      std::size_t idx = 0;
      for (std::size_t f : order) idx = idx * total_ + key[f];
      out[idx] += c * inv_orderings;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

SymmetricTensor basis_vector_m2(const std::vector<int>& dims, const SubsetMask& a, std::span<const IndexPair> pairs) {
  check_universe(dims, a);
  const std::size_t k = dims.size();
  if (pairs.size() != k) throw std::invalid_argument("need one index pair per subsystem");
  for (std::size_t j = 0; j < k; ++j) {
    const auto& p = pairs[j];
    if (p.lo < 0 || p.lo > p.hi || p.hi >= dims[j]) throw std::invalid_argument("index pair must satisfy 0 <= lo <= hi < n");
    if (a.contains(static_cast<int>(j) + 1) && p.lo == p.hi)
      throw std::invalid_argument("index pair on an alternating factor must be distinct");
  }
  const auto strides = strides_of(dims);
  SymmetricTensor v(dims, 2);
  for (std::uint32_t b = 0; b < (1u << k); ++b) {
    std::uint32_t x = 0, y = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const bool flip = (b >> j) & 1u;
      x += static_cast<std::uint32_t>(strides[j] * static_cast<std::size_t>(flip ? pairs[j].hi : pairs[j].lo));
      y += static_cast<std::uint32_t>(strides[j] * static_cast<std::size_t>(flip ? pairs[j].lo : pairs[j].hi));
    }
    const std::uint32_t factors[2] = {x, y};
    v.add(factors, static_cast<double>(intersection_sign(a.bits(), b)));
  }
  return v;
}

SymmetricTensor higher_basis_vector(const std::vector<int>& dims, const SubsetMask& a, int m, const IndexTable& rows) {
  check_universe(dims, a);
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  if (a.size() % 2) throw std::invalid_argument("higher-order vectors need an even number of alternating factors");
  const std::size_t k = dims.size();
  if (rows.size() != k) throw std::invalid_argument("index table needs one row per subsystem");
  for (std::size_t j = 0; j < k; ++j) {
    const bool strict = a.contains(static_cast<int>(j) + 1);
    if (static_cast<int>(rows[j].size()) != m) throw std::invalid_argument("index table rows need m entries");
    for (int l = 0; l < m; ++l) {
      if (rows[j][l] < 0 || rows[j][l] >= dims[j]) throw std::invalid_argument("table index out of range");
      if (l > 0 && (strict ? rows[j][l] <= rows[j][l - 1] : rows[j][l] < rows[j][l - 1]))
        throw std::invalid_argument("index table row is not admissible");
    }
  }

  const auto strides = strides_of(dims);
  const auto& group = all_permutations(m);
  std::vector<int> signs;
  for (const auto& p : group) signs.push_back(sign(p));

  SymmetricTensor v(dims, m);
  std::vector<std::size_t> choice(k, 0);  // permutation index per subsystem
  std::vector<std::uint32_t> factors(static_cast<std::size_t>(m));
  while (true) {
    double coeff = 1;
    for (std::size_t j = 0; j < k; ++j)
      if (a.contains(static_cast<int>(j) + 1)) coeff *= signs[choice[j]];
    for (int l = 0; l < m; ++l) {
      std::size_t x = 0;
      for (std::size_t j = 0; j < k; ++j) x += strides[j] * static_cast<std::size_t>(rows[j][group[choice[j]][l]]);
      factors[l] = static_cast<std::uint32_t>(x);
    }
    v.add(factors, coeff);

    std::size_t j = k;
    while (j > 0 && ++choice[j - 1] == group.size()) choice[--j] = 0;
    if (j == 0) break;
  }
  return v;
}

std::vector<IndexTable> admissible_tables(const std::vector<int>& dims, const SubsetMask& a, int m) {
  check_universe(dims, a);
  std::vector<IndexTable> tables{{}};
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const auto rows = monotone_rows(dims[j], m, a.contains(static_cast<int>(j) + 1));
    std::vector<IndexTable> next;
    for (const auto& prefix : tables)
      for (const auto& row : rows) {
        next.push_back(prefix);
        next.back().push_back(row);
      }
    tables = std::move(next);
  }
  return tables;
}

double higher_invariant(const PureState& psi, const SubsetMask& a, int m) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  if (a.size() % 2) throw std::invalid_argument("higher_invariant needs an even number of alternating factors");
  if (m > kHigherMaxDegree || psi.total_dim() > kHigherMaxDimension) {
    const double estimate = std::pow(factorial_double(m), psi.subsystems()) * std::pow(double(psi.total_dim()), m);
    throw EnumerationBoundError("higher_invariant is limited to m <= " + std::to_string(kHigherMaxDegree) +
                                    " and total dimension <= " + std::to_string(kHigherMaxDimension),
                                estimate);
  }
  double total = 0;
  for (const auto& table : admissible_tables(psi.dims(), a, m)) {
    const SymmetricTensor v = higher_basis_vector(psi.dims(), a, m, table);
    const double n2 = v.norm2();
    if (!(n2 > 0)) throw InvariantViolation("higher-order basis vector vanished");
    total += std::norm(v.overlap_with_power(psi)) / n2;
  }
  return total;
}

}  // namespace luinv
