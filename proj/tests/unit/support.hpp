#pragma once

#include <cmath>
#include <vector>

#include "luinv/states.hpp"

namespace luinv::fixtures {

inline PureState bell() {
  const double r = 1 / std::sqrt(2.0);
  return PureState({2, 2}, {r, 0, 0, r});
}

inline PureState ghz(int k) {
  std::vector<Complex> c(std::size_t{1} << k, 0.0);
  c.front() = c.back() = 1 / std::sqrt(2.0);
  return PureState(std::vector<int>(static_cast<std::size_t>(k), 2), c);
}

inline PureState w3() {
  std::vector<Complex> c(8, 0.0);
  c[1] = c[2] = c[4] = 1 / std::sqrt(3.0);
  return PureState({2, 2, 2}, c);
}

/// Tensor product of normalized single-site states.
inline PureState product_state(const std::vector<std::vector<Complex>>& sites) {
  std::vector<int> dims;
  std::vector<Complex> c{1.0};
  for (const auto& s : sites) {
    dims.push_back(static_cast<int>(s.size()));
    double n = 0;
    for (auto z : s) n += std::norm(z);
    std::vector<Complex> next;
    for (auto a : c)
      for (auto b : s) next.push_back(a * b / std::sqrt(n));
    c = std::move(next);
  }
  return PureState(dims, c);
}

inline double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

}  // namespace luinv::fixtures
