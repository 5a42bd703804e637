#include "luinv/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "luinv/errors.hpp"
#include "luinv/kernels.hpp"

namespace luinv {

InvariantVector::InvariantVector(int k, std::vector<double> values) : k_(k), values_(std::move(values)) {
  if (k < 0 || k > SubsetMask::kMaxSubsystems || values_.size() != (std::size_t{1} << k))
    throw std::invalid_argument("invariant vector needs 2^k values");
}

double InvariantVector::at(const SubsetMask& s) const {
  if (s.universe() != k_) throw std::invalid_argument("subset universe does not match invariant vector");
  return values_[s.bits()];
}

void subset_parity_transform(std::span<double> x) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("parity transform needs a power-of-two length");
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = x[j], b = x[j + h];
        x[j] = a + b;
        x[j + h] = a - b;
      }
}

namespace {

void check_universe(int k, const SubsetMask& a) {
  if (a.universe() != k) throw std::out_of_range("subset universe does not match the number of subsystems");
}

// Visits every choice of index pairs lo_j <= hi_j, handing the callback the
// 2^k products p_b = psi_{x_b} psi_{y_b} and the coincidence count c.
template <class Visit>
void for_each_pair_tuple(const PureState& psi, Visit&& visit) {
  const auto& dims = psi.dims();
  const std::size_t k = dims.size();
  std::vector<std::size_t> strides(k, 1);
  for (std::size_t j = k; j-- > 1;) strides[j - 1] = strides[j] * static_cast<std::size_t>(dims[j]);

  std::vector<int> lo(k, 0), hi(k, 0);
  std::vector<Complex> products(std::size_t{1} << k);
  while (true) {
    int c = 0;
    for (std::size_t j = 0; j < k; ++j) c += lo[j] == hi[j];
    for (std::uint32_t b = 0; b < products.size(); ++b) {
      std::size_t x = 0, y = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const bool flip = (b >> j) & 1u;
        x += strides[j] * static_cast<std::size_t>(flip ? hi[j] : lo[j]);
        y += strides[j] * static_cast<std::size_t>(flip ? lo[j] : hi[j]);
      }
      products[b] = psi[x] * psi[y];
    }
    visit(products, c);

    // Advance (lo_j, hi_j) odometer-style, last subsystem fastest.
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (++hi[j] < dims[j]) break;
      if (++lo[j] < dims[j]) {
        hi[j] = lo[j];
        break;
      }
      lo[j] = hi[j] = 0;
      if (j == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace

double invariant_I(const PureState& psi, const SubsetMask& a) {
  const int k = psi.subsystems();
  check_universe(k, a);
  double total = 0;
  for_each_pair_tuple(psi, [&](const std::vector<Complex>& products, int c) {
    Complex s = 0;
    for (std::uint32_t b = 0; b < products.size(); ++b) s += static_cast<double>(intersection_sign(a.bits(), b)) * products[b];
    total += std::norm(s) * std::ldexp(1.0, -(k + c));
  });
  return total;
}

InvariantVector invariant_I_vector(const PureState& psi) {
  const int k = psi.subsystems();
  InvariantVector out = InvariantVector::zeros(k);
  std::vector<double> re, im;
  for_each_pair_tuple(psi, [&](const std::vector<Complex>& products, int c) {
    re.resize(products.size());
    im.resize(products.size());
    for (std::size_t b = 0; b < products.size(); ++b) {
      re[b] = products[b].real();
      im[b] = products[b].imag();
    }
    // The signed sums for all A at once are the parity transform of the products.
    subset_parity_transform(re);
    subset_parity_transform(im);
    const double w = std::ldexp(1.0, -(k + c));
    for (std::uint32_t s = 0; s < out.size(); ++s) out[s] += (re[s] * re[s] + im[s] * im[s]) * w;
  });
  return out;
}

double invariant_J(const DensityMatrix& rho, const SubsetMask& a) {
  check_universe(rho.subsystems(), a);
  // Tr(X^2) = sum |X_rc|^2 for Hermitian X.
  return kernels::norm2(partial_trace(rho, a).entries());
}

double invariant_J(const PureState& psi, const SubsetMask& a) {
  check_universe(psi.subsystems(), a);
  return kernels::norm2(reduced_state(psi, a).entries());
}

InvariantVector invariant_J_vector(const DensityMatrix& rho) {
  const int k = rho.subsystems();
  InvariantVector out = InvariantVector::zeros(k);
  for (std::uint32_t s = 0; s < out.size(); ++s) out[s] = invariant_J(rho, SubsetMask(k, s));
  return out;
}

InvariantVector invariant_J_vector(const PureState& psi) {
  const int k = psi.subsystems();
  InvariantVector out = InvariantVector::zeros(k);
  for (std::uint32_t s = 0; s < out.size(); ++s) out[s] = invariant_J(psi, SubsetMask(k, s));
  return out;
}

InvariantVector j_from_i(const InvariantVector& i) {
  std::vector<double> v = i.values();
  subset_parity_transform(v);
  return InvariantVector(i.k(), std::move(v));
}

InvariantVector i_from_j(const InvariantVector& j) {
  std::vector<double> v = j.values();
  subset_parity_transform(v);
  for (double& x : v) x = std::ldexp(x, -j.k());
  return InvariantVector(j.k(), std::move(v));
}

double eta(const DensityMatrix& rho, const SubsetMask& a) {
  const int k = rho.subsystems();
  check_universe(k, a);
  if (a.size() == 0 || a.size() == k) throw std::invalid_argument("eta needs a nonempty proper subset");
  if (std::abs(rho.trace() - 1.0) > 1e-9) throw std::invalid_argument("eta needs a unit-trace state");
  double d = 1;
  for (int j : a.members()) d *= rho.dims()[static_cast<std::size_t>(j - 1)];
  if (d <= 1) throw std::invalid_argument("eta needs the traced subsystems to have total dimension > 1");
  return d / (d - 1) * (1 - invariant_J(rho, a));
}

MeyerWallachForms meyer_wallach_forms(const PureState& psi) {
  const double norm = std::sqrt(psi.norm2());
  if (std::abs(norm - 1.0) > 1e-9) throw std::invalid_argument("Meyer-Wallach measure needs a normalized state");
  const int k = psi.subsystems();
  if (k < 1) throw std::invalid_argument("Meyer-Wallach measure needs at least one subsystem");

  double single_site = 0;
  for (int i = 1; i <= k; ++i) single_site += invariant_J(psi, SubsetMask::from_members(k, {i}));

  const InvariantVector iv = invariant_I_vector(psi);
  double weighted = 0;
  for (std::uint32_t s = 0; s < iv.size(); ++s) weighted += 4.0 * SubsetMask(k, s).size() / k * iv[s];
  return {2.0 - 2.0 / k * single_site, weighted};
}

double meyer_wallach(const PureState& psi) {
  const MeyerWallachForms q = meyer_wallach_forms(psi);
  if (std::abs(q.from_j - q.from_i) > 1e-9)
    throw InvariantViolation("Meyer-Wallach J-form " + std::to_string(q.from_j) + " and I-form " +
                             std::to_string(q.from_i) + " disagree");
  return q.from_j;
}

}  // namespace luinv
