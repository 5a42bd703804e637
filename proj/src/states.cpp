#include "luinv/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "luinv/kernels.hpp"

namespace luinv {

namespace {

std::size_t product_of(const std::vector<int>& dims) {
  std::size_t n = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("local dimensions must be positive");
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t j = dims.size(); j-- > 1;) strides[j - 1] = strides[j] * static_cast<std::size_t>(dims[j]);
  return strides;
}

// Linear offsets of every multi-index over the listed subsystems, enumerated
// row-major in the listed order.
std::vector<std::size_t> offsets(const std::vector<int>& dims, const std::vector<int>& axes) {
  const auto strides = strides_of(dims);
  std::vector<std::size_t> out{0};
  for (int axis : axes) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * static_cast<std::size_t>(dims[axis]));
    for (std::size_t base : out)
      for (int i = 0; i < dims[axis]; ++i) next.push_back(base + static_cast<std::size_t>(i) * strides[axis]);
    out = std::move(next);
  }
  return out;
}

struct Split {
  std::vector<int> kept_axes, traced_axes, kept_dims;
};

Split split_axes(const std::vector<int>& dims, const SubsetMask& traced) {
  if (traced.universe() != static_cast<int>(dims.size()))
    throw std::out_of_range("subset universe does not match the number of subsystems");
  Split s;
  for (int j = 0; j < static_cast<int>(dims.size()); ++j) {
    if (traced.contains(j + 1)) {
      s.traced_axes.push_back(j);
    } else {
      s.kept_axes.push_back(j);
      s.kept_dims.push_back(dims[j]);
    }
  }
  return s;
}

std::vector<std::vector<int>> digit_table(const std::vector<int>& dims) {
  const std::size_t total = product_of(dims);
  std::vector<std::vector<int>> digits(total, std::vector<int>(dims.size()));
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t rest = x;
    for (std::size_t j = dims.size(); j-- > 0;) {
      digits[x][j] = static_cast<int>(rest % static_cast<std::size_t>(dims[j]));
      rest /= static_cast<std::size_t>(dims[j]);
    }
  }
  return digits;
}

// Shared driver for both contraction forms: visits every index row tuple
// (I_1..I_m) together with the permuted partner rows (J_1..J_m).
template <class Term>
Complex contract(const std::vector<int>& dims, std::span<const Permutation> perms, Term&& term) {
  if (perms.size() != dims.size()) throw std::invalid_argument("need exactly one permutation per subsystem");
  const int m = perms.empty() ? 0 : static_cast<int>(perms[0].size());
  for (const auto& p : perms)
    if (static_cast<int>(p.size()) != m) throw std::invalid_argument("permutations must share one degree");
  const std::size_t total = product_of(dims);
  const auto strides = strides_of(dims);
  const auto digits = digit_table(dims);
  const std::size_t k = dims.size();

  std::vector<std::size_t> rows(static_cast<std::size_t>(m), 0), partners(static_cast<std::size_t>(m));
  Complex sum = 0;
  while (true) {
    for (int j = 0; j < m; ++j) {
      std::size_t idx = 0;
      for (std::size_t l = 0; l < k; ++l) idx += strides[l] * static_cast<std::size_t>(digits[rows[perms[l][j]]][l]);
      partners[j] = idx;
    }
    sum += term(rows, partners);
    int pos = m - 1;
    while (pos >= 0 && ++rows[pos] == total) rows[pos--] = 0;
    if (pos < 0) break;
  }
  return sum;
}

}  // namespace

PureState::PureState(std::vector<int> dims, std::vector<Complex> coeffs)
    : dims_(std::move(dims)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != product_of(dims_)) throw std::invalid_argument("coefficient count must equal prod(dims)");
}

double PureState::norm2() const { return kernels::norm2(coeffs_); }

PureState PureState::normalized() const {
  const double n = std::sqrt(norm2());
  if (n == 0) throw std::invalid_argument("cannot normalize the zero vector");
  std::vector<Complex> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [n](Complex z) { return z / n; });
  return PureState(dims_, std::move(c));
}

DensityMatrix::DensityMatrix(std::vector<int> dims, std::vector<Complex> entries)
    : dims_(std::move(dims)), side_(product_of(dims_)), entries_(std::move(entries)) {
  if (entries_.size() != side_ * side_) throw std::invalid_argument("density matrix needs prod(dims)^2 entries");
  double scale = 1;
  for (const auto& z : entries_) scale = std::max(scale, std::abs(z));
  for (std::size_t r = 0; r < side_; ++r)
    for (std::size_t c = r; c < side_; ++c)
      if (std::abs(entries_[r * side_ + c] - std::conj(entries_[c * side_ + r])) > kHermitianTolerance * scale)
        throw std::invalid_argument("density matrix is not Hermitian");
}

double DensityMatrix::trace() const {
  double t = 0;
  for (std::size_t i = 0; i < side_; ++i) t += entries_[i * side_ + i].real();
  return t;
}

bool DensityMatrix::is_physical(double tol) const {
  if (trace() > 1 + tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

Eigen::MatrixXcd DensityMatrix::to_matrix() const {
  Eigen::MatrixXcd m(side_, side_);
  for (std::size_t r = 0; r < side_; ++r)
    for (std::size_t c = 0; c < side_; ++c) m(r, c) = entries_[r * side_ + c];
  return m;
}

DensityMatrix DensityMatrix::from_matrix(std::vector<int> dims, const Eigen::MatrixXcd& m) {
  std::vector<Complex> e(static_cast<std::size_t>(m.rows() * m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) e[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
  return DensityMatrix(std::move(dims), std::move(e));
}

DensityMatrix projector(const PureState& psi) {
  const std::size_t n = psi.total_dim();
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r)
    kernels::scale_conj(psi[r], psi.coeffs(), std::span<Complex>(e.data() + r * n, n));
  return DensityMatrix(psi.dims(), std::move(e));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsetMask& traced) {
  const Split s = split_axes(rho.dims(), traced);
  const auto keep = offsets(rho.dims(), s.kept_axes);
  const auto trace = offsets(rho.dims(), s.traced_axes);
  const std::size_t n = keep.size();
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc = 0;
      for (std::size_t t : trace) acc += rho(keep[r] + t, keep[c] + t);
      out[r * n + c] = acc;
    }
  return DensityMatrix(s.kept_dims, std::move(out));
}

DensityMatrix reduced_state(const PureState& psi, const SubsetMask& traced) {
  const Split s = split_axes(psi.dims(), traced);
  const auto keep = offsets(psi.dims(), s.kept_axes);
  const auto trace = offsets(psi.dims(), s.traced_axes);
  const std::size_t n = keep.size(), t = trace.size();
  // Reshape psi into an n x t matrix M; the reduced state is M M^dagger.
  std::vector<Complex> m(n * t);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < t; ++j) m[r * t + j] = psi[keep[r] + trace[j]];
  std::vector<Complex> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::span<const Complex> row_r(m.data() + r * t, t);
    for (std::size_t c = r; c < n; ++c) {
      const Complex v = kernels::dot(std::span<const Complex>(m.data() + c * t, t), row_r);
      out[r * n + c] = v;
      out[c * n + r] = std::conj(v);
    }
    out[r * n + r] = out[r * n + r].real();
  }
  return DensityMatrix(s.kept_dims, std::move(out));
}

PureState purify(const DensityMatrix& rho) {
  if (rho.trace() <= 0) throw std::invalid_argument("purify: trace must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.to_matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("purify: eigendecomposition failed");
  const auto& values = solver.eigenvalues();
  if (values.minCoeff() < -1e-10) throw std::invalid_argument("purify: matrix is not positive semidefinite");

  std::vector<Eigen::Index> support;
  for (Eigen::Index i = values.size(); i-- > 0;)  // largest eigenvalue first
    if (values(i) > 1e-12) support.push_back(i);
  const std::size_t env = support.size();
  const std::size_t n = rho.side();

  std::vector<Complex> coeffs(n * env);
  for (std::size_t e = 0; e < env; ++e) {
    const double w = std::sqrt(values(support[e]));
    for (std::size_t s = 0; s < n; ++s)
      coeffs[s * env + e] = w * solver.eigenvectors()(static_cast<Eigen::Index>(s), support[e]);
  }
  std::vector<int> dims = rho.dims();
  dims.push_back(static_cast<int>(env));
  return PureState(std::move(dims), std::move(coeffs));
}

PureState random_pure_state(const std::vector<int>& dims, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> c(product_of(dims));
  for (auto& z : c) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = {re, im};
  }
  return PureState(dims, std::move(c)).normalized();
}

PureState random_pure_state(const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_state(dims, rng);
}

DensityMatrix random_density_matrix(const std::vector<int>& dims, int env_dim, std::uint64_t seed) {
  std::vector<int> full = dims;
  full.push_back(env_dim);
  const auto k = static_cast<int>(full.size());
  return reduced_state(random_pure_state(full, seed), SubsetMask::from_members(k, {k}));
}

Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

PureState apply_local_unitaries(const PureState& psi, std::span<const Eigen::MatrixXcd> unitaries) {
  if (unitaries.size() != psi.dims().size()) throw std::invalid_argument("need one unitary per subsystem");
  const auto strides = strides_of(psi.dims());
  std::vector<Complex> cur(psi.coeffs().begin(), psi.coeffs().end());
  for (std::size_t axis = 0; axis < unitaries.size(); ++axis) {
    const auto& u = unitaries[axis];
    const auto n = static_cast<std::size_t>(psi.dims()[axis]);
    if (static_cast<std::size_t>(u.rows()) != n || static_cast<std::size_t>(u.cols()) != n)
      throw std::invalid_argument("unitary size does not match its subsystem");
    const std::size_t inner = strides[axis], block = n * inner;
    std::vector<Complex> next(cur.size(), 0);
    for (std::size_t base = 0; base < cur.size(); base += block)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          kernels::axpy(u(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)),
                        std::span<const Complex>(cur.data() + base + b * inner, inner),
                        std::span<Complex>(next.data() + base + a * inner, inner));
    cur = std::move(next);
  }
  return PureState(psi.dims(), std::move(cur));
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, std::span<const Eigen::MatrixXcd> unitaries) {
  if (unitaries.size() != rho.dims().size()) throw std::invalid_argument("need one unitary per subsystem");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& f : unitaries) {
    Eigen::MatrixXcd next(u.rows() * f.rows(), u.cols() * f.cols());
    for (Eigen::Index r = 0; r < u.rows(); ++r)
      for (Eigen::Index c = 0; c < u.cols(); ++c)
        next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = u(r, c) * f;
    u = std::move(next);
  }
  Eigen::MatrixXcd out = u * rho.to_matrix() * u.adjoint();
  out = (out + out.adjoint().eval()) / 2.0;  // remove rounding asymmetry
  return DensityMatrix::from_matrix(rho.dims(), out);
}

Complex permutation_contraction(const PureState& psi, std::span<const Permutation> perms) {
  return contract(psi.dims(), perms, [&](const auto& rows, const auto& partners) {
    Complex term = 1;
    for (std::size_t j = 0; j < rows.size(); ++j) term *= psi[rows[j]] * std::conj(psi[partners[j]]);
    return term;
  });
}

Complex reduced_contraction(const DensityMatrix& rho, std::span<const Permutation> perms) {
  return contract(rho.dims(), perms, [&](const auto& rows, const auto& partners) {
    Complex term = 1;
    for (std::size_t j = 0; j < rows.size(); ++j) term *= rho(rows[j], partners[j]);
    return term;
  });
}

std::size_t default_rank_samples(std::size_t k, int m) {
  const auto f = static_cast<std::size_t>(factorial(m));
  std::size_t cols = 1;
  for (std::size_t i = 0; i < k; ++i) cols *= f;
  return 3 * cols;
}

std::size_t invariant_space_rank(const std::vector<int>& dims, int m, std::size_t sample_count, std::uint64_t seed) {
  if (m < 0) throw std::invalid_argument("degree must be nonnegative");
  const std::size_t k = dims.size();
  const auto& group = all_permutations(m);

  // Column tuples: every choice of one permutation per system factor.
  std::vector<std::vector<Permutation>> columns{{}};
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<std::vector<Permutation>> next;
    for (const auto& prefix : columns)
      for (const auto& p : group) {
        next.push_back(prefix);
        next.back().push_back(p);
      }
    columns = std::move(next);
  }
  if (sample_count < columns.size())
    throw std::invalid_argument("rank oracle needs at least (m!)^k samples");

  std::vector<int> full = dims;
  full.push_back(static_cast<int>(product_of(dims)));
  const auto env = SubsetMask::from_members(static_cast<int>(full.size()), {static_cast<int>(full.size())});

  std::mt19937_64 rng(seed);
  Eigen::MatrixXcd samples(static_cast<Eigen::Index>(sample_count), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t s = 0; s < sample_count; ++s) {
    const DensityMatrix rho = reduced_state(random_pure_state(full, rng), env);
    for (std::size_t c = 0; c < columns.size(); ++c)
      samples(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(c)) = reduced_contraction(rho, columns[c]);
  }
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXcd>(samples).singularValues();
  if (sv.size() == 0 || sv(0) == 0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-8 * sv(0);
  return rank;
}

}  // namespace luinv
