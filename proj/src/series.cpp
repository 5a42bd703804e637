#include "luinv/series.hpp"

#include <stdexcept>
#include <string>

#include "luinv/combinatorics.hpp"
#include "luinv/dimensions.hpp"
#include "luinv/errors.hpp"

namespace luinv {

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("power series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::euler_factor(int order, int d, const Integer& u) {
  if (d < 1) throw std::invalid_argument("euler_factor: d must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  // coefficient of t^{dj} is u (u+1) ... (u+j-1) / j!
  Rational binom = 1;
  for (int j = 0; static_cast<long>(d) * j <= order; ++j) {
    if (j > 0) binom = binom * Rational(u + (j - 1)) / j;
    c[static_cast<std::size_t>(d) * j] = binom;
  }
  return PowerSeries(order, std::move(c));
}

void PowerSeries::require_same_order(const PowerSeries& other) const {
  if (other.order() != order()) throw std::invalid_argument("power series truncation orders differ");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& other) {
  require_same_order(other);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::invalid_argument("power series with zero constant term has no inverse");
  const std::size_t n = coeffs_.size();
  std::vector<Rational> inv(n);
  inv[0] = 1 / coeffs_[0];
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += coeffs_[j] * inv[i - j];
    inv[i] = -acc * inv[0];
  }
  return PowerSeries(order(), std::move(inv));
}

PowerSeries PowerSeries::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return PowerSeries(order() > 0 ? order() - 1 : 0, std::move(d));
}

PowerSeries PowerSeries::integral() const {
  std::vector<Rational> c(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return PowerSeries(order() + 1, std::move(c));
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != 1) throw std::invalid_argument("log needs constant term 1");
  if (order() == 0) return zero(0);
  // log s = integral(s' / s); s' is one order shorter, so truncate s to match.
  const PowerSeries head(order() - 1, coeffs_);
  return (derivative() * head.inverse()).integral();
}

namespace {

Integer checked_exponent(const Rational& q, int d) {
  if (!is_integral(q))
    throw InvariantViolation("non-integral exponent u_" + std::to_string(d) + " = " + q.str());
  if (q < 0) throw InvariantViolation("negative exponent u_" + std::to_string(d) + " = " + q.str());
  return to_integer(q);
}

}  // namespace

PowerSeries hilbert_series(int k, int order) {
  std::vector<Rational> c;
  for (int m = 0; m <= order; ++m) c.emplace_back(stable_dimension(k, m));
  return PowerSeries(order, std::move(c));
}

PowerSeries hilbert_series_product_form(int k, int order) {
  if (k < 1) throw std::invalid_argument("number of subsystems must be at least 1");
  PowerSeries product = PowerSeries::one(order);
  for (int i = 1; i <= order; ++i) {
    std::vector<Rational> factor(static_cast<std::size_t>(order) + 1);
    for (int a = 0; i * a <= order; ++a) {
      const Rational z(boost::multiprecision::pow(Integer(i), static_cast<unsigned>(a)) * factorial(a));
      Rational term = 1;
      if (k >= 2) {
        for (int e = 0; e < k - 2; ++e) term *= z;
      } else {
        term = 1 / z;
      }
      factor[static_cast<std::size_t>(i) * a] = term;
    }
    product *= PowerSeries(order, std::move(factor));
  }
  return product;
}

GeneratorCounts euler_exponents(const PowerSeries& s) {
  if (s.coeff(0) != 1) throw std::invalid_argument("euler_exponents: constant term must be 1");
  GeneratorCounts out;
  PowerSeries rest = s;
  for (int d = 1; d <= s.order(); ++d) {
    for (int i = 1; i < d; ++i)
      if (rest.coeff(i) != 0) throw std::logic_error("euler_exponents: stripping left a low-order term");
    Integer u = checked_exponent(rest.coeff(d), d);
    rest *= PowerSeries::euler_factor(s.order(), d, -u);
    out.u.push_back(std::move(u));
  }
  return out;
}

GeneratorCounts euler_exponents_via_log(const PowerSeries& s) {
  const PowerSeries l = s.log();
  GeneratorCounts out;
  for (int n = 1; n <= s.order(); ++n) {
    Rational acc = l.coeff(n) * n;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) acc -= Rational(out.at(d) * d);
    out.u.push_back(checked_exponent(acc / n, n));
  }
  return out;
}

PowerSeries euler_product(const std::vector<Integer>& u, int order) {
  PowerSeries product = PowerSeries::one(order);
  for (std::size_t i = 0; i < u.size() && static_cast<int>(i) + 1 <= order; ++i)
    product *= PowerSeries::euler_factor(order, static_cast<int>(i) + 1, u[i]);
  return product;
}

Integer free_generator_count(int k, int d) {
  if (k < 2) throw std::invalid_argument("free_generator_count: k must be at least 2");
  if (d < 1) throw std::invalid_argument("free_generator_count: d must be at least 1");
  GeneratorCounts counts = euler_exponents(hilbert_series(k, d));
  return counts.at(d);
}

}  // namespace luinv
