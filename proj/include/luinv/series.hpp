#pragma once

#include <vector>

#include "luinv/exact.hpp"

namespace luinv {

/// Formal power series c_0 + c_1 t + ... + c_N t^N, exact modulo t^{N+1}.
/// Binary operations require equal truncation orders.
class PowerSeries {
 public:
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  PowerSeries(int order, std::vector<Rational> coeffs);

  static PowerSeries zero(int order) { return PowerSeries(order, {}); }
  static PowerSeries one(int order) { return PowerSeries(order, {Rational(1)}); }
  /// (1 - t^d)^{-u}, expanded by the generalized binomial theorem; u may be negative.
  static PowerSeries euler_factor(int order, int d, const Integer& u);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const PowerSeries& other);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// Multiplicative inverse; needs a nonzero constant term.
  PowerSeries inverse() const;
  PowerSeries derivative() const;  // order drops by one
  PowerSeries integral() const;    // order grows by one, zero constant term
  /// log of a series with constant term 1.
  PowerSeries log() const;

 private:
  void require_same_order(const PowerSeries& other) const;
  std::vector<Rational> coeffs_;
};

/// Exponents u_1..u_N with s = prod_d (1 - t^d)^{-u_d} modulo t^{N+1}.
struct GeneratorCounts {
  int k = 0;  // subsystem count when derived from a Hilbert series, else 0
  std::vector<Integer> u;  // u[d - 1] = u_d

  int order() const noexcept { return static_cast<int>(u.size()); }
  const Integer& at(int d) const { return u.at(static_cast<std::size_t>(d - 1)); }
};

/// sum_m d_{k,m} t^m truncated at t^order, coefficients from stable_dimension.
PowerSeries hilbert_series(int k, int order);

/// The same series expanded from prod_{i>=1} sum_{a>=0} (i^a a!)^{k-2} t^{ia}.
PowerSeries hilbert_series_product_form(int k, int order);

/// Iterative stripping: u_d is the t^d coefficient of s * prod_{e<d} (1 - t^e)^{u_e}.
/// Throws std::invalid_argument if the constant term is not 1 and
/// InvariantViolation if some u_d is negative or non-integral.
GeneratorCounts euler_exponents(const PowerSeries& s);

/// Same exponents recovered from log s: n [t^n] log s = sum_{d | n} d u_d.
GeneratorCounts euler_exponents_via_log(const PowerSeries& s);

/// prod_{d=1}^{N} (1 - t^d)^{-u_d} truncated at t^order.
PowerSeries euler_product(const std::vector<Integer>& u, int order);

/// u_d(F_{k-1}) read off the Hilbert series of k-partite invariants.
Integer free_generator_count(int k, int d);

}  // namespace luinv
