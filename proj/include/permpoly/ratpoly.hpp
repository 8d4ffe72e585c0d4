#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace permpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);

/// Polynomial with exact rational coefficients, ascending order, trailing
/// coefficient nonzero unless zero polynomial.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int power);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rational& c) const;

  bool operator==(const RationalPolynomial&) const = default;

private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Truncated power series: exact rational coefficients 0..order.
/// Operations never report coefficients beyond the tracked order.
class PowerSeries {
public:
  PowerSeries(int order, std::vector<Rational> coeffs);
  static PowerSeries zero(int order);
  static PowerSeries constant(const Rational& c, int order);
  /// x/(1-x) = x + x^2 + ... up to the order.
  static PowerSeries geometric_x(int order);
  static PowerSeries from_polynomial(const RationalPolynomial& p, int order);

  int order() const { return order_; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries shift_up() const;  // multiply by x

  bool operator==(const PowerSeries&) const = default;

private:
  int order_ = 0;
  std::vector<Rational> coeffs_;
};

/// Substitute a series with zero constant term into a polynomial.
PowerSeries compose(const RationalPolynomial& p, const PowerSeries& inner);

/// Substitute a series with zero constant term into a truncated series.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

BigInt factorial(int n);
BigInt binomial(const BigInt& n, int k);
BigInt catalan(int n);
BigInt fibonacci(int n);  // F(1) = F(2) = 1

}  // namespace permpoly
