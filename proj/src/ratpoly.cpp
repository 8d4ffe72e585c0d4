#include "permpoly/ratpoly.hpp"

#include <algorithm>

namespace permpoly {

std::string rational_to_string(const Rational& r) { return r.str(); }

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<size_t>(power) + 1, Rational(0));
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational RationalPolynomial::leading() const {
  if (coeffs_.empty()) return Rational(0);
  return coeffs_.back();
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational out(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out = out * x + *it;
  return out;
}

RationalPolynomial RationalPolynomial::operator+(
    const RationalPolynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-(
    const RationalPolynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator*(
    const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return RationalPolynomial();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(static_cast<size_t>(order_) + 1, Rational(0));
}

PowerSeries PowerSeries::zero(int order) {
  return PowerSeries(order, {});
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  return PowerSeries(order, {c});
}

PowerSeries PowerSeries::geometric_x(int order) {
  std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(1));
  v[0] = 0;
  return PowerSeries(order, std::move(v));
}

PowerSeries PowerSeries::from_polynomial(const RationalPolynomial& p,
                                         int order) {
  std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= std::min(order, p.degree()); ++i)
    v[static_cast<size_t>(i)] = p.coeff(i);
  return PowerSeries(order, std::move(v));
}

Rational PowerSeries::coeff(int i) const {
  if (i < 0 || i > order_)
    throw std::out_of_range("coefficient beyond tracked order");
  return coeffs_[static_cast<size_t>(i)];
}

namespace {
int common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const int n = common_order(*this, o);
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    v[static_cast<size_t>(i)] = coeff(i) + o.coeff(i);
  return PowerSeries(n, std::move(v));
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  const int n = common_order(*this, o);
  std::vector<Rational> v(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    v[static_cast<size_t>(i)] = coeff(i) - o.coeff(i);
  return PowerSeries(n, std::move(v));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const int n = common_order(*this, o);
  std::vector<Rational> v(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      v[static_cast<size_t>(i + j)] +=
          coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
  }
  return PowerSeries(n, std::move(v));
}

PowerSeries PowerSeries::shift_up() const {
  std::vector<Rational> v(static_cast<size_t>(order_) + 1, Rational(0));
  for (int i = 1; i <= order_; ++i)
    v[static_cast<size_t>(i)] = coeffs_[static_cast<size_t>(i - 1)];
  return PowerSeries(order_, std::move(v));
}

PowerSeries compose(const RationalPolynomial& p, const PowerSeries& inner) {
  if (!p.is_zero() && inner.coeff(0) != 0)
    throw std::invalid_argument("compose needs zero constant term");
  PowerSeries out = PowerSeries::zero(inner.order());
  for (int i = p.degree(); i >= 0; --i)
    out = out * inner + PowerSeries::constant(p.coeff(i), inner.order());
  return out;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (inner.coeff(0) != 0)
    throw std::invalid_argument("compose needs zero constant term");
  const int n = common_order(outer, inner);
  PowerSeries out = PowerSeries::zero(n);
  // terms c_i inner^i with i > n have valuation > n and cannot contribute
  for (int i = std::min(outer.order(), n); i >= 0; --i)
    out = out * inner + PowerSeries::constant(outer.coeff(i), n);
  return out;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= (n - (k - i));
    out /= i;
  }
  return out;
}

BigInt catalan(int n) {
  // cat(0) = 1, cat(n+1) = sum cat(i) cat(n-i)
  std::vector<BigInt> c(static_cast<size_t>(n) + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int i = 0; i < m; ++i)
      s += c[static_cast<size_t>(i)] * c[static_cast<size_t>(m - 1 - i)];
    c[static_cast<size_t>(m)] = s;
  }
  return c[static_cast<size_t>(n)];
}

BigInt fibonacci(int n) {
  if (n <= 0) return 0;
  BigInt a = 0, b = 1;
  for (int i = 1; i < n; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return b;
}

}  // namespace permpoly
