#include "permpoly/genfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permpoly {

namespace {

std::vector<RationalPolynomial> g_table(int r) {
  std::vector<RationalPolynomial> g(static_cast<size_t>(std::max(r, 1)) + 1);
  g[0] = RationalPolynomial();                    // 0
  g[1] = RationalPolynomial::constant(1);         // 1
  const RationalPolynomial one_plus_y(
      std::vector<Rational>{Rational(1), Rational(1)});
  const RationalPolynomial y = RationalPolynomial::monomial(1, 1);
  for (int t = 2; t <= r; ++t) {
    RationalPolynomial sum;
    for (int i = 2; i <= t - 1; ++i)
      sum = sum + (g[static_cast<size_t>(i)] - g[static_cast<size_t>(i - 1)]) *
                      g[static_cast<size_t>(t + 1 - i)];
    g[static_cast<size_t>(t)] = one_plus_y + y * sum;
  }
  return g;
}

}  // namespace

RationalPolynomial g_poly(int r) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  return g_table(r)[static_cast<size_t>(r)];
}

PowerSeries f_series(int r, int order) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  return compose(g_poly(r), PowerSeries::geometric_x(order));
}

GLawReport check_g_laws(int r_max) {
  if (r_max < 2) throw std::invalid_argument("r_max must be >= 2");
  GLawReport report;
  auto g = g_table(r_max);
  for (int r = 2; r <= r_max; ++r) {
    GLawCheck c;
    c.r = r;
    c.degree = g[static_cast<size_t>(r)].degree();
    c.leading = g[static_cast<size_t>(r)].leading();
    c.degree_ok = c.degree == 2 * r - 3;
    c.leading_ok = c.leading == Rational(catalan(r - 2));
    report.all_ok = report.all_ok && c.degree_ok && c.leading_ok;
    report.checks.push_back(c);
  }
  return report;
}

bool mv_consistency(int r, int order) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  std::vector<PowerSeries> f;
  f.push_back(PowerSeries::zero(order));  // F_0 = 0
  for (int i = 1; i <= r; ++i) f.push_back(f_series(i, order));
  PowerSeries rhs = PowerSeries::zero(order);
  for (int i = 1; i <= r - 1; ++i)
    rhs = rhs + (f[static_cast<size_t>(i)] - f[static_cast<size_t>(i - 1)]) *
                    f[static_cast<size_t>(r + 1 - i)];
  rhs = rhs.shift_up() + PowerSeries::constant(1, order);
  return rhs == f[static_cast<size_t>(r)];
}

RationalPolynomial eventual_poly_of_f(int r) {
  if (r < 3) throw std::invalid_argument("r must be >= 3");
  const int order = 4 * r + 6;
  PowerSeries f = f_series(r, order);
  CountSequence seq;
  for (int n = 0; n <= order; ++n) {
    Rational c = f.coeff(n);
    if (denominator(c) != 1)
      throw std::runtime_error("series coefficient is not an integer");
    seq.counts.push_back(numerator(c));
  }
  auto fit = fit_eventual_polynomial(seq);
  if (!fit)
    throw std::runtime_error(
        "series order " + std::to_string(order) +
        " too small to stabilise the fit; increase the order");
  const int want_degree = 2 * r - 4;
  Rational want_leading =
      Rational(1) / Rational(factorial(r - 1) * factorial(r - 2));
  if (fit->poly.degree() != want_degree)
    throw std::runtime_error("fitted degree is not 2r-4");
  if (fit->poly.leading() != want_leading)
    throw std::runtime_error("fitted leading coefficient is not 1/((r-1)!(r-2)!)");
  return fit->poly;
}

}  // namespace permpoly
