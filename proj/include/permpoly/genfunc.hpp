#pragma once

#include <vector>

#include "permpoly/enumerate.hpp"
#include "permpoly/ratpoly.hpp"

namespace permpoly {

/// Polynomials G_r counting the irreducible members of Av(12...r, 231) by
/// length: G_0 = 0, G_1 = 1, and for r >= 2
///   G_r = 1 + y + y * sum_{i=2}^{r-1} (G_i - G_{i-1}) G_{r+1-i}.
RationalPolynomial g_poly(int r);

/// Generating function of Av(12...r, 231) as a truncated series:
/// F_r(x) = G_r(x/(1-x)); coefficient of x^n equals the number of
/// avoiders of length n.
PowerSeries f_series(int r, int order);

struct GLawCheck {
  int r = 0;
  int degree = 0;
  Rational leading;
  bool degree_ok = false;   // degree == 2r-3
  bool leading_ok = false;  // leading == catalan(r-2)
};

struct GLawReport {
  std::vector<GLawCheck> checks;  // r = 2..r_max
  bool all_ok = true;
};

/// Degree and leading-coefficient laws of the G polynomials.
GLawReport check_g_laws(int r_max);

/// Coefficient-wise check of F_r = 1 + x * sum_{i=1}^{r-1}
/// (F_i - F_{i-1}) F_{r+1-i} with F_0 = 0, up to the given order.
bool mv_consistency(int r, int order);

/// The polynomial p with p(n) equal to the number of length-n members of
/// Av(12...r, 231) for all large n, obtained by fitting the series
/// coefficients; checks degree 2r-4 and leading coefficient
/// 1/((r-1)!(r-2)!) exactly.  Throws std::runtime_error if the internal
/// series order is too small to stabilise the fit or a law fails.
RationalPolynomial eventual_poly_of_f(int r);

}  // namespace permpoly
