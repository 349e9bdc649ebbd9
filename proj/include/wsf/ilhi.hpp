#pragma once

#include "wsf/common.hpp"

namespace wsf {

struct IlhiQuery {
    double m = 0.0;
    double n = 0.0;
    double a = 0.0;
    double x = 0.0;
};

// Ie_{m,n}(x;a) = int_0^x y^m e^{-ay} I_n(y) dy.
// Methods:
//   halfint     n half-integer, m - n + 1 > 0 (any real a)
//   mn_integer  m + n a non-negative integer, a > 1
//   neg_n       m = -n, a > 1
//   zero        m = n = 0, a > 1
//   poly        L terms with the finite-L coefficients, a > 1
//   series      lower-incomplete-gamma series to tolerance, any real a
//   oracle      quadrature
EvalResult ilhi_eval(const IlhiQuery& q, Method method = Method::series, int L = 20);

double ilhi_series_partial(const IlhiQuery& q, int terms);

// [Ie_{⌊m⌋½,⌊n⌋½}, Ie_{⌈m⌉½,⌈n⌉½}]
Interval ilhi_bounds(const IlhiQuery& q);

// Ie_{⌈m⌉½,⌈n⌉½} minus the partial sum (poly, or plain series when `infinite`)
double ilhi_trunc_bound(const IlhiQuery& q, int L, bool infinite = false);

// (n+1)_m 2F1((m+n+1)/2, (m+n)/2+1; n+1; 1/a²) / (a^{m+n+1} 2ⁿ), the x -> inf
// limit; certified for positive arguments with x, a > m, n.
FlaggedValue ilhi_upper_approx(const IlhiQuery& q);

}  // namespace wsf
