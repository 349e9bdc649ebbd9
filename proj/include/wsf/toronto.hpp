#pragma once

#include "wsf/common.hpp"

namespace wsf {

struct TorontoQuery {
    double m = 0.0;
    double n = 0.0;
    double r = 0.0;
    double B = 0.0;
};

// T_B(m,n,r) = 2 r^{n-m+1} e^{-r²} int_0^B t^{m-n} e^{-t²} I_n(2rt) dt.
// Methods:
//   halfint      finite form, m integer, n half-integer, m >= 2n, r > 0
//   odd          Nuttall link with integer-order recursion, m odd, n integer, m > 2n
//   kdf          double hypergeometric series, m + n > -1
//   poly         p-term form with the finite-p coefficients
//   series       lower-incomplete-gamma series to tolerance
//   via_nuttall  Nuttall link with the real-order Nuttall series
//   oracle       quadrature
EvalResult toronto_eval(const TorontoQuery& q, Method method = Method::series, int p = 20);

double toronto_series_partial(const TorontoQuery& q, int terms);

// [T_B(⌊m⌋, ⌈n⌉½, r), T_B(⌈m⌉, ⌊n⌋½, r)]
Interval toronto_bounds(const TorontoQuery& q);

// T_B(⌈m⌉, ⌊n⌋½, r) minus the partial sum (poly, or plain series when `infinite`)
double toronto_trunc_bound(const TorontoQuery& q, int p, bool infinite = false);

// Large-B limit, Γ((m+1)/2) 1F1((m+1)/2; n+1; r²) / (r^{m-2n-1} Γ(n+1) e^{r²});
// certified when m, n, r <= B/2.
FlaggedValue toronto_upper_approx(const TorontoQuery& q);

// T_B(m, (m-1)/2, r) = 1 - Q_{(m+1)/2}(r√2, B√2)
double toronto_marcum_special(double m, double r, double B);

}  // namespace wsf
