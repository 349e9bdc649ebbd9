#pragma once

#include "wsf/common.hpp"

namespace wsf {

struct NuttallQuery {
    double m = 0.0;
    double n = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// Q_{m,n}(a,b) = int_b^inf x^m exp(-(x^2+a^2)/2) I_n(a x) dx.
// Methods: kdf, poly (p terms with the finite-p coefficients), series (to tol),
// halfint (finite form, m - n a non-negative integer, n half-integer),
// oracle (quadrature).
EvalResult nuttall_eval(const NuttallQuery& q, Method method = Method::series, int p = 20, double tol = 1e-15);

// Exactly `terms` terms of the Poisson-weighted incomplete-gamma series.
double nuttall_series_partial(const NuttallQuery& q, int terms);

// aⁿ Γ((m+n+1)/2) 1F1((m+n+1)/2; n+1; a²/2) / (Γ(n+1) 2^{(n-m+1)/2} e^{a²/2}),
// which is Q_{m,n}(a,0) and therefore an upper bound for every b >= 0.
double nuttall_upper(const NuttallQuery& q);

// Bound on Q - poly(p) (or Q - partial series when `infinite`), built from
// Q_{⌈m⌉½,⌈n⌉½}(a,b) minus the partial sum.
double nuttall_trunc_bound(const NuttallQuery& q, int p, bool infinite = false);

// Q_{m,n} - [a Q_{m-1,n+1} + b^{m-1} e^{-(a²+b²)/2} I_n(ab) + (m+n-1) Q_{m-2,n}]
// from quadrature values.
double nuttall_recursion_check(int m, int n, double a, double b);

// Integer orders with m - n odd and positive, by downward recursion onto
// a^n Q_{n+1}(a,b).
double nuttall_integer(int m, int n, double a, double b);

// Q_{m,n}(a,b) / aⁿ
EvalResult normalized_nuttall(const NuttallQuery& q, Method method = Method::series, int p = 20);

// b such that Q_{m,n}(a,b) = target, for 0 < target <= Q_{m,n}(a,0).
double inverse_nuttall_b(double m, double n, double a, double target);

}  // namespace wsf
