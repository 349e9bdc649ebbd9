#pragma once

#include "wsf/common.hpp"

namespace wsf {

struct RiceIeQuery {
    double k = 0.0;
    double x = 0.0;
};

// Ie(k,x) = int_0^x e^{-t} I_0(kt) dt, 0 <= k <= 1.
// Methods: humbert (k < 1), poly (L terms), series, oracle.
EvalResult rice_ie_eval(const RiceIeQuery& q, Method method = Method::series, int L = 20);

double rice_ie_series_partial(const RiceIeQuery& q, int terms);

// Closed-form Gaussian-Q bounds, 0 < k < 1, x > 0
Interval rice_ie_bounds(const RiceIeQuery& q);

// Upper bound minus the partial sum (poly, or plain series when `infinite`)
double rice_ie_trunc_bound(const RiceIeQuery& q, int L, bool infinite = false);

// 1 - e^{-x} I_0(kx) + k int_0^x e^{-t} I_1(kt) dt, integral by quadrature
double rice_ie_by_parts(const RiceIeQuery& q);

}  // namespace wsf
