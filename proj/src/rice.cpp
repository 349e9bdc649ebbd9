#include "wsf/rice.hpp"

#include <cmath>
#include <numbers>

#include "wsf/hypergeometric.hpp"
#include "wsf/kernel.hpp"
#include "wsf/oracle.hpp"
#include "wsf/quadrature.hpp"

namespace wsf {

namespace {

void check_query(const RiceIeQuery& q) {
    if (!(q.k >= 0.0 && q.k <= 1.0)) throw DomainError("rice_ie: k must lie in [0,1]");
    if (!(q.x >= 0.0)) throw DomainError("rice_ie: x must be non-negative");
}

double term(const RiceIeQuery& q, int l) {
    if (q.x == 0.0) return 0.0;
    if (l == 0) return -std::expm1(-q.x);
    if (q.k == 0.0) return 0.0;
    double s = 1.0 + 2.0 * l;
    double g = gamma_p(s, q.x);
    if (g == 0.0) return 0.0;
    return std::exp(2.0 * l * std::log(0.5 * q.k) + std::lgamma(s) + std::log(g) - 2.0 * std::lgamma(l + 1.0));
}

double series_sum(const RiceIeQuery& q, int* terms) {
    double sum = 0.0;
    double prev = INFINITY;
    for (int l = 0; l < 100000; ++l) {
        double v = term(q, l);
        sum += v;
        if (l > 0 && (v == 0.0 || (std::fabs(v) <= 1e-17 * sum && v < prev))) {
            if (terms) *terms = l + 1;
            return sum;
        }
        prev = v;
    }
    throw ConvergenceError("rice_ie: series did not converge");
}

double poly_sum(const RiceIeQuery& q, int L) {
    if (L < 1) throw DomainError("rice_ie: L must be >= 1");
    double sum = 0.0;
    for (int l = 0; l <= L; ++l) sum += poly_coeff(L, l) * term(q, l);
    return sum;
}

// e^{-x} I_0(kx)
double damped_i0(double k, double x) { return std::exp(-(1.0 - k) * x) * bessel_i(0.0, k * x, true); }

double upper_bound(double k, double x) {
    double s2x = std::sqrt(2.0 * x);
    double sk = std::sqrt(k);
    return 1.0 + sk / std::sqrt(2.0 * (1.0 - k)) +
           std::sqrt(2.0 * k) * gaussian_q(s2x * std::sqrt(1.0 + k)) / std::sqrt(1.0 + k) - damped_i0(k, x) -
           sk / std::sqrt(2.0 * (1.0 + k)) - std::sqrt(2.0 * k) * gaussian_q(s2x * std::sqrt(1.0 - k)) / std::sqrt(1.0 - k);
}

}  // namespace

double rice_ie_series_partial(const RiceIeQuery& q, int terms) {
    check_query(q);
    double sum = 0.0;
    for (int l = 0; l < terms; ++l) sum += term(q, l);
    return sum;
}

EvalResult rice_ie_eval(const RiceIeQuery& q, Method method, int L) {
    check_query(q);
    EvalResult r;
    r.method = method;
    switch (method) {
        case Method::humbert: {
            if (!(q.k < 1.0)) throw DomainError("rice_ie humbert: requires k < 1");
            double k = q.k, x = q.x;
            double phi = humbert_phi1(0.5, 1.0, 1.0, 2.0 * k / (1.0 + k), 2.0 * k * x);
            r.value = 1.0 / std::sqrt(1.0 - k * k) - std::exp(-(1.0 + k) * x) * phi / (1.0 + k);
            r.est_error = 1e-15 / std::sqrt(1.0 - k * k);
            break;
        }
        case Method::poly:
            r.value = poly_sum(q, L);
            r.terms = L + 1;
            r.est_error = std::fabs(series_sum(q, nullptr) - r.value);
            break;
        case Method::series:
            r.value = series_sum(q, &r.terms);
            r.est_error = 1e-16 * r.value;
            break;
        case Method::oracle:
            r.value = oracle_rice(q.k, q.x);
            r.est_error = 1e-12 * r.value;
            break;
        default:
            throw DomainError(std::string("rice_ie: unsupported method ") + method_name(method));
    }
    return r;
}

Interval rice_ie_bounds(const RiceIeQuery& q) {
    check_query(q);
    if (!(q.k > 0.0 && q.k < 1.0)) throw DomainError("rice_ie_bounds: requires 0 < k < 1");
    if (!(q.x > 0.0)) throw DomainError("rice_ie_bounds: requires x > 0");
    double k = q.k, x = q.x;
    double s = std::sqrt(1.0 - k * k);
    double a = std::sqrt(x) * std::sqrt(1.0 + s);
    double b = std::sqrt(x) * std::sqrt(1.0 - s);
    Interval iv;
    iv.lower = (2.0 * gaussian_q(b + a) + 2.0 * gaussian_q(b - a) - damped_i0(k, x) - 1.0) / s;
    iv.upper = upper_bound(k, x);
    return iv;
}

double rice_ie_trunc_bound(const RiceIeQuery& q, int L, bool infinite) {
    check_query(q);
    if (!(q.k < 1.0)) throw DomainError("rice_ie_trunc_bound: requires k < 1");
    double partial = infinite ? rice_ie_series_partial(q, L) : poly_sum(q, L);
    return upper_bound(q.k, q.x) - partial;
}

double rice_ie_by_parts(const RiceIeQuery& q) {
    check_query(q);
    double k = q.k;
    auto f = [k](double t) { return std::exp(-(1.0 - k) * t) * bessel_i(1.0, k * t, true); };
    Quadrature quad;
    quad.rel_tol = 1e-13;
    double v = integrate_t<double>(f, 0.0, q.x, quad).value;
    return 1.0 - damped_i0(k, q.x) + k * v;
}

}  // namespace wsf
