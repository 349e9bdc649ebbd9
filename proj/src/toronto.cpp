#include "wsf/toronto.hpp"

#include <cmath>
#include <numbers>

#include "wsf/hypergeometric.hpp"
#include "wsf/kernel.hpp"
#include "wsf/nuttall.hpp"
#include "wsf/oracle.hpp"

namespace wsf {

namespace {

void check_query(const TorontoQuery& q) {
    if (!(q.B >= 0.0)) throw DomainError("toronto: B must be non-negative");
    if (!(q.r >= 0.0)) throw DomainError("toronto: r must be non-negative");
    if (!(q.m > -1.0)) throw DomainError("toronto: requires m > -1");
}

// r -> 0 limit, where only the leading power of the Bessel function survives
double r_zero_limit(const TorontoQuery& q) {
    double e = 2.0 * q.n - q.m + 1.0;
    if (e > 0.0) return 0.0;
    if (e < 0.0) throw RangeError("toronto: unbounded as r -> 0");
    return lower_inc_gamma(0.5 * (q.m + 1.0), q.B * q.B) / std::tgamma(q.n + 1.0);
}

struct SeriesTerms {
    const TorontoQuery& q;
    double lr, y;
    double operator()(int k) const {
        double s = 0.5 * (q.m + 1.0) + k;
        double g = gamma_p(s, y);
        if (g == 0.0) return 0.0;
        double d = q.n + k + 1.0;
        if (d <= 0.0 && is_int(d)) return 0.0;
        int sg;
        double ld = lgamma_r(d, &sg);
        return sg * std::exp((2.0 * (q.n + k) - q.m + 1.0) * lr + std::lgamma(s) + std::log(g) - std::lgamma(k + 1.0) -
                             ld - q.r * q.r);
    }
};

double series_sum(const TorontoQuery& q, int* terms) {
    check_query(q);
    if (q.B == 0.0) return 0.0;
    if (q.r == 0.0) return r_zero_limit(q);
    SeriesTerms t{q, std::log(q.r), q.B * q.B};
    double sum = 0.0;
    double prev = INFINITY;
    double r2 = q.r * q.r;
    for (int k = 0; k < 100000; ++k) {
        double v = t(k);
        sum += v;
        if (k > r2 && (v == 0.0 || (std::fabs(v) <= 1e-17 * std::fabs(sum) && std::fabs(v) < prev))) {
            if (terms) *terms = k + 1;
            return sum;
        }
        prev = std::fabs(v);
    }
    throw ConvergenceError("toronto: series did not converge");
}

double poly_sum(const TorontoQuery& q, int p) {
    check_query(q);
    if (p < 1) throw DomainError("toronto: p must be >= 1");
    if (q.B == 0.0) return 0.0;
    if (q.r == 0.0) return r_zero_limit(q);
    SeriesTerms t{q, std::log(q.r), q.B * q.B};
    double sum = 0.0;
    for (int k = 0; k <= p; ++k) sum += poly_coeff(p, k) * t(k);
    return sum;
}

// int_0^c u^j e^{-u^2} du
double half_moment(int j, double c) {
    if (c == 0.0) return 0.0;
    double g = 0.5 * lower_inc_gamma(0.5 * (j + 1.0), c * c);
    return (c < 0.0 && j % 2 == 0) ? -g : g;
}

bool halfint_admissible(double m, double n, double r) {
    return is_int(m) && is_halfint(n) && n >= -0.5 && m >= 2.0 * n && r > 0.0;
}

double halfint_closed(double m, double n, double r, double B, double* maxmag) {
    if (!is_int(m) || !is_halfint(n) || n < -0.5)
        throw DomainError("toronto halfint: needs integer m and half-integer n >= -1/2");
    if (m < 2.0 * n) throw DomainError("toronto halfint: finite form needs m >= 2n");
    if (!(r > 0.0)) throw DomainError("toronto halfint: r must be positive");
    HalfIntBessel h = halfint_bessel_terms(n);
    int L = static_cast<int>(m - n - 0.5);
    double pre = 2.0 * std::pow(r, n - m + 1.0) / std::sqrt(4.0 * std::numbers::pi * r);
    double sum = 0.0;
    double mx = 0.0;
    for (std::size_t k = 0; k < h.c.size(); ++k) {
        int J = L - static_cast<int>(k);
        double ck = pre * h.c[k] / std::pow(4.0 * r, static_cast<double>(k));
        double sk = (k % 2 == 0) ? 1.0 : -1.0;
        for (int j = 0; j <= J; ++j) {
            double bin = binomial(J, j);
            double p1 = std::pow(r, J - j);
            double u1 = half_moment(j, B - r), u0 = half_moment(j, -r);
            double v1 = half_moment(j, B + r), v0 = half_moment(j, r);
            double w = std::fabs(ck * bin * p1);
            sum += ck * sk * bin * p1 * (u1 - u0) + ck * h.s * bin * (((J - j) % 2 == 0) ? p1 : -p1) * (v1 - v0);
            // magnitudes before the moment differences, which can cancel
            mx = std::max({mx, w * std::fabs(u1), w * std::fabs(u0), w * std::fabs(v1), w * std::fabs(v0)});
        }
    }
    if (maxmag) *maxmag = mx;
    return sum;
}

// T at B = infinity
double complete_value(double m, double n, double r) {
    if (r == 0.0) {
        double e = 2.0 * n - m + 1.0;
        if (e > 0.0) return 0.0;
        if (e < 0.0) throw RangeError("toronto: unbounded as r -> 0");
        return std::tgamma(0.5 * (m + 1.0)) / std::tgamma(n + 1.0);
    }
    double f = kummer_1f1(n + 0.5 * (1.0 - m), n + 1.0, -r * r);
    return std::tgamma(0.5 * (m + 1.0)) * f / (std::tgamma(n + 1.0) * std::pow(r, m - 2.0 * n - 1.0));
}

double nuttall_link(const TorontoQuery& q, bool integer_orders) {
    double m = q.m, n = q.n, r = q.r, B = q.B;
    double a = std::numbers::sqrt2 * r;
    double b = std::numbers::sqrt2 * B;
    double Q = integer_orders ? nuttall_integer(static_cast<int>(m - n), static_cast<int>(n), a, b)
                              : nuttall_eval({m - n, n, a, b}, Method::series, 0, 1e-16).value;
    return complete_value(m, n, r) - std::pow(r, n - m + 1.0) * std::pow(2.0, 0.5 * (n - m + 1.0)) * Q;
}

double kdf_route(const TorontoQuery& q) {
    double m = q.m, n = q.n, r = q.r, B = q.B;
    if (!(m + n > -1.0)) throw DomainError("toronto kdf: requires m + n > -1");
    if (n + 1.0 <= 0.0 && is_int(n + 1.0)) throw DomainError("toronto kdf: n + 1 is a non-positive integer");
    if (B == 0.0) return 0.0;
    if (r == 0.0) return r_zero_limit(q);
    double A = 0.5 * (m + 1.0);
    double x = r * r * B * B;
    double y = -B * B;
    double F;
    try {
        F = kdf_f1110(A, A + 1.0, n + 1.0, x, y);
    } catch (const LossOfSignificance&) {
        F = kdf_f1110_rows(A, A + 1.0, n + 1.0, x, y);
    }
    return 2.0 * std::pow(r, 2.0 * n - m + 1.0) * std::pow(B, m + 1.0) * std::exp(-r * r) * F /
           (std::tgamma(n + 1.0) * (m + 1.0));
}

// Finite form where admissible and numerically clean, else the series.
double rounded_value(double m, double n, double r, double B) {
    if (halfint_admissible(m, n, r)) {
        double mx;
        double v = halfint_closed(m, n, r, B, &mx);
        if (std::fabs(v) >= 1e-4 * mx) return v;
    }
    return series_sum({m, n, r, B}, nullptr);
}

}  // namespace

double toronto_series_partial(const TorontoQuery& q, int terms) {
    check_query(q);
    if (q.B == 0.0) return 0.0;
    if (q.r == 0.0) return r_zero_limit(q);
    SeriesTerms t{q, std::log(q.r), q.B * q.B};
    double sum = 0.0;
    for (int k = 0; k < terms; ++k) sum += t(k);
    return sum;
}

EvalResult toronto_eval(const TorontoQuery& q, Method method, int p) {
    check_query(q);
    EvalResult res;
    res.method = method;
    switch (method) {
        case Method::halfint: {
            double mx;
            res.value = halfint_closed(q.m, q.n, q.r, q.B, &mx);
            res.est_error = 1e-15 * mx;
            break;
        }
        case Method::odd: {
            if (!is_int(q.m) || q.m < 1.0 || !is_int(q.n) || q.n < 0.0)
                throw DomainError("toronto odd: needs positive integer m and non-negative integer n");
            if (!(q.m > 2.0 * q.n) || static_cast<long long>(q.m) % 2 == 0)
                throw DomainError("toronto odd: needs m > 2n with m - 2n odd");
            if (!(q.r > 0.0)) throw DomainError("toronto odd: r must be positive");
            res.value = nuttall_link(q, true);
            res.est_error = 1e-14;
            break;
        }
        case Method::via_nuttall:
            if (!(q.r > 0.0)) throw DomainError("toronto via_nuttall: r must be positive");
            if (!(q.m > -1.0 && q.n + 1.0 > 0.0)) throw DomainError("toronto via_nuttall: needs m > -1, n > -1");
            res.value = nuttall_link(q, false);
            res.est_error = 1e-13;
            break;
        case Method::kdf:
            res.value = kdf_route(q);
            res.est_error = 1e-13 * std::fabs(res.value);
            break;
        case Method::poly:
            res.value = poly_sum(q, p);
            res.terms = p + 1;
            res.est_error = std::fabs(series_sum(q, nullptr) - res.value);
            break;
        case Method::series:
            res.value = series_sum(q, &res.terms);
            res.est_error = 1e-16 * std::fabs(res.value);
            break;
        case Method::oracle:
            res.value = oracle_toronto(q.m, q.n, q.r, q.B);
            res.est_error = 1e-12 * std::fabs(res.value);
            break;
        default:
            throw DomainError(std::string("toronto: unsupported method ") + method_name(method));
    }
    return res;
}

Interval toronto_bounds(const TorontoQuery& q) {
    check_query(q);
    if (!(q.m >= q.n)) throw DomainError("toronto_bounds: requires m >= n");
    if (!(q.n > 0.0 && q.B > 0.0)) throw DomainError("toronto_bounds: requires n, B > 0");
    Interval iv;
    iv.lower = rounded_value(std::floor(q.m), half_ceil(q.n), q.r, q.B);
    iv.upper = rounded_value(std::ceil(q.m), half_floor(q.n), q.r, q.B);
    return iv;
}

double toronto_trunc_bound(const TorontoQuery& q, int p, bool infinite) {
    check_query(q);
    double U = rounded_value(std::ceil(q.m), half_floor(q.n), q.r, q.B);
    double partial = infinite ? toronto_series_partial(q, p) : poly_sum(q, p);
    return U - partial;
}

FlaggedValue toronto_upper_approx(const TorontoQuery& q) {
    check_query(q);
    FlaggedValue f;
    f.value = complete_value(q.m, q.n, q.r);
    double h = 0.5 * q.B;
    f.certified = q.m <= h && q.n <= h && q.r <= h;
    return f;
}

double toronto_marcum_special(double m, double r, double B) {
    if (!(B > 0.0)) throw DomainError("toronto_marcum_special: B must be positive");
    return 1.0 - marcum_q(0.5 * (m + 1.0), std::numbers::sqrt2 * r, std::numbers::sqrt2 * B);
}

}  // namespace wsf
