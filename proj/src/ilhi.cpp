#include "wsf/ilhi.hpp"

#include <cmath>
#include <numbers>

#include "wsf/hypergeometric.hpp"
#include "wsf/kernel.hpp"
#include "wsf/oracle.hpp"

namespace wsf {

namespace {

void check_query(const IlhiQuery& q) {
    if (!(q.x >= 0.0)) throw DomainError("ilhi: x must be non-negative");
    if (!(q.m + q.n > -1.0)) throw DomainError("ilhi: requires m + n > -1");
    if (!(q.n >= -1.0)) throw DomainError("ilhi: requires n >= -1");
}

void require_a_above_one(const IlhiQuery& q, const char* who) {
    if (!(q.a > 1.0)) throw DomainError(std::string(who) + ": requires a > 1");
}

// int_0^x y^{s-1} e^{-beta y} dy
double damped_power_integral(double s, double beta, double x) {
    if (beta > 0.0) return lower_inc_gamma(s, beta * x) / std::pow(beta, s);
    return std::pow(x, s) / s * kummer_1f1(s, s + 1.0, -beta * x);
}

double halfint_closed(double m, double n, double a, double x, double* maxmag) {
    if (!is_halfint(n) || n < -0.5) throw DomainError("ilhi halfint: n must be a half-integer >= -1/2");
    HalfIntBessel h = halfint_bessel_terms(n);
    if (!(m - static_cast<double>(h.c.size() - 1) + 0.5 > 0.0))
        throw DomainError("ilhi halfint: requires m - n + 1 > 0");
    double sum = 0.0;
    double mx = 0.0;
    for (std::size_t k = 0; k < h.c.size(); ++k) {
        double ck = h.c[k] / (std::sqrt(2.0 * std::numbers::pi) * std::pow(2.0, static_cast<double>(k)));
        double s = m - k + 0.5;
        double t1 = ck * ((k % 2 == 0) ? 1.0 : -1.0) * damped_power_integral(s, a - 1.0, x);
        double t2 = ck * h.s * damped_power_integral(s, a + 1.0, x);
        sum += t1 + t2;
        mx = std::max({mx, std::fabs(t1), std::fabs(t2)});
    }
    if (maxmag) *maxmag = mx;
    return sum;
}

double term(const IlhiQuery& q, int l) {
    double s = q.m + q.n + 2.0 * l + 1.0;
    double d = q.n + l + 1.0;
    if (d <= 0.0 && is_int(d)) return 0.0;
    int sg;
    double ld = lgamma_r(d, &sg);
    double lint;  // log of int_0^x y^{s-1} e^{-ay} dy
    if (q.a > 0.0) {
        double g = gamma_p(s, q.a * q.x);
        if (g == 0.0) return 0.0;
        lint = std::lgamma(s) + std::log(g) - s * std::log(q.a);
    } else {
        lint = s * std::log(q.x) - std::log(s) + std::log(kummer_1f1(s, s + 1.0, -q.a * q.x));
    }
    return sg * std::exp(lint - std::lgamma(l + 1.0) - ld - (q.n + 2.0 * l) * std::numbers::ln2);
}

void check_series(const IlhiQuery& q) { check_query(q); }

double series_sum(const IlhiQuery& q, int* terms) {
    check_series(q);
    if (q.x == 0.0) return 0.0;
    double sum = 0.0;
    double prev = INFINITY;
    for (int l = 0; l < 100000; ++l) {
        double v = term(q, l);
        sum += v;
        if (l > q.x && (v == 0.0 || (std::fabs(v) <= 1e-17 * std::fabs(sum) && std::fabs(v) < prev))) {
            if (terms) *terms = l + 1;
            return sum;
        }
        prev = std::fabs(v);
    }
    throw ConvergenceError("ilhi: series did not converge");
}

double poly_sum(const IlhiQuery& q, int L) {
    check_series(q);
    require_a_above_one(q, "ilhi poly");
    if (L < 1) throw DomainError("ilhi: L must be >= 1");
    if (q.x == 0.0) return 0.0;
    double sum = 0.0;
    for (int l = 0; l <= L; ++l) sum += poly_coeff(L, l) * term(q, l);
    return sum;
}

double mn_integer(const IlhiQuery& q) {
    double m = q.m, n = q.n, a = q.a, x = q.x;
    double s = m + n;
    if (!is_int(s) || s < 0.0) throw DomainError("ilhi mn_integer: m + n must be a non-negative integer");
    require_a_above_one(q, "ilhi mn_integer");
    if (1.0 + 2.0 * n <= 0.0 && is_int(1.0 + 2.0 * n)) throw DomainError("ilhi mn_integer: 1 + 2n is a pole");
    int N = static_cast<int>(s);
    double gn = std::tgamma(n + 1.0) * std::pow(2.0, n);
    double first = std::tgamma(s + 1.0) / (gn * std::pow(a, s + 1.0)) *
                   gauss_2f1(0.5 * (s + 1.0), 0.5 * s + 1.0, n + 1.0, 1.0 / (a * a));
    double z = 2.0 / (1.0 + a);
    double second = 0.0;
    for (int l = 0; l <= N; ++l) {
        double c = binomial(N, l) * std::tgamma(l + 1.0) * std::pow(x, N - l) * std::exp(-x * (1.0 + a)) /
                   (std::pow(1.0 + a, l + 1.0) * gn);
        second += c * humbert_phi1(n + 0.5, 1.0 + l, 1.0 + 2.0 * n, z, 2.0 * x);
    }
    return first - second;
}

double neg_n(const IlhiQuery& q) {
    double n = q.n, a = q.a, x = q.x;
    if (q.m != -n) throw DomainError("ilhi neg_n: requires m = -n");
    require_a_above_one(q, "ilhi neg_n");
    if (1.0 + 2.0 * n <= 0.0 && is_int(1.0 + 2.0 * n)) throw DomainError("ilhi neg_n: 1 + 2n is a pole");
    double z = 2.0 / (1.0 + a);
    double gn = std::tgamma(n + 1.0) * std::pow(2.0, n) * (1.0 + a);
    return gauss_2f1(n + 0.5, 1.0, 1.0 + 2.0 * n, z) / gn -
           humbert_phi1(n + 0.5, 1.0, 1.0 + 2.0 * n, z, 2.0 * x) * std::exp(-x * (1.0 + a)) / gn;
}

double zero_case(const IlhiQuery& q) {
    if (q.m != 0.0 || q.n != 0.0) throw DomainError("ilhi zero: requires m = n = 0");
    require_a_above_one(q, "ilhi zero");
    double d = std::sqrt((q.a + 1.0) * (q.a - 1.0));
    double b = std::sqrt(q.x) * std::sqrt(q.a + d);
    double c = std::sqrt(q.x) * std::sqrt(q.a - d);
    return (marcum_q(1.0, b, c) - marcum_q(1.0, c, b)) / d;
}

double rounded_value(double m, double n, double a, double x) {
    if (!(m + n > -1.0)) throw DomainError("ilhi bounds: rounded orders give a divergent integral");
    double mx;
    double v = halfint_closed(m, n, a, x, &mx);
    if (std::fabs(v) >= 1e-4 * mx) return v;
    return oracle_ilhi(m, n, a, x);
}

}  // namespace

double ilhi_series_partial(const IlhiQuery& q, int terms) {
    check_series(q);
    if (q.x == 0.0) return 0.0;
    double sum = 0.0;
    for (int l = 0; l < terms; ++l) sum += term(q, l);
    return sum;
}

EvalResult ilhi_eval(const IlhiQuery& q, Method method, int L) {
    check_query(q);
    EvalResult r;
    r.method = method;
    switch (method) {
        case Method::halfint: {
            double mx;
            r.value = halfint_closed(q.m, q.n, q.a, q.x, &mx);
            r.est_error = 1e-15 * mx;
            break;
        }
        case Method::mn_integer:
            r.value = mn_integer(q);
            r.est_error = 1e-13 * std::fabs(r.value);
            break;
        case Method::neg_n:
            r.value = neg_n(q);
            r.est_error = 1e-13 * std::fabs(r.value);
            break;
        case Method::zero:
            r.value = zero_case(q);
            r.est_error = 1e-14;
            break;
        case Method::poly:
            r.value = poly_sum(q, L);
            r.terms = L + 1;
            r.est_error = std::fabs(series_sum(q, nullptr) - r.value);
            break;
        case Method::series:
            r.value = series_sum(q, &r.terms);
            r.est_error = 1e-16 * std::fabs(r.value);
            break;
        case Method::oracle:
            r.value = oracle_ilhi(q.m, q.n, q.a, q.x);
            r.est_error = 1e-12 * std::fabs(r.value);
            break;
        default:
            throw DomainError(std::string("ilhi: unsupported method ") + method_name(method));
    }
    return r;
}

Interval ilhi_bounds(const IlhiQuery& q) {
    check_query(q);
    if (!(q.m >= q.n)) throw DomainError("ilhi_bounds: requires m >= n");
    if (!(q.n > 0.0 && q.a > 0.0 && q.x > 0.0)) throw DomainError("ilhi_bounds: requires positive n, a, x");
    Interval iv;
    iv.lower = rounded_value(half_floor(q.m), half_floor(q.n), q.a, q.x);
    iv.upper = rounded_value(half_ceil(q.m), half_ceil(q.n), q.a, q.x);
    return iv;
}

double ilhi_trunc_bound(const IlhiQuery& q, int L, bool infinite) {
    check_series(q);
    double U = rounded_value(half_ceil(q.m), half_ceil(q.n), q.a, q.x);
    double partial = infinite ? ilhi_series_partial(q, L) : poly_sum(q, L);
    return U - partial;
}

FlaggedValue ilhi_upper_approx(const IlhiQuery& q) {
    double m = q.m, n = q.n, a = q.a;
    if (!(a > 1.0)) throw DomainError("ilhi_upper_approx: requires a > 1");
    if (!(m + n > -1.0)) throw DomainError("ilhi_upper_approx: requires m + n > -1");
    FlaggedValue f;
    f.value = pochhammer(n + 1.0, m) * gauss_2f1(0.5 * (m + n + 1.0), 0.5 * (m + n) + 1.0, n + 1.0, 1.0 / (a * a)) /
              (std::pow(a, m + n + 1.0) * std::pow(2.0, n));
    f.certified = m > 0.0 && n > 0.0 && q.x > 0.0 && q.x > std::max(m, n) && a > std::max(m, n);
    return f;
}

}  // namespace wsf
