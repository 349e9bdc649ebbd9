#include "wsf/nuttall.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "wsf/hypergeometric.hpp"
#include "wsf/kernel.hpp"
#include "wsf/oracle.hpp"

namespace wsf {

namespace {

// l-th term of the infinite series, without the finite-p coefficient.
struct SeriesTerms {
    double lam, y, s0, n, lnC;
    bool zero = false;
    SeriesTerms(const NuttallQuery& q) : lam(0.5 * q.a * q.a), y(0.5 * q.b * q.b), s0(0.5 * (q.m + q.n + 1.0)), n(q.n) {
        if (!(q.a >= 0.0) || !(q.b >= 0.0)) throw DomainError("nuttall: need a, b >= 0");
        if (q.a == 0.0) {
            if (q.n < 0.0) throw DomainError("nuttall: a = 0 with negative n");
            zero = q.n > 0.0;
            lnC = 0.5 * (q.m - q.n - 1.0) * std::numbers::ln2;
        } else {
            lnC = q.n * std::log(q.a) + 0.5 * (q.m - q.n - 1.0) * std::numbers::ln2;
        }
    }
    double operator()(int l) const {
        if (zero) return 0.0;
        if (lam == 0.0 && l > 0) return 0.0;
        double lw = lam == 0.0 ? 0.0 : -lam + l * std::log(lam) - std::lgamma(l + 1.0);
        double s = s0 + l;
        double lg;
        if (s > 0.0) {
            double g = y == 0.0 ? 1.0 : gamma_q(s, y);
            if (g == 0.0) return 0.0;
            lg = std::lgamma(s) + std::log(g);
        } else {
            if (y == 0.0) throw DomainError("nuttall: divergent at b = 0 for m + n <= -1");
            lg = std::log(upper_inc_gamma(s, y));
        }
        double d = n + l + 1.0;
        if (d <= 0.0 && is_int(d)) return 0.0;
        int sg;
        double ld = lgamma_r(d, &sg);
        return sg * std::exp(lnC + lw + lg - ld);
    }
};

double series_sum(const NuttallQuery& q, double tol, int* terms) {
    SeriesTerms t(q);
    double sum = 0.0;
    double prev = INFINITY;
    for (int l = 0; l < 100000; ++l) {
        double v = t(l);
        sum += v;
        if ((v == 0.0 && l > t.lam) || (l > t.lam && std::fabs(v) <= tol * std::fabs(sum) && std::fabs(v) < prev)) {
            if (terms) *terms = l + 1;
            return sum;
        }
        prev = std::fabs(v);
    }
    throw ConvergenceError("nuttall: series did not converge");
}

double poly_sum(const NuttallQuery& q, int p) {
    if (p < 1) throw DomainError("nuttall: p must be >= 1");
    SeriesTerms t(q);
    double sum = 0.0;
    for (int l = 0; l <= p; ++l) sum += poly_coeff(p, l) * t(l);
    return sum;
}

// integral_c^inf t^j e^{-t^2/2} dt
double gauss_moment_tail(int j, double c) {
    double h = 0.5 * (j + 1.0);
    double scale = std::pow(2.0, 0.5 * (j - 1.0));
    if (c >= 0.0) return scale * upper_inc_gamma(h, 0.5 * c * c);
    double low = c == 0.0 ? 0.0 : lower_inc_gamma(h, 0.5 * c * c);
    return scale * (std::tgamma(h) + ((j % 2 == 0) ? low : -low));
}

double halfint_closed(double M, double N, double a, double b, double* maxmag) {
    if (!is_halfint(N) || N < -0.5) throw DomainError("nuttall halfint: n must be a half-integer >= -1/2");
    if (!is_int(M - N) || M < N) throw DomainError("nuttall halfint: m - n must be a non-negative integer");
    if (!(a > 0.0)) throw DomainError("nuttall halfint: a must be positive");
    HalfIntBessel h = halfint_bessel_terms(N);
    double pre = 1.0 / std::sqrt(2.0 * std::numbers::pi * a);
    double sum = 0.0;
    double mx = 0.0;
    for (std::size_t k = 0; k < h.c.size(); ++k) {
        int J = static_cast<int>(M - 0.5) - static_cast<int>(k);
        double ck = pre * h.c[k] / std::pow(2.0 * a, static_cast<double>(k));
        double sk = (k % 2 == 0) ? 1.0 : -1.0;
        for (int j = 0; j <= J; ++j) {
            double bin = binomial(J, j);
            double p1 = std::pow(a, J - j);
            double t1 = ck * sk * bin * p1 * gauss_moment_tail(j, b - a);
            double t2 = ck * h.s * bin * (((J - j) % 2 == 0) ? p1 : -p1) * gauss_moment_tail(j, b + a);
            sum += t1 + t2;
            mx = std::max({mx, std::fabs(t1), std::fabs(t2)});
        }
    }
    if (maxmag) *maxmag = mx;
    return sum;
}

double kdf_route(const NuttallQuery& q) {
    double m = q.m, n = q.n, a = q.a, b = q.b;
    if (!(m + n > -1.0)) throw DomainError("nuttall kdf: requires m + n > -1");
    if (n + 1.0 <= 0.0 && is_int(n + 1.0)) throw DomainError("nuttall kdf: n + 1 is a non-positive integer");
    double G = nuttall_upper(q);
    if (b == 0.0) return G;
    double A = 0.5 * (m + n + 1.0);
    double x = 0.25 * a * a * b * b;
    double y = -0.5 * b * b;
    double F;
    try {
        F = kdf_f1110(A, A + 1.0, n + 1.0, x, y);
    } catch (const LossOfSignificance&) {
        F = kdf_f1110_rows(A, A + 1.0, n + 1.0, x, y);
    }
    double lead = (a == 0.0) ? (n == 0.0 ? 1.0 : 0.0) : std::pow(a, n);
    double second = lead * std::pow(b, m + n + 1.0) * F /
                    (std::tgamma(n + 1.0) * (m + n + 1.0) * std::pow(2.0, n) * std::exp(0.5 * a * a));
    return G - second;
}

}  // namespace

double nuttall_series_partial(const NuttallQuery& q, int terms) {
    SeriesTerms t(q);
    double sum = 0.0;
    for (int l = 0; l < terms; ++l) sum += t(l);
    return sum;
}

EvalResult nuttall_eval(const NuttallQuery& q, Method method, int p, double tol) {
    if (!(q.b >= 0.0)) throw DomainError("nuttall: b must be non-negative");
    EvalResult r;
    r.method = method;
    switch (method) {
        case Method::kdf:
            r.value = kdf_route(q);
            r.est_error = 1e-13 * std::fabs(r.value);
            break;
        case Method::poly: {
            r.value = poly_sum(q, p);
            r.terms = p + 1;
            r.est_error = std::fabs(series_sum(q, 1e-16, nullptr) - r.value);
            break;
        }
        case Method::series:
            r.value = series_sum(q, tol, &r.terms);
            r.est_error = tol * std::fabs(r.value);
            break;
        case Method::halfint: {
            double mx;
            r.value = halfint_closed(q.m, q.n, q.a, q.b, &mx);
            r.est_error = 1e-15 * mx;
            break;
        }
        case Method::oracle:
            r.value = oracle_nuttall(q.m, q.n, q.a, q.b);
            r.est_error = 1e-12 * std::fabs(r.value);
            break;
        default:
            throw DomainError(std::string("nuttall: unsupported method ") + method_name(method));
    }
    return r;
}

double nuttall_upper(const NuttallQuery& q) {
    double m = q.m, n = q.n, a = q.a;
    if (!(a >= 0.0)) throw DomainError("nuttall_upper: a must be non-negative");
    if (!(m + n > -1.0)) throw DomainError("nuttall_upper: requires m + n > -1");
    double A = 0.5 * (m + n + 1.0);
    double lam = 0.5 * a * a;
    double lead = (a == 0.0) ? (n == 0.0 ? 1.0 : 0.0) : std::pow(a, n);
    // e^{-λ} 1F1(A; n+1; λ) = 1F1(n+1-A; n+1; -λ)
    double f = kummer_1f1(n + 1.0 - A, n + 1.0, -lam);
    return lead * std::tgamma(A) * f / (std::tgamma(n + 1.0) * std::pow(2.0, 0.5 * (n - m + 1.0)));
}

double nuttall_trunc_bound(const NuttallQuery& q, int p, bool infinite) {
    double M = half_ceil(q.m);
    double N = half_ceil(q.n);
    double U = -1.0;
    if (M >= N && N >= -0.5 && q.a > 0.0) {
        double mx;
        double v = halfint_closed(M, N, q.a, q.b, &mx);
        if (std::fabs(v) >= 1e-4 * mx) U = v;
    }
    if (U < 0.0) U = series_sum({M, N, q.a, q.b}, 1e-16, nullptr);
    double partial = infinite ? nuttall_series_partial(q, p) : poly_sum(q, p);
    return U - partial;
}

double nuttall_recursion_check(int m, int n, double a, double b) {
    if (m < 2 || n < 1) throw DomainError("nuttall_recursion_check: need m >= 2, n >= 1");
    double lhs = oracle_nuttall(m, n, a, b);
    double bes = std::pow(b, m - 1) * std::exp(-0.5 * (a - b) * (a - b)) * bessel_i(n, a * b, true);
    double rhs = a * oracle_nuttall(m - 1, n + 1, a, b) + bes + (m + n - 1) * oracle_nuttall(m - 2, n, a, b);
    return lhs - rhs;
}

double nuttall_integer(int m, int n, double a, double b) {
    if (n < 0 || m - n < 1 || (m - n) % 2 == 0) throw DomainError("nuttall_integer: need m - n odd and positive");
    std::map<std::pair<int, int>, double> memo;
    double e = std::exp(-0.5 * (a - b) * (a - b));
    auto rec = [&](auto&& self, int M, int N) -> double {
        auto key = std::make_pair(M, N);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        double v;
        if (M == N + 1) {
            v = std::pow(a, N) * marcum_q_int(N + 1, a, b);
        } else {
            v = a * self(self, M - 1, N + 1) + std::pow(b, M - 1) * e * bessel_i(N, a * b, true) +
                (M + N - 1) * self(self, M - 2, N);
        }
        memo[key] = v;
        return v;
    };
    return rec(rec, m, n);
}

EvalResult normalized_nuttall(const NuttallQuery& q, Method method, int p) {
    if (q.n == 0.0) return nuttall_eval(q, method, p);
    if (!(q.a > 0.0)) throw DomainError("normalized_nuttall: a must be positive when n != 0");
    EvalResult r = nuttall_eval(q, method, p);
    double s = std::pow(q.a, q.n);
    r.value /= s;
    r.est_error /= s;
    return r;
}

double inverse_nuttall_b(double m, double n, double a, double target) {
    double top = nuttall_upper({m, n, a, 0.0});
    if (!(target > 0.0) || target > top * (1.0 + 1e-14))
        throw DomainError("inverse_nuttall_b: target must lie in (0, Q(a,0)]");
    if (target >= top) return 0.0;
    auto f = [&](double b) { return series_sum({m, n, a, b}, 1e-16, nullptr) - target; };
    double hi = 1.0;
    while (f(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e4) throw SolverError("inverse_nuttall_b: could not bracket");
    }
    std::uintmax_t iters = 200;
    auto tol = [&](double l, double h) { return std::fabs(h - l) <= 1e-15 * std::max(1.0, h); };
    auto res = boost::math::tools::toms748_solve(f, 0.0, hi, top - target, f(hi), tol, iters);
    double b = 0.5 * (res.first + res.second);
    if (std::fabs(f(b)) > 1e-10 * target) throw SolverError("inverse_nuttall_b: tolerance not met");
    return b;
}

}  // namespace wsf
