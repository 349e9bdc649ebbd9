#include "wsf/kernel.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "wsf/common.hpp"

namespace wsf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool nonpositive_int(double x) { return x <= 0.0 && is_int(x); }

// Legendre continued fraction; good for x >= 1 and any real a
double upper_gamma_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return std::exp(-x + a * std::log(x)) * h;
    }
    throw ConvergenceError("upper_inc_gamma: continued fraction did not converge");
}

// Gamma(a,x) for a in (-1,1], x small; written so that a -> 0 stays finite.
double upper_gamma_small_x(double a, double x) {
    double lx = std::log(x);
    double head;
    if (a == 0.0) {
        head = -std::numbers::egamma - lx;
    } else {
        head = boost::math::tgamma1pm1(a) / a - std::expm1(a * lx) / a;
    }
    double sum = 0.0;
    double t = 1.0;
    for (int k = 1; k < 1000; ++k) {
        t *= -x / k;
        double term = t / (a + k);
        sum += term;
        if (std::fabs(term) < kEps * std::fabs(sum)) break;
    }
    return head - std::exp(a * lx) * sum;
}

}  // namespace

double gamma_fn(double x) {
    if (nonpositive_int(x)) throw DomainError("gamma: pole at non-positive integer");
    return std::tgamma(x);
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
    int s;
    return lgamma_r(x, &s);
}

double ln_gamma_signed(double x, int* sign) {
    if (nonpositive_int(x)) throw DomainError("ln_gamma: pole at non-positive integer");
    return lgamma_r(x, sign);
}

double upper_inc_gamma(double a, double x) {
    if (!(x >= 0.0)) throw DomainError("upper_inc_gamma: x must be non-negative");
    if (a > 0.0) {
        if (x == 0.0) return std::tgamma(a);
        return boost::math::tgamma(a, x);
    }
    if (x == 0.0) throw DomainError("upper_inc_gamma: divergent for a <= 0 at x = 0");
    if (x >= 1.0) return upper_gamma_cf(a, x);
    if (a > -1.0) return upper_gamma_small_x(a, x);
    // Downward recurrence Gamma(s-1,x) = (Gamma(s,x) - x^{s-1} e^{-x}) / (s-1)
    double n = std::floor(-a);
    double s = a + n;
    double g = upper_gamma_small_x(s, x);
    for (int i = 0; i < static_cast<int>(n); ++i) {
        g = (g - std::exp((s - 1.0) * std::log(x) - x)) / (s - 1.0);
        s -= 1.0;
    }
    return g;
}

double lower_inc_gamma(double a, double x) {
    if (!(a > 0.0)) throw DomainError("lower_inc_gamma: a must be positive");
    if (!(x >= 0.0)) throw DomainError("lower_inc_gamma: x must be non-negative");
    if (x == 0.0) return 0.0;
    return boost::math::tgamma_lower(a, x);
}

double gamma_p(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw DomainError("gamma_p: need a > 0, x >= 0");
    return boost::math::gamma_p(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw DomainError("gamma_q: need a > 0, x >= 0");
    return boost::math::gamma_q(a, x);
}

double pochhammer(double a, double n) {
    if (n == 0.0) return 1.0;
    if (n > 0.0 && is_int(n) && n <= 2000.0) {
        double p = 1.0;
        for (int j = 0; j < static_cast<int>(n); ++j) p *= a + j;
        return p;
    }
    if (nonpositive_int(a) || nonpositive_int(a + n))
        throw DomainError("pochhammer: gamma pole crossing");
    int s1, s2;
    double l1 = lgamma_r(a + n, &s1);
    double l2 = lgamma_r(a, &s2);
    return s1 * s2 * std::exp(l1 - l2);
}

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

HalfIntBessel halfint_bessel_terms(double N) {
    if (!is_halfint(N) || N < -0.5) throw DomainError("halfint_bessel_terms: order must be a half-integer >= -1/2");
    HalfIntBessel h;
    if (N == -0.5) {
        h.c = {1.0};
        h.s = 1.0;
        return h;
    }
    int n0 = static_cast<int>(N - 0.5);
    h.c.resize(n0 + 1);
    double c = 1.0;
    for (int k = 0; k <= n0; ++k) {
        // (n0+k)! / (k! (n0-k)!)
        if (k > 0) c *= static_cast<double>((n0 + k) * (n0 - k + 1)) / k;
        h.c[k] = c;
    }
    h.s = (n0 % 2 == 0) ? -1.0 : 1.0;
    return h;
}

double bessel_i_halfint(double N, double x, bool scaled) {
    if (!(x > 0.0)) throw DomainError("bessel_i_halfint: x must be positive");
    HalfIntBessel h = halfint_bessel_terms(N);
    double e2 = std::exp(-2.0 * x);
    double sum = 0.0;
    double p = 1.0;
    for (std::size_t k = 0; k < h.c.size(); ++k) {
        double sg = (k % 2 == 0) ? 1.0 : -1.0;
        sum += h.c[k] * p * (sg + h.s * e2);
        p /= 2.0 * x;
    }
    double v = sum / std::sqrt(2.0 * std::numbers::pi * x);
    return scaled ? v : v * std::exp(x);
}

double bessel_i(double nu, double x, bool scaled) {
    if (!(x >= 0.0)) throw DomainError("bessel_i: x must be non-negative");
    if (nu < -1.0) throw DomainError("bessel_i: order below -1");
    if (nu == -1.0) nu = 1.0;
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0 || is_int(nu)) return 0.0;
        throw RangeError("bessel_i: unbounded at x = 0 for negative order");
    }
    if (is_halfint(nu) && x > 1.0 + nu * nu) return bessel_i_halfint(nu, x, scaled);
    if (x <= 700.0) {
        double v = boost::math::cyl_bessel_i(nu, x);
        return scaled ? v * std::exp(-x) : v;
    }
    if (!scaled) throw RangeError("bessel_i: overflow, use the scaled form");
    double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        double next = -term * (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * x);
        if (std::fabs(next) > std::fabs(term)) break;
        term = next;
        sum += term;
        if (std::fabs(term) < kEps * std::fabs(sum)) break;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

double marcum_q(double m, double a, double b) {
    if (!(m > 0.0)) throw DomainError("marcum_q: order must be positive");
    if (!(a >= 0.0) || !(b >= 0.0)) throw DomainError("marcum_q: arguments must be non-negative");
    if (b == 0.0) return 1.0;
    double y = 0.5 * b * b;
    if (a == 0.0) return gamma_q(m, y);
    // Poisson mixture of regularised upper gammas
    double lam = 0.5 * a * a;
    double sum = 0.0;
    double llam = std::log(lam);
    for (int l = 0; l < 200000; ++l) {
        double w = std::exp(-lam + l * llam - std::lgamma(l + 1.0));
        double t = w * gamma_q(m + l, y);
        sum += t;
        if (l > lam) {
            double ratio = lam / (l + 1.0);
            double tail = w * ratio / (1.0 - ratio);
            if (tail <= 1e-17 * sum || w < 1e-300) return sum;
        }
    }
    throw ConvergenceError("marcum_q: series did not converge");
}

double marcum_q_int(int k, double a, double b) {
    if (k < 1) throw DomainError("marcum_q_int: order must be >= 1");
    if (!(a > 0.0)) return marcum_q(k, a, b);
    double q = marcum_q(1.0, a, b);
    if (k == 1 || b == 0.0) return q;
    double e = std::exp(-0.5 * (a - b) * (a - b));
    double r = 1.0;
    double s = 0.0;
    for (int i = 1; i < k; ++i) {
        r *= b / a;
        s += r * bessel_i(i, a * b, true);
    }
    return q + e * s;
}

double half_ceil(double x) { return std::ceil(x - 0.5) + 0.5; }
double half_floor(double x) { return std::floor(x + 0.5) - 0.5; }

double poly_coeff(int p, int l) {
    if (l > p) return 0.0;
    double c = 1.0;
    double pp = static_cast<double>(p) * p;
    for (int j = 0; j < l; ++j) c *= 1.0 - static_cast<double>(j) * j / pp;
    return c;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double c = 1.0;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return c;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::kdf: return "kdf";
        case Method::poly: return "poly";
        case Method::series: return "series";
        case Method::oracle: return "oracle";
        case Method::halfint: return "halfint";
        case Method::odd: return "odd";
        case Method::via_nuttall: return "via_nuttall";
        case Method::humbert: return "humbert";
        case Method::mn_integer: return "mn_integer";
        case Method::neg_n: return "neg_n";
        case Method::zero: return "zero";
        case Method::marcum: return "marcum";
    }
    return "?";
}

Method method_from_name(const std::string& s) {
    for (Method m : {Method::kdf, Method::poly, Method::series, Method::oracle, Method::halfint, Method::odd,
                     Method::via_nuttall, Method::humbert, Method::mn_integer, Method::neg_n, Method::zero,
                     Method::marcum})
        if (s == method_name(m)) return m;
    throw DomainError("unknown method '" + s + "'");
}

}  // namespace wsf
