#include "wsf/oracle.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <type_traits>

#include "wsf/common.hpp"
#include "wsf/kernel.hpp"
#include "wsf/quadrature.hpp"

namespace wsf {

namespace {

template <class Real>
Quadrature tolerances() {
    Quadrature q;
    if constexpr (std::is_same_v<Real, double>) {
        q.abs_tol = 1e-16;
        q.rel_tol = 1e-12;
        q.max_subdivisions = 20000;
    } else {
        q.abs_tol = 1e-30;
        q.rel_tol = 1e-17;
        q.max_subdivisions = 50000;
    }
    return q;
}

template <class Real>
Real scaled_i(double nu, Real x) {
    if constexpr (std::is_same_v<Real, double>) {
        return bessel_i(nu, x, true);
    } else {
        if (x == 0) return nu == 0.0 ? Real(1) : Real(0);
        if (nu == -1.0) nu = 1.0;
        return boost::math::cyl_bessel_i(static_cast<Real>(nu), x) * std::exp(-x);
    }
}

// x^p at the origin: the map x = s^q flattens it to s^1 when p < 0.
template <class Real, class F>
Real integrate_from_zero(F f, Real hi, double p, const Quadrature& q) {
    if (p >= 0.0) return integrate_t<Real>(f, Real(0), hi, q).value;
    Real e = Real(2) / Real(p + 1.0);
    Real smax = std::pow(hi, 1 / e);
    auto g = [&](Real s) -> Real {
        if (s == 0) return 0;
        Real x = std::pow(s, e);
        return f(x) * e * std::pow(s, e - 1);
    };
    return integrate_t<Real>(g, Real(0), smax, q).value;
}

template <class Real>
Real nuttall_t(double m, double n, double a, double b) {
    if (!(b >= 0.0)) throw DomainError("nuttall oracle: b must be non-negative");
    if (b == 0.0 && !(m + n > -1.0)) throw DomainError("nuttall oracle: divergent at the origin");
    Real A = a;
    auto f = [=](Real x) -> Real {
        if (x == 0) return 0;
        Real bes = scaled_i<Real>(n, A * x);
        if (bes == 0) return 0;
        return std::exp(Real(m) * std::log(x) - (x - A) * (x - A) / 2) * bes;
    };
    auto q = tolerances<Real>();
    Real c = std::max(a, b) + 10.0;
    Real head = 0;
    if (b == 0.0)
        head = integrate_from_zero<Real>(f, c, m + n, q);
    else
        head = integrate_t<Real>(f, Real(b), c, q).value;
    Real tail = integrate_t<Real>(f, c, std::numeric_limits<Real>::infinity(), q).value;
    return head + tail;
}

template <class Real>
Real toronto_t(double m, double n, double r, double B) {
    if (!(B >= 0.0)) throw DomainError("toronto oracle: B must be non-negative");
    if (!(r >= 0.0)) throw DomainError("toronto oracle: r must be non-negative");
    if (!(m > -1.0)) throw DomainError("toronto oracle: need m > -1");
    auto q = tolerances<Real>();
    if (r == 0.0) {
        // small-r limit of r^{n-m+1} I_n(2rt) ~ r^{2n-m+1} t^n / Gamma(n+1)
        double e = 2.0 * n - m + 1.0;
        if (e > 0.0) return 0;
        if (e < 0.0) throw RangeError("toronto oracle: unbounded as r -> 0");
        auto f = [=](Real t) -> Real { return t == 0 ? Real(0) : std::exp(Real(m) * std::log(t) - t * t); };
        return 2 * integrate_from_zero<Real>(f, Real(B), m, q) / std::tgamma(static_cast<Real>(n + 1.0));
    }
    Real R = r;
    auto f = [=](Real t) -> Real {
        if (t == 0) return 0;
        Real bes = scaled_i<Real>(n, 2 * R * t);
        if (bes == 0) return 0;
        return std::exp(Real(m - n) * std::log(t) - (t - R) * (t - R)) * bes;
    };
    Real v = integrate_from_zero<Real>(f, Real(B), m, q);
    return 2 * std::pow(R, Real(n - m + 1.0)) * v;
}

template <class Real>
Real rice_t(double k, double x) {
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("rice oracle: k must lie in [0,1]");
    if (!(x >= 0.0)) throw DomainError("rice oracle: x must be non-negative");
    Real K = k;
    auto f = [=](Real t) -> Real { return std::exp(-(1 - K) * t) * scaled_i<Real>(0.0, K * t); };
    return integrate_t<Real>(f, Real(0), Real(x), tolerances<Real>()).value;
}

template <class Real>
Real ilhi_t(double m, double n, double a, double x) {
    if (!(x >= 0.0)) throw DomainError("ilhi oracle: x must be non-negative");
    if (!(m + n > -1.0)) throw DomainError("ilhi oracle: divergent at the origin");
    auto f = [=](Real y) -> Real {
        if (y == 0) return 0;
        Real bes = scaled_i<Real>(n, y);
        if (bes == 0) return 0;
        return std::exp(Real(m) * std::log(y) - Real(a - 1.0) * y) * bes;
    };
    return integrate_from_zero<Real>(f, Real(x), m + n, tolerances<Real>());
}

std::mutex cache_mutex;
std::map<std::tuple<int, double, double, double, double>, double> cache;

}  // namespace

OracleId oracle_from_name(const std::string& s) {
    if (s == "nuttall") return OracleId::nuttall;
    if (s == "toronto") return OracleId::toronto;
    if (s == "rice_ie" || s == "rice-ie") return OracleId::rice_ie;
    if (s == "rice_ie_trig") return OracleId::rice_ie_trig;
    if (s == "ilhi") return OracleId::ilhi;
    throw DomainError("unknown oracle '" + s + "'");
}

double oracle(OracleId id, double p0, double p1, double p2, double p3) {
    auto key = std::make_tuple(static_cast<int>(id), p0, p1, p2, p3);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    double v = 0.0;
    switch (id) {
        case OracleId::nuttall: v = nuttall_t<double>(p0, p1, p2, p3); break;
        case OracleId::toronto: v = toronto_t<double>(p0, p1, p2, p3); break;
        case OracleId::rice_ie: v = rice_t<double>(p0, p1); break;
        case OracleId::rice_ie_trig: {
            if (!(p0 >= 0.0 && p0 < 1.0)) throw DomainError("rice trig oracle: k must lie in [0,1)");
            double k = p0, x = p1;
            auto f = [=](double th) {
                double d = 1.0 - k * std::cos(th);
                return std::exp(-x * d) / d;
            };
            Quadrature q = tolerances<double>();
            v = 1.0 / std::sqrt(1.0 - k * k) - integrate_t<double>(f, 0.0, std::numbers::pi, q).value / std::numbers::pi;
            break;
        }
        case OracleId::ilhi: v = ilhi_t<double>(p0, p1, p2, p3); break;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, v);
    return v;
}

double oracle_nuttall(double m, double n, double a, double b) { return oracle(OracleId::nuttall, m, n, a, b); }
double oracle_toronto(double m, double n, double r, double B) { return oracle(OracleId::toronto, m, n, r, B); }
double oracle_rice(double k, double x) { return oracle(OracleId::rice_ie, k, x); }
double oracle_rice_trig(double k, double x) { return oracle(OracleId::rice_ie_trig, k, x); }
double oracle_ilhi(double m, double n, double a, double x) { return oracle(OracleId::ilhi, m, n, a, x); }

long double oracle_nuttall_ld(double m, double n, double a, double b) { return nuttall_t<long double>(m, n, a, b); }
long double oracle_toronto_ld(double m, double n, double r, double B) { return toronto_t<long double>(m, n, r, B); }
long double oracle_rice_ld(double k, double x) { return rice_t<long double>(k, x); }
long double oracle_ilhi_ld(double m, double n, double a, double x) { return ilhi_t<long double>(m, n, a, x); }

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi, const Quadrature& q) {
    return integrate_t<double>(f, lo, hi, q);
}

}  // namespace wsf
