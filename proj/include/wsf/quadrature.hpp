#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "wsf/common.hpp"

namespace wsf {

struct Quadrature {
    double abs_tol = 1e-15;
    double rel_tol = 1e-12;
    int max_subdivisions = 5000;
};

template <class Real>
struct QuadResultT {
    Real value;
    Real err;
};
using QuadResult = QuadResultT<double>;

namespace detail {

template <class Real>
struct Panel {
    Real lo, hi, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

// 7-point Gauss / 15-point Kronrod pair on [lo, hi]; error is the rule difference.
template <class Real, class F>
Panel<Real> gk15(F& f, Real lo, Real hi) {
    using GK = boost::math::quadrature::gauss_kronrod<Real, 15>;
    using G = boost::math::quadrature::gauss<Real, 7>;
    static const auto& xk = GK::abscissa();
    static const auto& wk = GK::weights();
    static const auto& wg = G::weights();
    Real c = (lo + hi) / 2;
    Real h = (hi - lo) / 2;
    Real fc = f(c);
    Real k = fc * wk[0];
    Real g = fc * wg[0];
    for (std::size_t i = 1; i < xk.size(); ++i) {
        Real f1 = f(c - h * xk[i]);
        Real f2 = f(c + h * xk[i]);
        k += (f1 + f2) * wk[i];
        if (i % 2 == 0) g += (f1 + f2) * wg[i / 2];
    }
    return {lo, hi, k * h, std::fabs((k - g) * h)};
}

template <class Real, class F>
QuadResultT<Real> integrate_finite(F& f, Real lo, Real hi, const Quadrature& q) {
    if (hi == lo) return {Real(0), Real(0)};
    std::priority_queue<detail::Panel<Real>> heap;
    auto first = detail::gk15<Real>(f, lo, hi);
    heap.push(first);
    Real value = first.value;
    Real err = first.err;
    for (int n = 0;; ++n) {
        Real target = std::max<Real>(Real(q.abs_tol), Real(q.rel_tol) * std::fabs(value));
        if (err <= target) return {value, err};
        if (!std::isfinite(static_cast<double>(value))) throw RangeError("integrate: non-finite integrand");
        if (n >= q.max_subdivisions)
            throw AccuracyError("integrate: subdivision budget exhausted", static_cast<double>(value),
                                static_cast<double>(err));
        auto p = heap.top();
        heap.pop();
        Real mid = (p.lo + p.hi) / 2;
        auto l = detail::gk15<Real>(f, p.lo, mid);
        auto r = detail::gk15<Real>(f, mid, p.hi);
        value += l.value + r.value - p.value;
        err += l.err + r.err - p.err;
        heap.push(l);
        heap.push(r);
        // re-sum periodically so the running totals do not drift
        if (n % 64 == 63) {
            auto copy = heap;
            value = 0;
            err = 0;
            while (!copy.empty()) {
                value += copy.top().value;
                err += copy.top().err;
                copy.pop();
            }
        }
    }
}

}  // namespace detail

// Adaptive integration on [lo, hi]; hi may be +infinity, in which case the
// range is mapped by t = lo - ln(u), u in (0, 1].
template <class Real, class F>
QuadResultT<Real> integrate_t(F f, Real lo, Real hi, const Quadrature& q = {}) {
    if (std::isinf(hi)) {
        auto g = [&f, lo](Real u) -> Real {
            Real v = f(lo - std::log(u));
            return v == 0 ? Real(0) : v / u;
        };
        return detail::integrate_finite<Real>(g, Real(0), Real(1), q);
    }
    return detail::integrate_finite<Real>(f, lo, hi, q);
}

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi, const Quadrature& q = {});

}  // namespace wsf
