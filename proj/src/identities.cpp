#include "wsf/identities.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "wsf/common.hpp"
#include "wsf/hypergeometric.hpp"
#include "wsf/ilhi.hpp"
#include "wsf/kernel.hpp"
#include "wsf/nuttall.hpp"
#include "wsf/toronto.hpp"

namespace wsf {

namespace {

IdentityReport run(IdentityId id, std::vector<double> point, const std::function<double()>& lhs,
                   const std::function<double()>& rhs) {
    IdentityReport r;
    r.id = id;
    r.point = std::move(point);
    try {
        r.lhs = lhs();
        r.rhs = rhs();
        r.residual = std::fabs(r.lhs - r.rhs) / std::max(1.0, std::fabs(r.lhs));
        if (!std::isfinite(r.residual)) throw RangeError("non-finite side");
    } catch (const std::exception& e) {
        r.refused = true;
        r.reason = e.what();
        r.residual = 0.0;
    }
    return r;
}

double kdf_lhs(double a, double b, double x, double y) {
    try {
        return kdf_f1110(a, a + 1.0, b, x, -y);
    } catch (const LossOfSignificance&) {
        return kdf_f1110_rows(a, a + 1.0, b, x, -y);
    }
}

// Finite forms where they apply and keep their digits, else the
// incomplete-gamma series (all terms positive).
double toronto_any(const TorontoQuery& q) {
    for (Method m : {Method::halfint, Method::odd}) {
        try {
            EvalResult r = toronto_eval(q, m);
            if (r.est_error <= 1e-12 * std::fabs(r.value)) return r.value;
        } catch (const DomainError&) {
        }
    }
    return toronto_eval(q, Method::series).value;
}

// Both terms carry about 1e-15 relative error; refuse when the difference
// cannot hold 1e-8.
double guarded_difference(double t1, double t2) {
    double d = t1 - t2;
    if (1e-15 * std::max(std::fabs(t1), std::fabs(t2)) > 1e-8 * std::max(1.0, std::fabs(d)))
        throw LossOfSignificance("difference of nearly equal terms");
    return d;
}

void require_kdf_domain(double a, double b, double x, double y) {
    if (!(x > 0.0 && y > 0.0)) throw DomainError("requires x, y > 0");
    if (!(a > 0.0)) throw DomainError("requires a > 0 for the Toronto order 2a-1 > -1");
    if (!(b > 0.0)) throw DomainError("requires b > 0");
}

}  // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::kdf_toronto: return "kdf_toronto";
        case IdentityId::kdf_nuttall: return "kdf_nuttall";
        case IdentityId::phi1_ilhi: return "phi1_ilhi";
        case IdentityId::phi1_marcum: return "phi1_marcum";
    }
    return "?";
}

std::vector<IdentityReport> check_kdf_identities(double a, double b, double x, double y) {
    std::vector<double> pt{a, b, x, y};
    auto toronto_side = [=] {
        require_kdf_domain(a, b, x, y);
        double T = toronto_any({2.0 * a - 1.0, b - 1.0, std::sqrt(x / y), std::sqrt(y)});
        return a * std::tgamma(b) * T * std::exp(x / y) / (std::pow(x, b - a) * std::pow(y, 2.0 * a - b));
    };
    auto nuttall_side = [=] {
        require_kdf_domain(a, b, x, y);
        double Q = nuttall_eval({2.0 * a - b, b - 1.0, std::sqrt(2.0 * x / y), std::sqrt(2.0 * y)}).value;
        double e = std::exp(x / y);
        double t1 = a * std::tgamma(a) * kummer_1f1(b - a, b, -x / y) * e / std::pow(y, a);
        double t2 = a * std::tgamma(b) * Q * e /
                    (std::pow(y, a - 0.5 * (b - 1.0)) * std::pow(x, 0.5 * (b - 1.0)) * std::pow(2.0, a - 0.5 * (b + 1.0)));
        return guarded_difference(t1, t2);
    };
    auto lhs = [=] {
        require_kdf_domain(a, b, x, y);
        return kdf_lhs(a, b, x, y);
    };
    return {run(IdentityId::kdf_toronto, pt, lhs, toronto_side), run(IdentityId::kdf_nuttall, pt, lhs, nuttall_side)};
}

std::vector<IdentityReport> check_humbert_identities(double a, double x, double y) {
    auto domain = [=] {
        if (!(y > 0.0)) throw DomainError("requires y > 0");
        if (!(x > -1.0 && x < 1.0) || x == 0.0) throw DomainError("requires 0 < |x| < 1");
    };
    auto ilhi_side = [=] {
        domain();
        if (!(a >= -0.5)) throw DomainError("requires a >= -1/2 for the Bessel order");
        double ie = ilhi_eval({0.5 - a, a - 0.5, 2.0 / x - 1.0, 0.5 * y}, Method::series).value;
        double e = std::exp(y / x);
        return guarded_difference(gauss_2f1(a, 1.0, 2.0 * a, x) * e,
                                  std::pow(2.0, a + 0.5) * std::tgamma(a + 0.5) * e / x * ie);
    };
    auto marcum_side = [=] {
        domain();
        double s = std::sqrt(1.0 - x);
        double rb = y / x * (1.0 + s) - 0.5 * y;
        double rc = y / x * (1.0 - s) - 0.5 * y;
        if (rb < 0.0 || rc < 0.0) throw DomainError("negative radicand in the Marcum arguments");
        double b = std::sqrt(rb), c = std::sqrt(rc);
        double e = std::exp(y / x);
        return guarded_difference(e * gauss_2f1(0.5, 1.0, 1.0, x), e * (marcum_q(1.0, b, c) - marcum_q(1.0, c, b)) / s);
    };
    return {run(IdentityId::phi1_ilhi, {a, x, y}, [=] { domain(); return humbert_phi1(a, 1.0, 2.0 * a, x, y); }, ilhi_side),
            run(IdentityId::phi1_marcum, {x, y}, [=] { domain(); return humbert_phi1(0.5, 1.0, 1.0, x, y); }, marcum_side)};
}

std::vector<IdentityReport> identity_suite() {
    std::vector<IdentityReport> out;
    for (double a : {0.75, 1.0, 1.5, 2.0})
        for (double b : {0.5, 1.0, 1.5, 2.0})
            for (double x : {0.25, 1.0, 4.0, 36.0})
                for (double y : {1.0, 4.0, 9.0})
                    for (auto& r : check_kdf_identities(a, b, x, y)) out.push_back(std::move(r));
    for (double x : {-0.5, 0.25, 0.5, 0.75})
        for (double y : {0.5, 1.0, 3.0}) {
            for (double a : {0.5, 1.0, 1.5, 2.5}) out.push_back(check_humbert_identities(a, x, y)[0]);
            out.push_back(check_humbert_identities(0.5, x, y)[1]);
        }
    return out;
}

}  // namespace wsf
