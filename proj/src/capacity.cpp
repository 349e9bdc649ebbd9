#include "wsf/capacity.hpp"

#include <boost/math/tools/roots.hpp>
#include "json.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wsf/common.hpp"
#include "wsf/kernel.hpp"
#include "wsf/nuttall.hpp"
#include "wsf/quadrature.hpp"
#include "wsf/toronto.hpp"

namespace wsf {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

double nuttall(double m, double n, double a, double b) {
    return nuttall_eval({m, n, a, b}, Method::series, 0, 1e-16).value;
}

// Root of f on [lo, hi] where f(lo) < 0 < f(hi); hi is grown until the sign
// changes.
template <class F>
double bracket_root(F f, double lo, double hi, const char* who) {
    double flo = f(lo);
    if (!(flo < 0.0)) throw SolverError(std::string(who) + ": residual not negative at the lower end");
    double fhi = f(hi);
    for (int i = 0; fhi <= 0.0; ++i) {
        if (i == 200) throw SolverError(std::string(who) + ": no sign change found");
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        fhi = f(hi);
    }
    std::uintmax_t iters = 300;
    auto tol = [](double a, double b) { return std::fabs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * b; };
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
    return std::fabs(f(r.first)) < std::fabs(f(r.second)) ? r.first : r.second;
}

struct MisoTerms {
    double A, mu, n;
    double inv_moment(double gamma0) const {  // ∫_{γ0}^∞ p/γ
        double y0 = std::sqrt(2.0 * mu * gamma0);
        return 2.0 * mu * nuttall(n - 2.0, n - 1.0, A, y0) / std::pow(A, n - 1.0);
    }
    double survival(double gamma0) const { return marcum_q(n, A, std::sqrt(2.0 * mu * gamma0)); }
};

MisoTerms miso_terms(const MisoSimoChannel& ch) {
    require_positive(ch.K, "K");
    require_positive(ch.los_power, "los_power");
    require_positive(ch.gamma_bar, "gamma_bar");
    if (ch.n_ant < 1) throw DomainError("n_ant must be a positive integer");
    return {std::sqrt(2.0 * ch.K * ch.los_power), (ch.K + 1.0) / ch.gamma_bar, static_cast<double>(ch.n_ant)};
}

double rician_rhs(const RicianChannel& ch, double gamma0) {
    double c = 1.0 + ch.n_rice * ch.n_rice;
    double a = std::numbers::sqrt2 * ch.n_rice;
    double y0 = std::sqrt(2.0 * gamma0 * c / ch.gamma_bar);
    return ch.gamma_bar * marcum_q(1.0, a, y0) / (ch.gamma_bar + 2.0 * c * nuttall(-1.0, 0.0, a, y0));
}

void check_rician(const RicianChannel& ch) {
    if (!(ch.n_rice >= 0.0)) throw DomainError("n must be non-negative");
    require_positive(ch.gamma_bar, "gamma_bar");
    require_positive(ch.bandwidth_hz, "bandwidth");
}

struct MimoSums {
    double inv_moment = 0.0;
    double survival = 0.0;
};

MimoSums mimo_sums(const MimoCoeffs& co, double mu, double gamma0) {
    int m = co.m, t = co.t, d = co.d();
    double x = mu * gamma0;
    double y0 = std::sqrt(2.0 * gamma0 * mu);
    MimoSums s;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m - t; ++j) {
            double c = co.c[i - 1][j - 1];
            s.inv_moment += c * mu * upper_inc_gamma(d + i + j - 2.0, x);
            s.survival += c * upper_inc_gamma(d + i + j - 1.0, x);
        }
        for (int j = m - t + 1; j <= m; ++j) {
            double c = co.c[i - 1][j - 1];
            double w = co.omega[j - (m - t) - 1];
            double a = std::sqrt(2.0 * w);
            double scale = std::exp(w) / std::pow(w, 0.5 * d);
            s.inv_moment += c * mu * scale * nuttall(d + 2.0 * i - 3.0, d, a, y0) / std::pow(2.0, i - 2.0 + 0.5 * d);
            s.survival += c * scale * nuttall(d + 2.0 * i - 1.0, d, a, y0) / std::pow(2.0, i - 1.0 + 0.5 * d);
        }
    }
    double f = co.k_norm / m;
    s.inv_moment *= f;
    s.survival *= f;
    return s;
}

}  // namespace

MimoCoeffs parse_mimo_coeffs(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("coefficients: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("coefficients: expected a JSON object");
    for (const char* key : {"m", "n", "t", "omega", "c", "k_norm"})
        if (!j.contains(key)) throw DomainError(std::string("coefficients: missing field '") + key + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "m" && k != "n" && k != "t" && k != "omega" && k != "c" && k != "k_norm")
            throw DomainError("coefficients: unknown field '" + k + "'");
    }
    MimoCoeffs c;
    try {
        auto integer = [&](const char* key) {
            if (!j[key].is_number_integer()) throw DomainError(std::string("coefficients: '") + key + "' must be an integer");
            return j[key].get<int>();
        };
        c.m = integer("m");
        c.n = integer("n");
        c.t = integer("t");
        if (!j["k_norm"].is_number()) throw DomainError("coefficients: 'k_norm' must be a number");
        c.k_norm = j["k_norm"].get<double>();
        if (!j["omega"].is_array()) throw DomainError("coefficients: 'omega' must be an array");
        c.omega = j["omega"].get<std::vector<double>>();
        if (!j["c"].is_array()) throw DomainError("coefficients: 'c' must be an array of rows");
        c.c = j["c"].get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::type_error& e) {
        throw DomainError(std::string("coefficients: wrong element type: ") + e.what());
    }
    validate(c);
    return c;
}

void validate(const MimoCoeffs& c) {
    if (c.m < 1) throw DomainError("coefficients: m must be >= 1");
    if (c.n < c.m) throw DomainError("coefficients: n must be >= m");
    if (c.t < 0 || c.t > c.m) throw DomainError("coefficients: t must lie in [0, m]");
    if (static_cast<int>(c.omega.size()) != c.t) throw DomainError("coefficients: omega must hold t values");
    for (double w : c.omega)
        if (!(w > 0.0)) throw DomainError("coefficients: omega values must be positive");
    if (static_cast<int>(c.c.size()) != c.m) throw DomainError("coefficients: c must have m rows");
    for (const auto& row : c.c)
        if (static_cast<int>(row.size()) != c.m) throw DomainError("coefficients: each row of c must have m entries");
    if (!std::isfinite(c.k_norm)) throw DomainError("coefficients: k_norm must be finite");
}

TifrResult tifr_capacity_rician(const RicianChannel& ch, double gamma0, double gamma_th) {
    check_rician(ch);
    require_positive(gamma0, "gamma0");
    if (!(gamma_th >= 0.0)) throw DomainError("gamma_th must be non-negative");
    double c = 1.0 + ch.n_rice * ch.n_rice;
    double a = std::numbers::sqrt2 * ch.n_rice;
    double q = nuttall(-1.0, 0.0, a, std::sqrt(2.0 * gamma0 * c / ch.gamma_bar));
    TifrResult r;
    r.cutoff_gamma0 = gamma0;
    r.outage = gamma_th == 0.0 ? 0.0
                               : toronto_eval({1.0, 0.0, ch.n_rice, std::sqrt(c * gamma_th / ch.gamma_bar)},
                                              ch.n_rice > 0.0 ? Method::odd : Method::series)
                                     .value;
    r.capacity_per_hz = std::log2(1.0 + ch.gamma_bar / (2.0 * c * q)) * (1.0 - r.outage);
    return r;
}

TifrResult optimal_cutoff_rician(const RicianChannel& ch) {
    check_rician(ch);
    auto g = [&](double g0) { return g0 - rician_rhs(ch, g0); };
    double g0 = bracket_root(g, 1e-12 * ch.gamma_bar, ch.gamma_bar, "optimal_cutoff_rician");
    double res = std::fabs(g(g0));
    if (res > 1e-8) throw SolverError("optimal_cutoff_rician: residual above 1e-8");
    TifrResult r = tifr_capacity_rician(ch, g0, g0);
    r.solver_residual = res;
    return r;
}

double miso_snr_pdf(const MisoSimoChannel& ch, double gamma) {
    MisoTerms t = miso_terms(ch);
    if (!(gamma > 0.0)) return 0.0;
    double ks = ch.K * ch.los_power;
    double z = 2.0 * std::sqrt(ks * t.mu * gamma);
    return t.mu * std::exp(0.5 * (t.n - 1.0) * std::log(t.mu * gamma / ks) - ks - t.mu * gamma + z) *
           bessel_i(t.n - 1.0, z, true);
}

TifrResult em_tifr_miso_simo(const MisoSimoChannel& ch, double gamma0, double gamma_th) {
    MisoTerms t = miso_terms(ch);
    require_positive(gamma0, "gamma0");
    if (!(gamma_th >= 0.0)) throw DomainError("gamma_th must be non-negative");
    TifrResult r;
    r.cutoff_gamma0 = gamma0;
    if (gamma_th > 0.0) {
        TorontoQuery q{2.0 * t.n - 1.0, t.n - 1.0, std::sqrt(ch.K * ch.los_power), std::sqrt(t.mu * gamma_th)};
        r.outage = toronto_eval(q, Method::odd).value;
    }
    r.capacity_per_hz = std::log2(1.0 + 1.0 / t.inv_moment(gamma0)) * (1.0 - r.outage);
    return r;
}

MisoCutoff optimal_cutoff_miso(const MisoSimoChannel& ch) {
    MisoTerms t = miso_terms(ch);
    auto h = [&](double g0) { return g0 - t.survival(g0) + g0 * t.inv_moment(g0); };
    MisoCutoff c;
    c.gamma0 = bracket_root(h, 1e-12 * ch.gamma_bar, ch.gamma_bar, "optimal_cutoff_miso");
    c.residual = std::fabs(h(c.gamma0));
    if (c.residual > 1e-8) throw SolverError("optimal_cutoff_miso: residual above 1e-8");
    double target = -std::pow(t.A, t.n - 1.0) / t.mu;
    if (target > 0.0) {
        double b = inverse_nuttall_b(t.n - 2.0, t.n - 1.0, t.A, target);
        c.closed_form_applicable = true;
        c.closed_form_gamma0 = b * b / (2.0 * t.mu);
    } else {
        c.note = "inverse-Nuttall target -A^(n-1)/mu_K is negative; closed form inapplicable";
    }
    return c;
}

double mimo_eigen_pdf(const MimoCoeffs& co, double K, double gamma_bar, double gamma) {
    validate(co);
    if (!(gamma > 0.0)) return 0.0;
    double mu = (K + 1.0) / gamma_bar;
    int m = co.m, t = co.t, d = co.d();
    double sum = 0.0;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m - t; ++j) {
            double e = d + i + j - 2.0;
            sum += co.c[i - 1][j - 1] * std::exp(e * std::log(gamma) + (e + 1.0) * std::log(mu) - mu * gamma);
        }
        for (int j = m - t + 1; j <= m; ++j) {
            double w = co.omega[j - (m - t) - 1];
            double z = mu * gamma * w;
            double s = 2.0 * std::sqrt(z);
            // 0F1(d+1; z)/d! = z^{-d/2} I_d(2√z)
            double v = std::exp((d + i) * std::log(mu) + (d + i - 1.0) * std::log(gamma) - mu * gamma + s -
                                0.5 * d * std::log(z)) *
                       bessel_i(d, s, true);
            sum += co.c[i - 1][j - 1] * v;
        }
    }
    return co.k_norm / m * sum;
}

MimoResult mimo_em_ti(const MimoCoeffs& co, double K, double gamma_bar, double gamma0) {
    validate(co);
    if (!(K >= 0.0)) throw DomainError("K must be non-negative");
    require_positive(gamma_bar, "gamma_bar");
    require_positive(gamma0, "gamma0");
    double mu = (K + 1.0) / gamma_bar;
    MimoSums s = mimo_sums(co, mu, gamma0);
    MimoResult r;
    r.inv_moment = s.inv_moment;
    r.kappa = 1.0 / (co.m * s.inv_moment);
    r.outage = 1.0 - s.survival;
    r.capacity = co.m * std::log2(1.0 + r.kappa) * s.survival;
    return r;
}

MimoCutoff optimal_cutoff_mimo(const MimoCoeffs& co, double K, double gamma_bar) {
    validate(co);
    require_positive(gamma_bar, "gamma_bar");
    double mu = (K + 1.0) / gamma_bar;
    auto h = [&](double g0) {
        MimoSums s = mimo_sums(co, mu, g0);
        return g0 - s.survival + g0 * s.inv_moment;
    };
    MimoCutoff c;
    c.gamma0 = bracket_root(h, 1e-12 * gamma_bar, gamma_bar, "optimal_cutoff_mimo");
    c.residual = std::fabs(h(c.gamma0));
    if (c.residual > 1e-8) throw SolverError("optimal_cutoff_mimo: residual above 1e-8");
    return c;
}

double tifr_capacity_quadrature(const std::function<double(double)>& pdf, double gamma0, double gamma_th, int modes) {
    require_positive(gamma0, "gamma0");
    Quadrature q;
    q.abs_tol = 1e-15;
    q.rel_tol = 1e-12;
    q.max_subdivisions = 20000;
    const double inf = std::numeric_limits<double>::infinity();
    // ∫_{γ0}^∞ p/γ dγ with γ = γ0 e^t
    auto f1 = [&](double t) { return pdf(gamma0 * std::exp(t)); };
    double inv = integrate(f1, 0.0, 60.0, q).value + integrate(f1, 60.0, inf, q).value;
    double cdf = 0.0;
    if (gamma_th > 0.0) {
        // ∫_0^{γ_th} p dγ with γ = γ_th e^{-t}
        auto f2 = [&](double t) {
            double g = gamma_th * std::exp(-t);
            return g * pdf(g);
        };
        cdf = integrate(f2, 0.0, 60.0, q).value + integrate(f2, 60.0, inf, q).value;
    }
    return modes * std::log2(1.0 + 1.0 / (modes * inv)) * (1.0 - cdf);
}

}  // namespace wsf
