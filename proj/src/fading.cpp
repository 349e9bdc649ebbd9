#include "wsf/fading.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wsf/common.hpp"
#include "wsf/ilhi.hpp"
#include "wsf/kernel.hpp"
#include "wsf/quadrature.hpp"
#include "wsf/toronto.hpp"

namespace wsf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive");
}

// Every model in the η family reduces to (α, η, μ); λ maps by η = (1-λ)/(1+λ).
struct EtaForm {
    double alpha, eta, mu;
};
struct KappaForm {
    double alpha, kappa, mu;
};

double eta_of_lambda(double lambda) { return (1.0 - lambda) / (1.0 + lambda); }

double alpha_eta_mu_envelope(const EtaForm& f, double rho) {
    if (rho <= 0.0) return 0.0;
    double a = f.alpha, eta = f.eta, mu = f.mu;
    double ra = std::pow(rho, a);
    if (eta == 1.0) {
        // α-μ with 2μ
        double m2 = 2.0 * mu;
        return a * std::exp(m2 * std::log(m2) + (a * m2 - 1.0) * std::log(rho) - m2 * ra - std::lgamma(m2));
    }
    double d = std::fabs(eta - 1.0);
    double z = std::fabs(eta * eta - 1.0) * mu * ra / (2.0 * eta);
    double A = (eta + 1.0) / d;
    double lc = std::log(a) + (mu + 0.5) * std::log(eta + 1.0) + 0.5 * std::log(std::numbers::pi) +
                (mu + 0.5) * std::log(mu) - std::lgamma(mu) - 0.5 * std::log(eta) - (mu - 0.5) * std::log(d);
    double bes = bessel_i(mu - 0.5, z, true);
    if (bes == 0.0) return 0.0;
    return std::exp(lc + (a * (mu + 0.5) - 1.0) * std::log(rho) - (A - 1.0) * z) * bes;
}

double alpha_kappa_mu_envelope(const KappaForm& f, double rho) {
    if (rho <= 0.0) return 0.0;
    double a = f.alpha, k = f.kappa, mu = f.mu;
    double ra = std::pow(rho, a);
    double z = 2.0 * mu * std::sqrt(k * (1.0 + k)) * std::pow(rho, 0.5 * a);
    double bes = bessel_i(mu - 1.0, z, true);
    if (bes == 0.0) return 0.0;
    double lc = std::log(a * mu) + 0.5 * (mu + 1.0) * std::log(1.0 + k) - 0.5 * (mu - 1.0) * std::log(k) - k * mu;
    return std::exp(lc + (0.5 * a * (1.0 + mu) - 1.0) * std::log(rho) - mu * (1.0 + k) * ra + z) * bes;
}

// Leading power c of the CDF near zero, F(γ) ~ γ^c.
double cdf_order(const FadingModel& m) {
    return std::visit(overloaded{[](const AlphaEtaMu& v) { return v.alpha * v.mu; },
                                 [](const AlphaLambdaMu& v) { return v.alpha * v.mu; },
                                 [](const EtaMu& v) { return 2.0 * v.mu; },
                                 [](const LambdaMu& v) { return 2.0 * v.mu; },
                                 [](const AlphaKappaMu& v) { return 0.5 * v.alpha * v.mu; },
                                 [](const KappaMu& v) { return v.mu; }, [](const Rician&) { return 1.0; }},
                      m);
}

// Ie_{μ-½,μ-½}(X; A) by the cleanest available route.
double ilhi_best(double mu, double A, double X) {
    IlhiQuery q{mu - 0.5, mu - 0.5, A, X};
    if (is_halfint(q.n)) {
        EvalResult r = ilhi_eval(q, Method::halfint);
        if (r.est_error <= 1e-13 * std::fabs(r.value)) return r.value;
    }
    return ilhi_eval(q, Method::series).value;
}

double eta_outage(const EtaForm& f, double ratio) {
    double eta = f.eta, mu = f.mu;
    double d = std::fabs(eta - 1.0);
    double A = (eta + 1.0) / d;
    double X = mu * std::fabs(eta * eta - 1.0) / (2.0 * eta) * std::pow(ratio, 0.5 * f.alpha);
    double lc = 0.5 * std::log(std::numbers::pi) + (mu + 0.5) * std::numbers::ln2 + mu * std::log(eta) -
                std::lgamma(mu) - 2.0 * mu * std::log(d);
    return std::exp(lc) * ilhi_best(mu, A, X);
}

// Direct λ form.  For λ > 0 the ILHI argument is negative; the reflection
// y -> -y turns Ie(-X; -1/λ) into (-1)^{2μ} Ie(X; 1/λ), which absorbs the
// (-1)^{2μ} prefactor.
double lambda_outage(double alpha, double lambda, double mu, double ratio) {
    double l = std::fabs(lambda);
    double X = 2.0 * l * mu / (1.0 - lambda * lambda) * std::pow(ratio, 0.5 * alpha);
    double lc = 0.5 * std::log(std::numbers::pi) + mu * std::log1p(-lambda) + mu * std::log1p(lambda) -
                std::lgamma(mu) - (mu - 0.5) * std::numbers::ln2 - 2.0 * mu * std::log(l);
    return std::exp(lc) * ilhi_best(mu, 1.0 / l, X);
}

double kappa_outage(const KappaForm& f, double ratio) {
    double B = std::sqrt(f.mu * (1.0 + f.kappa) * std::pow(ratio, 0.5 * f.alpha));
    TorontoQuery q{2.0 * f.mu - 1.0, f.mu - 1.0, std::sqrt(f.kappa * f.mu), B};
    for (Method m : {Method::halfint, Method::odd}) {
        try {
            EvalResult r = toronto_eval(q, m);
            if (r.est_error <= 1e-13 * std::max(std::fabs(r.value), 1e-3)) return r.value;
        } catch (const DomainError&) {
        }
    }
    return toronto_eval(q, Method::series).value;
}

double oracle_outage(const OutageQuery& q) {
    double c = cdf_order(q.model);
    double gth = q.gamma_th, gb = q.gamma_bar;
    // γ = γ_th e^{-t}: below e^{-t_max} the CDF power law leaves < 1e-18.
    auto f = [&](double t) {
        double g = gth * std::exp(-t);
        return g * snr_pdf(q.model, gb, g);
    };
    double t_max = std::max(0.0, std::log(gth / gb)) + 42.0 / c + 5.0;
    Quadrature qq;
    qq.abs_tol = 1e-14;
    qq.rel_tol = 1e-12;
    qq.max_subdivisions = 20000;
    double head = integrate(f, 0.0, t_max, qq).value;
    double tail = integrate(f, t_max, std::numeric_limits<double>::infinity(), qq).value;
    return head + tail;
}

}  // namespace

std::string model_name(const FadingModel& m) {
    return std::visit(overloaded{[](const AlphaEtaMu&) { return "alpha-eta-mu"; },
                                 [](const AlphaLambdaMu&) { return "alpha-lambda-mu"; },
                                 [](const AlphaKappaMu&) { return "alpha-kappa-mu"; },
                                 [](const EtaMu&) { return "eta-mu"; }, [](const LambdaMu&) { return "lambda-mu"; },
                                 [](const KappaMu&) { return "kappa-mu"; }, [](const Rician&) { return "rician"; }},
                      m);
}

void validate(const FadingModel& m) {
    auto lam = [](double l) {
        if (!(l > -1.0 && l < 1.0)) throw DomainError("lambda must lie in (-1, 1)");
    };
    std::visit(overloaded{[&](const AlphaEtaMu& v) {
                              require_positive(v.alpha, "alpha");
                              require_positive(v.eta, "eta");
                              require_positive(v.mu, "mu");
                          },
                          [&](const AlphaLambdaMu& v) {
                              require_positive(v.alpha, "alpha");
                              lam(v.lambda);
                              require_positive(v.mu, "mu");
                          },
                          [&](const AlphaKappaMu& v) {
                              require_positive(v.alpha, "alpha");
                              require_positive(v.kappa, "kappa");
                              require_positive(v.mu, "mu");
                          },
                          [&](const EtaMu& v) {
                              require_positive(v.eta, "eta");
                              require_positive(v.mu, "mu");
                          },
                          [&](const LambdaMu& v) {
                              lam(v.lambda);
                              require_positive(v.mu, "mu");
                          },
                          [&](const KappaMu& v) {
                              require_positive(v.kappa, "kappa");
                              require_positive(v.mu, "mu");
                          },
                          [&](const Rician& v) {
                              if (!(v.n_rice >= 0.0)) throw DomainError("n must be non-negative");
                          }},
               m);
}

double snr_pdf(const FadingModel& m, double gamma_bar, double gamma) {
    validate(m);
    require_positive(gamma_bar, "gamma_bar");
    if (!(gamma > 0.0)) return 0.0;
    double rho = std::sqrt(gamma / gamma_bar);
    double jac = 1.0 / (2.0 * std::sqrt(gamma * gamma_bar));
    return std::visit(
        overloaded{[&](const AlphaEtaMu& v) { return alpha_eta_mu_envelope({v.alpha, v.eta, v.mu}, rho) * jac; },
                   [&](const AlphaLambdaMu& v) {
                       return alpha_eta_mu_envelope({v.alpha, eta_of_lambda(v.lambda), v.mu}, rho) * jac;
                   },
                   [&](const EtaMu& v) { return alpha_eta_mu_envelope({2.0, v.eta, v.mu}, rho) * jac; },
                   [&](const LambdaMu& v) {
                       return alpha_eta_mu_envelope({2.0, eta_of_lambda(v.lambda), v.mu}, rho) * jac;
                   },
                   [&](const AlphaKappaMu& v) { return alpha_kappa_mu_envelope({v.alpha, v.kappa, v.mu}, rho) * jac; },
                   [&](const KappaMu& v) { return alpha_kappa_mu_envelope({2.0, v.kappa, v.mu}, rho) * jac; },
                   [&](const Rician& v) {
                       double K = v.n_rice * v.n_rice;
                       double c = (1.0 + K) / gamma_bar;
                       double z = 2.0 * v.n_rice * std::sqrt(c * gamma);
                       return c * std::exp(-K - c * gamma + z) * bessel_i(0.0, z, true);
                   }},
        m);
}

double outage(const OutageQuery& q, OutageRoute route) {
    validate(q.model);
    require_positive(q.gamma_bar, "gamma_bar");
    if (!(q.gamma_th >= 0.0)) throw DomainError("gamma_th must be non-negative");
    if (q.gamma_th == 0.0) return 0.0;
    if (route == OutageRoute::oracle) return oracle_outage(q);
    double ratio = q.gamma_th / q.gamma_bar;
    auto via_oracle_if = [&](bool singular, auto f) { return singular ? oracle_outage(q) : f(); };
    return std::visit(
        overloaded{
            [&](const AlphaEtaMu& v) {
                return via_oracle_if(v.eta == 1.0, [&] { return eta_outage({v.alpha, v.eta, v.mu}, ratio); });
            },
            [&](const EtaMu& v) {
                return via_oracle_if(v.eta == 1.0, [&] { return eta_outage({2.0, v.eta, v.mu}, ratio); });
            },
            [&](const AlphaLambdaMu& v) {
                return via_oracle_if(v.lambda == 0.0, [&] { return lambda_outage(v.alpha, v.lambda, v.mu, ratio); });
            },
            [&](const LambdaMu& v) {
                return via_oracle_if(v.lambda == 0.0, [&] { return lambda_outage(2.0, v.lambda, v.mu, ratio); });
            },
            [&](const AlphaKappaMu& v) { return kappa_outage({v.alpha, v.kappa, v.mu}, ratio); },
            [&](const KappaMu& v) { return kappa_outage({2.0, v.kappa, v.mu}, ratio); },
            [&](const Rician& v) {
                double n = v.n_rice;
                return toronto_eval({1.0, 0.0, n, std::sqrt((1.0 + n * n) * ratio)}, n > 0.0 ? Method::odd : Method::series)
                    .value;
            }},
        q.model);
}

double outage_humbert(const OutageQuery& q) {
    validate(q.model);
    require_positive(q.gamma_bar, "gamma_bar");
    double eta, mu;
    if (auto* e = std::get_if<EtaMu>(&q.model)) {
        eta = e->eta;
        mu = e->mu;
    } else if (auto* l = std::get_if<LambdaMu>(&q.model)) {
        eta = eta_of_lambda(l->lambda);
        mu = l->mu;
    } else {
        throw DomainError("outage_humbert: needs an eta-mu or lambda-mu model");
    }
    if (!is_int(2.0 * mu)) throw DomainError("outage_humbert: needs 2 mu to be an integer");
    if (eta == 1.0) throw DomainError("outage_humbert: eta = 1 has no Humbert form");
    if (q.gamma_th == 0.0) return 0.0;
    double d = std::fabs(eta - 1.0);
    double A = (eta + 1.0) / d;
    double X = mu * std::fabs(eta * eta - 1.0) / (2.0 * eta) * q.gamma_th / q.gamma_bar;
    double lc = 0.5 * std::log(std::numbers::pi) + (mu + 0.5) * std::numbers::ln2 + mu * std::log(eta) -
                std::lgamma(mu) - 2.0 * mu * std::log(d);
    return std::exp(lc) * ilhi_eval({mu - 0.5, mu - 0.5, A, X}, Method::mn_integer).value;
}

}  // namespace wsf
