#pragma once

#include <string>
#include <variant>

namespace wsf {

struct AlphaEtaMu {
    double alpha, eta, mu;
};
struct AlphaLambdaMu {
    double alpha, lambda, mu;
};
struct AlphaKappaMu {
    double alpha, kappa, mu;
};
struct EtaMu {
    double eta, mu;
};
struct LambdaMu {
    double lambda, mu;
};
struct KappaMu {
    double kappa, mu;
};
struct Rician {
    double n_rice;  // K = n²
};

using FadingModel = std::variant<AlphaEtaMu, AlphaLambdaMu, AlphaKappaMu, EtaMu, LambdaMu, KappaMu, Rician>;

std::string model_name(const FadingModel& m);
void validate(const FadingModel& m);

// Linear-scale SNRs.
struct OutageQuery {
    FadingModel model;
    double gamma_bar = 1.0;
    double gamma_th = 0.0;
};

enum class OutageRoute { analytic, oracle };

// SNR density.  Envelope ρ = √(γ/γ̄).
double snr_pdf(const FadingModel& m, double gamma_bar, double gamma);

// analytic: ILHI for the η/λ families, incomplete Toronto for κ-μ and Rice.
// η = 1 (λ = 0) has no ILHI form and is served by the oracle.
// oracle: quadrature of snr_pdf over [0, γ_th].
double outage(const OutageQuery& q, OutageRoute route = OutageRoute::analytic);

// η-μ / λ-μ with 2μ ∈ ℕ through the finite Humbert sum.
double outage_humbert(const OutageQuery& q);

}  // namespace wsf
