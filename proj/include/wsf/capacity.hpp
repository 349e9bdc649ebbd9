#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wsf {

struct RicianChannel {
    double n_rice = 0.0;  // K = n²
    double gamma_bar = 1.0;
    double bandwidth_hz = 1.0;
};

struct MisoSimoChannel {
    double K = 1.0;
    double los_power = 1.0;  // mᴴm
    int n_ant = 1;
    double gamma_bar = 1.0;
};

// Eigenvalue-density coefficients for the Rician Wishart model, supplied
// externally.  c is m×m, omega holds the t non-zero non-centralities.
struct MimoCoeffs {
    int m = 1;
    int n = 1;
    int t = 0;
    std::vector<double> omega;
    std::vector<std::vector<double>> c;
    double k_norm = 1.0;
    int d() const { return n - m; }
};

MimoCoeffs parse_mimo_coeffs(const std::string& json_text);
void validate(const MimoCoeffs& c);

struct TifrResult {
    double capacity_per_hz = 0.0;  // bits/s/Hz
    double cutoff_gamma0 = 0.0;
    double outage = 0.0;  // at the threshold the capacity was evaluated with
    double solver_residual = 0.0;
};

// log2(1 + 1/∫_{γ0}^∞ p/γ) · (1 - F(γ_th)) with the Nuttall and Toronto forms.
TifrResult tifr_capacity_rician(const RicianChannel& ch, double gamma0, double gamma_th);

// Root of γ0 - γ̄ Q₁ / (γ̄ + 2(1+n²) Q_{-1,0}) on (0, γ̄].
TifrResult optimal_cutoff_rician(const RicianChannel& ch);

// Post-combining SNR density, noncentral chi-square with 2·n_ant degrees of freedom.
double miso_snr_pdf(const MisoSimoChannel& ch, double gamma);

TifrResult em_tifr_miso_simo(const MisoSimoChannel& ch, double gamma0, double gamma_th);

struct MisoCutoff {
    double gamma0 = 0.0;
    double residual = 0.0;
    bool closed_form_applicable = false;  // inverse-Nuttall route
    double closed_form_gamma0 = 0.0;
    std::string note;
};

// Root of γ0 - (1 - F(γ0)) + γ0 ∫_{γ0}^∞ p/γ.
MisoCutoff optimal_cutoff_miso(const MisoSimoChannel& ch);

struct MimoResult {
    double capacity = 0.0;  // bits/s/Hz over all m eigen-modes
    double outage = 0.0;
    double kappa = 0.0;
    double inv_moment = 0.0;  // ∫_{γ0}^∞ p/γ
};

MimoResult mimo_em_ti(const MimoCoeffs& co, double K, double gamma_bar, double gamma0);
double mimo_eigen_pdf(const MimoCoeffs& co, double K, double gamma_bar, double gamma);

struct MimoCutoff {
    double gamma0 = 0.0;
    double residual = 0.0;
};
MimoCutoff optimal_cutoff_mimo(const MimoCoeffs& co, double K, double gamma_bar);

// m log2(1 + 1/(m ∫_{γ0}^∞ p/γ)) (1 - F(γ_th)) by quadrature of the density.
double tifr_capacity_quadrature(const std::function<double(double)>& pdf, double gamma0, double gamma_th,
                                int modes = 1);

}  // namespace wsf
