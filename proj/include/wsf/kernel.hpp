#pragma once

#include <vector>

namespace wsf {

double gamma_fn(double x);
double ln_gamma(double x);
// log|Gamma(x)| and its sign, for arguments that may be negative
double ln_gamma_signed(double x, int* sign);

// Non-normalised incomplete gamma functions.  The upper one accepts a <= 0.
double upper_inc_gamma(double a, double x);
double lower_inc_gamma(double a, double x);
// Regularised forms, a > 0
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double pochhammer(double a, double n);

double gaussian_q(double x);

// I_nu(x), or exp(-x) I_nu(x) when scaled.  nu >= -1, I_{-1} taken as I_1.
double bessel_i(double nu, double x, bool scaled = false);

// Finite expansion of I_N for N = n0 + 1/2 (n0 >= -1):
// I_N(z) = (2 pi z)^{-1/2} sum_k c_k (2z)^{-k} [(-1)^k e^z + s e^{-z}]
struct HalfIntBessel {
    std::vector<double> c;
    double s;
};
HalfIntBessel halfint_bessel_terms(double N);
double bessel_i_halfint(double N, double x, bool scaled = false);

// Generalised Marcum Q, m > 0
double marcum_q(double m, double a, double b);
// Integer order via the first-order function plus a Bessel sum
double marcum_q_int(int k, double a, double b);

double half_ceil(double x);
double half_floor(double x);

// Coefficient Gamma(p+l) p^{1-2l} / (p-l)! of the finite-p polynomial forms
double poly_coeff(int p, int l);

double binomial(int n, int k);

}  // namespace wsf
