#!/usr/bin/env python3
"""Reference values from the defining integrals, at 30 digits.

Writes expected_values.hpp next to this script.  Nothing here calls the
library; every value comes from mpmath quadrature or mpmath's own special
functions.
"""
import os
from mpmath import (mp, mpf, quad, besseli, exp, sqrt, gamma, gammainc, inf,
                    hyp1f1, log, pi, findroot, ncdf, cos, sin)

mp.dps = 30


def nuttall(m, n, a, b):
    m, n, a, b = map(mpf, (m, n, a, b))
    f = lambda x: x**m * exp(-(x * x + a * a) / 2) * besseli(n, a * x)
    return quad(f, [b, b + 2, b + 6, b + 15, inf])


def toronto(m, n, r, B):
    m, n, r, B = map(mpf, (m, n, r, B))
    f = lambda t: t**(m - n) * exp(-t * t) * besseli(n, 2 * r * t)
    return 2 * r**(n - m + 1) * exp(-r * r) * quad(f, [0, B / 2, B])


def rice_ie(k, x):
    k, x = mpf(k), mpf(x)
    return quad(lambda t: exp(-t) * besseli(0, k * t), [0, x / 2, x])


def ilhi(m, n, a, x):
    m, n, a, x = map(mpf, (m, n, a, x))
    return quad(lambda y: y**m * exp(-a * y) * besseli(n, y), [0, x / 2, x])


def marcum(M, a, b):
    return nuttall(M, M - 1, a, b) / mpf(a)**(M - 1) if a != 0 else \
        quad(lambda x: x**(2 * M - 1) * exp(-x * x / 2), [b, inf]) / (2**(M - 1) * gamma(M))


# envelope densities normalized to unit mean power of rho^(alpha/2)
def eta_mu_env(eta, mu, rho):
    eta, mu = mpf(eta), mpf(mu)
    h = (2 + 1 / eta + eta) / 4
    H = abs(1 / eta - eta) / 4
    return (4 * sqrt(pi) * mu**(mu + mpf(1) / 2) * h**mu / (gamma(mu) * H**(mu - mpf(1) / 2))
            * rho**(2 * mu) * exp(-2 * mu * h * rho**2) * besseli(mu - mpf(1) / 2, 2 * mu * H * rho**2))


def kappa_mu_env(k, mu, rho):
    k, mu = mpf(k), mpf(mu)
    return (2 * mu * (1 + k)**((mu + 1) / 2) / (k**((mu - 1) / 2) * exp(mu * k))
            * rho**mu * exp(-mu * (1 + k) * rho**2) * besseli(mu - 1, 2 * mu * sqrt(k * (1 + k)) * rho))


def env_cdf(env, y):
    return quad(env, [0, y / 2, y])


def outage(kind, params, gb, th):
    ratio = mpf(th) / mpf(gb)
    if kind == "rician":
        n = mpf(params[0])
        return 1 - marcum(1, n * sqrt(2), sqrt(2 * (1 + n * n) * ratio))
    alpha = mpf(params[0]) if kind.startswith("alpha") else mpf(2)
    y = ratio**(alpha / 4)
    if "kappa" in kind:
        k, mu = params[-2:]
        return env_cdf(lambda r: kappa_mu_env(k, mu, r), y)
    if "lambda" in kind:
        lam, mu = params[-2:]
        eta = (1 - mpf(lam)) / (1 + mpf(lam))
    else:
        eta, mu = params[-2:]
    return env_cdf(lambda r: eta_mu_env(eta, mu, r), y)


def rician_snr_pdf(n, gb):
    K = mpf(n)**2
    c = (1 + K) / mpf(gb)
    return lambda g: c * exp(-K - c * g) * besseli(0, 2 * sqrt(K * c * g))


def miso_snr_pdf(K, los, n_ant, gb):
    ks = mpf(K) * los
    mu = (mpf(K) + 1) / gb
    return lambda g: mu * (mu * g / ks)**(mpf(n_ant - 1) / 2) * exp(-ks - mu * g) * besseli(n_ant - 1, 2 * sqrt(ks * mu * g))


def tifr(pdf, g0, gth, modes=1):
    g0, gth = mpf(g0), mpf(gth)
    J = quad(lambda g: pdf(g) / g, [g0, g0 + 1, g0 + 10, inf])
    out = quad(pdf, [0, gth]) if gth > 0 else mpf(0)
    return modes * log(1 + 1 / (modes * J), 2) * (1 - out), out


def cutoff(pdf):
    def res(g0):
        J = quad(lambda g: pdf(g) / g, [g0, g0 + 1, g0 + 10, inf])
        F = quad(pdf, [0, g0])
        return g0 * (1 + J) - (1 - F)
    return findroot(res, mpf("0.5"))


def lit(v):
    return mp.nstr(v, 20, min_fixed=-inf, max_fixed=inf) if False else mp.nstr(v, 20)


def main():
    rows = []

    def emit(name, args, value):
        rows.append((name, args, value))
        if os.environ.get("GEN_VERBOSE"):
            print(name, args, mp.nstr(value, 12), flush=True)

    emit("gamma", (7.3,), gamma(mpf("7.3")))
    emit("upper_inc_gamma", (0.0, 1.0), quad(lambda t: exp(-t) / t, [1, inf]))
    emit("lower_inc_gamma", (1.5, 2.0), quad(lambda t: t**mpf("0.5") * exp(-t), [0, 2]))
    emit("gaussian_q", (1.0,), 1 - ncdf(1))
    nu, x = mpf("1.3"), mpf("2.7")
    emit("bessel_i", (1.3, 2.7), quad(lambda t: exp(x * cos(t)) * cos(nu * t), [0, pi]) / pi
         - sin(nu * pi) / pi * quad(lambda t: exp(-x * mp.cosh(t) - nu * t), [0, 2, 5]))
    emit("kummer_1f1", (1.5, 2.0, 0.18), hyp1f1(mpf("1.5"), 2, mpf("0.18")))
    for M, a, b in [(1, 0.6, 0.4), (1.5, 1.2, 2.0), (2.5, 0.3, 1.7), (4, 2.0, 3.0), (0.7, 1.0, 0.5)]:
        emit("marcum_q", (M, a, b), marcum(mpf(M), mpf(a), mpf(b)))

    for q in [(0.7, 0.3, 0.6, 0.4), (1.6, 1.4, 0.6, 0.4), (0.7, 0.3, 0.9, 0.4), (1.2, 1.8, 2.0, 2.0),
              (3.0, 1.0, 1.0, 1.0), (2.5, 0.5, 1.5, 2.5), (0.4, 1.2, 2.2, 0.3), (1.1, 0.8, 1.7, 1.4),
              (2.0, 1.0, 0.5, 0.5), (1.0, 0.0, 3.0, 2.0)]:
        emit("nuttall", q, nuttall(*q))
    for q in [(2.0, 0.5, 2.0, 3.0), (3.0, 1.5, 2.0, 5.0), (1.8, 0.9, 0.7, 3.0), (2.7, 1.3, 1.2, 4.0),
              (2.0, 0.5, 1.0, 1.0), (4.0, 2.0, 1.5, 2.5), (3.0, 1.0, 0.8, 1.5), (2.7, 2.7, 2.7, 4.0),
              (1.5, 0.25, 0.4, 2.0), (5.0, 2.0, 1.1, 3.3)]:
        emit("toronto", q, toronto(*q))
    for q in [(0.4, 0.4), (0.9, 1.2), (0.6, 0.4), (0.3, 4.5), (0.95, 3.0), (0.1, 0.05), (0.75, 2.0)]:
        emit("rice_ie", q, rice_ie(*q))
    for q in [(0.0, 0.0, 1.7, 3.2), (0.5, 0.5, 2.7, 3.2), (-0.5, 0.5, 1.7, 3.2), (1.1, 0.8, 1.4, 1.7),
              (2.2, 0.9, 1.9, 2.1), (1.1, 1.4, 1.2, 1.9), (2.0, 1.0, 1.5, 2.0), (1.0, 2.0, 3.0, 4.0)]:
        emit("ilhi", q, ilhi(*q))

    # model code, parameters (alpha, shape, mu), gamma_bar, gamma_th
    kinds = {"eta_mu": 0, "lambda_mu": 1, "kappa_mu": 2, "alpha_eta_mu": 3, "alpha_lambda_mu": 4,
             "alpha_kappa_mu": 5, "rician": 6}
    for kind, params, gb, th in [("eta_mu", (0.5, 1.0), 1.0, 1.0), ("lambda_mu", (0.3, 1.5), 2.0, 1.0),
                                 ("kappa_mu", (1.0, 1.0), 1.0, 0.5), ("kappa_mu", (2.0, 1.5), 3.0, 0.8),
                                 ("eta_mu", (3.0, 0.75), 1.5, 0.4), ("lambda_mu", (-0.6, 2.0), 1.0, 1.3),
                                 ("alpha_eta_mu", (2.5, 0.5, 1.2), 1.0, 0.7),
                                 ("alpha_lambda_mu", (3.0, -0.4, 0.8), 1.0, 0.5),
                                 ("alpha_kappa_mu", (1.5, 2.0, 1.3), 2.0, 1.0), ("rician", (1.0,), 2.0, 1.0),
                                 ("rician", (0.0,), 1.0, 0.3)]:
        full = params if kind.startswith("alpha") or kind == "rician" else (2.0,) + params
        if kind == "rician":
            full = (0.0, params[0], 0.0)
        emit("outage", (kinds[kind],) + tuple(full) + (gb, th), outage(kind, params, gb, th))

    # alpha-eta-mu SNR density at gamma = gamma_bar = 1 with alpha = 2: rho = 1, dgamma = 2 drho
    emit("aem_snr_pdf", (2.0, 0.5, 1.0, 1.0), eta_mu_env(0.5, 1.0, mpf(1)) / 2)

    for n, gb, g0, gth in [(0.0, 1.0, 0.1, 0.1), (1.0, 2.0, 0.2, 0.2), (2.0, 10.0, 0.6, 0.4)]:
        c, out = tifr(rician_snr_pdf(n, gb), g0, gth)
        emit("tifr_rician", (n, gb, g0, gth), c)
        emit("tifr_rician_outage", (n, gb, g0, gth), out)
    for n, gb in [(0.0, 1.0), (1.0, 5.0), (2.0, 10.0)]:
        emit("cutoff_rician", (n, gb), cutoff(rician_snr_pdf(n, gb)))
    for K, los, na, gb, g0, gth in [(1.0, 1.0, 2, 5.0, 0.3, 0.3), (2.0, 0.5, 4, 1.0, 0.2, 0.5)]:
        c, out = tifr(miso_snr_pdf(K, los, na, gb), g0, gth)
        emit("tifr_miso", (K, los, na, gb, g0, gth), c)
        emit("tifr_miso_outage", (K, los, na, gb, g0, gth), out)
    emit("cutoff_miso", (2.0, 1.0, 3, 5.0), cutoff(miso_snr_pdf(2.0, 1.0, 3, 5.0)))

    here = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(here, "expected_values.hpp"), "w", newline="\n") as f:
        f.write("// Generated by gen_expected.py; do not edit.\n#pragma once\n\n#include <array>\n\n")
        f.write("namespace expected {\n\nstruct Ref {\n    const char* what;\n    std::array<double, 8> args;\n"
                "    double value;\n};\n\n")
        f.write("inline constexpr Ref kRefs[] = {\n")
        for name, args, value in rows:
            a = ", ".join(repr(float(v)) for v in args)
            f.write('    {"%s", {%s}, %s},\n' % (name, a, mp.nstr(value, 20)))
        f.write("};\n\n}  // namespace expected\n")


if __name__ == "__main__":
    main()
