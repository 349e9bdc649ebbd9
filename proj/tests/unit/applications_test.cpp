#include <cmath>
#include <string>

#include "doctest.h"
#include "ref.hpp"
#include "wsf/capacity.hpp"
#include "wsf/fading.hpp"
#include "wsf/identities.hpp"
#include "wsf/kernel.hpp"
#include "wsf/quadrature.hpp"

using namespace wsf;

namespace {

FadingModel model_of(int code, double alpha, double shape, double mu) {
    switch (code) {
        case 0: return EtaMu{shape, mu};
        case 1: return LambdaMu{shape, mu};
        case 2: return KappaMu{shape, mu};
        case 3: return AlphaEtaMu{alpha, shape, mu};
        case 4: return AlphaLambdaMu{alpha, shape, mu};
        case 5: return AlphaKappaMu{alpha, shape, mu};
        default: return Rician{shape};
    }
}

}  // namespace

TEST_CASE("kdf and humbert identities") {
    for (const auto& r : check_kdf_identities(1.0, 1.0, 0.25, 0.25)) {
        CAPTURE(identity_name(r.id));
        CHECK_FALSE(r.refused);
        CHECK(r.residual <= 1e-9);
    }
    for (const auto& r : check_kdf_identities(1.5, 1.5, 36.0, 9.0)) {
        CAPTURE(identity_name(r.id));
        if (!r.refused) CHECK(r.residual <= 1e-7);
    }
    for (const auto& r : check_humbert_identities(1.0, 0.5, 1.0)) {
        CAPTURE(identity_name(r.id));
        CHECK_FALSE(r.refused);
        CHECK(r.residual <= 1e-7);
    }
    for (const auto& r : check_kdf_identities(1.0, 1.0, 0.0, 0.25)) CHECK(r.refused);
}

TEST_CASE("snr densities") {
    CHECK(snr_pdf(Rician{0.0}, 2.0, 0.7) == doctest::Approx(std::exp(-0.35) / 2.0).epsilon(1e-15));
    CHECK(rel_err(snr_pdf(AlphaEtaMu{2.0, 0.5, 1.0}, 1.0, 1.0), ref("aem_snr_pdf", {2.0, 0.5, 1.0, 1.0})) < 1e-13);
    for (FadingModel m : {FadingModel{AlphaEtaMu{2.5, 0.4, 1.3}}, FadingModel{AlphaLambdaMu{1.5, -0.3, 0.8}},
                          FadingModel{AlphaKappaMu{3.0, 1.2, 0.7}}, FadingModel{EtaMu{2.0, 1.5}},
                          FadingModel{LambdaMu{0.6, 0.5}}, FadingModel{KappaMu{4.0, 2.0}}, FadingModel{Rician{1.5}}}) {
        CAPTURE(model_name(m));
        double total = integrate([&](double g) { return snr_pdf(m, 1.0, g); }, 0.0, INFINITY).value;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("outage against frozen density quadrature") {
    for (const auto& r : expected::kRefs) {
        if (std::string(r.what) != "outage") continue;
        FadingModel m = model_of(static_cast<int>(r.args[0]), r.args[1], r.args[2], r.args[3]);
        OutageQuery q{m, r.args[4], r.args[5]};
        CAPTURE(model_name(m));
        CAPTURE(q.gamma_th);
        CHECK(rel_err(outage(q), r.value) < 1e-10);
        CHECK(rel_err(outage(q, OutageRoute::oracle), r.value) < 1e-9);
    }
    CHECK(outage({KappaMu{1.0, 1.0}, 1.0, 0.0}) == 0.0);
    OutageQuery a{AlphaKappaMu{2.0, 1.7, 1.3}, 2.0, 0.9}, k{KappaMu{1.7, 1.3}, 2.0, 0.9};
    CHECK(outage(a) == doctest::Approx(outage(k)).epsilon(1e-14));
    CHECK(outage({KappaMu{1.0, 1.0}, 1.0, 0.5}) ==
          doctest::Approx(1.0 - marcum_q(1.0, std::sqrt(2.0), std::sqrt(2.0))).epsilon(1e-13));
}

TEST_CASE("humbert outage route") {
    OutageQuery q{EtaMu{0.5, 1.0}, 1.0, 1.0};
    CHECK(rel_err(outage_humbert(q), ref("outage", {0, 2.0, 0.5, 1.0, 1.0, 1.0})) < 1e-9);
    CHECK_THROWS_AS(outage_humbert({KappaMu{1.0, 1.0}, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(outage_humbert({EtaMu{0.5, 0.7}, 1.0, 1.0}), DomainError);
}

TEST_CASE("siso tifr capacity") {
    for (auto [n, gb, g0, gth] : {std::tuple{0.0, 1.0, 0.1, 0.1}, {1.0, 2.0, 0.2, 0.2}, {2.0, 10.0, 0.6, 0.4}}) {
        CAPTURE(n);
        TifrResult r = tifr_capacity_rician({n, gb, 1.0}, g0, gth);
        CHECK(rel_err(r.capacity_per_hz, ref("tifr_rician", {n, gb, g0, gth})) < 1e-10);
        CHECK(rel_err(r.outage, ref("tifr_rician_outage", {n, gb, g0, gth})) < 1e-12);
    }
    for (auto [n, gb] : {std::pair{0.0, 1.0}, {1.0, 5.0}, {2.0, 10.0}}) {
        TifrResult c = optimal_cutoff_rician({n, gb, 1.0});
        CHECK(rel_err(c.cutoff_gamma0, ref("cutoff_rician", {n, gb})) < 1e-9);
        CHECK(c.solver_residual <= 1e-8);
        CHECK(c.cutoff_gamma0 > 0.0);
        CHECK(c.cutoff_gamma0 <= 1.0);
    }
}

TEST_CASE("miso tifr capacity") {
    for (auto [K, los, na, gb, g0, gth] : {std::tuple{1.0, 1.0, 2, 5.0, 0.3, 0.3}, {2.0, 0.5, 4, 1.0, 0.2, 0.5}}) {
        TifrResult r = em_tifr_miso_simo({K, los, na, gb}, g0, gth);
        CHECK(rel_err(r.capacity_per_hz, ref("tifr_miso", {K, los, double(na), gb, g0, gth})) < 1e-10);
        CHECK(rel_err(r.outage, ref("tifr_miso_outage", {K, los, double(na), gb, g0, gth})) < 1e-12);
    }
    MisoCutoff c = optimal_cutoff_miso({2.0, 1.0, 3, 5.0});
    CHECK(rel_err(c.gamma0, ref("cutoff_miso", {2.0, 1.0, 3.0, 5.0})) < 1e-9);
    CHECK(c.residual <= 1e-8);
    // a single antenna reduces to the SISO channel with n^2 = K * los_power
    TifrResult one = em_tifr_miso_simo({2.0, 1.0, 1, 4.0}, 0.3, 0.3);
    TifrResult siso = tifr_capacity_rician({std::sqrt(2.0), 4.0, 1.0}, 0.3, 0.3);
    CHECK(one.capacity_per_hz == doctest::Approx(siso.capacity_per_hz).epsilon(1e-8));
}

TEST_CASE("mimo eigen-mode capacity") {
    MimoCoeffs co = parse_mimo_coeffs(R"({"m": 2, "n": 3, "t": 0, "omega": [], "c": [[0.6, 0.4], [0.3, 0.9]], "k_norm": 1.0})");
    co.k_norm = 1.0 / (1.0 - mimo_em_ti(co, 1.0, 5.0, 1e-300).outage);
    MimoResult r = mimo_em_ti(co, 1.0, 5.0, 0.4);
    CHECK(r.outage >= 0.0);
    CHECK(r.outage <= 1.0);
    double F = integrate([&](double g) { return mimo_eigen_pdf(co, 1.0, 5.0, g); }, 0.0, 0.4).value;
    CHECK(r.outage == doctest::Approx(F).epsilon(1e-10));
    double quad = tifr_capacity_quadrature([&](double g) { return mimo_eigen_pdf(co, 1.0, 5.0, g); }, 0.4, 0.4, 2);
    CHECK(r.capacity == doctest::Approx(quad).epsilon(1e-8));
    CHECK(mimo_em_ti(co, 1.0, 5.0, 1e-12).outage < 1e-6);
    CHECK_THROWS_AS(parse_mimo_coeffs(R"({"m": 2})"), DomainError);
    CHECK_THROWS_AS(parse_mimo_coeffs("not json"), DomainError);
}
