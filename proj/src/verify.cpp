#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"
#include "wsf/capacity.hpp"
#include "wsf/common.hpp"
#include "wsf/fading.hpp"
#include "wsf/identities.hpp"
#include "wsf/ilhi.hpp"
#include "wsf/kernel.hpp"
#include "wsf/nuttall.hpp"
#include "wsf/oracle.hpp"
#include "wsf/report.hpp"
#include "wsf/rice.hpp"
#include "wsf/toronto.hpp"

namespace wsf {

namespace {

constexpr int kMaxListed = 8;
// quadrature noise allowed when a bound is compared with the oracle
constexpr double kBracketSlack = 1e-12;

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

std::string point(std::initializer_list<double> v) {
    std::ostringstream s;
    s.precision(17);
    s << '(';
    bool first = true;
    for (double x : v) {
        if (!first) s << ',';
        s << x;
        first = false;
    }
    s << ')';
    return s.str();
}

struct Tracker {
    PropertyResult r;
    Tracker(std::string group, std::string name, double limit) {
        r.group = std::move(group);
        r.name = std::move(name);
        r.limit = limit;
    }
    // a residual to be held below the limit
    void residual(double v, const std::string& where) {
        ++r.checked;
        if (std::isnan(v)) v = INFINITY;
        r.worst = std::max(r.worst, v);
        if (!(v <= r.limit)) fail(where + " residual " + fmt(v));
    }
    // a yes/no property; `excess` is how far it is violated, reported as worst
    void holds(bool ok, double excess, const std::string& where) {
        ++r.checked;
        if (!ok) {
            r.worst = std::max(r.worst, excess);
            fail(where);
        }
    }
    void fail(const std::string& what) {
        ++r.failed;
        r.pass = false;
        if (static_cast<int>(r.failures.size()) < kMaxListed) r.failures.push_back(what);
    }
    void refuse() { ++r.refused; }
};

// Independent stream per group so a single group reproduces the full run.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t group) {
    std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(group)};
    return std::mt19937_64(s);
}

// uniform on [lo, hi]
double closed(std::mt19937_64& g, double lo, double hi) { return lo + (hi - lo) * std::generate_canonical<double, 53>(g); }
// uniform on (lo, hi]
double open_low(std::mt19937_64& g, double lo, double hi) {
    return hi - (hi - lo) * std::generate_canonical<double, 53>(g);
}

struct Draws {
    std::vector<NuttallQuery> nuttall;
    std::vector<TorontoQuery> toronto;
    std::vector<RiceIeQuery> rice;
    std::vector<IlhiQuery> ilhi;
};

Draws make_draws(const VerifyOptions& o) {
    Draws d;
    auto g1 = stream(o.seed, 1), g2 = stream(o.seed, 2), g3 = stream(o.seed, 3), g4 = stream(o.seed, 4);
    for (int i = 0; i < o.draws; ++i) {
        double m = closed(g1, 0.2, 2.5), n = closed(g1, 0.2, 2.5), a = open_low(g1, 0.0, 2.5), b = closed(g1, 0.0, 2.5);
        d.nuttall.push_back({m, n, a, b});
    }
    for (int i = 0; i < o.draws; ++i) {
        double m = closed(g2, 0.5, 4.0);
        double n = closed(g2, 0.25, std::max(0.25, m - 0.25));
        double r = open_low(g2, 0.0, 2.0), B = open_low(g2, 0.0, 5.0);
        d.toronto.push_back({m, n, r, B});
    }
    for (int i = 0; i < o.draws; ++i) {
        double k = closed(g3, 0.05, 0.95), x = open_low(g3, 0.0, 5.0);
        d.rice.push_back({k, x});
    }
    for (int i = 0; i < o.draws; ++i) {
        double m = closed(g4, 0.5, 3.0);
        double n = closed(g4, 0.25, m);
        double a = open_low(g4, 1.2, 3.0), x = open_low(g4, 0.5, 5.0);
        d.ilhi.push_back({m, n, a, x});
    }
    return d;
}

// Each analytic route against the oracle.  Domain and loss-of-significance
// refusals are allowed but count against the analytic fraction.
template <class Q>
void route_agreement(std::vector<PropertyResult>& out, const std::string& name, const std::vector<Q>& draws,
                     const std::vector<std::pair<std::string, std::function<double(const Q&)>>>& routes,
                     const std::function<double(const Q&)>& oracle_fn, const std::function<std::string(const Q&)>& label,
                     double tol) {
    Tracker t("oracle", name, tol);
    int analytic = 0;
    for (const auto& q : draws) {
        double o;
        try {
            o = oracle_fn(q);
        } catch (const std::exception& e) {
            t.fail(label(q) + " oracle: " + e.what());
            continue;
        }
        bool all = true;
        for (const auto& [rname, fn] : routes) {
            try {
                t.residual(std::fabs(fn(q) - o), label(q) + " " + rname);
            } catch (const DomainError&) {
                t.refuse();
                all = false;
            } catch (const LossOfSignificance&) {
                t.refuse();
                all = false;
            } catch (const std::exception& e) {
                t.fail(label(q) + " " + rname + ": " + e.what());
                all = false;
            }
        }
        if (all) ++analytic;
    }
    double frac = draws.empty() ? 1.0 : static_cast<double>(analytic) / draws.size();
    t.r.detail = "analytic fraction " + fmt(frac);
    if (frac < 0.9) t.fail("analytic fraction below 0.9");
    out.push_back(t.r);
}

std::string lab(const NuttallQuery& q) { return "Q" + point({q.m, q.n, q.a, q.b}); }
std::string lab(const TorontoQuery& q) { return "T" + point({q.m, q.n, q.r, q.B}); }
std::string lab(const RiceIeQuery& q) { return "Ie" + point({q.k, q.x}); }
std::string lab(const IlhiQuery& q) { return "Ie" + point({q.m, q.n, q.a, q.x}); }

void group_oracle(std::vector<PropertyResult>& out, const Draws& d, double tol) {
    using NF = std::function<double(const NuttallQuery&)>;
    route_agreement<NuttallQuery>(
        out, "nuttall routes vs oracle", d.nuttall,
        {{"kdf", NF([](const NuttallQuery& q) { return nuttall_eval(q, Method::kdf).value; })},
         {"series", NF([](const NuttallQuery& q) { return nuttall_eval(q, Method::series, 0, 1e-12).value; })}},
        [](const NuttallQuery& q) { return oracle_nuttall(q.m, q.n, q.a, q.b); },
        [](const NuttallQuery& q) { return lab(q); }, tol);
    using TF = std::function<double(const TorontoQuery&)>;
    route_agreement<TorontoQuery>(
        out, "toronto routes vs oracle", d.toronto,
        {{"kdf", TF([](const TorontoQuery& q) { return toronto_eval(q, Method::kdf).value; })},
         {"series", TF([](const TorontoQuery& q) { return toronto_eval(q, Method::series).value; })},
         {"via_nuttall", TF([](const TorontoQuery& q) { return toronto_eval(q, Method::via_nuttall).value; })}},
        [](const TorontoQuery& q) { return oracle_toronto(q.m, q.n, q.r, q.B); },
        [](const TorontoQuery& q) { return lab(q); }, tol);
    using RF = std::function<double(const RiceIeQuery&)>;
    route_agreement<RiceIeQuery>(
        out, "rice routes vs oracle", d.rice,
        {{"humbert", RF([](const RiceIeQuery& q) { return rice_ie_eval(q, Method::humbert).value; })},
         {"series", RF([](const RiceIeQuery& q) { return rice_ie_eval(q, Method::series).value; })},
         {"trig oracle", RF([](const RiceIeQuery& q) { return oracle_rice_trig(q.k, q.x); })}},
        [](const RiceIeQuery& q) { return oracle_rice(q.k, q.x); }, [](const RiceIeQuery& q) { return lab(q); }, tol);
    using IF = std::function<double(const IlhiQuery&)>;
    route_agreement<IlhiQuery>(
        out, "ilhi routes vs oracle", d.ilhi,
        {{"series", IF([](const IlhiQuery& q) { return ilhi_eval(q, Method::series).value; })}},
        [](const IlhiQuery& q) { return oracle_ilhi(q.m, q.n, q.a, q.x); }, [](const IlhiQuery& q) { return lab(q); },
        tol);
}

template <class Q>
void bracket(std::vector<PropertyResult>& out, const std::string& name, const std::vector<Q>& draws,
             const std::function<Interval(const Q&)>& bounds, const std::function<double(const Q&)>& oracle_fn) {
    Tracker t("bounds", name, 0.0);
    for (const auto& q : draws) {
        try {
            Interval iv = bounds(q);
            double o = oracle_fn(q);
            double s = kBracketSlack * std::max(1.0, std::fabs(o));
            double excess = std::max(iv.lower - o, o - iv.upper);
            t.holds(iv.lower <= o + s && o <= iv.upper + s, excess,
                    lab(q) + " [" + fmt(iv.lower) + ", " + fmt(iv.upper) + "] oracle " +
                        fmt(o));
        } catch (const DomainError&) {
            t.refuse();
        } catch (const std::exception& e) {
            t.fail(lab(q) + ": " + e.what());
        }
    }
    out.push_back(t.r);
}

template <class Q>
void truncation(std::vector<PropertyResult>& out, const std::string& name, const std::vector<Q>& draws,
                const std::function<double(const Q&, int)>& bound, const std::function<double(const Q&, int)>& poly,
                const std::function<double(const Q&)>& oracle_fn) {
    Tracker t("bounds", name, 0.0);
    for (const auto& q : draws) {
        for (int p : {5, 10, 20}) {
            try {
                double gap = std::fabs(oracle_fn(q) - poly(q, p));
                double b = bound(q, p);
                double s = kBracketSlack * std::max(1.0, std::fabs(oracle_fn(q)));
                t.holds(b + s >= gap, gap - b,
                        lab(q) + " p=" + std::to_string(p) + " bound " + fmt(b) + " gap " +
                            fmt(gap));
            } catch (const DomainError&) {
                t.refuse();
            } catch (const std::exception& e) {
                t.fail(lab(q) + ": " + e.what());
            }
        }
    }
    out.push_back(t.r);
}

void group_bounds(std::vector<PropertyResult>& out, const Draws& d) {
    bracket<TorontoQuery>(out, "toronto bounds bracket oracle", d.toronto, toronto_bounds,
                          [](const TorontoQuery& q) { return oracle_toronto(q.m, q.n, q.r, q.B); });
    bracket<IlhiQuery>(out, "ilhi bounds bracket oracle", d.ilhi, ilhi_bounds,
                       [](const IlhiQuery& q) { return oracle_ilhi(q.m, q.n, q.a, q.x); });
    bracket<RiceIeQuery>(out, "rice bounds bracket oracle", d.rice, rice_ie_bounds,
                         [](const RiceIeQuery& q) { return oracle_rice(q.k, q.x); });
    bracket<NuttallQuery>(
        out, "nuttall upper bound above oracle", d.nuttall,
        [](const NuttallQuery& q) { return Interval{-INFINITY, nuttall_upper(q)}; },
        [](const NuttallQuery& q) { return oracle_nuttall(q.m, q.n, q.a, q.b); });

    truncation<NuttallQuery>(
        out, "nuttall truncation bound dominates gap", d.nuttall,
        [](const NuttallQuery& q, int p) { return nuttall_trunc_bound(q, p); },
        [](const NuttallQuery& q, int p) { return nuttall_eval(q, Method::poly, p).value; },
        [](const NuttallQuery& q) { return oracle_nuttall(q.m, q.n, q.a, q.b); });
    truncation<TorontoQuery>(
        out, "toronto truncation bound dominates gap", d.toronto,
        [](const TorontoQuery& q, int p) { return toronto_trunc_bound(q, p); },
        [](const TorontoQuery& q, int p) { return toronto_eval(q, Method::poly, p).value; },
        [](const TorontoQuery& q) { return oracle_toronto(q.m, q.n, q.r, q.B); });
    truncation<RiceIeQuery>(
        out, "rice truncation bound dominates gap", d.rice,
        [](const RiceIeQuery& q, int p) { return rice_ie_trunc_bound(q, p); },
        [](const RiceIeQuery& q, int p) { return rice_ie_eval(q, Method::poly, p).value; },
        [](const RiceIeQuery& q) { return oracle_rice(q.k, q.x); });
    truncation<IlhiQuery>(
        out, "ilhi truncation bound dominates gap", d.ilhi,
        [](const IlhiQuery& q, int p) { return ilhi_trunc_bound(q, p); },
        [](const IlhiQuery& q, int p) { return ilhi_eval(q, Method::poly, p).value; },
        [](const IlhiQuery& q) { return oracle_ilhi(q.m, q.n, q.a, q.x); });
}

void group_identities(std::vector<PropertyResult>& out) {
    Tracker t("identities", "hypergeometric identity residuals", 1e-7);
    int by_id[4] = {0, 0, 0, 0};
    for (const auto& r : identity_suite()) {
        std::ostringstream where;
        where << identity_name(r.id) << ' ';
        where.precision(6);
        where << '(';
        for (std::size_t i = 0; i < r.point.size(); ++i) where << (i ? "," : "") << r.point[i];
        where << ')';
        if (r.refused) {
            t.refuse();
            ++by_id[static_cast<int>(r.id)];
            continue;
        }
        t.residual(r.residual, where.str());
    }
    std::ostringstream s;
    s << "refusals by identity:";
    for (int i = 0; i < 4; ++i) s << ' ' << identity_name(static_cast<IdentityId>(i)) << '=' << by_id[i];
    t.r.detail = s.str();
    out.push_back(t.r);
}

void group_special(std::vector<PropertyResult>& out) {
    const double args[] = {0.25, 0.5, 1.0, 2.0, 3.0};
    {
        Tracker t("special", "first-order Nuttall equals Marcum Q1", 1e-9);
        for (double a : args)
            for (double b : args)
                t.residual(std::fabs(nuttall_eval({1.0, 0.0, a, b}).value - marcum_q(1.0, a, b)), point({a, b}));
        out.push_back(t.r);
    }
    {
        Tracker t("special", "normalized Nuttall Q_{m,m-1} equals Marcum Q_m", 1e-9);
        for (double m : {1.5, 2.0, 2.5, 3.5})
            for (double a : args)
                for (double b : args)
                    t.residual(std::fabs(normalized_nuttall({m, m - 1.0, a, b}).value - marcum_q(m, a, b)),
                               point({m, a, b}));
        out.push_back(t.r);
    }
    {
        Tracker t("special", "Nuttall order recursion", 1e-8);
        for (int m = 2; m <= 5; ++m)
            for (int n = 1; n <= 3; ++n)
                for (double a : {0.5, 1.0, 2.0})
                    for (double b : {0.5, 1.0, 2.0})
                        t.residual(std::fabs(nuttall_recursion_check(m, n, a, b)), point({double(m), double(n), a, b}));
        out.push_back(t.r);
    }
    {
        Tracker t("special", "Toronto plus Marcum complement", 1e-9);
        for (double m : {1.0, 2.0, 3.0, 4.5})
            for (double r : {0.5, 1.0, 2.0})
                for (double B : {0.5, 1.0, 3.0}) {
                    double T = toronto_eval({m, 0.5 * (m - 1.0), r, B}).value;
                    double Q = marcum_q(0.5 * (m + 1.0), std::sqrt(2.0) * r, std::sqrt(2.0) * B);
                    t.residual(std::fabs(T + Q - 1.0), point({m, r, B}));
                }
        out.push_back(t.r);
    }
    {
        Tracker t("special", "lambda-mu and eta-mu duality", 1e-9);
        for (double l : {-0.7, -0.3, 0.3, 0.7})
            for (double mu : {0.5, 1.0, 1.5, 2.5})
                for (double th : {0.1, 1.0, 4.0}) {
                    double a = outage({LambdaMu{l, mu}, 1.0, th});
                    double b = outage({EtaMu{(1.0 - l) / (1.0 + l), mu}, 1.0, th});
                    t.residual(std::fabs(a - b), point({l, mu, th}));
                }
        out.push_back(t.r);
    }
    {
        Tracker t("special", "alpha = 2 reductions", 0.0);
        for (double mu : {0.5, 1.0, 1.5, 2.5})
            for (double th : {0.1, 1.0, 4.0}) {
                for (double e : {0.25, 0.5, 2.0, 4.0})
                    t.residual(std::fabs(outage({AlphaEtaMu{2.0, e, mu}, 1.0, th}) - outage({EtaMu{e, mu}, 1.0, th})),
                               "eta " + point({e, mu, th}));
                for (double l : {-0.7, 0.3})
                    t.residual(
                        std::fabs(outage({AlphaLambdaMu{2.0, l, mu}, 1.0, th}) - outage({LambdaMu{l, mu}, 1.0, th})),
                        "lambda " + point({l, mu, th}));
                for (double k : {0.5, 1.0, 3.0})
                    t.residual(
                        std::fabs(outage({AlphaKappaMu{2.0, k, mu}, 1.0, th}) - outage({KappaMu{k, mu}, 1.0, th})),
                        "kappa " + point({k, mu, th}));
            }
        out.push_back(t.r);
    }
}

std::vector<FadingModel> fading_grid() {
    std::vector<FadingModel> ms;
    for (double a : {1.0, 2.0, 3.0})
        for (double mu : {0.5, 1.0, 1.5, 2.5}) {
            for (double e : {0.25, 0.5, 2.0, 4.0}) ms.push_back(AlphaEtaMu{a, e, mu});
            for (double l : {-0.7, -0.3, 0.3, 0.7}) ms.push_back(AlphaLambdaMu{a, l, mu});
            for (double k : {0.5, 1.0, 3.0}) ms.push_back(AlphaKappaMu{a, k, mu});
        }
    for (double n : {0.0, 1.0, 2.0}) ms.push_back(Rician{n});
    return ms;
}

std::string describe(const FadingModel& m) {
    return model_name(m) + std::visit(
                               [](const auto& v) {
                                   using T = std::decay_t<decltype(v)>;
                                   if constexpr (std::is_same_v<T, AlphaEtaMu>) return point({v.alpha, v.eta, v.mu});
                                   if constexpr (std::is_same_v<T, AlphaLambdaMu>)
                                       return point({v.alpha, v.lambda, v.mu});
                                   if constexpr (std::is_same_v<T, AlphaKappaMu>)
                                       return point({v.alpha, v.kappa, v.mu});
                                   if constexpr (std::is_same_v<T, EtaMu>) return point({v.eta, v.mu});
                                   if constexpr (std::is_same_v<T, LambdaMu>) return point({v.lambda, v.mu});
                                   if constexpr (std::is_same_v<T, KappaMu>) return point({v.kappa, v.mu});
                                   if constexpr (std::is_same_v<T, Rician>) return point({v.n_rice});
                               },
                               m);
}

void group_fading(std::vector<PropertyResult>& out) {
    const double gb = 1.0;
    const double ratios[] = {0.01, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 50.0};
    Tracker agree("fading", "outage analytic vs density quadrature", 1e-6);
    Tracker mono("fading", "outage non-decreasing in threshold", 0.0);
    Tracker lim("fading", "outage limits 0 and 1", 1e-4);
    for (const auto& m : fading_grid()) {
        std::string name = describe(m);
        double prev = 0.0;
        try {
            lim.residual(std::fabs(outage({m, gb, 0.0})), name + " at 0");
        } catch (const std::exception& e) {
            lim.fail(name + " at 0: " + e.what());
        }
        for (double r : ratios) {
            try {
                double an = outage({m, gb, r * gb});
                double orc = outage({m, gb, r * gb}, OutageRoute::oracle);
                agree.residual(std::fabs(an - orc), name + " th/avg=" + fmt(r));
                mono.holds(an >= prev, prev - an, name + " decreases at th/avg=" + fmt(r));
                prev = an;
                if (r == 50.0) lim.residual(1.0 - an, name + " at 50 avg");
            } catch (const std::exception& e) {
                agree.fail(name + ": " + e.what());
            }
        }
    }
    out.push_back(agree.r);
    out.push_back(mono.r);
    out.push_back(lim.r);
}

MimoCoeffs reference_mimo(int t) {
    MimoCoeffs co;
    co.m = 2;
    co.n = 3;
    co.t = t;
    if (t == 1) co.omega = {1.7};
    co.c = {{0.6, 0.4}, {0.3, 0.9}};
    co.k_norm = 1.0;
    return co;
}

void group_capacity(std::vector<PropertyResult>& out) {
    Tracker cut("capacity", "cutoff defining-equation residuals", 1e-8);
    Tracker cap("capacity", "closed-form capacity vs quadrature (relative)", 1e-6);
    for (double n : {0.0, 1.0, 2.0})
        for (double gb : {1.0, 5.0, 10.0}) {
            std::string w = "siso" + point({n, gb});
            try {
                RicianChannel ch{n, gb, 1.0};
                TifrResult r = optimal_cutoff_rician(ch);
                cut.residual(r.solver_residual, w);
                auto pdf = [&](double g) { return snr_pdf(Rician{n}, gb, g); };
                for (double g0 : {r.cutoff_gamma0, 0.2 * gb}) {
                    double c = tifr_capacity_rician(ch, g0, g0).capacity_per_hz;
                    double q = tifr_capacity_quadrature(pdf, g0, g0);
                    cap.residual(std::fabs(c / q - 1.0), w + " g0=" + fmt(g0));
                }
            } catch (const std::exception& e) {
                cut.fail(w + ": " + e.what());
            }
        }
    for (int na : {1, 2, 4})
        for (double K : {0.5, 2.0})
            for (double gb : {1.0, 5.0}) {
                std::string w = "miso" + point({double(na), K, gb});
                try {
                    MisoSimoChannel ch{K, 1.0, na, gb};
                    MisoCutoff c = optimal_cutoff_miso(ch);
                    cut.residual(c.residual, w);
                    auto pdf = [&](double g) { return miso_snr_pdf(ch, g); };
                    for (double g0 : {c.gamma0, 0.3 * gb}) {
                        double v = em_tifr_miso_simo(ch, g0, g0).capacity_per_hz;
                        double q = tifr_capacity_quadrature(pdf, g0, g0);
                        cap.residual(std::fabs(v / q - 1.0), w + " g0=" + fmt(g0));
                    }
                } catch (const std::exception& e) {
                    cut.fail(w + ": " + e.what());
                }
            }
    for (int t : {0, 1}) {
        std::string w = "mimo 2x3 t=" + std::to_string(t);
        try {
            MimoCoeffs co = reference_mimo(t);
            const double K = 1.0, gb = 5.0;
            // normalise the density to unit mass
            co.k_norm = 1.0 / (1.0 - mimo_em_ti(co, K, gb, 1e-300).outage);
            MimoCutoff c = optimal_cutoff_mimo(co, K, gb);
            cut.residual(c.residual, w);
            auto pdf = [&](double g) { return mimo_eigen_pdf(co, K, gb, g); };
            for (double g0 : {c.gamma0, 0.4}) {
                double v = mimo_em_ti(co, K, gb, g0).capacity;
                double q = tifr_capacity_quadrature(pdf, g0, g0, co.m);
                cap.residual(std::fabs(v / q - 1.0), w + " g0=" + fmt(g0));
            }
        } catch (const std::exception& e) {
            cut.fail(w + ": " + e.what());
        }
    }
    out.push_back(cut.r);
    out.push_back(cap.r);
}

bool wanted(const VerifyOptions& o, const std::string& g) {
    return o.groups.empty() || std::find(o.groups.begin(), o.groups.end(), g) != o.groups.end();
}

}  // namespace

bool VerifyReport::pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

VerifyReport run_verify(const VerifyOptions& opt) {
    if (opt.draws < 1) throw DomainError("verify: draws must be positive");
    if (!(opt.tol > 0.0)) throw DomainError("verify: tol must be positive");
    for (const auto& g : opt.groups)
        if (g != "oracle" && g != "bounds" && g != "identities" && g != "special" && g != "fading" && g != "capacity")
            throw DomainError("verify: unknown group '" + g + "'");
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.options = opt;
    Draws d;
    if (wanted(opt, "oracle") || wanted(opt, "bounds")) d = make_draws(opt);
    if (wanted(opt, "oracle")) group_oracle(rep.properties, d, opt.tol);
    if (wanted(opt, "bounds")) group_bounds(rep.properties, d);
    if (wanted(opt, "identities")) group_identities(rep.properties);
    if (wanted(opt, "special")) group_special(rep.properties);
    if (wanted(opt, "fading")) group_fading(rep.properties);
    if (wanted(opt, "capacity")) group_capacity(rep.properties);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["seed"] = r.options.seed;
    j["draws"] = r.options.draws;
    j["tol"] = r.options.tol;
    j["pass"] = r.pass();
    j["properties"] = nlohmann::ordered_json::array();
    for (const auto& p : r.properties) {
        nlohmann::ordered_json pj;
        pj["group"] = p.group;
        pj["name"] = p.name;
        pj["pass"] = p.pass;
        pj["checked"] = p.checked;
        pj["failed"] = p.failed;
        pj["refused"] = p.refused;
        pj["worst"] = p.worst;
        pj["limit"] = p.limit;
        if (!p.detail.empty()) pj["detail"] = p.detail;
        if (!p.failures.empty()) pj["failures"] = p.failures;
        j["properties"].push_back(pj);
    }
    return j.dump(2);
}

}  // namespace wsf
