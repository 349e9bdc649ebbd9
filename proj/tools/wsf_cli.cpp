#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsf/capacity.hpp"
#include "wsf/common.hpp"
#include "wsf/fading.hpp"
#include "wsf/ilhi.hpp"
#include "wsf/nuttall.hpp"
#include "wsf/oracle.hpp"
#include "wsf/report.hpp"
#include "wsf/rice.hpp"
#include "wsf/toronto.hpp"

using namespace wsf;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool parse_real(const std::string& s, double& v) {
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v, std::chars_format::general);
    return ec == std::errc() && p == end && std::isfinite(v);
}

const CLI::Validator kStrictReal(
    [](std::string& s) -> std::string {
        double v;
        return parse_real(s, v) ? std::string() : "'" + s + "' is not a finite decimal number";
    },
    "REAL");

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Output destination and format shared by every subcommand.
struct Output {
    std::string format = "text";
    std::string path;
    void add(CLI::App* sub, const std::string& default_format = "text") {
        format = default_format;
        sub->add_option("--format", format, "text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", path, "write to this file instead of stdout");
    }
    void write(const std::string& s) const {
        if (path.empty()) {
            std::cout << s;
            std::cout.flush();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot open '" + path + "' for writing");
        f << s;
    }
};

// ---------------------------------------------------------------- parameters

const std::map<std::string, std::vector<std::string>> kSchema = {
    {"nuttall", {"m", "n", "a", "b"}},
    {"toronto", {"m", "n", "r", "B"}},
    {"rice-ie", {"k", "x"}},
    {"ilhi", {"m", "n", "a", "x"}},
};

struct Params {
    std::map<std::string, std::optional<double>> v;
    void add(CLI::App* sub) {
        for (const char* name : {"m", "n", "a", "b", "r", "B", "k", "x"}) {
            v[name];
            sub->add_option(std::string("--") + name, v[name])->check(kStrictReal);
        }
    }
    // Every schema parameter present except the swept ones, nothing else.
    void require(const std::string& fn, const std::vector<std::string>& swept = {}) const {
        const auto& need = kSchema.at(fn);
        for (const auto& [name, val] : v) {
            bool wanted = std::find(need.begin(), need.end(), name) != need.end();
            bool is_swept = std::find(swept.begin(), swept.end(), name) != swept.end();
            if (is_swept && !wanted) throw UsageError("'" + name + "' is not a parameter of " + fn);
            if (is_swept && val) throw UsageError("'" + name + "' is both swept and fixed");
            if (!is_swept && wanted && !val) throw UsageError(fn + " needs --" + name);
            if (!wanted && val) throw UsageError("--" + name + " is not a parameter of " + fn);
        }
    }
    double operator[](const std::string& k) const { return *v.at(k); }
};

// ------------------------------------------------------------------ eval

EvalResult evaluate(const std::string& fn, const std::map<std::string, double>& p, Method m, int terms) {
    if (fn == "nuttall") return nuttall_eval({p.at("m"), p.at("n"), p.at("a"), p.at("b")}, m, terms);
    if (fn == "toronto") return toronto_eval({p.at("m"), p.at("n"), p.at("r"), p.at("B")}, m, terms);
    if (fn == "rice-ie") return rice_ie_eval({p.at("k"), p.at("x")}, m, terms);
    return ilhi_eval({p.at("m"), p.at("n"), p.at("a"), p.at("x")}, m, terms);
}

Method default_method(const std::string& fn) { return fn == "rice-ie" ? Method::humbert : Method::series; }

std::map<std::string, double> fixed(const std::string& fn, const Params& ps) {
    std::map<std::string, double> p;
    for (const auto& name : kSchema.at(fn))
        if (ps.v.at(name)) p[name] = ps[name];
    return p;
}

struct Record {
    std::vector<std::pair<std::string, std::string>> text;  // key, printable value
    json j;
};

void put(Record& r, const std::string& k, double v) {
    r.text.emplace_back(k, num(v));
    r.j[k] = v;
}
void put(Record& r, const std::string& k, const std::string& v) {
    r.text.emplace_back(k, v);
    r.j[k] = v;
}
void put(Record& r, const std::string& k, int v) {
    r.text.emplace_back(k, std::to_string(v));
    r.j[k] = v;
}
void put_null(Record& r, const std::string& k) {
    r.text.emplace_back(k, "");
    r.j[k] = nullptr;
}

std::string render(const Record& r, const std::string& format) {
    if (format == "json") return r.j.dump(2) + "\n";
    std::string out;
    if (format == "csv") {
        for (std::size_t i = 0; i < r.text.size(); ++i) out += (i ? "," : "") + r.text[i].first;
        out += "\n";
        for (std::size_t i = 0; i < r.text.size(); ++i) out += (i ? "," : "") + r.text[i].second;
        return out + "\n";
    }
    std::size_t w = 0;
    for (const auto& kv : r.text) w = std::max(w, kv.first.size());
    for (const auto& [k, v] : r.text) out += k + std::string(w - k.size() + 2, ' ') + (v.empty() ? "n/a" : v) + "\n";
    return out;
}

int cmd_eval(const std::string& fn, const Params& ps, const std::string& method, int terms, const Output& out) {
    ps.require(fn);
    Method m = method.empty() ? default_method(fn) : method_from_name(method);
    auto p = fixed(fn, ps);
    EvalResult res = evaluate(fn, p, m, terms);
    Record r;
    put(r, "function", fn);
    for (const auto& name : kSchema.at(fn)) put(r, name, p[name]);
    put(r, "method", std::string(method_name(res.method)));
    put(r, "value", res.value);
    put(r, "est_error", res.est_error);
    put(r, "terms", res.terms);
    out.write(render(r, out.format));
    return 0;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(const std::string& fn, const Params& ps, std::optional<int> trunc, const Output& out) {
    ps.require(fn);
    auto p = fixed(fn, ps);
    std::optional<double> lower, tb;
    double upper = 0.0, oracle_value = 0.0;
    if (fn == "nuttall") {
        NuttallQuery q{p["m"], p["n"], p["a"], p["b"]};
        upper = nuttall_upper(q);
        oracle_value = oracle_nuttall(q.m, q.n, q.a, q.b);
        if (trunc) tb = nuttall_trunc_bound(q, *trunc);
    } else if (fn == "toronto") {
        TorontoQuery q{p["m"], p["n"], p["r"], p["B"]};
        Interval iv = toronto_bounds(q);
        lower = iv.lower;
        upper = iv.upper;
        oracle_value = oracle_toronto(q.m, q.n, q.r, q.B);
        if (trunc) tb = toronto_trunc_bound(q, *trunc);
    } else if (fn == "rice-ie") {
        RiceIeQuery q{p["k"], p["x"]};
        Interval iv = rice_ie_bounds(q);
        lower = iv.lower;
        upper = iv.upper;
        oracle_value = oracle_rice(q.k, q.x);
        if (trunc) tb = rice_ie_trunc_bound(q, *trunc);
    } else {
        IlhiQuery q{p["m"], p["n"], p["a"], p["x"]};
        Interval iv = ilhi_bounds(q);
        lower = iv.lower;
        upper = iv.upper;
        oracle_value = oracle_ilhi(q.m, q.n, q.a, q.x);
        if (trunc) tb = ilhi_trunc_bound(q, *trunc);
    }
    Record r;
    put(r, "function", fn);
    for (const auto& name : kSchema.at(fn)) put(r, name, p[name]);
    if (lower)
        put(r, "lower", *lower);
    else
        put_null(r, "lower");
    put(r, "upper", upper);
    put(r, "oracle", oracle_value);
    bool brackets = (!lower || *lower <= oracle_value) && oracle_value <= upper;
    put(r, "brackets_oracle", std::string(brackets ? "true" : "false"));
    if (trunc) {
        double gap = 0.0;
        if (fn == "nuttall") gap = nuttall_eval({p["m"], p["n"], p["a"], p["b"]}, Method::poly, *trunc).value;
        if (fn == "toronto") gap = toronto_eval({p["m"], p["n"], p["r"], p["B"]}, Method::poly, *trunc).value;
        if (fn == "rice-ie") gap = rice_ie_eval({p["k"], p["x"]}, Method::poly, *trunc).value;
        if (fn == "ilhi") gap = ilhi_eval({p["m"], p["n"], p["a"], p["x"]}, Method::poly, *trunc).value;
        put(r, "p", *trunc);
        put(r, "trunc_bound", *tb);
        put(r, "trunc_gap", std::fabs(oracle_value - gap));
    }
    out.write(render(r, out.format));
    return 0;
}

// ---------------------------------------------------------------- fading

struct ModelFlags {
    std::string model;
    std::optional<double> alpha, eta, lambda, kappa, mu, n_rice;
    std::optional<double> gamma_bar, gamma_bar_db;
    void add(CLI::App* sub) {
        sub->add_option("--model", model, "alpha-eta-mu, alpha-lambda-mu, alpha-kappa-mu, eta-mu, lambda-mu, "
                                          "kappa-mu or rician")
            ->required()
            ->check(CLI::IsMember({"alpha-eta-mu", "alpha-lambda-mu", "alpha-kappa-mu", "eta-mu", "lambda-mu",
                                   "kappa-mu", "rician"}));
        sub->add_option("--alpha", alpha)->check(kStrictReal);
        sub->add_option("--eta", eta)->check(kStrictReal);
        sub->add_option("--lambda", lambda)->check(kStrictReal);
        sub->add_option("--kappa", kappa)->check(kStrictReal);
        sub->add_option("--mu", mu)->check(kStrictReal);
        sub->add_option("--n-rice", n_rice, "Rician n, K = n^2")->check(kStrictReal);
        auto* g = sub->add_option("--gamma-bar", gamma_bar, "average SNR, linear")->check(kStrictReal);
        sub->add_option("--gamma-bar-db", gamma_bar_db, "average SNR in dB")->check(kStrictReal)->excludes(g);
    }
    double avg() const {
        if (gamma_bar_db) return std::pow(10.0, *gamma_bar_db / 10.0);
        return gamma_bar.value_or(1.0);
    }
    FadingModel build() const {
        std::map<std::string, const std::optional<double>*> all = {{"alpha", &alpha}, {"eta", &eta},
                                                                   {"lambda", &lambda}, {"kappa", &kappa},
                                                                   {"mu", &mu}, {"n-rice", &n_rice}};
        static const std::map<std::string, std::vector<std::string>> need = {
            {"alpha-eta-mu", {"alpha", "eta", "mu"}}, {"alpha-lambda-mu", {"alpha", "lambda", "mu"}},
            {"alpha-kappa-mu", {"alpha", "kappa", "mu"}}, {"eta-mu", {"eta", "mu"}},
            {"lambda-mu", {"lambda", "mu"}}, {"kappa-mu", {"kappa", "mu"}}, {"rician", {"n-rice"}}};
        const auto& want = need.at(model);
        for (const auto& [name, val] : all) {
            bool w = std::find(want.begin(), want.end(), name) != want.end();
            if (w && !*val) throw UsageError(model + " needs --" + name);
            if (!w && *val) throw UsageError("--" + name + " is not a parameter of " + model);
        }
        FadingModel m;
        if (model == "alpha-eta-mu") m = AlphaEtaMu{*alpha, *eta, *mu};
        if (model == "alpha-lambda-mu") m = AlphaLambdaMu{*alpha, *lambda, *mu};
        if (model == "alpha-kappa-mu") m = AlphaKappaMu{*alpha, *kappa, *mu};
        if (model == "eta-mu") m = EtaMu{*eta, *mu};
        if (model == "lambda-mu") m = LambdaMu{*lambda, *mu};
        if (model == "kappa-mu") m = KappaMu{*kappa, *mu};
        if (model == "rician") m = Rician{*n_rice};
        validate(m);
        return m;
    }
};

double outage_by_route(const OutageQuery& q, const std::string& route) {
    if (route == "oracle") return outage(q, OutageRoute::oracle);
    if (route == "humbert") return outage_humbert(q);
    return outage(q, OutageRoute::analytic);
}

int cmd_outage(const ModelFlags& mf, std::optional<double> th, std::optional<double> th_db, const std::string& route,
               const Output& out) {
    if (!th && !th_db) throw UsageError("outage needs --gamma-th or --gamma-th-db");
    double gth = th_db ? std::pow(10.0, *th_db / 10.0) : *th;
    OutageQuery q{mf.build(), mf.avg(), gth};
    Record r;
    put(r, "model", model_name(q.model));
    put(r, "gamma_bar", q.gamma_bar);
    put(r, "gamma_th", q.gamma_th);
    put(r, "route", route);
    put(r, "outage", outage_by_route(q, route));
    out.write(render(r, out.format));
    return 0;
}

// -------------------------------------------------------------- capacity

struct CapacityFlags {
    std::string system = "siso";
    std::optional<double> n_rice, K, los_power, gamma_bar, gamma_bar_db, gamma0, gamma_th, bandwidth;
    std::optional<int> n_ant;
    std::string coeffs;
    void add(CLI::App* sub) {
        sub->add_option("--system", system)->check(CLI::IsMember({"siso", "miso", "simo", "mimo"}))->capture_default_str();
        sub->add_option("--n-rice", n_rice, "SISO Rician n, K = n^2")->check(kStrictReal);
        sub->add_option("--K", K, "Rician factor (MISO/SIMO/MIMO)")->check(kStrictReal);
        sub->add_option("--los-power", los_power, "LoS power m^H m (MISO/SIMO)")->check(kStrictReal);
        sub->add_option("--n-ant", n_ant, "antenna count (MISO/SIMO)")->check(CLI::PositiveNumber);
        auto* g = sub->add_option("--gamma-bar", gamma_bar)->check(kStrictReal);
        sub->add_option("--gamma-bar-db", gamma_bar_db)->check(kStrictReal)->excludes(g);
        sub->add_option("--gamma0", gamma0, "cutoff SNR; the optimum is used when omitted")->check(kStrictReal);
        sub->add_option("--gamma-th", gamma_th, "outage threshold; defaults to the cutoff")->check(kStrictReal);
        sub->add_option("--bandwidth", bandwidth, "Hz, SISO only")->check(kStrictReal);
        sub->add_option("--coeffs", coeffs, "MIMO eigenvalue-density coefficients (JSON file)");
    }
    double avg() const {
        if (gamma_bar_db) return std::pow(10.0, *gamma_bar_db / 10.0);
        if (!gamma_bar) throw UsageError("capacity needs --gamma-bar or --gamma-bar-db");
        return *gamma_bar;
    }
    void only(std::initializer_list<const char*> allowed) const {
        std::vector<std::pair<std::string, bool>> given = {
            {"n-rice", n_rice.has_value()}, {"K", K.has_value()}, {"los-power", los_power.has_value()},
            {"n-ant", n_ant.has_value()}, {"bandwidth", bandwidth.has_value()}, {"coeffs", !coeffs.empty()}};
        for (const auto& [name, set] : given) {
            bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return name == a; });
            if (set && !ok) throw UsageError("--" + name + " does not apply to " + system);
        }
    }
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

int cmd_capacity(const CapacityFlags& c, const Output& out) {
    Record r;
    put(r, "system", c.system);
    double gb = c.avg();
    put(r, "gamma_bar", gb);
    if (c.system == "siso") {
        c.only({"n-rice", "bandwidth"});
        if (!c.n_rice) throw UsageError("siso needs --n-rice");
        RicianChannel ch{*c.n_rice, gb, c.bandwidth.value_or(1.0)};
        double residual = 0.0;
        double g0 = c.gamma0 ? *c.gamma0 : 0.0;
        if (!c.gamma0) {
            TifrResult opt = optimal_cutoff_rician(ch);
            g0 = opt.cutoff_gamma0;
            residual = opt.solver_residual;
        }
        TifrResult res = tifr_capacity_rician(ch, g0, c.gamma_th.value_or(g0));
        double quad = tifr_capacity_quadrature([&](double g) { return snr_pdf(Rician{ch.n_rice}, gb, g); }, g0,
                                               c.gamma_th.value_or(g0));
        put(r, "gamma0", g0);
        put(r, "gamma_th", c.gamma_th.value_or(g0));
        put(r, "cutoff_residual", residual);
        put(r, "outage", res.outage);
        put(r, "capacity_bits_per_hz", res.capacity_per_hz);
        put(r, "capacity_bits_per_s", res.capacity_per_hz * ch.bandwidth_hz);
        put(r, "capacity_quadrature", quad);
    } else if (c.system == "miso" || c.system == "simo") {
        c.only({"K", "los-power", "n-ant"});
        if (!c.K || !c.n_ant) throw UsageError(c.system + " needs --K and --n-ant");
        MisoSimoChannel ch{*c.K, c.los_power.value_or(1.0), *c.n_ant, gb};
        double g0 = c.gamma0 ? *c.gamma0 : 0.0;
        double residual = 0.0;
        if (!c.gamma0) {
            MisoCutoff cut = optimal_cutoff_miso(ch);
            g0 = cut.gamma0;
            residual = cut.residual;
            put(r, "inverse_nuttall_applicable", std::string(cut.closed_form_applicable ? "true" : "false"));
            if (cut.closed_form_applicable) put(r, "inverse_nuttall_gamma0", cut.closed_form_gamma0);
        }
        TifrResult res = em_tifr_miso_simo(ch, g0, c.gamma_th.value_or(g0));
        double quad = tifr_capacity_quadrature([&](double g) { return miso_snr_pdf(ch, g); }, g0, c.gamma_th.value_or(g0));
        put(r, "gamma0", g0);
        put(r, "gamma_th", c.gamma_th.value_or(g0));
        put(r, "cutoff_residual", residual);
        put(r, "outage", res.outage);
        put(r, "capacity_bits_per_hz", res.capacity_per_hz);
        put(r, "capacity_quadrature", quad);
    } else {
        c.only({"K", "coeffs"});
        if (c.coeffs.empty() || !c.K) throw UsageError("mimo needs --coeffs and --K");
        if (c.gamma_th) throw UsageError("--gamma-th does not apply to mimo; the outage is taken at the cutoff");
        MimoCoeffs co = parse_mimo_coeffs(read_file(c.coeffs));
        double mass = 1.0 - mimo_em_ti(co, *c.K, gb, 1e-300).outage;
        if (!(std::fabs(mass - 1.0) <= 1e-6))
            throw DomainError("coefficients give a density of total mass " + short_num(mass) + "; k_norm " +
                              short_num(co.k_norm / mass) + " would normalize it");
        double g0 = c.gamma0 ? *c.gamma0 : 0.0;
        double residual = 0.0;
        if (!c.gamma0) {
            MimoCutoff cut = optimal_cutoff_mimo(co, *c.K, gb);
            g0 = cut.gamma0;
            residual = cut.residual;
        }
        MimoResult res = mimo_em_ti(co, *c.K, gb, g0);
        double quad =
            tifr_capacity_quadrature([&](double g) { return mimo_eigen_pdf(co, *c.K, gb, g); }, g0, g0, co.m);
        put(r, "gamma0", g0);
        put(r, "cutoff_residual", residual);
        put(r, "outage", res.outage);
        put(r, "capacity_bits_per_hz", res.capacity);
        put(r, "capacity_quadrature", quad);
    }
    out.write(render(r, out.format));
    return 0;
}

// ----------------------------------------------------------------- table

int cmd_table(const std::string& id, const Output& out) {
    Table t = make_table(id);
    std::string s;
    if (out.format == "json") {
        s = to_json(t) + "\n";
    } else if (out.format == "csv") {
        s = "row";
        for (const auto& c : t.columns) s += "," + c + "," + c + "_reference," + c + "_pass";
        s += "\n";
        for (const auto& r : t.rows) {
            s += r.label;
            for (const auto& c : r.cells) {
                s += "," + (c.applicable ? num(c.value) : std::string()) + "," +
                     (c.reference ? num(*c.reference) : std::string()) + "," + (c.pass ? "1" : "0");
            }
            s += "\n";
        }
    } else {
        s = "Table " + t.id + ": " + t.title + "\n";
        std::size_t w = 0;
        for (const auto& r : t.rows) w = std::max(w, r.label.size());
        s += std::string(w, ' ');
        for (const auto& c : t.columns) {
            std::string h = c;
            h.resize(std::max<std::size_t>(h.size(), 12), ' ');
            s += "  " + h;
        }
        while (s.back() == ' ') s.pop_back();
        s += "\n";
        for (const auto& r : t.rows) {
            std::string line = r.label + std::string(w - r.label.size(), ' ');
            for (std::size_t i = 0; i < r.cells.size(); ++i) {
                const auto& c = r.cells[i];
                char b[32];
                bool sci = t.relative_error && c.column == "rel_err";
                std::snprintf(b, sizeof b, sci ? "%.2e" : "%.6f", c.value);
                std::string v = c.applicable ? b : "n/a";
                if (!c.pass) v += "*";
                v.resize(std::max<std::size_t>(t.columns[i].size(), 12), ' ');
                line += "  " + v;
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            s += line + "\n";
        }
        s += std::string(t.all_pass() ? "all cells pass" : "cells marked * differ from the reference") + "\n";
    }
    out.write(s);
    if (t.all_pass()) return 0;
    std::cerr << "mismatched cells in table " << t.id << ":\n";
    for (const auto& r : t.rows)
        for (const auto& c : r.cells) {
            if (c.pass) continue;
            std::cerr << "  " << r.label << " [" << c.column << "] ";
            if (!c.applicable)
                std::cerr << "route failed: " << c.note;
            else if (t.relative_error)
                std::cerr << "rel err " << short_num(c.value) << " above 10 x " << short_num(*c.reference);
            else
                std::cerr << "computed " << short_num(c.value) << " reference " << short_num(*c.reference) << " diff "
                          << short_num(c.value - *c.reference);
            std::cerr << "\n";
        }
    return 1;
}

// ----------------------------------------------------------------- sweep

struct Axis {
    std::string name;
    double start, stop;
    long count;
    double at(long i) const { return count == 1 ? start : start + (stop - start) * i / (count - 1); }
};

Axis parse_axis(const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("grid '" + spec + "' should read name=start:stop:count");
    Axis a;
    a.name = spec.substr(0, eq);
    std::string rest = spec.substr(eq + 1);
    auto c1 = rest.find(':'), c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw UsageError("grid '" + spec + "' should read name=start:stop:count");
    std::string cnt = rest.substr(c2 + 1);
    if (!parse_real(rest.substr(0, c1), a.start) || !parse_real(rest.substr(c1 + 1, c2 - c1 - 1), a.stop))
        throw UsageError("grid '" + spec + "': bad bounds");
    auto [p, ec] = std::from_chars(cnt.data(), cnt.data() + cnt.size(), a.count);
    if (ec != std::errc() || p != cnt.data() + cnt.size() || a.count < 1)
        throw UsageError("grid '" + spec + "': count must be a positive integer");
    return a;
}

using RowFn = std::function<std::vector<std::optional<double>>(const std::map<std::string, double>&)>;

// one cell per route; a refused route leaves the cell empty
std::optional<double> attempt(const std::function<double()>& f) {
    try {
        return f();
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int cmd_sweep(const std::string& target, const Params& ps, const ModelFlags& mf, const std::vector<std::string>& grids,
              int terms, const Output& out) {
    if (grids.empty() || grids.size() > 2) throw UsageError("sweep needs one or two --grid specifications");
    std::vector<Axis> axes;
    for (const auto& g : grids) axes.push_back(parse_axis(g));
    if (axes.size() == 2 && axes[0].name == axes[1].name) throw UsageError("the two grids sweep the same parameter");
    long double total = 1;
    for (const auto& a : axes) total *= a.count;
    if (total > 1e6) throw UsageError("grid has more than 10^6 points");

    std::vector<std::string> swept;
    for (const auto& a : axes) swept.push_back(a.name);
    std::vector<std::string> params, routes;
    std::map<std::string, double> base;
    RowFn fn;
    if (target == "outage") {
        for (const auto& [k, v] : ps.v)
            if (v) throw UsageError("--" + k + " does not apply to outage sweeps");
        if (axes.size() != 1 || axes[0].name != "gamma_th")
            throw UsageError("outage sweeps take a single grid over gamma_th");
        FadingModel model = mf.build();
        double gb = mf.avg();
        params = {"gamma_th"};
        routes = {"analytic", "oracle"};
        fn = [model, gb](const std::map<std::string, double>& p) -> std::vector<std::optional<double>> {
            OutageQuery q{model, gb, p.at("gamma_th")};
            return {attempt([&] { return outage(q); }), attempt([&] { return outage(q, OutageRoute::oracle); })};
        };
    } else {
        if (!mf.model.empty()) throw UsageError("--model applies to outage sweeps only");
        ps.require(target, swept);
        base = fixed(target, ps);
        params = kSchema.at(target);
        int p = terms;
        if (target == "nuttall") {
            routes = {"kdf", "poly", "bound", "oracle"};
            fn = [p](const std::map<std::string, double>& v) -> std::vector<std::optional<double>> {
                NuttallQuery q{v.at("m"), v.at("n"), v.at("a"), v.at("b")};
                return {attempt([&] { return nuttall_eval(q, Method::kdf).value; }),
                        attempt([&] { return nuttall_eval(q, Method::poly, p).value; }),
                        attempt([&] { return nuttall_upper(q); }),
                        attempt([&] { return oracle_nuttall(q.m, q.n, q.a, q.b); })};
            };
        } else if (target == "toronto") {
            routes = {"kdf", "series", "poly", "approx", "lower", "upper", "oracle"};
            fn = [p](const std::map<std::string, double>& v) -> std::vector<std::optional<double>> {
                TorontoQuery q{v.at("m"), v.at("n"), v.at("r"), v.at("B")};
                return {attempt([&] { return toronto_eval(q, Method::kdf).value; }),
                        attempt([&] { return toronto_eval(q, Method::series).value; }),
                        attempt([&] { return toronto_eval(q, Method::poly, p).value; }),
                        attempt([&] { return toronto_upper_approx(q).value; }),
                        attempt([&] { return toronto_bounds(q).lower; }),
                        attempt([&] { return toronto_bounds(q).upper; }),
                        attempt([&] { return oracle_toronto(q.m, q.n, q.r, q.B); })};
            };
        } else if (target == "rice-ie") {
            routes = {"humbert", "poly", "lower", "upper", "oracle"};
            fn = [p](const std::map<std::string, double>& v) -> std::vector<std::optional<double>> {
                RiceIeQuery q{v.at("k"), v.at("x")};
                return {attempt([&] { return rice_ie_eval(q, Method::humbert).value; }),
                        attempt([&] { return rice_ie_eval(q, Method::poly, p).value; }),
                        attempt([&] { return rice_ie_bounds(q).lower; }),
                        attempt([&] { return rice_ie_bounds(q).upper; }),
                        attempt([&] { return oracle_rice(q.k, q.x); })};
            };
        } else {
            routes = {"series", "poly", "approx", "lower", "upper", "oracle"};
            fn = [p](const std::map<std::string, double>& v) -> std::vector<std::optional<double>> {
                IlhiQuery q{v.at("m"), v.at("n"), v.at("a"), v.at("x")};
                return {attempt([&] { return ilhi_eval(q, Method::series).value; }),
                        attempt([&] { return ilhi_eval(q, Method::poly, p).value; }),
                        attempt([&] { return ilhi_upper_approx(q).value; }),
                        attempt([&] { return ilhi_bounds(q).lower; }),
                        attempt([&] { return ilhi_bounds(q).upper; }),
                        attempt([&] { return oracle_ilhi(q.m, q.n, q.a, q.x); })};
            };
        }
    }

    // first grid is the outer loop
    const long n0 = axes[0].count, n1 = axes.size() == 2 ? axes[1].count : 1;
    const long N = n0 * n1;
    std::vector<std::map<std::string, double>> points(N, base);
    for (long i = 0; i < n0; ++i)
        for (long j = 0; j < n1; ++j) {
            auto& pt = points[i * n1 + j];
            pt[axes[0].name] = axes[0].at(i);
            if (axes.size() == 2) pt[axes[1].name] = axes[1].at(j);
        }
    std::vector<std::vector<std::optional<double>>> rows(N);
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (long i = w; i < N; i += workers) rows[i] = fn(points[i]);
        });
    for (auto& t : pool) t.join();

    std::string s;
    if (out.format == "json") {
        json j;
        j["target"] = target;
        j["columns"] = params;
        for (const auto& r : routes) j["columns"].push_back(r);
        j["rows"] = json::array();
        for (long i = 0; i < N; ++i) {
            json row = json::array();
            for (const auto& p : params) row.push_back(points[i].at(p));
            for (const auto& v : rows[i]) row.push_back(v ? json(*v) : json(nullptr));
            j["rows"].push_back(row);
        }
        s = j.dump(2) + "\n";
    } else {
        // csv and text share the comma-separated layout
        for (std::size_t k = 0; k < params.size(); ++k) s += (k ? "," : "") + params[k];
        for (const auto& r : routes) s += "," + r;
        s += "\n";
        for (long i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < params.size(); ++k) s += (k ? "," : "") + num(points[i].at(params[k]));
            for (const auto& v : rows[i]) s += "," + (v ? num(*v) : std::string());
            s += "\n";
        }
    }
    out.write(s);
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const VerifyOptions& o, const Output& out) {
    VerifyReport rep = run_verify(o);
    std::string s;
    if (out.format == "json") {
        s = to_json(rep) + "\n";
    } else if (out.format == "csv") {
        s = "group,property,pass,checked,failed,refused,worst,limit\n";
        for (const auto& p : rep.properties)
            s += p.group + "," + p.name + "," + (p.pass ? "1" : "0") + "," + std::to_string(p.checked) + "," +
                 std::to_string(p.failed) + "," + std::to_string(p.refused) + "," + num(p.worst) + "," + num(p.limit) +
                 "\n";
    } else {
        s = "seed " + std::to_string(o.seed) + ", draws " + std::to_string(o.draws) + ", tol " + short_num(o.tol) + "\n";
        for (const auto& p : rep.properties) {
            s += std::string(p.pass ? "PASS " : "FAIL ") + "[" + p.group + "] " + p.name + ": " +
                 std::to_string(p.checked) + " checked, " + std::to_string(p.failed) + " failed, " +
                 std::to_string(p.refused) + " refused, worst " + short_num(p.worst) + "\n";
            for (const auto& f : p.failures) s += "    " + f + "\n";
        }
        s += rep.pass() ? "verification passed\n" : "verification failed\n";
    }
    out.write(s);
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Marcum/Nuttall, incomplete Toronto, Rice Ie and ILHI evaluator"};
    app.require_subcommand(1);

    // eval
    auto* ev = app.add_subcommand("eval", "evaluate one function");
    std::string ev_fn, ev_method;
    int ev_terms = 20;
    Params ev_p;
    Output ev_out;
    ev->add_option("function", ev_fn, "nuttall, toronto, rice-ie or ilhi")
        ->required()
        ->check(CLI::IsMember({"nuttall", "toronto", "rice-ie", "ilhi"}));
    ev_p.add(ev);
    ev->add_option("--method", ev_method, "route; defaults to the exact series (humbert for rice-ie)");
    ev->add_option("--p,--L", ev_terms, "terms for the poly route")->check(CLI::PositiveNumber)->capture_default_str();
    ev_out.add(ev);

    // bounds
    auto* bd = app.add_subcommand("bounds", "closed-form bounds and optional truncation bound");
    std::string bd_fn;
    Params bd_p;
    std::optional<int> bd_trunc;
    Output bd_out;
    bd->add_option("function", bd_fn)->required()->check(CLI::IsMember({"nuttall", "toronto", "rice-ie", "ilhi"}));
    bd_p.add(bd);
    bd->add_option("--p,--L", bd_trunc, "also report the truncation bound for this many terms")
        ->check(CLI::PositiveNumber);
    bd_out.add(bd);

    // table
    auto* tb = app.add_subcommand("table", "reproduce a reference accuracy table");
    std::string tb_id;
    Output tb_out;
    tb->add_option("id", tb_id, "I, II, III, IV or V")->required()->check(CLI::IsMember({"I", "II", "III", "IV", "V"}));
    tb_out.add(tb);

    // sweep
    auto* sw = app.add_subcommand("sweep", "evaluate every route over a one- or two-parameter grid");
    std::string sw_target;
    Params sw_p;
    ModelFlags sw_m;
    std::vector<std::string> sw_grid;
    int sw_terms = 20;
    Output sw_out;
    sw->add_option("target", sw_target)
        ->required()
        ->check(CLI::IsMember({"nuttall", "toronto", "rice-ie", "ilhi", "outage"}));
    sw_p.add(sw);
    sw->add_option("--grid", sw_grid, "name=start:stop:count, once or twice")->required();
    sw->add_option("--p,--L", sw_terms, "terms for the poly route")->check(CLI::PositiveNumber)->capture_default_str();
    // model flags are optional here and checked for outage sweeps
    sw->add_option("--model", sw_m.model)
        ->check(CLI::IsMember({"alpha-eta-mu", "alpha-lambda-mu", "alpha-kappa-mu", "eta-mu", "lambda-mu", "kappa-mu",
                               "rician"}));
    sw->add_option("--alpha", sw_m.alpha)->check(kStrictReal);
    sw->add_option("--eta", sw_m.eta)->check(kStrictReal);
    sw->add_option("--lambda", sw_m.lambda)->check(kStrictReal);
    sw->add_option("--kappa", sw_m.kappa)->check(kStrictReal);
    sw->add_option("--mu", sw_m.mu)->check(kStrictReal);
    sw->add_option("--n-rice", sw_m.n_rice)->check(kStrictReal);
    auto* swg = sw->add_option("--gamma-bar", sw_m.gamma_bar)->check(kStrictReal);
    sw->add_option("--gamma-bar-db", sw_m.gamma_bar_db)->check(kStrictReal)->excludes(swg);
    sw_out.add(sw, "csv");

    // outage
    auto* ou = app.add_subcommand("outage", "outage probability for a fading model");
    ModelFlags ou_m;
    std::optional<double> ou_th, ou_th_db;
    std::string ou_route = "analytic";
    Output ou_out;
    ou_m.add(ou);
    auto* out_th = ou->add_option("--gamma-th", ou_th, "threshold SNR, linear")->check(kStrictReal);
    ou->add_option("--gamma-th-db", ou_th_db, "threshold SNR in dB")->check(kStrictReal)->excludes(out_th);
    ou->add_option("--route", ou_route)->check(CLI::IsMember({"analytic", "oracle", "humbert"}))->capture_default_str();
    ou_out.add(ou);

    // capacity
    auto* cp = app.add_subcommand("capacity", "truncated channel inversion capacity and optimum cutoff");
    CapacityFlags cp_f;
    Output cp_out;
    cp_f.add(cp);
    cp_out.add(cp);

    // verify
    auto* vf = app.add_subcommand("verify", "run the property and identity suites");
    VerifyOptions vo;
    Output vf_out;
    vf->add_option("--draws", vo.draws, "random queries per function")->check(CLI::PositiveNumber)->capture_default_str();
    vf->add_option("--seed", vo.seed)->capture_default_str();
    vf->add_option("--tol", vo.tol, "route-vs-oracle tolerance")->check(kStrictReal)->capture_default_str();
    vf->add_option("--group", vo.groups, "oracle, bounds, identities, special, fading, capacity");
    vf_out.add(vf, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*ev) return cmd_eval(ev_fn, ev_p, ev_method, ev_terms, ev_out);
        if (*bd) return cmd_bounds(bd_fn, bd_p, bd_trunc, bd_out);
        if (*tb) return cmd_table(tb_id, tb_out);
        if (*sw) return cmd_sweep(sw_target, sw_p, sw_m, sw_grid, sw_terms, sw_out);
        if (*ou) return cmd_outage(ou_m, ou_th, ou_th_db, ou_route, ou_out);
        if (*cp) return cmd_capacity(cp_f, cp_out);
        if (*vf) return cmd_verify(vo, vf_out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
