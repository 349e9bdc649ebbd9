#include "wsf/hypergeometric.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "wsf/common.hpp"

namespace wsf {

namespace {

constexpr double kTermTol = 1e-17;

struct Neumaier {
    double s = 0.0;
    double c = 0.0;
    void add(double v) {
        double t = s + v;
        if (std::fabs(s) >= std::fabs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

bool nonpositive_int(double x) { return x <= 0.0 && is_int(x); }

double kummer_series(double a, double b, double x) {
    Neumaier sum;
    double t = 1.0;
    sum.add(t);
    for (int l = 0; l < 10000; ++l) {
        double ratio = (a + l) * x / ((b + l) * (l + 1.0));
        t *= ratio;
        sum.add(t);
        if (t == 0.0) return sum.value();
        if (std::fabs(t) <= kTermTol * std::fabs(sum.value()) && std::fabs(ratio) < 0.5) return sum.value();
        if (!std::isfinite(t)) throw RangeError("kummer_1f1: overflow");
    }
    throw ConvergenceError("kummer_1f1: no convergence in 10^4 terms");
}

// Sum of prefactor_s * sum_{j<=s} A_j v_{s-j} over diagonals s, with the
// three-quiet-diagonals stopping rule.  Ratio callbacks give A_{j+1}/A_j,
// v_{j+1}/v_j and P_{s+1}/P_s.
template <class RA, class RV, class RP>
double diagonal_sum(RA ra, RV rv, RP rp, const char* who, bool detect_cancellation) {
    std::vector<double> A{1.0};
    std::vector<double> v{1.0};
    double P = 1.0;
    Neumaier total;
    double maxmag = 0.0;
    int quiet = 0;
    for (int s = 0; s < 10000; ++s) {
        if (s > 0) {
            A.push_back(A.back() * ra(s - 1));
            v.push_back(v.back() * rv(s - 1));
            P *= rp(s - 1);
        }
        Neumaier diag;
        for (int j = 0; j <= s; ++j) {
            double t = P * A[j] * v[s - j];
            diag.add(t);
            maxmag = std::max(maxmag, std::fabs(t));
        }
        double d = diag.value();
        total.add(d);
        double tv = total.value();
        if (!std::isfinite(tv) || !std::isfinite(maxmag)) throw RangeError(std::string(who) + ": overflow");
        if (std::fabs(d) < 1e-16 * std::fabs(tv) || (d == 0.0 && tv == 0.0)) {
            if (++quiet == 3) {
                if (detect_cancellation && std::fabs(tv) < 1e-5 * maxmag)
                    throw LossOfSignificance(std::string(who) + ": catastrophic cancellation");
                return tv;
            }
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError(std::string(who) + ": no convergence in 10^4 diagonals");
}

}  // namespace

double kummer_1f1(double a, double b, double x) {
    if (nonpositive_int(b)) throw DomainError("kummer_1f1: b is a non-positive integer");
    if (x == 0.0) return 1.0;
    if (x < 0.0 && !nonpositive_int(a)) return std::exp(x) * kummer_series(b - a, b, -x);
    return kummer_series(a, b, x);
}

double gauss_2f1(double a, double b, double c, double x) {
    if (!(std::fabs(x) < 1.0)) throw DomainError("gauss_2f1: |x| must be below 1");
    if (nonpositive_int(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
    Neumaier sum;
    double t = 1.0;
    sum.add(t);
    for (int l = 0; l < 100000; ++l) {
        double ratio = (a + l) * (b + l) * x / ((c + l) * (l + 1.0));
        t *= ratio;
        sum.add(t);
        if (t == 0.0) return sum.value();
        if (std::fabs(t) <= kTermTol * std::fabs(sum.value()) && std::fabs(ratio) < 1.0) return sum.value();
    }
    throw ConvergenceError("gauss_2f1: no convergence in 10^5 terms");
}

double humbert_phi1(double a, double b, double c, double x, double y) {
    if (!(std::fabs(x) < 1.0)) throw DomainError("humbert_phi1: |x| must be below 1");
    if (nonpositive_int(c)) throw DomainError("humbert_phi1: c is a non-positive integer");
    return diagonal_sum([&](int j) { return (b + j) * x / (j + 1.0); },
                        [&](int j) { return y / (j + 1.0); },
                        [&](int s) { return (a + s) / (c + s); }, "humbert_phi1", false);
}

double kdf_f1110(double a, double c, double b, double x, double y) {
    if (nonpositive_int(c) || nonpositive_int(b)) throw DomainError("kdf_f1110: bottom parameter is a non-positive integer");
    return diagonal_sum([&](int j) { return x / ((b + j) * (j + 1.0)); },
                        [&](int j) { return y / (j + 1.0); },
                        [&](int s) { return (a + s) / (c + s); }, "kdf_f1110", true);
}

double kdf_f1110_rows(double a, double c, double b, double x, double y) {
    if (nonpositive_int(c) || nonpositive_int(b)) throw DomainError("kdf_f1110: bottom parameter is a non-positive integer");
    Neumaier sum;
    double w = 1.0;  // x^l (a)_l / ((c)_l (b)_l l!)
    double prev = std::numeric_limits<double>::infinity();
    for (int l = 0; l < 10000; ++l) {
        double t = w * kummer_1f1(a + l, c + l, y);
        sum.add(t);
        if (!std::isfinite(sum.value())) throw RangeError("kdf_f1110: overflow");
        if (t == 0.0 || (std::fabs(t) <= kTermTol * std::fabs(sum.value()) && std::fabs(t) < prev)) return sum.value();
        prev = std::fabs(t);
        w *= x * (a + l) / ((c + l) * (b + l) * (l + 1.0));
    }
    throw ConvergenceError("kdf_f1110: row sum did not converge");
}

}  // namespace wsf
