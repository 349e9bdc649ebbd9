#pragma once

#include <stdexcept>
#include <string>

namespace wsf {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct RangeError : std::range_error {
    using std::range_error::range_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised by double series whose partial sums cancel too much to be trusted.
struct LossOfSignificance : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AccuracyError : std::runtime_error {
    AccuracyError(const std::string& what, double best, double err)
        : std::runtime_error(what), best(best), err(err) {}
    double best;
    double err;
};
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Method {
    kdf,
    poly,
    series,
    oracle,
    halfint,
    odd,
    via_nuttall,
    humbert,
    mn_integer,
    neg_n,
    zero,
    marcum,
};

const char* method_name(Method m);
Method method_from_name(const std::string& s);

struct EvalResult {
    double value = 0.0;
    Method method = Method::oracle;
    double est_error = 0.0;
    int terms = 0;
};

// A bound or approximation together with whether the inputs lie in the
// region where it is known to hold.
struct FlaggedValue {
    double value = 0.0;
    bool certified = false;
};

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    bool contains(double v) const { return lower <= v && v <= upper; }
};

inline bool is_int(double x) { return x == static_cast<double>(static_cast<long long>(x)); }
inline bool is_halfint(double x) { return is_int(x - 0.5); }

}  // namespace wsf
