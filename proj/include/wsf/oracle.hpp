#pragma once

#include <string>

namespace wsf {

enum class OracleId { nuttall, toronto, rice_ie, rice_ie_trig, ilhi };

OracleId oracle_from_name(const std::string& s);

// Quadrature of the defining integrals, memoised per exact argument tuple.
// Parameter order follows the function signatures:
//   nuttall (m, n, a, b), toronto (m, n, r, B), rice_ie (k, x), ilhi (m, n, a, x)
double oracle(OracleId id, double p0, double p1, double p2 = 0.0, double p3 = 0.0);

double oracle_nuttall(double m, double n, double a, double b);
double oracle_toronto(double m, double n, double r, double B);
double oracle_rice(double k, double x);
double oracle_rice_trig(double k, double x);
double oracle_ilhi(double m, double n, double a, double x);

// Extended-precision variants, used where relative errors near 1e-15 have to
// be resolved.
long double oracle_nuttall_ld(double m, double n, double a, double b);
long double oracle_toronto_ld(double m, double n, double r, double B);
long double oracle_rice_ld(double k, double x);
long double oracle_ilhi_ld(double m, double n, double a, double x);

}  // namespace wsf
