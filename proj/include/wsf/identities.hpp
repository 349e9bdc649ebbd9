#pragma once

#include <string>
#include <vector>

namespace wsf {

enum class IdentityId { kdf_toronto, kdf_nuttall, phi1_ilhi, phi1_marcum };

const char* identity_name(IdentityId id);

// One side-by-side evaluation.  A refused point carries the reason and no
// residual.
struct IdentityReport {
    IdentityId id = IdentityId::kdf_toronto;
    std::vector<double> point;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs| / max(1, |lhs|)
    bool refused = false;
    std::string reason;
};

// F(a, a+1, b; x, -y) against the Toronto form and against the Nuttall form.
std::vector<IdentityReport> check_kdf_identities(double a, double b, double x, double y);

// Phi1(a,1,2a; x,y) against 2F1 and an ILHI, and Phi1(1/2,1,1; x,y) against
// first-order Marcum functions.
std::vector<IdentityReport> check_humbert_identities(double a, double x, double y);

// Both checks over the default grids.
std::vector<IdentityReport> identity_suite();

}  // namespace wsf
