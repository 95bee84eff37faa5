#pragma once

#include "k3fix4/fibers.hpp"
#include "k3fix4/poly.hpp"

#include <string>
#include <vector>

namespace k3fix4 {

struct DiscriminantCoefficient {
    std::string name; // g1 .. g4
    int power = 0;    // exponent of t
    MultiPoly computed;
    MultiPoly printed;
    bool equal() const { return computed == printed; }
};

struct FamilyDiscriminantReport {
    MultiPoly alpha;
    MultiPoly beta;
    MultiPoly delta; // 4 alpha^3 + 27 beta^2
    std::vector<DiscriminantCoefficient> coefficients;
    std::string convention;
    bool all_equal() const;
};

// Weierstrass family y^2 = x^3 + alpha(t) x + beta(t) with alpha, beta in t^4.
FamilyDiscriminantReport family_discriminant_coeffs();

struct VanishingCheck {
    std::string a_of_t;
    int order_at_zero = 0; // order of Delta at t = 0
    int degree = 0;        // degree of Delta in t
};

struct Y2DiscriminantReport {
    MultiPoly computed; // 4 alpha^3 + 27 beta^2 with alpha = -a, beta = 0
    MultiPoly printed;
    int unit = 0; // computed = unit * printed, 0 if not proportional by +-1
    std::string convention;
    std::vector<VanishingCheck> vanishing;
    bool ok() const { return unit == 1 || unit == -1; }
};

Y2DiscriminantReport discriminant_y2_x3_minus_ax();

// A<n> -> I_{n+1}, D<n> -> I*_{n-4}, E6 -> IV*, E7 -> III*, E8 -> II*
KodairaFiber fiber_of_root(const std::string& symbol);

struct Table4Audit {
    int no = 0;
    std::string root_part;
    int root_rank = 0;
    int mw_rank = 0;
    bool shioda_tate_ok = false; // root rank + MW rank = 18
    int euler_budget = 0;
    int residual_i1 = 0; // 24 - budget
    std::vector<std::string> fibers;
};

std::vector<Table4Audit> audit_table4();

} // namespace k3fix4
