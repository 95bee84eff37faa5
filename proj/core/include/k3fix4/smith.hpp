#pragma once

#include "k3fix4/matrix.hpp"

namespace k3fix4 {

// u * m * v == d, u and v unimodular, d diagonal with d[i] | d[i+1], d[i] >= 0.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& m);

} // namespace k3fix4
