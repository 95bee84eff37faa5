#pragma once

#include "k3fix4/lattice.hpp"

#include <string>
#include <vector>

namespace k3fix4 {

struct IsometryCheck {
    bool isometry = false;       // t^T G t == G
    bool squares_to_minus = false;
    bool trivial_on_discriminant = false;

    bool ok() const { return isometry && squares_to_minus && trivial_on_discriminant; }
};

IsometryCheck check_square_root_of_minus_identity(const Lattice& l, const IntMatrix& t);

// Supported: direct sums of U+U, U+U(2), E8 and D4k blocks, in any order.
// Each U must be followed by U or U(2). Throws Error otherwise or if a block fails its checks.
IntMatrix square_root_of_minus_identity(const LatticeExpr& expr);

// Coordinates of the simple roots (columns) for D_n and E_8, matching the Gram convention
// of make_lattice up to the overall sign.
RatMatrix root_coordinates(const Atom& atom);

} // namespace k3fix4
