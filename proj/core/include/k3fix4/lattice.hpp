#pragma once

#include "k3fix4/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3fix4 {

enum class AtomKind { U, A, D, E, Two };

struct Atom {
    AtomKind kind = AtomKind::U;
    int n = 0;     // subscript for A/D/E, unused otherwise
    int twist = 1; // L(k)
    int power = 1; // L^j

    bool operator==(const Atom&) const = default;
    int rank() const;
};

// Left-associative direct sum, flattened.
struct LatticeExpr {
    std::vector<Atom> terms;

    bool operator==(const LatticeExpr&) const = default;
    int rank() const;
};

// Grammar: atom := U | A<n> | D<n> | E6 | E7 | E8 | <2>, optional "(k)" then optional "^j";
// sum := atom ('+' atom)*. "⊕" is accepted for '+', whitespace is ignored.
LatticeExpr parse_lattice_expr(std::string_view text);

std::string to_ascii(const LatticeExpr& e);
// "U(2) ⊕ D4^⊕2"
std::string to_unicode(const LatticeExpr& e);

class Lattice {
public:
    Lattice() = default;
    explicit Lattice(IntMatrix gram); // throws unless square, symmetric

    const IntMatrix& gram() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }
    Int det() const { return determinant(gram_); }
    bool is_even() const;

private:
    IntMatrix gram_;
};

Lattice make_lattice(const LatticeExpr& expr);
Lattice make_lattice(std::string_view text);
Lattice make_atom(const Atom& atom);
Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice twist(const Lattice& l, int k);

struct DiscriminantGroup {
    std::vector<Int> elementary_divisors;
    Int order = 1;

    std::size_t length() const { return elementary_divisors.size(); }
};

DiscriminantGroup discriminant_group(const Lattice& l);

struct Signature {
    int plus = 0;
    int minus = 0;
    int zero = 0;

    bool operator==(const Signature&) const = default;
};

// Exact rational congruence diagonalization.
Signature signature(const IntMatrix& gram);

struct TwoElemProfile {
    int rho = 0;
    int d = 0;
    int delta = 0;
    int sig_plus = 0;
    int sig_minus = 0;

    bool operator==(const TwoElemProfile&) const = default;
    auto operator<=>(const TwoElemProfile&) const = default;
};

TwoElemProfile two_elementary_profile(const Lattice& l);
std::string to_string(const TwoElemProfile& p);

enum class ShapeKind { Empty, TwoElliptic, Generic };

struct InvolutionFixedShape {
    ShapeKind kind = ShapeKind::Generic;
    int gamma = 0;
    int j = 0;

    bool operator==(const InvolutionFixedShape&) const = default;
};

bool is_empty_locus_profile(const TwoElemProfile& p);
bool is_two_elliptic_profile(const TwoElemProfile& p);
InvolutionFixedShape involution_fixed_shape(const TwoElemProfile& p);
std::string to_string(const InvolutionFixedShape& s);

struct CatalogEntry {
    std::string name; // canonical ascii
    LatticeExpr expr;
    Lattice lattice;
    std::optional<TwoElemProfile> profile; // empty if not 2-elementary
};

// Every lattice named in the classification, deduplicated up to reordering of summands.
const std::vector<CatalogEntry>& catalog();
std::vector<std::string> match_catalog(const TwoElemProfile& p);
// Sort key used for dedup: summands sorted, powers expanded.
std::string summand_key(const LatticeExpr& e);

} // namespace k3fix4
