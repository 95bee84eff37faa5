#include "k3fix4/isometry.hpp"

#include "k3fix4/error.hpp"
#include "k3fix4/smith.hpp"

namespace k3fix4 {

IsometryCheck check_square_root_of_minus_identity(const Lattice& l, const IntMatrix& t)
{
    IsometryCheck c;
    const IntMatrix& g = l.gram();
    const std::size_t n = l.dim();
    if (t.rows() != n || t.cols() != n) return c;
    c.isometry = t.transpose() * g * t == g;
    c.squares_to_minus = t * t == -IntMatrix::identity(n);

    // dual representatives are v_i / d_i; (t - 1) v_i must be divisible by d_i
    SmithForm s = smith_normal_form(g);
    IntMatrix diff = t - IntMatrix::identity(n);
    IntMatrix moved = diff * s.v;
    c.trivial_on_discriminant = true;
    for (std::size_t j = 0; j < n && c.trivial_on_discriminant; ++j) {
        const Int& d = s.d(j, j);
        if (d == 0) {
            c.trivial_on_discriminant = false;
            break;
        }
        if (d == 1) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!mpz_divisible_p(moved(i, j).get_mpz_t(), d.get_mpz_t())) {
                c.trivial_on_discriminant = false;
                break;
            }
    }
    return c;
}

RatMatrix root_coordinates(const Atom& atom)
{
    const auto n = static_cast<std::size_t>(atom.n);
    RatMatrix b(n, n);
    if (atom.kind == AtomKind::D) {
        // e_i - e_{i+1} for the chain, e_{n-1} + e_n on the branch
        for (std::size_t i = 0; i + 1 < n; ++i) {
            b(i, i) = 1;
            b(i + 1, i) = -1;
        }
        b(n - 2, n - 1) = 1;
        b(n - 1, n - 1) = 1;
        return b;
    }
    if (atom.kind == AtomKind::E && atom.n == 8) {
        // Bourbaki roots, chain a1 a3 a4 a5 a6 a7 a8 with a2 on a4
        const Rat h(1, 2);
        b(0, 0) = h;
        for (std::size_t i = 1; i < 7; ++i) b(i, 0) = -h;
        b(7, 0) = h;
        b(0, 1) = -1; // a3 = e2 - e1
        b(1, 1) = 1;
        for (std::size_t c = 2; c < 7; ++c) { // a4..a8 = e_{c+1} - e_c
            b(c - 1, c) = -1;
            b(c, c) = 1;
        }
        b(0, 7) = 1; // a2 = e1 + e2
        b(1, 7) = 1;
        return b;
    }
    throw Error("no coordinate model for this atom");
}

namespace {

IntMatrix uu_block()
{
    // basis e1 f1 e2 f2: e1 -> e2, f1 -> f2, e2 -> -e1, f2 -> -f1
    IntMatrix t(4, 4);
    t(2, 0) = 1;
    t(3, 1) = 1;
    t(0, 2) = -1;
    t(1, 3) = -1;
    return t;
}

IntMatrix uu2_block()
{
    return IntMatrix{{-1, 0, 2, 0}, {0, 1, 0, 2}, {-1, 0, 1, 0}, {0, -1, 0, -1}};
}

IntMatrix rotation_block(const Atom& atom)
{
    const auto n = static_cast<std::size_t>(atom.n);
    RatMatrix r(n, n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        r(i + 1, i) = 1;  // x_{2i-1} -> x_{2i}
        r(i, i + 1) = -1; // x_{2i} -> -x_{2i-1}
    }
    RatMatrix b = root_coordinates(atom);
    return to_integer(inverse(b) * r * b);
}

bool supported_rotation(const Atom& a)
{
    if (a.twist != 1) return false;
    if (a.kind == AtomKind::E) return a.n == 8;
    if (a.kind == AtomKind::D) return a.n % 4 == 0;
    return false;
}

} // namespace

IntMatrix square_root_of_minus_identity(const LatticeExpr& expr)
{
    // expand powers so U-pairing sees individual summands
    std::vector<Atom> atoms;
    for (Atom a : expr.terms) {
        int p = a.power;
        a.power = 1;
        for (int i = 0; i < p; ++i) atoms.push_back(a);
    }
    IntMatrix t;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const Atom& a = atoms[i];
        IntMatrix block;
        Lattice lat;
        if (a.kind == AtomKind::U && a.twist == 1) {
            if (i + 1 >= atoms.size() || atoms[i + 1].kind != AtomKind::U ||
                (atoms[i + 1].twist != 1 && atoms[i + 1].twist != 2))
                throw Error("U must pair with a following U or U(2)");
            block = atoms[i + 1].twist == 1 ? uu_block() : uu2_block();
            lat = make_lattice(LatticeExpr{{a, atoms[i + 1]}});
            ++i;
        } else if (supported_rotation(a)) {
            block = rotation_block(a);
            lat = make_atom(a);
        } else {
            throw Error("unsupported summand for a square root of -1: " + to_ascii(LatticeExpr{{a}}));
        }
        if (!check_square_root_of_minus_identity(lat, block).ok())
            throw Error("block construction failed its checks");
        t = t.empty() ? block : block_diagonal(t, block);
    }
    return t;
}

} // namespace k3fix4
