#include "k3fix4/error.hpp"
#include "k3fix4/golden.hpp"
#include "k3fix4/isometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

using namespace k3fix4;

namespace {

bool ok(const char* s)
{
    const LatticeExpr e = parse_lattice_expr(s);
    return check_square_root_of_minus_identity(make_lattice(e), square_root_of_minus_identity(e)).ok();
}

// All 2^4 * 4! signed permutation matrices of Z^4.
std::vector<RatMatrix> signed_permutations()
{
    std::vector<RatMatrix> out;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        for (int signs = 0; signs < 16; ++signs) {
            RatMatrix m(4, 4);
            for (int i = 0; i < 4; ++i) m(p[i], i) = (signs >> i) & 1 ? -1 : 1;
            out.push_back(m);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST(Isometry, SquareRootOfMinusIdentity)
{
    for (const char* s : {"U+U", "U+U(2)", "E8", "D4", "D8", "U+U+E8", "E8+D4", "U+U(2)+D4^2"}) EXPECT_TRUE(ok(s)) << s;
}

TEST(Isometry, TableFiveOrthogonalComplements)
{
    for (const auto& row : golden_table("t5").rows)
        for (const auto& t : row.t_names) EXPECT_TRUE(ok(t.c_str())) << t;
}

TEST(Isometry, UnsupportedThrows)
{
    EXPECT_THROW(square_root_of_minus_identity(parse_lattice_expr("A2")), Error);
    EXPECT_THROW(square_root_of_minus_identity(parse_lattice_expr("U")), Error);
}

TEST(Isometry, DetectsBrokenMatrices)
{
    const Lattice d4 = make_lattice("D4");
    const IsometryCheck id = check_square_root_of_minus_identity(d4, IntMatrix::identity(4));
    EXPECT_TRUE(id.isometry);
    EXPECT_FALSE(id.squares_to_minus);
    const IntMatrix t = square_root_of_minus_identity(parse_lattice_expr("D4"));
    EXPECT_FALSE(check_square_root_of_minus_identity(d4, t.scaled(2)).ok());
}

// Oracle: the signed permutations of Z^4 preserve D4 = {x : sum x even}. In the root basis
// they are exactly integral isometries, and those with P^2 = -I number 3 * 2 * 2 = 12.
TEST(Isometry, D4SignedPermutationOracle)
{
    const RatMatrix b = root_coordinates(parse_lattice_expr("D4").terms[0]);
    const RatMatrix binv = inverse(b);
    const IntMatrix gram = make_lattice("D4").gram();
    const RatMatrix minus = RatMatrix::identity(4).scaled(-1);
    int total = 0, square_roots = 0;
    for (const RatMatrix& p : signed_permutations()) {
        const RatMatrix m = binv * p * b;
        ASSERT_TRUE(is_integral(m));
        const IntMatrix t = to_integer(m);
        ASSERT_EQ(t.transpose() * gram * t, gram);
        ++total;
        if (p * p == minus) {
            ++square_roots;
            EXPECT_TRUE(check_square_root_of_minus_identity(make_lattice("D4"), t).squares_to_minus);
        }
    }
    EXPECT_EQ(total, 384);
    EXPECT_EQ(square_roots, 12);

    // The constructed root is one of the twelve.
    const IntMatrix tau = square_root_of_minus_identity(parse_lattice_expr("D4"));
    const RatMatrix p = b * to_rational(tau) * binv;
    const auto all = signed_permutations();
    EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());
}
