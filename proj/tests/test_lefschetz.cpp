#include "k3fix4/error.hpp"
#include "k3fix4/lefschetz.hpp"

#include <gtest/gtest.h>

using namespace k3fix4;

TEST(Lefschetz, ExactlyOnTheLine)
{
    const GaussianRational target = expected_lefschetz();
    EXPECT_EQ(target.re, 1);
    EXPECT_EQ(target.im, -1);
    for (long alpha = -5; alpha <= 10; ++alpha)
        for (long n = 0; n <= 30; ++n)
            EXPECT_EQ(holomorphic_lefschetz(n, alpha) == target, n == 2 * alpha + 4) << n << " " << alpha;
}

TEST(Lefschetz, KnownValues)
{
    // det(I - diag(-i, -1)) = 2 + 2i, so n / (2 + 2i) = n (1 - i) / 4
    const GaussianRational v = holomorphic_lefschetz(4, 0);
    EXPECT_EQ(v.re, 1);
    EXPECT_EQ(v.im, -1);
    const GaussianRational w = holomorphic_lefschetz(2, 0);
    EXPECT_EQ(w.re, mpq_class(1, 2));
    EXPECT_EQ(w.im, mpq_class(-1, 2));
    const GaussianRational z = holomorphic_lefschetz(0, 1);
    EXPECT_EQ(z.re, mpq_class(-1, 2));
    EXPECT_EQ(z.im, mpq_class(1, 2));
}

TEST(Lefschetz, GaussianArithmetic)
{
    const GaussianRational a{1, 2}, b{3, -1};
    EXPECT_EQ(a * b, (GaussianRational{5, 5}));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a + b - b, a);
    const GaussianRational zero{0, 0};
    EXPECT_THROW(a / zero, Error);
}

TEST(SymplecticSquare, Cases)
{
    using T = std::tuple<int, int, int>;
    EXPECT_EQ(symplectic_square_cases(),
              (std::vector<T>{{6, 8, 0}, {7, 7, 2}, {8, 6, 4}, {9, 5, 6}, {10, 4, 8}}));
}

TEST(Relations, GenericRowHolds)
{
    // r=6 l=4 m=6, n=4 k=0 a=0: sigma fixes an elliptic curve, sigma^2 a second one
    FixedLocusData fl;
    fl.n = 4;
    fl.genera = {1};
    fl.g_top = 1;
    const auto rep = check_order4_relations({6, 4, 6}, fl);
    EXPECT_EQ(fl.alpha(), 0);
    for (const auto& r : rep) EXPECT_TRUE(!r.applicable || r.holds) << r.id;
    EXPECT_TRUE(all_applicable_hold(rep));
}

TEST(Relations, BrokenRankSum)
{
    FixedLocusData fl;
    fl.n = 4;
    const auto rep = check_order4_relations({6, 4, 7}, fl);
    EXPECT_FALSE(all_applicable_hold(rep));
    EXPECT_FALSE(rep.front().holds);
}

TEST(Relations, ContextGatedRelation)
{
    FixedLocusData fl;
    fl.n = 4;
    fl.g_top = 3;
    for (const auto& r : check_order4_relations({6, 4, 6}, fl))
        if (r.id == "l_minus_m") {
            EXPECT_FALSE(r.applicable);
        }
}

TEST(Moduli, Dimensions)
{
    EXPECT_EQ(moduli_dimension(ModuliKind::PurelyNonSymplectic, {6, 4, 6}), 5);
    EXPECT_EQ(moduli_dimension(ModuliKind::SymplecticSquare, {6, 8, 4}), 6);
    EXPECT_THROW(moduli_dimension(ModuliKind::PurelyNonSymplectic, {22, 0, 0}), Error);
}

TEST(Bounds, HodgeAndRiemannHurwitz)
{
    EXPECT_TRUE(hodge_index_bound(-2, 1, 1, true));
    EXPECT_TRUE(hodge_index_bound(4, 2, 1, false));
    EXPECT_FALSE(hodge_index_bound(10, 1, 2, false));
    EXPECT_TRUE(riemann_hurwitz_ok(0, 2));
    EXPECT_FALSE(riemann_hurwitz_ok(0, 4));
    EXPECT_TRUE(riemann_hurwitz_ok(3, 8));
    EXPECT_THROW(riemann_hurwitz_ok(2, 3), Error);
    EXPECT_THROW(riemann_hurwitz_ok(-1, 0), Error);
}
