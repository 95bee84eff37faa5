#include "k3fix4/error.hpp"
#include "k3fix4/fibration.hpp"
#include "k3fix4/poly.hpp"

#include <gtest/gtest.h>

using namespace k3fix4;

TEST(Poly, Arithmetic)
{
    const std::vector<std::string> v = {"x", "y"};
    const MultiPoly p = parse_poly("x + y", v);
    const MultiPoly sq = p.pow(2);
    EXPECT_EQ(sq, parse_poly("x^2 + 2*x*y + y^2", v));
    EXPECT_EQ(sq.coefficient("x", 1), parse_poly("2*y", v));
    EXPECT_EQ(sq.degree_in("y"), 2);
    EXPECT_EQ((p - p).lowest_degree_in("x"), -1);
    EXPECT_EQ(parse_poly("3*x^2*y - x", v).to_string(), "3*x^2*y - x");
    EXPECT_EQ(parse_poly("-(x - 1)*(x + 1)", v), parse_poly("1 - x^2", v));
    EXPECT_THROW(parse_poly("x +", v), ParseError);
    EXPECT_THROW(parse_poly("z", v), ParseError);
}

TEST(Discriminant, FamilyCoefficients)
{
    const FamilyDiscriminantReport r = family_discriminant_coeffs();
    ASSERT_EQ(r.coefficients.size(), 4u);
    EXPECT_TRUE(r.all_equal());
    const std::vector<std::string> v = {"t", "f", "g", "a", "b", "c", "d", "e"};
    // hand expansion of the t^24 and t^20 coefficients
    EXPECT_EQ(r.coefficients[0].computed, parse_poly("4*f^3 + 27*g^2", v));
    EXPECT_EQ(r.coefficients[1].computed, parse_poly("12*f^2*a + 54*g*c", v));
    EXPECT_EQ(r.delta.degree_in("t"), 24);
    EXPECT_EQ(r.delta.coefficient("t", 0), parse_poly("4*b^3 + 27*e^2", v));
}

TEST(Discriminant, PureCubicFamily)
{
    const Y2DiscriminantReport r = discriminant_y2_x3_minus_ax();
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.unit, -1);
    ASSERT_EQ(r.vanishing.size(), 3u);
    EXPECT_EQ(r.vanishing[0].order_at_zero, 0);
    EXPECT_EQ(r.vanishing[1].order_at_zero, 3);
    EXPECT_EQ(r.vanishing[2].order_at_zero, 0);
    EXPECT_EQ(r.vanishing[2].degree, 24);
}

TEST(Table4, RootToFiber)
{
    EXPECT_EQ(fiber_of_root("A1"), (KodairaFiber{FiberTag::I, 2}));
    EXPECT_EQ(fiber_of_root("A17"), (KodairaFiber{FiberTag::I, 18}));
    EXPECT_EQ(fiber_of_root("D4"), (KodairaFiber{FiberTag::IStar, 0}));
    EXPECT_EQ(fiber_of_root("D18"), (KodairaFiber{FiberTag::IStar, 14}));
    EXPECT_EQ(fiber_of_root("E6"), (KodairaFiber{FiberTag::IVStar, 0}));
    EXPECT_EQ(fiber_of_root("E7"), (KodairaFiber{FiberTag::IIIStar, 0}));
    EXPECT_EQ(fiber_of_root("E8"), (KodairaFiber{FiberTag::IIStar, 0}));
    EXPECT_THROW(fiber_of_root("U"), Error);
    EXPECT_THROW(fiber_of_root("D4^2"), Error);
}

// Residuals 24 - sum e(F) worked by hand from the root types:
// E8^2+A1^2 = 10+10+2+2, E8+D10 = 10+12, D16+A1^2 = 18+2+2, E7^2+D4 = 9+9+6,
// E7+D10+A1 = 9+12+2, A17+A1 = 18+2, D18 = 20, D12+D6 = 14+8, D8^2+A1^2 = 10+10+2+2,
// A15+A3 = 16+4, E6+A11 = 8+12, D6^3 = 8+8+8, A9^2 = 10+10
TEST(Table4, Residuals)
{
    const std::vector<int> want = {0, 2, 2, 0, 1, 4, 4, 2, 0, 4, 4, 0, 4};
    const auto audit = audit_table4();
    ASSERT_EQ(audit.size(), 13u);
    for (std::size_t i = 0; i < audit.size(); ++i) {
        EXPECT_EQ(audit[i].no, static_cast<int>(i + 1));
        EXPECT_TRUE(audit[i].shioda_tate_ok) << audit[i].root_part;
        EXPECT_GE(audit[i].residual_i1, 0);
        EXPECT_EQ(audit[i].residual_i1, want[i]) << audit[i].root_part;
    }
}
