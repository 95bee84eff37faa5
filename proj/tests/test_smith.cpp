#include "k3fix4/smith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace k3fix4;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

bool is_unit(const Int& d) { return d == 1 || d == -1; }

} // namespace

TEST(Smith, KnownForms)
{
    // diag(2, 4) is already normal; diag(4, 6) becomes diag(2, 12)
    SmithForm a = smith_normal_form(IntMatrix{{2, 0}, {0, 4}});
    EXPECT_EQ(a.d, (IntMatrix{{2, 0}, {0, 4}}));
    SmithForm b = smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
    EXPECT_EQ(b.d, (IntMatrix{{2, 0}, {0, 12}}));
    SmithForm z = smith_normal_form(IntMatrix{{0, 0}, {0, 0}});
    EXPECT_EQ(z.d, (IntMatrix{{0, 0}, {0, 0}}));
}

TEST(Smith, RandomProperties)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t rows = size(rng), cols = size(rng);
        const IntMatrix m = random_matrix(rng, rows, cols);
        const SmithForm s = smith_normal_form(m);
        ASSERT_EQ(s.u * m * s.v, s.d) << "trial " << trial;
        ASSERT_TRUE(is_unit(determinant(s.u))) << "trial " << trial;
        ASSERT_TRUE(is_unit(determinant(s.v))) << "trial " << trial;
        const std::size_t r = std::min(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) {
                    ASSERT_EQ(s.d(i, j), 0);
                }
        for (std::size_t i = 0; i < r; ++i) ASSERT_GE(s.d(i, i), 0);
        for (std::size_t i = 0; i + 1 < r; ++i) {
            if (s.d(i, i) == 0)
                ASSERT_EQ(s.d(i + 1, i + 1), 0);
            else
                ASSERT_TRUE(mpz_divisible_p(s.d(i + 1, i + 1).get_mpz_t(), s.d(i, i).get_mpz_t()));
        }
    }
}

TEST(Smith, DeterminantMatchesInvariantFactors)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix m = random_matrix(rng, 5, 5);
        const SmithForm s = smith_normal_form(m);
        Int prod = 1;
        for (std::size_t i = 0; i < 5; ++i) prod *= s.d(i, i);
        EXPECT_EQ(prod, abs(determinant(m)));
    }
}
