#include "k3fix4/fibers.hpp"
#include "k3fix4/golden.hpp"
#include "k3fix4/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace k3fix4;

namespace {

const GoldenScenario& golden_scenario(const std::string& id)
{
    for (const auto& s : golden_corollary1())
        if (s.id == id) return s;
    throw std::runtime_error("no scenario " + id);
}

bool contains(const std::vector<Corollary1Row>& rows, const Corollary1Row& r)
{
    return std::find(rows.begin(), rows.end(), r) != rows.end();
}

std::size_t index_of(ActionKind k)
{
    return static_cast<std::size_t>(std::find(kActions.begin(), kActions.end(), k) - kActions.begin());
}

} // namespace

TEST(Kodaira, EulerNumbers)
{
    EXPECT_EQ(euler_number({FiberTag::I, 0}), 0);
    EXPECT_EQ(euler_number({FiberTag::I, 7}), 7);
    EXPECT_EQ(euler_number({FiberTag::IStar, 0}), 6);
    EXPECT_EQ(euler_number({FiberTag::IStar, 4}), 10);
    EXPECT_EQ(euler_number({FiberTag::II, 0}), 2);
    EXPECT_EQ(euler_number({FiberTag::III, 0}), 3);
    EXPECT_EQ(euler_number({FiberTag::IV, 0}), 4);
    EXPECT_EQ(euler_number({FiberTag::IVStar, 0}), 8);
    EXPECT_EQ(euler_number({FiberTag::IIIStar, 0}), 9);
    EXPECT_EQ(euler_number({FiberTag::IIStar, 0}), 10);
}

TEST(Kodaira, NamesRoundTrip)
{
    for (const char* s : {"I0", "I1", "I16", "I0*", "I4*", "II", "III", "IV", "II*", "III*", "IV*"})
        EXPECT_EQ(to_string(parse_fiber(s)), s);
    EXPECT_THROW(parse_fiber("V"), std::exception);
}

TEST(InvariantFibrations, EverySumIsTwentyFour)
{
    for (const auto& s : corollary1_scenarios())
        for (const auto& r : enumerate_corollary1(s)) EXPECT_EQ(euler_sum(r.counts), 24) << scenario_id(s);
    for (const auto& g : golden_corollary1())
        for (const auto& r : g.rows) EXPECT_EQ(euler_sum(r.counts), 24) << g.id;
}

TEST(InvariantFibrations, ScenariosWithExactMatch)
{
    for (const auto& s : corollary1_scenarios()) {
        const std::string id = scenario_id(s);
        if (id == "irr_irr") continue;
        const auto rows = enumerate_corollary1(s);
        const auto& golden = golden_scenario(id).rows;
        EXPECT_EQ(rows.size(), golden.size()) << id;
        for (const auto& g : golden) EXPECT_TRUE(contains(rows, g)) << id;
    }
    EXPECT_EQ(golden_scenario("irr_red").rows.size(), 9u);
    EXPECT_EQ(golden_scenario("red_irr").rows.size(), 9u);
    EXPECT_EQ(golden_scenario("red_red").rows.size(), 1u);
}

// The printed irr/irr list is a subset; every unprinted row needs an I0* fiber of kind b).
TEST(InvariantFibrations, IrreducibleScenarioExtras)
{
    const FibrationScenario s{false, false};
    const auto rows = enumerate_corollary1(s);
    const auto& golden = golden_scenario("irr_irr").rows;
    EXPECT_EQ(golden.size(), 18u);
    for (const auto& g : golden) EXPECT_TRUE(contains(rows, g));
    std::size_t extras = 0;
    for (const auto& r : rows) {
        if (contains(golden, r)) continue;
        ++extras;
        EXPECT_GT(r.counts[index_of(ActionKind::I0b)], 0);
    }
    EXPECT_EQ(extras, 20u);
}

TEST(InvariantFibrations, CanonicalOrderIsStrict)
{
    for (const auto& s : corollary1_scenarios()) {
        const auto rows = enumerate_corollary1(s);
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) EXPECT_TRUE(canonical_less(rows[i], rows[i + 1]));
    }
}

TEST(Contributions, UniquenessSolveReproducesTable)
{
    std::vector<std::pair<FibrationScenario, Corollary1Row>> all;
    for (const auto& g : golden_corollary1())
        for (const auto& r : g.rows) all.push_back({g.scenario, r});
    const UniquenessResult u = solve_contributions(all);
    EXPECT_TRUE(u.unique);
    EXPECT_TRUE(u.consistent);
    EXPECT_EQ(u.solved, default_contributions());
}

TEST(Contributions, PerturbedTableBreaksCorollary1)
{
    ContributionTable t = default_contributions();
    t[index_of(ActionKind::I0a)].dn = 1; // was 2
    VerifyOptions o;
    o.contributions = t;
    const VerifyReport rep = verify_all(o);
    ASSERT_NE(rep.find("c1"), nullptr);
    EXPECT_FALSE(rep.find("c1")->pass);
    bool some_missing = false;
    for (const auto& d : rep.corollary1)
        if (d.scenario != "irr_irr" && !d.missing.empty()) some_missing = true;
    EXPECT_TRUE(some_missing);
}

TEST(Contributions, FormatsFiberLists)
{
    FiberCounts c{};
    c[index_of(ActionKind::IIIa)] = 6;
    c[index_of(ActionKind::I0a)] = 1;
    EXPECT_EQ(fibers_to_string(c, true), "6 III a) + I0* a)");
    EXPECT_EQ(fibers_to_string(c, false), "6 III a) + I₀* a)");
}
