#include "k3fix4/tables.hpp"
#include "k3fix4/verify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

using namespace k3fix4;

namespace {

void expect_exact(const std::string& id, std::size_t rows)
{
    const Enumeration e = enumerate(id);
    EXPECT_EQ(e.rows.size(), rows) << id;
    const TableDiff d = diff_table(id, golden_table(id), e);
    EXPECT_TRUE(d.missing.empty()) << id;
    EXPECT_TRUE(d.extra.empty()) << id;
}

} // namespace

TEST(Tables, ExactRegeneration)
{
    expect_exact("prop2", 5);
    expect_exact("t1", 6);
    expect_exact("t2", 5);
    expect_exact("t3", 8);
    expect_exact("t5", 12);
    expect_exact("t7", 5);
}

TEST(Tables, SymplecticSquareTriples)
{
    std::set<std::tuple<int, int, int>> got;
    for (const auto& r : enumerate("prop2").rows) got.insert({r.r, r.l, r.n});
    EXPECT_EQ(got, (std::set<std::tuple<int, int, int>>{{6, 8, 0}, {7, 7, 2}, {8, 6, 4}, {9, 5, 6}, {10, 4, 8}}));
}

TEST(Tables, TableTwoExcludedChannel)
{
    const Enumeration e = enumerate("t2");
    std::set<std::tuple<int, int, int, int>> got, want;
    for (const auto& x : e.excluded) {
        EXPECT_FALSE(x.citation.empty());
        EXPECT_EQ(x.citation, exclusion_rule(x.rule_id).citation);
        got.insert({x.row.r, x.row.k, x.row.g, x.row.a});
    }
    for (const auto& x : golden_table2_excluded()) want.insert({x.r, x.k, x.g, x.a});
    EXPECT_EQ(want.size(), 4u);
    EXPECT_EQ(got, want);
    EXPECT_TRUE(check_table2_excluded_lattices(e).empty());
}

TEST(Tables, TableThreeExcludedChannel)
{
    std::set<std::tuple<int, int, int>> got, want;
    for (const auto& x : enumerate("t3").excluded) {
        EXPECT_EQ(x.rule_id, "t3_vinberg");
        got.insert({x.row.r, x.row.k, x.row.a});
    }
    for (const auto& x : golden_table3_excluded()) want.insert({x.r, x.k, x.a});
    EXPECT_EQ(want.size(), 2u);
    EXPECT_EQ(got, want);
}

TEST(Tables, TableSevenExcludedChannel)
{
    std::multiset<std::string> rules;
    for (const auto& x : enumerate("t7").excluded) rules.insert(x.rule_id);
    EXPECT_EQ(rules.count("t7_lemma4_in"), 4u);
    EXPECT_EQ(rules.count("t7_lemma4_ivstar"), 1u);
}

TEST(Tables, TableFiveLatticeNames)
{
    EXPECT_TRUE(check_table5_lattices(golden_table("t5")).empty());
}

TEST(Tables, TableSixCompleteAndTraced)
{
    const Enumeration e = enumerate("t6");
    const TableDiff d = diff_table("t6", golden_table("t6"), e);
    EXPECT_TRUE(d.missing.empty());
    EXPECT_EQ(d.extra.size(), 4u);
    for (const auto& x : d.extra) EXPECT_FALSE(x.trace.empty());
    EXPECT_TRUE(check_table6_lattices(golden_table("t6")).empty());

    std::size_t duplicated = 0;
    for (const auto& r : golden_table("t6").rows) duplicated += r.printed_twice;
    EXPECT_EQ(duplicated, 1u);
}

TEST(Tables, Thm81Counts)
{
    const Enumeration e = enumerate("thm81");
    const Thm81Counts c = theorem81_counts(e);
    EXPECT_EQ(c.tuple, 63u);
    EXPECT_EQ(c.tuple, static_cast<std::size_t>(golden_thm81().count));
    const auto bounds = theorem81_bounds(e);
    ASSERT_EQ(bounds.size(), 3u);
    const int want[3][4] = {{4, 3, 3, 2}, {6, 2, 5, 3}, {8, 1, 7, 4}};
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(bounds[i].m_plus_l, want[i][0]);
        EXPECT_EQ(bounds[i].k, want[i][1]);
        EXPECT_EQ(bounds[i].g_max, want[i][2]);
        EXPECT_EQ(bounds[i].a_max, want[i][3]);
    }
}

TEST(Tables, GoldenRowsPassBaseRelations)
{
    for (const char* id : {"prop2", "t1", "t2", "t3", "t5", "t6", "t7"}) {
        const auto v = soundness_violations(id, golden_table(id));
        EXPECT_TRUE(v.empty()) << id << ": " << (v.empty() ? "" : v.front());
    }
}

TEST(Tables, RulesAreCited)
{
    for (const auto& r : exclusion_rules()) {
        EXPECT_FALSE(r.citation.empty()) << r.id;
        EXPECT_EQ(&exclusion_rule(r.id), &r);
    }
    EXPECT_THROW(exclusion_rule("no_such_rule"), std::exception);
    EXPECT_THROW(enumerate("t4"), std::exception);
}

TEST(Mutation, DeletedGoldenRowShowsAsExtra)
{
    GoldenTable g = golden_table("t3");
    const CaseRow removed = g.rows.at(3);
    g.rows.erase(g.rows.begin() + 3);
    VerifyOptions o;
    o.golden_override["t3"] = g;
    const VerifyReport rep = verify_all(o);
    ASSERT_TRUE(rep.diffs.count("t3"));
    const auto& extra = rep.diffs.at("t3").extra;
    ASSERT_EQ(extra.size(), 1u);
    for (const auto& c : integer_columns(g)) EXPECT_EQ(extra[0].get(c), removed.get(c)) << c;
    EXPECT_FALSE(rep.find("t3")->pass);
    EXPECT_TRUE(rep.find("t1")->pass);
}

TEST(Mutation, AddedGoldenRowShowsAsMissing)
{
    GoldenTable g = golden_table("t1");
    CaseRow bogus = g.rows.front();
    bogus.a += 7;
    g.rows.push_back(bogus);
    const TableDiff d = diff_table("t1", g, enumerate("t1"));
    ASSERT_EQ(d.missing.size(), 1u);
    EXPECT_EQ(d.missing[0].a, bogus.a);
}
