#include "k3fix4/error.hpp"
#include "k3fix4/render.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using namespace k3fix4;
using nlohmann::json;

namespace {

RenderOptions fmt(Format f, bool ascii = false) { return {f, ascii}; }

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

} // namespace

TEST(Render, FormatNames)
{
    EXPECT_EQ(parse_format("md"), Format::Markdown);
    EXPECT_EQ(parse_format("csv"), Format::Csv);
    EXPECT_EQ(parse_format("json"), Format::Json);
    EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Render, PropTwoCsv)
{
    const auto l = lines(render_table("prop2", fmt(Format::Csv)));
    ASSERT_EQ(l.size(), 6u);
    EXPECT_EQ(l[0], "r,l,n");
    EXPECT_EQ(l[1], "6,8,0");
    EXPECT_EQ(l[5], "10,4,8");
}

TEST(Render, Thm81Json)
{
    const json j = json::parse(render_table("thm81", fmt(Format::Json)));
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("id"), "thm81");
    EXPECT_EQ(j.at("rows").size(), 63u);
    for (const auto& r : j.at("rows")) EXPECT_EQ(r.at("m").get<int>() + r.at("l").get<int>() + 2 * r.at("k").get<int>(), 10);
}

TEST(Render, TableJsonCarriesAsciiNames)
{
    const json j = json::parse(render_table("t5", fmt(Format::Json)));
    EXPECT_EQ(j.at("columns"), json({"m", "r", "n1", "n2", "k", "g", "S", "T"}));
    EXPECT_EQ(j.at("rows").at(0).at("S"), json({"U"}));
    EXPECT_EQ(j.at("rows").at(0).at("T"), json({"U+U+E8^2"}));
}

TEST(Render, MarkdownUnicodeAndAsciiFallback)
{
    const std::string uni = render_table("t6", fmt(Format::Markdown));
    const std::string asc = render_table("t6", fmt(Format::Markdown, true));
    EXPECT_NE(uni.find("U ⊕ A1^⊕2"), std::string::npos);
    EXPECT_NE(uni.find("σ"), std::string::npos);
    EXPECT_EQ(asc.find("⊕"), std::string::npos);
    EXPECT_NE(asc.find("U+A1^2"), std::string::npos);
    EXPECT_EQ(render_table("t6", fmt(Format::Csv)).find("⊕"), std::string::npos);
}

TEST(Render, C1Json)
{
    const json j = json::parse(render_table("c1", fmt(Format::Json)));
    ASSERT_EQ(j.at("scenarios").size(), 4u);
    const auto& first = j.at("scenarios").at(0);
    EXPECT_EQ(first.at("id"), "irr_red");
    EXPECT_EQ(first.at("rows").size(), 9u);
    const auto& row = first.at("rows").at(0);
    EXPECT_TRUE(row.at("g_sigma2").is_null());
    EXPECT_EQ(row.at("fibers").at(0).at("type"), "III");
    EXPECT_EQ(row.at("fibers").at(0).at("variant"), "a");
    EXPECT_EQ(row.at("fibers").at(0).at("count"), 8);
}

TEST(Render, EnumerationCarriesExcludedChannel)
{
    const json j = json::parse(render_enumeration("t3", fmt(Format::Json)));
    EXPECT_EQ(j.at("rows").size(), 8u);
    ASSERT_EQ(j.at("excluded").size(), 2u);
    for (const auto& x : j.at("excluded")) {
        EXPECT_EQ(x.at("rule"), "t3_vinberg");
        EXPECT_FALSE(x.at("citation").get<std::string>().empty());
    }
    for (const auto& r : j.at("rows")) EXPECT_FALSE(r.at("trace").empty());
    const auto csv = lines(render_enumeration("t3", fmt(Format::Csv)));
    EXPECT_EQ(csv.size(), 11u);
    EXPECT_EQ(csv[0].rfind("status,", 0), 0u);
}

TEST(Render, LatticeInvariants)
{
    const json j = json::parse(render_lattice_invariants("U", fmt(Format::Json)));
    EXPECT_EQ(j.at("rho"), 2);
    EXPECT_EQ(j.at("d"), 0);
    EXPECT_EQ(j.at("gamma"), 10);
    EXPECT_EQ(j.at("j"), 1);
    EXPECT_EQ(j.at("det"), "-1");
    const json e = json::parse(render_lattice_invariants("U(2)+E8(2)", fmt(Format::Json)));
    EXPECT_TRUE(e.at("gamma").is_null());
    EXPECT_EQ(e.at("fixed_locus"), "empty");
    const json a = json::parse(render_lattice_invariants("A2", fmt(Format::Json)));
    EXPECT_TRUE(a.contains("two_elementary"));
    EXPECT_THROW(render_lattice_invariants("D3", fmt(Format::Json)), Error);
}

TEST(Render, Audits)
{
    const json t4 = json::parse(render_audit("table4", fmt(Format::Json)));
    EXPECT_EQ(t4.at("rows").size(), 13u);
    const json iso = json::parse(render_audit("isometry", fmt(Format::Json)));
    for (const auto& r : iso.at("rows")) EXPECT_TRUE(r.at("trivial_on_discriminant").get<bool>());
    EXPECT_NE(render_audit("discriminant", fmt(Format::Markdown)).find("4*f^3 + 27*g^2"), std::string::npos);
    EXPECT_THROW(render_audit("table9", fmt(Format::Json)), Error);
}

TEST(Render, Escaping)
{
    TextTable t{"x", "", {"a", "b"}, {}, {{std::string("p,q"), std::string("r|s")}}};
    EXPECT_EQ(render(t, fmt(Format::Csv)), "a,b\n\"p,q\",r|s\n");
    EXPECT_NE(render(t, fmt(Format::Markdown)).find("r\\|s"), std::string::npos);
}
