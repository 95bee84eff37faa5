#include "k3fix4/golden.hpp"

#include "k3fix4/error.hpp"

#include <nlohmann/json.hpp>

namespace k3fix4 {

namespace detail {
struct EmbeddedFile {
    const char* name;
    const char* text;
};
extern const EmbeddedFile kEmbedded[];
extern const std::size_t kEmbeddedCount;
} // namespace detail

using nlohmann::json;

int CaseRow::get(const std::string& c) const
{
    if (c == "m") return m;
    if (c == "r") return r;
    if (c == "l") return l;
    if (c == "n") return n;
    if (c == "n1") return n1;
    if (c == "n2") return n2;
    if (c == "k") return k;
    if (c == "a") return a;
    if (c == "g") return g;
    throw Error("unknown integer column '" + c + "'");
}

std::string_view embedded_json(std::string_view name)
{
    for (std::size_t i = 0; i < detail::kEmbeddedCount; ++i)
        if (name == detail::kEmbedded[i].name) return detail::kEmbedded[i].text;
    throw Error("no embedded data named '" + std::string(name) + "'");
}

std::vector<std::string> embedded_names()
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < detail::kEmbeddedCount; ++i) out.emplace_back(detail::kEmbedded[i].name);
    return out;
}

namespace {

json load(std::string_view name)
{
    json j = json::parse(embedded_json(name));
    if (j.value("schema", 0) != 1) throw Error("unsupported schema in " + std::string(name));
    return j;
}

std::vector<std::string> strings(const json& v)
{
    std::vector<std::string> out;
    if (v.is_string())
        out.push_back(v.get<std::string>());
    else
        for (const auto& s : v) out.push_back(s.get<std::string>());
    return out;
}

CaseRow parse_row(const json& o)
{
    CaseRow row;
    auto num = [&](const char* key, int& dst) {
        if (o.contains(key)) dst = o.at(key).get<int>();
    };
    num("m", row.m);
    num("r", row.r);
    num("l", row.l);
    num("n", row.n);
    num("n1", row.n1);
    num("n2", row.n2);
    num("k", row.k);
    num("a", row.a);
    num("g", row.g);
    if (o.contains("fiber")) row.fibers = strings(o.at("fiber"));
    if (o.contains("S")) row.s_names = strings(o.at("S"));
    if (o.contains("T")) row.t_names = strings(o.at("T"));
    row.printed_twice = o.value("printed_twice", false);
    return row;
}

GoldenTable from_json(const json& j)
{
    GoldenTable t;
    t.id = j.at("id").get<std::string>();
    t.title = j.value("title", "");
    t.columns = strings(j.at("columns"));
    for (const auto& r : j.at("rows")) t.rows.push_back(parse_row(r));
    return t;
}

const std::map<std::string, GoldenTable>& tables()
{
    static const std::map<std::string, GoldenTable> t = [] {
        std::map<std::string, GoldenTable> m;
        for (const char* f : {"prop2", "table1", "table2", "table3", "table5", "table6", "table7"}) {
            GoldenTable g = from_json(load(f));
            m.emplace(g.id, std::move(g));
        }
        return m;
    }();
    return t;
}

Corollary1Row parse_c1_row(const json& o)
{
    Corollary1Row row;
    if (!o.at("g_sigma").is_null()) row.g_sigma = o.at("g_sigma").get<int>();
    if (!o.at("g_sigma2").is_null()) row.g_sigma2 = o.at("g_sigma2").get<int>();
    row.n = o.at("n").get<int>();
    row.k = o.at("k").get<int>();
    row.a = o.at("a").get<int>();
    for (const auto& f : o.at("fibers")) {
        const std::string type = f.at("type").get<std::string>();
        const std::string var = f.at("variant").get<std::string>();
        bool found = false;
        for (std::size_t i = 0; i < kActionCount; ++i)
            if (type_name(kActions[i]) == type && std::string(1, variant_of(kActions[i])) == var) {
                row.counts[i] += f.at("count").get<int>();
                found = true;
            }
        if (!found) throw Error("unknown fiber action " + type + " " + var);
    }
    return row;
}

} // namespace

GoldenTable parse_golden_table(std::string_view json_text)
{
    return from_json(json::parse(json_text));
}

const GoldenTable& golden_table(const std::string& id)
{
    auto it = tables().find(id);
    if (it == tables().end()) throw Error("no golden table '" + id + "'");
    return it->second;
}

const std::vector<GoldenExcludedT2>& golden_table2_excluded()
{
    static const std::vector<GoldenExcludedT2> v = [] {
        std::vector<GoldenExcludedT2> out;
        const json j = load("table2");
        for (const auto& e : j.at("excluded"))
            out.push_back({e.at("r").get<int>(), e.at("k").get<int>(), e.at("g").get<int>(), e.at("a").get<int>(),
                           strings(e.at("lattices"))});
        return out;
    }();
    return v;
}

const std::vector<GoldenExcludedT3>& golden_table3_excluded()
{
    static const std::vector<GoldenExcludedT3> v = [] {
        std::vector<GoldenExcludedT3> out;
        const json j = load("table3");
        for (const auto& e : j.at("excluded"))
            out.push_back({e.at("r").get<int>(), e.at("k").get<int>(), e.at("a").get<int>()});
        return out;
    }();
    return v;
}

const std::vector<std::string>& golden_table5_excluded_lattices()
{
    static const std::vector<std::string> v = strings(load("table5").at("excluded_lattices"));
    return v;
}

std::string golden_title(std::string_view name)
{
    return load(name).value("title", std::string());
}

const GoldenThm81& golden_thm81()
{
    static const GoldenThm81 v = [] {
        json j = load("thm81");
        GoldenThm81 out;
        out.count = j.at("count").get<int>();
        for (const auto& b : j.at("bounds"))
            out.bounds.push_back({b.at("m_plus_l").get<int>(), b.at("k").get<int>(), b.at("g_max").get<int>(),
                                  b.at("a_max").get<int>()});
        return out;
    }();
    return v;
}

const std::vector<GoldenScenario>& golden_corollary1()
{
    static const std::vector<GoldenScenario> v = [] {
        std::vector<GoldenScenario> out;
        const json j = load("corollary1");
        for (const auto& s : j.at("scenarios")) {
            GoldenScenario g;
            g.id = s.at("id").get<std::string>();
            g.scenario.sigma_reducible = s.at("sigma").get<std::string>() == "reducible";
            g.scenario.sigma2_reducible = s.at("sigma2").get<std::string>() == "reducible";
            for (const auto& r : s.at("rows")) g.rows.push_back(parse_c1_row(r));
            out.push_back(std::move(g));
        }
        return out;
    }();
    return v;
}

const std::vector<GoldenTable4Row>& golden_table4()
{
    static const std::vector<GoldenTable4Row> v = [] {
        std::vector<GoldenTable4Row> out;
        const json j = load("table4");
        for (const auto& r : j.at("rows")) {
            GoldenTable4Row row;
            row.no = r.at("no").get<int>();
            row.root_part = r.at("R").get<std::string>();
            row.mw_rank = r.at("mw_rank").get<int>();
            row.torsion = r.at("torsion").get<std::vector<int>>();
            if (r.at("a").is_null())
                row.a_known = false;
            else
                row.a_values = r.at("a").get<std::vector<int>>();
            out.push_back(std::move(row));
        }
        return out;
    }();
    return v;
}

const GoldenDiscriminants& golden_discriminants()
{
    static const GoldenDiscriminants v = [] {
        json j = load("discriminants");
        GoldenDiscriminants out;
        const json& f = j.at("family");
        out.variables = strings(f.at("variables"));
        out.alpha = f.at("alpha").get<std::string>();
        out.beta = f.at("beta").get<std::string>();
        for (const auto& c : f.at("coefficients"))
            out.coefficients.push_back(
                {c.at("name").get<std::string>(), c.at("power").get<int>(), c.at("value").get<std::string>()});
        out.y2_printed = j.at("y2_x3_minus_ax").at("printed").get<std::string>();
        return out;
    }();
    return v;
}

} // namespace k3fix4
