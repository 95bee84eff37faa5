#include "k3fix4/render.hpp"

#include "k3fix4/error.hpp"
#include "k3fix4/fibration.hpp"
#include "k3fix4/isometry.hpp"
#include "k3fix4/lattice.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace k3fix4 {

using ojson = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string cell_text(const Cell& c, const std::string& list_sep)
{
    struct V {
        const std::string& sep;
        std::string operator()(std::nullptr_t) const { return "-"; }
        std::string operator()(bool b) const { return b ? "yes" : "no"; }
        std::string operator()(long v) const { return std::to_string(v); }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(const std::vector<std::string>& v) const { return join(v, sep); }
    };
    return std::visit(V{list_sep}, c);
}

ojson cell_json(const Cell& c)
{
    struct V {
        ojson operator()(std::nullptr_t) const { return nullptr; }
        ojson operator()(bool b) const { return b; }
        ojson operator()(long v) const { return v; }
        ojson operator()(const std::string& s) const { return s; }
        ojson operator()(const std::vector<std::string>& v) const { return v; }
    };
    return std::visit(V{}, c);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string md_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

ojson table_json(const TextTable& t)
{
    ojson j;
    j["schema"] = 1;
    j["id"] = t.id;
    j["title"] = t.title;
    j["columns"] = t.columns;
    ojson rows = ojson::array();
    for (const auto& r : t.rows) {
        ojson o = ojson::object();
        for (std::size_t i = 0; i < t.columns.size() && i < r.size(); ++i) o[t.columns[i]] = cell_json(r[i]);
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string header_for(const std::string& col, bool unicode)
{
    if (!unicode) return col;
    if (col == "n1") return "n₁";
    if (col == "n2") return "n₂";
    if (col == "S") return "S(σ²)";
    if (col == "T") return "T(σ²)";
    if (col == "g_sigma") return "g(σ)";
    if (col == "g_sigma2") return "g(σ²)";
    if (col == "fiber") return "type of C′";
    return col;
}

std::vector<std::string> headers_for(const std::vector<std::string>& cols, bool unicode)
{
    std::vector<std::string> h;
    for (const auto& c : cols) h.push_back(header_for(c, unicode));
    return h;
}

Cell row_cell(const CaseRow& row, const std::string& col, bool unicode)
{
    if (col == "fiber") {
        std::vector<std::string> v;
        for (const auto& f : row.fibers) v.push_back(pretty_fiber(f, unicode));
        return v;
    }
    if (col == "S" || col == "T") {
        std::vector<std::string> v;
        for (const auto& s : col == "S" ? row.s_names : row.t_names) v.push_back(pretty_lattice(s, unicode));
        return v;
    }
    return static_cast<long>(row.get(col));
}

const std::vector<std::string> kThm81Columns = {"m", "l", "r", "k", "g", "a", "n1", "n2"};
const std::vector<std::string> kC1Columns = {"scenario", "g_sigma", "g_sigma2", "n", "k", "a", "fibers"};

std::vector<std::string> columns_of(const std::string& id)
{
    if (id == "thm81") return kThm81Columns;
    return golden_table(id).columns;
}

std::string title_of(const std::string& id)
{
    if (id == "thm81") return golden_title("thm81");
    return golden_table(id).title;
}

std::vector<CaseRow> ordered_rows(const std::string& id, const Enumeration& e)
{
    if (id == "thm81") return e.rows;
    return in_golden_order(golden_table(id), e.rows);
}

Cell opt_cell(const std::optional<int>& v)
{
    if (!v) return nullptr;
    return static_cast<long>(*v);
}

// Golden rows first in printed order, then anything else the enumeration produced.
std::vector<std::pair<std::string, Corollary1Row>> corollary1_rows()
{
    std::vector<std::pair<std::string, Corollary1Row>> out;
    const auto& golden = golden_corollary1();
    for (const auto& s : corollary1_scenarios()) {
        const std::string id = scenario_id(s);
        std::vector<Corollary1Row> rows = enumerate_corollary1(s);
        std::vector<bool> used(rows.size(), false);
        for (const auto& gs : golden) {
            if (gs.id != id) continue;
            for (const auto& gr : gs.rows)
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (!used[i] && rows[i] == gr) {
                        used[i] = true;
                        out.push_back({id, rows[i]});
                        break;
                    }
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i]) out.push_back({id, rows[i]});
    }
    return out;
}

ojson corollary1_row_json(const Corollary1Row& r)
{
    ojson o;
    o["g_sigma"] = r.g_sigma ? ojson(*r.g_sigma) : ojson(nullptr);
    o["g_sigma2"] = r.g_sigma2 ? ojson(*r.g_sigma2) : ojson(nullptr);
    o["n"] = r.n;
    o["k"] = r.k;
    o["a"] = r.a;
    ojson f = ojson::array();
    for (std::size_t i = 0; i < kActionCount; ++i) {
        if (!r.counts[i]) continue;
        f.push_back({{"type", type_name(kActions[i])},
                     {"variant", std::string(1, variant_of(kActions[i]))},
                     {"count", r.counts[i]}});
    }
    o["fibers"] = std::move(f);
    return o;
}

std::string render_corollary1(const RenderOptions& o)
{
    const auto rows = corollary1_rows();
    if (o.format == Format::Json) {
        ojson j;
        j["schema"] = 1;
        j["id"] = "c1";
        j["title"] = golden_title("corollary1");
        ojson scenarios = ojson::array();
        for (const auto& s : corollary1_scenarios()) {
            ojson sj;
            sj["id"] = scenario_id(s);
            sj["sigma"] = s.sigma_reducible ? "reducible" : "irreducible";
            sj["sigma2"] = s.sigma2_reducible ? "reducible" : "irreducible";
            ojson rj = ojson::array();
            for (const auto& [id, r] : rows)
                if (id == scenario_id(s)) rj.push_back(corollary1_row_json(r));
            sj["rows"] = std::move(rj);
            scenarios.push_back(std::move(sj));
        }
        j["scenarios"] = std::move(scenarios);
        return j.dump(2) + "\n";
    }
    TextTable t;
    t.id = "c1";
    t.title = golden_title("corollary1");
    t.columns = kC1Columns;
    t.headers = headers_for(t.columns, o.unicode());
    for (const auto& [id, r] : rows)
        t.rows.push_back({id, opt_cell(r.g_sigma), opt_cell(r.g_sigma2), static_cast<long>(r.n),
                          static_cast<long>(r.k), static_cast<long>(r.a), fibers_to_string(r.counts, !o.unicode())});
    return render(t, o);
}

ojson case_row_json(const CaseRow& r, const std::vector<std::string>& cols)
{
    ojson o = ojson::object();
    for (const auto& c : cols) o[c] = cell_json(row_cell(r, c, false));
    return o;
}

} // namespace

Format parse_format(std::string_view s)
{
    if (s == "md") return Format::Markdown;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw Error("unknown format '" + std::string(s) + "' (expected md, csv or json)");
}

std::string pretty_lattice(const std::string& ascii_name, bool unicode)
{
    if (!unicode) return ascii_name;
    return to_unicode(parse_lattice_expr(ascii_name));
}

std::string pretty_fiber(const std::string& s, bool unicode)
{
    static const char* const sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    if (!unicode || s.size() < 2 || s[0] != 'I' || s[1] < '0' || s[1] > '9') return s;
    std::string out = "I";
    for (std::size_t i = 1; i < s.size(); ++i)
        out += (s[i] >= '0' && s[i] <= '9') ? sub[s[i] - '0'] : std::string(1, s[i]);
    return out;
}

std::string render(const TextTable& t, const RenderOptions& o)
{
    std::ostringstream os;
    switch (o.format) {
    case Format::Json: return table_json(t).dump(2) + "\n";
    case Format::Csv:
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
        os << '\n';
        for (const auto& r : t.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(r[i], ";"));
            os << '\n';
        }
        return os.str();
    case Format::Markdown: {
        const auto& h = t.headers.empty() ? t.columns : t.headers;
        if (!t.title.empty()) os << "## " << t.title << "\n\n";
        os << '|';
        for (const auto& c : h) os << ' ' << md_escape(c) << " |";
        os << "\n|";
        for (std::size_t i = 0; i < h.size(); ++i) os << "---|";
        os << '\n';
        for (const auto& r : t.rows) {
            os << '|';
            for (const auto& c : r) os << ' ' << md_escape(cell_text(c, ", ")) << " |";
            os << '\n';
        }
        return os.str();
    }
    }
    return {};
}

std::string render_kv(const std::string& id, const std::vector<std::pair<std::string, Cell>>& kv,
                      const RenderOptions& o)
{
    std::ostringstream os;
    switch (o.format) {
    case Format::Json: {
        ojson j;
        j["schema"] = 1;
        j["id"] = id;
        for (const auto& [k, v] : kv) j[k] = cell_json(v);
        return j.dump(2) + "\n";
    }
    case Format::Csv:
        os << "key,value\n";
        for (const auto& [k, v] : kv) os << csv_field(k) << ',' << csv_field(cell_text(v, ";")) << '\n';
        return os.str();
    case Format::Markdown:
        for (const auto& [k, v] : kv) os << k << ": " << cell_text(v, ", ") << '\n';
        return os.str();
    }
    return {};
}

std::string render_table(const std::string& id, const RenderOptions& o)
{
    if (id == "c1") return render_corollary1(o);
    const Enumeration e = enumerate(id);
    TextTable t;
    t.id = id;
    t.title = title_of(id);
    t.columns = columns_of(id);
    t.headers = headers_for(t.columns, o.unicode());
    for (const auto& r : ordered_rows(id, e)) {
        std::vector<Cell> cells;
        for (const auto& c : t.columns) cells.push_back(row_cell(r, c, o.unicode()));
        t.rows.push_back(std::move(cells));
    }
    return render(t, o);
}

std::string render_enumeration(const std::string& id, const RenderOptions& o)
{
    if (id == "c1") return render_corollary1(o);
    const Enumeration e = enumerate(id);
    const auto cols = columns_of(id);
    const auto rows = ordered_rows(id, e);

    if (o.format == Format::Json) {
        ojson j;
        j["schema"] = 1;
        j["id"] = id;
        j["title"] = title_of(id);
        j["columns"] = cols;
        ojson rj = ojson::array();
        for (const auto& r : rows) {
            ojson x = case_row_json(r, cols);
            x["trace"] = r.trace;
            rj.push_back(std::move(x));
        }
        j["rows"] = std::move(rj);
        ojson ex = ojson::array();
        for (const auto& x : e.excluded)
            ex.push_back({{"rule", x.rule_id},
                          {"citation", x.citation},
                          {"row", case_row_json(x.row, cols)},
                          {"detail", x.detail}});
        j["excluded"] = std::move(ex);
        return j.dump(2) + "\n";
    }

    TextTable t;
    t.id = id;
    t.title = title_of(id);
    t.columns = cols;
    t.columns.insert(t.columns.begin(), "status");
    t.columns.push_back("trace");
    t.headers = headers_for(t.columns, o.unicode());
    auto push = [&](const CaseRow& r, const std::string& status, const std::vector<std::string>& trace) {
        std::vector<Cell> cells{status};
        for (const auto& c : cols) cells.push_back(row_cell(r, c, o.unicode()));
        cells.push_back(trace);
        t.rows.push_back(std::move(cells));
    };
    for (const auto& r : rows) push(r, "kept", r.trace);
    for (const auto& x : e.excluded) {
        std::vector<std::string> trace{x.citation};
        if (!x.detail.empty()) trace.push_back(x.detail);
        push(x.row, "excluded:" + x.rule_id, trace);
    }
    if (o.format == Format::Csv) return render(t, o);

    // Markdown: same table with traces joined by "; ".
    std::ostringstream os;
    os << "## " << t.title << "\n\n|";
    for (const auto& h : t.headers) os << ' ' << md_escape(h) << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.headers.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& r : t.rows) {
        os << '|';
        for (std::size_t i = 0; i < r.size(); ++i)
            os << ' ' << md_escape(cell_text(r[i], i + 1 == r.size() ? "; " : ", ")) << " |";
        os << '\n';
    }
    os << '\n' << rows.size() << " kept, " << e.excluded.size() << " excluded\n";
    return os.str();
}

std::string render_lattice_invariants(std::string_view expr, const RenderOptions& o)
{
    const LatticeExpr e = parse_lattice_expr(expr);
    const Lattice l = make_lattice(e);
    const Signature sig = signature(l.gram());
    const DiscriminantGroup dg = discriminant_group(l);

    std::vector<std::pair<std::string, Cell>> kv;
    kv.push_back({"expression", o.unicode() ? to_unicode(e) : to_ascii(e)});
    kv.push_back({"rank", static_cast<long>(l.dim())});
    kv.push_back({"det", l.det().get_str()});
    kv.push_back({"signature", "(" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) + ")"});
    kv.push_back({"even", l.is_even()});
    std::vector<std::string> divisors;
    for (const auto& d : dg.elementary_divisors) divisors.push_back(d.get_str());
    kv.push_back({"discriminant_group", divisors});
    kv.push_back({"discriminant_order", dg.order.get_str()});
    try {
        const TwoElemProfile p = two_elementary_profile(l);
        kv.push_back({"rho", static_cast<long>(p.rho)});
        kv.push_back({"d", static_cast<long>(p.d)});
        kv.push_back({"delta", static_cast<long>(p.delta)});
        try {
            const InvolutionFixedShape s = involution_fixed_shape(p);
            if (s.kind == ShapeKind::Generic) {
                kv.push_back({"gamma", static_cast<long>(s.gamma)});
                kv.push_back({"j", static_cast<long>(s.j)});
            } else {
                kv.push_back({"gamma", nullptr});
                kv.push_back({"j", nullptr});
            }
            kv.push_back({"fixed_locus", to_string(s)});
        } catch (const Error& ex) {
            kv.push_back({"fixed_locus", std::string(ex.what())});
        }
        std::vector<std::string> names;
        for (const auto& n : match_catalog(p)) names.push_back(pretty_lattice(n, o.unicode()));
        kv.push_back({"catalog", names});
    } catch (const Error& ex) {
        kv.push_back({"two_elementary", std::string(ex.what())});
    }
    return render_kv("lattice", kv, o);
}

std::string render_audit(const std::string& what, const RenderOptions& o)
{
    if (what == "table4") {
        TextTable t;
        t.id = "table4";
        t.title = "Table 4 audit";
        t.columns = {"no", "R", "root_rank", "mw_rank", "shioda_tate", "fibers", "euler", "residual_i1"};
        t.headers = t.columns;
        for (const auto& a : audit_table4()) {
            std::vector<std::string> fibers;
            for (const auto& f : a.fibers) fibers.push_back(pretty_fiber(f, o.unicode()));
            t.rows.push_back({static_cast<long>(a.no), pretty_lattice(a.root_part, o.unicode()),
                              static_cast<long>(a.root_rank), static_cast<long>(a.mw_rank), a.shioda_tate_ok, fibers,
                              static_cast<long>(a.euler_budget), static_cast<long>(a.residual_i1)});
        }
        return render(t, o);
    }
    if (what == "discriminant") {
        const FamilyDiscriminantReport f = family_discriminant_coeffs();
        const Y2DiscriminantReport y = discriminant_y2_x3_minus_ax();
        TextTable t;
        t.id = "discriminant";
        t.title = "Discriminant coefficients";
        t.columns = {"name", "power", "computed", "printed", "equal"};
        t.headers = t.columns;
        for (const auto& c : f.coefficients)
            t.rows.push_back({c.name, static_cast<long>(c.power), c.computed.to_string(), c.printed.to_string(),
                              c.equal()});
        for (const auto& v : y.vanishing)
            t.rows.push_back({"y2 a(t)=" + v.a_of_t, static_cast<long>(v.order_at_zero), y.computed.to_string(),
                              y.printed.to_string(), y.ok()});
        if (o.format == Format::Markdown)
            return render(t, o) + "\n" + f.convention + "\n" + y.convention + "\n";
        return render(t, o);
    }
    if (what == "isometry") {
        TextTable t;
        t.id = "isometry";
        t.title = "Square roots of -1";
        t.columns = {"lattice", "rank", "isometry", "square_minus_identity", "trivial_on_discriminant"};
        t.headers = t.columns;
        for (const char* s : {"U+U", "U+U(2)", "E8", "D4", "D8"}) {
            const LatticeExpr e = parse_lattice_expr(s);
            const IsometryCheck k = check_square_root_of_minus_identity(make_lattice(e), square_root_of_minus_identity(e));
            t.rows.push_back({pretty_lattice(s, o.unicode()), static_cast<long>(e.rank()), k.isometry,
                              k.squares_to_minus, k.trivial_on_discriminant});
        }
        return render(t, o);
    }
    throw Error("unknown audit '" + what + "' (expected table4, discriminant or isometry)");
}

std::string render_verify(const VerifyReport& r)
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << '\n';
        for (const auto& d : c.details) os << "  " << d << '\n';
        if (!c.pass) ++failed;
    }
    if (failed)
        os << "verdict: FAIL (" << failed << " of " << r.checks.size() << " checks failed)\n";
    else
        os << "verdict: PASS (" << r.checks.size() << " checks)\n";
    return os.str();
}

} // namespace k3fix4
