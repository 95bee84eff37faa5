#include "k3fix4/verify.hpp"

#include "k3fix4/fibration.hpp"
#include "k3fix4/isometry.hpp"
#include "k3fix4/lattice.hpp"
#include "k3fix4/lefschetz.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace k3fix4 {

bool VerifyReport::ok() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerifyReport::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string describe_row(const CaseRow& row, const std::vector<std::string>& columns)
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ' ';
        first = false;
    };
    for (const auto& c : columns) {
        sep();
        if (c == "fiber") {
            os << "fiber=";
            for (std::size_t i = 0; i < row.fibers.size(); ++i) os << (i ? "|" : "") << row.fibers[i];
        } else if (c == "S" || c == "T") {
            const auto& v = c == "S" ? row.s_names : row.t_names;
            os << c << '=';
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "|" : "") << v[i];
        } else {
            os << c << '=' << row.get(c);
        }
    }
    return os.str();
}

std::string describe_row(const Corollary1Row& row)
{
    auto g = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("-"); };
    std::ostringstream os;
    os << "g_sigma=" << g(row.g_sigma) << " g_sigma2=" << g(row.g_sigma2) << " n=" << row.n << " k=" << row.k
       << " a=" << row.a << " fibers=" << fibers_to_string(row.counts, true);
    return os.str();
}

namespace {

const GoldenTable& golden_for(const VerifyOptions& o, const std::string& id)
{
    auto it = o.golden_override.find(id);
    return it != o.golden_override.end() ? it->second : golden_table(id);
}

void add_diff_details(CheckResult& c, const TableDiff& d, const GoldenTable& g, const Enumeration* traced = nullptr)
{
    const auto key_cols = integer_columns(g);
    for (const auto& r : d.missing) c.details.push_back("missing " + describe_row(r, g.columns));
    for (const auto& r : d.extra) {
        std::string line = "extra " + describe_row(r, g.columns);
        if (traced)
            for (const auto& er : traced->rows)
                if (describe_row(er, key_cols) == describe_row(r, key_cols)) {
                    line += " admitted by: ";
                    for (std::size_t i = 0; i < er.trace.size(); ++i) line += (i ? "; " : "") + er.trace[i];
                    break;
                }
        c.details.push_back(line);
    }
}

CheckResult check_plain_table(const VerifyOptions& o, VerifyReport& rep, const std::string& id)
{
    CheckResult c{id, true, {}};
    const GoldenTable& g = golden_for(o, id);
    Enumeration e = enumerate(id);
    TableDiff d = diff_table(id, g, e);
    rep.diffs[id] = d;
    c.details.push_back(std::to_string(e.rows.size()) + " rows enumerated, " + std::to_string(g.rows.size()) +
                        " golden");
    add_diff_details(c, d, g);
    if (!d.match()) c.pass = false;
    for (const auto& v : soundness_violations(id, g)) {
        c.pass = false;
        c.details.push_back("unsound: " + v);
    }
    for (const auto& x : e.excluded) {
        std::string line = "excluded by " + x.rule_id + ": " + describe_row(x.row, integer_columns(g));
        if (!x.detail.empty()) line += " [" + x.detail + "]";
        c.details.push_back(line);
    }
    return c;
}

std::string t2_key(int r, int k, int g, int a)
{
    return "(" + std::to_string(r) + ", " + std::to_string(k) + ", " + std::to_string(g) + ", " + std::to_string(a) +
           ")";
}

CheckResult check_table2(const VerifyOptions& o, VerifyReport& rep)
{
    CheckResult c = check_plain_table(o, rep, "t2");
    Enumeration e = enumerate_table2();
    std::set<std::pair<std::string, std::string>> want, have;
    for (const auto& x : golden_table2_excluded())
        for (const auto& name : x.lattices) want.insert({t2_key(x.r, x.k, x.g, x.a), name});
    for (const auto& x : e.excluded) have.insert({t2_key(x.row.r, x.row.k, x.row.g, x.row.a), x.detail});
    if (want != have) {
        c.pass = false;
        c.details.push_back("excluded tuples differ from the proof's sub-table");
    }
    for (const auto& p : check_table2_excluded_lattices(e)) {
        c.pass = false;
        c.details.push_back(p);
    }
    for (const auto& x : e.excluded)
        if (x.citation.empty()) c.pass = false;
    return c;
}

CheckResult check_table3(const VerifyOptions& o, VerifyReport& rep)
{
    CheckResult c = check_plain_table(o, rep, "t3");
    Enumeration e = enumerate_table3();
    std::set<std::tuple<int, int, int>> want, have;
    for (const auto& x : golden_table3_excluded()) want.insert({x.r, x.k, x.a});
    for (const auto& x : e.excluded) have.insert({x.row.r, x.row.k, x.row.a});
    if (want != have) {
        c.pass = false;
        c.details.push_back("excluded (r, k, a) differ from the proof");
    }
    return c;
}

CheckResult check_table5(const VerifyOptions& o, VerifyReport& rep)
{
    CheckResult c = check_plain_table(o, rep, "t5");
    for (const auto& p : check_table5_lattices(golden_for(o, "t5"))) {
        c.pass = false;
        c.details.push_back(p);
    }
    Enumeration e = enumerate_table5();
    std::set<std::string> seen;
    for (const auto& x : e.excluded) {
        std::istringstream is(x.detail);
        std::string name;
        while (std::getline(is, name, ',')) {
            name.erase(0, name.find_first_not_of(' '));
            seen.insert(summand_key(parse_lattice_expr(name)));
        }
    }
    for (const auto& name : golden_table5_excluded_lattices())
        if (!seen.count(summand_key(parse_lattice_expr(name)))) {
            c.pass = false;
            c.details.push_back("listed lattice " + name + " never reached the excluded channel");
        }
    return c;
}

CheckResult check_table6(const VerifyOptions& o, VerifyReport& rep)
{
    CheckResult c{"t6", true, {}};
    const GoldenTable& g = golden_for(o, "t6");
    Enumeration e = enumerate_table6();
    TableDiff d = diff_table("t6", g, e);
    rep.diffs["t6"] = d;
    std::size_t dup = std::count_if(g.rows.begin(), g.rows.end(), [](const CaseRow& r) { return r.printed_twice; });
    c.details.push_back(std::to_string(e.rows.size()) + " tuples enumerated, " + std::to_string(g.rows.size()) +
                        " golden (" + std::to_string(dup) + " printed twice)");
    if (!d.missing.empty()) c.pass = false;
    add_diff_details(c, d, g, &e);
    for (const auto& r : d.extra)
        if (std::none_of(e.rows.begin(), e.rows.end(), [&](const CaseRow& x) {
                return describe_row(x, integer_columns(g)) == describe_row(r, integer_columns(g)) && !x.trace.empty();
            }))
            c.pass = false;
    for (const auto& p : check_table6_lattices(g)) {
        c.pass = false;
        c.details.push_back(p);
    }
    for (const auto& v : soundness_violations("t6", g)) {
        c.pass = false;
        c.details.push_back("unsound: " + v);
    }
    for (const auto& x : e.excluded)
        c.details.push_back("excluded by " + x.rule_id + ": " + describe_row(x.row, integer_columns(g)) + " [" +
                            x.detail + "]");
    return c;
}

CheckResult check_thm81()
{
    CheckResult c{"thm81", true, {}};
    Enumeration e = enumerate_theorem81();
    Thm81Counts n = theorem81_counts(e);
    const GoldenThm81& g = golden_thm81();
    c.details.push_back("tuples (m, l, k, g, a, n2): " + std::to_string(n.tuple));
    if (n.tuple != static_cast<std::size_t>(g.count)) {
        c.pass = false;
        c.details.push_back("expected " + std::to_string(g.count) + "; (m, l, k, g, a): " + std::to_string(n.coarse) +
                            "; (m, l, k, g, a, n2, n1): " + std::to_string(n.fine));
    }
    auto bounds = theorem81_bounds(e);
    for (const auto& want : g.bounds) {
        auto it = std::find_if(bounds.begin(), bounds.end(), [&](const GoldenBound& b) { return b.k == want.k; });
        if (it == bounds.end() || it->m_plus_l != want.m_plus_l || it->g_max != want.g_max ||
            it->a_max != want.a_max) {
            c.pass = false;
            c.details.push_back("bound mismatch for k=" + std::to_string(want.k));
        } else {
            c.details.push_back("m+l=" + std::to_string(it->m_plus_l) + " k=" + std::to_string(it->k) +
                                " g<=" + std::to_string(it->g_max) + " a<=" + std::to_string(it->a_max));
        }
    }
    return c;
}

CheckResult check_prop2(const VerifyOptions& o, VerifyReport& rep)
{
    CheckResult c = check_plain_table(o, rep, "prop2");
    return c;
}

CheckResult check_lefschetz()
{
    CheckResult c{"lefschetz", true, {}};
    int hits = 0;
    for (int alpha = -5; alpha <= 10; ++alpha)
        for (int n = 0; n <= 30; ++n) {
            const bool eq = holomorphic_lefschetz(n, alpha) == expected_lefschetz();
            if (eq != (n == 2 * alpha + 4)) {
                c.pass = false;
                c.details.push_back("n=" + std::to_string(n) + " alpha=" + std::to_string(alpha));
            }
            hits += eq;
        }
    c.details.push_back(std::to_string(hits) + " grid points give 1 - i");
    return c;
}

CheckResult check_corollary1(const VerifyOptions& o, VerifyReport& rep)
{
    CheckResult c{"c1", true, {}};
    const ContributionTable& table = o.contributions ? *o.contributions : default_contributions();
    const auto& golden = o.corollary1_override ? *o.corollary1_override : golden_corollary1();
    std::vector<std::pair<FibrationScenario, Corollary1Row>> all;
    for (const auto& gs : golden) {
        auto rows = enumerate_corollary1(gs.scenario, table);
        Corollary1Diff d;
        d.scenario = gs.id;
        d.enumerated = rows.size();
        d.golden = gs.rows.size();
        for (const auto& g : gs.rows) {
            all.push_back({gs.scenario, g});
            if (std::find(rows.begin(), rows.end(), g) == rows.end()) d.missing.push_back(g);
            if (euler_sum(g.counts, table) != 24) {
                c.pass = false;
                c.details.push_back(gs.id + ": golden row with Euler sum != 24: " + describe_row(g));
            }
        }
        for (const auto& r : rows) {
            if (std::find(gs.rows.begin(), gs.rows.end(), r) == gs.rows.end()) d.extra.push_back(r);
            if (euler_sum(r.counts, table) != 24) c.pass = false;
        }
        std::string line = gs.id + ": " + std::to_string(d.enumerated) + " enumerated, " + std::to_string(d.golden) +
                           " golden, " + std::to_string(d.missing.size()) + " missing, " +
                           std::to_string(d.extra.size()) + " extra";
        const auto i0b = static_cast<std::size_t>(ActionKind::I0b);
        if (!d.extra.empty() &&
            std::all_of(d.extra.begin(), d.extra.end(), [&](const Corollary1Row& r) { return r.counts[i0b] > 0; }))
            line += " (every extra row has an I0* b) fiber)";
        c.details.push_back(line);
        if (!d.missing.empty() || !d.extra.empty()) c.pass = false;
        for (const auto& r : d.missing) c.details.push_back("  missing " + describe_row(r));
        for (const auto& r : d.extra) c.details.push_back("  extra " + describe_row(r));
        rep.corollary1.push_back(std::move(d));
    }
    UniquenessResult u = solve_contributions(all);
    const bool same = u.solved == table;
    c.details.push_back(std::string("contribution solve: ") + (u.unique ? "unique" : "not unique") + ", " +
                        (u.consistent ? "consistent" : "inconsistent") + ", " +
                        (same ? "equals the table in use" : "differs from the table in use"));
    if (!u.unique || !u.consistent || !same) c.pass = false;
    return c;
}

CheckResult check_discriminant()
{
    CheckResult c{"discriminant", true, {}};
    FamilyDiscriminantReport f = family_discriminant_coeffs();
    for (const auto& co : f.coefficients) {
        c.details.push_back(co.name + " (t^" + std::to_string(co.power) + "): " + co.computed.to_string() +
                            (co.equal() ? " matches" : " differs from " + co.printed.to_string()));
        if (!co.equal()) c.pass = false;
    }
    if (f.coefficients.size() != 4) c.pass = false;
    Y2DiscriminantReport y = discriminant_y2_x3_minus_ax();
    c.details.push_back(y.convention);
    if (!y.ok()) c.pass = false;
    const int want_order[] = {0, 3, 0};
    const int want_degree[] = {0, 3, 24};
    for (std::size_t i = 0; i < y.vanishing.size(); ++i) {
        const auto& v = y.vanishing[i];
        c.details.push_back("a(t) = " + v.a_of_t + ": order at 0 = " + std::to_string(v.order_at_zero) +
                            ", degree = " + std::to_string(v.degree));
        if (i < 3 && (v.order_at_zero != want_order[i] || v.degree != want_degree[i])) c.pass = false;
    }
    return c;
}

CheckResult check_table4()
{
    CheckResult c{"table4", true, {}};
    for (const auto& a : audit_table4()) {
        std::string line = "row " + std::to_string(a.no) + " " + a.root_part + ": rank " + std::to_string(a.root_rank) +
                           " + MW " + std::to_string(a.mw_rank) + (a.shioda_tate_ok ? " = 18" : " != 18") +
                           ", budget " + std::to_string(a.euler_budget) + ", residual " + std::to_string(a.residual_i1);
        c.details.push_back(line);
        if (!a.shioda_tate_ok || a.residual_i1 < 0) c.pass = false;
    }
    return c;
}

CheckResult check_isometry()
{
    CheckResult c{"isometry", true, {}};
    std::vector<std::string> inputs = {"U+U", "U+U(2)", "E8", "D4", "D8"};
    for (const auto& r : golden_table("t5").rows)
        for (const auto& t : r.t_names)
            if (std::find(inputs.begin(), inputs.end(), t) == inputs.end()) inputs.push_back(t);
    for (const auto& s : inputs) {
        std::string line = s + ": ";
        try {
            IntMatrix t = square_root_of_minus_identity(parse_lattice_expr(s));
            IsometryCheck k = check_square_root_of_minus_identity(make_lattice(s), t);
            line += k.ok() ? "ok" : "FAILED";
            if (!k.ok()) c.pass = false;
        } catch (const std::exception& ex) {
            line += ex.what();
            c.pass = false;
        }
        c.details.push_back(line);
    }
    return c;
}

CheckResult check_catalog()
{
    CheckResult c{"catalog", true, {}};
    std::size_t two_elem = 0;
    for (const auto& e : catalog()) {
        DiscriminantGroup g = discriminant_group(e.lattice);
        Int det = abs(e.lattice.det());
        if (g.order != det) {
            c.pass = false;
            c.details.push_back(e.name + ": |A_L| != |det|");
        }
        if (e.profile) ++two_elem;
    }
    c.details.push_back(std::to_string(catalog().size()) + " lattices, " + std::to_string(two_elem) +
                        " 2-elementary, |A_L| = |det| for all");
    for (const char* id : {"t5", "t6"})
        for (const auto& r : golden_table(id).rows)
            for (const auto& s : r.s_names) {
                TwoElemProfile p = two_elementary_profile(make_lattice(s));
                try {
                    involution_fixed_shape(p);
                } catch (const std::exception& ex) {
                    c.pass = false;
                    c.details.push_back(s + ": " + ex.what());
                }
            }
    return c;
}

} // namespace

VerifyReport verify_all(const VerifyOptions& o)
{
    VerifyReport rep;
    rep.checks.push_back(check_prop2(o, rep));
    rep.checks.push_back(check_lefschetz());
    rep.checks.push_back(check_corollary1(o, rep));
    rep.checks.push_back(check_plain_table(o, rep, "t1"));
    rep.checks.push_back(check_table2(o, rep));
    rep.checks.push_back(check_table3(o, rep));
    rep.checks.push_back(check_table5(o, rep));
    rep.checks.push_back(check_table6(o, rep));
    rep.checks.push_back(check_plain_table(o, rep, "t7"));
    rep.checks.push_back(check_thm81());
    rep.checks.push_back(check_discriminant());
    rep.checks.push_back(check_table4());
    rep.checks.push_back(check_isometry());
    rep.checks.push_back(check_catalog());
    return rep;
}

} // namespace k3fix4
