#include "k3fix4/lefschetz.hpp"
#include "k3fix4/render.hpp"
#include "k3fix4/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace k3fix4;

namespace {

constexpr int kUsage = 2;

struct Out {
    std::string format = "md";
    bool ascii = false;

    RenderOptions options() const { return {parse_format(format), ascii}; }
};

void add_format(CLI::App* app, Out& out)
{
    app->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
    app->add_flag("--ascii", out.ascii, "Plain ascii names in markdown");
}

int emit(const std::string& text, int rc = 0)
{
    std::cout << text;
    return rc;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Order-four non-symplectic automorphisms of K3 surfaces: tables, checks and audits"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Out out;
    std::function<int()> action;

    // lattice invariants <expr>
    auto* lattice = app.add_subcommand("lattice", "Lattice expressions");
    lattice->require_subcommand(1);
    auto* invariants = lattice->add_subcommand("invariants", "rank, det, signature, (rho, d, delta), gamma, j");
    std::string expr;
    invariants->add_option("expr", expr, "e.g. \"U(2)+D4^2\"")->required();
    add_format(invariants, out);
    invariants->callback([&] { action = [&] { return emit(render_lattice_invariants(expr, out.options())); }; });

    const std::vector<std::string> table_ids = {"t1", "t2", "t3", "t5", "t6", "t7", "c1", "prop2", "thm81"};
    std::string table_id;
    auto* tables = app.add_subcommand("tables", "Print an enumerated table");
    tables->add_option("--id", table_id, "Table id")->required()->check(CLI::IsMember(table_ids));
    add_format(tables, out);
    tables->callback([&] { action = [&] { return emit(render_table(table_id, out.options())); }; });

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate with constraint traces and the excluded channel");
    enumerate->add_option("--id", table_id, "Table id")->required()->check(CLI::IsMember(table_ids));
    add_format(enumerate, out);
    enumerate->callback([&] { action = [&] { return emit(render_enumeration(table_id, out.options())); }; });

    // check ...
    auto* check = app.add_subcommand("check", "Evaluate single relations");
    check->require_subcommand(1);

    int r = 0, l = 0, m = 0, n = 0, k = 0, a = 0, n1 = 0, n2 = 0;
    std::vector<int> genera;
    std::optional<int> g_top;
    auto* relations = check->add_subcommand("relations", "Order-four relations for given ranks and fixed locus");
    relations->add_option("-r,--r", r)->required();
    relations->add_option("-l,--l", l)->required();
    relations->add_option("-m,--m", m)->required();
    relations->add_option("-n,--n", n)->required();
    relations->add_option("-k,--k", k)->required();
    relations->add_option("-a,--a", a)->required();
    relations->add_option("--genus", genera, "Genera of sigma-fixed curves of positive genus");
    relations->add_option("--n1", n1);
    relations->add_option("--n2", n2);
    relations->add_option("--g-top", g_top, "Genus of a sigma^2-fixed curve not fixed by sigma");
    add_format(relations, out);
    relations->callback([&] {
        action = [&] {
            FixedLocusData fl;
            fl.n = n;
            fl.k = k;
            fl.a = a;
            fl.genera = genera;
            fl.n1 = n1;
            fl.n2 = n2;
            fl.g_top = g_top;
            const auto rep = check_order4_relations({r, l, m}, fl);
            TextTable t;
            t.id = "relations";
            t.columns = {"id", "statement", "applicable", "holds", "note"};
            for (const auto& x : rep) t.rows.push_back({x.id, x.statement, x.applicable, x.holds, x.note});
            return emit(render(t, out.options()), all_applicable_hold(rep) ? 0 : 1);
        };
    });

    long alpha = 0, ln = 0;
    auto* lef = check->add_subcommand("lefschetz", "Holomorphic Lefschetz number of sigma");
    lef->add_option("-n,--n", ln)->required();
    lef->add_option("--alpha", alpha)->required();
    add_format(lef, out);
    lef->callback([&] {
        action = [&] {
            const GaussianRational v = holomorphic_lefschetz(ln, alpha);
            const bool eq = v == expected_lefschetz();
            return emit(render_kv("lefschetz",
                                  {{"n", ln}, {"alpha", alpha}, {"value", v.str()}, {"equals_1_minus_i", eq}},
                                  out.options()),
                        eq ? 0 : 1);
        };
    });

    long x2 = 0, xf = 0, fsf = 0;
    bool section = false;
    auto* hodge = check->add_subcommand("hodge", "Hodge index bound for a curve and an elliptic fibration");
    hodge->add_option("--x2", x2, "Self-intersection of the curve")->required();
    hodge->add_option("--xf", xf, "Intersection with the fiber")->required();
    hodge->add_option("--fsf", fsf, "Fiber components meeting the curve")->required();
    hodge->add_flag("--section", section, "The fibration has a section");
    add_format(hodge, out);
    hodge->callback([&] {
        action = [&] {
            const bool ok = hodge_index_bound(x2, xf, fsf, section);
            return emit(render_kv("hodge", {{"x2", x2}, {"xf", xf}, {"fsf", fsf}, {"section", section}, {"holds", ok}},
                                  out.options()),
                        ok ? 0 : 1);
        };
    });

    int genus = 0, points = 0;
    auto* rh = check->add_subcommand("riemann-hurwitz", "Fixed points of an involution on a curve");
    rh->add_option("-g,--g", genus)->required();
    rh->add_option("--points", points)->required();
    add_format(rh, out);
    rh->callback([&] {
        action = [&] {
            const bool ok = riemann_hurwitz_ok(genus, points);
            return emit(render_kv("riemann_hurwitz", {{"g", static_cast<long>(genus)},
                                                      {"points", static_cast<long>(points)},
                                                      {"holds", ok}},
                                  out.options()),
                        ok ? 0 : 1);
        };
    });

    std::string kind = "pns";
    auto* moduli = check->add_subcommand("moduli", "Dimension of the moduli space");
    moduli->add_option("--kind", kind, "pns: purely non-symplectic, square: symplectic square")
        ->check(CLI::IsMember({"pns", "square"}));
    moduli->add_option("-r,--r", r)->required();
    moduli->add_option("-l,--l", l)->required();
    moduli->add_option("-m,--m", m)->required();
    add_format(moduli, out);
    moduli->callback([&] {
        action = [&] {
            const int d = moduli_dimension(kind == "pns" ? ModuliKind::PurelyNonSymplectic : ModuliKind::SymplecticSquare,
                                           {r, l, m});
            return emit(render_kv("moduli", {{"kind", kind}, {"dimension", static_cast<long>(d)}}, out.options()));
        };
    });

    // audit table4|discriminant|isometry
    auto* audit = app.add_subcommand("audit", "Fibration and isometry audits");
    audit->require_subcommand(1);
    for (const char* what : {"table4", "discriminant", "isometry"}) {
        auto* sub = audit->add_subcommand(what);
        add_format(sub, out);
        sub->callback([&, w = std::string(what)] {
            action = [&, w] { return emit(render_audit(w, out.options())); };
        });
    }

    bool all = false;
    auto* verify = app.add_subcommand("verify", "Compare every enumeration and audit against the embedded tables");
    verify->add_flag("--all", all, "Run every check")->required();
    verify->callback([&] {
        action = [&] {
            const VerifyReport rep = verify_all();
            return emit(render_verify(rep), rep.ok() ? 0 : 1);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const std::exception& e) { // bad expression or out-of-domain input
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
