// One PASS/FAIL line per acceptance criterion. Every comparison is exact (tolerance 0).
#include "k3fix4/fibration.hpp"
#include "k3fix4/isometry.hpp"
#include "k3fix4/lefschetz.hpp"
#include "k3fix4/smith.hpp"
#include "k3fix4/tables.hpp"
#include "k3fix4/verify.hpp"

#include <array>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <tuple>

using namespace k3fix4;

namespace {

struct Outcome {
    bool pass = true;
    std::string why;

    void fail(const std::string& w)
    {
        if (pass) why = w;
        pass = false;
    }
};

Outcome prop2()
{
    Outcome o;
    std::set<std::tuple<int, int, int>> got;
    for (const auto& r : enumerate("prop2").rows) got.insert({r.r, r.l, r.n});
    const std::set<std::tuple<int, int, int>> want = {{6, 8, 0}, {7, 7, 2}, {8, 6, 4}, {9, 5, 6}, {10, 4, 8}};
    if (got != want) o.fail(std::to_string(got.size()) + " triples, set differs");
    return o;
}

Outcome lefschetz()
{
    Outcome o;
    const GaussianRational target = expected_lefschetz();
    for (long alpha = -5; alpha <= 10; ++alpha)
        for (long n = 0; n <= 30; ++n)
            if ((holomorphic_lefschetz(n, alpha) == target) != (n == 2 * alpha + 4))
                o.fail("mismatch at n=" + std::to_string(n) + " alpha=" + std::to_string(alpha));
    return o;
}

Outcome corollary1(const VerifyReport& rep)
{
    Outcome o;
    for (const auto& d : rep.corollary1) {
        if (d.missing.empty() && d.extra.empty()) continue;
        o.fail(d.scenario + ": " + std::to_string(d.enumerated) + " enumerated vs " + std::to_string(d.golden) +
               " printed, " + std::to_string(d.missing.size()) + " missing, " + std::to_string(d.extra.size()) +
               " extra");
    }
    for (const auto& s : corollary1_scenarios())
        for (const auto& r : enumerate_corollary1(s))
            if (euler_sum(r.counts) != 24) o.fail("Euler sum " + std::to_string(euler_sum(r.counts)));
    std::vector<std::pair<FibrationScenario, Corollary1Row>> all;
    for (const auto& g : golden_corollary1())
        for (const auto& r : g.rows) all.push_back({g.scenario, r});
    const UniquenessResult u = solve_contributions(all);
    if (!u.unique || !u.consistent || u.solved != default_contributions()) o.fail("contribution solve differs");
    return o;
}

Outcome tables_1237()
{
    Outcome o;
    const std::pair<const char*, std::size_t> want[] = {{"t1", 6}, {"t2", 5}, {"t3", 8}, {"t7", 5}};
    for (const auto& [id, n] : want) {
        const Enumeration e = enumerate(id);
        const TableDiff d = diff_table(id, golden_table(id), e);
        if (e.rows.size() != n || !d.match())
            o.fail(std::string(id) + ": " + std::to_string(e.rows.size()) + " rows, " +
                   std::to_string(d.missing.size()) + " missing, " + std::to_string(d.extra.size()) + " extra");
        for (const auto& x : e.excluded)
            if (x.citation.empty()) o.fail(std::string(id) + ": uncited exclusion " + x.rule_id);
    }
    std::set<std::tuple<int, int, int, int>> t2, t2_want;
    for (const auto& x : enumerate("t2").excluded) t2.insert({x.row.r, x.row.k, x.row.g, x.row.a});
    for (const auto& x : golden_table2_excluded()) t2_want.insert({x.r, x.k, x.g, x.a});
    if (t2 != t2_want || t2.size() != 4) o.fail("t2 excluded tuples differ");
    std::set<std::tuple<int, int, int>> t3, t3_want;
    for (const auto& x : enumerate("t3").excluded) t3.insert({x.row.r, x.row.k, x.row.a});
    for (const auto& x : golden_table3_excluded()) t3_want.insert({x.r, x.k, x.a});
    if (t3 != t3_want || t3.size() != 2) o.fail("t3 excluded tuples differ");
    return o;
}

Outcome table5()
{
    Outcome o;
    const Enumeration e = enumerate("t5");
    const TableDiff d = diff_table("t5", golden_table("t5"), e);
    if (e.rows.size() != 12 || !d.match()) o.fail("rows differ from the printed table");
    for (const auto& r : e.rows) {
        const TwoElemProfile s = two_elementary_profile(make_lattice(r.s_names.at(0)));
        const TwoElemProfile t = two_elementary_profile(make_lattice(r.t_names.at(0)));
        const int j = r.k + r.n1 / 2;
        if (2 * r.g != 22 - s.rho - s.d || 2 * j != s.rho - s.d) o.fail(r.s_names[0] + ": genus or j mismatch");
        if (t.rho != 22 - s.rho || t.d != s.d) o.fail(r.t_names[0] + ": rank or d mismatch");
    }
    return o;
}

Outcome table6()
{
    Outcome o;
    const Enumeration e = enumerate("t6");
    const TableDiff d = diff_table("t6", golden_table("t6"), e);
    if (!d.missing.empty()) o.fail(std::to_string(d.missing.size()) + " printed rows missing");
    for (const auto& x : d.extra)
        if (x.trace.empty()) o.fail("extra row without trace");
    const auto names = check_table6_lattices(golden_table("t6"));
    if (!names.empty()) o.fail(names.front());
    const auto sound = soundness_violations("t6", golden_table("t6"));
    if (!sound.empty()) o.fail(sound.front());
    std::size_t dup = 0;
    for (const auto& r : golden_table("t6").rows) dup += r.printed_twice;
    if (dup != 1) o.fail("duplicated printed row not flagged");
    if (o.pass) o.why = std::to_string(d.extra.size()) + " extra tuples reported with traces";
    return o;
}

Outcome theorem81()
{
    Outcome o;
    const Enumeration e = enumerate("thm81");
    const Thm81Counts c = theorem81_counts(e);
    if (c.tuple != 63)
        o.fail("tuple count " + std::to_string(c.tuple) + " (coarse " + std::to_string(c.coarse) + ", fine " +
               std::to_string(c.fine) + ")");
    const auto b = theorem81_bounds(e);
    const int want[3][4] = {{4, 3, 3, 2}, {6, 2, 5, 3}, {8, 1, 7, 4}};
    if (b.size() != 3) o.fail("branch count");
    for (std::size_t i = 0; i < b.size() && i < 3; ++i)
        if (b[i].m_plus_l != want[i][0] || b[i].k != want[i][1] || b[i].g_max != want[i][2] ||
            b[i].a_max != want[i][3])
            o.fail("bounds differ for k=" + std::to_string(b[i].k));
    return o;
}

Outcome discriminant()
{
    Outcome o;
    const FamilyDiscriminantReport r = family_discriminant_coeffs();
    if (r.coefficients.size() != 4 || !r.all_equal()) o.fail("coefficient mismatch");
    return o;
}

Outcome table4()
{
    Outcome o;
    // Recomputed by hand from A_n -> I_{n+1}, D_n -> I*_{n-4}, E6/E7/E8 -> IV*/III*/II*.
    const std::vector<int> want = {0, 2, 2, 0, 1, 4, 4, 2, 0, 4, 4, 0, 4};
    const auto a = audit_table4();
    if (a.size() != 13) o.fail("row count");
    for (std::size_t i = 0; i < a.size() && i < want.size(); ++i) {
        if (!a[i].shioda_tate_ok) o.fail("row " + std::to_string(a[i].no) + ": Shioda-Tate");
        if (a[i].residual_i1 < 0 || a[i].residual_i1 != want[i])
            o.fail("row " + std::to_string(a[i].no) + ": residual " + std::to_string(a[i].residual_i1));
    }
    return o;
}

Outcome isometry()
{
    Outcome o;
    for (const char* s : {"U+U", "U+U(2)", "E8", "D4", "D8"}) {
        const LatticeExpr e = parse_lattice_expr(s);
        if (!check_square_root_of_minus_identity(make_lattice(e), square_root_of_minus_identity(e)).ok())
            o.fail(std::string(s) + " fails a post-condition");
    }
    return o;
}

Outcome smith()
{
    Outcome o;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(1, 8), entry(-9, 9);
    for (int trial = 0; trial < 1000 && o.pass; ++trial) {
        const std::size_t rows = size(rng), cols = size(rng);
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
        const SmithForm s = smith_normal_form(m);
        const std::string at = "trial " + std::to_string(trial);
        if (s.u * m * s.v != s.d) o.fail(at + ": u m v != d");
        if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) o.fail(at + ": not unimodular");
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j && s.d(i, j) != 0) o.fail(at + ": off-diagonal entry");
        const std::size_t r = std::min(rows, cols);
        for (std::size_t i = 0; i < r; ++i) {
            if (s.d(i, i) < 0) o.fail(at + ": negative invariant factor");
            if (i + 1 == r) continue;
            const Int& a = s.d(i, i);
            const Int& b = s.d(i + 1, i + 1);
            if (a == 0 ? b != 0 : !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) o.fail(at + ": divisibility");
        }
    }
    return o;
}

std::pair<int, std::string> run_cli(const std::string& args)
{
    const std::string cmd = std::string(K3FIX4_CLI) + " " + args;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, out};
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_determinism()
{
    Outcome o;
    const auto a = run_cli("verify --all");
    const auto b = run_cli("verify --all");
    if (a.second != b.second) o.fail("outputs differ between runs");
    if (a.second.empty()) o.fail("no output");
    if (a.first != 0 || b.first != 0) o.fail("byte-identical output, but exit code " + std::to_string(a.first));
    return o;
}

} // namespace

int main()
{
    const VerifyReport rep = verify_all();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"prop2 triples", prop2},
        {"holomorphic Lefschetz grid", lefschetz},
        {"c1 scenarios and contribution solve", [&] { return corollary1(rep); }},
        {"t1 t2 t3 t7 rows and excluded tuples", tables_1237},
        {"t5 rows and lattice profiles", table5},
        {"t6 completeness and names", table6},
        {"thm81 count and bounds", theorem81},
        {"family discriminant coefficients", discriminant},
        {"table4 Shioda-Tate and Euler residuals", table4},
        {"square root of -1 post-conditions", isometry},
        {"Smith normal form property suite", smith},
        {"CLI verify determinism and exit code", cli_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.why.empty()) std::cout << " (" << o.why << ")";
        std::cout << '\n';
        failed += !o.pass;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
