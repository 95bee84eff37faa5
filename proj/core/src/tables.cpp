#include "k3fix4/tables.hpp"

#include "k3fix4/error.hpp"
#include "k3fix4/fibers.hpp"
#include "k3fix4/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace k3fix4 {

namespace {

struct RankData {
    int rho, d;
    EigenspaceRanks ranks;
};

bool even_nonneg(int x) { return x >= 0 && x % 2 == 0; }

std::optional<RankData> ranks_from_rho(int rho, int d, int alpha)
{
    const int r2 = rho + 4 * alpha + 2;
    const int l2 = rho - 4 * alpha - 2;
    const int m2 = 22 - rho;
    if (!even_nonneg(r2) || !even_nonneg(l2) || !even_nonneg(m2)) return std::nullopt;
    if (d < 0 || d > std::min(rho, 22 - rho)) return std::nullopt;
    return RankData{rho, d, {r2 / 2, l2 / 2, m2 / 2}};
}

std::optional<RankData> try_ranks(int gamma, int j, int alpha)
{
    if (gamma < 0 || j < 0) return std::nullopt;
    const int rho = 11 + j - gamma;
    return ranks_from_rho(rho, 22 - rho - 2 * gamma, alpha);
}

std::string str(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

const std::vector<ExclusionRule> kRules = {
    {"t1_vinberg", "t1",
     "If m = 1, then S(σ^2) = Pic(X) has maximal rank and X is isomorphic to the unique K3 surface with "
     "T(X) = T(σ^2) ≅ (2) ⊕ (2)"},
    {"t2_root_sum", "t2",
     "If S(σ^2) ≅ U ⊕ R, where R is a direct sum of root lattices, then g ≤ 2 by Theorem 2.1, giving a "
     "contradiction."},
    {"t2_remark22", "t2",
     "In the case (4, 1, 3, 0) with S(σ^2) ≅ U(2) ⊕ D_4^{⊕2} we still have an isomorphism S(σ^2) ≅ U ⊕ R "
     "(where R is not a sum of root lattices) by Remark 2.2 since j = 2."},
    {"t3_vinberg", "t3", "By Example 5.2, if σ preserves an elliptic fibration on X, then a ∈ {0, 3, 4}."},
    {"t5_fibration", "t5",
     "In the first five cases X has a σ-invariant jacobian elliptic fibration π : X → P^1 with more than "
     "two reducible fibers by Theorem 2.1."},
    {"t5_two_a1", "t5", "We now show that the case S(σ^2) ≅ (2) ⊕ A_1 does not appear."},
    {"t5_e7_a1", "t5",
     "If S(σ) ≅ U ⊕ E_7 ⊕ A_1 ≅ (2) ⊕ A_1 ⊕ E_8, then X is the minimal resolution of the double cover of P^2 "
     "branched along an irreducible sextic with a node and a triple point of type E_8. We can exclude this "
     "case by an argument similar to the previous one."},
    {"t6_genus8", "t6",
     "Observe that the case l = 1, n_1 = 4 does not exist since in this case, by Theorem 1.1 and [25, Theorem "
     "4.3.1] (see Figure 1 in [3]), a curve fixed by σ^2 has genus ≤ 8."},
    {"t6_quintic", "t6",
     "If (m, r, g, a) = (8, 4, 6, 0) and S(σ^2) ≅ U(2) ⊕ D_4, then X is the double cover of P^2 branched along "
     "the union of a smooth quintic and a line. An involution on a smooth plane quintic has quotient of genus "
     "two, equivalently it has 6 fixed points. Thus this case does not appear."},
    {"t6_i2star", "t6",
     "If (m, r, g, a) = (7, 5, 6, 1), then S(σ^2) ≅ U ⊕ D_6. Thus this case does not appear."},
    {"t6_two_points", "t6", "Thus n_1 = n_2 = 2."},
    {"t6_trigonal", "t6",
     "If g = 3, this implies that C is isomorphic to a plane quartic and, since an involution of P^2 fixes a "
     "line, then n_2 > 0."},
    {"t7_lemma4_in", "t7",
     "All these cases can be excluded by Lemma 4 since if a = 0 then a fiber of type I_{4M}, M ≥ 2 has k = M."},
    {"t7_lemma4_ivstar", "t7",
     "By Lemma 4 the last case is not possible since if each rational curve is σ-invariant, then IV^* "
     "contains only one fixed rational curve."},
    {"t81_ml4", "thm81", "We now show that the case m + l = 4, k = 3 and a = 3 is not possible."},
    {"t81_ml6", "thm81", "The case m + l = 6, a = 4 can be excluded similarly."},
};

void exclude(Enumeration& e, const std::string& rule, const CaseRow& row, std::string detail = {})
{
    const ExclusionRule& r = exclusion_rule(rule);
    e.excluded.push_back({r.id, r.citation, row, std::move(detail)});
}

TwoElemProfile hyperbolic(int rho, int d, int delta) { return {rho, d, delta, 1, rho - 1}; }

bool is_root_sum_over_u(const std::string& name)
{
    LatticeExpr e = parse_lattice_expr(name);
    if (e.terms.empty()) return false;
    const Atom& u = e.terms.front();
    if (u.kind != AtomKind::U || u.twist != 1 || u.power != 1) return false;
    for (std::size_t i = 1; i < e.terms.size(); ++i) {
        const Atom& t = e.terms[i];
        if (t.kind == AtomKind::U || t.kind == AtomKind::Two || t.twist != 1) return false;
    }
    return true;
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

} // namespace

EigenspaceRanks ranks_from_fixed_locus(int gamma, int j, int alpha)
{
    auto r = try_ranks(gamma, j, alpha);
    if (!r)
        throw Error("no eigenspace ranks for gamma=" + std::to_string(gamma) + ", j=" + std::to_string(j) +
                    ", alpha=" + std::to_string(alpha));
    return r->ranks;
}

const std::vector<ExclusionRule>& exclusion_rules() { return kRules; }

const ExclusionRule& exclusion_rule(const std::string& id)
{
    for (const auto& r : kRules)
        if (r.id == id) return r;
    throw Error("unknown exclusion rule '" + id + "'");
}

Enumeration enumerate_prop2()
{
    Enumeration e{"prop2", {}, {}};
    for (auto [r, l, n] : symplectic_square_cases()) {
        CaseRow row;
        row.r = r;
        row.l = l;
        row.n = n;
        row.trace = {"r + l = 14", "n = 2 + r - l", "0 <= n <= 8"};
        e.rows.push_back(row);
    }
    return e;
}

Enumeration enumerate_table1()
{
    Enumeration e{"t1", {}, {}};
    struct Candidate {
        std::string fiber;
        int k, a, n;
        bool two_elliptic;
    };
    std::vector<Candidate> cands = {{"I0", 0, 0, 4, true}, {"I4", 0, 0, 4, false}};
    for (int M = 2; 4 * M <= 24; ++M) cands.push_back({"I" + std::to_string(4 * M), 0, M - 1, 4, false});
    cands.push_back({"IV*", 1, 0, 6, false});
    cands.push_back({"IV*", 0, 1, 4, false});

    std::vector<CaseRow> raw;
    for (const auto& c : cands) {
        const int alpha = c.k;
        if (c.n != 2 * alpha + 4) continue;
        const int j = c.k + c.n / 2 + 2 * c.a;
        std::optional<RankData> rd = c.two_elliptic ? ranks_from_rho(10, 8, alpha) : try_ranks(1, j, alpha);
        if (!rd) continue;
        CaseRow row;
        row.m = rd->ranks.m;
        row.r = rd->ranks.r;
        row.l = rd->ranks.l;
        row.n = c.n;
        row.k = c.k;
        row.a = c.a;
        row.fibers = {c.fiber};
        row.trace = {"C' = " + c.fiber, "n = 2k + 4",
                     c.two_elliptic ? std::string("two elliptic curves: rho = 10, d = 8")
                                    : "j = k + n/2 + 2a = " + std::to_string(j),
                     str("rho", rd->rho), str("d", rd->d)};
        if (row.m == 1 && rd->d != 2) {
            exclude(e, "t1_vinberg", row, str("d", rd->d));
            continue;
        }
        raw.push_back(row);
    }
    // one row per invariant tuple; C' lists every admissible type
    for (const auto& row : raw) {
        auto it = std::find_if(e.rows.begin(), e.rows.end(), [&](const CaseRow& x) {
            return std::tie(x.m, x.r, x.l, x.n, x.k, x.a) == std::tie(row.m, row.r, row.l, row.n, row.k, row.a);
        });
        if (it == e.rows.end())
            e.rows.push_back(row);
        else
            it->fibers.push_back(row.fibers.front());
    }
    return e;
}

namespace {

std::set<std::tuple<int, int, int, int>> corollary1_high_genus()
{
    std::set<std::tuple<int, int, int, int>> out;
    for (const auto& s : corollary1_scenarios())
        for (const auto& row : enumerate_corollary1(s))
            if (row.g_sigma && *row.g_sigma >= 2) out.insert({*row.g_sigma, row.n, row.k, row.a});
    return out;
}

struct SubTableEntry {
    int r, k, g, a;
    std::vector<std::pair<std::string, std::string>> lattices; // name, rule
};

const std::vector<SubTableEntry> kTable2Identifications = {
    {4, 0, 3, 3, {{"U+E8+D4", "t2_root_sum"}}},
    {3, 0, 3, 2, {{"U+D8+A1^2", "t2_root_sum"}}},
    {4, 1, 3, 0, {{"U+D4+A1^4", "t2_root_sum"}, {"U(2)+D4^2", "t2_remark22"}}},
    {4, 2, 4, 0, {{"U+D4^2", "t2_root_sum"}, {"U+D6+A1^2", "t2_root_sum"}}},
};

} // namespace

Enumeration enumerate_table2()
{
    Enumeration e{"t2", {}, {}};
    const auto c1 = corollary1_high_genus();
    for (int g = 2; g <= 11; ++g)
        for (int k = 0; k <= 20; ++k)
            for (int a = 0; a <= 10; ++a) {
                const int alpha = 1 - g + k;
                const int n = 2 * alpha + 4;
                if (n < 0) continue;
                const int m = 5 - alpha - a, l = 5 - alpha + a, r = l + 4 * alpha + 2;
                if (m < 1 || l < 0 || r < 1) continue;
                if (r < 1 + k + a + n / 2) continue;
                const int j = 2 * a + k + n / 2;
                auto rd = try_ranks(g, j, alpha);
                if (!rd || rd->ranks != EigenspaceRanks{r, l, m}) continue;
                if (m == 1 && rd->d != 2) continue;
                if (r >= 5 && !c1.count({g, n, k, a})) continue;

                CaseRow row;
                row.m = m;
                row.r = r;
                row.l = l;
                row.n = n;
                row.k = k;
                row.a = a;
                row.g = g;
                row.trace = {"alpha = 1 - g + k", "n = 2 alpha + 4", "m = 5 - alpha - a", "l - m = 2a",
                             "r >= 1 + k + a + n/2", "j = 2a + k + n/2 = " + std::to_string(j), str("rho", rd->rho),
                             str("d", rd->d)};
                if (r >= 5) row.trace.push_back("r >= 5: (g, n, k, a) from the invariant fibration cases");

                auto sub = std::find_if(kTable2Identifications.begin(), kTable2Identifications.end(),
                                        [&](const SubTableEntry& s) {
                                            return std::tie(s.r, s.k, s.g, s.a) == std::tie(r, k, g, a);
                                        });
                if (sub != kTable2Identifications.end()) {
                    for (const auto& [name, rule] : sub->lattices) exclude(e, rule, row, name);
                    continue;
                }
                e.rows.push_back(row);
            }
    return e;
}

std::vector<std::string> check_table2_excluded_lattices(const Enumeration& e)
{
    std::vector<std::string> problems;
    for (const auto& x : e.excluded) {
        if (x.detail.empty()) continue;
        const int rho = x.row.r + x.row.l;
        const int d = 22 - rho - 2 * x.row.g;
        TwoElemProfile p = two_elementary_profile(make_lattice(x.detail));
        if (p.rho != rho || p.d != d || p.sig_plus != 1)
            problems.push_back(x.detail + " has " + to_string(p) + " but the tuple forces rho=" +
                               std::to_string(rho) + ", d=" + std::to_string(d));
        auto names = match_catalog(p);
        if (std::find(names.begin(), names.end(), x.detail) == names.end())
            problems.push_back(x.detail + " is not matched by its own profile");
    }
    return problems;
}

Enumeration enumerate_table3()
{
    Enumeration e{"t3", {}, {}};
    for (int k = 1; k <= 4; ++k)
        for (int a = 0; a <= 10; ++a) {
            const int m = 5 - k - a;
            if (m < 1) continue;
            const int l = 5 - k + a, r = l + 4 * k + 2, n = 2 * k + 4;
            const int j = 2 * k + 1 + 2 * a;
            auto rd = try_ranks(0, j, k);
            if (!rd || rd->ranks != EigenspaceRanks{r, l, m}) continue;
            CaseRow row;
            row.m = m;
            row.r = r;
            row.l = l;
            row.n = n;
            row.k = k;
            row.a = a;
            row.trace = {"alpha = k", "l + m = 10 - 2k", "l - m = 2a", "gamma = 0",
                         "j = 2k + 1 + 2a = " + std::to_string(j), str("rho", rd->rho), str("d", rd->d)};
            if (m == 1 && rd->d != 2) continue;
            if (m == 1 && a != 0 && a != 3 && a != 4) {
                exclude(e, "t3_vinberg", row);
                continue;
            }
            e.rows.push_back(row);
        }
    return e;
}

namespace {

// Hyperbolic signature classes at (rho, d), skipping the two exceptional involution profiles.
std::vector<std::pair<TwoElemProfile, std::vector<std::string>>> generic_classes(int rho, int d)
{
    std::vector<std::pair<TwoElemProfile, std::vector<std::string>>> out;
    for (int delta = 0; delta <= 1; ++delta) {
        TwoElemProfile p = hyperbolic(rho, d, delta);
        if (is_empty_locus_profile(p) || is_two_elliptic_profile(p)) continue;
        auto names = match_catalog(p);
        if (!names.empty()) out.push_back({p, names});
    }
    return out;
}

bool contains_any(const std::vector<std::string>& names, std::initializer_list<const char*> wanted)
{
    for (const char* w : wanted)
        if (std::find(names.begin(), names.end(), w) != names.end()) return true;
    return false;
}

} // namespace

Enumeration enumerate_table5()
{
    Enumeration e{"t5", {}, {}};
    for (int k = 0; k <= 4; ++k) {
        const int n = 2 * k + 4;
        for (int n2 = 0; n2 <= n; n2 += 2) {
            const int n1 = n - n2;
            const int m = 10 - 2 * k;
            const int g = 1 + m - n2 / 2; // 2 - 2g - n2 = -2m
            if (g < 0 || !riemann_hurwitz_ok(g, n2)) continue;
            const int j = k + n1 / 2;
            auto rd = try_ranks(g, j, k);
            if (!rd || rd->ranks.l != 0) continue;
            const int rho = rd->rho, d = rd->d;
            if (rho % 4 != 2) continue;
            for (const auto& [p, names] : generic_classes(rho, d)) {
                CaseRow row;
                row.m = rd->ranks.m;
                row.r = rd->ranks.r;
                row.n1 = n1;
                row.n2 = n2;
                row.k = k;
                row.g = g;
                row.trace = {"l = 0, a = 0", "n = 2k + 4 = n1 + n2", "2 - 2g - n2 = -2m", "n2 <= 2g + 2",
                             "j = k + n1/2 = " + std::to_string(j), "r = 2 mod 4", to_string(p)};
                TwoElemProfile tp{22 - rho, d, p.delta, 2, 20 - rho};
                row.t_names = match_catalog(tp);
                const std::string detail = join(names);
                if (contains_any(names, {"U+A1^4", "U+D6+A1^2", "U+D4+A1^4", "U+E8+A1^4", "U+E8+E7+A1"})) {
                    exclude(e, "t5_fibration", row, detail);
                    continue;
                }
                if (contains_any(names, {"<2>+A1"})) {
                    exclude(e, "t5_two_a1", row, detail);
                    continue;
                }
                if (contains_any(names, {"U+E7+A1", "<2>+A1+E8"})) {
                    exclude(e, "t5_e7_a1", row, detail);
                    continue;
                }
                for (const auto& s : names) {
                    CaseRow out = row;
                    out.s_names = {s};
                    e.rows.push_back(out);
                }
            }
        }
    }
    return e;
}

Enumeration enumerate_table6()
{
    Enumeration e{"t6", {}, {}};
    for (int l = 1; l <= 9; ++l) {
        const int m = 10 - l, r = l + 2, rho = r + l;
        for (int n1 = 0; n1 <= 4; n1 += 2) {
            const int n2 = 4 - n1;
            for (int a = 0; a <= 10; ++a) {
                const int g = 9 + 2 * a + n1 / 2 - 2 * l; // r + l = 11 - g + 2a + n1/2
                if (g < 0 || !riemann_hurwitz_ok(g, n2)) continue;
                const int d = 22 - rho - 2 * g;
                if (d < 0 || d > 2 * m || d > rho) continue;

                auto classes = generic_classes(rho, d);
                std::string shape = "generic shape";
                if (g == 1 && a == 0 && n1 == 0) {
                    // sigma^2 may fix two elliptic curves and nothing else
                    for (int delta = 0; delta <= 1; ++delta) {
                        TwoElemProfile p = hyperbolic(rho, 8, delta);
                        if (!is_two_elliptic_profile(p)) continue;
                        auto names = match_catalog(p);
                        if (!names.empty()) classes.push_back({p, names});
                        shape = "generic shape or two elliptic curves";
                    }
                }

                CaseRow base;
                base.m = m;
                base.r = r;
                base.n1 = n1;
                base.g = g;
                base.a = a;
                base.trace = {"n = 4, k = 0", "m = 10 - l", "r = l + 2", "g = 9 + 2a + n1/2 - 2l",
                              "n2 = " + std::to_string(n2) + " <= 2g + 2", str("d", d) + " <= 2m", shape};

                std::vector<std::string> kept;
                for (const auto& [p, names] : classes) {
                    const bool root_sum =
                        std::any_of(names.begin(), names.end(), [](const std::string& s) { return is_root_sum_over_u(s); });
                    const std::string detail = join(names) + " " + to_string(p);
                    std::string rule;
                    if (l == 1 && n1 == 4)
                        rule = "t6_genus8";
                    else if (std::tie(m, r, g, a) == std::tuple(8, 4, 6, 0) && contains_any(names, {"U(2)+D4"}))
                        rule = "t6_quintic";
                    else if (std::tie(m, r, g, a) == std::tuple(7, 5, 6, 1) && contains_any(names, {"U+D6"}))
                        rule = "t6_i2star";
                    else if (g > 4 && root_sum && n1 != 2)
                        rule = "t6_two_points";
                    else if (g == 3 && root_sum && n2 == 0)
                        rule = "t6_trigonal";
                    if (!rule.empty()) {
                        exclude(e, rule, base, detail);
                        continue;
                    }
                    for (const auto& s : names) {
                        kept.push_back(s);
                        base.trace.push_back(s + ": " + to_string(p));
                    }
                }
                if (kept.empty()) continue;
                base.s_names = kept;
                e.rows.push_back(base);
            }
        }
    }
    return e;
}

Enumeration enumerate_table7()
{
    Enumeration e{"t7", {}, {}};
    struct Candidate {
        std::string fiber;
        int k, a, n1, n2;
        std::string rule; // nonempty: removed by a cited argument
    };
    std::vector<Candidate> cands;
    for (int k = 1; k <= 5; ++k) {
        cands.push_back({"I" + std::to_string(4 * k), k, 0, 2 * k, 4, ""});
        cands.push_back({"I" + std::to_string(4 * k + 4), k, 0, 2 * k + 4, 0, "t7_lemma4_in"});
    }
    cands.push_back({"IV*", 1, 0, 6, 0, ""});
    cands.push_back({"IV*", 2, 0, 4, 4, "t7_lemma4_ivstar"});
    cands.push_back({"IV*", 1, 1, 2, 4, ""});

    for (const auto& c : cands) {
        const int n = 2 * c.k + 4;
        if (c.n1 + c.n2 != n) continue;
        const int j = c.k + c.n1 / 2 + 2 * c.a;
        auto rd = try_ranks(1, j, c.k);
        if (!rd || rd->ranks.l < 1) continue;
        CaseRow row;
        row.m = rd->ranks.m;
        row.r = rd->ranks.r;
        row.l = rd->ranks.l;
        row.n1 = c.n1;
        row.n2 = c.n2;
        row.k = c.k;
        row.a = c.a;
        row.fibers = {c.fiber};
        row.trace = {"C' = " + c.fiber, "gamma = 1", "alpha = k", "n = 2k + 4 = n1 + n2", "l >= 1",
                     "j = k + n1/2 + 2a = " + std::to_string(j), str("rho", rd->rho), str("d", rd->d)};
        if (!c.rule.empty()) {
            exclude(e, c.rule, row, c.fiber);
            continue;
        }
        if (row.m == 1 && rd->d != 2) continue;
        e.rows.push_back(row);
    }
    return e;
}

Enumeration enumerate_theorem81()
{
    Enumeration e{"thm81", {}, {}};
    for (int m = 1; m <= 11; ++m)
        for (int l = 1; l <= 20; ++l) {
            const int twice_k = 10 - l - m;
            if (twice_k < 2 || twice_k % 2) continue;
            const int k = twice_k / 2;
            const int n = 2 * k + 4;
            for (int g = 2; g <= 11; ++g)
                for (int a = 0; a <= 11; ++a)
                    for (int n2 = 0; n2 <= n; n2 += 2) {
                        const int n1 = n - n2;
                        if (!riemann_hurwitz_ok(g, n2)) continue;
                        if (g - 2 * a != m - l + 1 - n2 / 2) continue;
                        if (4 * a > 8 - 2 * k + n2 + l - m) continue;
                        if (g + 2 * a + k + n1 / 2 > 11) continue;
                        if (g > m) continue;
                        CaseRow row;
                        row.m = m;
                        row.l = l;
                        row.r = 22 - l - 2 * m;
                        row.k = k;
                        row.g = g;
                        row.a = a;
                        row.n1 = n1;
                        row.n2 = n2;
                        row.trace = {"2k = 10 - l - m", "n2 <= 2g + 2", "g - 2a = m - l + 1 - n2/2",
                                     "4a <= 8 - 2k + n2 + l - m", "g + 2a + k + n1/2 <= 11", "g <= m"};
                        if (m + l == 4 && k == 3 && a == 3) {
                            exclude(e, "t81_ml4", row);
                            continue;
                        }
                        if (m + l == 6 && a == 4) {
                            exclude(e, "t81_ml6", row);
                            continue;
                        }
                        e.rows.push_back(row);
                    }
        }
    return e;
}

Thm81Counts theorem81_counts(const Enumeration& e)
{
    std::set<std::tuple<int, int, int, int, int>> coarse;
    std::set<std::tuple<int, int, int, int, int, int>> tuple;
    std::set<std::tuple<int, int, int, int, int, int, int>> fine;
    for (const auto& r : e.rows) {
        coarse.insert({r.m, r.l, r.k, r.g, r.a});
        tuple.insert({r.m, r.l, r.k, r.g, r.a, r.n2});
        fine.insert({r.m, r.l, r.k, r.g, r.a, r.n2, r.n1});
    }
    return {coarse.size(), tuple.size(), fine.size()};
}

std::vector<GoldenBound> theorem81_bounds(const Enumeration& e)
{
    std::map<int, GoldenBound> by_k;
    for (const auto& r : e.rows) {
        auto [it, fresh] = by_k.try_emplace(r.k, GoldenBound{r.m + r.l, r.k, r.g, r.a});
        it->second.g_max = std::max(it->second.g_max, r.g);
        it->second.a_max = std::max(it->second.a_max, r.a);
        (void)fresh;
    }
    std::vector<GoldenBound> out;
    for (auto it = by_k.rbegin(); it != by_k.rend(); ++it) out.push_back(it->second);
    return out;
}

Enumeration enumerate(const std::string& id)
{
    if (id == "prop2") return enumerate_prop2();
    if (id == "t1") return enumerate_table1();
    if (id == "t2") return enumerate_table2();
    if (id == "t3") return enumerate_table3();
    if (id == "t5") return enumerate_table5();
    if (id == "t6") return enumerate_table6();
    if (id == "t7") return enumerate_table7();
    if (id == "thm81") return enumerate_theorem81();
    throw Error("unknown table id '" + id + "'");
}

std::vector<std::string> integer_columns(const GoldenTable& t)
{
    std::vector<std::string> out;
    for (const auto& c : t.columns)
        if (c != "fiber" && c != "S" && c != "T") out.push_back(c);
    return out;
}

namespace {

std::string row_key(const CaseRow& r, const std::vector<std::string>& cols, bool payload)
{
    std::ostringstream os;
    for (const auto& c : cols) os << c << '=' << r.get(c) << ' ';
    if (payload) {
        auto sorted = [](std::vector<std::string> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        os << "fiber=" << join(sorted(r.fibers), "|") << " S=" << join(sorted(r.s_names), "|")
           << " T=" << join(sorted(r.t_names), "|");
    }
    return os.str();
}

} // namespace

TableDiff diff_rows(const GoldenTable& golden, const std::vector<CaseRow>& rows, bool with_payload)
{
    const auto cols = integer_columns(golden);
    TableDiff d;
    d.table_id = golden.id;
    std::set<std::string> want, have;
    for (const auto& r : golden.rows) want.insert(row_key(r, cols, with_payload));
    for (const auto& r : rows) have.insert(row_key(r, cols, with_payload));
    std::set<std::string> seen;
    for (const auto& r : golden.rows) {
        std::string k = row_key(r, cols, with_payload);
        if (!have.count(k) && seen.insert(k).second) d.missing.push_back(r);
    }
    seen.clear();
    for (const auto& r : rows) {
        std::string k = row_key(r, cols, with_payload);
        if (!want.count(k) && seen.insert(k).second) d.extra.push_back(r);
    }
    return d;
}

TableDiff diff_table(const std::string& table_id, const GoldenTable& golden, const Enumeration& e)
{
    // t6 compares invariant tuples; its names are checked separately.
    TableDiff d = diff_rows(golden, e.rows, table_id != "t6");
    d.table_id = table_id;
    return d;
}

std::vector<CaseRow> in_golden_order(const GoldenTable& golden, const std::vector<CaseRow>& rows)
{
    const auto cols = integer_columns(golden);
    std::vector<std::pair<std::size_t, std::size_t>> order; // golden index, row index
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string k = row_key(rows[i], cols, false);
        std::size_t pos = golden.rows.size();
        for (std::size_t gi = 0; gi < golden.rows.size(); ++gi) {
            const CaseRow& g = golden.rows[gi];
            if (row_key(g, cols, false) != k) continue;
            pos = gi;
            break;
        }
        if (pos == golden.rows.size())
            rest.push_back(i);
        else
            order.push_back({pos, i});
    }
    std::stable_sort(order.begin(), order.end(), [](auto& x, auto& y) { return x.first < y.first; });
    std::vector<CaseRow> out;
    for (auto [gi, i] : order) out.push_back(rows[i]);
    for (auto i : rest) out.push_back(rows[i]);
    return out;
}

std::vector<std::string> check_table5_lattices(const GoldenTable& golden)
{
    std::vector<std::string> problems;
    for (const auto& row : golden.rows) {
        for (const auto& s : row.s_names) {
            TwoElemProfile p = two_elementary_profile(make_lattice(s));
            const int j = row.k + row.n1 / 2;
            if (2 * row.g != 22 - p.rho - p.d) problems.push_back(s + ": 2g != 22 - rho - d");
            if (2 * j != p.rho - p.d) problems.push_back(s + ": 2j != rho - d");
            if (p.rho != row.r) problems.push_back(s + ": rank differs from r");
            for (const auto& t : row.t_names) {
                TwoElemProfile q = two_elementary_profile(make_lattice(t));
                if (q.rho != 22 - p.rho) problems.push_back(t + ": rank is not 22 - rk S");
                if (q.d != p.d) problems.push_back(t + ": d differs from " + s);
            }
        }
    }
    return problems;
}

std::vector<std::string> check_table6_lattices(const GoldenTable& golden)
{
    std::vector<std::string> problems;
    for (const auto& row : golden.rows) {
        const int l = row.r - 2;
        const int rho = row.r + l;
        const int d = 22 - rho - 2 * row.g;
        for (const auto& s : row.s_names) {
            TwoElemProfile p = two_elementary_profile(make_lattice(s));
            const bool generic = p.rho == rho && p.d == d && !is_two_elliptic_profile(p);
            const bool two_ell = is_two_elliptic_profile(p) && row.g == 1 && row.a == 0 && row.n1 == 0;
            if (!generic && !two_ell)
                problems.push_back(s + " " + to_string(p) + " does not fit rho=" + std::to_string(rho) +
                                   ", d=" + std::to_string(d));
            const std::string key = summand_key(parse_lattice_expr(s));
            auto names = match_catalog(p);
            if (std::none_of(names.begin(), names.end(),
                             [&](const std::string& n) { return summand_key(parse_lattice_expr(n)) == key; }))
                problems.push_back(s + " is not matched by its own profile");
        }
    }
    return problems;
}

std::vector<std::string> soundness_violations(const std::string& id, const GoldenTable& golden)
{
    std::vector<std::string> out;
    auto fail = [&](const CaseRow& r, const std::string& what) {
        std::ostringstream os;
        os << id << " row";
        for (const auto& c : integer_columns(golden)) os << ' ' << c << '=' << r.get(c);
        os << ": " << what;
        out.push_back(os.str());
    };
    for (const auto& r : golden.rows) {
        if (id == "prop2") {
            if (r.r + r.l != 14 || r.n != 2 + r.r - r.l || r.n < 0 || r.n > 8 || r.n % 2) fail(r, "r + l = 14, n = 2 + r - l, n in {0, 2, .., 8}");
            continue;
        }
        if (id == "thm81") continue;
        const int l = id == "t5" ? 0 : (id == "t6" ? r.r - 2 : r.l);
        if (r.r + l + 2 * r.m != 22) fail(r, "r + l + 2m = 22");
        if (id == "t1" || id == "t2" || id == "t3") {
            FixedLocusData fl;
            fl.n = r.n;
            fl.k = r.k;
            fl.a = r.a;
            fl.n1 = r.n;
            if (id == "t1") fl.genera = {1};
            if (id == "t2") fl.genera = {r.g};
            if (id == "t1" && r.fibers == std::vector<std::string>{"I0"}) {
                // the points lie on the second elliptic curve
                fl.n1 = 0;
                fl.g_top = 1;
            }
            for (const auto& rel : check_order4_relations({r.r, r.l, r.m}, fl))
                if (rel.applicable && !rel.holds) fail(r, rel.statement);
        }
        if (id == "t1" || id == "t7") {
            const int k = r.k;
            const int n = id == "t1" ? r.n : r.n1 + r.n2;
            const int n1 = id == "t1" ? n : r.n1;
            if (n != 2 * k + 4) fail(r, "n = 2k + 4");
            const bool two_ell = r.fibers == std::vector<std::string>{"I0"};
            const int j = k + n1 / 2 + 2 * r.a;
            auto rd = two_ell ? ranks_from_rho(10, 8, k) : try_ranks(1, j, k);
            if (!rd || rd->ranks != EigenspaceRanks{r.r, r.l, r.m}) fail(r, "ranks from the fixed locus");
        }
        if (id == "t2") {
            const int alpha = 1 - r.g + r.k;
            auto rd = try_ranks(r.g, 2 * r.a + r.k + r.n / 2, alpha);
            if (!rd || rd->ranks != EigenspaceRanks{r.r, r.l, r.m}) fail(r, "ranks from the fixed locus");
            if (r.r < 1 + r.k + r.a + r.n / 2) fail(r, "r >= 1 + k + a + n/2");
        }
        if (id == "t3") {
            auto rd = try_ranks(0, 2 * r.k + 1 + 2 * r.a, r.k);
            if (!rd || rd->ranks != EigenspaceRanks{r.r, r.l, r.m}) fail(r, "ranks from the fixed locus");
        }
        if (id == "t5") {
            if (r.n1 + r.n2 != 2 * r.k + 4) fail(r, "n1 + n2 = 2k + 4");
            if (2 - 2 * r.g - r.n2 != -2 * r.m) fail(r, "2 - 2g - n2 = -2m");
            if (!riemann_hurwitz_ok(r.g, r.n2)) fail(r, "n2 <= 2g + 2");
            if (r.r % 4 != 2) fail(r, "r = 2 mod 4");
            auto rd = try_ranks(r.g, r.k + r.n1 / 2, r.k);
            if (!rd || rd->ranks != EigenspaceRanks{r.r, 0, r.m}) fail(r, "ranks from the fixed locus");
        }
        if (id == "t6") {
            const int rho = r.r + l;
            if (r.m != 10 - l) fail(r, "m = 10 - l");
            if (r.g != 9 + 2 * r.a + r.n1 / 2 - 2 * l) fail(r, "r + l = 11 - g + 2a + n1/2");
            if (r.n1 < 0 || r.n1 > 4 || r.n1 % 2) fail(r, "n1 in {0, 2, 4}");
            else if (!riemann_hurwitz_ok(r.g, 4 - r.n1)) fail(r, "n2 <= 2g + 2");
            const int d = 22 - rho - 2 * r.g;
            if (d < 0 || d > 2 * r.m || d > rho) fail(r, "0 <= d <= min(2m, rho)");
        }
    }
    return out;
}

} // namespace k3fix4
