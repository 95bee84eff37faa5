#include "k3fix4/fibers.hpp"

#include "k3fix4/error.hpp"
#include "k3fix4/matrix.hpp"

#include <algorithm>
#include <tuple>

namespace k3fix4 {

int euler_number(const KodairaFiber& f)
{
    switch (f.tag) {
    case FiberTag::I: return f.N;
    case FiberTag::IStar: return f.N + 6;
    case FiberTag::II: return 2;
    case FiberTag::III: return 3;
    case FiberTag::IV: return 4;
    case FiberTag::IVStar: return 8;
    case FiberTag::IIIStar: return 9;
    case FiberTag::IIStar: return 10;
    }
    return 0;
}

std::string to_string(const KodairaFiber& f)
{
    switch (f.tag) {
    case FiberTag::I: return "I" + std::to_string(f.N);
    case FiberTag::IStar: return "I" + std::to_string(f.N) + "*";
    case FiberTag::II: return "II";
    case FiberTag::III: return "III";
    case FiberTag::IV: return "IV";
    case FiberTag::IIStar: return "II*";
    case FiberTag::IIIStar: return "III*";
    case FiberTag::IVStar: return "IV*";
    }
    return "";
}

KodairaFiber parse_fiber(const std::string& s)
{
    if (s == "II") return {FiberTag::II, 0};
    if (s == "III") return {FiberTag::III, 0};
    if (s == "IV") return {FiberTag::IV, 0};
    if (s == "II*") return {FiberTag::IIStar, 0};
    if (s == "III*") return {FiberTag::IIIStar, 0};
    if (s == "IV*") return {FiberTag::IVStar, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            int n = std::stoi(digits);
            return {star ? FiberTag::IStar : FiberTag::I, n};
        }
    }
    throw Error("unknown Kodaira fiber '" + s + "'");
}

FiberAction fiber_action(ActionKind k)
{
    switch (k) {
    case ActionKind::IIIa: return {{FiberTag::III, 0}, 'a'};
    case ActionKind::IIIb: return {{FiberTag::III, 0}, 'b'};
    case ActionKind::I0a: return {{FiberTag::IStar, 0}, 'a'};
    case ActionKind::I0b: return {{FiberTag::IStar, 0}, 'b'};
    case ActionKind::IIIsa: return {{FiberTag::IIIStar, 0}, 'a'};
    case ActionKind::IIIsb: return {{FiberTag::IIIStar, 0}, 'b'};
    }
    throw Error("unknown action");
}

std::string type_name(ActionKind k)
{
    return to_string(fiber_action(k).fiber);
}

char variant_of(ActionKind k)
{
    return fiber_action(k).variant;
}

std::string to_string(ActionKind k)
{
    return type_name(k) + " " + variant_of(k) + ")";
}

const ContributionTable& default_contributions()
{
    //                                   e  dn dk da rs rs2
    static const ContributionTable t = {{{3, 0, 0, 0, 1, 0},
                                         {3, 1, 0, 0, 0, 1},
                                         {6, 2, 0, 0, 0, 0},
                                         {6, 1, 0, 0, 1, 1},
                                         {9, 5, 1, 0, 0, 1},
                                         {9, 2, 0, 1, 1, 0}}};
    return t;
}

ContributionVector contribution(const FiberAction& fa)
{
    if (fa.variant != 'a' && fa.variant != 'b') throw Error("undefined variant");
    const bool a = fa.variant == 'a';
    if (fa.fiber == KodairaFiber{FiberTag::III, 0})
        return default_contributions()[static_cast<std::size_t>(a ? ActionKind::IIIa : ActionKind::IIIb)];
    if (fa.fiber == KodairaFiber{FiberTag::IStar, 0})
        return default_contributions()[static_cast<std::size_t>(a ? ActionKind::I0a : ActionKind::I0b)];
    if (fa.fiber == KodairaFiber{FiberTag::IIIStar, 0})
        return default_contributions()[static_cast<std::size_t>(a ? ActionKind::IIIsa : ActionKind::IIIsb)];
    throw Error("no action variants for fiber " + to_string(fa.fiber));
}

std::array<FibrationScenario, 4> corollary1_scenarios()
{
    return {{{false, true}, {true, false}, {false, false}, {true, true}}};
}

std::string scenario_id(const FibrationScenario& s)
{
    std::string a = s.sigma_reducible ? "red" : "irr";
    std::string b = s.sigma2_reducible ? "red" : "irr";
    return a + "_" + b;
}

bool canonical_less(const Corollary1Row& x, const Corollary1Row& y)
{
    const int gx = x.g_sigma.value_or(-1), gy = y.g_sigma.value_or(-1);
    const int hx = x.g_sigma2.value_or(-1), hy = y.g_sigma2.value_or(-1);
    if (gx != gy) return gx > gy;
    if (hx != hy) return hx > hy;
    return std::tie(x.n, x.k, x.a, x.counts) < std::tie(y.n, y.k, y.a, y.counts);
}

std::string fibers_to_string(const FiberCounts& c, bool ascii)
{
    std::string out;
    for (std::size_t i = 0; i < kActionCount; ++i) {
        if (!c[i]) continue;
        if (!out.empty()) out += " + ";
        if (c[i] > 1) out += std::to_string(c[i]) + " ";
        std::string t = type_name(kActions[i]);
        if (!ascii && t == "I0*") t = "I\xE2\x82\x80*";
        out += t + " " + variant_of(kActions[i]) + ")";
    }
    return out;
}

int euler_sum(const FiberCounts& c, const ContributionTable& t)
{
    int s = 0;
    for (std::size_t i = 0; i < kActionCount; ++i) s += c[i] * t[i].e;
    return s;
}

ScenarioBase scenario_base(const FibrationScenario& s, std::optional<int> g_sigma)
{
    ScenarioBase b;
    if (s.sigma_reducible) {
        b.k = 2;
        b.alpha = 2;
    } else {
        const int g = g_sigma.value_or(0);
        b.alpha = 1 - g;
        b.k = g == 0 ? 1 : 0;
    }
    if (s.sigma2_reducible) b.a = 1;
    return b;
}

namespace {

void recurse(std::size_t idx, int euler_left, FiberCounts& cur, const ContributionTable& t,
             std::vector<FiberCounts>& out)
{
    if (idx == kActionCount) {
        if (euler_left == 0) out.push_back(cur);
        return;
    }
    const int e = t[idx].e;
    const int max = e > 0 ? euler_left / e : 0;
    for (int c = 0; c <= max; ++c) {
        cur[idx] = c;
        recurse(idx + 1, euler_left - c * e, cur, t, out);
    }
    cur[idx] = 0;
}

} // namespace

std::vector<Corollary1Row> enumerate_corollary1(const FibrationScenario& s, const ContributionTable& t)
{
    std::vector<FiberCounts> multisets;
    FiberCounts cur{};
    recurse(0, 24, cur, t, multisets);

    std::vector<Corollary1Row> rows;
    for (const auto& c : multisets) {
        ContributionVector sum;
        for (std::size_t i = 0; i < kActionCount; ++i) {
            sum.dn += c[i] * t[i].dn;
            sum.dk += c[i] * t[i].dk;
            sum.da += c[i] * t[i].da;
            sum.ram_s += c[i] * t[i].ram_s;
            sum.ram_s2 += c[i] * t[i].ram_s2;
        }
        Corollary1Row row;
        row.counts = c;
        // a reducible bisection has no ramification, so no fiber may carry its branch points
        if (s.sigma_reducible) {
            if (sum.ram_s != 0) continue;
        } else {
            if (sum.ram_s < 2 || sum.ram_s % 2) continue;
            row.g_sigma = sum.ram_s / 2 - 1;
        }
        if (s.sigma2_reducible) {
            if (sum.ram_s2 != 0) continue;
        } else {
            if (sum.ram_s2 < 2 || sum.ram_s2 % 2) continue;
            row.g_sigma2 = sum.ram_s2 / 2 - 1;
        }
        ScenarioBase b = scenario_base(s, row.g_sigma);
        row.n = sum.dn;
        row.k = b.k + sum.dk;
        row.a = b.a + sum.da;
        const int alpha = b.alpha + sum.dk;
        if (row.n != 2 * alpha + 4) continue;
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), canonical_less);
    return rows;
}

namespace {

// Returns rank of the coefficient part and whether the augmented system is consistent.
struct SolveOut {
    std::size_t rank = 0;
    bool consistent = true;
    std::array<Rat, kActionCount> x{};
};

SolveOut solve_column(RatMatrix a)
{
    SolveOut out;
    const std::size_t rows = a.rows();
    const std::size_t cols = kActionCount;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        Rat piv = a(r, c);
        for (std::size_t j = 0; j <= cols; ++j) a(r, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = -a(i, c);
            a.add_row(i, r, f);
        }
        pivot_col.push_back(c);
        ++r;
    }
    out.rank = r;
    for (std::size_t i = r; i < rows; ++i)
        if (a(i, cols) != 0) out.consistent = false;
    for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = a(i, cols);
    return out;
}

} // namespace

UniquenessResult solve_contributions(const std::vector<std::pair<FibrationScenario, Corollary1Row>>& rows)
{
    UniquenessResult res;
    res.unique = true;
    res.consistent = true;
    const char* names[] = {"e", "dn", "dk", "da", "ram_s", "ram_s2"};
    for (int col = 0; col < 6; ++col) {
        std::vector<std::vector<Rat>> eqs;
        for (const auto& [s, row] : rows) {
            ScenarioBase b = scenario_base(s, row.g_sigma);
            long rhs = 0;
            switch (col) {
            case 0: rhs = 24; break;
            case 1: rhs = row.n; break;
            case 2: rhs = row.k - b.k; break;
            case 3: rhs = row.a - b.a; break;
            case 4:
                if (s.sigma_reducible || !row.g_sigma) continue;
                rhs = 2 * *row.g_sigma + 2;
                break;
            case 5:
                if (s.sigma2_reducible || !row.g_sigma2) continue;
                rhs = 2 * *row.g_sigma2 + 2;
                break;
            }
            std::vector<Rat> eq;
            for (std::size_t i = 0; i < kActionCount; ++i) eq.emplace_back(row.counts[i]);
            eq.emplace_back(rhs);
            eqs.push_back(std::move(eq));
        }
        RatMatrix a(eqs.size(), kActionCount + 1);
        for (std::size_t i = 0; i < eqs.size(); ++i)
            for (std::size_t j = 0; j <= kActionCount; ++j) a(i, j) = eqs[i][j];
        SolveOut s = solve_column(a);
        const bool full = s.rank == kActionCount;
        res.unique = res.unique && full;
        res.consistent = res.consistent && s.consistent;
        std::string line = std::string(names[col]) + ": " + std::to_string(eqs.size()) + " equations, rank " +
                           std::to_string(s.rank) + (s.consistent ? ", consistent" : ", inconsistent");
        res.log.push_back(line);
        bool integral = true;
        for (std::size_t i = 0; i < kActionCount; ++i)
            if (s.x[i].get_den() != 1) integral = false;
        if (!integral) {
            res.consistent = false;
            res.log.push_back(std::string(names[col]) + ": non-integral solution");
            continue;
        }
        for (std::size_t i = 0; i < kActionCount; ++i) {
            int v = static_cast<int>(s.x[i].get_num().get_si());
            ContributionVector& cv = res.solved[i];
            switch (col) {
            case 0: cv.e = v; break;
            case 1: cv.dn = v; break;
            case 2: cv.dk = v; break;
            case 3: cv.da = v; break;
            case 4: cv.ram_s = v; break;
            case 5: cv.ram_s2 = v; break;
            }
        }
    }
    return res;
}

} // namespace k3fix4
