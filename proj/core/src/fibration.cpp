#include "k3fix4/fibration.hpp"

#include "k3fix4/error.hpp"
#include "k3fix4/golden.hpp"
#include "k3fix4/lattice.hpp"

#include <algorithm>

namespace k3fix4 {

bool FamilyDiscriminantReport::all_equal() const
{
    return !coefficients.empty() &&
           std::all_of(coefficients.begin(), coefficients.end(), [](const auto& c) { return c.equal(); });
}

FamilyDiscriminantReport family_discriminant_coeffs()
{
    const std::vector<std::string> vars = {"t", "f", "g", "a", "b", "c", "d", "e"};
    FamilyDiscriminantReport rep;
    rep.alpha = parse_poly("f*t^8 + a*t^4 + b", vars);
    rep.beta = parse_poly("g*t^12 + c*t^8 + d*t^4 + e", vars);
    rep.delta = rep.alpha.pow(3).scaled(4) + rep.beta.pow(2).scaled(27);
    rep.convention = "Delta = 4 alpha^3 + 27 beta^2";

    const GoldenDiscriminants& golden = golden_discriminants();
    if (golden.variables != vars) throw Error("embedded discriminant data uses another variable order");
    for (const auto& c : golden.coefficients) {
        DiscriminantCoefficient dc;
        dc.name = c.name;
        dc.power = c.power;
        dc.computed = rep.delta.coefficient("t", c.power);
        dc.printed = parse_poly(c.value, vars);
        rep.coefficients.push_back(std::move(dc));
    }
    return rep;
}

Y2DiscriminantReport discriminant_y2_x3_minus_ax()
{
    const std::vector<std::string> vars = {"a"};
    Y2DiscriminantReport rep;
    const MultiPoly alpha = -MultiPoly::variable(vars, "a");
    rep.computed = alpha.pow(3).scaled(4);
    rep.printed = parse_poly(golden_discriminants().y2_printed, vars);
    if (rep.computed == rep.printed)
        rep.unit = 1;
    else if (rep.computed == -rep.printed)
        rep.unit = -1;
    rep.convention = "y^2 = x^3 + alpha x + beta with alpha = -a(t), beta = 0 gives Delta = 4 alpha^3 = " +
                     rep.computed.to_string() + "; printed " + rep.printed.to_string() + "; ratio " +
                     std::to_string(rep.unit) + ", vanishing orders are unaffected";

    const std::vector<std::string> tv = {"t"};
    for (const char* a_text : {"1", "t", "3*t^8 + t^7 - 2*t^5 + 5*t^3 - t + 7"}) {
        const MultiPoly a = parse_poly(a_text, tv);
        const MultiPoly delta = (-a).pow(3).scaled(4);
        rep.vanishing.push_back({a_text, delta.lowest_degree_in("t"), delta.degree_in("t")});
    }
    return rep;
}

KodairaFiber fiber_of_root(const std::string& symbol)
{
    LatticeExpr e = parse_lattice_expr(symbol);
    if (e.terms.size() != 1 || e.terms[0].twist != 1 || e.terms[0].power != 1)
        throw Error("'" + symbol + "' is not a single root lattice");
    const Atom& t = e.terms[0];
    switch (t.kind) {
    case AtomKind::A: return {FiberTag::I, t.n + 1};
    case AtomKind::D: return {FiberTag::IStar, t.n - 4};
    case AtomKind::E:
        if (t.n == 6) return {FiberTag::IVStar, 0};
        if (t.n == 7) return {FiberTag::IIIStar, 0};
        return {FiberTag::IIStar, 0};
    default: throw Error("'" + symbol + "' is not a root lattice");
    }
}

std::vector<Table4Audit> audit_table4()
{
    std::vector<Table4Audit> out;
    for (const auto& row : golden_table4()) {
        Table4Audit a;
        a.no = row.no;
        a.root_part = row.root_part;
        a.mw_rank = row.mw_rank;
        for (const Atom& t : parse_lattice_expr(row.root_part).terms) {
            Atom single = t;
            single.power = 1;
            const KodairaFiber f = fiber_of_root(to_ascii(LatticeExpr{{single}}));
            for (int i = 0; i < t.power; ++i) {
                a.root_rank += single.rank();
                a.euler_budget += euler_number(f);
                a.fibers.push_back(to_string(f));
            }
        }
        a.shioda_tate_ok = a.root_rank + a.mw_rank == 18;
        a.residual_i1 = 24 - a.euler_budget;
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace k3fix4
