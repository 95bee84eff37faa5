#include "k3fix4/lefschetz.hpp"

#include "k3fix4/error.hpp"

#include <algorithm>

namespace k3fix4 {

GaussianRational GaussianRational::operator+(const GaussianRational& o) const
{
    return {mpq_class(re + o.re), mpq_class(im + o.im)};
}

GaussianRational GaussianRational::operator-(const GaussianRational& o) const
{
    return {mpq_class(re - o.re), mpq_class(im - o.im)};
}

GaussianRational GaussianRational::operator*(const GaussianRational& o) const
{
    return {mpq_class(re * o.re - im * o.im), mpq_class(re * o.im + im * o.re)};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const
{
    mpq_class norm = o.re * o.re + o.im * o.im;
    if (norm == 0) throw Error("division by zero");
    GaussianRational conj{o.re, mpq_class(-o.im)};
    GaussianRational p = *this * conj;
    return {mpq_class(p.re / norm), mpq_class(p.im / norm)};
}

std::string GaussianRational::str() const
{
    std::string s = re.get_str();
    if (im >= 0)
        s += " + " + im.get_str() + "i";
    else
        s += " - " + mpq_class(-im).get_str() + "i";
    return s;
}

GaussianRational holomorphic_lefschetz(long n, long alpha)
{
    // det(I - diag(-i, -1)) = (1 + i) * 2
    const GaussianRational det{2, 2};
    GaussianRational fixed_points = GaussianRational{mpq_class(n), 0} / det;
    GaussianRational curves{mpq_class(-alpha, 2), mpq_class(alpha, 2)};
    curves.re.canonicalize();
    curves.im.canonicalize();
    return fixed_points + curves;
}

GaussianRational expected_lefschetz()
{
    return {1, -1};
}

int FixedLocusData::alpha() const
{
    int s = k;
    for (int g : genera) s += 1 - g;
    return s;
}

namespace {

RelationResult rel(std::string id, std::string statement, bool holds)
{
    RelationResult r;
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.holds = holds;
    return r;
}

} // namespace

std::vector<RelationResult> check_order4_relations(const EigenspaceRanks& ranks, const FixedLocusData& locus)
{
    const int r = ranks.r, l = ranks.l, m = ranks.m;
    const int alpha = locus.alpha();
    std::vector<RelationResult> out;
    out.push_back(rel("rank_sum", "r + l + 2m = 22", r + l + 2 * m == 22));
    out.push_back(rel("holomorphic", "n = 2*alpha + 4", locus.n == 2 * alpha + 4));
    out.push_back(rel("alpha_r_l", "4*alpha = r - l - 2", 4 * alpha == r - l - 2));
    out.push_back(rel("alpha_l_m", "r - l - 2 = 2(10 - l - m)", r - l - 2 == 2 * (10 - l - m)));

    int chi_s = locus.n;
    chi_s += 2 * alpha;
    out.push_back(rel("chi_fix_sigma", "chi(Fix sigma) = 2 + r - l", chi_s == 2 + r - l));

    int chi_s2 = 2 * alpha + 4 * locus.a + locus.n1;
    if (locus.g_top) chi_s2 += 2 - 2 * *locus.g_top;
    out.push_back(rel("chi_fix_sigma2", "chi(Fix sigma^2) = 24 - 4m", chi_s2 == 24 - 4 * m));

    // these need every sigma^2-fixed curve outside Fix(sigma) to be rational
    const bool ctx = !locus.g_top.has_value();
    const std::string note = "needs no sigma^2-fixed curve of positive genus outside Fix(sigma)";
    RelationResult a = rel("l_minus_m", "l - m = 2a", l - m == 2 * locus.a);
    a.applicable = ctx;
    a.note = note;
    out.push_back(a);
    RelationResult kb = rel("k_bound", "k <= r + m - 8", locus.k <= r + m - 8);
    kb.applicable = ctx;
    kb.note = note;
    out.push_back(kb);
    return out;
}

bool all_applicable_hold(const std::vector<RelationResult>& report)
{
    return std::all_of(report.begin(), report.end(), [](const RelationResult& r) { return !r.applicable || r.holds; });
}

std::vector<std::tuple<int, int, int>> symplectic_square_cases()
{
    std::vector<std::tuple<int, int, int>> out;
    for (int r = 0; r <= 14; ++r) {
        int l = 14 - r;
        int n = 2 + r - l;
        if (n < 0 || n > 8 || n % 2) continue;
        out.emplace_back(r, l, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int moduli_dimension(ModuliKind kind, const EigenspaceRanks& ranks)
{
    int d = kind == ModuliKind::PurelyNonSymplectic ? ranks.m - 1 : ranks.l - 2;
    if (d < 0) throw Error("negative moduli dimension");
    return d;
}

bool hodge_index_bound(long x2, long xf, long fsf, bool with_section)
{
    const mpz_class lhs = with_section ? mpz_class(x2) * (fsf + 1) : mpz_class(fsf) * x2;
    const mpz_class rhs = mpz_class(2) * xf * xf;
    return lhs <= rhs;
}

bool riemann_hurwitz_ok(int g, int fixed_points)
{
    if (g < 0 || fixed_points < 0) throw Error("negative genus or point count");
    if (fixed_points % 2) throw Error("an involution of a curve has an even number of fixed points");
    return fixed_points <= 2 * g + 2;
}

} // namespace k3fix4
