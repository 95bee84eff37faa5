#include "k3fix4/lattice.hpp"

#include "k3fix4/error.hpp"
#include "k3fix4/smith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace k3fix4 {

namespace {
constexpr std::string_view kLangle = "\xE2\x9F\xA8"; // U+27E8
constexpr std::string_view kRangle = "\xE2\x9F\xA9";
} // namespace

int Atom::rank() const
{
    int base = 0;
    switch (kind) {
    case AtomKind::U: base = 2; break;
    case AtomKind::Two: base = 1; break;
    default: base = n; break;
    }
    return base * power;
}

int LatticeExpr::rank() const
{
    int r = 0;
    for (const auto& t : terms) r += t.rank();
    return r;
}

// ---- parsing ----

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    LatticeExpr parse()
    {
        LatticeExpr e;
        skip();
        if (eof()) throw ParseError("empty lattice expression", pos_);
        e.terms.push_back(atom());
        for (;;) {
            skip();
            if (eof()) break;
            if (!plus()) throw ParseError("expected '+'", pos_);
            skip();
            e.terms.push_back(atom());
        }
        return e;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }

    void skip()
    {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool oplus()
    {
        if (s_.substr(pos_, 3) == "\xE2\x8A\x95") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool plus()
    {
        if (!eof() && s_[pos_] == '+') {
            ++pos_;
            return true;
        }
        return oplus();
    }

    int number()
    {
        skip();
        std::size_t start = pos_;
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw ParseError("number too large", start);
            ++pos_;
        }
        if (start == pos_) throw ParseError("expected a number", start);
        return static_cast<int>(v);
    }

    Atom atom()
    {
        Atom a;
        std::size_t start = pos_;
        if (eof()) throw ParseError("expected a lattice atom", pos_);
        char c = s_[pos_];
        if (c == 'U') {
            ++pos_;
            a.kind = AtomKind::U;
        } else if (c == '<' || s_.substr(pos_, 3) == kLangle) {
            const bool uni = c != '<';
            pos_ += uni ? 3 : 1;
            int v = number();
            skip();
            if (v != 2) throw ParseError("only <2> is supported", start);
            if (uni ? s_.substr(pos_, 3) != kRangle : eof() || s_[pos_] != '>')
                throw ParseError(uni ? "expected '\xE2\x9F\xA9'" : "expected '>'", pos_);
            pos_ += uni ? 3 : 1;
            a.kind = AtomKind::Two;
        } else if (c == 'A' || c == 'D' || c == 'E') {
            ++pos_;
            a.kind = c == 'A' ? AtomKind::A : c == 'D' ? AtomKind::D : AtomKind::E;
            a.n = number();
            if (a.kind == AtomKind::A && a.n < 1) throw ParseError("An requires n >= 1", start);
            if (a.kind == AtomKind::D && a.n < 4) throw ParseError("Dn requires n >= 4", start);
            if (a.kind == AtomKind::E && (a.n < 6 || a.n > 8))
                throw ParseError("En requires n in {6,7,8}", start);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        skip();
        if (!eof() && s_[pos_] == '(') {
            ++pos_;
            std::size_t at = pos_;
            a.twist = number();
            if (a.twist < 1) throw ParseError("twist must be >= 1", at);
            skip();
            if (eof() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            skip();
        }
        if (!eof() && s_[pos_] == '^') {
            ++pos_;
            skip();
            oplus();
            std::size_t at = pos_;
            a.power = number();
            if (a.power < 1) throw ParseError("exponent must be >= 1", at);
        }
        return a;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string atom_core(const Atom& a)
{
    std::string s;
    switch (a.kind) {
    case AtomKind::U: s = "U"; break;
    case AtomKind::Two: s = "<2>"; break;
    case AtomKind::A: s = "A" + std::to_string(a.n); break;
    case AtomKind::D: s = "D" + std::to_string(a.n); break;
    case AtomKind::E: s = "E" + std::to_string(a.n); break;
    }
    if (a.twist != 1) s += "(" + std::to_string(a.twist) + ")";
    return s;
}

} // namespace

LatticeExpr parse_lattice_expr(std::string_view text)
{
    return ExprParser(text).parse();
}

std::string to_ascii(const LatticeExpr& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i) out += "+";
        out += atom_core(e.terms[i]);
        if (e.terms[i].power != 1) out += "^" + std::to_string(e.terms[i].power);
    }
    return out;
}

std::string to_unicode(const LatticeExpr& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i) out += " \xE2\x8A\x95 ";
        const Atom& a = e.terms[i];
        out += a.kind == AtomKind::Two ? std::string(kLangle) + "2" + std::string(kRangle) : atom_core(a);
        if (a.power != 1) out += "^\xE2\x8A\x95" + std::to_string(a.power);
    }
    return out;
}

// ---- construction ----

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram))
{
    if (!is_symmetric(gram_)) throw Error("Gram matrix must be square and symmetric");
}

bool Lattice::is_even() const
{
    for (std::size_t i = 0; i < dim(); ++i)
        if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
    return true;
}

namespace {

IntMatrix chain_cartan(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = -2;
        if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
    }
    return m;
}

IntMatrix atom_gram(const Atom& a)
{
    switch (a.kind) {
    case AtomKind::U: return IntMatrix{{0, 1}, {1, 0}};
    case AtomKind::Two: return IntMatrix{{2}};
    case AtomKind::A: return chain_cartan(static_cast<std::size_t>(a.n));
    case AtomKind::D: {
        const auto n = static_cast<std::size_t>(a.n);
        IntMatrix m = chain_cartan(n);
        // detach the last node from n-2 and hang it on n-3
        m(n - 1, n - 2) = m(n - 2, n - 1) = 0;
        m(n - 1, n - 3) = m(n - 3, n - 1) = 1;
        return m;
    }
    case AtomKind::E: {
        const auto n = static_cast<std::size_t>(a.n);
        IntMatrix m = chain_cartan(n);
        m(n - 1, n - 2) = m(n - 2, n - 1) = 0;
        m(n - 1, 2) = m(2, n - 1) = 1;
        return m;
    }
    }
    throw Error("unknown atom");
}

} // namespace

Lattice make_atom(const Atom& atom)
{
    if (atom.twist < 1) throw Error("twist must be >= 1");
    if (atom.power < 1) throw Error("exponent must be >= 1");
    IntMatrix one = atom_gram(atom).scaled(Int(atom.twist));
    IntMatrix g = one;
    for (int i = 1; i < atom.power; ++i) g = block_diagonal(g, one);
    return Lattice(g);
}

Lattice make_lattice(const LatticeExpr& expr)
{
    if (expr.terms.empty()) throw Error("empty lattice expression");
    Lattice l = make_atom(expr.terms.front());
    for (std::size_t i = 1; i < expr.terms.size(); ++i) l = direct_sum(l, make_atom(expr.terms[i]));
    return l;
}

Lattice make_lattice(std::string_view text)
{
    return make_lattice(parse_lattice_expr(text));
}

Lattice direct_sum(const Lattice& a, const Lattice& b)
{
    return Lattice(block_diagonal(a.gram(), b.gram()));
}

Lattice twist(const Lattice& l, int k)
{
    if (k < 1) throw Error("twist must be >= 1");
    return Lattice(l.gram().scaled(Int(k)));
}

// ---- invariants ----

DiscriminantGroup discriminant_group(const Lattice& l)
{
    if (l.dim() == 0) return {};
    SmithForm s = smith_normal_form(l.gram());
    DiscriminantGroup g;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        const Int& d = s.d(i, i);
        if (d == 0) throw Error("degenerate lattice");
        if (d != 1) {
            g.elementary_divisors.push_back(d);
            g.order *= d;
        }
    }
    return g;
}

Signature signature(const IntMatrix& gram)
{
    RatMatrix a = to_rational(gram);
    Signature sig;
    std::size_t n = a.rows();
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && a(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // zero diagonal: fold a partner into some row to create a pivot
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (!alive[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[j] && j != i && a(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            }
            if (bi == n) {
                sig.zero += static_cast<int>(remaining);
                break;
            }
            a.add_row(bi, bj, Rat(1));
            a.add_col(bi, bj, Rat(1));
            p = bi;
        }
        Rat piv = a(p, p);
        if (piv > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || i == p || a(i, p) == 0) continue;
            Rat f = -a(i, p) / piv;
            a.add_row(i, p, f);
            a.add_col(i, p, f);
        }
        alive[p] = false;
        --remaining;
    }
    return sig;
}

TwoElemProfile two_elementary_profile(const Lattice& l)
{
    if (!l.is_even()) throw Error("lattice is not even");
    const std::size_t n = l.dim();
    SmithForm s = smith_normal_form(l.gram());
    std::vector<std::size_t> two_cols;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = s.d(i, i);
        if (d == 0) throw Error("degenerate lattice");
        if (d == 1) continue;
        if (d != 2) throw Error("lattice is not 2-elementary");
        two_cols.push_back(i);
    }
    TwoElemProfile p;
    p.rho = static_cast<int>(n);
    p.d = static_cast<int>(two_cols.size());

    // Dual classes are V c / 2 for c in {0,1}^d; x^2 = c^T (V^T G V) c / 4.
    IntMatrix w = s.v.transpose() * l.gram() * s.v;
    const std::size_t d = two_cols.size();
    IntMatrix q(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q(i, j) = w(two_cols[i], two_cols[j]);
    p.delta = 0;
    for (unsigned long mask = 1; mask < (1UL << d) && p.delta == 0; ++mask) {
        Int sum = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (mask >> j & 1) sum += q(i, j);
        }
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), 4)) p.delta = 1;
    }

    Signature sig = signature(l.gram());
    p.sig_plus = sig.plus;
    p.sig_minus = sig.minus;
    return p;
}

std::string to_string(const TwoElemProfile& p)
{
    std::ostringstream os;
    os << "(rho=" << p.rho << ", d=" << p.d << ", delta=" << p.delta << ", sig=(" << p.sig_plus << ","
       << p.sig_minus << "))";
    return os.str();
}

bool is_empty_locus_profile(const TwoElemProfile& p)
{
    return p.rho == 10 && p.d == 10 && p.delta == 0;
}

bool is_two_elliptic_profile(const TwoElemProfile& p)
{
    return p.rho == 10 && p.d == 8 && p.delta == 0;
}

InvolutionFixedShape involution_fixed_shape(const TwoElemProfile& p)
{
    if (is_empty_locus_profile(p)) return {ShapeKind::Empty, 0, 0};
    if (is_two_elliptic_profile(p)) return {ShapeKind::TwoElliptic, 0, 0};
    const int twice_gamma = 22 - p.rho - p.d;
    const int twice_j = p.rho - p.d;
    if (twice_gamma < 0 || twice_j < 0) throw Error("negative genus or curve count for " + to_string(p));
    if (twice_gamma % 2 || twice_j % 2) throw Error("non-integral genus or curve count for " + to_string(p));
    return {ShapeKind::Generic, twice_gamma / 2, twice_j / 2};
}

std::string to_string(const InvolutionFixedShape& s)
{
    switch (s.kind) {
    case ShapeKind::Empty: return "empty";
    case ShapeKind::TwoElliptic: return "two elliptic curves";
    case ShapeKind::Generic:
        return "genus " + std::to_string(s.gamma) + " curve + " + std::to_string(s.j) + " rational curves";
    }
    return "";
}

// ---- catalog ----

std::string summand_key(const LatticeExpr& e)
{
    std::vector<std::string> parts;
    for (const auto& t : e.terms)
        for (int i = 0; i < t.power; ++i) parts.push_back(atom_core(t));
    std::sort(parts.begin(), parts.end());
    std::string key;
    for (const auto& p : parts) key += p + ";";
    return key;
}

namespace {

const char* const kCatalogNames[] = {
    // S and T columns of the l = 0 table
    "U", "U(2)", "U+D4", "U(2)+D4", "U+E8", "U(2)+E8", "U+D4^2", "U(2)+D4^2", "U+E8+D4", "U(2)+E8+D4",
    "U+E8^2", "U(2)+E8^2",
    "U+U+E8^2", "U+U(2)+E8^2", "U+U+E8+D4", "U+U(2)+E8+D4", "U+U+E8", "U+U(2)+E8", "U+U+D4^2",
    "U+U(2)+D4^2", "U+U+D4", "U+U(2)+D4", "U+U", "U+U(2)",
    // isolated fixed points table
    "U+A1^2", "U(2)+A1^2", "U+A1^4", "U(2)+A1^4", "U+A1^6", "U(2)+A1^6", "U+A1^8", "U(2)+A1^8",
    "U+E8(2)", "U+D4+A1^4", "U+D6+A1^2", "U(2)+D4^2+A1^2", "U+A1^10", "U+D4^2+A1^2", "U+E7+A1^3",
    "U+E8+A1^2", "U+D4^2+A1^4", "U(2)+D6^2", "U+D4^3", "U+D6^2", "U(2)+D4+E8", "U+D6^2+A1^2",
    "U(2)+E7^2", "U+E7^2", "U+E7^2+A1^2", "U+D8^2", "U+E8+E7+A1", "U+E8^2+A1^2",
    // genus > 1 identification sub-table
    "U+D8+A1^2",
    // lattices ruled out for l = 0
    "U+E8+A1^4", "U+E7+A1", "<2>+A1", "<2>+A1+E8",
    // mentioned in proofs
    "U+D6",
    // Vinberg fibration root parts
    "E8^2+A1^2", "E8+D10", "D16+A1^2", "E7^2+D4", "E7+D10+A1", "A17+A1", "D18", "D12+D6", "D8^2+A1^2",
    "A15+A3", "E6+A11", "D6^3", "A9^2",
};

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> out;
    std::map<std::string, bool> seen;
    for (const char* name : kCatalogNames) {
        LatticeExpr e = parse_lattice_expr(name);
        std::string key = summand_key(e);
        if (seen[key]) continue;
        seen[key] = true;
        CatalogEntry c;
        c.name = to_ascii(e);
        c.expr = e;
        c.lattice = make_lattice(e);
        try {
            c.profile = two_elementary_profile(c.lattice);
        } catch (const Error&) {
            c.profile.reset();
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

std::vector<std::string> match_catalog(const TwoElemProfile& p)
{
    std::vector<std::string> names;
    for (const auto& c : catalog())
        if (c.profile && *c.profile == p) names.push_back(c.name);
    return names;
}

} // namespace k3fix4
