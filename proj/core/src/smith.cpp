#include "k3fix4/smith.hpp"

#include <cstdlib>

namespace k3fix4 {

namespace {

bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs(a(i, j));
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

// Centered quotient: a - q b has absolute value at most |b| / 2.
Int centered_quotient(const Int& a, const Int& b)
{
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += sgn(b) * sgn(r);
    return q;
}

} // namespace

// Pivot: smallest entry of the remaining block, re-chosen after every sweep.
SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    const std::size_t steps = r < c ? r : c;
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pi = 0, pj = 0;
            if (!find_pivot(a, t, pi, pj)) break;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                const Int q = centered_quotient(a(i, t), a(t, t));
                a.add_row(i, t, Int(-q));
                u.add_row(i, t, Int(-q));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                const Int q = centered_quotient(a(t, j), a(t, t));
                a.add_col(j, t, Int(-q));
                v.add_col(j, t, Int(-q));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the rest of the block
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        a.add_row(t, i, Int(1));
                        u.add_row(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return {u, a, v};
}

} // namespace k3fix4
