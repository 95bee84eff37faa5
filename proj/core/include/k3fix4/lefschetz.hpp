#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace k3fix4 {

struct GaussianRational {
    mpq_class re;
    mpq_class im;

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
    GaussianRational operator+(const GaussianRational& o) const;
    GaussianRational operator-(const GaussianRational& o) const;
    GaussianRational operator*(const GaussianRational& o) const;
    GaussianRational operator/(const GaussianRational& o) const; // throws on zero
    std::string str() const;
};

// n / det(I - A_{4,1}) + alpha (i - 1) / 2 with A_{4,1} = diag(-i, -1)
GaussianRational holomorphic_lefschetz(long n, long alpha);
// 1 - i
GaussianRational expected_lefschetz();

struct EigenspaceRanks {
    int r = 0;
    int l = 0;
    int m = 0;

    bool operator==(const EigenspaceRanks&) const = default;
};

struct FixedLocusData {
    int n = 0;
    int k = 0;
    int a = 0;
    std::vector<int> genera; // sigma-fixed curves of genus >= 1
    int n1 = 0;
    int n2 = 0;
    std::optional<int> g_top; // sigma^2-fixed curve C not fixed by sigma

    int alpha() const;
};

struct RelationResult {
    std::string id;
    std::string statement;
    bool applicable = true;
    bool holds = false;
    std::string note;
};

// Evaluates each relation separately; never throws.
std::vector<RelationResult> check_order4_relations(const EigenspaceRanks& ranks, const FixedLocusData& locus);
bool all_applicable_hold(const std::vector<RelationResult>& report);

// (r, l, n) with r + l = 14, n = 2 + r - l, 0 <= n <= 8 even; sorted.
std::vector<std::tuple<int, int, int>> symplectic_square_cases();

enum class ModuliKind { PurelyNonSymplectic, SymplecticSquare };
int moduli_dimension(ModuliKind kind, const EigenspaceRanks& ranks); // throws if negative

bool hodge_index_bound(long x2, long xf, long fsf, bool with_section);

// Throws on odd or negative input.
bool riemann_hurwitz_ok(int g, int fixed_points);

} // namespace k3fix4
