#pragma once

#include "k3fix4/matrix.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace k3fix4 {

// Sparse polynomial with integer coefficients over a fixed, ordered variable list.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(const std::vector<std::string>& vars, const Int& c);
    static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t index_of(const std::string& var) const; // throws if absent

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Int& k) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Int coeff_of(const Exponents& e) const;
    // Coefficient of var^power, as a polynomial in the remaining variables (same variable list).
    MultiPoly coefficient(const std::string& var, int power) const;
    int degree_in(const std::string& var) const;        // -1 for zero
    int lowest_degree_in(const std::string& var) const; // -1 for zero
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;

    // Terms in descending lexicographic exponent order, e.g. "4*f^3 + 27*g^2".
    std::string to_string() const;

    void add_term(const Exponents& e, const Int& c);

private:
    void check_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Int> terms_;
};

// Integers, variables, + - * ^ (nonnegative integer exponent) and parentheses.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

} // namespace k3fix4
