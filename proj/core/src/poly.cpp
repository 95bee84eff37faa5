#include "k3fix4/poly.hpp"

#include "k3fix4/error.hpp"

#include <algorithm>
#include <cctype>

namespace k3fix4 {

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(const std::vector<std::string>& vars, const Int& c)
{
    MultiPoly p(vars);
    p.add_term(Exponents(vars.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name)
{
    MultiPoly p(vars);
    Exponents e(vars.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, 1);
    return p;
}

std::size_t MultiPoly::index_of(const std::string& var) const
{
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw Error("unknown variable '" + var + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::check_vars(const MultiPoly& o) const
{
    if (vars_ != o.vars_) throw Error("polynomials over different variable lists");
}

void MultiPoly::add_term(const Exponents& e, const Int& c)
{
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    check_vars(o);
    MultiPoly s = *this;
    for (const auto& [e, c] : o.terms_) s.add_term(e, c);
    return s;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const Int& k) const
{
    MultiPoly s(vars_);
    if (k == 0) return s;
    for (const auto& [e, c] : terms_) s.terms_.emplace(e, Int(c * k));
    return s;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    check_vars(o);
    MultiPoly p(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, Int(ca * cb));
        }
    return p;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Int MultiPoly::coeff_of(const Exponents& e) const
{
    if (e.size() != vars_.size()) throw Error("exponent vector has the wrong length");
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

MultiPoly MultiPoly::coefficient(const std::string& var, int power) const
{
    const std::size_t i = index_of(var);
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_)
        if (e[i] == power) {
            Exponents f = e;
            f[i] = 0;
            out.add_term(f, c);
        }
    return out;
}

int MultiPoly::degree_in(const std::string& var) const
{
    const std::size_t i = index_of(var);
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int MultiPoly::lowest_degree_in(const std::string& var) const
{
    const std::size_t i = index_of(var);
    int d = -1;
    for (const auto& [e, c] : terms_) d = d < 0 ? e[i] : std::min(d, e[i]);
    return d;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const
{
    check_vars(value);
    const std::size_t i = index_of(var);
    MultiPoly out(vars_);
    std::map<int, MultiPoly> powers;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[i] = 0;
        MultiPoly mono(vars_);
        mono.add_term(rest, c);
        auto it = powers.find(e[i]);
        if (it == powers.end()) it = powers.emplace(e[i], value.pow(static_cast<unsigned>(e[i]))).first;
        out = out + mono * it->second;
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += mag.get_str();
        else if (mag == 1)
            s += mono;
        else
            s += mag.get_str() + "*" + mono;
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(std::string_view t, const std::vector<std::string>& vars) : text_(t), vars_(vars) {}

    MultiPoly parse()
    {
        MultiPoly p = sum();
        skip();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return p;
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly sum()
    {
        MultiPoly p = eat('-') ? -product() : product();
        for (;;) {
            if (eat('+'))
                p = p + product();
            else if (eat('-'))
                p = p - product();
            else
                return p;
        }
    }

    MultiPoly product()
    {
        MultiPoly p = power();
        while (eat('*')) p = p * power();
        return p;
    }

    MultiPoly power()
    {
        MultiPoly b = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected exponent", pos_);
            b = b.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return b;
    }

    MultiPoly atom()
    {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        if (eat('(')) {
            MultiPoly p = sum();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return MultiPoly::constant(vars_, Int(std::string(text_.substr(start, pos_ - start))));
        }
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw ParseError("unexpected character", pos_);
        const std::string name(text_.substr(start, pos_ - start));
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
            throw ParseError("unknown variable '" + name + "'", start);
        return MultiPoly::variable(vars_, name);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars)
{
    return Parser(text, vars).parse();
}

} // namespace k3fix4
