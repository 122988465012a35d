#pragma once

#include <charconv>
#include <compare>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace skewhook {

enum class VarKind { x, y };

/// Formal variable x_k or y_k, k >= 1. Global order: x1 < y1 < x2 < y2 < ...
struct Variable {
    VarKind kind = VarKind::x;
    int index = 1;

    static Variable x(int k) { return {VarKind::x, check(k)}; }
    static Variable y(int k) { return {VarKind::y, check(k)}; }

    constexpr int order_key() const { return 2 * index + (kind == VarKind::y ? 1 : 0); }

    friend constexpr bool operator==(const Variable&, const Variable&) = default;
    friend constexpr auto operator<=>(const Variable& a, const Variable& b) { return a.order_key() <=> b.order_key(); }

    std::string str() const { return (kind == VarKind::x ? "x" : "y") + std::to_string(index); }

    /// "x3", "y12".
    static Variable parse(std::string_view s)
    {
        if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
            throw invalid_input("cannot parse variable '" + std::string(s) + "' (expected x<k> or y<k>)");
        int k = 0;
        auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw invalid_input("cannot parse variable '" + std::string(s) + "'");
        return s[0] == 'x' ? x(k) : y(k);
    }

private:
    static int check(int k)
    {
        if (k < 1)
            throw invalid_input("variable index must be >= 1, got " + std::to_string(k));
        return k;
    }
};

inline std::ostream& operator<<(std::ostream& os, const Variable& v) { return os << v.str(); }

/// Product of variables with positive exponents, stored sorted by the global variable order.
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;
    explicit Monomial(Variable v, int e = 1)
    {
        if (e > 0)
            factors_.push_back({v, e});
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    int degree() const
    {
        int d = 0;
        for (const auto& f : factors_)
            d += f.second;
        return d;
    }

    int exponent(Variable v) const
    {
        for (const auto& f : factors_)
            if (f.first == v)
                return f.second;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
                out.factors_.push_back(*i++);
            else if (i == a.factors_.end() || j->first < i->first)
                out.factors_.push_back(*j++);
            else {
                out.factors_.push_back({i->first, i->second + j->second});
                ++i;
                ++j;
            }
        }
        return out;
    }

    Monomial& operator*=(const Monomial& b) { return *this = *this * b; }

    bool divisible_by(const Monomial& d) const
    {
        for (const auto& [v, e] : d.factors_)
            if (exponent(v) < e)
                return false;
        return true;
    }

    /// this / d; requires divisible_by(d).
    Monomial divided_by(const Monomial& d) const
    {
        Monomial out;
        for (const auto& [v, e] : factors_) {
            int r = e - d.exponent(v);
            if (r > 0)
                out.factors_.push_back({v, r});
        }
        return out;
    }

    /// "x1^2*y1", "1" for the empty product.
    std::string str() const
    {
        if (factors_.empty())
            return "1";
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty())
                s += '*';
            s += v.str();
            if (e > 1)
                s += '^' + std::to_string(e);
        }
        return s;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Lexicographic term order: x1 most significant, larger exponent first. The constant sorts last.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        std::size_t k = 0;
        for (; k < fa.size() && k < fb.size(); ++k) {
            if (fa[k].first != fb[k].first)
                return fa[k].first < fb[k].first;
            if (fa[k].second != fb[k].second)
                return fa[k].second > fb[k].second;
        }
        return fa.size() > fb.size() && k == fb.size();
    }
};

/// Sparse multivariate polynomial over the integers. No zero coefficients are stored.
class MVPoly {
public:
    using Terms = std::map<Monomial, BigInt, TermOrder>;

    MVPoly() = default;
    MVPoly(long long c) { add_term(Monomial(), BigInt(c)); } // NOLINT: implicit constants read naturally
    explicit MVPoly(const BigInt& c) { add_term(Monomial(), c); }
    explicit MVPoly(Variable v) { add_term(Monomial(v), 1); }
    MVPoly(const Monomial& m, const BigInt& c) { add_term(m, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const BigInt& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BigInt coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    MVPoly& operator+=(const MVPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    MVPoly& operator-=(const MVPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
    friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
    friend MVPoly operator-(const MVPoly& a) { return MVPoly() - a; }

    friend MVPoly operator*(const MVPoly& a, const MVPoly& b)
    {
        MVPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }
    MVPoly& operator*=(const MVPoly& b) { return *this = *this * b; }

    friend bool operator==(const MVPoly&, const MVPoly&) = default;

    /// Largest total degree; -1 for the zero polynomial.
    int degree() const
    {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    /// Every term has total degree d. The zero polynomial is homogeneous of any degree.
    bool is_homogeneous(int d) const
    {
        for (const auto& [m, c] : terms_)
            if (m.degree() != d)
                return false;
        return true;
    }

    /// Value with every variable set to 1: the number of expanded monomials counted with multiplicity.
    BigInt at_all_ones() const
    {
        BigInt s = 0;
        for (const auto& [m, c] : terms_)
            s += c;
        return s;
    }

    template <class ValueOf>
    Rational evaluate(ValueOf&& value_of) const
    {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.factors()) {
                Rational base = value_of(v);
                for (int k = 0; k < e; ++k)
                    t *= base;
            }
            total += t;
        }
        return total;
    }

    /// "x1^2*y1 + 2*x1*x2 - 3", terms in TermOrder.
    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first)
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            first = false;
            if (m.is_one())
                s += mag.str();
            else if (mag == 1)
                s += m.str();
            else
                s += mag.str() + "*" + m.str();
        }
        return s;
    }

private:
    Terms terms_;
};

inline MVPoly linear(Variable a, Variable b) { return MVPoly(a) + MVPoly(b); }

struct DivisionResult {
    MVPoly quotient;
    MVPoly remainder;
};

/// Multivariate division of p by a single divisor in TermOrder. For one divisor the remainder is
/// zero exactly when d divides p in Q[x, y]; integer coefficients are kept when LC(d) divides them.
inline DivisionResult divide(MVPoly p, const MVPoly& d)
{
    if (d.is_zero())
        throw invalid_input("division by the zero polynomial");
    const auto& [lead_m, lead_c] = *d.terms().begin();
    DivisionResult out;
    while (!p.is_zero()) {
        const auto [m, c] = *p.terms().begin();
        if (m.divisible_by(lead_m) && c % lead_c == 0) {
            MVPoly t(m.divided_by(lead_m), c / lead_c);
            out.quotient += t;
            p -= t * d;
        } else {
            MVPoly t(m, c);
            out.remainder += t;
            p -= t;
        }
    }
    return out;
}

} // namespace skewhook
