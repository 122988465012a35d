#pragma once

#include <utility>

#include "bicolored.hpp"
#include "bigint.hpp"
#include "counting.hpp"
#include "excited.hpp"
#include "partition.hpp"
#include "polynomial.hpp"

namespace skewhook {

/// Product of (x_i + y_j) over the cells of D.
inline MVPoly diagram_product(const Diagram& d)
{
    MVPoly p = 1;
    for (const Cell& c : d.cells())
        p *= linear(Variable::x(c.row), Variable::y(c.col));
    return p;
}

/// Sum over E(lambda/mu) of the product of (x_i + y_j) over each diagram; 0 when mu is not in lambda.
inline MVPoly excited_generating_poly(const Partition& lambda, const Partition& mu)
{
    MVPoly total;
    for_each_flagged(lambda, mu, [&](const std::vector<std::vector<int>>& rows) {
        total += diagram_product(tableau_to_diagram({mu, rows}));
    });
    return total;
}

/// Sum of the variables of W(mu, lambda).
inline MVPoly lemma_w_linear(const Partition& lambda, const Partition& mu)
{
    MVPoly p;
    for (const Variable& v : var_set_W(mu, lambda))
        p += MVPoly(v);
    return p;
}

/// x_k = lambda_k - k + 1/2, y_k = lambda'_k - k + 1/2 as exact rationals.
inline Rational specialized_value(const Partition& lambda, const Partition& conj, const Variable& v)
{
    int base = v.kind == VarKind::x ? lambda[v.index] - v.index : conj[v.index] - v.index;
    return Rational(2 * base + 1, 2);
}

inline Rational specialize(const MVPoly& p, const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    return p.evaluate([&](const Variable& v) { return specialized_value(lambda, conj, v); });
}

struct LemmaWCheck {
    HalfInt variable_sum; ///< sum over W(mu, lambda) at the half-integer point
    int size_difference = 0; ///< |lambda| - |mu|
    bool holds() const { return variable_sum == HalfInt::from_int(size_difference); }
};

inline LemmaWCheck lemma_w_check(const Partition& lambda, const Partition& mu)
{
    const Partition conj = lambda.conjugate();
    HalfInt sum;
    for (const Variable& v : var_set_W(mu, lambda)) {
        int base = v.kind == VarKind::x ? lambda[v.index] - v.index : conj[v.index] - v.index;
        sum = sum + HalfInt::plus_half(base);
    }
    return {sum, lambda.size() - mu.size()};
}

inline bool verify_lemma_w(const Partition& lambda, const Partition& mu) { return lemma_w_check(lambda, mu).holds(); }

struct PolyPair {
    MVPoly lhs;
    MVPoly rhs;
};

/// Both sides of the main polynomial identity:
/// (sum of W(mu,lambda)) * G(lambda/mu) versus the sum of G(lambda/nu) over mu < nu <= lambda.
inline PolyPair thm1_sides(const Partition& lambda, const Partition& mu)
{
    PolyPair s;
    s.lhs = lemma_w_linear(lambda, mu) * excited_generating_poly(lambda, mu);
    for (const Partition& nu : covers_within(mu, lambda))
        s.rhs += excited_generating_poly(lambda, nu);
    return s;
}

inline bool verify_thm1(const Partition& lambda, const Partition& mu)
{
    PolyPair s = thm1_sides(lambda, mu);
    return s.lhs == s.rhs;
}

/// Sum over E(lambda/mu) of the product of hook lengths on D.
inline BigInt hook_sum(const Partition& lambda, const Partition& mu)
{
    const Partition conj = lambda.conjugate();
    BigInt total = 0;
    for_each_flagged(lambda, mu, [&](const std::vector<std::vector<int>>& rows) {
        BigInt p = 1;
        const Diagram d = tableau_to_diagram({mu, rows});
        for (const Cell& c : d.cells())
            p *= hook_length(lambda, conj, c);
        total += p;
    });
    return total;
}

struct IntPair {
    BigInt lhs;
    BigInt rhs;
    bool equal() const { return lhs == rhs; }
};

/// (|lambda| - |mu|) * hook_sum(lambda, mu) versus the sum of hook_sum(lambda, nu) over covers.
inline IntPair eq2_sides(const Partition& lambda, const Partition& mu)
{
    require_contained(mu, lambda, "eq2_sides");
    IntPair s;
    s.lhs = BigInt(lambda.size() - mu.size()) * hook_sum(lambda, mu);
    s.rhs = 0;
    for (const Partition& nu : covers_within(mu, lambda))
        s.rhs += hook_sum(lambda, nu);
    return s;
}

inline bool verify_eq2(const Partition& lambda, const Partition& mu) { return eq2_sides(lambda, mu).equal(); }

/// The non-homogeneous variant whose linear factor is sum_{i <= r(lambda)} (x_i + y_i) - |mu|.
inline PolyPair eq3_sides(const Partition& lambda, const Partition& mu)
{
    MVPoly factor = -MVPoly(static_cast<long long>(mu.size()));
    for (int i = 1; i <= rank(lambda); ++i)
        factor += linear(Variable::x(i), Variable::y(i));
    PolyPair s;
    s.lhs = factor * excited_generating_poly(lambda, mu);
    for (const Partition& nu : covers_within(mu, lambda))
        s.rhs += excited_generating_poly(lambda, nu);
    return s;
}

} // namespace skewhook
