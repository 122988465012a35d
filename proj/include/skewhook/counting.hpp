#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "excited.hpp"
#include "partition.hpp"

namespace skewhook {

/// Largest skew size f_bruteforce agrees to enumerate.
inline constexpr int kBruteForceMaxCells = 22;

inline void require_contained(const Partition& mu, const Partition& lambda, const char* what)
{
    if (!contains(mu, lambda))
        throw invalid_input(std::string(what) + ": [" + mu.str() + "] is not contained in [" + lambda.str() + "]");
}

inline BigInt hook_product(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    BigInt p = 1;
    for (const Cell& u : lambda.cells())
        p *= hook_length(lambda, conj, u);
    return p;
}

/// Classical hook-length formula.
inline BigInt f_hlf(const Partition& lambda)
{
    return require_integer(Rational(factorial(lambda.size()), hook_product(lambda)), "f_hlf");
}

/// Skew standard Young tableau: entries[i-1][j-1] is the label of (i, j), 0 on cells of [mu].
struct SkewSYT {
    Partition outer;
    Partition inner;
    std::vector<std::vector<int>> entries;
};

/// Calls fn(const SkewSYT&) for every standard filling of [lambda/mu], placing 1..n one at a time
/// at addable cells.
template <class Fn>
void for_each_skew_syt(const Partition& lambda, const Partition& mu, Fn&& fn)
{
    require_contained(mu, lambda, "for_each_skew_syt");
    const int n = lambda.size() - mu.size();
    if (n > kBruteForceMaxCells)
        throw size_limit_exceeded("skew shape has " + std::to_string(n) + " cells; brute force is limited to "
                                  + std::to_string(kBruteForceMaxCells));
    const int rows = lambda.length();
    std::vector<int> cur(static_cast<std::size_t>(rows) + 1, 0); // cur[i] = current length of row i
    for (int i = 1; i <= rows; ++i)
        cur[i] = mu[i];
    SkewSYT t{lambda, mu, {}};
    t.entries.resize(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i)
        t.entries[i - 1].assign(static_cast<std::size_t>(lambda[i]), 0);

    auto rec = [&](auto&& self, int label) -> void {
        if (label > n) {
            fn(static_cast<const SkewSYT&>(t));
            return;
        }
        for (int i = 1; i <= rows; ++i) {
            if (cur[i] < lambda[i] && (i == 1 || cur[i - 1] > cur[i])) {
                ++cur[i];
                t.entries[i - 1][cur[i] - 1] = label;
                self(self, label + 1);
                t.entries[i - 1][cur[i] - 1] = 0;
                --cur[i];
            }
        }
    };
    rec(rec, 1);
}

/// Number of standard fillings of [lambda/mu] by exhaustive backtracking.
inline BigInt f_bruteforce(const Partition& lambda, const Partition& mu)
{
    require_contained(mu, lambda, "f_bruteforce");
    const int n = lambda.size() - mu.size();
    if (n > kBruteForceMaxCells)
        throw size_limit_exceeded("skew shape has " + std::to_string(n) + " cells; brute force is limited to "
                                  + std::to_string(kBruteForceMaxCells));
    const int rows = lambda.length();
    std::vector<int> cur(static_cast<std::size_t>(rows) + 1, 0), cap(static_cast<std::size_t>(rows) + 1, 0);
    for (int i = 1; i <= rows; ++i) {
        cur[i] = mu[i];
        cap[i] = lambda[i];
    }
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (int i = 1; i <= rows; ++i) {
            if (cur[i] < cap[i] && (i == 1 || cur[i - 1] > cur[i])) {
                ++cur[i];
                self(self, remaining - 1);
                --cur[i];
            }
        }
    };
    rec(rec, n);
    return BigInt(count);
}

/// f^{lambda/mu} = sum over mu < nu <= lambda of f^{lambda/nu}, memoised within this call.
inline BigInt f_recursive(const Partition& lambda, const Partition& mu)
{
    require_contained(mu, lambda, "f_recursive");
    std::map<std::vector<int>, BigInt> memo;
    auto rec = [&](auto&& self, const Partition& nu) -> BigInt {
        if (nu == lambda)
            return 1;
        if (auto it = memo.find(nu.parts()); it != memo.end())
            return it->second;
        BigInt total = 0;
        for (const Partition& next : covers_within(nu, lambda))
            total += self(self, next);
        memo.emplace(nu.parts(), total);
        return total;
    };
    return rec(rec, mu);
}

/// One term of the skew hook-length sum: the excited diagram and the product of hooks on [lambda] \ D.
struct NaruseTerm {
    Diagram diagram;
    BigInt complement_hook_product;
};

/// Terms in row-major DFS order of the flagged tableaux.
inline std::vector<NaruseTerm> naruse_terms(const Partition& lambda, const Partition& mu)
{
    std::vector<NaruseTerm> out;
    if (!contains(mu, lambda))
        return out;
    const Partition conj = lambda.conjugate();
    const std::vector<Cell> all = lambda.cells();
    for_each_flagged(lambda, mu, [&](const std::vector<std::vector<int>>& rows) {
        Diagram d = tableau_to_diagram({mu, rows});
        BigInt p = 1;
        for (const Cell& u : all)
            if (!d.contains(u))
                p *= hook_length(lambda, conj, u);
        out.push_back({std::move(d), std::move(p)});
    });
    return out;
}

/// Skew hook-length formula over excited diagrams; 0 when mu is not in lambda.
inline BigInt f_naruse(const Partition& lambda, const Partition& mu)
{
    if (!contains(mu, lambda))
        return 0;
    Rational sum = 0;
    for (const NaruseTerm& t : naruse_terms(lambda, mu))
        sum += Rational(1, t.complement_hook_product);
    return require_integer(sum * factorial(lambda.size() - mu.size()), "f_naruse");
}

/// Reverse semistandard tableau: entries in 1..bound, rows weakly and columns strictly decreasing.
struct ReverseSSYT {
    Partition shape;
    int bound = 0;
    std::vector<std::vector<int>> rows;

    friend bool operator==(const ReverseSSYT&, const ReverseSSYT&) = default;
};

template <class Fn>
void for_each_rst(const Partition& mu, int bound, Fn&& fn)
{
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(mu.length()));
    for (int i = 1; i <= mu.length(); ++i)
        rows[i - 1].assign(static_cast<std::size_t>(mu[i]), 0);
    const std::vector<Cell> cells = mu.cells();
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            fn(static_cast<const std::vector<std::vector<int>>&>(rows));
            return;
        }
        const Cell c = cells[k];
        int hi = bound;
        if (c.col > 1)
            hi = std::min(hi, rows[c.row - 1][c.col - 2]);
        if (c.row > 1)
            hi = std::min(hi, rows[c.row - 2][c.col - 1] - 1);
        for (int v = hi; v >= 1; --v) {
            rows[c.row - 1][c.col - 1] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<ReverseSSYT> enumerate_rst(const Partition& mu, int bound)
{
    std::vector<ReverseSSYT> out;
    for_each_rst(mu, bound, [&](const auto& rows) { out.push_back({mu, bound, rows}); });
    return out;
}

/// Okounkov-Olshanski formula with reverse semistandard tableaux bounded by l(lambda).
inline BigInt f_oo(const Partition& lambda, const Partition& mu)
{
    require_contained(mu, lambda, "f_oo");
    const std::vector<Cell> cells = mu.cells();
    BigInt sum = 0;
    for_each_rst(mu, lambda.length(), [&](const std::vector<std::vector<int>>& rows) {
        BigInt term = 1;
        for (const Cell& u : cells)
            term *= lambda[rows[u.row - 1][u.col - 1]] - u.content();
        sum += term;
    });
    Rational value = Rational(factorial(lambda.size() - mu.size()), hook_product(lambda)) * sum;
    return require_integer(value, "f_oo");
}

/// Exact determinant by fraction Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0)
                continue;
            Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

/// |lambda/mu|! det[1/(lambda_i - mu_j - i + j)!], with 1/k! = 0 for negative k.
inline BigInt f_det(const Partition& lambda, const Partition& mu)
{
    require_contained(mu, lambda, "f_det");
    const int n = lambda.length();
    const std::vector<BigInt> fact = factorial_table(std::max(lambda.size() + n, 1));
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int k = lambda[i] - mu[j] - i + j;
            m[i - 1][j - 1] = k < 0 ? Rational(0) : Rational(1, fact[k]);
        }
    return require_integer(determinant(std::move(m)) * fact[lambda.size() - mu.size()], "f_det");
}

} // namespace skewhook
