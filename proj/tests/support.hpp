#pragma once

// Test-only helpers: seeded generators and independent reference computations that do not go
// through the library code they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "skewhook/skewhook.hpp"

namespace testing_support {

using namespace skewhook;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random partition with at most max_rows rows and parts at most max_part.
inline Partition random_partition(int max_rows, int max_part)
{
    std::vector<int> parts;
    int rows = uniform(0, max_rows);
    int cap = max_part;
    for (int i = 0; i < rows && cap > 0; ++i) {
        int p = uniform(1, cap);
        parts.push_back(p);
        cap = p;
    }
    return Partition(parts);
}

/// Random mu inside lambda: trim each row to a random length keeping it a partition.
inline Partition random_subpartition(const Partition& lambda)
{
    std::vector<int> parts;
    int cap = lambda.first();
    for (int i = 1; i <= lambda.length(); ++i) {
        int p = uniform(0, std::min(cap, lambda[i]));
        if (p == 0)
            break;
        parts.push_back(p);
        cap = p;
    }
    return Partition(parts);
}

/// Random reverse plane partition of shape mu with entries in [0, max_entry], random colors.
inline BicoloredTableau random_bicolored(const Partition& mu, int max_entry)
{
    BicoloredTableau t;
    t.rows.resize(static_cast<std::size_t>(mu.length()));
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = 1; j <= mu[i]; ++j) {
            int lo = 0;
            if (j > 1)
                lo = std::max(lo, t.rows[i - 1][j - 2].value);
            if (i > 1)
                lo = std::max(lo, t.rows[i - 2][j - 1].value);
            int v = uniform(lo, std::max(lo, max_entry));
            t.rows[i - 1].push_back({v, uniform(0, 1) ? Color::red : Color::black});
        }
    }
    return t;
}

inline Variable random_variable(int max_index)
{
    int k = uniform(1, max_index);
    return uniform(0, 1) ? Variable::y(k) : Variable::x(k);
}

/// Number of linear extensions of the skew cell poset, by dynamic programming over
/// order ideals encoded as bitmasks. Independent of the tableau-filling backtracker.
inline BigInt syt_count_by_ideals(const Partition& lambda, const Partition& mu)
{
    std::vector<Cell> cells;
    for (const Cell& c : lambda.cells())
        if (!mu.contains(c))
            cells.push_back(c);
    const int n = static_cast<int>(cells.size());
    std::vector<std::uint32_t> below(static_cast<std::size_t>(n), 0); // cells that must come first
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && cells[b].row <= cells[a].row && cells[b].col <= cells[a].col)
                below[a] |= 1u << b;
    std::vector<BigInt> ways(std::size_t(1) << n, 0);
    ways[0] = 1;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (ways[s] == 0)
            continue;
        for (int a = 0; a < n; ++a)
            if (!(s & (1u << a)) && (below[a] & ~s) == 0)
                ways[s | (1u << a)] += ways[s];
    }
    return ways.back();
}

/// Hook length straight from the definition: arm + leg + 1 by scanning the diagram.
inline int hook_by_scan(const Partition& lambda, const Cell& u)
{
    int h = 1;
    for (int j = u.col + 1; lambda.contains({u.row, j}); ++j)
        ++h;
    for (int i = u.row + 1; lambda.contains({i, u.col}); ++i)
        ++h;
    return h;
}

/// Excited diagrams by closure, written independently of the library BFS.
inline std::set<std::vector<Cell>> excited_by_closure(const Partition& lambda, const Partition& mu)
{
    std::set<std::vector<Cell>> seen;
    if (!contains(mu, lambda))
        return seen;
    std::vector<std::vector<Cell>> stack{mu.cells()};
    std::sort(stack.back().begin(), stack.back().end());
    seen.insert(stack.back());
    while (!stack.empty()) {
        std::vector<Cell> d = stack.back();
        stack.pop_back();
        std::set<Cell> in(d.begin(), d.end());
        for (const Cell& c : d) {
            Cell r{c.row, c.col + 1}, b{c.row + 1, c.col}, rb{c.row + 1, c.col + 1};
            if (!lambda.contains(rb) || in.count(r) || in.count(b) || in.count(rb))
                continue;
            std::vector<Cell> e;
            for (const Cell& x : d)
                e.push_back(x == c ? rb : x);
            std::sort(e.begin(), e.end());
            if (seen.insert(e).second)
                stack.push_back(e);
        }
    }
    return seen;
}

} // namespace testing_support
