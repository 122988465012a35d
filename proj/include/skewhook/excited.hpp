#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "partition.hpp"

namespace skewhook {

/// Finite set of cells, kept as a sorted, duplicate-free list.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells) : cells_(std::move(cells))
    {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }
    static Diagram of(const Partition& mu) { return Diagram(mu.cells()); }

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

    friend auto operator<=>(const Diagram&, const Diagram&) = default;
    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    std::vector<Cell> cells_;
};

/// Reverse plane partition of shape mu recording how far each cell of mu moved diagonally.
struct ExcitationTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int at(const Cell& c) const
    {
        return rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    }

    friend bool operator==(const ExcitationTableau&, const ExcitationTableau&) = default;
    friend auto operator<=>(const ExcitationTableau& a, const ExcitationTableau& b)
    {
        if (auto c = a.shape <=> b.shape; c != 0)
            return c;
        return a.rows <=> b.rows;
    }
};

/// The flag condition j + t <= lambda_{i+t} for entry t at (i, j).
inline bool flag_ok(const Partition& lambda, const Cell& c, int t)
{
    return c.col + t <= lambda[c.row + t];
}

inline void require_inside(const Diagram& d, const Partition& lambda, const char* what)
{
    for (const Cell& c : d.cells())
        if (!lambda.contains(c))
            throw invalid_input(std::string(what) + ": cell (" + std::to_string(c.row) + "," + std::to_string(c.col)
                                + ") lies outside [" + lambda.str() + "]");
}

inline std::vector<Diagram> excited_moves(const Diagram& d, const Partition& lambda)
{
    require_inside(d, lambda, "excited_moves");
    std::vector<Diagram> out;
    auto free = [&](Cell c) { return lambda.contains(c) && !d.contains(c); };
    for (const Cell& c : d.cells()) {
        Cell down{c.row + 1, c.col}, right{c.row, c.col + 1}, diag{c.row + 1, c.col + 1};
        if (free(down) && free(right) && free(diag)) {
            std::vector<Cell> next = d.cells();
            std::replace(next.begin(), next.end(), c, diag);
            out.emplace_back(std::move(next));
        }
    }
    return out;
}

/// E(lambda/mu) as the closure of [mu] under excited moves, in sorted order. Empty when mu is not in lambda.
inline std::vector<Diagram> excited_diagrams(const Partition& lambda, const Partition& mu)
{
    if (!contains(mu, lambda))
        return {};
    std::set<Diagram> seen{Diagram::of(mu)};
    std::deque<Diagram> queue{Diagram::of(mu)};
    while (!queue.empty()) {
        Diagram d = std::move(queue.front());
        queue.pop_front();
        for (Diagram& next : excited_moves(d, lambda))
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
    }
    return {seen.begin(), seen.end()};
}

/// Calls fn(rows) for every flagged reverse plane partition of shape mu inside lambda.
/// Cells are filled in row-major order; `rows` is only valid during the call.
template <class Fn>
void for_each_flagged(const Partition& lambda, const Partition& mu, Fn&& fn)
{
    if (!contains(mu, lambda))
        return;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(mu.length()));
    for (int i = 1; i <= mu.length(); ++i)
        rows[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(mu[i]), 0);
    const std::vector<Cell> cells = mu.cells();

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            fn(static_cast<const std::vector<std::vector<int>>&>(rows));
            return;
        }
        const Cell c = cells[k];
        int lo = 0;
        if (c.col > 1)
            lo = std::max(lo, rows[c.row - 1][c.col - 2]);
        if (c.row > 1)
            lo = std::max(lo, rows[c.row - 2][c.col - 1]);
        // j + t grows and lambda_{i+t} shrinks with t, so the first failure ends the range.
        for (int t = lo; flag_ok(lambda, c, t); ++t) {
            rows[c.row - 1][c.col - 1] = t;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<ExcitationTableau> enumerate_flagged(const Partition& lambda, const Partition& mu)
{
    std::vector<ExcitationTableau> out;
    for_each_flagged(lambda, mu, [&](const std::vector<std::vector<int>>& rows) { out.push_back({mu, rows}); });
    return out;
}

inline std::size_t count_flagged(const Partition& lambda, const Partition& mu)
{
    std::size_t n = 0;
    for_each_flagged(lambda, mu, [&](const auto&) { ++n; });
    return n;
}

/// true iff entries are non-negative and weakly increase along rows and columns.
inline bool is_reverse_plane_partition(const Partition& shape, const std::vector<std::vector<int>>& rows)
{
    if (static_cast<int>(rows.size()) != shape.length())
        return false;
    for (int i = 1; i <= shape.length(); ++i) {
        if (static_cast<int>(rows[i - 1].size()) != shape[i])
            return false;
        for (int j = 1; j <= shape[i]; ++j) {
            int t = rows[i - 1][j - 1];
            if (t < 0 || (j > 1 && rows[i - 1][j - 2] > t) || (i > 1 && rows[i - 2][j - 1] > t))
                return false;
        }
    }
    return true;
}

/// Flag condition checked at every cell of mu.
inline bool satisfies_flag_everywhere(const ExcitationTableau& t, const Partition& lambda)
{
    for (const Cell& c : t.shape.cells())
        if (!flag_ok(lambda, c, t.at(c)))
            return false;
    return true;
}

/// Flag condition checked only at the corners of mu. Equivalent on reverse plane partitions.
inline bool satisfies_flag_at_corners(const ExcitationTableau& t, const Partition& lambda)
{
    for (const Cell& c : corners(t.shape))
        if (!flag_ok(lambda, c, t.at(c)))
            return false;
    return true;
}

inline Diagram tableau_to_diagram(const ExcitationTableau& t)
{
    if (!is_reverse_plane_partition(t.shape, t.rows))
        throw invalid_input("tableau_to_diagram: entries are not a reverse plane partition of shape ["
                            + t.shape.str() + "]");
    std::vector<Cell> cells;
    for (const Cell& c : t.shape.cells()) {
        int s = t.at(c);
        cells.push_back({c.row + s, c.col + s});
    }
    return Diagram(std::move(cells));
}

/// Inverse of tableau_to_diagram. Excited moves keep each cell on its diagonal and never let two
/// cells on one diagonal pass each other, so the k-th cell of [mu] on a diagonal goes to the k-th
/// cell of D on that diagonal.
inline ExcitationTableau diagram_to_tableau(const Diagram& d, const Partition& mu)
{
    auto fail = [&](const std::string& why) {
        return invalid_input("diagram_to_tableau: not an excited diagram of shape [" + mu.str() + "]: " + why);
    };
    if (static_cast<int>(d.size()) != mu.size())
        throw fail("has " + std::to_string(d.size()) + " cells, expected " + std::to_string(mu.size()));

    std::map<int, std::vector<Cell>> by_diag_d, by_diag_mu;
    for (const Cell& c : d.cells())
        by_diag_d[c.content()].push_back(c);
    for (const Cell& c : mu.cells())
        by_diag_mu[c.content()].push_back(c);

    ExcitationTableau t{mu, {}};
    t.rows.resize(static_cast<std::size_t>(mu.length()));
    for (int i = 1; i <= mu.length(); ++i)
        t.rows[i - 1].assign(static_cast<std::size_t>(mu[i]), 0);
    for (auto& [diag, src] : by_diag_mu) {
        auto it = by_diag_d.find(diag);
        if (it == by_diag_d.end() || it->second.size() != src.size())
            throw fail("cell counts differ on diagonal " + std::to_string(diag));
        // both lists are sorted by row since Cell orders row-major
        for (std::size_t k = 0; k < src.size(); ++k)
            t.rows[src[k].row - 1][src[k].col - 1] = it->second[k].row - src[k].row;
    }
    if (by_diag_d.size() != by_diag_mu.size())
        throw fail("occupies a diagonal that [mu] does not");
    if (!is_reverse_plane_partition(mu, t.rows))
        throw fail("move counts are not a reverse plane partition");
    return t;
}

/// As above, additionally requiring D to fit in [lambda].
inline ExcitationTableau diagram_to_tableau(const Diagram& d, const Partition& mu, const Partition& lambda)
{
    ExcitationTableau t = diagram_to_tableau(d, mu);
    if (!satisfies_flag_everywhere(t, lambda))
        throw invalid_input("diagram_to_tableau: diagram leaves [" + lambda.str() + "]");
    return t;
}

} // namespace skewhook
