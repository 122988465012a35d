#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "excited.hpp"
#include "partition.hpp"
#include "polynomial.hpp"

namespace skewhook {

/// Black entries stand for x-variables, red entries for y-variables.
enum class Color { black, red };

struct Entry {
    int value = 0;
    Color color = Color::black;

    friend constexpr bool operator==(const Entry&, const Entry&) = default;
    friend constexpr auto operator<=>(const Entry& a, const Entry& b)
    {
        if (auto c = a.value <=> b.value; c != 0)
            return c;
        return static_cast<int>(a.color) <=> static_cast<int>(b.color);
    }

    /// "0B", "2R"
    std::string str() const { return std::to_string(value) + (color == Color::black ? "B" : "R"); }
};

/// The variable an entry at `c` represents: x_{i+v} when black, y_{j+v} when red.
inline Variable variable_of(const Cell& c, const Entry& e)
{
    return e.color == Color::black ? Variable::x(c.row + e.value) : Variable::y(c.col + e.value);
}

/// Entry representing `z` at cell `c`: black k-i for x_k, red k-j for y_k. The value may be negative.
inline Entry entry_for(const Cell& c, const Variable& z)
{
    return z.kind == VarKind::x ? Entry{z.index - c.row, Color::black} : Entry{z.index - c.col, Color::red};
}

/// Rows of (value, color) entries; the row lengths form the shape.
struct BicoloredTableau {
    std::vector<std::vector<Entry>> rows;

    BicoloredTableau() = default;
    explicit BicoloredTableau(std::vector<std::vector<Entry>> r) : rows(std::move(r)) {}

    int row_length(int i) const
    {
        return i >= 1 && i <= static_cast<int>(rows.size()) ? static_cast<int>(rows[i - 1].size()) : 0;
    }
    int column_length(int j) const
    {
        int n = 0;
        while (row_length(n + 1) >= j)
            ++n;
        return j >= 1 ? n : 0;
    }
    bool has(const Cell& c) const { return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row); }
    const Entry& at(const Cell& c) const { return rows[c.row - 1][c.col - 1]; }
    Entry& at(const Cell& c) { return rows[c.row - 1][c.col - 1]; }

    /// Throws invalid_input when the row lengths are not a partition.
    Partition shape() const
    {
        std::vector<int> parts;
        for (const auto& r : rows)
            parts.push_back(static_cast<int>(r.size()));
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        return Partition(std::move(parts));
    }

    std::vector<Cell> cells() const
    {
        std::vector<Cell> out;
        for (int i = 1; i <= static_cast<int>(rows.size()); ++i)
            for (int j = 1; j <= row_length(i); ++j)
                out.push_back({i, j});
        return out;
    }

    int max_value() const
    {
        int m = 0;
        for (const auto& r : rows)
            for (const Entry& e : r)
                m = std::max(m, e.value);
        return m;
    }

    /// "0B 0R 0R 1B / 0B 1B 1R / 0B"
    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i)
                s += " / ";
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (j)
                    s += ' ';
                s += rows[i][j].str();
            }
        }
        return s.empty() ? "(empty)" : s;
    }

    friend bool operator==(const BicoloredTableau&, const BicoloredTableau&) = default;
    friend auto operator<=>(const BicoloredTableau& a, const BicoloredTableau& b) { return a.rows <=> b.rows; }
};

/// Tableau of shape mu from a value grid, colored by the low |mu| bits of `coloring` (bit set = red),
/// bits assigned row-major.
inline BicoloredTableau colored(const std::vector<std::vector<int>>& values, std::uint64_t coloring)
{
    BicoloredTableau t;
    int bit = 0;
    for (const auto& r : values) {
        auto& row = t.rows.emplace_back();
        for (int v : r)
            row.push_back({v, (coloring >> bit++) & 1u ? Color::red : Color::black});
    }
    return t;
}

/// Row lengths form a partition, values are non-negative and weakly increase along rows and columns.
inline bool is_bicolored_tableau(const BicoloredTableau& t)
{
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        if (t.rows[i].size() > t.rows[i - 1].size())
            return false;
    for (int i = 1; i <= static_cast<int>(t.rows.size()); ++i)
        for (int j = 1; j <= t.row_length(i); ++j) {
            int v = t.at({i, j}).value;
            if (v < 0 || (j > 1 && t.at({i, j - 1}).value > v) || (i > 1 && t.at({i - 1, j}).value > v))
                return false;
        }
    return true;
}

inline Monomial weight(const BicoloredTableau& t)
{
    Monomial m;
    for (const Cell& c : t.cells())
        m *= Monomial(variable_of(c, t.at(c)));
    return m;
}

/// Flag condition j + T_ij <= lambda_{i+T_ij} at every cell.
inline bool in_B_mu_lambda(const BicoloredTableau& t, const Partition& lambda)
{
    for (const Cell& c : t.cells())
        if (!flag_ok(lambda, c, t.at(c).value))
            return false;
    return true;
}

/// Index beyond which lambda_k - k = mu_k - k (and likewise for conjugates).
inline int variable_index_bound(const Partition& mu, const Partition& lambda)
{
    return std::max({lambda.length(), mu.length(), lambda.first(), mu.first()}) + 1;
}

/// W(mu, lambda) in the global variable order.
inline std::vector<Variable> var_set_W(const Partition& mu, const Partition& lambda)
{
    const int bound = variable_index_bound(mu, lambda);
    const Partition lc = lambda.conjugate(), mc = mu.conjugate();
    auto missing = [bound](const Partition& big, const Partition& small, int k) {
        for (int i = 1; i <= bound; ++i)
            if (big[k] - k == small[i] - i)
                return false;
        return true;
    };
    std::vector<Variable> out;
    for (int k = 1; k <= bound; ++k) {
        if (missing(lambda, mu, k))
            out.push_back(Variable::x(k));
        if (missing(lc, mc, k))
            out.push_back(Variable::y(k));
    }
    return out;
}

/// W(lambda) = {x_1..x_{l(lambda)}, y_1..y_{lambda_1}} in the global variable order.
inline std::vector<Variable> var_set_W_lambda(const Partition& lambda)
{
    std::vector<Variable> out;
    for (int k = 1; k <= lambda.length(); ++k)
        out.push_back(Variable::x(k));
    for (int k = 1; k <= lambda.first(); ++k)
        out.push_back(Variable::y(k));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool contains_variable(const std::vector<Variable>& sorted_set, const Variable& v)
{
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

/// Calls fn(const BicoloredTableau&) for every element of B(mu, lambda): flagged value grids
/// crossed with all 2^|mu| colorings.
template <class Fn>
void for_each_B(const Partition& mu, const Partition& lambda, Fn&& fn)
{
    if (mu.size() >= 63)
        throw size_limit_exceeded("B(mu, lambda) enumeration needs |mu| < 63");
    const std::uint64_t colorings = std::uint64_t{1} << mu.size();
    for_each_flagged(lambda, mu, [&](const std::vector<std::vector<int>>& values) {
        for (std::uint64_t c = 0; c < colorings; ++c)
            fn(static_cast<const BicoloredTableau&>(colored(values, c)));
    });
}

inline std::uint64_t count_B(const Partition& mu, const Partition& lambda)
{
    return static_cast<std::uint64_t>(count_flagged(lambda, mu)) << mu.size();
}

} // namespace skewhook
