#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace skewhook {

/// A cell (row, col) of a Young diagram, 1-based, English notation.
struct Cell {
    int row = 1;
    int col = 1;

    constexpr int content() const { return col - row; }

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c)
{
    return os << '(' << c.row << ',' << c.col << ')';
}

/// Exact half-integer, stored doubled.
struct HalfInt {
    std::int64_t doubled = 0;

    static constexpr HalfInt from_int(std::int64_t v) { return {2 * v}; }
    /// v + 1/2
    static constexpr HalfInt plus_half(std::int64_t v) { return {2 * v + 1}; }

    constexpr bool is_integer() const { return doubled % 2 == 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.doubled + b.doubled}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.doubled - b.doubled}; }
    friend constexpr HalfInt operator-(HalfInt a) { return {-a.doubled}; }
    friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;

    /// "7/2", "-3/2", or a plain integer when whole.
    std::string str() const
    {
        if (is_integer())
            return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }
};

/// Weakly decreasing sequence of positive integers. lambda_i for i beyond the length is 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw invalid_input("partition parts must be positive, got " + std::to_string(parts_[i]));
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw invalid_input("partition parts must be weakly decreasing: " + to_string_of(parts_));
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "7,6,5,5,2,1". The empty string (or "0") is the empty partition.
    static Partition parse(std::string_view text)
    {
        std::vector<int> parts;
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
                s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text.empty() || text == "0" || text == "-")
            return Partition();
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find(',', pos);
            if (next == std::string_view::npos)
                next = text.size();
            auto tok = trim(text.substr(pos, next - pos));
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
                throw invalid_input("cannot parse partition part '" + std::string(tok) + "' in '"
                                    + std::string(text) + "' (expected comma-separated integers)");
            parts.push_back(v);
            pos = next + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }

    /// lambda_i, 1-based; 0 past the end (and for i < 1).
    int operator[](int i) const
    {
        if (i < 1 || i > length())
            return 0;
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    bool contains(const Cell& c) const { return c.row >= 1 && c.col >= 1 && c.col <= (*this)[c.row]; }

    Partition conjugate() const
    {
        std::vector<int> out(static_cast<std::size_t>(first()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++out[static_cast<std::size_t>(j)];
        Partition c;
        c.parts_ = std::move(out);
        return c;
    }

    /// Row-major list of the cells of the diagram.
    std::vector<Cell> cells() const
    {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= (*this)[i]; ++j)
                out.push_back({i, j});
        return out;
    }

    std::string str() const { return to_string_of(parts_); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    static std::string to_string_of(const std::vector<int>& v)
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(v[i]);
        }
        return s;
    }

    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << '[' << p.str() << ']';
}

inline Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

/// lambda_i + lambda'_j - i - j + 1. Throws invalid_input for cells outside [lambda].
inline int hook_length(const Partition& lambda, const Partition& conj, const Cell& u)
{
    if (!lambda.contains(u))
        throw invalid_input("hook_length: cell (" + std::to_string(u.row) + "," + std::to_string(u.col)
                            + ") is not in [" + lambda.str() + "]");
    return lambda[u.row] + conj[u.col] - u.row - u.col + 1;
}

inline int hook_length(const Partition& lambda, const Cell& u)
{
    return hook_length(lambda, lambda.conjugate(), u);
}

/// Removable cells, sorted by row.
inline std::vector<Cell> corners(const Partition& lambda)
{
    std::vector<Cell> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda[i + 1] < lambda[i])
            out.push_back({i, lambda[i]});
    return out;
}

/// Addable cells, sorted by row.
inline std::vector<Cell> outer_corners(const Partition& lambda)
{
    std::vector<Cell> out;
    for (int i = 1; i <= lambda.length() + 1; ++i)
        if (i == 1 || lambda[i - 1] > lambda[i])
            out.push_back({i, lambda[i] + 1});
    return out;
}

/// Side of the Durfee square.
inline int rank(const Partition& lambda)
{
    int r = 0;
    while (lambda[r + 1] >= r + 1)
        ++r;
    return r;
}

/// [mu] subset of [lambda].
inline bool contains(const Partition& mu, const Partition& lambda)
{
    if (mu.length() > lambda.length())
        return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu[i] > lambda[i])
            return false;
    return true;
}

/// mu with one cell added at `c`, which must be an outer corner of mu.
inline Partition add_cell(const Partition& mu, const Cell& c)
{
    std::vector<int> parts = mu.parts();
    if (c.row == mu.length() + 1)
        parts.push_back(1);
    else
        ++parts.at(static_cast<std::size_t>(c.row - 1));
    return Partition(std::move(parts));
}

/// All nu with mu covered by nu and nu contained in lambda, sorted by row of the added cell.
inline std::vector<Partition> covers_within(const Partition& mu, const Partition& lambda)
{
    std::vector<Partition> out;
    for (const Cell& c : outer_corners(mu))
        if (lambda.contains(c))
            out.push_back(add_cell(mu, c));
    return out;
}

/// The cell of [nu/mu] when mu is covered by nu.
inline Cell added_cell(const Partition& mu, const Partition& nu)
{
    if (nu.size() != mu.size() + 1 || !contains(mu, nu))
        throw invalid_input("shape [" + nu.str() + "] does not cover [" + mu.str() + "]");
    for (int i = 1; i <= nu.length(); ++i)
        if (nu[i] != mu[i])
            return {i, nu[i]};
    throw consistency_error("added_cell: no differing row");
}

struct XYValues {
    std::vector<HalfInt> x; ///< x[k-1] = lambda_k - k + 1/2
    std::vector<HalfInt> y; ///< y[k-1] = lambda'_k - k + 1/2
};

inline XYValues xy_values(const Partition& lambda, int k_max)
{
    const Partition conj = lambda.conjugate();
    XYValues v;
    for (int k = 1; k <= k_max; ++k) {
        v.x.push_back(HalfInt::plus_half(lambda[k] - k));
        v.y.push_back(HalfInt::plus_half(conj[k] - k));
    }
    return v;
}

/// Calls `fn(partition)` for every partition of n, in reverse lexicographic order.
template <class Fn>
void for_each_partition(int n, Fn&& fn)
{
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            fn(Partition(parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

/// Every partition with at most `rows` parts, each at most `cols`.
inline std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int max_part) {
        out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == rows)
            return;
        for (int p = 1; p <= max_part; ++p) {
            parts.push_back(p);
            rec(p);
            parts.pop_back();
        }
    };
    rec(cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.parts() > b.parts();
    });
    return out;
}

/// Every mu contained in lambda.
inline std::vector<Partition> subpartitions(const Partition& lambda)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int row) {
        out.emplace_back(parts);
        int cap = std::min(lambda[row], parts.empty() ? lambda[row] : parts.back());
        for (int p = 1; p <= cap; ++p) {
            parts.push_back(p);
            rec(row + 1);
            parts.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.parts() > b.parts();
    });
    return out;
}

} // namespace skewhook
