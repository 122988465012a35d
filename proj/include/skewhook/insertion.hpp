#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicolored.hpp"
#include "partition.hpp"

namespace skewhook {

struct InsertionStep {
    Cell pos;
    Entry placed;
    std::optional<Entry> bumped; ///< entry displaced from pos; empty when pos is the new cell
    /// Variable the bumped entry represents.
    std::optional<Variable> bumped_variable() const
    {
        if (!bumped)
            return std::nullopt;
        return variable_of(pos, *bumped);
    }
};

struct InsertionTrace {
    std::vector<InsertionStep> steps;
};

struct InsertResult {
    BicoloredTableau tableau;
    InsertionTrace trace;
};

struct RemoveResult {
    BicoloredTableau tableau;
    Variable variable;
};

namespace detail {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

inline void require_shape(const BicoloredTableau& t, const Partition& mu, const char* what)
{
    if (!is_bicolored_tableau(t))
        throw invalid_input(std::string(what) + ": not a bicolored tableau: " + t.str());
    if (t.shape() != mu)
        throw invalid_input(std::string(what) + ": tableau has shape [" + t.shape().str() + "], expected ["
                            + mu.str() + "]");
}

/// Largest row r in [1, top] with S(r-1,j) <= k-r <= S(r+1,j), using S(0,j) = 0 and
/// S(len+1,j) = infinity. Returns 0 when no row qualifies.
inline int largest_row_in_column(const BicoloredTableau& s, int j, int len, int top, int k)
{
    for (int r = top; r >= 1; --r) {
        int v = k - r;
        int above = r == 1 ? 0 : s.at({r - 1, j}).value;
        int below = r + 1 <= len ? s.at({r + 1, j}).value : kInfinity;
        if (above <= v && v <= below)
            return r;
    }
    return 0;
}

/// Smallest row r in [1, len] with S(r-1,j) <= k-r <= S(r+1,j). The values S(r,j) + r strictly
/// increase, so at most two consecutive rows qualify; when un-bumping, the original row is the
/// lower-indexed one.
inline int smallest_row_in_column(const BicoloredTableau& s, int j, int len, int k)
{
    for (int r = 1; r <= len; ++r) {
        int v = k - r;
        int above = r == 1 ? 0 : s.at({r - 1, j}).value;
        int below = r + 1 <= len ? s.at({r + 1, j}).value : kInfinity;
        if (above <= v && v <= below)
            return r;
    }
    return 0;
}

inline int smallest_col_in_row(const BicoloredTableau& s, int i, int len, int k)
{
    for (int c = 1; c <= len; ++c) {
        int v = k - c;
        int left = c == 1 ? 0 : s.at({i, c - 1}).value;
        int right = c + 1 <= len ? s.at({i, c + 1}).value : kInfinity;
        if (left <= v && v <= right)
            return c;
    }
    return 0;
}

/// Row analogue of largest_row_in_column.
inline int largest_col_in_row(const BicoloredTableau& s, int i, int len, int top, int k)
{
    for (int c = top; c >= 1; --c) {
        int v = k - c;
        int left = c == 1 ? 0 : s.at({i, c - 1}).value;
        int right = c + 1 <= len ? s.at({i, c + 1}).value : kInfinity;
        if (left <= v && v <= right)
            return c;
    }
    return 0;
}

inline void append_cell(BicoloredTableau& s, const Cell& c, const Entry& e)
{
    if (c.row == static_cast<int>(s.rows.size()) + 1)
        s.rows.emplace_back();
    auto& row = s.rows.at(static_cast<std::size_t>(c.row - 1));
    if (static_cast<int>(row.size()) != c.col - 1)
        throw consistency_error("append_cell: (" + std::to_string(c.row) + "," + std::to_string(c.col)
                                + ") is not addable");
    row.push_back(e);
}

inline Entry take_cell(BicoloredTableau& s, const Cell& c)
{
    auto& row = s.rows.at(static_cast<std::size_t>(c.row - 1));
    Entry e = row.back();
    row.pop_back();
    while (!s.rows.empty() && s.rows.back().empty())
        s.rows.pop_back();
    return e;
}

inline bool row_ok_at(const BicoloredTableau& s, const Cell& c)
{
    int v = s.at(c).value;
    if (c.col > 1 && s.at({c.row, c.col - 1}).value > v)
        return false;
    if (s.has({c.row, c.col + 1}) && s.at({c.row, c.col + 1}).value < v)
        return false;
    return true;
}

inline bool column_ok_at(const BicoloredTableau& s, const Cell& c)
{
    int v = s.at(c).value;
    if (c.row > 1 && s.at({c.row - 1, c.col}).value > v)
        return false;
    if (s.has({c.row + 1, c.col}) && s.at({c.row + 1, c.col}).value < v)
        return false;
    return true;
}

} // namespace detail

/// Inserts z into T (shape mu), bumping entries until a cell is added at an outer corner of mu.
/// Each placement takes the largest row (for x) or column (for y) that keeps the tableau monotone.
inline InsertResult insert(const Partition& mu, const BicoloredTableau& t, Variable z, bool record_trace = true)
{
    detail::require_shape(t, mu, "insert");
    const Partition conj = mu.conjugate();
    InsertResult out{t, {}};
    BicoloredTableau& s = out.tableau;

    int i = 0, j = 0;
    Variable w = z;
    const int guard = mu.length() + mu.first() + std::max(t.max_value(), z.index) + 4;
    for (int step = 0; step < guard; ++step) {
        int pos_row = 0, pos_col = 0;
        int len = 0;
        if (w.kind == VarKind::x) {
            j += 1;
            len = conj[j];
            bool may_grow = j == 1 || conj[j] < conj[j - 1];
            i = detail::largest_row_in_column(s, j, len, may_grow ? len + 1 : len, w.index);
            if (i == 0)
                throw consistency_error("insert: no admissible row for " + w.str() + " in column " + std::to_string(j));
            pos_row = i;
            pos_col = j;
        } else {
            i += 1;
            len = mu[i];
            bool may_grow = i == 1 || mu[i] < mu[i - 1];
            j = detail::largest_col_in_row(s, i, len, may_grow ? len + 1 : len, w.index);
            if (j == 0)
                throw consistency_error("insert: no admissible column for " + w.str() + " in row " + std::to_string(i));
            pos_row = i;
            pos_col = j;
        }
        const Cell c{pos_row, pos_col};
        const Entry placed = entry_for(c, w);
        if (!mu.contains(c)) {
            detail::append_cell(s, c, placed);
            if (!detail::row_ok_at(s, c) || !detail::column_ok_at(s, c))
                throw consistency_error("insert: new cell breaks monotonicity at " + s.str());
            if (record_trace)
                out.trace.steps.push_back({c, placed, std::nullopt});
            return out;
        }
        const Entry old = s.at(c);
        s.at(c) = placed;
        if (!detail::row_ok_at(s, c) || !detail::column_ok_at(s, c))
            throw consistency_error("insert: placement breaks monotonicity at " + s.str());
        if (record_trace)
            out.trace.steps.push_back({c, placed, old});
        w = variable_of(c, old);
    }
    throw consistency_error("insert: exceeded step bound inserting " + z.str() + " into " + t.str());
}

/// Removes the entry of the unique cell of [nu/mu] without bumping.
inline RemoveResult remove_phi(const Partition& mu, const BicoloredTableau& s)
{
    if (!is_bicolored_tableau(s))
        throw invalid_input("remove_phi: not a bicolored tableau: " + s.str());
    const Cell c = added_cell(mu, s.shape());
    BicoloredTableau t = s;
    const Entry e = detail::take_cell(t, c);
    return {std::move(t), variable_of(c, e)};
}

/// Inverse of insert: removes the cell of [nu/mu] and bumps backwards (left for x, up for y)
/// until the walk leaves the diagram. Each variable goes back to the smallest admissible index:
/// taking the largest, as the forward pass does, can land one row or column too far.
inline RemoveResult insert_inverse(const Partition& mu, const BicoloredTableau& s_in)
{
    if (!is_bicolored_tableau(s_in))
        throw invalid_input("insert_inverse: not a bicolored tableau: " + s_in.str());
    const Cell start = added_cell(mu, s_in.shape());
    const Partition conj = mu.conjugate();
    BicoloredTableau s = s_in;
    Variable w = variable_of(start, detail::take_cell(s, start));
    int i = start.row, j = start.col;
    const int guard = mu.length() + mu.first() + s_in.max_value() + w.index + 4;
    for (int step = 0; step < guard; ++step) {
        if (w.kind == VarKind::x) {
            j -= 1;
            if (j == 0)
                return {std::move(s), w};
            i = detail::smallest_row_in_column(s, j, conj[j], w.index);
            if (i == 0)
                throw consistency_error("insert_inverse: no admissible row for " + w.str());
        } else {
            i -= 1;
            if (i == 0)
                return {std::move(s), w};
            j = detail::smallest_col_in_row(s, i, mu[i], w.index);
            if (j == 0)
                throw consistency_error("insert_inverse: no admissible column for " + w.str());
        }
        const Cell c{i, j};
        const Entry old = s.at(c);
        s.at(c) = entry_for(c, w);
        w = variable_of(c, old);
    }
    throw consistency_error("insert_inverse: exceeded step bound on " + s_in.str());
}

/// Checks the structural guarantees of one insertion run; returns a description of the first
/// violation, or nullopt.
inline std::optional<std::string> check_insertion(const Partition& mu, const BicoloredTableau& before, Variable z,
                                                  const InsertResult& r)
{
    const auto& steps = r.trace.steps;
    if (steps.empty())
        return "empty trace";
    if (!is_bicolored_tableau(r.tableau))
        return "result is not a bicolored tableau";
    if (weight(r.tableau) != weight(before) * Monomial(z))
        return "weight not preserved";

    const int bound = mu.length() + mu.first() + before.max_value();
    int prev_row = 0, prev_col = 0;
    long last_potential = std::numeric_limits<long>::min();
    Variable carried = z;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const InsertionStep& st = steps[k];
        const bool last = k + 1 == steps.size();
        if (variable_of(st.pos, st.placed) != carried)
            return "placed entry does not represent the carried variable at step " + std::to_string(k);
        if (carried.kind == VarKind::x) {
            if (st.pos.col != prev_col + 1 || (k > 0 && st.pos.row > prev_row))
                return "moved right but went down at step " + std::to_string(k);
        } else {
            if (st.pos.row != prev_row + 1 || (k > 0 && st.pos.col > prev_col))
                return "moved down but went right at step " + std::to_string(k);
        }
        if (last != !st.bumped.has_value())
            return "a cell was created before the last step, or the last step bumped";
        if (last) {
            bool corner = false;
            for (const Cell& oc : outer_corners(mu))
                corner = corner || oc == st.pos;
            if (!corner)
                return "final cell is not an outer corner of mu";
        } else {
            if (st.placed.value > st.bumped->value)
                return "bumped by a strictly larger value at step " + std::to_string(k);
            long potential = st.pos.row + st.pos.col + st.bumped->value;
            if (potential <= last_potential)
                return "potential i+j+s did not increase at step " + std::to_string(k);
            if (potential > bound)
                return "potential i+j+s exceeds l(mu)+mu_1+max T at step " + std::to_string(k);
            last_potential = potential;
            carried = variable_of(st.pos, *st.bumped);
        }
        prev_row = st.pos.row;
        prev_col = st.pos.col;
    }
    for (const Cell& c : mu.cells())
        if (r.tableau.at(c).value > before.at(c).value)
            return "an entry of [mu] increased";
    return std::nullopt;
}

struct RepeatedOptions {
    std::optional<std::uint64_t> max_passes; ///< default |B(mu,lambda)| * |W(lambda)| + 1
    bool record_traces = true;
};

struct InsertionPass {
    BicoloredTableau input;
    Variable variable;
    InsertResult result;
};

struct RepeatedResult {
    BicoloredTableau tableau;
    int passes = 0;
    std::vector<InsertionPass> history; ///< one entry per pass when traces are recorded
};

inline std::uint64_t default_pass_limit(const Partition& mu, const Partition& lambda)
{
    return count_B(mu, lambda) * var_set_W_lambda(lambda).size() + 1;
}

/// Insert, and while the result falls outside B(nu, lambda) for nu inside lambda, strip the new
/// cell and insert the freed variable again.
inline RepeatedResult repeated_insert(const Partition& mu, const Partition& lambda, const BicoloredTableau& t,
                                      Variable z, const RepeatedOptions& opt = {})
{
    detail::require_shape(t, mu, "repeated_insert");
    if (!in_B_mu_lambda(t, lambda))
        throw invalid_input("repeated_insert: tableau " + t.str() + " is not in B([" + mu.str() + "], [" + lambda.str()
                            + "])");
    if (!contains_variable(var_set_W(mu, lambda), z))
        throw invalid_input("repeated_insert: " + z.str() + " is not in W([" + mu.str() + "], [" + lambda.str() + "])");

    const std::uint64_t limit = opt.max_passes ? *opt.max_passes : default_pass_limit(mu, lambda);
    RepeatedResult out;
    BicoloredTableau cur = t;
    Variable var = z;
    for (std::uint64_t pass = 0; pass < limit; ++pass) {
        InsertResult r = insert(mu, cur, var, opt.record_traces);
        ++out.passes;
        const Partition nu = r.tableau.shape();
        const bool landed = contains(nu, lambda) && in_B_mu_lambda(r.tableau, lambda);
        BicoloredTableau produced = r.tableau;
        if (opt.record_traces)
            out.history.push_back({cur, var, std::move(r)});
        if (landed) {
            out.tableau = std::move(produced);
            return out;
        }
        RemoveResult back = remove_phi(mu, produced);
        cur = std::move(back.tableau);
        var = back.variable;
    }
    throw consistency_error("repeated_insert: no landing after " + std::to_string(limit) + " passes");
}

/// The unique S outside the codomain with remove_phi(mu, S) = (T, z), for z in W(lambda) \ W(mu, lambda).
/// For z = x_k take i with lambda_k - k = mu_i - i, j = mu_i + 1, and put a black k - i' at
/// (i', j) with i' = mu'_j + 1. The y case is the transpose.
inline BicoloredTableau attach_forced(const Partition& mu, const Partition& lambda, const BicoloredTableau& t,
                                      Variable z)
{
    const Partition mc = mu.conjugate(), lc = lambda.conjugate();
    const int bound = variable_index_bound(mu, lambda);
    const int k = z.index;
    BicoloredTableau s = t;
    if (z.kind == VarKind::x) {
        for (int i = 1; i <= bound; ++i) {
            if (lambda[k] - k != mu[i] - i)
                continue;
            const int j = mu[i] + 1;
            const Cell c{mc[j] + 1, j};
            detail::append_cell(s, c, Entry{k - c.row, Color::black});
            return s;
        }
    } else {
        for (int j = 1; j <= bound; ++j) {
            if (lc[k] - k != mc[j] - j)
                continue;
            const int i = mc[j] + 1;
            const Cell c{i, mu[i] + 1};
            detail::append_cell(s, c, Entry{k - c.col, Color::red});
            return s;
        }
    }
    throw consistency_error("attach_forced: " + z.str() + " is in W(mu, lambda)");
}

/// Inverse of repeated_insert.
inline RemoveResult repeated_insert_inverse(const Partition& mu, const Partition& lambda, const BicoloredTableau& s,
                                            const RepeatedOptions& opt = {})
{
    if (!is_bicolored_tableau(s))
        throw invalid_input("repeated_insert_inverse: not a bicolored tableau: " + s.str());
    const Partition nu = s.shape();
    added_cell(mu, nu);
    if (!contains(nu, lambda) || !in_B_mu_lambda(s, lambda))
        throw invalid_input("repeated_insert_inverse: " + s.str() + " is not in B([" + nu.str() + "], [" + lambda.str()
                            + "])");

    const std::vector<Variable> w_mu_lambda = var_set_W(mu, lambda);
    const std::vector<Variable> w_lambda = var_set_W_lambda(lambda);
    const std::uint64_t limit = opt.max_passes ? *opt.max_passes : default_pass_limit(mu, lambda);
    BicoloredTableau cur = s;
    for (std::uint64_t pass = 0; pass < limit; ++pass) {
        RemoveResult back = insert_inverse(mu, cur);
        if (!in_B_mu_lambda(back.tableau, lambda) || !contains_variable(w_lambda, back.variable))
            throw consistency_error("repeated_insert_inverse: left B(mu,lambda) x W(lambda) at " + back.tableau.str()
                                    + ", " + back.variable.str());
        if (contains_variable(w_mu_lambda, back.variable))
            return back;
        cur = attach_forced(mu, lambda, back.tableau, back.variable);
        if (contains(cur.shape(), lambda) && in_B_mu_lambda(cur, lambda))
            throw consistency_error("repeated_insert_inverse: forced attachment landed in the codomain");
    }
    throw consistency_error("repeated_insert_inverse: no landing after " + std::to_string(limit) + " passes");
}

} // namespace skewhook
