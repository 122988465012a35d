#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "bijection_check.hpp"
#include "counting.hpp"
#include "excited.hpp"
#include "identities.hpp"
#include "insertion.hpp"
#include "json.hpp"

// Report-producing drivers behind the command-line tool. Every driver returns a complete report;
// failures become status "error" with a message and no result.
namespace skewhook::cli {

inline constexpr int kSelftestMaxCells = 10;
/// Polynomials with more distinct terms than this are summarised but not rendered.
inline constexpr std::size_t kRenderTermLimit = 64;

/// Runs `body` and wraps its result. `inputs` is filled by body as soon as inputs are canonical.
template <class Body>
json make_report(const std::string& command, json raw_inputs, Body&& body)
{
    json report;
    report["command"] = command;
    report["inputs"] = std::move(raw_inputs);
    const auto start = std::chrono::steady_clock::now();
    try {
        json result = body(report["inputs"]);
        report["result"] = std::move(result);
        report["status"] = "ok";
    } catch (const std::exception& e) {
        report.erase("result");
        report["status"] = "error";
        report["message"] = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report["timing_ms"] = std::round(ms * 1000.0) / 1000.0;
    return report;
}

inline bool report_ok(const json& report) { return report.value("status", "") == "ok"; }

struct CountArgs {
    std::string lambda;
    std::string mu;
    std::string method = "all";
};

inline json run_count(const CountArgs& a)
{
    return make_report("count", {{"lambda", a.lambda}, {"mu", a.mu}, {"method", a.method}}, [&](json& inputs) {
        const Partition lambda = Partition::parse(a.lambda);
        const Partition mu = Partition::parse(a.mu);
        inputs = {{"lambda", to_json_value(lambda)}, {"mu", to_json_value(mu)}, {"method", a.method}};

        using Method = std::function<BigInt(const Partition&, const Partition&)>;
        const std::vector<std::pair<std::string, Method>> methods = {
            {"bruteforce", f_bruteforce}, {"recursive", f_recursive}, {"naruse", f_naruse},
            {"oo", f_oo},                 {"determinant", f_det},
        };
        json values = json::object();
        std::optional<BigInt> common;
        bool agree = true;
        bool known = false;
        for (const auto& [name, fn] : methods) {
            if (a.method != "all" && a.method != name)
                continue;
            known = true;
            if (a.method == "all")
                require_contained(mu, lambda, "count");
            BigInt v = fn(lambda, mu);
            values[name] = to_json_value(v);
            if (common && *common != v)
                agree = false;
            common = v;
        }
        if (!known)
            throw invalid_input("unknown method '" + a.method
                                + "' (expected bruteforce|recursive|naruse|oo|determinant|all)");
        json result = {{"values", values}};
        if (a.method == "all")
            result["agreement"] = agree;
        return result;
    });
}

struct ExcitedArgs {
    std::string lambda;
    std::string mu;
};

inline json run_excited(const ExcitedArgs& a)
{
    return make_report("excited", {{"lambda", a.lambda}, {"mu", a.mu}}, [&](json& inputs) {
        const Partition lambda = Partition::parse(a.lambda);
        const Partition mu = Partition::parse(a.mu);
        inputs = {{"lambda", to_json_value(lambda)}, {"mu", to_json_value(mu)}};
        const std::vector<Diagram> bfs = excited_diagrams(lambda, mu);
        std::vector<ExcitationTableau> flagged = enumerate_flagged(lambda, mu);
        std::set<Diagram> via_flagged;
        for (const auto& t : flagged)
            via_flagged.insert(tableau_to_diagram(t));
        json diagrams = json::array(), tableaux = json::array();
        for (const Diagram& d : bfs) {
            diagrams.push_back(to_json_value(d));
            tableaux.push_back(to_json_value(diagram_to_tableau(d, mu, lambda)));
        }
        return json{{"count", bfs.size()},
                    {"bfs_count", bfs.size()},
                    {"flagged_count", flagged.size()},
                    {"agreement", std::set<Diagram>(bfs.begin(), bfs.end()) == via_flagged},
                    {"diagrams", diagrams},
                    {"tableaux", tableaux}};
    });
}

struct IdentityArgs {
    std::string lambda;
    std::string mu;
    std::string mode = "both";
};

inline json poly_summary(const MVPoly& p)
{
    json s = {{"all_ones", to_json_value(p.at_all_ones())}, {"distinct_terms", p.term_count()}, {"degree", p.degree()}};
    if (p.term_count() <= kRenderTermLimit)
        s["text"] = p.str();
    return s;
}

inline json run_identity(const IdentityArgs& a)
{
    return make_report("identity", {{"lambda", a.lambda}, {"mu", a.mu}, {"mode", a.mode}}, [&](json& inputs) {
        const Partition lambda = Partition::parse(a.lambda);
        const Partition mu = Partition::parse(a.mu);
        if (a.mode != "polynomial" && a.mode != "numeric" && a.mode != "both")
            throw invalid_input("unknown mode '" + a.mode + "' (expected polynomial|numeric|both)");
        inputs = {{"lambda", to_json_value(lambda)}, {"mu", to_json_value(mu)}, {"mode", a.mode}};
        json result = json::object();
        if (a.mode != "numeric") {
            const MVPoly gen = excited_generating_poly(lambda, mu);
            const MVPoly factor = lemma_w_linear(lambda, mu);
            PolyPair sides{factor * gen, {}};
            for (const Partition& nu : covers_within(mu, lambda))
                sides.rhs += excited_generating_poly(lambda, nu);
            result["thm1"] = {{"holds", sides.lhs == sides.rhs},
                              {"linear_factor", factor.str()},
                              {"product_term", poly_summary(gen)},
                              {"lhs", poly_summary(sides.lhs)},
                              {"rhs", poly_summary(sides.rhs)},
                              {"rhs_homogeneous_degree", sides.rhs.is_homogeneous(mu.size() + 1)}};
        }
        if (a.mode != "polynomial") {
            if (contains(mu, lambda)) {
                IntPair e = eq2_sides(lambda, mu);
                result["eq2"] = {{"applicable", true},
                                 {"holds", e.equal()},
                                 {"lhs", to_json_value(e.lhs)},
                                 {"rhs", to_json_value(e.rhs)}};
            } else {
                result["eq2"] = {{"applicable", false}};
            }
            LemmaWCheck w = lemma_w_check(lambda, mu);
            result["lemma_w"] = {{"holds", w.holds()},
                                 {"variables", to_json_value(var_set_W(mu, lambda))},
                                 {"variable_sum", to_json_value(w.variable_sum)},
                                 {"size_difference", w.size_difference}};
        }
        return result;
    });
}

struct BijectionArgs {
    std::string lambda; ///< may be empty for insert and inverse
    std::string mu;
    std::string action;
    std::string tableau;
    std::string var;
    bool trace = false;
};

inline json run_bijection(const BijectionArgs& a)
{
    json raw = {{"lambda", a.lambda}, {"mu", a.mu}, {"action", a.action}, {"trace", a.trace}};
    if (!a.tableau.empty())
        raw["tableau"] = a.tableau;
    if (!a.var.empty())
        raw["var"] = a.var;
    return make_report("bijection", raw, [&](json& inputs) {
        const Partition mu = Partition::parse(a.mu);
        const bool need_lambda = a.action == "repeated" || a.action == "verify";
        std::optional<Partition> lambda;
        if (!a.lambda.empty())
            lambda = Partition::parse(a.lambda);
        else if (need_lambda)
            throw invalid_input("action '" + a.action + "' requires --lambda");
        const bool need_tableau = a.action != "verify";
        const bool need_var = a.action == "insert" || a.action == "repeated";
        if (a.action != "insert" && a.action != "inverse" && a.action != "repeated" && a.action != "verify")
            throw invalid_input("unknown action '" + a.action + "' (expected insert|inverse|repeated|verify)");
        if (need_tableau && a.tableau.empty())
            throw invalid_input("action '" + a.action + "' requires --tableau");
        if (need_var && a.var.empty())
            throw invalid_input("action '" + a.action + "' requires --var");

        inputs = {{"mu", to_json_value(mu)}, {"action", a.action}, {"trace", a.trace}};
        inputs["lambda"] = lambda ? to_json_value(*lambda) : json(nullptr);
        std::optional<BicoloredTableau> tab;
        if (need_tableau) {
            tab = parse_tableau(a.tableau);
            inputs["tableau"] = to_json_value(*tab);
        }
        std::optional<Variable> var;
        if (need_var) {
            var = parse_variable(a.var);
            inputs["var"] = to_json_value(*var);
        }

        json result = json::object();
        if (a.action == "insert") {
            InsertResult r = insert(mu, *tab, *var, a.trace);
            result["tableau"] = to_json_value(r.tableau);
            result["shape"] = to_json_value(r.tableau.shape());
            if (a.trace)
                result["trace"] = to_json_value(r.trace);
        } else if (a.action == "inverse") {
            RemoveResult r = insert_inverse(mu, *tab);
            result["tableau"] = to_json_value(r.tableau);
            result["variable"] = to_json_value(r.variable);
            if (lambda && contains(tab->shape(), *lambda) && in_B_mu_lambda(*tab, *lambda)) {
                RemoveResult rr = repeated_insert_inverse(mu, *lambda, *tab);
                result["repeated_inverse"] = {{"tableau", to_json_value(rr.tableau)},
                                              {"variable", to_json_value(rr.variable)}};
            }
        } else if (a.action == "repeated") {
            RepeatedResult r = repeated_insert(mu, *lambda, *tab, *var, {std::nullopt, a.trace});
            result["tableau"] = to_json_value(r.tableau);
            result["shape"] = to_json_value(r.tableau.shape());
            result["passes"] = r.passes;
            if (a.trace) {
                json passes = json::array();
                for (const InsertionPass& p : r.history)
                    passes.push_back({{"input", to_json_value(p.input)},
                                      {"variable", to_json_value(p.variable)},
                                      {"output", to_json_value(p.result.tableau)},
                                      {"trace", to_json_value(p.result.trace)}});
                result["history"] = passes;
            }
        } else {
            BijectionReport rep = verify_bijection(mu, *lambda);
            result = {{"bijective", rep.injective && rep.image_is_codomain && rep.inverse_round_trip},
                      {"weights_preserved", rep.weights_preserved},
                      {"traces_valid", rep.traces_valid},
                      {"variables_within_W_lambda", rep.variables_within_W_lambda},
                      {"weight_sums_match_identity", rep.lhs_matches_identity && rep.rhs_matches_identity},
                      {"domain_size", rep.domain_size},
                      {"codomain_size", rep.codomain_size},
                      {"image_size", rep.image_size},
                      {"insertions_checked", rep.insertions_checked},
                      {"max_passes", rep.max_passes},
                      {"ok", rep.ok()}};
            result["first_failure"] = rep.first_failure ? json(*rep.first_failure) : json(nullptr);
        }
        return result;
    });
}

/// Index of the first failed check for one (lambda, mu) pair, or nullopt when all pass.
inline std::optional<std::pair<std::string, std::string>> selftest_case(const Partition& lambda, const Partition& mu)
{
    const BigInt bf = f_bruteforce(lambda, mu);
    const std::pair<const char*, BigInt> others[] = {
        {"recursive", f_recursive(lambda, mu)},
        {"naruse", f_naruse(lambda, mu)},
        {"oo", f_oo(lambda, mu)},
        {"determinant", f_det(lambda, mu)},
    };
    for (const auto& [name, v] : others)
        if (v != bf)
            return std::pair{std::string("count"), std::string(name) + " = " + v.str() + " but bruteforce = " + bf.str()};
    if (!verify_thm1(lambda, mu))
        return std::pair{std::string("thm1"), std::string("polynomial sides differ")};
    if (IntPair e = eq2_sides(lambda, mu); !e.equal())
        return std::pair{std::string("eq2"), e.lhs.str() + " != " + e.rhs.str()};
    if (!verify_lemma_w(lambda, mu))
        return std::pair{std::string("lemma_w"), std::string("variable sum differs from size difference")};
    if (BijectionReport rep = verify_bijection(mu, lambda); !rep.ok())
        return std::pair{std::string("bijection"), rep.first_failure.value_or("failed")};
    return std::nullopt;
}

struct SelftestArgs {
    int max_cells = 6;
};

inline json run_selftest(const SelftestArgs& a)
{
    return make_report("selftest", {{"max_cells", a.max_cells}}, [&](json&) {
        if (a.max_cells < 0 || a.max_cells > kSelftestMaxCells)
            throw invalid_input("max_cells must be between 0 and " + std::to_string(kSelftestMaxCells) + ", got "
                                + std::to_string(a.max_cells));
        std::uint64_t cases = 0;
        json failure = nullptr;
        for (int n = 0; n <= a.max_cells && failure.is_null(); ++n) {
            for_each_partition(n, [&](const Partition& lambda) {
                if (!failure.is_null())
                    return;
                for (const Partition& mu : subpartitions(lambda)) {
                    ++cases;
                    if (auto bad = selftest_case(lambda, mu)) {
                        failure = {{"lambda", to_json_value(lambda)},
                                   {"mu", to_json_value(mu)},
                                   {"check", bad->first},
                                   {"detail", bad->second}};
                        return;
                    }
                }
            });
        }
        return json{{"passed", failure.is_null()}, {"cases", cases}, {"first_failure", failure}};
    });
}

// ---- human-readable rendering ----

inline std::string draw_tableau(const json& rows, const std::string& indent = "  ")
{
    std::ostringstream os;
    if (rows.empty())
        os << indent << "(empty)\n";
    for (const auto& r : rows) {
        os << indent;
        for (const auto& e : r)
            os << e["v"].get<int>() << e["c"].get<std::string>() << ' ';
        os << '\n';
    }
    return os.str();
}

inline std::string draw_diagram(const json& cells, const json& lambda, const std::string& indent = "  ")
{
    std::set<std::pair<int, int>> in;
    for (const auto& c : cells)
        in.insert({c[0].get<int>(), c[1].get<int>()});
    std::ostringstream os;
    int i = 1;
    for (const auto& part : lambda) {
        os << indent;
        for (int j = 1; j <= part.get<int>(); ++j)
            os << (in.count({i, j}) ? '#' : '.');
        os << '\n';
        ++i;
    }
    return os.str();
}

inline std::string variable_text(const json& v)
{
    return v.is_null() ? "-" : v["kind"].get<std::string>() + std::to_string(v["index"].get<int>());
}

/// Replays a trace frame by frame: each frame shows the tableau right after the placement,
/// with "new<old" in the cell where the bump happened.
inline std::string draw_trace(json rows, const json& trace)
{
    std::ostringstream os;
    int frame = 1;
    for (const auto& st : trace) {
        const int i = st["pos"][0].get<int>(), j = st["pos"][1].get<int>();
        if (i > static_cast<int>(rows.size()))
            rows.push_back(json::array());
        auto& row = rows[static_cast<std::size_t>(i - 1)];
        std::string old = "";
        if (j <= static_cast<int>(row.size()))
            old = std::to_string(row[j - 1]["v"].get<int>()) + row[j - 1]["c"].get<std::string>();
        else
            row.push_back(st["placed"]);
        row[j - 1] = st["placed"];
        os << "  frame " << frame++ << ": at (" << i << "," << j << ") place "
           << st["placed"]["v"].get<int>() << st["placed"]["c"].get<std::string>();
        if (!old.empty())
            os << " bumping " << old << " = " << variable_text(st["bumped"]);
        os << '\n';
        for (std::size_t r = 0; r < rows.size(); ++r) {
            os << "    ";
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                std::string cell = std::to_string(rows[r][c]["v"].get<int>()) + rows[r][c]["c"].get<std::string>();
                if (static_cast<int>(r) == i - 1 && static_cast<int>(c) == j - 1 && !old.empty())
                    cell += "<" + old;
                os << cell << ' ';
            }
            os << '\n';
        }
    }
    return os.str();
}

inline std::string render_pretty(const json& report)
{
    std::ostringstream os;
    os << report["command"].get<std::string>() << ": " << report["status"].get<std::string>() << '\n';
    if (!report_ok(report)) {
        os << "  " << report["message"].get<std::string>() << '\n';
        return os.str();
    }
    const json& in = report["inputs"];
    const json& res = report["result"];
    const std::string cmd = report["command"].get<std::string>();
    if (cmd == "excited") {
        os << "  |E| = " << res["count"] << " (bfs " << res["bfs_count"] << ", flagged " << res["flagged_count"]
           << ")\n";
        for (std::size_t k = 0; k < res["diagrams"].size(); ++k) {
            os << " diagram " << k + 1 << ", tableau " << res["tableaux"][k].dump() << '\n';
            os << draw_diagram(res["diagrams"][k], in["lambda"], "   ");
        }
    } else if (cmd == "bijection" && res.contains("tableau")) {
        if (in.contains("tableau")) {
            os << " input:\n" << draw_tableau(in["tableau"]);
        }
        if (res.contains("trace"))
            os << " trace:\n" << draw_trace(in["tableau"], res["trace"]);
        if (res.contains("history"))
            for (std::size_t p = 0; p < res["history"].size(); ++p) {
                const json& h = res["history"][p];
                os << " pass " << p + 1 << ": insert " << variable_text(h["variable"]) << '\n'
                   << draw_trace(h["input"], h["trace"]);
            }
        os << " output:\n" << draw_tableau(res["tableau"]);
        if (res.contains("variable"))
            os << " variable: " << variable_text(res["variable"]) << '\n';
        if (res.contains("passes"))
            os << " passes: " << res["passes"] << '\n';
        if (res.contains("repeated_inverse"))
            os << " repeated inverse:\n"
               << draw_tableau(res["repeated_inverse"]["tableau"])
               << " variable: " << variable_text(res["repeated_inverse"]["variable"]) << '\n';
    } else {
        for (auto it = res.begin(); it != res.end(); ++it)
            os << "  " << it.key() << ": " << it.value().dump() << '\n';
    }
    return os.str();
}

} // namespace skewhook::cli
