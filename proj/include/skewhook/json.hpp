#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicolored.hpp"
#include "bigint.hpp"
#include "excited.hpp"
#include "insertion.hpp"
#include "partition.hpp"
#include "polynomial.hpp"

// JSON encodings. Big integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.
namespace skewhook {

using json = nlohmann::json;

inline json to_json_value(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json to_json_value(const Rational& q)
{
    if (denominator(q) == 1)
        return to_json_value(numerator(q));
    return q.str();
}

inline json to_json_value(const HalfInt& h)
{
    if (h.is_integer())
        return h.doubled / 2;
    return h.str();
}

inline json to_json_value(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw invalid_input("partition must be a JSON array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw invalid_input("partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

inline json to_json_value(const Cell& c) { return json::array({c.row, c.col}); }

inline json to_json_value(const Diagram& d)
{
    json a = json::array();
    for (const Cell& c : d.cells())
        a.push_back(to_json_value(c));
    return a;
}

inline json to_json_value(const ExcitationTableau& t) { return t.rows; }

inline json to_json_value(const Entry& e)
{
    return {{"v", e.value}, {"c", e.color == Color::black ? "B" : "R"}};
}

inline json to_json_value(const BicoloredTableau& t)
{
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = json::array();
        for (const Entry& e : r)
            row.push_back(to_json_value(e));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Entry entry_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("v") || !j.contains("c") || !j["v"].is_number_integer() || !j["c"].is_string())
        throw invalid_input("tableau entry must look like {\"v\": 0, \"c\": \"B\"}, got " + j.dump());
    const std::string c = j["c"].get<std::string>();
    if (c != "B" && c != "R")
        throw invalid_input("entry color must be \"B\" or \"R\", got \"" + c + "\"");
    return {j["v"].get<int>(), c == "B" ? Color::black : Color::red};
}

/// Compact form: rows separated by '/', entries by ',' or spaces, each entry <value><B|R>.
/// Example: "0B,0R,0R,1B/0B,1B,1R/0B".
inline BicoloredTableau tableau_from_compact(std::string_view text)
{
    BicoloredTableau t;
    std::vector<Entry>* row = nullptr;
    std::size_t pos = 0;
    auto new_row = [&] { row = &t.rows.emplace_back(); };
    new_row();
    while (pos < text.size()) {
        char ch = text[pos];
        if (ch == '/') {
            new_row();
            ++pos;
        } else if (ch == ',' || ch == ' ') {
            ++pos;
        } else {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                ++pos;
            if (pos == start || pos >= text.size() || (text[pos] != 'B' && text[pos] != 'R'))
                throw invalid_input("cannot parse tableau entry near '" + std::string(text.substr(start)) + "'");
            row->push_back({std::stoi(std::string(text.substr(start, pos - start))),
                            text[pos] == 'B' ? Color::black : Color::red});
            ++pos;
        }
    }
    while (!t.rows.empty() && t.rows.back().empty())
        t.rows.pop_back();
    return t;
}

inline BicoloredTableau tableau_from_json(const json& j)
{
    if (j.is_string())
        return tableau_from_compact(j.get<std::string>());
    if (!j.is_array())
        throw invalid_input("tableau must be an array of rows");
    BicoloredTableau t;
    for (const auto& r : j) {
        if (!r.is_array())
            throw invalid_input("tableau rows must be arrays");
        auto& row = t.rows.emplace_back();
        for (const auto& e : r)
            row.push_back(entry_from_json(e));
    }
    while (!t.rows.empty() && t.rows.back().empty())
        t.rows.pop_back();
    return t;
}

/// Accepts a JSON document, or the compact form when the text does not start with '['.
inline BicoloredTableau parse_tableau(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '[') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded())
            throw invalid_input("tableau is not valid JSON");
        return tableau_from_json(j);
    }
    return tableau_from_compact(text);
}

inline json to_json_value(const Variable& v)
{
    return {{"kind", v.kind == VarKind::x ? "x" : "y"}, {"index", v.index}};
}

inline Variable variable_from_json(const json& j)
{
    if (j.is_string())
        return Variable::parse(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind") || !j.contains("index"))
        throw invalid_input("variable must look like {\"kind\": \"x\", \"index\": 1}");
    const std::string kind = j["kind"].get<std::string>();
    const int index = j["index"].get<int>();
    if (kind == "x")
        return Variable::x(index);
    if (kind == "y")
        return Variable::y(index);
    throw invalid_input("variable kind must be \"x\" or \"y\"");
}

/// Accepts "y1" or {"kind":"y","index":1}.
inline Variable parse_variable(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded())
            throw invalid_input("variable is not valid JSON");
        return variable_from_json(j);
    }
    return Variable::parse(text);
}

inline json to_json_value(const InsertionTrace& tr)
{
    json a = json::array();
    for (const InsertionStep& st : tr.steps) {
        auto bv = st.bumped_variable();
        a.push_back({{"pos", to_json_value(st.pos)},
                     {"placed", to_json_value(st.placed)},
                     {"bumped", bv ? to_json_value(*bv) : json(nullptr)}});
    }
    return a;
}

inline json to_json_value(const Monomial& m)
{
    json exps = json::array();
    for (const auto& [v, e] : m.factors())
        exps.push_back({{"kind", v.kind == VarKind::x ? "x" : "y"}, {"index", v.index}, {"e", e}});
    return exps;
}

inline json to_json_value(const MVPoly& p)
{
    json a = json::array();
    for (const auto& [m, c] : p.terms())
        a.push_back({{"coeff", to_json_value(c)}, {"exps", to_json_value(m)}});
    return a;
}

inline json to_json_value(const std::vector<Variable>& vs)
{
    json a = json::array();
    for (const Variable& v : vs)
        a.push_back(to_json_value(v));
    return a;
}

} // namespace skewhook
