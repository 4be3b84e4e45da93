#pragma once

// Regeneration of the four reference tables from first principles and
// row-level comparison with transcribed golden copies.
//
// Golden format: UTF-8, one row per line, cells separated by " | ", lines
// starting with '#' ignored.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "classify.hpp"
#include "dm.hpp"
#include "errors.hpp"
#include "hodge.hpp"

namespace ballcover {

using GoldenRows = std::vector<std::vector<std::string>>;

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline GoldenRows parse_golden(const std::string& text) {
    GoldenRows rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells;
        std::size_t pos = 0;
        for (;;) {
            const std::size_t bar = line.find(" | ", pos);
            cells.push_back(trim(line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos)));
            if (bar == std::string::npos) break;
            pos = bar + 3;
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

/// "(3,3,0)+(0,0,3)" -> parts.
inline PartList parse_type(const std::string& text) {
    PartList parts;
    static const std::regex part_re(R"(\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\))");
    std::string rest;
    auto begin = std::sregex_iterator(text.begin(), text.end(), part_re);
    std::size_t last = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        rest += text.substr(last, static_cast<std::size_t>(it->position()) - last);
        last = static_cast<std::size_t>(it->position() + it->length());
        std::vector<int> v;
        std::stringstream ss((*it)[1].str());
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
        parts.emplace_back(std::move(v));
    }
    rest += text.substr(last);
    for (char c : rest)
        if (c != '+' && c != ' ') throw validation_error("cannot parse partition type '" + text + "'");
    if (parts.empty()) throw validation_error("empty partition type '" + text + "'");
    return parts;
}

/// "(1^6,2^3), (1^8,4)" -> two multisets; "NA" -> none.
inline std::vector<DMWeights> parse_dm_list(const std::string& text) {
    const std::string t = trim(text);
    if (t == "NA") return {};
    std::vector<DMWeights> out;
    std::size_t pos = 0;
    while (pos < t.size()) {
        const std::size_t open = t.find('(', pos);
        if (open == std::string::npos) break;
        const std::size_t close = t.find(')', open);
        if (close == std::string::npos) throw validation_error("unbalanced DM list '" + text + "'");
        out.push_back(DMWeights::parse(t.substr(open, close - open + 1)));
        pos = close + 1;
    }
    if (out.empty()) throw validation_error("no DM data in '" + text + "'");
    return out;
}

inline std::string format_dm_list(const std::vector<DMWeights>& ws) {
    if (ws.empty()) return "NA";
    std::string s;
    for (std::size_t k = 0; k < ws.size(); ++k) s += (k ? ", " : "") + ws[k].str();
    return s;
}

/// Distinct weight multisets over all valid projections, sorted.
inline std::vector<DMWeights> derived_weight_set(const PartitionType& t) {
    std::set<DMWeights> s;
    for (std::size_t i : valid_projections(t)) s.insert(derive_weights(t, i));
    return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Table 2 inputs: the non-SNC configurations on (P^1)^2.

struct DegenerationConfig {
    PartList parts;
    std::vector<Degeneration> features;

    /// "C_1:(3,2), C_2:(0,1). C_1 has one node. C_1 and C_2 are tangent."
    std::string str() const {
        static const char* counts[] = {"no", "one", "two", "three", "four", "five", "six"};
        std::string s;
        for (std::size_t j = 0; j < parts.size(); ++j)
            s += (j ? ", " : "") + ("C_" + std::to_string(j + 1)) + ":" + parts[j].str();
        s += '.';
        std::map<std::size_t, std::size_t> nodes;
        for (const auto& f : features)
            if (f.kind == Degeneration::Kind::Node) ++nodes[f.first];
        for (const auto& [j, c] : nodes)
            s += " C_" + std::to_string(j + 1) + " has " + (c < 7 ? counts[c] : std::to_string(c)) +
                 (c == 1 ? " node." : " nodes.");
        for (const auto& f : features)
            if (f.kind == Degeneration::Kind::Tangency)
                s += " C_" + std::to_string(f.first + 1) + " and C_" + std::to_string(f.second + 1) + " are tangent.";
        return s;
    }

    /// Order-free comparison of the feature lists.
    friend bool operator==(const DegenerationConfig& a, const DegenerationConfig& b) {
        auto key = [](const DegenerationConfig& c) {
            std::multiset<std::tuple<int, std::size_t, std::size_t>> k;
            for (const auto& f : c.features)
                k.insert({static_cast<int>(f.kind), std::min(f.first, f.second), std::max(f.first, f.second)});
            return k;
        };
        return a.parts == b.parts && key(a) == key(b);
    }
};

/// Parses the free-text descriptions used in the golden copy of Table 2.
inline DegenerationConfig parse_degeneration_config(const std::string& text) {
    DegenerationConfig c;
    static const std::regex part_re(R"(C_(\d+)\s*:\s*\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    static const std::regex node_re(R"(C_(\d+) has (one|two|three|\d+) nodes?)");
    static const std::regex tangent_re(R"(C_(\d+) and C_(\d+) are tangent)");
    std::map<int, Multidegree> parts;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), part_re); it != std::sregex_iterator(); ++it)
        parts[std::stoi((*it)[1])] = Multidegree{std::stoi((*it)[2]), std::stoi((*it)[3])};
    int expected = 1;
    for (const auto& [k, m] : parts) {
        if (k != expected++) throw validation_error("curves are not numbered consecutively in '" + text + "'");
        c.parts.push_back(m);
    }
    if (c.parts.empty()) throw validation_error("no curves in '" + text + "'");
    auto index = [&](const std::string& s) {
        const int k = std::stoi(s);
        if (k < 1 || static_cast<std::size_t>(k) > c.parts.size())
            throw validation_error("curve C_" + s + " is not defined in '" + text + "'");
        return static_cast<std::size_t>(k - 1);
    };
    for (auto it = std::sregex_iterator(text.begin(), text.end(), node_re); it != std::sregex_iterator(); ++it) {
        const std::string w = (*it)[2];
        const int count = w == "one" ? 1 : w == "two" ? 2 : w == "three" ? 3 : std::stoi(w);
        for (int k = 0; k < count; ++k) c.features.push_back(Degeneration::node(index((*it)[1])));
    }
    for (auto it = std::sregex_iterator(text.begin(), text.end(), tangent_re); it != std::sregex_iterator(); ++it)
        c.features.push_back(Degeneration::tangency(index((*it)[1]), index((*it)[2])));
    return c;
}

inline std::vector<DegenerationConfig> degeneration_configs() {
    using D = Degeneration;
    const PartList a{{3, 2}, {0, 1}};
    const PartList b{{3, 1}, {0, 1}, {0, 1}};
    const PartList c{{2, 2}, {1, 0}, {0, 1}};
    const PartList e{{2, 1}, {1, 1}, {0, 1}};
    const PartList f{{2, 1}, {1, 0}, {0, 1}, {0, 1}};
    const D n1 = D::node(0);
    return {
        {a, {D::tangency(0, 1)}},
        {a, {n1}},
        {a, {n1, D::tangency(0, 1)}},
        {a, {n1, n1}},
        {a, {n1, n1, D::tangency(0, 1)}},
        {a, {n1, n1, n1}},
        {a, {n1, n1, n1, D::tangency(0, 1)}},
        {b, {D::tangency(0, 1)}},
        {b, {D::tangency(0, 1), D::tangency(0, 2)}},
        {c, {D::tangency(0, 1)}},
        {c, {n1, D::tangency(0, 1)}},
        {e, {D::tangency(0, 2)}},
        {e, {D::tangency(0, 1)}},
        {f, {D::tangency(0, 2)}},
    };
}

// ---------------------------------------------------------------------------
// Derived rows.

struct Table1Row {
    PartitionType type;  // display form
    DMWeights p1, p2;
};

struct Table2Row {
    DegenerationConfig config;
    DMWeights p1, p2;
};

struct Table34Row {
    PartitionType type;  // display form
    std::int64_t dimension = 0;
    std::vector<DMWeights> weights;  // over all valid projections; empty = NA
};

inline std::vector<Table1Row> derive_table1() {
    std::vector<Table1Row> out;
    for (const auto& c : enumerate_ball_types(2)) {
        PartitionType t = display_form(c.partition);
        out.push_back({t, derive_weights(t, 0), derive_weights(t, 1)});
    }
    return out;
}

inline std::vector<Table2Row> derive_table2() {
    std::vector<Table2Row> out;
    for (const auto& cfg : degeneration_configs()) {
        const PartitionType t = PartitionType::p1_cubic(cfg.parts);
        out.push_back({cfg, apply_degenerations(t, 0, cfg.features), apply_degenerations(t, 1, cfg.features)});
    }
    return out;
}

inline std::vector<Table34Row> derive_table3() {
    std::vector<Table34Row> out;
    for (const auto& c : enumerate_ball_types(3)) {
        PartitionType t = display_form(c.partition);
        out.push_back({t, git_dimension(t), derived_weight_set(t)});
    }
    return out;
}

/// Reduced ball types on (P^1)^4 that are not half-twists.
inline std::vector<Table34Row> derive_table4() {
    std::vector<Table34Row> out;
    for (const auto& c : enumerate_ball_types(4)) {
        if (is_half_twist(c.partition)) continue;
        PartitionType t = display_form(c.partition);
        out.push_back({t, git_dimension(t), derived_weight_set(t)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Comparison.

enum class RowStatus { Match, Mismatch, Missing, Extra };

inline const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Match: return "match";
        case RowStatus::Mismatch: return "mismatch";
        case RowStatus::Missing: return "missing";
        case RowStatus::Extra: return "extra";
    }
    return "?";
}

struct TableRow {
    std::string label;               // golden row number, or "+k" for extras
    std::vector<std::string> cells;  // derived values, or golden values for missing rows
    RowStatus status = RowStatus::Match;
    std::vector<std::string> differences;
};

struct TableResult {
    int which = 0;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;

    std::size_t count(RowStatus s) const {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [s](const TableRow& r) { return r.status == s; }));
    }
    bool identical() const { return count(RowStatus::Match) == rows.size(); }
};

namespace detail {

inline void require_columns(const GoldenRows& golden, std::size_t n, int which) {
    for (std::size_t r = 0; r < golden.size(); ++r)
        if (golden[r].size() != n)
            throw validation_error("golden table " + std::to_string(which) + " row " + std::to_string(r + 1) +
                                   " has " + std::to_string(golden[r].size()) + " cells, expected " +
                                   std::to_string(n));
}

inline void finish(TableRow& row) {
    if (row.status == RowStatus::Match && !row.differences.empty()) row.status = RowStatus::Mismatch;
}

inline bool subset(const std::vector<DMWeights>& small, const std::vector<DMWeights>& big) {
    return std::all_of(small.begin(), small.end(),
                       [&](const DMWeights& w) { return std::find(big.begin(), big.end(), w) != big.end(); });
}

inline std::vector<DMWeights> sorted_unique(std::vector<DMWeights> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Matches derived rows to golden rows by canonical key; returns derived index
// per golden row (or nullopt) and the unmatched derived indices.
template <class Row>
std::pair<std::vector<std::optional<std::size_t>>, std::vector<std::size_t>> align_by_key(
    const std::vector<Row>& derived, const std::vector<PartitionType>& golden_types) {
    std::map<PartList, std::size_t> by_key;
    for (std::size_t k = 0; k < derived.size(); ++k) by_key.emplace(canonical_key(derived[k].type), k);
    std::vector<std::optional<std::size_t>> match;
    std::set<std::size_t> used;
    for (const auto& g : golden_types) {
        auto it = by_key.find(canonical_key(g));
        if (it != by_key.end() && used.insert(it->second).second) match.push_back(it->second);
        else match.push_back(std::nullopt);
    }
    std::vector<std::size_t> extra;
    for (std::size_t k = 0; k < derived.size(); ++k)
        if (!used.count(k)) extra.push_back(k);
    return {match, extra};
}

}  // namespace detail

inline TableResult compare_table1(const GoldenRows& golden) {
    detail::require_columns(golden, 3, 1);
    const auto derived = derive_table1();
    std::vector<PartitionType> types;
    for (const auto& g : golden) types.push_back(PartitionType::p1_cubic(parse_type(g[0])));
    const auto [match, extra] = detail::align_by_key(derived, types);

    TableResult res{1, {"type", "p1", "p2"}, {}};
    for (std::size_t r = 0; r < golden.size(); ++r) {
        TableRow row;
        row.label = std::to_string(r + 1);
        if (!match[r]) {
            row.cells = golden[r];
            row.status = RowStatus::Missing;
            row.differences.push_back("type " + golden[r][0] + " is not derived");
        } else {
            const auto& d = derived[*match[r]];
            row.cells = {d.type.str(), d.p1.str(), d.p2.str()};
            if (row.cells[0] != golden[r][0]) row.differences.push_back("type: golden " + golden[r][0]);
            if (d.p1 != DMWeights::parse(golden[r][1])) row.differences.push_back("p1: golden " + golden[r][1]);
            if (d.p2 != DMWeights::parse(golden[r][2])) row.differences.push_back("p2: golden " + golden[r][2]);
        }
        detail::finish(row);
        res.rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < extra.size(); ++k) {
        const auto& d = derived[extra[k]];
        res.rows.push_back({"+" + std::to_string(k + 1), {d.type.str(), d.p1.str(), d.p2.str()}, RowStatus::Extra,
                            {"derived class absent from the golden table"}});
    }
    return res;
}

inline TableResult compare_table2(const GoldenRows& golden) {
    detail::require_columns(golden, 3, 2);
    const auto derived = derive_table2();
    TableResult res{2, {"configuration", "p1", "p2"}, {}};
    const std::size_t rows = std::max(golden.size(), derived.size());
    for (std::size_t r = 0; r < rows; ++r) {
        TableRow row;
        row.label = std::to_string(r + 1);
        if (r >= derived.size()) {
            row.cells = golden[r];
            row.status = RowStatus::Missing;
            row.differences.push_back("no derived configuration");
        } else if (r >= golden.size()) {
            const auto& d = derived[r];
            row.label = "+" + std::to_string(r + 1 - golden.size());
            row.cells = {d.config.str(), d.p1.str(), d.p2.str()};
            row.status = RowStatus::Extra;
            row.differences.push_back("derived configuration absent from the golden table");
        } else {
            const auto& d = derived[r];
            row.cells = {d.config.str(), d.p1.str(), d.p2.str()};
            if (!(parse_degeneration_config(golden[r][0]) == d.config))
                row.differences.push_back("configuration: golden " + golden[r][0]);
            if (d.p1 != DMWeights::parse(golden[r][1])) row.differences.push_back("p1: golden " + golden[r][1]);
            if (d.p2 != DMWeights::parse(golden[r][2])) row.differences.push_back("p2: golden " + golden[r][2]);
        }
        detail::finish(row);
        res.rows.push_back(std::move(row));
    }
    return res;
}

namespace detail {

// Tables 3 and 4 share a layout: No. | type | dimension | DM data. Table 3
// accepts listed DM data that is a subset of the derived set; Table 4 asks
// for equality.
inline TableResult compare_table34(int which, const GoldenRows& golden, const std::vector<Table34Row>& derived,
                                   bool dm_equality) {
    require_columns(golden, 4, which);
    std::vector<PartitionType> types;
    for (const auto& g : golden) types.push_back(PartitionType::p1_cubic(parse_type(g[1])));
    const auto [match, extra] = align_by_key(derived, types);

    TableResult res{which, {"no", "type", which == 3 ? "h21" : "dim", "dm"}, {}};
    for (std::size_t r = 0; r < golden.size(); ++r) {
        TableRow row;
        row.label = golden[r][0];
        if (!match[r]) {
            row.cells = golden[r];
            row.status = RowStatus::Missing;
            row.differences.push_back("type " + golden[r][1] + " is not derived");
        } else {
            const auto& d = derived[*match[r]];
            row.cells = {golden[r][0], d.type.str(), std::to_string(d.dimension), format_dm_list(d.weights)};
            if (std::to_string(d.dimension) != golden[r][2])
                row.differences.push_back(std::string(which == 3 ? "h21" : "dim") + ": golden " + golden[r][2]);
            const auto listed = sorted_unique(parse_dm_list(golden[r][3]));
            const bool ok = listed.empty() ? d.weights.empty()
                                           : (dm_equality ? listed == d.weights : subset(listed, d.weights));
            if (!ok) row.differences.push_back("dm: golden " + golden[r][3]);
            // Listed data must also describe a DM ball of the right dimension.
            for (const auto& w : listed)
                if (static_cast<std::int64_t>(w.points()) - 3 != std::stoll(golden[r][2]))
                    row.differences.push_back("golden " + w.str() + " has " + std::to_string(w.points()) +
                                              " points, inconsistent with dimension " + golden[r][2]);
        }
        finish(row);
        res.rows.push_back(std::move(row));
    }
    for (std::size_t k = 0; k < extra.size(); ++k) {
        const auto& d = derived[extra[k]];
        res.rows.push_back({"+" + std::to_string(k + 1),
                            {"", d.type.str(), std::to_string(d.dimension), format_dm_list(d.weights)},
                            RowStatus::Extra,
                            {"derived class absent from the golden table"}});
    }
    return res;
}

}  // namespace detail

inline TableResult compare_table3(const GoldenRows& golden) {
    return detail::compare_table34(3, golden, derive_table3(), false);
}

inline TableResult compare_table4(const GoldenRows& golden) {
    return detail::compare_table34(4, golden, derive_table4(), true);
}

inline TableResult compare_table(int which, const std::string& golden_text) {
    const GoldenRows golden = parse_golden(golden_text);
    switch (which) {
        case 1: return compare_table1(golden);
        case 2: return compare_table2(golden);
        case 3: return compare_table3(golden);
        case 4: return compare_table4(golden);
        default: throw validation_error("table must be 1, 2, 3 or 4, got " + std::to_string(which));
    }
}

// ---------------------------------------------------------------------------
// Commensurability over the derived tables.

/// One entry per derived row of Tables 1-3, labelled "T1:3", "T2:14", ...
inline std::vector<DMEntry> derived_dm_entries() {
    std::vector<DMEntry> entries;
    const auto t1 = derive_table1();
    for (std::size_t r = 0; r < t1.size(); ++r)
        entries.push_back({"T1:" + t1[r].type.str(), {t1[r].p1, t1[r].p2}});
    const auto t2 = derive_table2();
    for (std::size_t r = 0; r < t2.size(); ++r)
        entries.push_back({"T2:" + std::to_string(r + 1), {t2[r].p1, t2[r].p2}});
    for (const auto& row : derive_table3())
        if (!row.weights.empty()) entries.push_back({"T3:" + row.type.str(), row.weights});
    return entries;
}

}  // namespace ballcover
