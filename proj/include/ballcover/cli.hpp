#pragma once

// Command implementations behind the ballcover executable. Each command
// returns a Report that renders to aligned text or key-sorted JSON.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "cover.hpp"
#include "dm.hpp"
#include "errors.hpp"
#include "hodge.hpp"
#include "tables.hpp"

namespace ballcover::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitConsistency = 3;
inline constexpr int kExitGoldenMismatch = 4;

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    json checks = json::array();
    std::string text;
    int exit_code = kExitOk;

    void check(const std::string& name, bool passed, const std::string& detail = "") {
        checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
    }

    json to_json() const {
        return {{"command", command}, {"inputs", inputs}, {"results", results}, {"checks", checks}};
    }
};

inline std::string render(const Report& r, const std::string& format) {
    if (format == "json") return r.to_json().dump(2) + "\n";
    std::string out = r.text;
    if (!r.checks.empty()) {
        out += "\nchecks:\n";
        for (const auto& c : r.checks) {
            out += std::string("  ") + (c["passed"].get<bool>() ? "ok   " : "FAIL ") + c["name"].get<std::string>();
            const auto detail = c["detail"].get<std::string>();
            if (!detail.empty()) out += "  (" + detail + ")";
            out += '\n';
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Input parsing.

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw validation_error(what + ": '" + item + "' is not an integer in '" + text + "'");
        }
    }
    if (out.empty()) throw validation_error(what + " is empty");
    return out;
}

/// "3,3,0;0,0,3" -> parts.
inline PartList parse_parts(const std::string& text) {
    PartList parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) parts.emplace_back(parse_int_list(item, "part"));
    if (parts.empty()) throw validation_error("no parts given");
    return parts;
}

inline json parts_json(const PartitionType& t) {
    json a = json::array();
    for (const auto& p : t.parts()) a.push_back(p.entries());
    return a;
}

inline json weights_json(const DMWeights& w) { return w.weights(); }

inline std::string format_columns(const std::vector<std::string>& header,
                                  const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) s += "  ";
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size(), ' ');
        }
        return s + '\n';
    };
    std::string out = line(header);
    std::size_t total = 0;
    for (std::size_t w : width) total += w;
    out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
    for (const auto& r : rows) out += line(r);
    return out;
}

// ---------------------------------------------------------------------------
// hodge

struct HodgeOptions {
    std::string ambient;
    int degree = 3;
    std::string parts;
};

inline Report run_hodge(const HodgeOptions& o) {
    Report r;
    r.command = "hodge";
    const Ambient amb(parse_int_list(o.ambient, "ambient"));
    const CoverData cover = CoverData::calabi_yau(amb, o.degree);
    const PartitionType t(cover, parse_parts(o.parts));
    const HodgeSummary s = hodge_summary(t);

    r.inputs = {{"ambient", amb.factor_dims()}, {"d", o.degree}, {"parts", parts_json(t)}};
    r.results = {{"euler_Z", s.euler_Z},
                 {"euler_D", s.euler_D},
                 {"euler_Y", s.euler_Y},
                 {"b_prime", s.b_prime},
                 {"h_chi_n", s.h_chi_n.str()},
                 {"h_n11", s.h_n11},
                 {"defect", s.defect.str()},
                 {"ball", s.is_ball}};
    if (s.is_ball) r.results["ball_dimension"] = s.h_n11;

    r.check("hurwitz e(Y) = d e(Z) - (d-1) e(D)", true);
    if (s.combinatorial_check) r.check("set-partition formulas agree with Chow integrals", true);
    if (amb.factors() == 1) {
        std::vector<int> degrees;
        for (const auto& p : t.parts()) degrees.push_back(p[0]);
        const PnInvariants pn = pn_invariants(amb.dim(0), o.degree, degrees);
        const bool ok = pn.b_prime == Rational(s.b_prime) && pn.git_dim == s.h_n11 && pn.ball == s.is_ball;
        r.check("P^n closed form agrees", ok, "b'=" + pn.b_prime.str());
        if (!ok) throw consistency_error("P^n closed form b'=" + pn.b_prime.str() + " disagrees with Chow value " +
                                         std::to_string(s.b_prime));
    }

    std::ostringstream os;
    os << "type      " << t.str() << " on " << amb.str() << ", d = " << o.degree << "\n"
       << "e(Z)      " << s.euler_Z << "\n"
       << "e(D)      " << s.euler_D << "\n"
       << "e(Y)      " << s.euler_Y << "\n"
       << "b'        " << s.b_prime << "\n"
       << "h^n_chi   " << s.h_chi_n.str() << "\n"
       << "h^{n-1,1} " << s.h_n11 << "\n"
       << "defect    " << s.defect.str() << "\n"
       << "ball      " << (s.is_ball ? "true" : "false");
    if (s.is_ball) os << " (dimension " << s.h_n11 << ")";
    os << "\n";
    r.text = os.str();
    return r;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyOptions {
    int n = 3;
    bool all = false;  // full enumeration instead of reduced ball types
    bool maximal = false;
    bool complete = false;
    bool no_half_twist = false;
};

inline Report run_classify(const ClassifyOptions& o) {
    Report r;
    r.command = "classify";
    r.inputs = {{"n", o.n},
                {"all", o.all},
                {"maximal", o.maximal},
                {"complete", o.complete},
                {"no_half_twist", o.no_half_twist}};
    if (o.all && (o.maximal || o.complete))
        throw validation_error("--all cannot be combined with --maximal or --complete");
    if (o.complete && o.n < 3) throw validation_error("--complete needs n >= 3");

    std::vector<CanonicalType> types;
    if (o.all) types = enumerate_partitions(o.n);
    else if (o.maximal && o.complete) types = maximal_complete_types(o.n);
    else if (o.maximal) types = maximal_ball_types(o.n);
    else types = enumerate_ball_types(o.n);
    if (o.complete && !o.maximal) {
        std::vector<CanonicalType> kept;
        for (auto& t : types)
            if (is_complete(t.partition)) kept.push_back(std::move(t));
        types = std::move(kept);
    }

    json rows = json::array();
    std::vector<std::vector<std::string>> text_rows;
    std::size_t mismatched_complete = 0;
    for (const auto& c : types) {
        const bool half = is_half_twist(c.partition).has_value();
        if (o.no_half_twist && half) continue;
        const PartitionType shown = display_form(c.partition);
        const bool ball = is_ball_type(shown);
        const std::int64_t dim = git_dimension(shown);
        json row = {{"type", shown.str()}, {"parts", parts_json(shown)}, {"dimension", dim},
                    {"ball", ball},        {"half_twist", half}};
        std::string complete = "-";
        if (ball && o.n >= 3) {
            const bool genus = is_complete(shown);
            const bool componentwise = is_complete_componentwise(shown);
            row["complete"] = genus;
            row["complete_componentwise"] = componentwise;
            if (o.n == 3 && genus != componentwise) ++mismatched_complete;
            complete = genus ? "yes" : "no";
        }
        std::string projections;
        json proj = json::array();
        for (std::size_t i : valid_projections(shown)) {
            proj.push_back(i + 1);
            projections += (projections.empty() ? "" : ",") + std::to_string(i + 1);
        }
        row["valid_projections"] = proj;
        rows.push_back(row);
        text_rows.push_back({std::to_string(text_rows.size() + 1), shown.str(), std::to_string(dim),
                             ball ? "yes" : "no", half ? "yes" : "no", complete,
                             projections.empty() ? "-" : projections});
    }
    r.results = {{"count", rows.size()}, {"types", rows}};
    if (o.n == 3 && !o.all) {
        r.check("complete: genus test and componentwise test agree", mismatched_complete == 0,
                std::to_string(mismatched_complete) + " disagreements");
    }
    r.text = format_columns({"#", "type", "dim", "ball", "half-twist", "complete", "projections"}, text_rows) +
             std::to_string(rows.size()) + " classes\n";
    return r;
}

// ---------------------------------------------------------------------------
// dm

struct DmOptions {
    std::string parts;
    std::optional<int> projection;  // one-based
    std::vector<int> nodes;         // one-based part indices
    std::vector<std::string> tangents;
};

inline Report run_dm(const DmOptions& o) {
    Report r;
    r.command = "dm";
    const PartitionType t = PartitionType::p1_cubic(parse_parts(o.parts));
    std::vector<Degeneration> features;
    for (int j : o.nodes) {
        if (j < 1) throw validation_error("--node expects a one-based part index");
        features.push_back(Degeneration::node(static_cast<std::size_t>(j - 1)));
    }
    for (const auto& s : o.tangents) {
        const auto pair = parse_int_list(s, "--tangent");
        if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1)
            throw validation_error("--tangent expects two one-based part indices, got '" + s + "'");
        features.push_back(
            Degeneration::tangency(static_cast<std::size_t>(pair[0] - 1), static_cast<std::size_t>(pair[1] - 1)));
    }
    json feats = json::array();
    for (const auto& f : features) feats.push_back(f.str());
    r.inputs = {{"parts", parts_json(t)}, {"degenerations", feats}};
    if (o.projection) r.inputs["projection"] = *o.projection;

    std::vector<std::size_t> projections = valid_projections(t);
    if (o.projection) {
        if (*o.projection < 1) throw validation_error("--projection is one-based");
        const auto i = static_cast<std::size_t>(*o.projection - 1);
        require_valid_projection(t, i);
        projections = {i};
    }

    json out = json::array();
    std::ostringstream os;
    os << "type " << t.str() << "\n";
    if (projections.empty()) os << "no valid projection\n";
    for (std::size_t i : projections) {
        const DMWeights w = features.empty() ? derive_weights(t, i) : apply_degenerations(t, i, features);
        json members = json::array();
        std::string kinds;
        for (const auto& m : classify_members(t, i)) {
            members.push_back(m.str());
            kinds += (kinds.empty() ? "" : " ") + m.str();
        }
        out.push_back({{"projection", i + 1},
                       {"members", members},
                       {"weights", weights_json(w)},
                       {"dm", w.str()},
                       {"points", w.points()}});
        os << "p" << (i + 1) << ": " << w.str() << "   " << kinds << "\n";
        r.check("p" + std::to_string(i + 1) + " weights sum to 12", w.sum() == kDMWeightTotal);
        if (features.empty() && is_ball_type(t))
            r.check("p" + std::to_string(i + 1) + " points - 3 = GIT dimension",
                    static_cast<std::int64_t>(w.points()) - 3 == git_dimension(t));
    }
    r.results = {{"projections", out}, {"valid", !projections.empty()}};
    r.text = os.str();
    return r;
}

// ---------------------------------------------------------------------------
// tables

inline Report run_tables(int which, const std::string& golden_text) {
    Report r;
    r.command = "tables";
    r.inputs = {{"which", which}};
    const TableResult res = compare_table(which, golden_text);

    json rows = json::array();
    std::vector<std::vector<std::string>> text_rows;
    for (const auto& row : res.rows) {
        json cells = json::object();
        for (std::size_t c = 0; c < res.columns.size() && c < row.cells.size(); ++c)
            cells[res.columns[c]] = row.cells[c];
        rows.push_back({{"label", row.label},
                        {"cells", cells},
                        {"status", to_string(row.status)},
                        {"differences", row.differences}});
        std::vector<std::string> line{row.label};
        for (std::size_t c = 0; c < res.columns.size(); ++c) {
            if (res.columns[c] == "no") continue;
            line.push_back(c < row.cells.size() ? row.cells[c] : "");
        }
        std::string status = to_string(row.status);
        for (const auto& d : row.differences) status += "; " + d;
        line.push_back(status);
        text_rows.push_back(std::move(line));
    }
    const std::size_t matched = res.count(RowStatus::Match);
    r.results = {{"rows", rows},
                 {"matched", matched},
                 {"mismatched", res.count(RowStatus::Mismatch)},
                 {"missing", res.count(RowStatus::Missing)},
                 {"extra", res.count(RowStatus::Extra)},
                 {"identical", res.identical()}};
    r.check("table " + std::to_string(which) + " identical to golden copy", res.identical(),
            std::to_string(matched) + "/" + std::to_string(res.rows.size()) + " rows match");

    std::vector<std::string> header{"row"};
    for (const auto& c : res.columns)
        if (c != "no") header.push_back(c);
    header.push_back("status");
    r.text = "Table " + std::to_string(which) + "\n" + format_columns(header, text_rows);
    r.exit_code = res.identical() ? kExitOk : kExitGoldenMismatch;
    return r;
}

}  // namespace ballcover::cli
