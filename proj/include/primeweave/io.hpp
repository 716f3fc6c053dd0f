// JSON and DOT serialization for graphs, labelings, verify reports and scan
// reports. Output is canonical (pairs ascending, edge list lexicographic,
// fixed key order), so identical inputs serialize to identical bytes.
#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "primeweave/graph.hpp"
#include "primeweave/labelings.hpp"
#include "primeweave/solver.hpp"

namespace primeweave {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& field, const std::string& what) {
    throw ParseError("\"" + field + "\": " + what);
}

inline void reject_unknown_keys(const json& j, const std::string& ctx,
                                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (item.key() == a) known = true;
        if (!known) parse_fail(ctx.empty() ? item.key() : ctx + "." + item.key(),
                               "unexpected field");
    }
}

inline const json& require_field(const json& j, const std::string& ctx, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) parse_fail(ctx.empty() ? name : ctx + "." + name, "missing field");
    return *it;
}

inline std::int64_t require_int(const json& j, const std::string& field) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        parse_fail(field, "expected an integer");
    return j.get<std::int64_t>();
}

inline std::uint64_t require_positive(const json& j, const std::string& field) {
    if ((!j.is_number_integer() && !j.is_number_unsigned()) || j.get<std::int64_t>() < 1)
        parse_fail(field, "expected a positive integer");
    return j.get<std::uint64_t>();
}

}  // namespace detail

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    auto edges = json::array();
    for (auto [u, v] : g.sorted_edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (g.has_roles()) {
        json roles = json::object();
        const auto& rs = g.roles();
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& r = rs[static_cast<std::size_t>(v)];
            json ro;
            ro["kind"] = role_kind_name(r.kind);
            ro["i"] = r.i;
            if (r.kind != RoleKind::cycle) ro["j"] = r.j;
            if (r.kind == RoleKind::leaf) ro["k"] = r.k;
            roles[std::to_string(v)] = std::move(ro);
        }
        j["roles"] = std::move(roles);
    }
    return j;
}

inline Graph graph_from_json(const json& j) {
    using detail::parse_fail;
    if (!j.is_object()) parse_fail("graph", "expected a JSON object");
    detail::reject_unknown_keys(j, "", {"n", "edges", "roles"});

    const std::int64_t n = detail::require_int(detail::require_field(j, "", "n"), "n");
    if (n < 0) parse_fail("n", "vertex count must be nonnegative");
    if (n > std::numeric_limits<int>::max()) parse_fail("n", "vertex count too large");
    Graph g(static_cast<int>(n));

    const json& edges = detail::require_field(j, "", "edges");
    if (!edges.is_array()) parse_fail("edges", "expected an array");
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string field = "edges[" + std::to_string(e) + "]";
        const json& pair = edges[e];
        if (!pair.is_array() || pair.size() != 2)
            parse_fail(field, "expected a 2-element array");
        const std::int64_t u = detail::require_int(pair[0], field);
        const std::int64_t v = detail::require_int(pair[1], field);
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(field, "endpoint out of range for n=" + std::to_string(n));
        if (u == v) parse_fail(field, "self-loops are not allowed");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            parse_fail(field, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }

    if (auto it = j.find("roles"); it != j.end()) {
        const json& roles = *it;
        if (!roles.is_object()) parse_fail("roles", "expected an object");
        if (static_cast<std::int64_t>(roles.size()) != n)
            parse_fail("roles", "role map must cover every vertex (expected " +
                                    std::to_string(n) + " entries)");
        std::vector<VertexRole> out(static_cast<std::size_t>(n));
        for (const auto& item : roles.items()) {
            const std::string field = "roles." + item.key();
            std::size_t pos = 0;
            long long v = -1;
            try {
                v = std::stoll(item.key(), &pos);
            } catch (const std::exception&) {
                parse_fail(field, "key must be a vertex id");
            }
            if (pos != item.key().size() || v < 0 || v >= n)
                parse_fail(field, "key must be a vertex id below n");
            const json& ro = item.value();
            if (!ro.is_object()) parse_fail(field, "expected an object");
            const json& kindj = detail::require_field(ro, field, "kind");
            if (!kindj.is_string()) parse_fail(field + ".kind", "expected a string");
            const std::string kind = kindj.get<std::string>();
            VertexRole r;
            if (kind == "cycle") {
                detail::reject_unknown_keys(ro, field, {"kind", "i"});
                r = cycle_role(static_cast<int>(
                    detail::require_positive(detail::require_field(ro, field, "i"), field + ".i")));
            } else if (kind == "pendant" || kind == "star") {
                detail::reject_unknown_keys(ro, field, {"kind", "i", "j"});
                const int i = static_cast<int>(
                    detail::require_positive(detail::require_field(ro, field, "i"), field + ".i"));
                const int jj = static_cast<int>(
                    detail::require_positive(detail::require_field(ro, field, "j"), field + ".j"));
                r = kind == "pendant" ? pendant_role(i, jj) : star_role(i, jj);
            } else if (kind == "leaf") {
                detail::reject_unknown_keys(ro, field, {"kind", "i", "j", "k"});
                r = leaf_role(
                    static_cast<int>(detail::require_positive(
                        detail::require_field(ro, field, "i"), field + ".i")),
                    static_cast<int>(detail::require_positive(
                        detail::require_field(ro, field, "j"), field + ".j")),
                    static_cast<int>(detail::require_positive(
                        detail::require_field(ro, field, "k"), field + ".k")));
            } else {
                parse_fail(field + ".kind", "unknown role kind \"" + kind + "\"");
            }
            out[static_cast<std::size_t>(v)] = r;
        }
        try {
            g.set_roles(std::move(out));
        } catch (const std::domain_error& e) {
            parse_fail("roles", e.what());
        }
    }
    return g;
}

inline std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

inline json parse_json_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(std::string("\"") + what + "\": not valid JSON");
    return j;
}

inline Graph parse_graph(const std::string& text) {
    return graph_from_json(parse_json_text(text, "graph"));
}

inline json labeling_to_json(const Labeling& f) {
    json j = json::array();
    for (std::uint64_t x : f) j.push_back(x);
    return j;
}

inline Labeling labeling_from_json(const json& j) {
    if (!j.is_array()) detail::parse_fail("labels", "expected an array");
    Labeling f;
    for (std::size_t i = 0; i < j.size(); ++i)
        f.push_back(detail::require_positive(j[i], "labels[" + std::to_string(i) + "]"));
    return f;
}

inline json bundle_to_json(const Graph& g, const Labeling& f) {
    json j;
    j["graph"] = graph_to_json(g);
    j["labels"] = labeling_to_json(f);
    return j;
}

inline std::pair<Graph, Labeling> bundle_from_json(const json& j) {
    if (!j.is_object()) detail::parse_fail("bundle", "expected an object");
    detail::reject_unknown_keys(j, "", {"graph", "labels"});
    Graph g = graph_from_json(detail::require_field(j, "", "graph"));
    Labeling f = labeling_from_json(detail::require_field(j, "", "labels"));
    return {std::move(g), std::move(f)};
}

inline json verify_report_to_json(const VerifyReport& rep) {
    json j;
    j["bijection_ok"] = rep.bijection_ok;
    auto vio = json::array();
    for (const auto& v : rep.violations) {
        json e;
        e["u"] = v.u;
        e["v"] = v.v;
        e["lu"] = v.label_u;
        e["lv"] = v.label_v;
        e["gcd"] = v.common;
        vio.push_back(std::move(e));
    }
    j["violations"] = std::move(vio);
    return j;
}

inline json search_stats_to_json(const SearchStats& st, bool with_elapsed = false) {
    json j;
    j["outcome"] = outcome_name(st.outcome);
    if (st.labeling) j["labels"] = labeling_to_json(*st.labeling);
    j["nodes_expanded"] = st.nodes_expanded;
    j["backtracks"] = st.backtracks;
    if (with_elapsed) j["elapsed_ms"] = st.elapsed.count() / 1000.0;
    return j;
}

inline json scan_report_to_json(const ScanReport& rep) {
    json per_n = json::object();
    for (const auto& [n, t] : rep.per_n) {
        json e;
        e["scanned"] = t.scanned;
        e["found"] = t.found;
        e["budget_exceeded"] = t.budget_exceeded;
        e["no_solution"] = t.no_solution;
        per_n[std::to_string(n)] = std::move(e);
    }
    json j;
    j["per_n"] = std::move(per_n);
    auto cx = json::array();
    for (const auto& g : rep.counterexamples) cx.push_back(graph_to_json(g));
    j["counterexamples"] = std::move(cx);
    return j;
}

// Undirected DOT document; when a labeling is supplied its values become the
// node captions.
inline std::string to_dot(const Graph& g, const Labeling* f = nullptr) {
    if (f && static_cast<int>(f->size()) != g.vertex_count())
        throw std::domain_error("to_dot: labeling length does not match vertex count");
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f)
            out << "  " << v << " [label=\"" << (*f)[static_cast<std::size_t>(v)] << "\"];\n";
        else
            out << "  " << v << ";\n";
    }
    for (auto [u, v] : g.sorted_edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace primeweave
