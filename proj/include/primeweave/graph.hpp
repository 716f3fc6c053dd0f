// Graph data model, constructors for the cycle-with-trees families, and
// exhaustive generation of small unicyclic graphs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "primeweave/numtheory.hpp"

namespace primeweave {

enum class RoleKind : std::uint8_t { cycle, pendant, star, leaf };

// Structural address of a vertex inside a family construction. All indices
// are 1-based: Cycle(i) is the i-th cycle vertex, Pendant(i, j) the j-th
// pendant of clump i, Star(i, j) the j-th ternary child under clump i's
// pendant, Leaf(i, j, k) the k-th child of Star(i, j).
struct VertexRole {
    RoleKind kind = RoleKind::cycle;
    int i = 0;
    int j = 0;
    int k = 0;

    friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

inline VertexRole cycle_role(int i) { return {RoleKind::cycle, i, 0, 0}; }
inline VertexRole pendant_role(int i, int j) { return {RoleKind::pendant, i, j, 0}; }
inline VertexRole star_role(int i, int j) { return {RoleKind::star, i, j, 0}; }
inline VertexRole leaf_role(int i, int j, int k) { return {RoleKind::leaf, i, j, k}; }

inline const char* role_kind_name(RoleKind k) {
    switch (k) {
        case RoleKind::cycle: return "cycle";
        case RoleKind::pendant: return "pendant";
        case RoleKind::star: return "star";
        case RoleKind::leaf: return "leaf";
    }
    return "?";
}

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
// Roles, when present, form a total injective map vertex -> VertexRole;
// only family constructors and the JSON parser attach them.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0) throw std::domain_error("Graph: vertex count must be nonnegative");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::domain_error("add_edge: endpoint out of range");
        if (u == v)
            throw std::domain_error("add_edge: self-loops are not allowed");
        if (has_edge(u, v))
            throw std::domain_error("add_edge: duplicate edge");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::find(nb.begin(), nb.end(), v) != nb.end();
    }

    // Edges normalized to u < v, in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Edges in lexicographic order; the canonical order for serialization
    // and reporting.
    std::vector<std::pair<int, int>> sorted_edges() const {
        auto es = edges_;
        std::sort(es.begin(), es.end());
        return es;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_roles() const { return roles_.has_value(); }

    const std::vector<VertexRole>& roles() const {
        if (!roles_) throw std::domain_error("graph carries no vertex roles");
        return *roles_;
    }

    void set_roles(std::vector<VertexRole> roles) {
        if (static_cast<int>(roles.size()) != n_)
            throw std::domain_error("set_roles: role map must cover every vertex");
        auto key = [](const VertexRole& r) {
            return std::tuple(static_cast<int>(r.kind), r.i, r.j, r.k);
        };
        auto sorted = roles;
        std::sort(sorted.begin(), sorted.end(),
                  [&](const VertexRole& a, const VertexRole& b) { return key(a) < key(b); });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::domain_error("set_roles: duplicate role address");
        roles_ = std::move(roles);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.sorted_edges() == b.sorted_edges() && a.roles_ == b.roles_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::optional<std::vector<VertexRole>> roles_;
};

enum class Family {
    path,
    cycle,
    star,
    hairy_cycle,
    bertrand_weed,
    cycle_path,
    cycle_pendant_star,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::hairy_cycle: return "hairy";
        case Family::bertrand_weed: return "weed";
        case Family::cycle_path: return "cyclepath";
        case Family::cycle_pendant_star: return "cps";
    }
    return "?";
}

// Family plus its parameters. `m` is the pendant count for hairy cycles and
// the attached-path vertex count for cycle_path; `levels` is the ternary
// tree depth for cycle_pendant_star.
struct FamilySpec {
    Family family = Family::path;
    std::int64_t n = 0;
    std::int64_t m = 0;
    int levels = 1;

    static FamilySpec path(std::int64_t n) { return {Family::path, n, 0, 1}; }
    static FamilySpec cycle(std::int64_t n) { return {Family::cycle, n, 0, 1}; }
    static FamilySpec star(std::int64_t n) { return {Family::star, n, 0, 1}; }
    static FamilySpec hairy_cycle(std::int64_t n, std::int64_t m) {
        return {Family::hairy_cycle, n, m, 1};
    }
    static FamilySpec bertrand_weed(std::int64_t n) { return {Family::bertrand_weed, n, 0, 1}; }
    static FamilySpec cycle_path(std::int64_t n, std::int64_t m) {
        return {Family::cycle_path, n, m, 1};
    }
    static FamilySpec cycle_pendant_star(std::int64_t n, int levels) {
        return {Family::cycle_pendant_star, n, 0, levels};
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

inline int require_vertex_budget(std::int64_t total) {
    if (total > std::numeric_limits<int>::max())
        throw std::domain_error("family parameters yield more vertices than supported");
    return static_cast<int>(total);
}

// Shared layout for clump families: clump i occupies a contiguous id block
// starting at base(i), cycle vertex first.
struct ClumpLayout {
    std::vector<int> base;  // base[i-1] = id of cycle vertex c_i
    int total = 0;
};

inline ClumpLayout clump_layout(std::int64_t n, const std::vector<std::int64_t>& clump_sizes) {
    ClumpLayout lay;
    std::int64_t at = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        lay.base.push_back(require_vertex_budget(at));
        at = checked_add_i64(at, clump_sizes[static_cast<std::size_t>(i)]);
    }
    lay.total = require_vertex_budget(at);
    return lay;
}

inline void add_cycle_edges(Graph& g, const std::vector<int>& cycle_vertices) {
    const auto n = cycle_vertices.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(cycle_vertices[i], cycle_vertices[i + 1]);
    g.add_edge(cycle_vertices[n - 1], cycle_vertices[0]);
}

}  // namespace detail

// Builds the requested family with roles attached (paths and stars carry no
// roles; their labelings are derived from structure alone).
inline Graph build(const FamilySpec& spec) {
    using detail::clump_layout;
    const std::int64_t n = spec.n;
    switch (spec.family) {
        case Family::path: {
            if (n < 2) throw std::domain_error("path: need n >= 2");
            Graph g(detail::require_vertex_budget(n));
            for (int v = 0; v + 1 < g.vertex_count(); ++v) g.add_edge(v, v + 1);
            return g;
        }
        case Family::cycle: {
            if (n < 3) throw std::domain_error("cycle: need n >= 3");
            Graph g(detail::require_vertex_budget(n));
            std::vector<int> cyc(static_cast<std::size_t>(n));
            std::vector<VertexRole> roles;
            for (int v = 0; v < g.vertex_count(); ++v) {
                cyc[static_cast<std::size_t>(v)] = v;
                roles.push_back(cycle_role(v + 1));
            }
            detail::add_cycle_edges(g, cyc);
            g.set_roles(std::move(roles));
            return g;
        }
        case Family::star: {
            if (n < 1) throw std::domain_error("star: need n >= 1");
            Graph g(detail::require_vertex_budget(checked_add_i64(n, 1)));
            for (int v = 1; v < g.vertex_count(); ++v) g.add_edge(0, v);
            return g;
        }
        case Family::hairy_cycle: {
            if (n < 3) throw std::domain_error("hairy cycle: need n >= 3");
            if (spec.m < 1) throw std::domain_error("hairy cycle: need m >= 1");
            auto lay = clump_layout(n, std::vector<std::int64_t>(static_cast<std::size_t>(n),
                                                                 checked_add_i64(spec.m, 1)));
            Graph g(lay.total);
            std::vector<VertexRole> roles(static_cast<std::size_t>(lay.total));
            for (int i = 1; i <= n; ++i) {
                const int c = lay.base[static_cast<std::size_t>(i - 1)];
                roles[static_cast<std::size_t>(c)] = cycle_role(i);
                for (int j = 1; j <= spec.m; ++j) {
                    g.add_edge(c, c + j);
                    roles[static_cast<std::size_t>(c + j)] = pendant_role(i, j);
                }
            }
            detail::add_cycle_edges(g, lay.base);
            g.set_roles(std::move(roles));
            return g;
        }
        case Family::bertrand_weed: {
            if (n < 3) throw std::domain_error("bertrand weed: need n >= 3");
            if (n > 30) throw std::domain_error("bertrand weed: clump sizes double per step; n > 30 is not supported");
            std::vector<std::int64_t> sizes;
            for (std::int64_t i = 1; i <= n; ++i)
                sizes.push_back(std::int64_t{1} << i);  // clump i = cycle vertex + 2^i - 1 pendants
            auto lay = clump_layout(n, sizes);
            Graph g(lay.total);
            std::vector<VertexRole> roles(static_cast<std::size_t>(lay.total));
            for (int i = 1; i <= n; ++i) {
                const int c = lay.base[static_cast<std::size_t>(i - 1)];
                roles[static_cast<std::size_t>(c)] = cycle_role(i);
                const int pendants = (1 << i) - 1;
                for (int j = 1; j <= pendants; ++j) {
                    g.add_edge(c, c + j);
                    roles[static_cast<std::size_t>(c + j)] = pendant_role(i, j);
                }
            }
            detail::add_cycle_edges(g, lay.base);
            g.set_roles(std::move(roles));
            return g;
        }
        case Family::cycle_path: {
            if (n < 3) throw std::domain_error("cycle path: need n >= 3");
            if (spec.m < 1) throw std::domain_error("cycle path: need m >= 1");
            auto lay = clump_layout(n, std::vector<std::int64_t>(static_cast<std::size_t>(n), spec.m));
            Graph g(lay.total);
            // tail of m-1 vertices chained off each cycle vertex; no roles,
            // this family is solver territory
            for (int i = 1; i <= n; ++i) {
                const int c = lay.base[static_cast<std::size_t>(i - 1)];
                for (int j = 1; j < spec.m; ++j) g.add_edge(c + j - 1, c + j);
            }
            detail::add_cycle_edges(g, lay.base);
            return g;
        }
        case Family::cycle_pendant_star: {
            if (n < 3) throw std::domain_error("cycle pendant star: need n >= 3");
            if (spec.levels != 1 && spec.levels != 2)
                throw std::domain_error("cycle pendant star: levels must be 1 or 2");
            const std::int64_t clump = spec.levels == 1 ? 5 : 14;
            auto lay = clump_layout(n, std::vector<std::int64_t>(static_cast<std::size_t>(n), clump));
            Graph g(lay.total);
            std::vector<VertexRole> roles(static_cast<std::size_t>(lay.total));
            for (int i = 1; i <= n; ++i) {
                const int c = lay.base[static_cast<std::size_t>(i - 1)];
                const int p = c + 1;
                roles[static_cast<std::size_t>(c)] = cycle_role(i);
                roles[static_cast<std::size_t>(p)] = pendant_role(i, 1);
                g.add_edge(c, p);
                for (int j = 1; j <= 3; ++j) {
                    const int s = c + 1 + j;
                    g.add_edge(p, s);
                    roles[static_cast<std::size_t>(s)] = star_role(i, j);
                    if (spec.levels == 2) {
                        for (int k = 1; k <= 3; ++k) {
                            const int l = c + 5 + 3 * (j - 1) + (k - 1);
                            g.add_edge(s, l);
                            roles[static_cast<std::size_t>(l)] = leaf_role(i, j, k);
                        }
                    }
                }
            }
            detail::add_cycle_edges(g, lay.base);
            g.set_roles(std::move(roles));
            return g;
        }
    }
    throw std::domain_error("unknown family");
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

// Connected with exactly n edges; equivalent to containing exactly one cycle.
inline bool is_unicyclic(const Graph& g) {
    return g.vertex_count() > 0 && g.edge_count() == g.vertex_count() && is_connected(g);
}

inline constexpr int kDefaultUnicyclicCap = 10;

namespace detail {

// Graphs on n vertices with exactly one cycle are generated as a k-cycle on
// vertices 0..k-1 (3 <= k <= n) with every further vertex v choosing an
// attachment point among 0..v-1. Every unicyclic graph on n vertices shows
// up at least once (relabel: cycle first, then breadth-first); isomorphic
// duplicates are not filtered.
inline std::uint64_t unicyclic_count_for_cycle(int n, int k) {
    std::uint64_t c = 1;
    for (int v = k; v < n; ++v) c = checked_mul(c, static_cast<std::uint64_t>(v));
    return c;
}

}  // namespace detail

inline std::uint64_t unicyclic_stream_count(int n) {
    if (n < 3) throw std::domain_error("unicyclic enumeration: need n >= 3");
    std::uint64_t total = 0;
    for (int k = 3; k <= n; ++k)
        total = checked_add(total, detail::unicyclic_count_for_cycle(n, k));
    return total;
}

// Decodes the index-th graph of the stream for vertex count n. Index order
// is: cycle length ascending, then attachment choices as a mixed-radix
// odometer with the last vertex fastest.
inline Graph unicyclic_at(int n, std::uint64_t index) {
    if (n < 3) throw std::domain_error("unicyclic enumeration: need n >= 3");
    for (int k = 3; k <= n; ++k) {
        const std::uint64_t block = detail::unicyclic_count_for_cycle(n, k);
        if (index >= block) {
            index -= block;
            continue;
        }
        Graph g(n);
        std::vector<int> cyc(static_cast<std::size_t>(k));
        for (int v = 0; v < k; ++v) cyc[static_cast<std::size_t>(v)] = v;
        detail::add_cycle_edges(g, cyc);
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        for (int v = n - 1; v >= k; --v) {
            parent[static_cast<std::size_t>(v)] = static_cast<int>(index % static_cast<std::uint64_t>(v));
            index /= static_cast<std::uint64_t>(v);
        }
        for (int v = k; v < n; ++v) g.add_edge(parent[static_cast<std::size_t>(v)], v);
        return g;
    }
    throw std::domain_error("unicyclic_at: index out of range");
}

// Single-consumer stream over every unicyclic graph on n vertices.
class UnicyclicEnumerator {
public:
    explicit UnicyclicEnumerator(int n, int cap = kDefaultUnicyclicCap) : n_(n) {
        if (n < 3) throw std::domain_error("unicyclic enumeration: need n >= 3");
        if (n > cap)
            throw std::domain_error("unicyclic enumeration: n exceeds the configured cap (" +
                                    std::to_string(cap) + ")");
        total_ = unicyclic_stream_count(n);
    }

    std::uint64_t total() const { return total_; }

    std::optional<Graph> next() {
        if (index_ >= total_) return std::nullopt;
        return unicyclic_at(n_, index_++);
    }

private:
    int n_;
    std::uint64_t index_ = 0;
    std::uint64_t total_ = 0;
};

}  // namespace primeweave
