// Prime vertex labelings: the verifier (adjacent labels must be relatively
// prime, labels a bijection onto 1..n) and one constructive scheme per
// supported family.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "primeweave/graph.hpp"
#include "primeweave/numtheory.hpp"

namespace primeweave {

// assignment[v] is the label of vertex v; a valid labeling is a bijection
// onto {1..n}.
using Labeling = std::vector<std::uint64_t>;

struct Violation {
    int u = 0;
    int v = 0;
    std::uint64_t label_u = 0;
    std::uint64_t label_v = 0;
    std::uint64_t common = 0;  // shared divisor, always > 1

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    bool bijection_ok = false;
    std::vector<Violation> violations;

    bool valid() const { return bijection_ok && violations.empty(); }
};

// Checks a labeling against the coprimality definition. Reports every edge
// whose endpoint labels share a divisor, in lexicographic edge order.
inline VerifyReport verify(const Graph& g, const Labeling& f) {
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw std::domain_error("verify: labeling length does not match vertex count");

    VerifyReport rep;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    rep.bijection_ok = true;
    for (std::uint64_t x : f) {
        if (x < 1 || x > static_cast<std::uint64_t>(n) || seen[static_cast<std::size_t>(x)]) {
            rep.bijection_ok = false;
            break;
        }
        seen[static_cast<std::size_t>(x)] = 1;
    }
    for (auto [u, v] : g.sorted_edges()) {
        const std::uint64_t a = f[static_cast<std::size_t>(u)];
        const std::uint64_t b = f[static_cast<std::size_t>(v)];
        if (a == 0 || b == 0) continue;  // nonsense labels already flagged by bijection_ok
        const std::uint64_t d = std::gcd(a, b);
        if (d > 1) rep.violations.push_back({u, v, a, b, d});
    }
    return rep;
}

// Lookup from role address to vertex id for role-carrying graphs.
class RoleIndex {
public:
    explicit RoleIndex(const Graph& g) {
        if (!g.has_roles())
            throw std::domain_error("labeling scheme requires a graph with vertex roles");
        const auto& roles = g.roles();
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& r = roles[static_cast<std::size_t>(v)];
            map_.emplace(std::tuple(r.kind, r.i, r.j, r.k), v);
            if (r.kind == RoleKind::cycle) ++cycle_count_;
        }
    }

    int cycle_length() const { return cycle_count_; }

    int vertex(RoleKind kind, int i, int j = 0, int k = 0) const {
        auto it = map_.find(std::tuple(kind, i, j, k));
        if (it == map_.end())
            throw std::domain_error(std::string("graph lacks required role ") +
                                    role_kind_name(kind) + "(" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
        return it->second;
    }

private:
    std::map<std::tuple<RoleKind, int, int, int>, int> map_;
    int cycle_count_ = 0;
};

// Labels any path graph 1..n along the walk from its lower-id endpoint.
inline Labeling label_path(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1)
        throw std::domain_error("label_path: not a path graph");
    int endpoint = -1;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 0 || d > 2) throw std::domain_error("label_path: not a path graph");
        if (d == 1 && endpoint < 0) endpoint = v;
    }
    if (endpoint < 0) throw std::domain_error("label_path: not a path graph");

    Labeling f(static_cast<std::size_t>(n), 0);
    int prev = -1, at = endpoint;
    for (std::uint64_t next = 1; next <= static_cast<std::uint64_t>(n); ++next) {
        f[static_cast<std::size_t>(at)] = next;
        int step = -1;
        for (int w : g.neighbors(at))
            if (w != prev) step = w;
        prev = at;
        at = step;
        if (at < 0 && next < static_cast<std::uint64_t>(n))
            throw std::domain_error("label_path: not a path graph");
    }
    return f;
}

// Labels any cycle graph 1..n consecutively around the ring, so the
// vertices labeled 1 and n end up adjacent.
inline Labeling label_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n)
        throw std::domain_error("label_cycle: not a cycle graph");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) throw std::domain_error("label_cycle: not a cycle graph");
    if (!is_connected(g)) throw std::domain_error("label_cycle: not a cycle graph");

    Labeling f(static_cast<std::size_t>(n), 0);
    int prev = -1, at = 0;
    for (std::uint64_t next = 1; next <= static_cast<std::uint64_t>(n); ++next) {
        f[static_cast<std::size_t>(at)] = next;
        const auto& nb = g.neighbors(at);
        int step = std::min(nb[0], nb[1]);
        if (step == prev) step = std::max(nb[0], nb[1]);
        prev = at;
        at = step;
    }
    return f;
}

// Labels any star: 1 on the center, 2..n+1 on the leaves in id order.
inline Labeling label_star(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1)
        throw std::domain_error("label_star: not a star graph");
    int center = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > g.degree(center)) center = v;
    for (int v = 0; v < n; ++v) {
        if (v == center) continue;
        if (g.degree(v) != 1 || !g.has_edge(center, v))
            throw std::domain_error("label_star: not a star graph");
    }
    Labeling f(static_cast<std::size_t>(n), 0);
    f[static_cast<std::size_t>(center)] = 1;
    std::uint64_t next = 2;
    for (int v = 0; v < n; ++v)
        if (v != center) f[static_cast<std::size_t>(v)] = next++;
    return f;
}

namespace detail {

// Common scheme for cycles whose clump i is a cycle vertex plus pendants:
// clump i takes the i-th consecutive block of labels, the cycle vertex takes
// cycle_value(i) from inside the block, pendants take the rest ascending.
inline Labeling label_pendant_clumps(const Graph& g, const char* scheme,
                                     const std::function<std::int64_t(int)>& pendants_of,
                                     const std::function<std::uint64_t(int)>& block_lo,
                                     const std::function<std::uint64_t(int)>& cycle_value) {
    RoleIndex idx(g);
    const int n = idx.cycle_length();
    if (n < 3)
        throw std::domain_error(std::string(scheme) + ": graph must carry a cycle of length >= 3");

    Labeling f(static_cast<std::size_t>(g.vertex_count()), 0);
    std::int64_t covered = 0;
    for (int i = 1; i <= n; ++i) {
        const int c = idx.vertex(RoleKind::cycle, i);
        const int c_next = idx.vertex(RoleKind::cycle, i % n + 1);
        if (!g.has_edge(c, c_next))
            throw std::domain_error(std::string(scheme) + ": cycle roles do not form a cycle");
        const std::uint64_t value = cycle_value(i);
        f[static_cast<std::size_t>(c)] = value;
        std::uint64_t next = block_lo(i);
        const std::int64_t pendants = pendants_of(i);
        for (std::int64_t j = 1; j <= pendants; ++j) {
            const int p = idx.vertex(RoleKind::pendant, i, static_cast<int>(j));
            if (g.degree(p) != 1 || !g.has_edge(c, p))
                throw std::domain_error(std::string(scheme) + ": pendant roles do not match edges");
            if (next == value) ++next;
            f[static_cast<std::size_t>(p)] = next++;
        }
        covered = checked_add_i64(covered, pendants + 1);
    }
    if (covered != g.vertex_count())
        throw std::domain_error(std::string(scheme) + ": graph shape does not match the family");
    return f;
}

inline Labeling label_uniform_hairy(const Graph& g, std::int64_t m, const char* scheme,
                                    const std::function<std::uint64_t(int)>& cycle_value) {
    return label_pendant_clumps(
        g, scheme, [m](int) { return m; },
        [m](int i) { return static_cast<std::uint64_t>(m + 1) * (static_cast<std::uint64_t>(i) - 1) + 1; },
        [&](int i) { return i == 1 ? std::uint64_t{1} : cycle_value(i); });
}

}  // namespace detail

// Three pendants per cycle vertex. Clump i has block {4i-3 .. 4i}; the cycle
// vertex takes 4i-1 (except clump 1, whose cycle vertex takes 1).
inline Labeling label_hairy3(const Graph& g) {
    return detail::label_uniform_hairy(g, 3, "label_hairy3", [](int i) {
        return 4 * static_cast<std::uint64_t>(i) - 1;
    });
}

// Five pendants per cycle vertex. Clump i has block {6i-5 .. 6i}; the cycle
// vertex takes 6(i-1)+5.
inline Labeling label_hairy5(const Graph& g) {
    return detail::label_uniform_hairy(g, 5, "label_hairy5", [](int i) {
        return 6 * (static_cast<std::uint64_t>(i) - 1) + 5;
    });
}

// Seven pendants per cycle vertex. Clump i has block {8i-7 .. 8i}; the cycle
// vertex takes the odd block element that is divisible by neither 3 nor 5,
// selected by i mod 15.
inline std::uint64_t hairy7_cycle_value(int i) {
    const std::uint64_t base = 8 * static_cast<std::uint64_t>(i);
    switch (i % 15) {
        case 2: case 3: case 6: case 8: case 9: case 11: case 12: case 14:
            return base - 5;
        case 4: case 5: case 7: case 10: case 13:
            return base - 3;
        default:  // 0, 1
            return base - 1;
    }
}

inline Labeling label_hairy7(const Graph& g) {
    return detail::label_uniform_hairy(g, 7, "label_hairy7", hairy7_cycle_value);
}

// Clump i carries 2^i - 1 pendants and the doubling block {2^i-1 .. 2^(i+1)-2}.
// The cycle vertex takes the largest prime above the block's bottom element;
// it exists for every i >= 2, and twice its value exceeds the block top, so
// it is coprime to the whole block.
inline Labeling label_bertrand_weed(const Graph& g) {
    return detail::label_pendant_clumps(
        g, "label_bertrand_weed",
        [](int i) { return (std::int64_t{1} << i) - 1; },
        [](int i) { return (std::uint64_t{1} << i) - 1; },
        [](int i) -> std::uint64_t {
            if (i == 1) return 1;
            const std::uint64_t lo = (std::uint64_t{1} << i) - 1;
            const std::uint64_t hi = (std::uint64_t{1} << (i + 1)) - 2;
            auto p = largest_prime_in_range(lo, hi);
            if (!p) throw std::runtime_error("label_bertrand_weed: no prime in doubling block");
            return *p;
        });
}

namespace detail {

struct CpsClumpPlan {
    std::uint64_t cycle = 0;
    std::uint64_t pendant = 0;
    std::vector<std::uint64_t> stars;
    std::vector<std::vector<std::uint64_t>> leaves;  // leaves[j-1][k-1], empty for one level
};

inline void apply_cps_clump(const Graph& g, const RoleIndex& idx, Labeling& f, int i,
                            const CpsClumpPlan& plan, const char* scheme) {
    const int c = idx.vertex(RoleKind::cycle, i);
    const int p = idx.vertex(RoleKind::pendant, i, 1);
    if (!g.has_edge(c, p))
        throw std::domain_error(std::string(scheme) + ": pendant role not adjacent to its cycle vertex");
    f[static_cast<std::size_t>(c)] = plan.cycle;
    f[static_cast<std::size_t>(p)] = plan.pendant;
    for (int j = 1; j <= 3; ++j) {
        const int s = idx.vertex(RoleKind::star, i, j);
        if (!g.has_edge(p, s))
            throw std::domain_error(std::string(scheme) + ": star role not adjacent to its pendant");
        f[static_cast<std::size_t>(s)] = plan.stars[static_cast<std::size_t>(j - 1)];
        if (!plan.leaves.empty()) {
            for (int k = 1; k <= 3; ++k) {
                const int l = idx.vertex(RoleKind::leaf, i, j, k);
                if (!g.has_edge(s, l))
                    throw std::domain_error(std::string(scheme) + ": leaf role not adjacent to its star");
                f[static_cast<std::size_t>(l)] =
                    plan.leaves[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
            }
        }
    }
}

}  // namespace detail

// Cycle, one pendant per cycle vertex, three leaves per pendant. Clump i has
// block {5i-4 .. 5i}; the cycle vertex takes 5i-4 (always 1 mod 5). The
// pendant and star labels split by parity, with a separate case at
// i = 0 mod 6 where the generic even-i star row would collide with the
// pendant; there the stars take {5i-3, 5i-2, 5i} instead.
inline Labeling label_cps1(const Graph& g) {
    RoleIndex idx(g);
    const int n = idx.cycle_length();
    if (n < 3) throw std::domain_error("label_cps1: graph must carry a cycle of length >= 3");
    if (g.vertex_count() != 5 * n)
        throw std::domain_error("label_cps1: graph shape does not match the family");

    Labeling f(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t t = 5 * static_cast<std::uint64_t>(i);
        detail::CpsClumpPlan plan;
        plan.cycle = t - 4;
        if (i % 2 == 1) {
            plan.pendant = t - 2;
            plan.stars = {t - 1, t, t - 3};
        } else if (i % 6 != 0) {
            plan.pendant = t - 3;
            plan.stars = {t - 2, t - 1, t};
        } else {
            plan.pendant = t - 1;
            plan.stars = {t - 3, t - 2, t};
        }
        detail::apply_cps_clump(g, idx, f, i, plan, "label_cps1");
    }
    return f;
}

// Cycle, one pendant per cycle vertex, a two-level ternary tree under each
// pendant. Clump i has block {14i-13 .. 14i}; the cycle vertex takes 14i-13.
// The remaining thirteen labels follow one of two fixed case tables,
// selected by i mod 3.
inline Labeling label_cps2(const Graph& g) {
    RoleIndex idx(g);
    const int n = idx.cycle_length();
    if (n < 3) throw std::domain_error("label_cps2: graph must carry a cycle of length >= 3");
    if (g.vertex_count() != 14 * n)
        throw std::domain_error("label_cps2: graph shape does not match the family");

    Labeling f(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t t = 14 * static_cast<std::uint64_t>(i);
        detail::CpsClumpPlan plan;
        plan.cycle = t - 13;
        if (i % 3 != 0) {
            plan.pendant = t - 12;
            plan.stars = {t - 9, t - 5, t - 3};
            plan.leaves = {{t - 11, t - 10, t - 8},
                           {t - 7, t - 6, t - 4},
                           {t - 2, t - 1, t}};
        } else {
            plan.pendant = t - 10;
            plan.stars = {t - 11, t - 7, t - 1};
            plan.leaves = {{t - 12, t - 9, t - 8},
                           {t - 6, t - 5, t - 4},
                           {t - 3, t - 2, t}};
        }
        detail::apply_cps_clump(g, idx, f, i, plan, "label_cps2");
    }
    return f;
}

// Dispatches to the scheme matching the family. Families without a
// constructive scheme (cycle_path) are rejected; the backtracking solver
// covers those.
inline Labeling label_family(const FamilySpec& spec, const Graph& g) {
    switch (spec.family) {
        case Family::path: return label_path(g);
        case Family::cycle: return label_cycle(g);
        case Family::star: return label_star(g);
        case Family::hairy_cycle:
            if (spec.m == 3) return label_hairy3(g);
            if (spec.m == 5) return label_hairy5(g);
            if (spec.m == 7) return label_hairy7(g);
            throw std::domain_error("hairy cycle: constructive schemes exist for m in {3, 5, 7}");
        case Family::bertrand_weed: return label_bertrand_weed(g);
        case Family::cycle_pendant_star:
            return spec.levels == 1 ? label_cps1(g) : label_cps2(g);
        case Family::cycle_path:
            throw std::domain_error("cycle path: no constructive scheme; use the solver");
    }
    throw std::domain_error("unknown family");
}

struct FamilySweep {
    std::uint64_t instances = 0;
    std::vector<std::int64_t> failed;  // n values whose labeling failed verification
};

// Runs the family's constructive scheme and the verifier for every n in
// [n_lo, n_hi]. Any verification failure lands in `failed`; the expected
// outcome is none, for every supported parameter.
inline FamilySweep check_family(Family family, std::int64_t n_lo, std::int64_t n_hi,
                                std::int64_t m = 0, int levels = 1) {
    if (family == Family::cycle_path)
        throw std::domain_error("cycle path: no constructive scheme; use the solver");
    if (family == Family::hairy_cycle && m != 3 && m != 5 && m != 7)
        throw std::domain_error("hairy cycle: constructive schemes exist for m in {3, 5, 7}");
    FamilySweep sweep;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        FamilySpec spec{family, n, m, levels};
        const Graph g = build(spec);
        const Labeling f = label_family(spec, g);
        ++sweep.instances;
        if (!verify(g, f).valid()) sweep.failed.push_back(n);
    }
    return sweep;
}

}  // namespace primeweave
