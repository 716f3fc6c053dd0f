#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "primeweave/labelings.hpp"

using namespace primeweave;

namespace {

std::uint64_t label_of(const Graph& g, const Labeling& f, VertexRole want) {
    const auto& rs = g.roles();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rs[static_cast<std::size_t>(v)] == want) return f[static_cast<std::size_t>(v)];
    FAIL("role not found");
    return 0;
}

std::vector<std::uint64_t> cycle_labels(const Graph& g, const Labeling& f) {
    RoleIndex idx(g);
    std::vector<std::uint64_t> out;
    for (int i = 1; i <= idx.cycle_length(); ++i)
        out.push_back(f[static_cast<std::size_t>(idx.vertex(RoleKind::cycle, i))]);
    return out;
}

// labels of clump i grouped by role kind, as sets
std::set<std::uint64_t> clump_labels(const Graph& g, const Labeling& f, int i,
                                     RoleKind kind) {
    const auto& rs = g.roles();
    std::set<std::uint64_t> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rs[static_cast<std::size_t>(v)].kind == kind && rs[static_cast<std::size_t>(v)].i == i)
            out.insert(f[static_cast<std::size_t>(v)]);
    return out;
}

std::set<std::uint64_t> whole_clump(const Graph& g, const Labeling& f, int i) {
    const auto& rs = g.roles();
    std::set<std::uint64_t> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rs[static_cast<std::size_t>(v)].i == i) out.insert(f[static_cast<std::size_t>(v)]);
    return out;
}

std::set<std::uint64_t> block(std::uint64_t lo, std::uint64_t hi) {
    std::set<std::uint64_t> out;
    for (std::uint64_t x = lo; x <= hi; ++x) out.insert(x);
    return out;
}

}  // namespace

TEST_CASE("verify accepts the 3-hairy 4-cycle reference labeling") {
    const Graph g = build(FamilySpec::hairy_cycle(4, 3));
    const Labeling fig{1, 2, 3, 4, 7, 5, 6, 8, 11, 9, 10, 12, 15, 13, 14, 16};
    const VerifyReport rep = verify(g, fig);
    CHECK(rep.bijection_ok);
    CHECK(rep.violations.empty());
    CHECK(rep.valid());
}

TEST_CASE("verify flags bijection breaks and shared-factor edges") {
    const Graph p3 = build(FamilySpec::path(3));
    const VerifyReport bad_bij = verify(p3, Labeling{1, 2, 4});
    CHECK_FALSE(bad_bij.bijection_ok);

    const Graph c4 = build(FamilySpec::cycle(4));
    const VerifyReport rep = verify(c4, Labeling{1, 2, 4, 3});
    CHECK(rep.bijection_ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0] == Violation{1, 2, 2, 4, 2});
    CHECK_FALSE(rep.valid());

    CHECK_THROWS_AS(verify(c4, Labeling{1, 2, 3}), std::domain_error);
}

TEST_CASE("path, cycle and star schemes") {
    const Graph p8 = build(FamilySpec::path(8));
    CHECK(label_path(p8) == Labeling{1, 2, 3, 4, 5, 6, 7, 8});

    const Graph c12 = build(FamilySpec::cycle(12));
    const Labeling fc = label_cycle(c12);
    CHECK(fc == Labeling{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    // 1 and n adjacent around the ring
    int v1 = -1, vn = -1;
    for (int v = 0; v < 12; ++v) {
        if (fc[static_cast<std::size_t>(v)] == 1) v1 = v;
        if (fc[static_cast<std::size_t>(v)] == 12) vn = v;
    }
    CHECK(c12.has_edge(v1, vn));

    const Graph s5 = build(FamilySpec::star(5));
    CHECK(label_star(s5) == Labeling{1, 2, 3, 4, 5, 6});

    for (int n = 2; n <= 60; ++n) CHECK(verify(build(FamilySpec::path(n)), label_path(build(FamilySpec::path(n)))).valid());
    for (int n = 3; n <= 60; ++n) CHECK(verify(build(FamilySpec::cycle(n)), label_cycle(build(FamilySpec::cycle(n)))).valid());
    for (int n = 1; n <= 60; ++n) CHECK(verify(build(FamilySpec::star(n)), label_star(build(FamilySpec::star(n)))).valid());

    CHECK_THROWS_AS(label_path(build(FamilySpec::cycle(4))), std::domain_error);
    CHECK_THROWS_AS(label_cycle(build(FamilySpec::path(4))), std::domain_error);
    CHECK_THROWS_AS(label_star(build(FamilySpec::path(4))), std::domain_error);
}

TEST_CASE("3-hairy scheme reproduces its reference values") {
    const Graph g4 = build(FamilySpec::hairy_cycle(4, 3));
    CHECK(label_hairy3(g4) ==
          Labeling{1, 2, 3, 4, 7, 5, 6, 8, 11, 9, 10, 12, 15, 13, 14, 16});

    const Graph g3 = build(FamilySpec::hairy_cycle(3, 3));
    CHECK(cycle_labels(g3, label_hairy3(g3)) == std::vector<std::uint64_t>{1, 7, 11});

    const Graph g100 = build(FamilySpec::hairy_cycle(100, 3));
    CHECK(verify(g100, label_hairy3(g100)).valid());
}

TEST_CASE("5-hairy scheme reproduces its reference values") {
    const Graph g4 = build(FamilySpec::hairy_cycle(4, 5));
    const Labeling f = label_hairy5(g4);
    CHECK(cycle_labels(g4, f) == std::vector<std::uint64_t>{1, 11, 17, 23});
    CHECK(clump_labels(g4, f, 2, RoleKind::pendant) ==
          std::set<std::uint64_t>{7, 8, 9, 10, 12});
    CHECK(verify(g4, f).valid());

    const Graph g3 = build(FamilySpec::hairy_cycle(3, 5));
    CHECK(cycle_labels(g3, label_hairy5(g3)) == std::vector<std::uint64_t>{1, 11, 17});

    const Graph g200 = build(FamilySpec::hairy_cycle(200, 5));
    CHECK(verify(g200, label_hairy5(g200)).valid());
}

TEST_CASE("7-hairy scheme picks residue-driven cycle labels") {
    const Graph g3 = build(FamilySpec::hairy_cycle(3, 7));
    CHECK(cycle_labels(g3, label_hairy7(g3)) == std::vector<std::uint64_t>{1, 11, 19});
    CHECK(verify(g3, label_hairy7(g3)).valid());

    CHECK(hairy7_cycle_value(5) == 37);  // i = 5 -> 8i-3
    CHECK(37 % 3 != 0);
    CHECK(37 % 5 != 0);

    const Graph g60 = build(FamilySpec::hairy_cycle(60, 7));  // covers all 15 residues
    CHECK(verify(g60, label_hairy7(g60)).valid());
}

TEST_CASE("7-hairy cycle labels avoid 2, 3 and 5", "[property]") {
    const Graph g = build(FamilySpec::hairy_cycle(200, 7));
    const Labeling f = label_hairy7(g);
    RoleIndex idx(g);
    for (int i = 2; i <= 200; ++i) {
        const std::uint64_t c = f[static_cast<std::size_t>(idx.vertex(RoleKind::cycle, i))];
        REQUIRE(c % 2 != 0);
        REQUIRE(c % 3 != 0);
        REQUIRE(c % 5 != 0);
    }
}

TEST_CASE("7-hairy pendant labels can be permuted freely", "[property]") {
    std::mt19937_64 rng(0x5eed301);
    std::uniform_int_distribution<int> pick_n(3, 40);
    for (int it = 0; it < 1000; ++it) {
        const int n = pick_n(rng);
        const Graph g = build(FamilySpec::hairy_cycle(n, 7));
        Labeling f = label_hairy7(g);
        RoleIndex idx(g);
        std::uniform_int_distribution<int> pick_i(1, n);
        const int i = pick_i(rng);
        std::vector<int> pendant_vertices;
        for (int j = 1; j <= 7; ++j)
            pendant_vertices.push_back(idx.vertex(RoleKind::pendant, i, j));
        std::vector<std::uint64_t> vals;
        for (int v : pendant_vertices) vals.push_back(f[static_cast<std::size_t>(v)]);
        std::shuffle(vals.begin(), vals.end(), rng);
        for (std::size_t t = 0; t < vals.size(); ++t)
            f[static_cast<std::size_t>(pendant_vertices[t])] = vals[t];
        REQUIRE(verify(g, f).valid());
    }
}

TEST_CASE("bertrand weed scheme reproduces its reference values") {
    const Graph g3 = build(FamilySpec::bertrand_weed(3));
    const Labeling f = label_bertrand_weed(g3);
    CHECK(cycle_labels(g3, f) == std::vector<std::uint64_t>{1, 5, 13});
    CHECK(clump_labels(g3, f, 3, RoleKind::pendant) ==
          std::set<std::uint64_t>{7, 8, 9, 10, 11, 12, 14});
    CHECK(verify(g3, f).valid());

    const Graph g8 = build(FamilySpec::bertrand_weed(8));
    CHECK(verify(g8, label_bertrand_weed(g8)).valid());
}

TEST_CASE("bertrand weed cycle labels are primes dominating their block", "[property]") {
    for (int n = 3; n <= 12; ++n) {
        const Graph g = build(FamilySpec::bertrand_weed(n));
        const Labeling f = label_bertrand_weed(g);
        RoleIndex idx(g);
        for (int i = 2; i <= n; ++i) {
            const std::uint64_t c = f[static_cast<std::size_t>(idx.vertex(RoleKind::cycle, i))];
            const std::uint64_t block_max = (std::uint64_t{1} << (i + 1)) - 2;
            REQUIRE(is_prime(c));
            REQUIRE(2 * c > block_max);
        }
    }
}

TEST_CASE("one-level ternary scheme reproduces its reference values") {
    const Graph g3 = build(FamilySpec::cycle_pendant_star(3, 1));
    const Labeling f = label_cps1(g3);
    CHECK(label_of(g3, f, cycle_role(1)) == 1);
    CHECK(label_of(g3, f, pendant_role(1, 1)) == 3);
    CHECK(clump_labels(g3, f, 1, RoleKind::star) == std::set<std::uint64_t>{2, 4, 5});
    CHECK(label_of(g3, f, cycle_role(2)) == 6);
    CHECK(label_of(g3, f, pendant_role(2, 1)) == 7);
    CHECK(clump_labels(g3, f, 2, RoleKind::star) == std::set<std::uint64_t>{8, 9, 10});
    CHECK(label_of(g3, f, cycle_role(3)) == 11);
    CHECK(label_of(g3, f, pendant_role(3, 1)) == 13);
    CHECK(clump_labels(g3, f, 3, RoleKind::star) == std::set<std::uint64_t>{12, 14, 15});
    CHECK(verify(g3, f).valid());
}

TEST_CASE("one-level ternary scheme: the i = 0 mod 6 clump") {
    const Graph g6 = build(FamilySpec::cycle_pendant_star(6, 1));
    const Labeling f = label_cps1(g6);
    CHECK(label_of(g6, f, cycle_role(6)) == 26);
    CHECK(label_of(g6, f, pendant_role(6, 1)) == 29);
    CHECK(clump_labels(g6, f, 6, RoleKind::star) == std::set<std::uint64_t>{27, 28, 30});
    CHECK(gcd(29, 27) == 1);
    CHECK(gcd(29, 28) == 1);
    CHECK(gcd(29, 30) == 1);
    CHECK(verify(g6, f).valid());

    const Graph g36 = build(FamilySpec::cycle_pendant_star(36, 1));
    CHECK(verify(g36, label_cps1(g36)).valid());
}

TEST_CASE("one-level ternary cycle labels are 1 mod 5", "[property]") {
    const Graph g = build(FamilySpec::cycle_pendant_star(200, 1));
    const Labeling f = label_cps1(g);
    RoleIndex idx(g);
    for (int i = 1; i <= 200; ++i)
        REQUIRE(f[static_cast<std::size_t>(idx.vertex(RoleKind::cycle, i))] % 5 == 1);
}

TEST_CASE("two-level ternary scheme reproduces its reference values") {
    const Graph g4 = build(FamilySpec::cycle_pendant_star(4, 2));
    const Labeling f = label_cps2(g4);
    CHECK(label_of(g4, f, cycle_role(1)) == 1);
    CHECK(label_of(g4, f, pendant_role(1, 1)) == 2);
    CHECK(clump_labels(g4, f, 1, RoleKind::star) == std::set<std::uint64_t>{5, 9, 11});

    CHECK(label_of(g4, f, cycle_role(3)) == 29);
    CHECK(label_of(g4, f, pendant_role(3, 1)) == 32);
    CHECK(clump_labels(g4, f, 3, RoleKind::star) == std::set<std::uint64_t>{31, 35, 41});
    std::set<std::uint64_t> leaves_under_s1;
    for (int k = 1; k <= 3; ++k)
        leaves_under_s1.insert(label_of(g4, f, leaf_role(3, 1, k)));
    CHECK(leaves_under_s1 == std::set<std::uint64_t>{30, 33, 34});
    CHECK(verify(g4, f).valid());

    const Graph g30 = build(FamilySpec::cycle_pendant_star(30, 2));
    CHECK(verify(g30, label_cps2(g30)).valid());
}

TEST_CASE("clump labels partition into consecutive blocks", "[property]") {
    for (int n : {3, 7, 12, 30}) {
        for (std::int64_t m : {3, 5, 7}) {
            const Graph g = build(FamilySpec::hairy_cycle(n, m));
            const Labeling f = label_family(FamilySpec::hairy_cycle(n, m), g);
            const std::uint64_t w = static_cast<std::uint64_t>(m) + 1;
            for (int i = 1; i <= n; ++i)
                REQUIRE(whole_clump(g, f, i) == block(w * (i - 1) + 1, w * i));
        }
        {
            const Graph g = build(FamilySpec::bertrand_weed(std::min(n, 10)));
            const Labeling f = label_bertrand_weed(g);
            for (int i = 1; i <= std::min(n, 10); ++i)
                REQUIRE(whole_clump(g, f, i) ==
                        block((std::uint64_t{1} << i) - 1, (std::uint64_t{1} << (i + 1)) - 2));
        }
        {
            const Graph g = build(FamilySpec::cycle_pendant_star(n, 1));
            const Labeling f = label_cps1(g);
            for (int i = 1; i <= n; ++i)
                REQUIRE(whole_clump(g, f, i) == block(5 * i - 4, 5 * i));
        }
        {
            const Graph g = build(FamilySpec::cycle_pendant_star(n, 2));
            const Labeling f = label_cps2(g);
            for (int i = 1; i <= n; ++i)
                REQUIRE(whole_clump(g, f, i) == block(14 * i - 13, 14 * i));
        }
    }
}

TEST_CASE("schemes demand the right graph shape") {
    Graph bare(16);  // hairy(4,3)-sized but role-less
    CHECK_THROWS_AS(label_hairy3(bare), std::domain_error);
    CHECK_THROWS_AS(label_hairy3(build(FamilySpec::hairy_cycle(3, 5))), std::domain_error);
    CHECK_THROWS_AS(label_hairy5(build(FamilySpec::hairy_cycle(3, 3))), std::domain_error);
    CHECK_THROWS_AS(label_cps1(build(FamilySpec::cycle_pendant_star(3, 2))),
                    std::domain_error);
    CHECK_THROWS_AS(label_cps2(build(FamilySpec::cycle_pendant_star(3, 1))),
                    std::domain_error);
    CHECK_THROWS_AS(label_bertrand_weed(build(FamilySpec::hairy_cycle(3, 3))),
                    std::domain_error);
    CHECK_THROWS_AS(label_family(FamilySpec::hairy_cycle(3, 9),
                                 build(FamilySpec::hairy_cycle(3, 9))),
                    std::domain_error);
    CHECK_THROWS_AS(label_family(FamilySpec::cycle_path(3, 2),
                                 build(FamilySpec::cycle_path(3, 2))),
                    std::domain_error);
}

TEST_CASE("check_family sweeps come back clean") {
    const FamilySweep h3 = check_family(Family::hairy_cycle, 3, 60, 3);
    CHECK(h3.instances == 58);
    CHECK(h3.failed.empty());

    const FamilySweep bw = check_family(Family::bertrand_weed, 3, 10);
    CHECK(bw.instances == 8);
    CHECK(bw.failed.empty());

    const FamilySweep cps2 = check_family(Family::cycle_pendant_star, 3, 40, 0, 2);
    CHECK(cps2.instances == 38);
    CHECK(cps2.failed.empty());

    const FamilySweep paths = check_family(Family::path, 2, 80);
    CHECK(paths.instances == 79);
    CHECK(paths.failed.empty());

    CHECK_THROWS_AS(check_family(Family::cycle_path, 3, 5, 2), std::domain_error);
    CHECK_THROWS_AS(check_family(Family::hairy_cycle, 3, 5, 9), std::domain_error);
}

TEST_CASE("every scheme output is a clean bijection over its range", "[property]") {
    std::mt19937_64 rng(0x5eed302);
    std::uniform_int_distribution<int> pick_n(3, 80);
    for (int it = 0; it < 300; ++it) {
        const int n = pick_n(rng);
        for (std::int64_t m : {3, 5, 7}) {
            const FamilySpec spec = FamilySpec::hairy_cycle(n, m);
            const Graph g = build(spec);
            REQUIRE(verify(g, label_family(spec, g)).valid());
        }
        for (int levels : {1, 2}) {
            const FamilySpec spec = FamilySpec::cycle_pendant_star(n, levels);
            const Graph g = build(spec);
            REQUIRE(verify(g, label_family(spec, g)).valid());
        }
    }
}
