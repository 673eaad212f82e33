#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "sgchroma/color.hpp"
#include "sgchroma/harness.hpp"

using namespace sgchroma;

namespace {

// Independent oracle for chi_b: smallest k admitting a partition into
// balanced classes, by direct backtracking over vertex assignments.
bool partition_balanced(const SignedGraph& g, int k, int v, std::vector<int>& color) {
    if (v == g.n) return true;
    for (int c = 0; c < k; ++c) {
        color[v] = c;
        bool ok = true;
        // Only the classes touched so far need re-checking.
        std::vector<Vertex> cls;
        for (int u = 0; u <= v; ++u)
            if (color[u] == c) cls.push_back(u);
        if (!is_balanced(induced(g, cls).graph).balanced()) ok = false;
        if (ok && partition_balanced(g, k, v + 1, color)) return true;
    }
    color[v] = -1;
    return false;
}

int chi_b_oracle(const SignedGraph& g) {
    if (g.n == 0) return 0;
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> color(g.n, -1);
        if (partition_balanced(g, k, 0, color)) return k;
    }
    return g.n;
}

// Independent oracle for chi: k-colorability by backtracking.
bool colorable(const UnsignedGraph& g, int k, int v, std::vector<int>& color) {
    if (v == g.n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if ((g.adj[v] >> u & 1u) && color[u] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, k, v + 1, color)) return true;
        color[v] = -1;
    }
    return false;
}

int chi_oracle(const UnsignedGraph& g) {
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> color(g.n, -1);
        if (colorable(g, k, 0, color)) return k;
    }
    return g.n;
}

UnsignedGraph petersen() {
    UnsignedGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace

TEST_CASE("balanced sets of (G,-) are the bipartite-inducing sets") {
    auto g = minus(complete_graph(4));
    auto sets = balanced_set_masks(g, false);
    // In (K4,-) the balanced sets are exactly those of size <= 2.
    for (std::uint32_t m = 0; m < 16; ++m) {
        bool balanced = std::find(sets.begin(), sets.end(), m) != sets.end();
        CHECK(balanced == (std::popcount(m) <= 2));
    }
}

TEST_CASE("balanced sets of tilde(G) are the independent sets") {
    auto base = cycle_graph(5);
    auto g = tilde(base);
    auto sets = balanced_set_masks(g, false);
    for (std::uint32_t m = 0; m < 32; ++m) {
        bool independent = true;
        for (int v = 0; v < 5 && independent; ++v)
            if ((m >> v & 1u) && (base.adj[v] & m)) independent = false;
        bool listed = std::find(sets.begin(), sets.end(), m) != sets.end();
        CHECK(listed == independent);
    }
}

TEST_CASE("edgeless graph has V as its only maximal balanced set") {
    SignedGraph g(4, {});
    auto sets = balanced_set_masks(g, true);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0] == 0b1111u);
}

TEST_CASE("chi_b exact values") {
    CHECK(chi_b(tilde(complete_graph(4))).k == 4);
    CHECK(chi_b(minus(complete_graph(4))).k == 2);
    CHECK(chi_b(minus(cycle_graph(5))).k == 2);

    SignedGraph negloop(2, {{0, 0, -1}, {0, 1, +1}});
    CHECK(chi_b(negloop).infinite);

    CHECK(chi_b(SignedGraph{}).k == 0);
}

TEST_CASE("chi_b covers validate and match the partition oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = random_signed_graph(1 + int(seed % 6), 0.55, 0.5, seed);
        auto res = chi_b(g);
        CHECK(!res.infinite);
        CHECK(cover_valid(g, res.cover));
        CHECK(res.k == chi_b_oracle(g));
    }
    for (std::uint64_t seed = 60; seed < 70; ++seed) {
        auto g = tilde(cycle_graph(5));
        auto res = chi_b(g);
        CHECK(res.k == 3);
        CHECK(cover_valid(g, res.cover));
    }
}

TEST_CASE("chi_b is monotone under induced subgraphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_signed_graph(5, 0.6, 0.5, seed ^ 0xabcd);
        int k = chi_b(g).k;
        for (std::uint32_t m = 0; m < 32; ++m) {
            std::vector<Vertex> set;
            for (int v = 0; v < 5; ++v)
                if (m >> v & 1u) set.push_back(v);
            CHECK(chi_b(induced(g, set).graph).k <= k);
        }
    }
}

TEST_CASE("zero-free colorings from balanced covers") {
    // Single balanced part.
    SignedGraph tri(3, {{0, 1, +1}, {1, 2, -1}, {0, 2, -1}});
    auto cb = chi_b(tri);
    REQUIRE(cb.k == 1);
    auto zf = balanced_to_zero_free(tri, cb.cover);
    CHECK(zero_free_valid(negated(tri), zf));

    // (K4,-): 2 parts give a 0-free 2-coloring of (K4,+); check every edge.
    auto k4m = minus(complete_graph(4));
    auto cover = chi_b(k4m).cover;
    auto zf4 = balanced_to_zero_free(k4m, cover);
    auto k4p = negated(k4m);
    CHECK(zero_free_valid(k4p, zf4));
    for (const Edge& e : k4p.edges) CHECK(zf4.psi[e.u] != e.sign * zf4.psi[e.v]);

    // Empty graph.
    auto zfe = balanced_to_zero_free(SignedGraph{}, BalancedCover{});
    CHECK(zfe.psi.empty());

    BalancedCover bad{1, {{0}}};  // does not cover all of K4
    CHECK_THROWS_AS(balanced_to_zero_free(k4m, bad), std::invalid_argument);
}

TEST_CASE("zero-free equivalence on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_signed_graph(2 + int(seed % 5), 0.6, 0.5, seed + 5000);
        auto res = chi_b(g);
        auto zf = balanced_to_zero_free(g, res.cover);
        CHECK(zf.k == res.k);
        CHECK(zero_free_valid(negated(g), zf));
    }
}

TEST_CASE("homomorphisms to the k-clique-with-digons target") {
    // Identity on the target itself.
    auto target = tilde(complete_graph(3));
    for (int v = 0; v < 3; ++v) target.edges.push_back({v, v, +1});
    HomToKtildePlus identity{3, {0, 1, 2}, {1, 1, 1}};
    CHECK(hom_valid(target, identity));

    auto k4m = minus(complete_graph(4));
    auto hom = check_hom_to_ktilde_plus(k4m, 2);
    REQUIRE(hom.has_value());
    CHECK(hom_valid(k4m, *hom));
    CHECK(!check_hom_to_ktilde_plus(k4m, 1).has_value());

    SignedGraph negloop(1, {{0, 0, -1}});
    CHECK_THROWS_AS(check_hom_to_ktilde_plus(negloop, 1), std::invalid_argument);
}

TEST_CASE("hom existence tracks chi_b on small graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_signed_graph(1 + int(seed % 5), 0.5, 0.5, seed + 900);
        int k = chi_b(g).k;
        for (int j = 1; j <= 4; ++j)
            CHECK(check_hom_to_ktilde_plus(g, j).has_value() == (j >= k));
    }
}

TEST_CASE("circular coloring verification") {
    SignedGraph neg(2, {{0, 1, -1}});
    CircularColoring c{Rat(2), {Rat(0), Rat(1)}};
    CHECK(!verify_circular(neg, c).has_value());

    SignedGraph pos(2, {{0, 1, +1}});
    auto bad = verify_circular(pos, c);
    REQUIRE(bad.has_value());
    CHECK(bad->edge_id == 0);

    CircularColoring small{Rat(3, 2), {Rat(0), Rat(1)}};
    CHECK_THROWS_AS(verify_circular(neg, small), std::invalid_argument);

    // chi_b witness of (K4,-) lifted to circumference 4.
    auto k4m = minus(complete_graph(4));
    auto lifted = cover_to_circular(k4m, chi_b(k4m).cover);
    CHECK(lifted.r == 4);
    CHECK(!verify_circular(k4m, lifted).has_value());
}

TEST_CASE("lifted circular colorings verify on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_signed_graph(2 + int(seed % 5), 0.6, 0.5, seed + 31);
        auto lifted = cover_to_circular(g, chi_b(g).cover);
        CHECK(!verify_circular(g, lifted).has_value());
    }
}

TEST_CASE("classical chromatic number") {
    CHECK(chi(complete_graph(4)) == 4);
    CHECK(chi(cycle_graph(5)) == 3);
    CHECK(chi(petersen()) == 3);
    CHECK(chi_oracle(petersen()) == 3);
    CHECK(chi(UnsignedGraph(0)) == 0);
    CHECK(chi(path_graph(6)) == 2);
    CHECK_THROWS_AS(chi(UnsignedGraph(11)), std::invalid_argument);
}

TEST_CASE("chi matches the backtracking oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto sg = random_signed_graph(1 + int(seed % 7), 0.5, 0.0, seed + 777);
        UnsignedGraph g(sg.n);
        for (const Edge& e : sg.edges) g.add_edge(e.u, e.v);
        CHECK(chi(g) == chi_oracle(g));
    }
}

TEST_CASE("the two solver identities hold on sampled graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto sg = random_signed_graph(1 + int(seed % 6), 0.5, 0.0, seed + 4040);
        UnsignedGraph g(sg.n);
        for (const Edge& e : sg.edges) g.add_edge(e.u, e.v);
        int chromatic = chi(g);
        CHECK(chi_b(tilde(g)).k == chromatic);
        CHECK(chi_b(minus(g)).k == (chromatic + 1) / 2);
    }
}
