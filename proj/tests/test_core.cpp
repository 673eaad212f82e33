#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sgchroma/canonical.hpp"
#include "sgchroma/color.hpp"
#include "sgchroma/graph.hpp"

using namespace sgchroma;

namespace {

SignedGraph all_negative_triangle() {
    return SignedGraph(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}});
}

SignedGraph digon2() { return SignedGraph(2, {{0, 1, +1}, {0, 1, -1}}); }

SignedGraph k4_minus() {
    std::vector<Edge> es;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) es.push_back({u, v, -1});
    return SignedGraph(4, es);
}

SignedGraph random_signed(std::mt19937& rng, int n, double p, double neg) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (std::uniform_real_distribution<>(0, 1)(rng) < p)
                es.push_back({u, v, std::uniform_real_distribution<>(0, 1)(rng) < neg ? -1 : +1});
        }
    return SignedGraph(n, es);
}

Switching random_switching(std::mt19937& rng, int n) {
    Switching s(n);
    for (int& x : s) x = rng() % 2 ? 1 : -1;
    return s;
}

SignedGraph permuted(const SignedGraph& g, const std::vector<int>& perm) {
    SignedGraph out;
    out.n = g.n;
    for (const Edge& e : g.edges) out.edges.push_back({perm[e.u], perm[e.v], e.sign});
    return out;
}

int cycle_sign(const SignedGraph& g, const Cycle& c) {
    int s = 1;
    for (int id : c.edge_ids) s *= g.edges[id].sign;
    return s;
}

}  // namespace

TEST_CASE("parse round trips the documented format") {
    auto g = parse_graph("3 3\n0 1 +\n1 2 +\n0 2 -\n");
    CHECK(g.n == 3);
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges[2] == Edge{0, 2, -1});

    auto loop = parse_graph("1 1\n0 0 -\n");
    CHECK(loop.has_negative_loop());

    auto dig = parse_graph("# a digon\n2 2\n0 1 +\n0 1 -\n");
    CHECK(dig.edge_count() == 2);

    CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("parse rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_graph("2 1\n0 3 +\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("nonsense\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1 +\n"), ParseError);
    try {
        parse_graph("2 1\n0 1 *\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("switching flips incident edges and fixes loops") {
    auto g = all_negative_triangle();
    auto h = switched(g, {-1, 1, 1});
    CHECK(h.edges[0].sign == +1);  // 0-1 flipped
    CHECK(h.edges[1].sign == -1);  // 1-2 untouched
    CHECK(h.edges[2].sign == +1);  // 0-2 flipped

    CHECK(switched(g, {1, 1, 1}) == g);

    SignedGraph loop(1, {{0, 0, -1}});
    CHECK(switched(loop, {-1}) == loop);

    CHECK_THROWS_AS(switched(g, {1, 1}), std::invalid_argument);
}

TEST_CASE("walk signs") {
    auto g = all_negative_triangle();
    CHECK(walk_sign(g, {0, 1, 2}) == -1);

    SignedGraph one(2, {{0, 1, +1}});
    CHECK(walk_sign(one, {0, 0}) == +1);

    CHECK(walk_sign(digon2(), {0, 1}) == -1);

    SignedGraph disc(4, {{0, 1, +1}, {2, 3, +1}});
    CHECK_THROWS_AS(walk_sign(disc, {0, 1}), std::invalid_argument);
}

TEST_CASE("balance detection returns a verifying certificate") {
    SignedGraph tri(3, {{0, 1, +1}, {1, 2, -1}, {0, 2, -1}});
    auto res = is_balanced(tri);
    REQUIRE(res.balanced());
    auto sw = res.switching();
    for (const Edge& e : switched(tri, sw).edges) CHECK(e.sign == +1);
    // The two negative edges share vertex 2; a lone switch there suffices.
    CHECK(sw == Switching{1, 1, -1});

    auto neg = is_balanced(all_negative_triangle());
    REQUIRE(!neg.balanced());
    CHECK(neg.cycle().vertices.size() == 3);
    CHECK(walk_sign(all_negative_triangle(), neg.cycle().edge_ids) == -1);

    auto dig = is_balanced(digon2());
    REQUIRE(!dig.balanced());
    CHECK(dig.cycle().vertices.size() == 2);

    SignedGraph negloop(1, {{0, 0, -1}});
    auto nl = is_balanced(negloop);
    REQUIRE(!nl.balanced());
    CHECK(nl.cycle().vertices.size() == 1);
}

TEST_CASE("balance certificates verify on random graphs") {
    std::mt19937 rng(7);
    for (int it = 0; it < 300; ++it) {
        auto g = random_signed(rng, 1 + int(rng() % 8), 0.5, 0.4);
        auto res = is_balanced(g);
        if (res.balanced()) {
            for (const Edge& e : switched(g, res.switching()).edges) CHECK(e.sign == +1);
        } else {
            CHECK(walk_sign(g, res.cycle().edge_ids) == -1);
        }
    }
}

TEST_CASE("induced subgraphs") {
    auto g = digon2();
    std::vector<Vertex> all{0, 1};
    auto sub = induced(g, all);
    CHECK(sub.graph == g);

    auto empty = induced(g, {});
    CHECK(empty.graph.n == 0);
    CHECK(empty.graph.edge_count() == 0);

    auto one = induced(g, {0});
    CHECK(one.graph.n == 1);
    CHECK(one.graph.edge_count() == 0);
}

TEST_CASE("max positive switching meets the half-degree bound") {
    // Oracle: best over all 2^4 switchings of (K4,-).
    auto g = k4_minus();
    int best_edges = 0, best_mindeg = 0;
    for (int m = 0; m < 16; ++m) {
        Switching s(4);
        for (int v = 0; v < 4; ++v) s[v] = m >> v & 1 ? -1 : 1;
        auto h = switched(g, s);
        int pos = 0;
        std::vector<int> deg(4, 0);
        for (const Edge& e : h.edges)
            if (e.sign > 0) {
                ++pos;
                deg[e.u]++;
                deg[e.v]++;
            }
        if (pos > best_edges) {
            best_edges = pos;
            best_mindeg = *std::min_element(deg.begin(), deg.end());
        }
    }
    CHECK(best_edges == 4);
    CHECK(best_mindeg == 2);

    auto [sw, h] = max_positive_switching(g);
    CHECK(h.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(h.degree(v) >= 2);
    CHECK(is_balanced(h).balanced());

    SignedGraph tri(3, {{0, 1, +1}, {1, 2, -1}, {0, 2, -1}});
    auto bal = max_positive_switching(tri);
    CHECK(bal.positive_subgraph.edge_count() == 3);

    SignedGraph one(2, {{0, 1, -1}});
    auto res = max_positive_switching(one);
    CHECK(res.positive_subgraph.edge_count() == 1);

    SignedGraph negloop(1, {{0, 0, -1}});
    CHECK_THROWS_AS(max_positive_switching(negloop), std::invalid_argument);
}

TEST_CASE("max positive switching degree bound on random graphs") {
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
        auto g = random_signed(rng, 2 + int(rng() % 10), 0.6, 0.5);
        auto [sw, h] = max_positive_switching(g);
        for (Vertex v = 0; v < g.n; ++v) CHECK(2 * h.degree(v) >= g.degree(v));
        auto bal = is_balanced(h);
        REQUIRE(bal.balanced());
        CHECK(bal.switching() == Switching(h.n, 1));
    }
}

TEST_CASE("simplify removes redundancy only") {
    SignedGraph par(2, {{0, 1, +1}, {0, 1, +1}});
    CHECK(simplify(par).graph.edge_count() == 1);

    CHECK(simplify(digon2()).graph.edge_count() == 2);

    SignedGraph posloop(1, {{0, 0, +1}});
    CHECK(simplify(posloop).graph.edge_count() == 0);
    CHECK(!simplify(posloop).had_negative_loop);

    SignedGraph negloop(1, {{0, 0, -1}, {0, 0, -1}});
    auto s = simplify(negloop);
    CHECK(s.had_negative_loop);
    CHECK(s.graph.edge_count() == 1);
}

TEST_CASE("simplify preserves chi_b on small random graphs") {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        int n = 1 + int(rng() % 5);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v) {
                int copies = int(rng() % 3);
                for (int c = 0; c < copies; ++c) {
                    int sign = rng() % 2 ? 1 : -1;
                    if (u == v && sign == -1) sign = 1;  // keep chi_b finite
                    es.push_back({u, v, sign});
                }
            }
        SignedGraph g(n, es);
        CHECK(chi_b(g).k == chi_b(simplify(g).graph).k);
    }
}

TEST_CASE("cycle signs are switching invariant (exhaustive cycles, n<=6)") {
    std::mt19937 rng(5);
    for (int it = 0; it < 50; ++it) {
        auto g = random_signed(rng, 3 + int(rng() % 4), 0.6, 0.5);
        auto s = random_switching(rng, g.n);
        auto h = switched(g, s);
        auto cycles = enumerate_cycles(g, 6);
        for (const auto& c : cycles) CHECK(cycle_sign(g, c) == cycle_sign(h, c));
    }
}

TEST_CASE("canonical form separates and identifies switching classes") {
    // Negative triangle vs a balanced signing of the triangle (two negative
    // edges, cycle sign +1).
    SignedGraph balanced_tri(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, +1}});
    CHECK(canonical_form(all_negative_triangle()) != canonical_form(balanced_tri));

    std::mt19937 rng(99);
    for (int it = 0; it < 120; ++it) {
        auto g = random_signed(rng, 1 + int(rng() % 6), 0.5, 0.5);
        CHECK(canonical_form(switched(g, random_switching(rng, g.n))) == canonical_form(g));
        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permuted(g, perm)) == canonical_form(g));
        CHECK(canonical_form(switched(permuted(g, perm), random_switching(rng, g.n))) ==
              canonical_form(g));
    }
}

TEST_CASE("canonical form round trips through its representative") {
    std::mt19937 rng(123);
    for (int it = 0; it < 80; ++it) {
        auto g = random_signed(rng, 1 + int(rng() % 6), 0.6, 0.5);
        auto form = canonical_form(g);
        auto rep = canonical_representative(form);
        CHECK(canonical_form(rep) == form);
    }
    SignedGraph big(8, {});
    CHECK_THROWS_AS(canonical_form(big), std::invalid_argument);
}

TEST_CASE("canonical form distinguishes non-equivalent graphs (brute check n<=4)") {
    // Exhaustive cross-check at n = 3: forms agree iff some permutation x
    // switching maps one graph to the other.
    std::vector<SignedGraph> graphs;
    for (int st = 0; st < 27; ++st) {
        int s = st;
        std::vector<Edge> es;
        int pair = 0;
        for (int u = 0; u < 3; ++u)
            for (int v = u + 1; v < 3; ++v, ++pair) {
                int state = (s / (pair == 0 ? 1 : pair == 1 ? 3 : 9)) % 3;
                if (state == 1) es.push_back({u, v, +1});
                if (state == 2) es.push_back({u, v, -1});
            }
        graphs.push_back(SignedGraph(3, es));
    }
    auto equivalent = [&](const SignedGraph& a, const SignedGraph& b) {
        std::vector<int> perm{0, 1, 2};
        std::sort(perm.begin(), perm.end());
        do {
            for (int m = 0; m < 8; ++m) {
                Switching sw(3);
                for (int v = 0; v < 3; ++v) sw[v] = m >> v & 1 ? -1 : 1;
                auto img = switched(permuted(a, perm), sw);
                auto key = [](const SignedGraph& g) {
                    std::vector<std::tuple<int, int, int>> t;
                    for (const Edge& e : g.edges)
                        t.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.sign});
                    std::sort(t.begin(), t.end());
                    return t;
                };
                if (key(img) == key(b)) return true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i; j < graphs.size(); ++j) {
            bool same_form = canonical_form(graphs[i]) == canonical_form(graphs[j]);
            CHECK(same_form == equivalent(graphs[i], graphs[j]));
        }
}
