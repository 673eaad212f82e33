#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgchroma/canonical.hpp"
#include "sgchroma/color.hpp"
#include "sgchroma/harness.hpp"
#include "sgchroma/minor.hpp"
#include "sgchroma/quotient.hpp"

using namespace sgchroma;

TEST_CASE("digon-saturated graphs are their own quotient") {
    auto g = tilde(cycle_graph(5));
    auto q = balanced_quotient(g);
    CHECK(q.trace.empty());
    CHECK(q.quotient == g);
    for (int v = 0; v < 5; ++v) CHECK(q.fiber_map[v] == v);
    CHECK(verify_quotient(g, q).empty());
}

TEST_CASE("connected balanced graphs collapse to a looped point") {
    SignedGraph g(4, {{0, 1, +1}, {1, 2, -1}, {2, 3, -1}, {0, 3, +1}});
    REQUIRE(is_balanced(g).balanced());
    auto q = balanced_quotient(g);
    CHECK(q.quotient.n == 1);
    REQUIRE(q.quotient.edge_count() == 1);
    CHECK(q.quotient.edges[0] == Edge{0, 0, +1});
    CHECK(q.loop_flags == std::vector<char>{1});
    CHECK(verify_quotient(g, q).empty());
}

TEST_CASE("the all-negative triangle collapses to a digon pair") {
    auto g = minus(cycle_graph(3));
    auto q = balanced_quotient(g);
    CHECK(verify_quotient(g, q).empty());
    CHECK(q.quotient.n == 2);
    // Switching-isomorphic to the two-vertex digon graph.
    CHECK(canonical_form(q.quotient) == canonical_form(tilde(complete_graph(2))));
}

TEST_CASE("quotients verify and preserve chi_b on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = random_signed_graph(1 + int(seed % 6), 0.55, 0.5, seed + 600);
        auto q = balanced_quotient(g);
        auto bad = verify_quotient(g, q);
        CHECK_MESSAGE(bad.empty(), format_graph(g), bad.empty() ? "" : bad.front());
        // Homomorphic image: chi_b(quotient) <= chi_b(g); colorings pull
        // back, so equality holds and is kept as a regression.
        CHECK(chi_b(q.quotient).k <= chi_b(g).k);
        CHECK(chi_b(q.quotient).k == chi_b(g).k);
    }
}

TEST_CASE("quotient minors mirror clique minors of the underlying graph") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_signed_graph(1 + int(seed % 5), 0.6, 0.5, seed + 7000);
        auto q = balanced_quotient(g);
        UnsignedGraph underlying(q.quotient.n);
        for (const Edge& e : q.quotient.edges)
            if (!e.is_loop() && !(underlying.adj[e.u] >> e.v & 1u))
                underlying.add_edge(e.u, e.v);
        for (int t = 1; t <= 3 && t <= q.quotient.n; ++t)
            CHECK(has_ktilde_minor(q.quotient, t).has_value() ==
                  has_clique_minor(underlying, t));
    }
}

TEST_CASE("quotient rejects negative loops and corrupted traces") {
    SignedGraph negloop(1, {{0, 0, -1}});
    CHECK_THROWS_AS(balanced_quotient(negloop), std::invalid_argument);

    auto g = minus(cycle_graph(4));
    auto q = balanced_quotient(g);
    REQUIRE(verify_quotient(g, q).empty());

    auto tampered = q;
    REQUIRE(!tampered.trace.empty());
    tampered.trace[0].switching.assign(g.n, 1);  // breaks all-positive switch
    CHECK(!verify_quotient(g, tampered).empty());

    auto wrong_quotient = q;
    wrong_quotient.quotient.edges.push_back({0, 0, +1});
    CHECK(!verify_quotient(g, wrong_quotient).empty());

    auto missing_digon = q;
    if (!missing_digon.quotient.edges.empty()) {
        missing_digon.quotient.edges.pop_back();
        CHECK(!verify_quotient(g, missing_digon).empty());
    }
}
