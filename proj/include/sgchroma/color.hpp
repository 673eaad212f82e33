#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgchroma/graph.hpp"
#include "sgchroma/rational.hpp"

namespace sgchroma {

// Cover of V by balanced sets; parts may overlap and empty parts are not
// materialized (k is recorded separately).
struct BalancedCover {
    int k = 0;
    std::vector<std::vector<Vertex>> parts;
};

// Assignment from {+-1,...,+-k} with psi(u) != sign(e)*psi(v) on every edge.
struct ZeroFreeColoring {
    int k = 0;
    std::vector<int> psi;
};

// Homomorphism to the k-vertex target with a positive loop everywhere and a
// digon between every pair: after the switching no negative edge stays
// inside a fiber.
struct HomToKtildePlus {
    int k = 0;
    std::vector<int> image;
    Switching switching;
};

struct CircularColoring {
    Rat r;
    std::vector<Rat> phi;  // points on a circle of circumference r
};

struct CircularViolation {
    int edge_id;
    std::string reason;
};

SignedGraph negated(const SignedGraph& g);

// All balanced subsets as bitmasks, increasing numeric order; with
// maximal_only, only inclusion-maximal ones.
std::vector<std::uint32_t> balanced_set_masks(const SignedGraph& g, bool maximal_only,
                                              int bound_all = 16, int bound_maximal = 20);
std::vector<std::vector<Vertex>> enumerate_balanced_sets(const SignedGraph& g, bool maximal_only);

struct ChiB {
    bool infinite = false;  // negative loop present
    int k = 0;
    BalancedCover cover;
};

// Exact balanced chromatic number with witness: branch-and-bound set cover
// over maximal balanced sets (greedy upper bound, digon-clique lower bound).
ChiB chi_b(const SignedGraph& g);

bool cover_valid(const SignedGraph& g, const BalancedCover& c);

// Refines the cover to a partition (lowest part wins) and signs each part
// with its balance switching. The result is a 0-free coloring of (G,-sigma).
ZeroFreeColoring balanced_to_zero_free(const SignedGraph& g, const BalancedCover& c);
bool zero_free_valid(const SignedGraph& h, const ZeroFreeColoring& c);

std::optional<HomToKtildePlus> check_hom_to_ktilde_plus(const SignedGraph& g, int k);
bool hom_valid(const SignedGraph& g, const HomToKtildePlus& h);

// Exact check of both circular edge conditions; reports the first violating
// edge in input order. Requires r >= 2.
std::optional<CircularViolation> verify_circular(const SignedGraph& g, const CircularColoring& c);

// Places part i of a cover at circle points {i, i + k} (per the part's
// balance switching) on a circle of circumference 2k.
CircularColoring cover_to_circular(const SignedGraph& g, const BalancedCover& c);

// Loopless simple unsigned graph with adjacency bitmasks.
struct UnsignedGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    UnsignedGraph() = default;
    explicit UnsignedGraph(int n_) : n(n_), adj(n_, 0) {}
    void add_edge(Vertex u, Vertex v);
    int edge_count() const;
};

// Classical chromatic number; independent oracle for chi_b(tilde(G)).
// Branch-and-bound removing maximal independent sets, memoized on vertex
// masks; shares no code with chi_b.
int chi(const UnsignedGraph& g, int bound = 10);

}  // namespace sgchroma
