#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgchroma/color.hpp"
#include "sgchroma/graph.hpp"

namespace sgchroma {

// Witness that a clique pattern is reachable by deletions, switchings and
// positive-edge contractions. Each branch set is connected and carries a
// switching under which its positive edges alone already span it (such a
// switching exists for every connected set: switch any spanning tree
// positive; leftover negative edges inside the set contract away as deleted
// negative loops). Cross-edge signs are taken after the per-set switchings
// and the per-set flips.
struct MinorCertificate {
    int t = 0;
    bool odd = false;  // false: both signs required per pair; true: a negative edge
    std::vector<std::vector<Vertex>> branch_sets;
    std::vector<Switching> internal_switchings;  // aligned with sorted branch set
    std::vector<int> flips;

    struct CrossEdge {
        int edge_id;
        int sign;  // after switching and flips
    };
    // Pairs (i,j), i<j, in lex order: entry j*(j-1)/2+i.
    std::vector<std::vector<CrossEdge>> cross_edges;
};

struct EvenOddCertificate {
    int t = 0;
    std::vector<int> coloring;  // 0/1 per vertex
    std::vector<std::vector<std::pair<Vertex, Vertex>>> tree_edges;
    std::vector<std::vector<Vertex>> tree_vertices;
};

struct PathWitness {
    std::vector<Vertex> vertices;  // endpoints included
    std::vector<int> edge_ids;
    int sign = +1;
};

struct SubdivisionCertificate {
    int t = 0;
    std::vector<Vertex> branch_vertices;
    // Pairs (i,j), i<j, in lex order; two internally disjoint paths of
    // opposite signs per pair.
    std::vector<std::pair<PathWitness, PathWitness>> pair_paths;
};

struct DichotomyResult {
    enum class Kind { Paths, HittingSet, Defect };
    Kind kind = Kind::Defect;
    int k = 0;
    std::vector<Vertex> h_set;
    std::vector<PathWitness> paths;
    std::vector<Vertex> hitting_set;
};

// Exhaustive searches; branch sets are enumerated in lexicographic order of
// their sorted vertex lists, so the first certificate found is canonical.
std::optional<MinorCertificate> has_ktilde_minor(const SignedGraph& g, int t, int bound = 9);
std::optional<MinorCertificate> has_odd_minor(const SignedGraph& g, int t, int bound = 9);
std::optional<EvenOddCertificate> has_even_odd_minor(const UnsignedGraph& g, int t, int bound = 9);
std::optional<SubdivisionCertificate> has_ktilde_subdivision(const SignedGraph& g, int t,
                                                             int bound = 9, int t_bound = 4);

// Unsigned clique minor at desk scale (disjoint connected branch sets,
// pairwise joined by an edge).
bool has_clique_minor(const UnsignedGraph& g, int t, int bound = 9);

// The k disjoint negative paths with ends in H, or a hitting set of at most
// 2k-2 vertices meeting every such path. H must be spanned and connected by
// its internal positive edges (switch first); negative edges inside H count
// as H-paths of length one. Kind::Defect means both searches failed, which
// the underlying dichotomy rules out.
DichotomyResult negative_path_dichotomy(const SignedGraph& g, const std::vector<Vertex>& h_set,
                                        int k, int n_bound = 10, int k_bound = 3);

// Rebuilds a minor witness from a subdivision witness: interiors of each
// pair's first path join the lower branch set, the second path's the upper.
MinorCertificate subdivision_to_minor(const SignedGraph& g, const SubdivisionCertificate& cert);

// From-scratch certificate checks, sharing no code with the searchers.
// Empty result means valid.
std::vector<std::string> verify_minor(const SignedGraph& g, const MinorCertificate& cert);
std::vector<std::string> verify_even_odd(const UnsignedGraph& g, const EvenOddCertificate& cert);
std::vector<std::string> verify_subdivision(const SignedGraph& g,
                                            const SubdivisionCertificate& cert);
std::vector<std::string> verify_dichotomy(const SignedGraph& g, const DichotomyResult& res);

}  // namespace sgchroma
