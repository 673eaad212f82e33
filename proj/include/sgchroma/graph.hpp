#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sgchroma {

using Vertex = int;

// Edge of a signed multigraph. Loops (u == v) and parallel edges are allowed.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    int sign = +1;  // +1 or -1

    bool is_loop() const { return u == v; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

// Vertex-indexed signed multigraph. Vertices are 0..n-1. Edge order is
// preserved from construction; no semantic operation depends on it.
struct SignedGraph {
    int n = 0;
    std::vector<Edge> edges;

    SignedGraph() = default;
    SignedGraph(int n_, std::vector<Edge> edges_);

    int edge_count() const { return static_cast<int>(edges.size()); }

    // Degree with loops counting twice.
    int degree(Vertex v) const;

    // Edge ids incident to each vertex, in edge-list order (loops appear once).
    std::vector<std::vector<int>> incidence() const;

    bool has_negative_loop() const;

    bool operator==(const SignedGraph&) const = default;
};

// Per-vertex +1/-1 assignment.
using Switching = std::vector<int>;

// Cycle as a closed walk: vertices[i] -- vertices[i+1 mod len] joined by
// edge edge_ids[i]. Length 1 is a loop, length 2 uses two parallel edges.
struct Cycle {
    std::vector<Vertex> vertices;
    std::vector<int> edge_ids;
};

// A cycle witnessing unbalance (edge-sign product -1).
using NegativeCycle = Cycle;

// Either a switching making every edge positive, or a negative cycle.
struct BalanceResult {
    std::variant<Switching, NegativeCycle> value;

    bool balanced() const { return std::holds_alternative<Switching>(value); }
    const Switching& switching() const { return std::get<Switching>(value); }
    const NegativeCycle& cycle() const { return std::get<NegativeCycle>(value); }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Text format: first non-comment line "n m", then m lines "u v s" with
// 0-based vertices and s in {+,-}. Lines starting with '#' are ignored.
SignedGraph parse_graph(const std::string& text);
SignedGraph load_graph(const std::string& path);
std::string format_graph(const SignedGraph& g);

// Each edge (u,v,s) becomes (u,v, s*sw[u]*sw[v]). Loops are unchanged.
SignedGraph switched(const SignedGraph& g, const Switching& sw);

// Sign of a walk given as a sequence of edge ids; consecutive edges must
// share endpoints so that the sequence threads into a walk.
int walk_sign(const SignedGraph& g, const std::vector<int>& walk);

// Spanning-forest 2-labeling, lowest-index-first BFS; linear time. The
// returned certificate is deterministic.
BalanceResult is_balanced(const SignedGraph& g);

struct InducedSubgraph {
    SignedGraph graph;
    std::vector<Vertex> vertices;  // vertices[new_index] = old index
};

// Subgraph induced by the given vertex set (kept edges have both endpoints
// inside), vertices re-indexed in increasing old-index order.
InducedSubgraph induced(const SignedGraph& g, const std::vector<Vertex>& set);

struct MaxPositiveSwitching {
    Switching switching;
    SignedGraph positive_subgraph;  // spanning subgraph of positive edges
};

// Local search: while some vertex is incident to more negative than positive
// non-loop edges, switch it. Under the result every vertex keeps at least
// half of its non-loop edges positive; the positive subgraph is balanced.
// Throws if g has a negative loop.
MaxPositiveSwitching max_positive_switching(const SignedGraph& g);

struct SimplifyResult {
    SignedGraph graph;
    bool had_negative_loop = false;
};

// Keeps at most one edge per (pair, sign), drops positive loops, keeps one
// negative loop per vertex. Coloring-equivalent to the input.
SimplifyResult simplify(const SignedGraph& g);

// Connected component id per vertex (loops ignored), lowest-index-first.
std::vector<int> components(const SignedGraph& g);
bool is_connected_set(const SignedGraph& g, const std::vector<Vertex>& set);

// All cycles of length <= max_len, each listed once (canonical start and
// direction).
std::vector<Cycle> enumerate_cycles(const SignedGraph& g, int max_len);

}  // namespace sgchroma
