#pragma once

#include <string>
#include <vector>

#include "sgchroma/graph.hpp"

namespace sgchroma {

struct QuotientStep {
    std::vector<Vertex> set;  // indices in the then-current graph
    Switching switching;      // applied to the then-current graph first
};

// Result of repeatedly collapsing maximal connected balanced sets until all
// of them are singletons: a graph where adjacent vertices are joined by
// digons, with no negative loop. Both a minor of the input (switch, contract
// positive edges) and a homomorphic image of it.
struct QuotientResult {
    SignedGraph quotient;
    std::vector<int> fiber_map;  // input vertex -> quotient vertex
    std::vector<QuotientStep> trace;
    std::vector<char> loop_flags;  // positive loop per quotient vertex
};

// Deterministic: each step picks the lexicographically smallest maximal
// connected balanced set of size >= 2, switches it all-positive, contracts
// it to its smallest vertex, adds a positive loop if it had any internal
// edge, and deduplicates parallel edges per (pair, sign). Throws on negative
// loops; n capped by the subset enumeration.
QuotientResult balanced_quotient(const SignedGraph& g, int bound = 16);

// Replays the trace from scratch: per-step connectivity and balance, exact
// reconstruction of the quotient and fiber map, the digon and no-negative-
// loop properties, and sign preservation of every input cycle of length
// <= cycle_len under the induced mapping. Empty result means valid.
std::vector<std::string> verify_quotient(const SignedGraph& g, const QuotientResult& q,
                                         int cycle_len = 6);

}  // namespace sgchroma
