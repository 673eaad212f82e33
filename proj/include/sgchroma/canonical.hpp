#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgchroma/graph.hpp"

namespace sgchroma {

// Canonical encoding of a signed multigraph, minimal over all vertex
// permutations composed with switchings. Two graphs have equal canonical
// forms iff they are switching-isomorphic. Format version "SGC1" (see
// README); opaque to callers, stable across runs.
//
// Brute force over vertex orderings with prefix pruning; the switching part
// of each ordering is minimized exactly as a GF(2) coset problem over the
// vertex-cut space. Refuses n > cap.
std::string canonical_form(const SignedGraph& g, int cap = 7);

// Rebuilds the canonical representative encoded by a form string.
SignedGraph canonical_representative(const std::string& form);

// Loopless simple unsigned graphs as adjacency bitmasks over pairs
// (0,1),(0,2),(1,2),(0,3),... i.e. pair (i,j), i<j, is bit j*(j-1)/2 + i.
using AdjMask = std::uint32_t;

int pair_index(int i, int j);
AdjMask unsigned_canonical(int n, AdjMask adj);

// The signed graph on the masked unsigned graph with every edge negative.
SignedGraph mask_to_all_negative(int n, AdjMask adj);

}  // namespace sgchroma
