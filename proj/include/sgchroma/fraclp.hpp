#pragma once

#include <cstdint>
#include <vector>

#include "sgchroma/color.hpp"
#include "sgchroma/graph.hpp"
#include "sgchroma/rational.hpp"

namespace sgchroma {

// Exact primal/dual pair for the covering LP
//   min sum w_S   s.t.  sum_{S : v in S} w_S >= 1 for all v,  w >= 0.
struct CoveringSolution {
    Rat value;
    std::vector<Rat> weights;  // per column, covering side
    std::vector<Rat> dual;     // per vertex, packing side; equal objective
};

// Dense rational simplex on the packing dual (slack basis is feasible, no
// phase 1), Bland's rule for entering and leaving variables. Optimality is
// certified before returning: the covering weights read off the final
// tableau are feasible and match the packing objective exactly.
CoveringSolution solve_covering_lp(const std::vector<std::uint32_t>& columns, int n);

struct RationalWeighting {
    std::vector<std::vector<Vertex>> sets;
    std::vector<Rat> weights;
    Rat total;
};

struct ChiFb {
    Rat value;
    RationalWeighting witness;
};

// Fractional balanced chromatic number over maximal balanced sets (weight on
// any balanced set can move to a maximal superset, so these columns
// suffice). Throws on negative loops and beyond the size bound.
ChiFb chi_fb(const SignedGraph& g, int bound = 12);

bool weighting_valid(const SignedGraph& g, const RationalWeighting& w);

// Classical fractional chromatic number via the covering LP over maximal
// independent sets; column enumeration shares nothing with the balanced-set
// machinery.
Rat chi_f(const UnsignedGraph& g, int bound = 10);

}  // namespace sgchroma
