#include "sgchroma/color.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>

namespace sgchroma {

SignedGraph negated(const SignedGraph& g) {
    SignedGraph out = g;
    for (Edge& e : out.edges) e.sign = -e.sign;
    return out;
}

namespace {

// Balance test specialized to a vertex mask; avoids building subgraphs.
bool mask_balanced(const SignedGraph& g, const std::vector<std::vector<int>>& inc,
                   std::uint32_t mask, std::vector<int>& label, std::vector<Vertex>& stack) {
    for (const Edge& e : g.edges)
        if (e.is_loop() && e.sign == -1 && (mask >> e.u & 1u)) return false;
    label.assign(g.n, 0);
    for (Vertex root = 0; root < g.n; ++root) {
        if (!(mask >> root & 1u) || label[root] != 0) continue;
        label[root] = 1;
        stack.assign(1, root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (int id : inc[v]) {
                const Edge& e = g.edges[id];
                if (e.is_loop()) continue;
                Vertex w = e.other(v);
                if (!(mask >> w & 1u)) continue;
                if (label[w] == 0) {
                    label[w] = label[v] * e.sign;
                    stack.push_back(w);
                } else if (e.sign * label[v] * label[w] == -1) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> balanced_set_masks(const SignedGraph& g, bool maximal_only,
                                              int bound_all, int bound_maximal) {
    int bound = maximal_only ? bound_maximal : bound_all;
    if (g.n > bound)
        throw std::invalid_argument("balanced set enumeration: n=" + std::to_string(g.n) +
                                    " exceeds bound " + std::to_string(bound));
    auto inc = g.incidence();
    std::vector<int> label;
    std::vector<Vertex> stack;
    std::uint32_t full = g.n == 32 ? ~0u : (1u << g.n) - 1;

    std::vector<char> balanced(static_cast<size_t>(full) + 1);
    for (std::uint32_t m = 0; m <= full; ++m) {
        // Hereditary: a set with an unbalanced subset (drop highest vertex)
        // can still be balanced only if that subset is.
        balanced[m] = mask_balanced(g, inc, m, label, stack);
        if (m == full) break;
    }

    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (!balanced[m]) {
            if (m == full) break;
            continue;
        }
        if (maximal_only) {
            bool maximal = true;
            for (Vertex v = 0; v < g.n && maximal; ++v)
                if (!(m >> v & 1u) && balanced[m | (1u << v)]) maximal = false;
            if (maximal) out.push_back(m);
        } else {
            out.push_back(m);
        }
        if (m == full) break;
    }
    return out;
}

namespace {

std::vector<Vertex> mask_to_set(std::uint32_t m) {
    std::vector<Vertex> out;
    for (int v = 0; v < 32; ++v)
        if (m >> v & 1u) out.push_back(v);
    return out;
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_balanced_sets(const SignedGraph& g, bool maximal_only) {
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t m : balanced_set_masks(g, maximal_only)) out.push_back(mask_to_set(m));
    return out;
}

bool cover_valid(const SignedGraph& g, const BalancedCover& c) {
    if (static_cast<int>(c.parts.size()) > c.k) return false;
    std::vector<char> covered(g.n, 0);
    for (const auto& part : c.parts) {
        for (Vertex v : part) {
            if (v < 0 || v >= g.n) return false;
            covered[v] = 1;
        }
        if (!is_balanced(induced(g, part).graph).balanced()) return false;
    }
    return std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; });
}

namespace {

struct CoverSearch {
    int n;
    std::vector<std::uint32_t> sets;           // maximal balanced, decreasing size
    std::vector<Vertex> vertex_order;          // decreasing degree
    std::vector<std::vector<int>> sets_with;   // per vertex, candidate set indices
    std::vector<std::uint32_t> digon_adj;      // must-separate pairs

    int best;
    std::vector<int> best_pick, pick;

    // Greedy clique in the must-separate graph restricted to `remaining`.
    int separate_bound(std::uint32_t remaining) const {
        int count = 0;
        std::uint32_t candidates = remaining;
        while (candidates) {
            int v = std::countr_zero(candidates);
            ++count;
            candidates &= digon_adj[v];
        }
        return count;
    }

    void dfs(std::uint32_t uncovered, int depth) {
        if (uncovered == 0) {
            if (depth < best) {
                best = depth;
                best_pick = pick;
            }
            return;
        }
        if (depth + separate_bound(uncovered) >= best) return;
        Vertex pivot = -1;
        for (Vertex v : vertex_order)
            if (uncovered >> v & 1u) {
                pivot = v;
                break;
            }
        for (int idx : sets_with[pivot]) {
            pick.push_back(idx);
            dfs(uncovered & ~sets[idx], depth + 1);
            pick.pop_back();
        }
    }
};

}  // namespace

ChiB chi_b(const SignedGraph& g) {
    ChiB res;
    if (g.has_negative_loop()) {
        res.infinite = true;
        return res;
    }
    if (g.n == 0) return res;

    CoverSearch cs;
    cs.n = g.n;
    cs.sets = balanced_set_masks(g, /*maximal_only=*/true);
    std::stable_sort(cs.sets.begin(), cs.sets.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    cs.vertex_order.resize(g.n);
    std::iota(cs.vertex_order.begin(), cs.vertex_order.end(), 0);
    std::stable_sort(cs.vertex_order.begin(), cs.vertex_order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    cs.sets_with.assign(g.n, {});
    for (int i = 0; i < static_cast<int>(cs.sets.size()); ++i)
        for (Vertex v = 0; v < g.n; ++v)
            if (cs.sets[i] >> v & 1u) cs.sets_with[v].push_back(i);

    cs.digon_adj.assign(g.n, 0);
    auto inc = g.incidence();
    std::vector<int> label;
    std::vector<Vertex> stack;
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = u + 1; v < g.n; ++v)
            if (!mask_balanced(g, inc, (1u << u) | (1u << v), label, stack)) {
                cs.digon_adj[u] |= 1u << v;
                cs.digon_adj[v] |= 1u << u;
            }

    // Greedy cover gives the initial upper bound.
    std::uint32_t full = (g.n == 32 ? ~0u : (1u << g.n) - 1), uncovered = full;
    std::vector<int> greedy;
    while (uncovered) {
        int pick = -1, gain = -1;
        for (int i = 0; i < static_cast<int>(cs.sets.size()); ++i) {
            int got = std::popcount(cs.sets[i] & uncovered);
            if (got > gain) {
                gain = got;
                pick = i;
            }
        }
        greedy.push_back(pick);
        uncovered &= ~cs.sets[pick];
    }
    cs.best = static_cast<int>(greedy.size());
    cs.best_pick = greedy;
    cs.dfs(full, 0);

    res.k = cs.best;
    res.cover.k = cs.best;
    for (int idx : cs.best_pick) res.cover.parts.push_back(mask_to_set(cs.sets[idx]));
    return res;
}

ZeroFreeColoring balanced_to_zero_free(const SignedGraph& g, const BalancedCover& c) {
    if (!cover_valid(g, c)) throw std::invalid_argument("invalid balanced cover");
    ZeroFreeColoring out;
    out.k = c.k;
    out.psi.assign(g.n, 0);
    std::vector<int> part_of(g.n, -1);
    for (int i = 0; i < static_cast<int>(c.parts.size()); ++i)
        for (Vertex v : c.parts[i])
            if (part_of[v] == -1) part_of[v] = i;
    for (int i = 0; i < static_cast<int>(c.parts.size()); ++i) {
        auto sub = induced(g, c.parts[i]);
        auto bal = is_balanced(sub.graph);
        const Switching& sw = bal.switching();
        for (size_t j = 0; j < sub.vertices.size(); ++j) {
            Vertex v = sub.vertices[j];
            if (part_of[v] == i) out.psi[v] = sw[j] * (i + 1);
        }
    }
    return out;
}

bool zero_free_valid(const SignedGraph& h, const ZeroFreeColoring& c) {
    if (static_cast<int>(c.psi.size()) != h.n) return false;
    for (int x : c.psi)
        if (x == 0 || std::abs(x) > c.k) return false;
    for (const Edge& e : h.edges)
        if (c.psi[e.u] == e.sign * c.psi[e.v]) return false;
    return true;
}

std::optional<HomToKtildePlus> check_hom_to_ktilde_plus(const SignedGraph& g, int k) {
    if (g.has_negative_loop()) throw std::invalid_argument("negative loop admits no homomorphism");
    ChiB cb = chi_b(g);
    if (cb.k > k) return std::nullopt;

    HomToKtildePlus hom;
    hom.k = k;
    hom.image.assign(g.n, 0);
    hom.switching.assign(g.n, 1);
    std::vector<int> part_of(g.n, -1);
    for (int i = 0; i < static_cast<int>(cb.cover.parts.size()); ++i)
        for (Vertex v : cb.cover.parts[i])
            if (part_of[v] == -1) part_of[v] = i;
    for (int i = 0; i < static_cast<int>(cb.cover.parts.size()); ++i) {
        auto sub = induced(g, cb.cover.parts[i]);
        auto bal = is_balanced(sub.graph);
        for (size_t j = 0; j < sub.vertices.size(); ++j) {
            Vertex v = sub.vertices[j];
            if (part_of[v] == i) {
                hom.image[v] = i;
                hom.switching[v] = bal.switching()[j];
            }
        }
    }
    if (!hom_valid(g, hom)) throw std::logic_error("constructed homomorphism failed verification");
    return hom;
}

bool hom_valid(const SignedGraph& g, const HomToKtildePlus& h) {
    if (static_cast<int>(h.image.size()) != g.n || static_cast<int>(h.switching.size()) != g.n)
        return false;
    for (int x : h.image)
        if (x < 0 || x >= h.k) return false;
    // Within a fiber every switched edge must be positive (the target has
    // only a positive loop on each vertex); across fibers both signs exist.
    for (const Edge& e : g.edges)
        if (h.image[e.u] == h.image[e.v] && e.sign * h.switching[e.u] * h.switching[e.v] == -1)
            return false;
    return true;
}

std::optional<CircularViolation> verify_circular(const SignedGraph& g, const CircularColoring& c) {
    if (c.r < 2) throw std::invalid_argument("circular coloring needs r >= 2");
    if (static_cast<int>(c.phi.size()) != g.n)
        throw std::invalid_argument("circular coloring size mismatch");
    for (const Rat& p : c.phi)
        if (p < 0 || p >= c.r) throw std::invalid_argument("point outside [0, r)");
    auto dist = [&](const Rat& a, const Rat& b) {
        Rat d = a > b ? a - b : b - a;
        Rat wrap = c.r - d;
        return d < wrap ? d : wrap;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges[i];
        Rat d = dist(c.phi[e.u], c.phi[e.v]);
        if (e.sign == -1 && d < 1)
            return CircularViolation{i, "negative edge at distance " + rat_str(d) + " < 1"};
        if (e.sign == +1 && d > c.r / 2 - 1)
            return CircularViolation{i, "positive edge at distance " + rat_str(d) + " > r/2 - 1"};
    }
    return std::nullopt;
}

CircularColoring cover_to_circular(const SignedGraph& g, const BalancedCover& c) {
    if (!cover_valid(g, c)) throw std::invalid_argument("invalid balanced cover");
    int k = c.k;
    CircularColoring out;
    out.r = Rat(2 * k);
    out.phi.assign(g.n, Rat(0));
    std::vector<int> part_of(g.n, -1);
    for (int i = 0; i < static_cast<int>(c.parts.size()); ++i)
        for (Vertex v : c.parts[i])
            if (part_of[v] == -1) part_of[v] = i;
    for (int i = 0; i < static_cast<int>(c.parts.size()); ++i) {
        auto sub = induced(g, c.parts[i]);
        auto bal = is_balanced(sub.graph);
        for (size_t j = 0; j < sub.vertices.size(); ++j) {
            Vertex v = sub.vertices[j];
            if (part_of[v] == i) out.phi[v] = Rat(bal.switching()[j] > 0 ? i : i + k);
        }
    }
    return out;
}

void UnsignedGraph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("loopless graph expected");
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
}

int UnsignedGraph::edge_count() const {
    int total = 0;
    for (std::uint32_t a : adj) total += std::popcount(a);
    return total / 2;
}

namespace {

struct ChiSolver {
    const UnsignedGraph& g;
    std::map<std::uint32_t, int> memo;

    // Maximal independent subsets of `mask` that contain its lowest vertex.
    void maximal_independent(std::uint32_t mask, std::uint32_t chosen, std::uint32_t candidates,
                             std::vector<std::uint32_t>& out) {
        if (!candidates) {
            // Maximal within mask: no vertex of mask outside `chosen` is
            // addable.
            std::uint32_t addable = mask & ~chosen;
            for (std::uint32_t m = addable; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (!(g.adj[v] & chosen)) return;
            }
            out.push_back(chosen);
            return;
        }
        int v = std::countr_zero(candidates);
        maximal_independent(mask, chosen | (1u << v), candidates & ~(g.adj[v] | (1u << v)), out);
        // Skipping v is only useful if some chosen-compatible neighbor will
        // exclude it later; otherwise the result would not be maximal.
        if (g.adj[v] & candidates)
            maximal_independent(mask, chosen, candidates & ~(1u << v), out);
    }

    int solve(std::uint32_t mask) {
        if (!mask) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int low = std::countr_zero(mask);
        std::vector<std::uint32_t> sets;
        maximal_independent(mask, 1u << low, mask & ~(g.adj[low] | (1u << low)), sets);
        int best = 1 + std::popcount(mask);  // loose
        for (std::uint32_t s : sets) best = std::min(best, 1 + solve(mask & ~s));
        memo[mask] = best;
        return best;
    }
};

}  // namespace

int chi(const UnsignedGraph& g, int bound) {
    if (g.n > bound)
        throw std::invalid_argument("chi: n=" + std::to_string(g.n) + " exceeds bound " +
                                    std::to_string(bound));
    if (g.n == 0) return 0;
    ChiSolver solver{g, {}};
    return solver.solve(g.n == 32 ? ~0u : (1u << g.n) - 1);
}

}  // namespace sgchroma
