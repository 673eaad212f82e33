#include "sgchroma/quotient.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace sgchroma {

namespace {

std::vector<Vertex> mask_vertices(std::uint32_t m, int n) {
    std::vector<Vertex> out;
    for (int v = 0; v < n; ++v)
        if (m >> v & 1u) out.push_back(v);
    return out;
}

bool set_balanced(const SignedGraph& g, const std::vector<Vertex>& set) {
    return is_balanced(induced(g, set).graph).balanced();
}

// Lexicographically smallest maximal connected balanced set of size >= 2,
// or empty when all such maximal sets are singletons.
std::vector<Vertex> pick_collapse_set(const SignedGraph& g) {
    int n = g.n;
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges)
        if (!e.is_loop()) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
        }
    auto connected = [&](std::uint32_t mask) {
        std::uint32_t seen = mask & (~mask + 1);
        for (bool grew = true; grew;) {
            grew = false;
            for (int v = 0; v < n; ++v)
                if ((seen >> v & 1u) && (adj[v] & mask & ~seen)) {
                    seen |= adj[v] & mask;
                    grew = true;
                }
        }
        return seen == mask;
    };

    std::vector<Vertex> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 2 || !connected(mask)) continue;
        auto verts = mask_vertices(mask, n);
        if (!set_balanced(g, verts)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if ((mask >> v & 1u) || !(adj[v] & mask)) continue;
            auto bigger = verts;
            bigger.push_back(v);
            std::sort(bigger.begin(), bigger.end());
            if (set_balanced(g, bigger)) maximal = false;
        }
        if (!maximal) continue;
        if (best.empty() || std::lexicographical_compare(verts.begin(), verts.end(),
                                                         best.begin(), best.end()))
            best = verts;
    }
    return best;
}

struct Contraction {
    SignedGraph graph;
    std::vector<int> vertex_map;  // old index -> new index
};

void add_loop_at(std::set<std::tuple<Vertex, Vertex, int>>& seen, SignedGraph& g, Vertex v) {
    if (seen.insert({v, v, 1}).second) g.edges.push_back({v, v, 1});
}

// Identify `set` (already switched all-positive inside) into its smallest
// vertex; internal edges and positive loops become one positive loop; keep
// one edge per (pair, sign) and one positive loop per vertex.
Contraction contract(const SignedGraph& g, const std::vector<Vertex>& set) {
    int n = g.n;
    std::vector<char> in_set(n, 0);
    for (Vertex v : set) in_set[v] = 1;
    Vertex rep = *std::min_element(set.begin(), set.end());

    Contraction out;
    out.vertex_map.assign(n, -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (in_set[v] && v != rep) continue;
        out.vertex_map[v] = next++;
    }
    for (Vertex v : set) out.vertex_map[v] = out.vertex_map[rep];
    out.graph.n = next;

    std::set<std::tuple<Vertex, Vertex, int>> seen;
    bool add_loop = false;
    for (const Edge& e : g.edges) {
        Vertex u = out.vertex_map[e.u], v = out.vertex_map[e.v];
        if (in_set[e.u] && in_set[e.v]) {
            add_loop = true;  // internal edge or loop on the set
            continue;
        }
        if (e.is_loop()) {
            if (e.sign == 1) add_loop_at(seen, out.graph, u);
            continue;
        }
        Vertex a = std::min(u, v), b = std::max(u, v);
        if (seen.insert({a, b, e.sign}).second) out.graph.edges.push_back({a, b, e.sign});
    }
    if (add_loop) add_loop_at(seen, out.graph, out.vertex_map[rep]);
    return out;
}

}  // namespace

QuotientResult balanced_quotient(const SignedGraph& g, int bound) {
    if (g.has_negative_loop()) throw std::invalid_argument("negative loop: no quotient");
    if (g.n > bound)
        throw std::invalid_argument("balanced_quotient: n exceeds bound " + std::to_string(bound));

    QuotientResult res;
    res.fiber_map.resize(g.n);
    for (int v = 0; v < g.n; ++v) res.fiber_map[v] = v;

    SignedGraph cur = g;
    for (;;) {
        auto set = pick_collapse_set(cur);
        if (set.empty()) break;
        auto bal = is_balanced(induced(cur, set).graph);
        Switching sw(cur.n, 1);
        for (size_t i = 0; i < set.size(); ++i) sw[set[i]] = bal.switching()[i];
        res.trace.push_back({set, sw});
        cur = switched(cur, sw);
        auto step = contract(cur, set);
        for (int& f : res.fiber_map) f = step.vertex_map[f];
        cur = std::move(step.graph);
    }
    res.quotient = cur;
    res.loop_flags.assign(cur.n, 0);
    for (const Edge& e : cur.edges)
        if (e.is_loop() && e.sign == 1) res.loop_flags[e.u] = 1;
    return res;
}

std::vector<std::string> verify_quotient(const SignedGraph& g, const QuotientResult& q,
                                         int cycle_len) {
    std::vector<std::string> bad;

    // Replay the trace with fresh bookkeeping.
    SignedGraph cur = g;
    std::vector<int> fiber(g.n);
    for (int v = 0; v < g.n; ++v) fiber[v] = v;
    std::vector<int> evolved(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) evolved[i] = g.edges[i].sign;

    for (size_t si = 0; si < q.trace.size(); ++si) {
        const QuotientStep& step = q.trace[si];
        const std::string at = "step " + std::to_string(si) + ": ";
        if (step.set.size() < 2) bad.push_back(at + "set smaller than 2");
        for (Vertex v : step.set)
            if (v < 0 || v >= cur.n) {
                bad.push_back(at + "set vertex out of range");
                return bad;
            }
        if (static_cast<int>(step.switching.size()) != cur.n) {
            bad.push_back(at + "switching length mismatch");
            return bad;
        }
        // Connectivity of the set in the current graph (own traversal).
        {
            std::set<Vertex> inside(step.set.begin(), step.set.end()), seen{step.set[0]};
            std::vector<Vertex> queue{step.set[0]};
            while (!queue.empty()) {
                Vertex v = queue.back();
                queue.pop_back();
                for (const Edge& e : cur.edges) {
                    if (e.is_loop()) continue;
                    Vertex w = -1;
                    if (e.u == v && inside.count(e.v)) w = e.v;
                    if (e.v == v && inside.count(e.u)) w = e.u;
                    if (w >= 0 && !seen.count(w)) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            if (seen.size() != inside.size()) bad.push_back(at + "set not connected");
        }
        cur = switched(cur, step.switching);
        {
            std::set<Vertex> inside(step.set.begin(), step.set.end());
            for (const Edge& e : cur.edges)
                if (!e.is_loop() && inside.count(e.u) && inside.count(e.v) && e.sign == -1)
                    bad.push_back(at + "set not switched all-positive (unbalanced?)");
        }
        if (!bad.empty()) return bad;

        for (int i = 0; i < g.edge_count(); ++i)
            evolved[i] *= step.switching[fiber[g.edges[i].u]] * step.switching[fiber[g.edges[i].v]];
        auto step_result = contract(cur, step.set);
        for (int& f : fiber) f = step_result.vertex_map[f];
        cur = std::move(step_result.graph);
    }

    if (cur != q.quotient) bad.push_back("replayed quotient differs");
    if (fiber != q.fiber_map) bad.push_back("replayed fiber map differs");
    if (cur.has_negative_loop()) bad.push_back("negative loop in quotient");

    // Digon property: adjacent distinct vertices see both signs.
    {
        std::map<std::pair<Vertex, Vertex>, std::pair<bool, bool>> signs;
        for (const Edge& e : cur.edges) {
            if (e.is_loop()) continue;
            auto& entry = signs[{std::min(e.u, e.v), std::max(e.u, e.v)}];
            (e.sign > 0 ? entry.first : entry.second) = true;
        }
        for (const auto& [pair, have] : signs)
            if (!have.first || !have.second)
                bad.push_back("adjacent pair " + std::to_string(pair.first) + "," +
                              std::to_string(pair.second) + " lacks a digon");
    }

    if (static_cast<int>(q.loop_flags.size()) != cur.n) {
        bad.push_back("loop flag length");
    } else {
        std::vector<char> actual(cur.n, 0);
        for (const Edge& e : cur.edges)
            if (e.is_loop() && e.sign == 1) actual[e.u] = 1;
        if (actual != q.loop_flags) bad.push_back("loop flags disagree");
    }

    // Homomorphism: each input edge must land on a quotient edge of its
    // evolved sign; cycles must keep their signs.
    for (int i = 0; i < g.edge_count(); ++i) {
        Vertex fu = fiber[g.edges[i].u], fv = fiber[g.edges[i].v];
        if (fu == fv) {
            if (evolved[i] == -1) {
                bad.push_back("edge " + std::to_string(i) + " maps to a negative loop");
            } else if (cur.n > 0 && !q.loop_flags[fu]) {
                bad.push_back("edge " + std::to_string(i) + " needs a positive loop");
            }
        } else {
            bool present = false;
            for (const Edge& e : cur.edges)
                if (!e.is_loop() && e.sign == evolved[i] &&
                    std::minmax(e.u, e.v) == std::minmax(fu, fv))
                    present = true;
            if (!present) bad.push_back("edge " + std::to_string(i) + " has no image edge");
        }
    }
    for (const Cycle& c : enumerate_cycles(g, cycle_len)) {
        int original = 1, image = 1;
        for (int id : c.edge_ids) {
            original *= g.edges[id].sign;
            image *= evolved[id];
        }
        if (original != image) bad.push_back("cycle changed sign under the mapping");
    }
    return bad;
}

}  // namespace sgchroma
