#include "sgchroma/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace sgchroma {

SignedGraph::SignedGraph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("edge sign must be +1 or -1");
    }
}

int SignedGraph::degree(Vertex v) const {
    int d = 0;
    for (const Edge& e : edges) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

std::vector<std::vector<int>> SignedGraph::incidence() const {
    std::vector<std::vector<int>> inc(n);
    for (int i = 0; i < edge_count(); ++i) {
        inc[edges[i].u].push_back(i);
        if (!edges[i].is_loop()) inc[edges[i].v].push_back(i);
    }
    return inc;
}

bool SignedGraph::has_negative_loop() const {
    for (const Edge& e : edges)
        if (e.is_loop() && e.sign == -1) return true;
    return false;
}

SignedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "expected header \"n m\"");
            continue;
        }
        long u, v;
        std::string s;
        if (!(ls >> u >> v >> s)) throw ParseError(lineno, "expected \"u v s\"");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
        int sign;
        if (s == "+") sign = +1;
        else if (s == "-") sign = -1;
        else throw ParseError(lineno, "bad sign token \"" + s + "\" (want + or -)");
        std::string trail;
        if (ls >> trail) throw ParseError(lineno, "trailing tokens after edge");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), sign});
    }
    if (n < 0) throw ParseError(lineno, "missing header line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                     ", got " + std::to_string(edges.size()));
    return SignedGraph(n, std::move(edges));
}

SignedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string format_graph(const SignedGraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges)
        out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
    return out.str();
}

SignedGraph switched(const SignedGraph& g, const Switching& sw) {
    if (static_cast<int>(sw.size()) != g.n) throw std::invalid_argument("switching length mismatch");
    for (int s : sw)
        if (s != 1 && s != -1) throw std::invalid_argument("switching entries must be +1 or -1");
    SignedGraph out = g;
    for (Edge& e : out.edges) e.sign *= sw[e.u] * sw[e.v];
    return out;
}

int walk_sign(const SignedGraph& g, const std::vector<int>& walk) {
    if (walk.empty()) throw std::invalid_argument("empty walk");
    for (int id : walk)
        if (id < 0 || id >= g.edge_count()) throw std::invalid_argument("edge id out of range");

    // Thread the edge sequence starting from either endpoint of the first
    // edge; each later step is forced by the current vertex.
    auto threads_from = [&](Vertex start) {
        Vertex cur = start;
        for (int id : walk) {
            const Edge& e = g.edges[id];
            if (e.u != cur && e.v != cur) return false;
            cur = e.is_loop() ? cur : e.other(cur);
        }
        return true;
    };
    const Edge& first = g.edges[walk[0]];
    if (!threads_from(first.u) && !threads_from(first.v))
        throw std::invalid_argument("edge sequence is not a walk");

    int sign = 1;
    for (int id : walk) sign *= g.edges[id].sign;
    return sign;
}

namespace {

// Sorted incidence: per vertex, incident edge ids ordered by (other endpoint,
// edge id) so traversals are deterministic.
std::vector<std::vector<int>> sorted_incidence(const SignedGraph& g) {
    auto inc = g.incidence();
    for (Vertex v = 0; v < g.n; ++v) {
        std::sort(inc[v].begin(), inc[v].end(), [&](int a, int b) {
            Vertex oa = g.edges[a].other(v), ob = g.edges[b].other(v);
            return std::tie(oa, a) < std::tie(ob, b);
        });
    }
    return inc;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
    // Negative loops first: a one-edge negative cycle.
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edges[i].is_loop() && g.edges[i].sign == -1)
            return {NegativeCycle{{g.edges[i].u}, {i}}};

    auto inc = sorted_incidence(g);
    Switching label(g.n, 0);
    std::vector<int> parent_edge(g.n, -1), parent(g.n, -1), depth(g.n, 0);

    auto tree_path_to_root = [&](Vertex v) {
        std::vector<Vertex> path{v};
        while (parent[path.back()] != -1) path.push_back(parent[path.back()]);
        return path;
    };

    for (Vertex root = 0; root < g.n; ++root) {
        if (label[root] != 0) continue;
        label[root] = 1;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (int id : inc[v]) {
                const Edge& e = g.edges[id];
                if (e.is_loop()) continue;  // positive loops affect nothing
                Vertex w = e.other(v);
                if (label[w] == 0) {
                    label[w] = label[v] * e.sign;
                    parent[w] = v;
                    parent_edge[w] = id;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (e.sign * label[v] * label[w] == -1) {
                    // Fundamental cycle of a non-tree edge with bad parity:
                    // splice tree paths v..lca and w..lca with the edge.
                    std::vector<Vertex> pv = tree_path_to_root(v), pw = tree_path_to_root(w);
                    while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    // pv.back() == pw.back() == lca
                    NegativeCycle cyc;
                    cyc.vertices.assign(pv.begin(), pv.end());
                    for (size_t i = 0; i + 1 < pv.size(); ++i)
                        cyc.edge_ids.push_back(parent_edge[pv[i]]);
                    for (size_t i = pw.size() - 1; i-- > 0;) {
                        cyc.vertices.push_back(pw[i]);
                        cyc.edge_ids.push_back(parent_edge[pw[i]]);
                    }
                    cyc.edge_ids.push_back(id);  // closes w -> v
                    return {std::move(cyc)};
                }
            }
        }
    }
    return {std::move(label)};
}

InducedSubgraph induced(const SignedGraph& g, const std::vector<Vertex>& set) {
    std::vector<int> new_index(g.n, -1);
    std::vector<Vertex> verts(set);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Vertex v : verts)
        if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    for (size_t i = 0; i < verts.size(); ++i) new_index[verts[i]] = static_cast<int>(i);
    SignedGraph sub;
    sub.n = static_cast<int>(verts.size());
    for (const Edge& e : g.edges)
        if (new_index[e.u] >= 0 && new_index[e.v] >= 0)
            sub.edges.push_back({new_index[e.u], new_index[e.v], e.sign});
    return {std::move(sub), std::move(verts)};
}

MaxPositiveSwitching max_positive_switching(const SignedGraph& g) {
    if (g.has_negative_loop())
        throw std::invalid_argument("negative loop cannot be switched positive");
    auto inc = g.incidence();
    Switching sw(g.n, 1);
    std::vector<int> sign(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) sign[i] = g.edges[i].sign;

    // Index-order scan, restart after every improving switch. Each switch
    // strictly increases the positive-edge count, so this stops.
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex v = 0; v < g.n && !improved; ++v) {
            int neg = 0, pos = 0;
            for (int id : inc[v]) {
                if (g.edges[id].is_loop()) continue;
                (sign[id] > 0 ? pos : neg)++;
            }
            if (neg > pos) {
                sw[v] = -sw[v];
                for (int id : inc[v])
                    if (!g.edges[id].is_loop()) sign[id] = -sign[id];
                improved = true;
            }
        }
    }

    SignedGraph h;
    h.n = g.n;
    for (int i = 0; i < g.edge_count(); ++i)
        if (sign[i] > 0) h.edges.push_back({g.edges[i].u, g.edges[i].v, 1});
    return {std::move(sw), std::move(h)};
}

SimplifyResult simplify(const SignedGraph& g) {
    SimplifyResult res;
    res.graph.n = g.n;
    res.had_negative_loop = g.has_negative_loop();
    std::set<std::tuple<Vertex, Vertex, int>> seen;
    for (const Edge& e : g.edges) {
        if (e.is_loop() && e.sign == 1) continue;
        Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        if (seen.insert({a, b, e.sign}).second) res.graph.edges.push_back({a, b, e.sign});
    }
    return res;
}

std::vector<int> components(const SignedGraph& g) {
    std::vector<int> comp(g.n, -1);
    auto inc = sorted_incidence(g);
    int c = 0;
    for (Vertex root = 0; root < g.n; ++root) {
        if (comp[root] != -1) continue;
        comp[root] = c;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (int id : inc[v]) {
                Vertex w = g.edges[id].other(v);
                if (comp[w] == -1) {
                    comp[w] = c;
                    queue.push_back(w);
                }
            }
        }
        ++c;
    }
    return comp;
}

bool is_connected_set(const SignedGraph& g, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    auto [sub, verts] = induced(g, set);
    auto comp = components(sub);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<Cycle> enumerate_cycles(const SignedGraph& g, int max_len) {
    std::vector<Cycle> out;
    if (max_len >= 1)
        for (int i = 0; i < g.edge_count(); ++i)
            if (g.edges[i].is_loop()) out.push_back({{g.edges[i].u}, {i}});

    // Paths start at the cycle's minimum vertex; only larger vertices may
    // appear later. Direction is fixed by requiring the second vertex's
    // (vertex, edge) step to not exceed the closing step.
    auto inc = sorted_incidence(g);
    std::vector<Vertex> path;
    std::vector<int> path_edges;
    std::vector<char> used(g.n, 0);

    auto emit_ok = [&](int closing_edge) {
        if (path.size() == 2)  // parallel pair: list each unordered pair once
            return path_edges[0] < closing_edge;
        return std::tie(path[1], path_edges[0]) < std::tie(path.back(), closing_edge);
    };

    std::function<void()> extend = [&]() {
        Vertex v = path.back();
        for (int id : inc[v]) {
            const Edge& e = g.edges[id];
            if (e.is_loop()) continue;
            Vertex w = e.other(v);
            if (w == path[0] && path.size() >= 2) {
                if (id != path_edges.back() && emit_ok(id)) {
                    Cycle c{path, path_edges};
                    c.edge_ids.push_back(id);
                    out.push_back(std::move(c));
                }
                continue;
            }
            if (used[w] || w < path[0]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            used[w] = 1;
            path.push_back(w);
            path_edges.push_back(id);
            extend();
            path.pop_back();
            path_edges.pop_back();
            used[w] = 0;
        }
    };

    if (max_len >= 2) {
        for (Vertex s = 0; s < g.n; ++s) {
            used[s] = 1;
            path = {s};
            path_edges.clear();
            extend();
            used[s] = 0;
        }
    }
    return out;
}

}  // namespace sgchroma
