#include "sgchroma/minor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace sgchroma {

namespace {

std::vector<Vertex> mask_vertices(std::uint32_t m) {
    std::vector<Vertex> out;
    for (int v = 0; v < 32; ++v)
        if (m >> v & 1u) out.push_back(v);
    return out;
}

int pair_rank(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

// Nonempty vertex sets in lexicographic order of their sorted vertex lists:
// {0}, {0,1}, {0,1,2}, ..., {0,2}, ..., {1}, ...
void lex_sets(int n, const std::function<void(std::uint32_t)>& emit) {
    std::function<void(int, std::uint32_t)> extend = [&](int last, std::uint32_t mask) {
        for (int w = last + 1; w < n; ++w) {
            emit(mask | (1u << w));
            extend(w, mask | (1u << w));
        }
    };
    extend(-1, 0);
}

std::vector<std::uint32_t> sign_adjacency(const SignedGraph& g, int want_sign,
                                          const Switching& sw) {
    std::vector<std::uint32_t> adj(g.n, 0);
    for (const Edge& e : g.edges) {
        if (e.is_loop()) continue;
        if (e.sign * sw[e.u] * sw[e.v] != want_sign) continue;
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    return adj;
}

bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
    if (!mask) return false;
    std::uint32_t seen = mask & (~mask + 1);  // lowest bit
    for (;;) {
        std::uint32_t grow = seen;
        for (std::uint32_t rest = seen; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            grow |= adj[v] & mask;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == mask;
}

// A branch-set option: a connected set together with a switching under which
// its positive edges span it. Options are ordered by (set lex rank,
// switching index), making the first certificate canonical.
struct SetOption {
    std::uint32_t mask;
    Switching sw;  // full length; +1 outside the set
};

std::vector<SetOption> branch_set_options(const SignedGraph& g) {
    std::vector<SetOption> options;
    std::vector<std::uint32_t> plain_adj(g.n, 0);
    for (const Edge& e : g.edges) {
        if (e.is_loop()) continue;
        plain_adj[e.u] |= 1u << e.v;
        plain_adj[e.v] |= 1u << e.u;
    }
    lex_sets(g.n, [&](std::uint32_t mask) {
        if (!mask_connected(plain_adj, mask)) return;
        auto verts = mask_vertices(mask);
        int s = static_cast<int>(verts.size());
        for (std::uint32_t bits = 0; bits < (1u << (s - 1)); ++bits) {
            Switching sw(g.n, 1);
            for (int i = 1; i < s; ++i)
                if (bits >> (i - 1) & 1u) sw[verts[i]] = -1;
            if (s > 1 && !mask_connected(sign_adjacency(g, +1, sw), mask)) continue;
            options.push_back({mask, std::move(sw)});
        }
    });
    return options;
}

struct CrossSigns {
    bool pos = false;
    bool neg = false;
    bool any() const { return pos || neg; }
};

CrossSigns cross_signs(const SignedGraph& g, const SetOption& a, const SetOption& b) {
    CrossSigns out;
    for (const Edge& e : g.edges) {
        if (e.is_loop()) continue;
        bool ua = a.mask >> e.u & 1u, va = a.mask >> e.v & 1u;
        bool ub = b.mask >> e.u & 1u, vb = b.mask >> e.v & 1u;
        if (!((ua && vb) || (ub && va))) continue;
        int sign = e.sign * a.sw[e.u] * a.sw[e.v] * b.sw[e.u] * b.sw[e.v];
        (sign > 0 ? out.pos : out.neg) = true;
    }
    return out;
}

struct MinorSearch {
    const SignedGraph& g;
    int t;
    bool odd;
    std::vector<SetOption> options;
    std::vector<int> chosen;
    std::uint32_t used = 0;
    std::vector<CrossSigns> avail;  // pair_rank-indexed for chosen sets

    std::optional<MinorCertificate> found;

    bool pair_ok(const CrossSigns& cs) const { return odd ? cs.any() : (cs.pos && cs.neg); }

    // For the odd pattern, search flips with f_0 = +1; pair (i,j) needs an
    // edge of sign -f_i*f_j available.
    std::optional<std::vector<int>> feasible_flips() const {
        if (!odd) return std::vector<int>(t, 1);
        for (std::uint32_t fm = 0; fm < (1u << (t - 1)); ++fm) {
            std::vector<int> f(t, 1);
            for (int i = 1; i < t; ++i) f[i] = fm >> (i - 1) & 1u ? -1 : 1;
            bool ok = true;
            for (int j = 1; j < t && ok; ++j)
                for (int i = 0; i < j && ok; ++i) {
                    const CrossSigns& cs = avail[pair_rank(i, j)];
                    int need = -f[i] * f[j];
                    if (!(need > 0 ? cs.pos : cs.neg)) ok = false;
                }
            if (ok) return f;
        }
        return std::nullopt;
    }

    void build_certificate(const std::vector<int>& flips) {
        MinorCertificate cert;
        cert.t = t;
        cert.odd = odd;
        cert.flips = flips;
        for (int idx : chosen) {
            auto verts = mask_vertices(options[idx].mask);
            Switching local;
            for (Vertex v : verts) local.push_back(options[idx].sw[v]);
            cert.branch_sets.push_back(std::move(verts));
            cert.internal_switchings.push_back(std::move(local));
        }
        cert.cross_edges.resize(t * (t - 1) / 2);
        for (int j = 1; j < t; ++j)
            for (int i = 0; i < j; ++i) {
                const SetOption& a = options[chosen[i]];
                const SetOption& b = options[chosen[j]];
                for (int id = 0; id < g.edge_count(); ++id) {
                    const Edge& e = g.edges[id];
                    if (e.is_loop()) continue;
                    bool fwd = (a.mask >> e.u & 1u) && (b.mask >> e.v & 1u);
                    bool rev = (b.mask >> e.u & 1u) && (a.mask >> e.v & 1u);
                    if (!fwd && !rev) continue;
                    int sign = e.sign * a.sw[e.u] * a.sw[e.v] * b.sw[e.u] * b.sw[e.v] *
                               flips[i] * flips[j];
                    cert.cross_edges[pair_rank(i, j)].push_back({id, sign});
                }
            }
        found = std::move(cert);
    }

    void dfs(size_t from) {
        if (found) return;
        if (static_cast<int>(chosen.size()) == t) {
            if (auto flips = feasible_flips()) build_certificate(*flips);
            return;
        }
        for (size_t idx = from; idx < options.size() && !found; ++idx) {
            if (options[idx].mask & used) continue;
            int depth = static_cast<int>(chosen.size());
            bool ok = true;
            std::vector<CrossSigns> row(depth);
            for (int i = 0; i < depth && ok; ++i) {
                row[i] = cross_signs(g, options[chosen[i]], options[idx]);
                if (!pair_ok(row[i])) ok = false;
            }
            if (!ok) continue;
            for (int i = 0; i < depth; ++i) {
                int r = pair_rank(i, depth);
                if (r >= static_cast<int>(avail.size())) avail.resize(r + 1);
                avail[r] = row[i];
            }
            chosen.push_back(static_cast<int>(idx));
            used |= options[idx].mask;
            dfs(idx + 1);
            used &= ~options[idx].mask;
            chosen.pop_back();
        }
    }
};

std::optional<MinorCertificate> minor_search(const SignedGraph& g, int t, bool odd, int bound) {
    if (t < 1) throw std::invalid_argument("pattern order must be at least 1");
    if (g.n > bound)
        throw std::invalid_argument("minor search: n=" + std::to_string(g.n) +
                                    " exceeds bound " + std::to_string(bound));
    if (t > g.n) return std::nullopt;
    MinorSearch search{g, t, odd, branch_set_options(g), {}, 0, {}, std::nullopt};
    search.dfs(0);
    return search.found;
}

}  // namespace

std::optional<MinorCertificate> has_ktilde_minor(const SignedGraph& g, int t, int bound) {
    return minor_search(g, t, /*odd=*/false, bound);
}

std::optional<MinorCertificate> has_odd_minor(const SignedGraph& g, int t, int bound) {
    return minor_search(g, t, /*odd=*/true, bound);
}

namespace {

struct EvenOddSearch {
    const UnsignedGraph& g;
    int t;
    std::uint32_t coloring;
    std::vector<std::uint32_t> pc_adj;  // properly colored subgraph
    std::vector<std::uint32_t> candidates;
    std::vector<std::uint32_t> chosen;
    std::uint32_t used = 0;
    std::optional<EvenOddCertificate> found;

    bool pair_ok(std::uint32_t a, std::uint32_t b) const {
        bool mono = false, proper = false;
        for (std::uint32_t rest = a; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t nb = g.adj[v] & b;
            if (!nb) continue;
            int cv = coloring >> v & 1u;
            for (std::uint32_t r2 = nb; r2;) {
                int w = std::countr_zero(r2);
                r2 &= r2 - 1;
                ((coloring >> w & 1u) == static_cast<std::uint32_t>(cv) ? mono : proper) = true;
            }
        }
        return mono && proper;
    }

    void emit() {
        EvenOddCertificate cert;
        cert.t = t;
        cert.coloring.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) cert.coloring[v] = coloring >> v & 1u;
        for (std::uint32_t mask : chosen) {
            auto verts = mask_vertices(mask);
            // BFS tree inside the properly colored subgraph.
            std::vector<std::pair<Vertex, Vertex>> edges;
            std::uint32_t seen = 1u << verts[0];
            std::vector<Vertex> queue{verts[0]};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                Vertex v = queue[qi];
                for (std::uint32_t rest = pc_adj[v] & mask & ~seen; rest;) {
                    int w = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (seen >> w & 1u) continue;
                    seen |= 1u << w;
                    edges.push_back({v, w});
                    queue.push_back(w);
                }
            }
            cert.tree_vertices.push_back(std::move(verts));
            cert.tree_edges.push_back(std::move(edges));
        }
        found = std::move(cert);
    }

    void dfs(size_t from) {
        if (found) return;
        if (static_cast<int>(chosen.size()) == t) {
            emit();
            return;
        }
        for (size_t i = from; i < candidates.size() && !found; ++i) {
            std::uint32_t mask = candidates[i];
            if (mask & used) continue;
            bool ok = true;
            for (std::uint32_t prev : chosen)
                if (!pair_ok(prev, mask)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(mask);
            used |= mask;
            dfs(i + 1);
            used &= ~mask;
            chosen.pop_back();
        }
    }
};

}  // namespace

std::optional<EvenOddCertificate> has_even_odd_minor(const UnsignedGraph& g, int t, int bound) {
    if (t < 1) throw std::invalid_argument("pattern order must be at least 1");
    if (g.n > bound)
        throw std::invalid_argument("even-odd search: n exceeds bound");
    if (t > g.n) return std::nullopt;
    // Color flips preserve everything, so pin vertex 0's color.
    for (std::uint32_t coloring = 0; coloring < (1u << std::max(0, g.n - 1)); ++coloring) {
        EvenOddSearch search{g, t, coloring << 1, {}, {}, {}, 0, std::nullopt};
        search.pc_adj.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v)
            for (std::uint32_t rest = g.adj[v]; rest;) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                if ((search.coloring >> v & 1u) != (search.coloring >> w & 1u))
                    search.pc_adj[v] |= 1u << w;
            }
        lex_sets(g.n, [&](std::uint32_t mask) {
            if (mask_connected(search.pc_adj, mask)) search.candidates.push_back(mask);
        });
        search.dfs(0);
        if (search.found) return search.found;
    }
    return std::nullopt;
}

bool has_clique_minor(const UnsignedGraph& g, int t, int bound) {
    if (t < 1) throw std::invalid_argument("pattern order must be at least 1");
    if (g.n > bound) throw std::invalid_argument("clique-minor search: n exceeds bound");
    if (t > g.n) return false;
    std::vector<std::uint32_t> candidates;
    lex_sets(g.n, [&](std::uint32_t mask) {
        if (mask_connected(g.adj, mask)) candidates.push_back(mask);
    });
    std::vector<std::uint32_t> chosen;
    std::function<bool(size_t, std::uint32_t)> dfs = [&](size_t from, std::uint32_t used) {
        if (static_cast<int>(chosen.size()) == t) return true;
        for (size_t i = from; i < candidates.size(); ++i) {
            std::uint32_t mask = candidates[i];
            if (mask & used) continue;
            bool ok = true;
            for (std::uint32_t prev : chosen) {
                bool touch = false;
                for (std::uint32_t rest = prev; rest && !touch;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (g.adj[v] & mask) touch = true;
                }
                if (!touch) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(mask);
            if (dfs(i + 1, used | mask)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(0, 0);
}

namespace {

struct SubdivisionSearch {
    const SignedGraph& g;
    int t;
    std::vector<std::vector<std::pair<Vertex, int>>> adj;  // (other, edge id), sorted
    std::vector<Vertex> branch;
    std::vector<char> used;  // blocks interior reuse; branch vertices always set
    std::vector<std::pair<PathWitness, PathWitness>> pairs;
    std::optional<SubdivisionCertificate> found;

    // All simple paths a..b whose interior avoids used vertices, in
    // deterministic DFS order.
    bool for_each_path(Vertex a, Vertex b, const std::function<bool(const PathWitness&)>& fn) {
        PathWitness path;
        path.vertices = {a};
        std::function<bool(Vertex, int)> extend = [&](Vertex at, int sign) -> bool {
            for (auto [w, id] : adj[at]) {
                if (w == b) {
                    path.vertices.push_back(b);
                    path.edge_ids.push_back(id);
                    path.sign = sign * g.edges[id].sign;
                    bool stop = fn(path);
                    path.vertices.pop_back();
                    path.edge_ids.pop_back();
                    if (stop) return true;
                    continue;
                }
                if (used[w]) continue;
                used[w] = 1;
                path.vertices.push_back(w);
                path.edge_ids.push_back(id);
                bool stop = extend(w, sign * g.edges[id].sign);
                path.vertices.pop_back();
                path.edge_ids.pop_back();
                used[w] = 0;
                if (stop) return true;
            }
            return false;
        };
        return extend(a, +1);
    }

    bool connect_pairs(int pr) {
        if (pr == t * (t - 1) / 2) {
            SubdivisionCertificate cert;
            cert.t = t;
            cert.branch_vertices = branch;
            cert.pair_paths = pairs;
            found = std::move(cert);
            return true;
        }
        // pair_rank order: recover (i, j).
        int j = 1;
        while (pair_rank(0, j + 1) <= pr) ++j;
        int i = pr - pair_rank(0, j);
        Vertex a = branch[i], b = branch[j];
        // Paused enumerations keep their interiors flagged in `used`, so
        // nested searches stay disjoint from every live path.
        return for_each_path(a, b, [&](const PathWitness& first) {
            return for_each_path(a, b, [&](const PathWitness& second) {
                if (second.sign == first.sign) return false;
                pairs.push_back({first, second});
                bool ok = connect_pairs(pr + 1);
                if (!ok) pairs.pop_back();
                return ok;
            });
        });
    }
};

}  // namespace

std::optional<SubdivisionCertificate> has_ktilde_subdivision(const SignedGraph& g, int t,
                                                             int bound, int t_bound) {
    if (t < 1) throw std::invalid_argument("pattern order must be at least 1");
    if (g.n > bound || t > t_bound)
        throw std::invalid_argument("subdivision search bound exceeded");
    if (t > g.n) return std::nullopt;

    SubdivisionSearch search{g, t, {}, {}, {}, {}, std::nullopt};
    search.adj.assign(g.n, {});
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges[id];
        if (e.is_loop()) continue;
        search.adj[e.u].push_back({e.v, id});
        search.adj[e.v].push_back({e.u, id});
    }
    for (auto& lst : search.adj) std::sort(lst.begin(), lst.end());

    std::vector<Vertex> branch;
    std::function<bool(int)> choose = [&](int from) -> bool {
        if (static_cast<int>(branch.size()) == t) {
            search.branch = branch;
            search.used.assign(g.n, 0);
            for (Vertex v : branch) search.used[v] = 1;
            search.pairs.clear();
            return search.connect_pairs(0);
        }
        for (Vertex v = from; v < g.n; ++v) {
            branch.push_back(v);
            if (choose(v + 1)) return true;
            branch.pop_back();
        }
        return false;
    };
    choose(0);
    return search.found;
}

MinorCertificate subdivision_to_minor(const SignedGraph& g, const SubdivisionCertificate& cert) {
    int t = cert.t;
    MinorCertificate out;
    out.t = t;
    out.odd = false;
    out.flips.assign(t, 1);

    // Branch set i: the branch vertex plus interiors routed to it; tree
    // edges are the path edges short of the far endpoint, with the path's
    // own edge signs (parallel edges may differ).
    struct TreeEdge {
        Vertex a, b;
        int sign;
    };
    std::vector<std::vector<Vertex>> sets(t);
    std::vector<std::vector<TreeEdge>> tree(t);
    for (int i = 0; i < t; ++i) sets[i] = {cert.branch_vertices[i]};
    for (int j = 1; j < t; ++j)
        for (int i = 0; i < j; ++i) {
            const auto& [p1, p2] = cert.pair_paths[pair_rank(i, j)];
            auto route = [&](const PathWitness& p, int home, bool from_start) {
                // from_start: interiors hang off the path's first vertex.
                size_t len = p.vertices.size();
                for (size_t x = 1; x + 1 < len; ++x) sets[home].push_back(p.vertices[x]);
                if (len <= 2) return;  // no interior, the edge itself crosses
                size_t lo = from_start ? 0 : 1, hi = from_start ? len - 2 : len - 1;
                for (size_t x = lo; x + 1 <= hi; ++x)
                    tree[home].push_back(
                        {p.vertices[x], p.vertices[x + 1], g.edges[p.edge_ids[x]].sign});
            };
            route(p1, i, true);    // p1 runs branch[i] -> branch[j]
            route(p2, j, false);   // p2 interiors attach to branch[j]
        }

    // Switch each set so its tree edges turn positive (walk from the branch
    // vertex).
    std::vector<Switching> full(t, Switching(g.n, 1));
    for (int i = 0; i < t; ++i) {
        std::sort(sets[i].begin(), sets[i].end());
        // Propagate along tree edges until fixed; the tree is small.
        bool changed = true;
        std::vector<char> fixed(g.n, 0);
        fixed[cert.branch_vertices[i]] = 1;
        while (changed) {
            changed = false;
            for (const TreeEdge& te : tree[i]) {
                if (fixed[te.a] && !fixed[te.b]) {
                    full[i][te.b] = full[i][te.a] * te.sign;
                    fixed[te.b] = 1;
                    changed = true;
                } else if (fixed[te.b] && !fixed[te.a]) {
                    full[i][te.a] = full[i][te.b] * te.sign;
                    fixed[te.a] = 1;
                    changed = true;
                }
            }
        }
        Switching local;
        for (Vertex v : sets[i]) local.push_back(full[i][v]);
        out.branch_sets.push_back(sets[i]);
        out.internal_switchings.push_back(std::move(local));
    }

    out.cross_edges.resize(t * (t - 1) / 2);
    std::vector<int> owner(g.n, -1);
    for (int i = 0; i < t; ++i)
        for (Vertex v : sets[i]) owner[v] = i;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges[id];
        if (e.is_loop()) continue;
        int a = owner[e.u], b = owner[e.v];
        if (a < 0 || b < 0 || a == b) continue;
        int sign = e.sign * full[a][e.u] * full[a][e.v] * full[b][e.u] * full[b][e.v];
        out.cross_edges[pair_rank(a, b)].push_back({id, sign});
    }
    return out;
}

// --------------------------------------------------------------------------
// Verifiers. These re-derive every property from the graph, with their own
// traversal code.

namespace {

bool verify_connected(const std::vector<std::vector<Vertex>>& adj, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    std::set<Vertex> inside(set.begin(), set.end()), seen;
    std::vector<Vertex> queue{set[0]};
    seen.insert(set[0]);
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex w : adj[v])
            if (inside.count(w) && !seen.count(w)) {
                seen.insert(w);
                queue.push_back(w);
            }
    }
    return seen.size() == inside.size();
}

}  // namespace

std::vector<std::string> verify_minor(const SignedGraph& g, const MinorCertificate& cert) {
    std::vector<std::string> bad;
    int t = cert.t;
    if (t < 1) bad.push_back("order below 1");
    if (static_cast<int>(cert.branch_sets.size()) != t ||
        static_cast<int>(cert.internal_switchings.size()) != t ||
        static_cast<int>(cert.flips.size()) != t ||
        static_cast<int>(cert.cross_edges.size()) != t * (t - 1) / 2) {
        bad.push_back("shape mismatch");
        return bad;
    }
    std::vector<int> owner(g.n, -1);
    std::vector<Switching> full(t, Switching(g.n, 1));
    for (int i = 0; i < t; ++i) {
        const auto& set = cert.branch_sets[i];
        if (set.empty()) bad.push_back("empty branch set");
        if (!std::is_sorted(set.begin(), set.end()) ||
            std::adjacent_find(set.begin(), set.end()) != set.end())
            bad.push_back("branch set not sorted/unique");
        if (cert.internal_switchings[i].size() != set.size()) {
            bad.push_back("switching length mismatch");
            continue;
        }
        for (size_t j = 0; j < set.size(); ++j) {
            Vertex v = set[j];
            if (v < 0 || v >= g.n) {
                bad.push_back("vertex out of range");
                continue;
            }
            if (owner[v] != -1) bad.push_back("disjointness: vertex " + std::to_string(v));
            owner[v] = i;
            int s = cert.internal_switchings[i][j];
            if (s != 1 && s != -1) bad.push_back("bad switching entry");
            full[i][v] = s;
        }
        if (cert.flips[i] != 1 && cert.flips[i] != -1) bad.push_back("bad flip");
    }
    if (!bad.empty()) return bad;

    // Positive edges inside each set must connect and span it.
    for (int i = 0; i < t; ++i) {
        std::vector<std::vector<Vertex>> pos_adj(g.n);
        for (const Edge& e : g.edges) {
            if (e.is_loop() || owner[e.u] != i || owner[e.v] != i) continue;
            if (e.sign * full[i][e.u] * full[i][e.v] != 1) continue;
            pos_adj[e.u].push_back(e.v);
            pos_adj[e.v].push_back(e.u);
        }
        if (!verify_connected(pos_adj, cert.branch_sets[i]))
            bad.push_back("branch set " + std::to_string(i) +
                          " not spanned by positive edges under its switching");
    }

    // Recompute the cross tables and compare with the certificate.
    for (int j = 1; j < t; ++j)
        for (int i = 0; i < j; ++i) {
            std::vector<MinorCertificate::CrossEdge> actual;
            for (int id = 0; id < g.edge_count(); ++id) {
                const Edge& e = g.edges[id];
                if (e.is_loop()) continue;
                int a = owner[e.u], b = owner[e.v];
                if (!((a == i && b == j) || (a == j && b == i))) continue;
                int sign = e.sign * full[i][e.u] * full[i][e.v] * full[j][e.u] * full[j][e.v] *
                           cert.flips[i] * cert.flips[j];
                actual.push_back({id, sign});
            }
            auto claimed = cert.cross_edges[pair_rank(i, j)];
            auto by_id = [](const MinorCertificate::CrossEdge& x,
                            const MinorCertificate::CrossEdge& y) { return x.edge_id < y.edge_id; };
            std::sort(claimed.begin(), claimed.end(), by_id);
            std::sort(actual.begin(), actual.end(), by_id);
            bool same = claimed.size() == actual.size();
            for (size_t x = 0; same && x < claimed.size(); ++x)
                same = claimed[x].edge_id == actual[x].edge_id && claimed[x].sign == actual[x].sign;
            if (!same) bad.push_back("cross edge table mismatch for pair");
            bool pos = false, neg = false;
            for (const auto& ce : actual) (ce.sign > 0 ? pos : neg) = true;
            if (cert.odd) {
                if (!neg)
                    bad.push_back("missing negative cross edge for pair " + std::to_string(i) +
                                  "," + std::to_string(j));
            } else if (!pos || !neg) {
                bad.push_back("missing sign for pair " + std::to_string(i) + "," +
                              std::to_string(j));
            }
        }
    return bad;
}

std::vector<std::string> verify_even_odd(const UnsignedGraph& g, const EvenOddCertificate& cert) {
    std::vector<std::string> bad;
    int t = cert.t;
    if (static_cast<int>(cert.coloring.size()) != g.n) {
        bad.push_back("coloring size");
        return bad;
    }
    for (int c : cert.coloring)
        if (c != 0 && c != 1) bad.push_back("coloring value");
    if (static_cast<int>(cert.tree_vertices.size()) != t ||
        static_cast<int>(cert.tree_edges.size()) != t) {
        bad.push_back("tree count");
        return bad;
    }
    std::vector<int> owner(g.n, -1);
    for (int i = 0; i < t; ++i) {
        const auto& verts = cert.tree_vertices[i];
        if (verts.empty()) bad.push_back("empty tree");
        for (Vertex v : verts) {
            if (v < 0 || v >= g.n) {
                bad.push_back("vertex range");
                continue;
            }
            if (owner[v] != -1) bad.push_back("trees overlap at " + std::to_string(v));
            owner[v] = i;
        }
        if (cert.tree_edges[i].size() + 1 != verts.size()) {
            bad.push_back("edge count is not vertices-1");
            continue;
        }
        // Union-find over the tree edges.
        std::vector<int> parent(g.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (auto [u, v] : cert.tree_edges[i]) {
            if (u < 0 || u >= g.n || v < 0 || v >= g.n || !(g.adj[u] >> v & 1u)) {
                bad.push_back("tree edge not in graph");
                continue;
            }
            if (owner[u] != i || owner[v] != i) bad.push_back("tree edge leaves its set");
            if (cert.coloring[u] == cert.coloring[v]) bad.push_back("tree edge monochromatic");
            if (find(u) == find(v)) bad.push_back("tree edge closes a cycle");
            parent[find(u)] = find(v);
        }
        int root = find(verts[0]);
        for (Vertex v : verts)
            if (find(v) != root) bad.push_back("tree disconnected");
    }
    for (int j = 1; j < t; ++j)
        for (int i = 0; i < j; ++i) {
            bool mono = false, proper = false;
            for (int u = 0; u < g.n; ++u) {
                if (owner[u] != i) continue;
                for (int v = 0; v < g.n; ++v) {
                    if (owner[v] != j || !(g.adj[u] >> v & 1u)) continue;
                    (cert.coloring[u] == cert.coloring[v] ? mono : proper) = true;
                }
            }
            if (!mono)
                bad.push_back("no monochromatic edge between trees " + std::to_string(i) + "," +
                              std::to_string(j));
            if (!proper)
                bad.push_back("no properly colored edge between trees " + std::to_string(i) + "," +
                              std::to_string(j));
        }
    return bad;
}

namespace {

// Path validity shared by the subdivision and dichotomy verifiers: edges
// exist, thread consecutively, vertices distinct, sign matches.
std::optional<std::string> check_path(const SignedGraph& g, const PathWitness& p) {
    if (p.vertices.size() < 2 || p.edge_ids.size() + 1 != p.vertices.size())
        return "path shape";
    std::set<Vertex> seen;
    for (Vertex v : p.vertices) {
        if (v < 0 || v >= g.n) return "path vertex range";
        if (!seen.insert(v).second) return "path repeats a vertex";
    }
    int sign = 1;
    for (size_t i = 0; i < p.edge_ids.size(); ++i) {
        int id = p.edge_ids[i];
        if (id < 0 || id >= g.edge_count()) return "path edge range";
        const Edge& e = g.edges[id];
        Vertex a = p.vertices[i], b = p.vertices[i + 1];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return "path edge mismatch";
        sign *= e.sign;
    }
    if (sign != p.sign) return "path sign mismatch";
    return std::nullopt;
}

}  // namespace

std::vector<std::string> verify_subdivision(const SignedGraph& g,
                                            const SubdivisionCertificate& cert) {
    std::vector<std::string> bad;
    int t = cert.t;
    if (static_cast<int>(cert.branch_vertices.size()) != t) {
        bad.push_back("branch vertex count");
        return bad;
    }
    std::set<Vertex> branch(cert.branch_vertices.begin(), cert.branch_vertices.end());
    if (static_cast<int>(branch.size()) != t) bad.push_back("branch vertices repeat");
    for (Vertex v : cert.branch_vertices)
        if (v < 0 || v >= g.n) bad.push_back("branch vertex range");
    if (static_cast<int>(cert.pair_paths.size()) != t * (t - 1) / 2) {
        bad.push_back("pair count");
        return bad;
    }
    std::set<Vertex> interiors;
    auto check_pair_path = [&](const PathWitness& p, Vertex a, Vertex b) {
        if (auto err = check_path(g, p)) {
            bad.push_back(*err);
            return;
        }
        if (p.vertices.front() != a || p.vertices.back() != b)
            bad.push_back("path endpoints disagree with branch pair");
        for (size_t x = 1; x + 1 < p.vertices.size(); ++x) {
            Vertex v = p.vertices[x];
            if (branch.count(v)) bad.push_back("interior hits a branch vertex");
            if (!interiors.insert(v).second) bad.push_back("interior vertex reused");
        }
    };
    for (int j = 1; j < t; ++j)
        for (int i = 0; i < j; ++i) {
            const auto& [p1, p2] = cert.pair_paths[pair_rank(i, j)];
            check_pair_path(p1, cert.branch_vertices[i], cert.branch_vertices[j]);
            check_pair_path(p2, cert.branch_vertices[i], cert.branch_vertices[j]);
            if (p1.sign == p2.sign) bad.push_back("pair paths share a sign");
        }
    return bad;
}

namespace {

// Independent scan used by the hitting-set verifier: any negative path with
// ends in H and interior outside H, avoiding X entirely?
bool exists_negative_h_path(const SignedGraph& g, const std::vector<Vertex>& h_set,
                            const std::vector<Vertex>& blocked_set) {
    std::vector<char> in_h(g.n, 0), blocked(g.n, 0);
    for (Vertex v : h_set) in_h[v] = 1;
    for (Vertex v : blocked_set) blocked[v] = 1;
    std::vector<std::vector<std::pair<Vertex, int>>> adj(g.n);
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges[id];
        if (e.is_loop()) continue;
        adj[e.u].push_back({e.v, id});
        adj[e.v].push_back({e.u, id});
    }
    std::vector<char> on_path(g.n, 0);
    std::function<bool(Vertex, Vertex, int)> walk = [&](Vertex start, Vertex at, int sign) {
        for (auto [w, id] : adj[at]) {
            int s2 = sign * g.edges[id].sign;
            if (blocked[w] || on_path[w]) continue;
            if (in_h[w]) {
                if (w != start && s2 == -1) return true;
                continue;
            }
            on_path[w] = 1;
            if (walk(start, w, s2)) return true;
            on_path[w] = 0;
        }
        return false;
    };
    for (Vertex s : h_set) {
        if (blocked[s]) continue;
        on_path.assign(g.n, 0);
        on_path[s] = 1;
        if (walk(s, s, +1)) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> verify_dichotomy(const SignedGraph& g, const DichotomyResult& res) {
    std::vector<std::string> bad;
    std::vector<char> in_h(g.n, 0);
    for (Vertex v : res.h_set) {
        if (v < 0 || v >= g.n) {
            bad.push_back("H vertex range");
            return bad;
        }
        in_h[v] = 1;
    }
    switch (res.kind) {
        case DichotomyResult::Kind::Paths: {
            if (static_cast<int>(res.paths.size()) != res.k) bad.push_back("path count");
            std::set<Vertex> all;
            for (const auto& p : res.paths) {
                if (auto err = check_path(g, p)) {
                    bad.push_back(*err);
                    continue;
                }
                if (p.sign != -1) bad.push_back("path not negative");
                if (!in_h[p.vertices.front()] || !in_h[p.vertices.back()])
                    bad.push_back("path end outside H");
                for (size_t x = 1; x + 1 < p.vertices.size(); ++x)
                    if (in_h[p.vertices[x]]) bad.push_back("path interior inside H");
                for (Vertex v : p.vertices)
                    if (!all.insert(v).second) bad.push_back("paths share vertex " + std::to_string(v));
            }
            break;
        }
        case DichotomyResult::Kind::HittingSet: {
            if (static_cast<int>(res.hitting_set.size()) > 2 * res.k - 2)
                bad.push_back("hitting set too large");
            for (Vertex v : res.hitting_set)
                if (v < 0 || v >= g.n) bad.push_back("hitting set vertex range");
            if (bad.empty() && exists_negative_h_path(g, res.h_set, res.hitting_set))
                bad.push_back("a negative H-path avoids the hitting set");
            break;
        }
        case DichotomyResult::Kind::Defect:
            bad.push_back("defect result");
            break;
    }
    return bad;
}

namespace {

struct DichotomySearch {
    const SignedGraph& g;
    std::vector<char> in_h;
    std::vector<std::vector<std::pair<Vertex, int>>> adj;
    std::vector<char> blocked;

    std::vector<PathWitness> picked;

    // Negative H-paths from start (their lower end), lex order. The path
    // buffer is owned by the enumeration level, so callbacks may launch
    // nested enumerations freely.
    bool from_start(PathWitness& path, Vertex start, Vertex at, int sign,
                    const std::function<bool(const PathWitness&)>& fn) {
        for (auto [w, id] : adj[at]) {
            if (blocked[w]) continue;
            int s2 = sign * g.edges[id].sign;
            if (in_h[w]) {
                if (w <= start || s2 != -1) continue;
                path.vertices.push_back(w);
                path.edge_ids.push_back(id);
                path.sign = s2;
                bool stop = fn(path);
                path.vertices.pop_back();
                path.edge_ids.pop_back();
                if (stop) return true;
                continue;
            }
            if (std::find(path.vertices.begin(), path.vertices.end(), w) != path.vertices.end())
                continue;
            path.vertices.push_back(w);
            path.edge_ids.push_back(id);
            if (from_start(path, start, w, s2, fn)) return true;
            path.vertices.pop_back();
            path.edge_ids.pop_back();
        }
        return false;
    }

    // Families are enumerated with strictly increasing minimum endpoints.
    bool find_disjoint(int need, Vertex min_start) {
        if (need == 0) return true;
        for (Vertex s = min_start; s < g.n; ++s) {
            if (!in_h[s] || blocked[s]) continue;
            PathWitness path;
            path.vertices = {s};
            bool done = from_start(path, s, s, +1, [&](const PathWitness& got) {
                PathWitness keep = got;
                for (Vertex v : keep.vertices) blocked[v] = 1;
                picked.push_back(keep);
                bool ok = find_disjoint(need - 1, s + 1);
                if (!ok) picked.pop_back();
                for (Vertex v : keep.vertices) blocked[v] = 0;
                return ok;
            });
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

DichotomyResult negative_path_dichotomy(const SignedGraph& g, const std::vector<Vertex>& h_set,
                                        int k, int n_bound, int k_bound) {
    if (g.n > n_bound || k > k_bound || k < 1)
        throw std::invalid_argument("dichotomy bounds exceeded");
    std::vector<Vertex> h(h_set);
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (h.empty()) throw std::invalid_argument("H must be nonempty");
    for (Vertex v : h)
        if (v < 0 || v >= g.n) throw std::invalid_argument("H vertex out of range");

    // H's internal positive edges must connect it (switch beforehand).
    {
        std::vector<char> in_h(g.n, 0);
        for (Vertex v : h) in_h[v] = 1;
        std::vector<std::vector<Vertex>> pos(g.n);
        for (const Edge& e : g.edges) {
            if (e.is_loop() || e.sign != 1 || !in_h[e.u] || !in_h[e.v]) continue;
            pos[e.u].push_back(e.v);
            pos[e.v].push_back(e.u);
        }
        std::set<Vertex> seen{h[0]};
        std::vector<Vertex> queue{h[0]};
        while (!queue.empty()) {
            Vertex v = queue.back();
            queue.pop_back();
            for (Vertex w : pos[v])
                if (!seen.count(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
        }
        if (seen.size() != h.size())
            throw std::invalid_argument("H is not connected by its internal positive edges");
    }

    DichotomyResult res;
    res.k = k;
    res.h_set = h;

    DichotomySearch search{g, std::vector<char>(g.n, 0), {}, std::vector<char>(g.n, 0), {}};
    for (Vertex v : h) search.in_h[v] = 1;
    search.adj.assign(g.n, {});
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges[id];
        if (e.is_loop()) continue;
        search.adj[e.u].push_back({e.v, id});
        search.adj[e.v].push_back({e.u, id});
    }
    for (auto& lst : search.adj) std::sort(lst.begin(), lst.end());

    if (search.find_disjoint(k, 0)) {
        res.kind = DichotomyResult::Kind::Paths;
        res.paths = search.picked;
        return res;
    }

    // No k disjoint paths: look for a small transversal, sizes ascending,
    // subsets in lex order.
    std::vector<Vertex> subset;
    std::function<bool(int, Vertex)> pick = [&](int need, Vertex from) -> bool {
        if (need == 0) {
            std::vector<char> blocked(g.n, 0);
            for (Vertex v : subset) blocked[v] = 1;
            DichotomySearch probe{g, search.in_h, search.adj, blocked, {}};
            return !probe.find_disjoint(1, 0);
        }
        for (Vertex v = from; v < g.n; ++v) {
            subset.push_back(v);
            if (pick(need - 1, v + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= 2 * k - 2; ++size) {
        subset.clear();
        if (pick(size, 0)) {
            res.kind = DichotomyResult::Kind::HittingSet;
            res.hitting_set = subset;
            return res;
        }
    }
    res.kind = DichotomyResult::Kind::Defect;
    return res;
}

}  // namespace sgchroma
