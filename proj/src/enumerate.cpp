#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgchroma/canonical.hpp"
#include "sgchroma/harness.hpp"

namespace sgchroma {

UnsignedGraph complete_graph(int n) {
    UnsignedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

UnsignedGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    UnsignedGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

UnsignedGraph path_graph(int n) {
    UnsignedGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SignedGraph tilde(const UnsignedGraph& g) {
    SignedGraph out;
    out.n = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adj[u] >> v & 1u) {
                out.edges.push_back({u, v, +1});
                out.edges.push_back({u, v, -1});
            }
    return out;
}

SignedGraph minus(const UnsignedGraph& g) {
    SignedGraph out;
    out.n = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adj[u] >> v & 1u) out.edges.push_back({u, v, -1});
    return out;
}

namespace {

double unit_draw(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SignedGraph random_signed_graph(int n, double edge_p, double neg_p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative order");
    std::mt19937_64 rng(seed);
    SignedGraph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (unit_draw(rng) >= edge_p) continue;
            g.edges.push_back({u, v, unit_draw(rng) < neg_p ? -1 : +1});
        }
    return g;
}

std::vector<std::uint32_t> enumerate_unsigned(int n, int max_n) {
    if (n > max_n || n > 7)
        throw std::invalid_argument("unsigned enumeration bound exceeded");
    if (n == 0) return {0};
    long total = 1L << (n * (n - 1) / 2);
    std::vector<std::uint32_t> reps;
#pragma omp parallel
    {
        std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 1024) nowait
        for (long m = 0; m < total; ++m) {
            auto mask = static_cast<AdjMask>(m);
            if (unsigned_canonical(n, mask) == mask) local.push_back(mask);
        }
#pragma omp critical
        reps.insert(reps.end(), local.begin(), local.end());
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

namespace {

// Signatures on the non-forest single edges form an exact transversal of
// the switching action: a spanning forest of the single-edge graph is
// switched all-positive, and the only switchings preserving that are
// constant per component, which fix every single edge.
struct SignatureSpace {
    std::vector<std::pair<int, int>> forest;     // edges forced positive
    std::vector<std::pair<int, int>> free_edges; // sign chosen per candidate
};

SignatureSpace signature_space(int n, const std::vector<std::pair<int, int>>& single_edges) {
    SignatureSpace out;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < static_cast<int>(single_edges.size()); ++i) {
        adj[single_edges[i].first].push_back(i);
        adj[single_edges[i].second].push_back(i);
    }
    std::vector<char> in_forest(single_edges.size(), 0);
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        comp[root] = root;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : adj[v]) {
                auto [a, b] = single_edges[id];
                int w = a == v ? b : a;
                if (comp[w] == -1) {
                    comp[w] = root;
                    in_forest[id] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    for (size_t i = 0; i < single_edges.size(); ++i)
        (in_forest[i] ? out.forest : out.free_edges).push_back(single_edges[i]);
    return out;
}

}  // namespace

std::vector<SignedGraph> enumerate_all(const EnumOptions& opt) {
    int n = opt.n;
    if (n > opt.max_n) throw std::invalid_argument("enumeration bound exceeded");
    if (opt.digons && n > 5)
        throw std::invalid_argument("digon-state enumeration capped at n = 5");
    if (n == 0) return {SignedGraph{}};

    auto unsigned_reps = enumerate_unsigned(n, 7);
    std::set<std::string> forms;

#pragma omp parallel for schedule(dynamic)
    for (size_t ui = 0; ui < unsigned_reps.size(); ++ui) {
        AdjMask mask = unsigned_reps[ui];
        std::vector<std::pair<int, int>> pairs;
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (mask >> pair_index(u, v) & 1u) pairs.push_back({u, v});
        int m = static_cast<int>(pairs.size());

        std::set<std::string> local;
        long digon_subsets = opt.digons ? (1L << m) : 1;
        for (long dm = 0; dm < digon_subsets; ++dm) {
            std::vector<std::pair<int, int>> singles, digons;
            for (int i = 0; i < m; ++i)
                ((dm >> i & 1) ? digons : singles).push_back(pairs[i]);
            auto space = signature_space(n, singles);
            int free_count = static_cast<int>(space.free_edges.size());

            long loop_total = 1;
            if (opt.loops)
                for (int v = 0; v < n; ++v) loop_total *= 3;

            for (long lm = 0; lm < loop_total; ++lm) {
                for (long sm = 0; sm < (1L << free_count); ++sm) {
                    SignedGraph g;
                    g.n = n;
                    for (auto [u, v] : space.forest) g.edges.push_back({u, v, +1});
                    for (int i = 0; i < free_count; ++i)
                        g.edges.push_back({space.free_edges[i].first, space.free_edges[i].second,
                                           (sm >> i & 1) ? -1 : +1});
                    for (auto [u, v] : digons) {
                        g.edges.push_back({u, v, +1});
                        g.edges.push_back({u, v, -1});
                    }
                    if (opt.loops) {
                        long rest = lm;
                        for (int v = 0; v < n; ++v) {
                            int state = rest % 3;
                            rest /= 3;
                            if (state == 1) g.edges.push_back({v, v, +1});
                            if (state == 2) g.edges.push_back({v, v, -1});
                        }
                    }
                    local.insert(canonical_form(g));
                }
            }
        }
#pragma omp critical
        forms.insert(local.begin(), local.end());
    }

    std::vector<SignedGraph> out;
    out.reserve(forms.size());
    for (const std::string& f : forms) out.push_back(canonical_representative(f));
    return out;
}

int effective_threads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("SGCHROMA_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace sgchroma
