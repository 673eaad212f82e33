#include "sgchroma/fraclp.hpp"

#include <algorithm>
#include <bit>

namespace sgchroma {

namespace {

// Tableau rows: one per packing constraint (covering column), last row is
// the objective. Columns: n packing variables, m slacks, rhs.
struct Tableau {
    int n, m;
    std::vector<std::vector<Rat>> d;
    std::vector<int> basis;  // basic variable per row

    Tableau(const std::vector<std::uint32_t>& columns, int n_)
        : n(n_), m(static_cast<int>(columns.size())), d(m + 1, std::vector<Rat>(n + m + 1, Rat(0))),
          basis(m) {
        for (int i = 0; i < m; ++i) {
            for (int v = 0; v < n; ++v)
                if (columns[i] >> v & 1u) d[i][v] = 1;
            d[i][n + i] = 1;
            d[i][n + m] = 1;
            basis[i] = n + i;
        }
        for (int v = 0; v < n; ++v) d[m][v] = -1;  // maximize sum of y_v
    }

    void pivot(int row, int col) {
        Rat inv = d[row][col];
        for (Rat& x : d[row]) x /= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == row || d[i][col] == 0) continue;
            Rat f = d[i][col];
            for (int j = 0; j <= n + m; ++j) d[i][j] -= f * d[row][j];
        }
        basis[row] = col;
    }

    void solve() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n + m; ++j)
                if (d[m][j] < 0) {
                    enter = j;
                    break;  // Bland: lowest index
                }
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (d[i][enter] <= 0) continue;
                Rat ratio = d[i][n + m] / d[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("unbounded packing LP");
            pivot(leave, enter);
        }
    }
};

}  // namespace

CoveringSolution solve_covering_lp(const std::vector<std::uint32_t>& columns, int n) {
    std::uint32_t covered = 0;
    for (std::uint32_t c : columns) covered |= c;
    std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;
    if ((covered & full) != full) throw std::invalid_argument("infeasible: uncovered vertex");
    if (n == 0) return {Rat(0), std::vector<Rat>(columns.size(), Rat(0)), {}};

    Tableau t(columns, n);
    t.solve();

    CoveringSolution out;
    out.value = t.d[t.m][n + t.m];
    out.weights.assign(columns.size(), Rat(0));
    for (int i = 0; i < t.m; ++i) out.weights[i] = t.d[t.m][n + i];
    out.dual.assign(n, Rat(0));
    for (int i = 0; i < t.m; ++i)
        if (t.basis[i] < n) out.dual[t.basis[i]] = t.d[i][n + t.m];

    // Certify: covering weights feasible, packing point feasible, objectives
    // equal. Weak duality then pins both as optimal.
    Rat wtotal(0);
    for (const Rat& w : out.weights) {
        if (w < 0) throw std::logic_error("negative covering weight");
        wtotal += w;
    }
    for (int v = 0; v < n; ++v) {
        Rat sum(0);
        for (size_t i = 0; i < columns.size(); ++i)
            if (columns[i] >> v & 1u) sum += out.weights[i];
        if (sum < 1) throw std::logic_error("covering constraint violated");
    }
    Rat ytotal(0);
    for (const Rat& y : out.dual) {
        if (y < 0) throw std::logic_error("negative packing value");
        ytotal += y;
    }
    for (std::uint32_t c : columns) {
        Rat sum(0);
        for (int v = 0; v < n; ++v)
            if (c >> v & 1u) sum += out.dual[v];
        if (sum > 1) throw std::logic_error("packing constraint violated");
    }
    if (wtotal != out.value || ytotal != out.value)
        throw std::logic_error("objective mismatch between primal and dual");
    return out;
}

ChiFb chi_fb(const SignedGraph& g, int bound) {
    if (g.has_negative_loop())
        throw std::invalid_argument("chi_fb undefined with a negative loop");
    if (g.n > bound)
        throw std::invalid_argument("chi_fb: n=" + std::to_string(g.n) + " exceeds bound " +
                                    std::to_string(bound));
    ChiFb out;
    if (g.n == 0) {
        out.value = 0;
        out.witness.total = 0;
        return out;
    }
    auto columns = balanced_set_masks(g, /*maximal_only=*/true, bound, bound);
    auto sol = solve_covering_lp(columns, g.n);
    out.value = sol.value;
    out.witness.total = sol.value;
    for (size_t i = 0; i < columns.size(); ++i) {
        if (sol.weights[i] == 0) continue;
        std::vector<Vertex> set;
        for (Vertex v = 0; v < g.n; ++v)
            if (columns[i] >> v & 1u) set.push_back(v);
        out.witness.sets.push_back(std::move(set));
        out.witness.weights.push_back(sol.weights[i]);
    }
    if (!weighting_valid(g, out.witness)) throw std::logic_error("witness failed verification");
    return out;
}

bool weighting_valid(const SignedGraph& g, const RationalWeighting& w) {
    if (w.sets.size() != w.weights.size()) return false;
    Rat total(0);
    std::vector<Rat> cover(g.n, Rat(0));
    for (size_t i = 0; i < w.sets.size(); ++i) {
        if (w.weights[i] < 0) return false;
        if (!is_balanced(induced(g, w.sets[i]).graph).balanced()) return false;
        for (Vertex v : w.sets[i]) {
            if (v < 0 || v >= g.n) return false;
            cover[v] += w.weights[i];
        }
        total += w.weights[i];
    }
    if (total != w.total) return false;
    for (Vertex v = 0; v < g.n; ++v)
        if (cover[v] < 1) return false;
    return true;
}

Rat chi_f(const UnsignedGraph& g, int bound) {
    if (g.n > bound)
        throw std::invalid_argument("chi_f: n=" + std::to_string(g.n) + " exceeds bound " +
                                    std::to_string(bound));
    if (g.n == 0) return Rat(0);
    std::uint32_t full = (1u << g.n) - 1;
    std::vector<std::uint32_t> columns;
    for (std::uint32_t s = 1; s <= full; ++s) {
        bool independent = true;
        for (std::uint32_t rest = s; rest && independent;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.adj[v] & s) independent = false;
        }
        if (!independent) continue;
        bool maximal = true;
        for (int v = 0; v < g.n && maximal; ++v)
            if (!(s >> v & 1u) && !(g.adj[v] & s)) maximal = false;
        if (maximal) columns.push_back(s);
    }
    return solve_covering_lp(columns, g.n).value;
}

}  // namespace sgchroma
