#include "sgchroma/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace sgchroma {

int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

namespace {

struct PairCounts {
    int pos = 0;
    int neg = 0;
};

// Switching-invariant skeleton of one vertex ordering: loop counts per
// position, then per position d the pair categories {min,max} against
// positions 0..d-1. Appended blockwise so prefixes compare during the
// permutation search.
struct Skeleton {
    std::vector<std::uint8_t> bytes;

    void append_loop(const PairCounts& c) {
        bytes.push_back(static_cast<std::uint8_t>(c.pos));
        bytes.push_back(static_cast<std::uint8_t>(c.neg));
    }
    void append_pair(const PairCounts& c) {
        bytes.push_back(static_cast<std::uint8_t>(std::min(c.pos, c.neg)));
        bytes.push_back(static_cast<std::uint8_t>(std::max(c.pos, c.neg)));
    }
};

struct CanonState {
    int n;
    std::vector<PairCounts> pair;  // indexed by pair_index over old labels
    std::vector<PairCounts> loop;  // per old vertex

    std::vector<std::uint8_t> best;     // minimal skeleton found so far
    std::vector<std::vector<int>> tied; // orderings achieving it
    std::vector<int> order;             // order[position] = old vertex
    std::vector<char> used;

    const PairCounts& at(int old_u, int old_v) const { return pair[pair_index(old_u, old_v)]; }
};

// Prefixes are compared in full against the incumbent at every node: once
// the first leaf below a strictly-smaller prefix installs itself as best,
// its siblings again prune meaningfully.
void search(CanonState& st, int d, std::vector<std::uint8_t>& prefix) {
    if (d == st.n) {
        if (st.best.empty() || prefix < st.best) {
            st.best = prefix;
            st.tied.clear();
        }
        if (prefix == st.best) st.tied.push_back(st.order);
        return;
    }
    for (int v = 0; v < st.n; ++v) {
        if (st.used[v]) continue;
        size_t keep = prefix.size();
        Skeleton sk;
        sk.bytes.reserve(2 * (d + 1));
        sk.append_loop(st.loop[v]);
        for (int i = 0; i < d; ++i) sk.append_pair(st.at(st.order[i], v));
        prefix.insert(prefix.end(), sk.bytes.begin(), sk.bytes.end());
        bool viable = st.best.empty() ||
                      !std::lexicographical_compare(st.best.begin(),
                                                    st.best.begin() + prefix.size(),
                                                    prefix.begin(), prefix.end());
        if (viable) {
            st.order[d] = v;
            st.used[v] = 1;
            search(st, d + 1, prefix);
            st.used[v] = 0;
        }
        prefix.resize(keep);
    }
}

// Minimal orientation bitstring over all switchings, for a fixed ordering.
// Coordinates are the orientable pairs (pos != neg) in pair_index order of
// the *new* labels; bit 0 means positives dominate. The reachable set is
// the GF(2) span of vertex stars; the min-lex coset element is found by
// echelon reduction in coordinate order.
std::vector<char> min_orientation(const CanonState& st, const std::vector<int>& order) {
    int n = st.n;
    std::vector<int> coord(n * (n - 1) / 2, -1);
    int k = 0;
    std::uint32_t target = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const PairCounts& c = st.at(order[i], order[j]);
            if (c.pos == c.neg) continue;
            coord[pair_index(i, j)] = k;
            if (c.pos < c.neg) target |= 1u << k;
            ++k;
        }
    }
    std::vector<std::uint32_t> gen(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coord[pair_index(i, j)] >= 0) {
                gen[i] |= 1u << coord[pair_index(i, j)];
                gen[j] |= 1u << coord[pair_index(i, j)];
            }
    // Echelon basis keyed by lowest set bit.
    std::array<std::uint32_t, 32> basis{};
    for (std::uint32_t v : gen) {
        while (v) {
            int p = std::countr_zero(v);
            if (!basis[p]) {
                basis[p] = v;
                break;
            }
            v ^= basis[p];
        }
    }
    for (int c = 0; c < k; ++c)
        if ((target >> c & 1u) && basis[c]) target ^= basis[c];
    std::vector<char> bits(k);
    for (int c = 0; c < k; ++c) bits[c] = static_cast<char>(target >> c & 1u);
    return bits;
}

}  // namespace

std::string canonical_form(const SignedGraph& g, int cap) {
    if (g.n > cap)
        throw std::invalid_argument("canonical_form: n=" + std::to_string(g.n) +
                                    " exceeds cap " + std::to_string(cap));
    CanonState st;
    st.n = g.n;
    st.pair.assign(g.n * std::max(0, g.n - 1) / 2, {});
    st.loop.assign(g.n, {});
    for (const Edge& e : g.edges) {
        PairCounts& c = e.is_loop() ? st.loop[e.u] : st.pair[pair_index(e.u, e.v)];
        (e.sign > 0 ? c.pos : c.neg)++;
    }
    st.order.assign(g.n, 0);
    st.used.assign(g.n, 0);

    std::vector<std::uint8_t> prefix;
    if (g.n == 0) {
        st.tied.push_back({});
    } else {
        search(st, 0, prefix);
    }

    std::vector<char> best_bits;
    bool have = false;
    for (const auto& order : st.tied) {
        auto bits = min_orientation(st, order);
        if (!have || bits < best_bits) {
            best_bits = std::move(bits);
            have = true;
        }
    }

    std::ostringstream out;
    out << "SGC1 " << g.n << ' ';
    for (std::uint8_t b : st.best) out << int(b) << ',';
    out << ' ';
    for (char b : best_bits) out << (b ? '1' : '0');
    return out.str();
}

SignedGraph canonical_representative(const std::string& form) {
    std::istringstream in(form);
    std::string tag;
    int n;
    if (!(in >> tag >> n) || tag != "SGC1") throw std::invalid_argument("bad canonical form");
    std::string skeleton, bits;
    in >> skeleton >> bits;
    std::vector<int> bytes;
    std::istringstream sk(skeleton);
    std::string tok;
    while (std::getline(sk, tok, ','))
        if (!tok.empty()) bytes.push_back(std::stoi(tok));

    SignedGraph g;
    g.n = n;
    size_t at = 0, bit = 0;
    auto take = [&]() {
        if (at >= bytes.size()) throw std::invalid_argument("truncated canonical form");
        return bytes[at++];
    };
    for (int d = 0; d < n; ++d) {
        int lp = take(), ln = take();
        for (int r = 0; r < lp; ++r) g.edges.push_back({d, d, +1});
        for (int r = 0; r < ln; ++r) g.edges.push_back({d, d, -1});
        for (int i = 0; i < d; ++i) {
            int lo = take(), hi = take();
            int pos = hi, neg = lo;
            if (lo != hi) {
                if (bit >= bits.size()) throw std::invalid_argument("truncated orientation bits");
                if (bits[bit++] == '1') std::swap(pos, neg);
            }
            for (int r = 0; r < pos; ++r) g.edges.push_back({i, d, +1});
            for (int r = 0; r < neg; ++r) g.edges.push_back({i, d, -1});
        }
    }
    return g;
}

namespace {

struct MaskState {
    int n;
    const std::vector<std::uint8_t>* adj;  // adjacency matrix, row-major
    AdjMask best;
    bool have = false;
    std::array<int, 8> order{};
    std::uint8_t used = 0;
};

void mask_search(MaskState& st, int d, AdjMask acc, int bits, bool lt) {
    if (d == st.n) {
        if (!st.have || acc < st.best) {
            st.best = acc;
            st.have = true;
        }
        return;
    }
    for (int v = 0; v < st.n; ++v) {
        if (st.used & (1 << v)) continue;
        AdjMask block = 0;
        for (int i = 0; i < d; ++i)
            if ((*st.adj)[st.order[i] * st.n + v]) block |= 1u << i;
        AdjMask next = acc | (block << bits);
        bool nlt = lt;
        if (!nlt && st.have) {
            AdjMask mask = (bits + d > 0) ? ((1u << (bits + d)) - 1) : 0;
            AdjMask bprefix = st.best & mask;
            if (next > bprefix) continue;
            if (next < bprefix) nlt = true;
        }
        st.used |= 1 << v;
        st.order[d] = v;
        mask_search(st, d + 1, next, bits + d, nlt);
        st.used &= ~(1 << v);
    }
}

}  // namespace

AdjMask unsigned_canonical(int n, AdjMask adj) {
    if (n > 8) throw std::invalid_argument("unsigned_canonical: n > 8");
    std::vector<std::uint8_t> mat(n * n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (adj >> pair_index(i, j) & 1u) mat[i * n + j] = mat[j * n + i] = 1;
    MaskState st;
    st.n = n;
    st.adj = &mat;
    mask_search(st, 0, 0, 0, false);
    return st.n == 0 ? 0 : st.best;
}

SignedGraph mask_to_all_negative(int n, AdjMask adj) {
    SignedGraph g;
    g.n = n;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (adj >> pair_index(i, j) & 1u) g.edges.push_back({i, j, -1});
    return g;
}

}  // namespace sgchroma
