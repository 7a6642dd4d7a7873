#include "clawkit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace clawkit {

namespace {

// Canonical labeling on adjacency rows packed into single 64-bit words.
// Equitable refinement (cells ordered invariantly by split signatures),
// homogeneous-partition shortcut, individualization on the first non-trivial
// cell, minimum packed upper-triangle bit string over all leaves.
struct Canon {
    int n;
    const std::uint64_t* rows;
    using Cells = std::vector<std::vector<int>>;

    std::vector<std::uint64_t> best;
    std::vector<int> best_order;
    bool has_best = false;

    // packed upper-triangle bits x(0,1) x(0,2) x(1,2) ..., MSB-first
    std::vector<std::uint64_t> encode(const std::vector<int>& order) const {
        std::vector<std::uint64_t> out((std::size_t)(n * (n - 1) / 2 + 63) / 64, 0);
        int k = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++k)
                if (rows[order[u]] >> order[v] & 1) out[k >> 6] |= 1ull << (63 - (k & 63));
        return out;
    }

    void offer(const std::vector<int>& order) {
        auto cand = encode(order);
        if (!has_best || cand < best) {
            best = std::move(cand);
            best_order = order;
            has_best = true;
        }
    }

    void refine(Cells& cells) const {
        while (true) {
            std::vector<std::uint64_t> masks(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) masks[c] |= 1ull << v;
            Cells out;
            bool changed = false;
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    out.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> sig;
                sig.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> s(cells.size());
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        s[c] = std::popcount(rows[v] & masks[c]);
                    sig.emplace_back(std::move(s), v);
                }
                std::sort(sig.begin(), sig.end());
                std::size_t i = 0;
                while (i < sig.size()) {
                    std::size_t j = i;
                    while (j < sig.size() && sig[j].first == sig[i].first) ++j;
                    std::vector<int> sub;
                    for (std::size_t k = i; k < j; ++k) sub.push_back(sig[k].second);
                    if (sub.size() != cell.size()) changed = true;
                    out.push_back(std::move(sub));
                    i = j;
                }
            }
            cells = std::move(out);
            if (!changed) return;
        }
    }

    // stable partition where every cell/cell pair is complete or empty:
    // any cell-respecting order is automorphic, so no branching is needed
    bool homogeneous(const Cells& cells) const {
        std::vector<std::uint64_t> masks(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) masks[c] |= 1ull << v;
        for (std::size_t a = 0; a < cells.size(); ++a) {
            int rep = cells[a][0];
            for (std::size_t b = 0; b < cells.size(); ++b) {
                int cnt = std::popcount(rows[rep] & masks[b]);
                int full = (int)cells[b].size() - (a == b ? 1 : 0);
                if (cnt != 0 && cnt != full) return false;
            }
        }
        return true;
    }

    void search(Cells cells) {
        refine(cells);
        std::size_t branch = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                branch = c;
                break;
            }
        if (branch == cells.size() || homogeneous(cells)) {
            std::vector<int> order;
            order.reserve(n);
            for (auto& cell : cells)
                for (int v : cell) order.push_back(v);
            offer(order);
            return;
        }
        for (int v : cells[branch]) {
            Cells next;
            next.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < branch; ++c) next.push_back(cells[c]);
            next.push_back({v});
            std::vector<int> rest;
            for (int w : cells[branch])
                if (w != v) rest.push_back(w);
            next.push_back(std::move(rest));
            for (std::size_t c = branch + 1; c < cells.size(); ++c) next.push_back(cells[c]);
            search(std::move(next));
        }
    }

    void run() {
        if (n == 0) {
            has_best = true;
            return;
        }
        Cells init(1);
        for (int v = 0; v < n; ++v) init[0].push_back(v);
        search(std::move(init));
    }
};

std::vector<int> canonical_order(const Graph& g) {
    if (g.n > 64) throw std::invalid_argument("canonical_form: supports n <= 64");
    std::vector<std::uint64_t> rows(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w = g.adj[v].next(0); w >= 0; w = g.adj[v].next(w + 1)) rows[v] |= 1ull << w;
    Canon c{g.n, rows.data(), {}, {}};
    c.run();
    return c.best_order;
}

Graph apply_order(const Graph& g, const std::vector<int>& order) {
    Graph h(g.n);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    for (auto [u, v] : g.edges()) h.add_edge(pos[u], pos[v]);
    return h;
}

}  // namespace

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

Graph canonical_graph(const Graph& g) {
    if (g.n == 0) return g;
    return apply_order(g, canonical_order(g));
}

// ---- enumeration ---------------------------------------------------------------

namespace {

constexpr int kMaxEnum = 9;

struct SmallG {
    std::uint8_t n = 0;
    std::array<std::uint16_t, kMaxEnum> rows{};  // adjacency masks
};

// canonical relabeling + packed key for graphs with n <= 9 (<= 36 triangle bits)
std::pair<std::uint64_t, SmallG> canonical_small(const SmallG& g) {
    std::uint64_t rows[kMaxEnum];
    for (int v = 0; v < g.n; ++v) rows[v] = g.rows[v];
    Canon c{g.n, rows, {}, {}};
    c.run();
    SmallG out;
    out.n = g.n;
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[c.best_order[i]] = i;
    for (int v = 0; v < g.n; ++v)
        for (int w = 0; w < g.n; ++w)
            if (g.rows[v] >> w & 1) out.rows[pos[v]] |= (std::uint16_t)(1u << pos[w]);
    return {c.best.empty() ? 0 : c.best[0], out};
}

Graph to_graph(const SmallG& s) {
    Graph g(s.n);
    for (int v = 0; v < s.n; ++v)
        for (int w = v + 1; w < s.n; ++w)
            if (s.rows[v] >> w & 1) g.add_edge(v, w);
    return g;
}

}  // namespace

void enumerate_connected_stream(int n, const std::function<void(const Graph&)>& emit) {
    if (n < 1 || n > kMaxEnum)
        throw std::invalid_argument("enumerate_connected: n must be 1.." +
                                    std::to_string(kMaxEnum));
    std::vector<std::pair<std::uint64_t, SmallG>> level;
    {
        SmallG k1;
        k1.n = 1;
        level.push_back({0, k1});
    }
    for (int k = 1; k < n; ++k) {
        std::vector<std::pair<std::uint64_t, SmallG>> next;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& [key, g] : level) {
            for (unsigned S = 1; S < (1u << k); ++S) {
                SmallG h = g;
                h.n = (std::uint8_t)(k + 1);
                h.rows[k] = (std::uint16_t)S;
                for (int i = 0; i < k; ++i)
                    if (S >> i & 1) h.rows[i] |= (std::uint16_t)(1u << k);
                auto cand = canonical_small(h);
                if (seen.insert(cand.first).second) next.push_back(std::move(cand));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, g] : level) emit(to_graph(g));
}

std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    enumerate_connected_stream(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace clawkit
