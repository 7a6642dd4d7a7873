#include "clawkit/halin.hpp"

#include <algorithm>

namespace clawkit {

// ---- fan-cycle axioms ------------------------------------------------------------

VerifyResult verify_fan_cycle_system(const Graph& g, const FanCycleSystem& s) {
    auto fail = [](const std::string& r) { return VerifyResult{false, r}; };
    int n = g.n;
    int cl = (int)s.cycle.size();

    // axiom 1: C is a cycle of g
    if (cl < 3) return fail("axiom 1: cycle has fewer than 3 vertices");
    std::vector<int> cpos(n, -1);
    for (int i = 0; i < cl; ++i) {
        int v = s.cycle[i];
        if (v < 0 || v >= n) return fail("axiom 1: cycle vertex out of range");
        if (cpos[v] >= 0) return fail("axiom 1: repeated cycle vertex");
        cpos[v] = i;
    }
    for (int i = 0; i < cl; ++i)
        if (!g.has_edge(s.cycle[i], s.cycle[(i + 1) % cl]))
            return fail("axiom 1: consecutive cycle vertices not adjacent");

    // axiom 2: Q_i are vertex-disjoint subpaths of C of order >= 2
    if (s.paths.size() != s.attach.size())
        return fail("axiom 2: paths/attachments count mismatch");
    std::vector<char> covered(n, 0);
    for (const auto& q : s.paths) {
        if (q.size() < 2) return fail("axiom 2: path of order < 2");
        for (int v : q) {
            if (v < 0 || v >= n || cpos[v] < 0) return fail("axiom 2: path vertex not on cycle");
            if (covered[v]) return fail("axiom 2: paths not vertex-disjoint");
            covered[v] = 1;
        }
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            int d = (cpos[q[i + 1]] - cpos[q[i]] + cl) % cl;
            if (d != 1 && d != cl - 1) return fail("axiom 2: path not consecutive on cycle");
        }
    }

    // axiom 3: v and the x_i are distinct and are exactly V(G) - V(C)
    std::vector<char> outside(n, 0);
    int m = (int)s.attach.size();
    if (s.apex < 0 || s.apex >= n || cpos[s.apex] >= 0)
        return fail("axiom 3: apex missing or on cycle");
    outside[s.apex] = 1;
    for (int x : s.attach) {
        if (x < 0 || x >= n || cpos[x] >= 0) return fail("axiom 3: attachment on cycle or out of range");
        if (outside[x]) return fail("axiom 3: apex/attachments not distinct");
        outside[x] = 1;
    }
    if (cl + m + 1 != n) return fail("axiom 3: cycle plus apex/attachments do not exhaust V");

    // axiom 4: |V(C) - U Q_i| + m >= 3
    int uncovered = 0;
    for (int v : s.cycle)
        if (!covered[v]) ++uncovered;
    if (uncovered + m < 3) return fail("axiom 4: fewer than 3 tree branches at the apex");

    // axiom 5: apex adjacent to every uncovered cycle vertex and every x_i
    for (int v : s.cycle)
        if (!covered[v] && !g.has_edge(s.apex, v))
            return fail("axiom 5: apex not adjacent to uncovered cycle vertex");
    for (int x : s.attach)
        if (!g.has_edge(s.apex, x)) return fail("axiom 5: apex not adjacent to attachment");

    // axiom 6: x_i adjacent to all of Q_i
    for (int i = 0; i < m; ++i)
        for (int v : s.paths[i])
            if (!g.has_edge(s.attach[i], v))
                return fail("axiom 6: attachment not adjacent to its path");

    return {};
}

// ---- constructive systems ----------------------------------------------------------

namespace {

FanCycleSystem fcs_for_comb(const CombDescription& d) {
    // apex v_1 = first root of R_1, attachments v_i = first roots of R_i.
    // Cycle: segments [r_{i,1}, leaf_i, r_{i,2..}] for i >= 2 (these are the
    // Q_i), then the uncovered base vertices, then the same-shaped segment
    // for leaf 1 (kept out of any Q so the apex keeps >= 3 tree branches).
    int m = d.m();
    for (const auto& r : d.roots)
        if (r.size() < 3)
            throw std::invalid_argument("fan_cycle_for_H: comb root below size 3 is not 3-connected");
    std::vector<int> leaf(m);  // pointed comb: single leaf vertex per block
    int off = d.base_size;
    for (int i = 0; i < m; ++i) {
        leaf[i] = off;
        off += 1;
    }
    std::vector<char> in_root(d.base_size, 0);
    for (const auto& r : d.roots)
        for (int v : r) in_root[v] = 1;

    FanCycleSystem s;
    s.apex = d.roots[0][0];
    auto segment = [&](int i) {
        std::vector<int> seg;
        seg.push_back(d.roots[i][1]);
        seg.push_back(leaf[i]);
        for (std::size_t k = 2; k < d.roots[i].size(); ++k) seg.push_back(d.roots[i][k]);
        return seg;
    };
    // attachments and their paths
    for (int i = 1; i < m; ++i) {
        s.attach.push_back(d.roots[i][0]);
        std::vector<int> seg = segment(i);
        s.paths.push_back(seg);
        for (int v : seg) s.cycle.push_back(v);
    }
    for (int u = 0; u < d.base_size; ++u)
        if (!in_root[u]) s.cycle.push_back(u);
    for (int v : segment(0)) s.cycle.push_back(v);
    return s;
}

FanCycleSystem fcs_for_h1(const HExpansion& e) {
    int c3 = e.clique_sizes[0], c4 = e.clique_sizes[1], c5 = e.clique_sizes[2];
    if (c3 < 3 || c4 < 3)
        throw std::invalid_argument("fan_cycle_for_H: H1 needs |C_s3|, |C_s4| >= 3 for 3-connectedness");
    // layout: s1 = 0, s2 = 1, C_s3 block, C_s4 block, C_s5 block
    int off3 = 2, off4 = off3 + c3, off5 = off4 + c4;
    FanCycleSystem s;
    s.apex = off3;              // a3
    s.attach = {off4};          // a4
    std::vector<int> q;         // (C_s4 - a4) with s2 after its first vertex
    q.push_back(off4 + 1);
    q.push_back(1);
    for (int k = 2; k < c4; ++k) q.push_back(off4 + k);
    s.paths = {q};
    // cycle: [p1 s1 p2..] (C_s3 - a3), then C_s5, then Q
    s.cycle.push_back(off3 + 1);
    s.cycle.push_back(0);
    for (int k = 2; k < c3; ++k) s.cycle.push_back(off3 + k);
    for (int k = 0; k < c5; ++k) s.cycle.push_back(off5 + k);
    for (int v : q) s.cycle.push_back(v);
    return s;
}

FanCycleSystem fcs_for_h4(const HExpansion& e) {
    // layout: v1 = 0, v2 = 1, v3 = 2, C_v4 block, C_v5 block, C_v6 block
    int sz[3] = {e.clique_sizes[0], e.clique_sizes[1], e.clique_sizes[2]};
    int off[3] = {3, 3 + sz[0], 3 + sz[0] + sz[1]};
    int singles = (sz[0] == 1) + (sz[1] == 1) + (sz[2] == 1);
    if (singles > 1)
        throw std::invalid_argument("fan_cycle_for_H: H4 with two singleton cliques is not 3-connected");
    // roles: X, Y need size >= 2; Z is the remaining clique
    int X = -1, Y = -1, Z = -1;
    for (int i = 0; i < 3; ++i) {
        if (sz[i] < 2) continue;
        if (X < 0) X = i;
        else if (Y < 0) Y = i;
    }
    for (int i = 0; i < 3; ++i)
        if (i != X && i != Y) Z = i;
    // outer vertex adjacent to clique pair: v1 ~ {C4,C6}, v2 ~ {C4,C5}, v3 ~ {C5,C6}
    auto outer_for = [&](int a, int b) {
        bool has4 = a == 0 || b == 0, has5 = a == 1 || b == 1, has6 = a == 2 || b == 2;
        if (has4 && has6) return 0;
        if (has4 && has5) return 1;
        return 2;
    };
    int r1 = outer_for(X, Z), r2 = outer_for(X, Y), r3 = outer_for(Y, Z);
    FanCycleSystem s;
    s.apex = off[X];      // a4 in role terms
    s.attach = {off[Y]};  // a5
    std::vector<int> q;   // (Y - a5) then the outer vertex in role v3
    for (int k = 1; k < sz[Y]; ++k) q.push_back(off[Y] + k);
    q.push_back(r3);
    s.paths = {q};
    s.cycle.push_back(r1);
    for (int k = 1; k < sz[X]; ++k) s.cycle.push_back(off[X] + k);
    s.cycle.push_back(r2);
    for (int v : q) s.cycle.push_back(v);
    for (int k = 0; k < sz[Z]; ++k) s.cycle.push_back(off[Z] + k);
    return s;
}

}  // namespace

FanCycleSystem fan_cycle_for_H(const Graph& g, const HExpansion& e) {
    if (e.index == 2 || e.index == 3 || e.index == 5 || e.index == 6)
        throw std::invalid_argument("fan_cycle_for_H: family " + std::to_string(e.index) +
                                    " has no 3-connected member");
    if (!(g == build_H(e)))
        throw std::invalid_argument("fan_cycle_for_H: graph does not match the description");
    if (vertex_connectivity(g) < 3)
        throw std::invalid_argument("fan_cycle_for_H: graph is not 3-connected");

    FanCycleSystem s;
    switch (e.index) {
        case 0: s = fcs_for_comb(e.comb); break;
        case 1: s = fcs_for_h1(e); break;
        case 4: s = fcs_for_h4(e); break;
        case 7:
            // C = y2 y4 y7 y8 y6; v = y1; Q1 = y4y7, Q2 = y8y6; x = y3, y5
            s.cycle = {1, 3, 6, 7, 5};
            s.apex = 0;
            s.paths = {{3, 6}, {7, 5}};
            s.attach = {2, 4};
            break;
        case 8:
            // C = z2 z4 z7 z9 z8 z6; v = z1; Q1 = z4z7, Q2 = z8z6; x = z3, z5
            s.cycle = {1, 3, 6, 8, 7, 5};
            s.apex = 0;
            s.paths = {{3, 6}, {7, 5}};
            s.attach = {2, 4};
            break;
        default: throw std::invalid_argument("fan_cycle_for_H: index must be 0..8");
    }
    return s;
}

HalinCandidate halin_from_fan_cycle(const Graph& g, const FanCycleSystem& s) {
    VerifyResult v = verify_fan_cycle_system(g, s);
    if (!v.ok) throw std::logic_error("halin_from_fan_cycle: invalid system: " + v.reason);
    std::vector<char> covered(g.n, 0);
    for (const auto& q : s.paths)
        for (int x : q) covered[x] = 1;
    HalinCandidate h;
    for (int x : s.cycle)
        if (!covered[x]) h.tree_edges.push_back({s.apex, x});
    for (std::size_t i = 0; i < s.attach.size(); ++i) {
        h.tree_edges.push_back({s.apex, s.attach[i]});
        for (int u : s.paths[i]) h.tree_edges.push_back({s.attach[i], u});
    }
    h.cycle = s.cycle;
    return h;
}

// ---- Halin candidates for fat structures ----------------------------------------------

HalinCandidate halin_for_fat(const FatDescription& d) {
    int nb = (int)d.clique_sizes.size();
    const auto& sz = d.clique_sizes;
    std::vector<int> off(nb + 1, 0);
    for (int i = 0; i < nb; ++i) off[i + 1] = off[i] + sz[i];
    HalinCandidate h;

    if (d.kind == FatDescription::Kind::path) {
        int l = nb;
        if (l < 3) throw std::invalid_argument("halin_for_fat: fat path needs parameter >= 3");
        for (int i = 1; i + 1 < l; ++i)
            if (sz[i] < 3)
                throw std::invalid_argument("halin_for_fat: interior clique below size 3 is not 3-connected");
        std::vector<int> a(l);  // a_i = first vertex of interior block i
        for (int i = 1; i + 1 < l; ++i) a[i] = off[i];
        // tree: a_2 .. a_{l-2} spine; end cliques and split leaves hang off
        for (int v = off[0]; v < off[1]; ++v) h.tree_edges.push_back({a[1], v});
        for (int v = off[l - 1]; v < off[l]; ++v) h.tree_edges.push_back({a[l - 2], v});
        for (int i = 1; i + 1 < l; ++i) {
            for (int v = off[i] + 1; v < off[i + 1]; ++v) h.tree_edges.push_back({a[i], v});
            if (i + 2 < l) h.tree_edges.push_back({a[i], a[i + 1]});
        }
        // cycle: L_1, forward strands, L_l, return strands
        for (int v = off[0]; v < off[1]; ++v) h.cycle.push_back(v);
        std::vector<std::vector<int>> ret(l);
        for (int i = 1; i + 1 < l; ++i) {
            int rest = sz[i] - 1, fwd = (rest + 1) / 2;
            for (int k = 1; k <= fwd; ++k) h.cycle.push_back(off[i] + k);
            for (int k = fwd + 1; k <= rest; ++k) ret[i].push_back(off[i] + k);
        }
        for (int v = off[l - 1]; v < off[l]; ++v) h.cycle.push_back(v);
        for (int i = l - 2; i >= 1; --i)
            for (int v : ret[i]) h.cycle.push_back(v);
        return h;
    }

    // cycle kind: rotate so every block 1..l-1 has size >= 2
    int c = nb, l = nb - 1;
    if (l < 3) throw std::invalid_argument("halin_for_fat: fat cycle needs parameter >= 3");
    std::vector<int> singles;
    for (int i = 0; i < c; ++i)
        if (sz[i] == 1) singles.push_back(i);
    int shift = 0;
    if (singles.size() == 1) shift = singles[0];
    else if (singles.size() == 2) {
        int p = singles[0], q = singles[1];
        if ((p + 1) % c == q) shift = q;
        else if ((q + 1) % c == p) shift = p;
        else
            throw std::invalid_argument(
                "halin_for_fat: two non-consecutive singleton cliques are not 3-connected");
    } else if (singles.size() > 2) {
        throw std::invalid_argument("halin_for_fat: more than two singleton cliques is not 3-connected");
    }
    auto blk = [&](int i) { return (i + shift) % c; };  // role position i -> original block
    std::vector<int> a(c);                              // a_i = first vertex of role block i
    for (int i = 1; i < c - 1; ++i) a[i] = off[blk(i)];
    // tree: spine a_1 .. a_{l-1}; L_0 off a_1, L_l off a_{l-1}; leaves per block
    for (int i = 1; i + 1 < c - 1; ++i) h.tree_edges.push_back({a[i], a[i + 1]});
    for (int k = 0; k < sz[blk(0)]; ++k) h.tree_edges.push_back({a[1], off[blk(0)] + k});
    for (int k = 0; k < sz[blk(c - 1)]; ++k) h.tree_edges.push_back({a[c - 2], off[blk(c - 1)] + k});
    for (int i = 1; i < c - 1; ++i)
        for (int k = 1; k < sz[blk(i)]; ++k) h.tree_edges.push_back({a[i], off[blk(i)] + k});
    // cycle: [L_0][L_1 - a_1]...[L_{l-1} - a_{l-1}][L_l]
    for (int k = 0; k < sz[blk(0)]; ++k) h.cycle.push_back(off[blk(0)] + k);
    for (int i = 1; i < c - 1; ++i)
        for (int k = 1; k < sz[blk(i)]; ++k) h.cycle.push_back(off[blk(i)] + k);
    for (int k = 0; k < sz[blk(c - 1)]; ++k) h.cycle.push_back(off[blk(c - 1)] + k);
    return h;
}

// ---- Halin verification -----------------------------------------------------------------

VerifyResult verify_halin(const Graph& g, const HalinCandidate& h) {
    auto fail = [](const std::string& r) { return VerifyResult{false, r}; };
    int n = g.n;

    // (a) spanning tree of g, no degree-2 vertex, at least one internal vertex
    if ((int)h.tree_edges.size() != n - 1) return fail("tree: edge count is not n-1");
    std::vector<std::vector<int>> t(n);
    std::vector<int> deg(n, 0);
    for (auto [u, v] : h.tree_edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) return fail("tree: bad edge endpoints");
        if (!g.has_edge(u, v)) return fail("tree: edge not present in the graph");
        t[u].push_back(v);
        t[v].push_back(u);
        ++deg[u];
        ++deg[v];
    }
    {
        std::vector<int> stack{0}, seen(n, 0);
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : t[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt != n) return fail("tree: not spanning/connected");
    }
    bool internal = false;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 2) return fail("tree: vertex of degree 2");
        if (deg[v] >= 3) internal = true;
    }
    if (!internal) return fail("tree: no internal vertex");

    // (b) cycle on exactly the leaves
    int cl = (int)h.cycle.size();
    if (cl < 3) return fail("cycle: fewer than 3 vertices");
    std::vector<int> cpos(n, -1);
    for (int i = 0; i < cl; ++i) {
        int v = h.cycle[i];
        if (v < 0 || v >= n) return fail("cycle: vertex out of range");
        if (cpos[v] >= 0) return fail("cycle: repeated vertex");
        cpos[v] = i;
    }
    for (int i = 0; i < cl; ++i)
        if (!g.has_edge(h.cycle[i], h.cycle[(i + 1) % cl]))
            return fail("cycle: consecutive vertices not adjacent");
    for (int v = 0; v < n; ++v)
        if ((deg[v] == 1) != (cpos[v] >= 0))
            return fail("cycle: vertex set differs from the tree's leaf set");

    // (c) planarity surrogate: each side of every tree edge has its leaves
    // on a contiguous arc of the cycle
    for (auto [eu, ev] : h.tree_edges) {
        std::vector<int> stack{eu}, seen(n, 0);
        seen[eu] = 1;
        std::vector<int> pos;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (deg[v] == 1) pos.push_back(cpos[v]);
            for (int w : t[v])
                if (!seen[w] && !(v == eu && w == ev)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(pos.begin(), pos.end());
        int gaps = 0;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            int nxt = pos[(i + 1) % pos.size()];
            int step = (nxt - pos[i] + cl) % cl;
            if (step != 1) ++gaps;
        }
        if (pos.size() > 1 && gaps > 1)
            return fail("planarity: leaves of a subtree are not contiguous on the cycle");
    }
    return {};
}

}  // namespace clawkit
