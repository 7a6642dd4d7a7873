#include "clawkit/structures.hpp"

#include <algorithm>
#include <functional>

#include "clawkit/patterns.hpp"

namespace clawkit {

// ---- combs -------------------------------------------------------------------

namespace {

void validate_comb(const CombDescription& d) {
    int m = d.m();
    if (m < 3) throw std::invalid_argument("comb: needs m >= 3 leaf cliques");
    if ((int)d.leaf_sizes.size() != m)
        throw std::invalid_argument("comb: roots/leaf_sizes length mismatch");
    if (d.base_size < m) throw std::invalid_argument("comb: base clique smaller than m");
    std::vector<char> seen(d.base_size, 0);
    for (const auto& r : d.roots) {
        if (r.empty()) throw std::invalid_argument("comb: empty root set");
        for (int v : r) {
            if (v < 0 || v >= d.base_size)
                throw std::invalid_argument("comb: root vertex out of base range");
            if (seen[v]) throw std::invalid_argument("comb: root sets not disjoint");
            seen[v] = 1;
        }
    }
    for (int s : d.leaf_sizes)
        if (s < 1) throw std::invalid_argument("comb: leaf clique must be non-empty");
}

}  // namespace

Graph build_comb(const CombDescription& d) {
    validate_comb(d);
    Graph g(d.order());
    for (int u = 0; u < d.base_size; ++u)
        for (int v = u + 1; v < d.base_size; ++v) g.add_edge(u, v);
    int off = d.base_size;
    for (int i = 0; i < d.m(); ++i) {
        int s = d.leaf_sizes[i];
        for (int a = 0; a < s; ++a) {
            for (int b = a + 1; b < s; ++b) g.add_edge(off + a, off + b);
            for (int r : d.roots[i]) g.add_edge(off + a, r);
        }
        off += s;
    }
    return g;
}

std::optional<CombDescription> recognize_comb(const Graph& g) {
    if (g.n == 0 || !is_connected(g)) return std::nullopt;
    auto classes = closed_twin_classes(g);
    Graph q = twin_quotient(g, classes);

    std::vector<int> leaf_cls, base_cls;
    for (int c = 0; c < q.n; ++c) (q.degree(c) == 1 ? leaf_cls : base_cls).push_back(c);
    int m = (int)leaf_cls.size();
    if (m < 3 || base_cls.empty()) return std::nullopt;

    // each leaf class hangs on its own base class
    std::vector<int> attach(m);
    std::vector<char> taken(q.n, 0);
    for (int i = 0; i < m; ++i) {
        int r = q.adj[leaf_cls[i]].next(0);
        if (q.degree(r) == 1 || taken[r]) return std::nullopt;
        attach[i] = r;
        taken[r] = 1;
    }
    // base classes pairwise adjacent (their union is the base clique)
    for (std::size_t a = 0; a < base_cls.size(); ++a)
        for (std::size_t b = a + 1; b < base_cls.size(); ++b)
            if (!q.has_edge(base_cls[a], base_cls[b])) return std::nullopt;

    CombDescription d;
    std::vector<int> pos_in_base(q.n, -1);
    int base_off = 0;
    for (int c : base_cls) {
        pos_in_base[c] = base_off;
        base_off += (int)classes[c].size();
    }
    d.base_size = base_off;
    for (int i = 0; i < m; ++i) {
        std::vector<int> root;
        int start = pos_in_base[attach[i]];
        for (int k = 0; k < (int)classes[attach[i]].size(); ++k) root.push_back(start + k);
        d.roots.push_back(std::move(root));
        d.leaf_sizes.push_back((int)classes[leaf_cls[i]].size());
    }
    return d;
}

// ---- H expansions --------------------------------------------------------------

int HExpansion::order() const {
    if (index == 0) return comb.order();
    if (index >= 1 && index <= 5) {
        int o = h_pattern(index).n - (int)h_expandable(index).size();
        for (int s : clique_sizes) o += s;
        return o;
    }
    if (index >= 6 && index <= 8) return h_pattern(index).n;
    throw std::invalid_argument("HExpansion: index must be 0..8");
}

Graph build_H(const HExpansion& e) {
    if (e.index == 0) {
        if (!e.comb.pointed())
            throw std::invalid_argument("build_H: index 0 requires a pointed comb");
        return build_comb(e.comb);
    }
    if (e.index >= 6 && e.index <= 8) return h_pattern(e.index);
    if (e.index < 1 || e.index > 5) throw std::invalid_argument("build_H: index must be 0..8");

    const Graph& h = h_pattern(e.index);
    const auto& exp = h_expandable(e.index);
    if (e.clique_sizes.size() != exp.size())
        throw std::invalid_argument("build_H: clique_sizes length mismatch");
    for (int s : e.clique_sizes)
        if (s < 1) throw std::invalid_argument("build_H: clique size must be >= 1");

    // block per original vertex, in label order
    std::vector<int> bsize(h.n, 1), boff(h.n, 0);
    for (std::size_t k = 0; k < exp.size(); ++k) bsize[exp[k]] = e.clique_sizes[k];
    int total = 0;
    for (int v = 0; v < h.n; ++v) {
        boff[v] = total;
        total += bsize[v];
    }
    Graph g(total);
    for (int v = 0; v < h.n; ++v)
        for (int a = 0; a < bsize[v]; ++a)
            for (int b = a + 1; b < bsize[v]; ++b) g.add_edge(boff[v] + a, boff[v] + b);
    for (auto [u, v] : h.edges())
        for (int a = 0; a < bsize[u]; ++a)
            for (int b = 0; b < bsize[v]; ++b) g.add_edge(boff[u] + a, boff[v] + b);
    return g;
}

namespace {

// Is there an isomorphism quotient -> h_pattern(i) mapping every class of
// size >= 2 onto an expandable vertex? Returns the clique sizes at U_i if so.
std::optional<std::vector<int>> match_expansion(const Graph& q,
                                                const std::vector<std::vector<int>>& classes,
                                                int i) {
    const Graph& h = h_pattern(i);
    const auto& exp = h_expandable(i);
    if (q.n != h.n || q.edge_count() != h.edge_count()) return std::nullopt;

    std::vector<char> expandable(h.n, 0);
    for (int v : exp) expandable[v] = 1;

    std::vector<int> img(q.n, -1);  // class -> h vertex
    std::vector<char> used(h.n, 0);
    std::function<bool(int)> rec = [&](int c) -> bool {
        if (c == q.n) return true;
        bool big = classes[c].size() >= 2;
        for (int hv = 0; hv < h.n; ++hv) {
            if (used[hv] || h.degree(hv) != q.degree(c)) continue;
            if (big && !expandable[hv]) continue;
            bool ok = true;
            for (int c2 = 0; c2 < c; ++c2)
                if (q.has_edge(c2, c) != h.has_edge(img[c2], hv)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img[c] = hv;
            used[hv] = 1;
            if (rec(c + 1)) return true;
            used[hv] = 0;
            img[c] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;

    std::vector<int> sizes(exp.size(), 1);
    for (int c = 0; c < q.n; ++c) {
        auto it = std::find(exp.begin(), exp.end(), img[c]);
        if (it != exp.end()) sizes[it - exp.begin()] = (int)classes[c].size();
    }
    return sizes;
}

}  // namespace

std::optional<HExpansion> recognize_H_union(const Graph& g) {
    if (g.n == 0 || !is_connected(g)) return std::nullopt;

    if (auto comb = recognize_comb(g); comb && comb->pointed()) {
        HExpansion e;
        e.index = 0;
        e.comb = *comb;
        return e;
    }
    auto classes = closed_twin_classes(g);
    Graph q = twin_quotient(g, classes);
    for (int i = 1; i <= 5; ++i) {
        if (auto sizes = match_expansion(q, classes, i)) {
            HExpansion e;
            e.index = i;
            e.clique_sizes = *sizes;
            return e;
        }
    }
    for (int i = 6; i <= 8; ++i) {
        if (isomorphic(g, h_pattern(i))) {
            HExpansion e;
            e.index = i;
            return e;
        }
    }
    return std::nullopt;
}

// ---- fat paths and cycles --------------------------------------------------------

namespace {

void validate_fat(const FatDescription& d) {
    if (d.clique_sizes.empty()) throw std::invalid_argument("fat: no cliques");
    if (d.kind == FatDescription::Kind::cycle && d.clique_sizes.size() < 3)
        throw std::invalid_argument("fat cycle: needs >= 3 cliques");
    for (int s : d.clique_sizes)
        if (s < 1) throw std::invalid_argument("fat: clique size must be >= 1");
}

std::vector<int> block_offsets(const std::vector<int>& sizes) {
    std::vector<int> off(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + sizes[i];
    return off;
}

}  // namespace

FatDescription FatDescription::canonical() const {
    FatDescription best = *this;
    const auto& s = clique_sizes;
    if (kind == Kind::path) {
        std::vector<int> rev(s.rbegin(), s.rend());
        if (rev < best.clique_sizes) best.clique_sizes = rev;
        return best;
    }
    int c = (int)s.size();
    for (int dir : {0, 1})
        for (int r = 0; r < c; ++r) {
            std::vector<int> cand(c);
            for (int i = 0; i < c; ++i) cand[i] = dir ? s[(r - i % c + 2 * c) % c] : s[(r + i) % c];
            if (cand < best.clique_sizes) best.clique_sizes = cand;
        }
    return best;
}

Graph build_fat(const FatDescription& d) {
    validate_fat(d);
    auto off = block_offsets(d.clique_sizes);
    int nblocks = (int)d.clique_sizes.size();
    Graph g(off.back());
    auto join_blocks = [&](int i, int j) {
        for (int a = off[i]; a < off[i + 1]; ++a)
            for (int b = off[j]; b < off[j + 1]; ++b)
                if (a != b) g.add_edge(a, b);
    };
    for (int i = 0; i < nblocks; ++i)
        for (int a = off[i]; a < off[i + 1]; ++a)
            for (int b = a + 1; b < off[i + 1]; ++b) g.add_edge(a, b);
    for (int i = 0; i + 1 < nblocks; ++i) join_blocks(i, i + 1);
    if (d.kind == FatDescription::Kind::cycle) join_blocks(nblocks - 1, 0);
    return g;
}

std::optional<FatStructure> fat_structure_of(const Graph& g) {
    if (g.n == 0 || !is_connected(g)) return std::nullopt;
    auto classes = closed_twin_classes(g);
    Graph q = twin_quotient(g, classes);

    int n1 = 0, n2 = 0;  // quotient degree-1 / degree-2 counts
    for (int v = 0; v < q.n; ++v) {
        int d = q.degree(v);
        if (d == 1) ++n1;
        else if (d == 2) ++n2;
        else if (d != 0) return std::nullopt;
    }
    FatStructure fs;
    std::vector<int> walk;
    if (q.n >= 3 && n2 == q.n && q.edge_count() == q.n) {
        fs.desc.kind = FatDescription::Kind::cycle;  // quotient is a cycle
        walk.push_back(0);
        int prev = -1, cur = 0;
        while ((int)walk.size() < q.n) {
            int nxt = -1;
            for (int w = q.adj[cur].next(0); w >= 0; w = q.adj[cur].next(w + 1))
                if (w != prev) nxt = nxt < 0 ? w : nxt;
            prev = cur;
            cur = nxt;
            walk.push_back(cur);
        }
    } else if (q.n >= 2 && n1 == 2 && n1 + n2 == q.n && q.edge_count() == q.n - 1) {
        fs.desc.kind = FatDescription::Kind::path;  // quotient is a path
        int start = 0;
        while (q.degree(start) != 1) ++start;
        walk.push_back(start);
        int prev = -1, cur = start;
        while ((int)walk.size() < q.n) {
            int nxt = -1;
            for (int w = q.adj[cur].next(0); w >= 0; w = q.adj[cur].next(w + 1))
                if (w != prev) nxt = w;
            prev = cur;
            cur = nxt;
            walk.push_back(cur);
        }
    } else {
        return std::nullopt;  // includes the single-clique case q.n == 1
    }
    for (int c : walk) {
        fs.desc.clique_sizes.push_back((int)classes[c].size());
        fs.cliques.push_back(classes[c]);
    }
    return fs;
}

std::optional<FatDescription> recognize_fat(const Graph& g, int min_l) {
    if (min_l < 5) throw std::invalid_argument("recognize_fat: min_l must be >= 5");
    auto fs = fat_structure_of(g);
    if (!fs || fs->desc.parameter() < min_l) return std::nullopt;
    return fs->desc.canonical();
}

bool in_P(const Graph& g, int l) { return recognize_fat(g, l).has_value(); }

// ---- F'(m) ---------------------------------------------------------------------

Graph build_F_prime(int m, std::vector<int> path_sizes, int k_size) {
    if (m < 1) throw std::invalid_argument("F': m must be >= 1");
    int t = std::max(3 * m - 1, m + 3);
    if (path_sizes.empty()) path_sizes.assign(t, 1);
    if ((int)path_sizes.size() != t)
        throw std::invalid_argument("F': path needs exactly " + std::to_string(t) + " cliques");
    if (k_size < 1) throw std::invalid_argument("F': K must be non-empty");
    for (int s : path_sizes)
        if (s < 1) throw std::invalid_argument("F': clique size must be >= 1");

    FatDescription fp{FatDescription::Kind::path, path_sizes};
    Graph path = build_fat(fp);
    Graph g(path.n + k_size);
    for (auto [u, v] : path.edges()) g.add_edge(u, v);
    for (int a = 0; a < k_size; ++a)
        for (int b = a + 1; b < k_size; ++b) g.add_edge(path.n + a, path.n + b);

    auto off = block_offsets(path_sizes);
    int idx[4] = {std::max(m - 1, 1), std::max(m, 2), std::max(2 * m, 3), std::max(2 * m + 1, 4)};
    for (int j : idx)
        for (int v = off[j - 1]; v < off[j]; ++v)
            for (int a = 0; a < k_size; ++a) g.add_edge(v, path.n + a);
    return g;
}

// ---- Hamiltonian cycles ----------------------------------------------------------

std::vector<int> fat_hamiltonian_cycle(const FatDescription& d) {
    validate_fat(d);
    auto off = block_offsets(d.clique_sizes);
    int l = (int)d.clique_sizes.size();
    if (off.back() < 3)
        throw std::invalid_argument("fat_hamiltonian_cycle: graph has fewer than 3 vertices");

    std::vector<int> cyc;
    if (d.kind == FatDescription::Kind::cycle) {
        for (int v = 0; v < off.back(); ++v) cyc.push_back(v);  // blocks in cyclic order
        return cyc;
    }
    // path kind: 2-connected iff every interior clique has >= 2 vertices
    // (l = 1 or 2 is a complete graph, fine when it has >= 3 vertices)
    for (int i = 1; i + 1 < l; ++i)
        if (d.clique_sizes[i] < 2)
            throw std::invalid_argument("fat_hamiltonian_cycle: not 2-connected (interior clique of size 1)");
    for (int v = off[0]; v < off[1]; ++v) cyc.push_back(v);  // L_1 whole
    std::vector<std::vector<int>> ret(l);
    for (int i = 1; i + 1 < l; ++i) {
        int s = d.clique_sizes[i], fwd = (s + 1) / 2;
        for (int k = 0; k < fwd; ++k) cyc.push_back(off[i] + k);
        for (int k = fwd; k < s; ++k) ret[i].push_back(off[i] + k);
    }
    if (l >= 2)
        for (int v = off[l - 1]; v < off[l]; ++v) cyc.push_back(v);  // L_l whole
    for (int i = l - 2; i >= 1; --i)
        for (auto it = ret[i].rbegin(); it != ret[i].rend(); ++it) cyc.push_back(*it);
    return cyc;
}

// ---- textual construct syntax ----------------------------------------------------

namespace {

[[noreturn]] void bad_construct(const std::string& s, const std::string& why) {
    throw std::invalid_argument("construct \"" + s + "\": " + why);
}

std::vector<int> parse_size_list(const std::string& s, const std::string& whole) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, (comma == std::string::npos ? s.size() : comma) - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            bad_construct(whole, "bad integer \"" + tok + "\"");
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "k1=v1;k2=v2" in order
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& s,
                                                          const std::string& whole) {
    std::vector<std::pair<std::string, std::string>> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t semi = s.find(';', pos);
        std::string tok = s.substr(pos, (semi == std::string::npos ? s.size() : semi) - pos);
        size_t eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) bad_construct(whole, "expected key=value, got \"" + tok + "\"");
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

int parse_int_value(const std::string& v, const std::string& whole) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        bad_construct(whole, "bad integer \"" + v + "\"");
    return std::stoi(v);
}

const std::vector<std::string>& h_param_names(int index) {
    static const std::vector<std::vector<std::string>> names{
        {},
        {"s3", "s4", "s5"},
        {"t3", "t4"},
        {"u6"},
        {"v4", "v5", "v6"},
        {"w7"},
    };
    return names[index];
}

}  // namespace

Construct parse_construct(const std::string& s) {
    size_t colon = s.find(':');
    std::string head = s.substr(0, colon);
    std::string rest = colon == std::string::npos ? std::string() : s.substr(colon + 1);

    Construct c;
    if (head == "fatpath" || head == "fatcycle") {
        c.kind = Construct::Kind::fat;
        c.fat.kind = head == "fatpath" ? FatDescription::Kind::path : FatDescription::Kind::cycle;
        c.fat.clique_sizes = parse_size_list(rest, s);
        if (c.fat.kind == FatDescription::Kind::cycle && c.fat.clique_sizes.size() < 3)
            bad_construct(s, "fat cycle needs at least 3 cliques");
        return c;
    }
    if (head == "comb") {
        c.kind = Construct::Kind::comb;
        std::vector<int> rsizes, lsizes;
        int m = -1, base = -1;
        for (const auto& [k, v] : parse_kv(rest, s)) {
            if (k == "m") m = parse_int_value(v, s);
            else if (k == "C") base = parse_int_value(v, s);
            else if (k == "R") rsizes = parse_size_list(v, s);
            else if (k == "L") lsizes = parse_size_list(v, s);
            else bad_construct(s, "unknown key \"" + k + "\"");
        }
        if (m < 0 || base < 0 || rsizes.empty() || lsizes.empty())
            bad_construct(s, "comb needs m=, C=, R=, L=");
        if (m < 3) bad_construct(s, "comb needs m >= 3");
        if ((int)rsizes.size() != m || (int)lsizes.size() != m)
            bad_construct(s, "R and L must list exactly m sizes");
        c.comb.base_size = base;
        int at = 0;
        for (int sz : rsizes) {
            if (sz < 1) bad_construct(s, "root block size must be >= 1");
            std::vector<int> block(sz);
            for (int i = 0; i < sz; ++i) block[i] = at + i;
            at += sz;
            c.comb.roots.push_back(std::move(block));
        }
        if (at > base) bad_construct(s, "root blocks exceed base size C");
        c.comb.leaf_sizes = lsizes;
        return c;
    }
    if (head == "Fprime") {
        c.kind = Construct::Kind::fprime;
        auto kv = parse_kv(rest, s);
        if (kv.size() != 1 || kv[0].first != "m") bad_construct(s, "Fprime takes exactly m=");
        c.fprime_m = parse_int_value(kv[0].second, s);
        if (c.fprime_m < 1) bad_construct(s, "Fprime needs m >= 1");
        return c;
    }
    if (head.size() >= 2 && head[0] == 'H' &&
        head.find_first_not_of("0123456789", 1) == std::string::npos) {
        int index = std::stoi(head.substr(1));
        if (index == 0) bad_construct(s, "use the comb: syntax for pointed combs (H0)");
        if (index < 1 || index > 8) bad_construct(s, "H index must be 1..8");
        c.kind = Construct::Kind::h;
        c.h.index = index;
        if (index >= 6) {
            if (!rest.empty()) bad_construct(s, head + " takes no parameters");
            return c;
        }
        const auto& names = h_param_names(index);
        c.h.clique_sizes.assign(names.size(), 1);
        if (!rest.empty()) {
            for (const auto& [k, v] : parse_kv(rest, s)) {
                auto it = std::find(names.begin(), names.end(), k);
                if (it == names.end()) bad_construct(s, "unknown expandable vertex \"" + k + "\"");
                c.h.clique_sizes[it - names.begin()] = parse_int_value(v, s);
            }
        }
        return c;
    }
    bad_construct(s, "unknown construct kind \"" + head + "\"");
}

Graph build_construct(const Construct& c) {
    switch (c.kind) {
        case Construct::Kind::fat: return build_fat(c.fat);
        case Construct::Kind::comb: return build_comb(c.comb);
        case Construct::Kind::h: return build_H(c.h);
        case Construct::Kind::fprime: return build_F_prime(c.fprime_m);
    }
    throw std::logic_error("bad construct kind");
}

}  // namespace clawkit
