#include "clawkit/graph.hpp"

#include <algorithm>
#include <queue>

namespace clawkit {

// ---- graph6 ----------------------------------------------------------------
//
// Layout: N(n) followed by the upper triangle of the adjacency matrix in
// column order x(0,1) x(0,2) x(1,2) x(0,3) ..., packed 6 bits per byte
// (first bit of a group is the most significant), each byte offset by 63,
// final group zero-padded.

namespace {

constexpr const char* kHeader = ">>graph6<<";

int need_byte(const std::string& s, std::size_t pos) {
    if (pos >= s.size()) throw Graph6Error("unexpected end of line", pos);
    unsigned char c = s[pos];
    if (c < 63 || c > 126) throw Graph6Error("byte out of graph6 range 63..126", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
    std::size_t pos = 0;
    if (line.rfind(kHeader, 0) == 0) pos = std::string(kHeader).size();
    if (pos >= line.size()) throw Graph6Error("empty graph6 payload", pos);

    long long n;
    int b0 = need_byte(line, pos);
    if (b0 < 63) {
        n = b0;
        ++pos;
    } else {  // b0 == 63: extended order
        ++pos;
        int b1 = need_byte(line, pos);
        int nbytes;
        if (b1 < 63) {
            nbytes = 3;
        } else {
            ++pos;  // second 126
            nbytes = 6;
        }
        n = 0;
        for (int i = 0; i < nbytes; ++i, ++pos) n = (n << 6) | need_byte(line, pos);
        if (n > 100000) throw Graph6Error("order too large for this tool", pos - nbytes);
    }

    Graph g((int)n);
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    int u = 0, v = 1;
    for (long long i = 0; i < nbytes; ++i, ++pos) {
        int group = need_byte(line, pos);
        for (int s = 5; s >= 0; --s) {
            int bit = (group >> s) & 1;
            if (v < n) {
                if (bit) g.add_edge(u, v);
                if (++u == v) {
                    u = 0;
                    ++v;
                }
            } else if (bit) {
                throw Graph6Error("nonzero padding bit", pos);
            }
        }
    }
    if (pos != line.size()) throw Graph6Error("trailing bytes after graph6 payload", pos);
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out.push_back((char)(63 + n));
    } else if (n <= 258047) {
        out.push_back((char)126);
        for (int s = 12; s >= 0; s -= 6) out.push_back((char)(63 + ((n >> s) & 63)));
    } else {
        out.push_back((char)126);
        out.push_back((char)126);
        for (int s = 30; s >= 0; s -= 6) out.push_back((char)(63 + ((n >> s) & 63)));
    }
    int group = 0, filled = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back((char)(63 + group));
                group = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back((char)(63 + (group << (6 - filled))));
    return out;
}

// ---- basic operations -------------------------------------------------------

Graph induced(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.n)
            throw std::invalid_argument("induced: vertex out of range");
        if (i && vertices[i] == vertices[i - 1])
            throw std::invalid_argument("induced: duplicate vertex");
    }
    Graph h((int)vertices.size());
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            if (g.has_edge(vertices[a], vertices[b])) h.add_edge(a, b);
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("is_connected: empty graph");
    Bits seen(g.n);
    seen.set(0);
    std::vector<int> stack{0};
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = g.adj[v].next(0); w >= 0; w = g.adj[v].next(w + 1))
            if (!seen.test(w)) {
                seen.set(w);
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == g.n;
}

namespace {

// Max number of internally vertex-disjoint s-t paths (s != t, s !~ t),
// via unit-capacity max-flow on the split digraph: node 2v = v_in,
// 2v+1 = v_out; v_in->v_out capacity 1; edges get infinite capacity.
int disjoint_paths(const Graph& g, int s, int t) {
    int N = 2 * g.n;
    // adjacency with residual capacities, small graphs: dense matrix
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    const int INF = g.n + 1;
    for (int v = 0; v < g.n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? INF : 1;
    for (int u = 0; u < g.n; ++u)
        for (int v = g.adj[u].next(0); v >= 0; v = g.adj[u].next(v + 1)) {
            cap[2 * u + 1][2 * v] = INF;
            cap[2 * v + 1][2 * u] = INF;
        }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(N, -1);
        prev[source] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && prev[sink] < 0) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < N; ++y)
                if (prev[y] < 0 && cap[x][y] > 0) {
                    prev[y] = x;
                    q.push(y);
                }
        }
        if (prev[sink] < 0) break;
        for (int y = sink; y != source; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("vertex_connectivity: empty graph");
    if (g.n == 1) return 0;
    if (!is_connected(g)) return 0;
    int best = g.n - 1;  // attained iff complete
    for (int s = 0; s < g.n; ++s)
        for (int t = s + 1; t < g.n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, disjoint_paths(g, s, t));
    return best;
}

std::vector<std::vector<int>> closed_twin_classes(const Graph& g) {
    std::vector<std::vector<int>> classes;
    std::vector<Bits> reps;
    for (int v = 0; v < g.n; ++v) {
        Bits nb = g.closed_nbhd(v);
        bool placed = false;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (reps[i] == nb) {
                classes[i].push_back(v);
                placed = true;
                break;
            }
        if (!placed) {
            reps.push_back(nb);
            classes.push_back({v});
        }
    }
    return classes;  // ordered by smallest member since v ascends
}

Graph twin_quotient(const Graph& g, const std::vector<std::vector<int>>& classes) {
    Graph q((int)classes.size());
    for (int a = 0; a < q.n; ++a)
        for (int b = a + 1; b < q.n; ++b)
            if (g.has_edge(classes[a][0], classes[b][0])) q.add_edge(a, b);
    return q;
}

std::optional<std::vector<std::vector<int>>> complete_multipartite_parts(const Graph& g) {
    if (g.n == 0) return std::nullopt;
    // Parts = components of the complement; each must be complete there,
    // i.e. an independent set of g with identical neighbourhoods outside.
    Graph co = complement(g);
    std::vector<int> part(g.n, -1);
    std::vector<std::vector<int>> parts;
    for (int v = 0; v < g.n; ++v) {
        if (part[v] >= 0) continue;
        int id = (int)parts.size();
        parts.push_back({});
        std::vector<int> stack{v};
        part[v] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            parts[id].push_back(x);
            for (int y = co.adj[x].next(0); y >= 0; y = co.adj[x].next(y + 1))
                if (part[y] < 0) {
                    part[y] = id;
                    stack.push_back(y);
                }
        }
        std::sort(parts[id].begin(), parts[id].end());
        // complete in the complement <=> independent in g and component-closed
        for (std::size_t i = 0; i < parts[id].size(); ++i)
            for (std::size_t j = i + 1; j < parts[id].size(); ++j)
                if (g.has_edge(parts[id][i], parts[id][j])) return std::nullopt;
    }
    return parts;
}

}  // namespace clawkit
