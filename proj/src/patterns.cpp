#include "clawkit/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>

namespace clawkit {

// ---- PatternSpec ------------------------------------------------------------

PatternSpec PatternSpec::nklm(int k, int l, int m) {
    if (k < 0 || l < 0 || m < 0) throw std::invalid_argument("nklm: negative tail length");
    std::array<int, 3> t{k, l, m};
    std::sort(t.begin(), t.end(), std::greater<int>());  // canonical: a >= b >= c
    return {Kind::NKLM, t[0], t[1], t[2]};
}

int PatternSpec::order() const {
    switch (kind) {
        case Kind::Complete:
        case Kind::Path: return a;
        case Kind::Star13: return 4;
        case Kind::NKLM: return 3 + a + b + c;
    }
    return 0;
}

std::string PatternSpec::name() const {
    switch (kind) {
        case Kind::Complete: return "K" + std::to_string(a);
        case Kind::Path: return "P" + std::to_string(a);
        case Kind::Star13: return "K1,3";
        case Kind::NKLM:
            if (a == 1 && b == 1 && c == 1) return "N";
            if (b == 0 && c == 0) return a == 0 ? "K3" : "Z" + std::to_string(a);
            // bulls are conventionally written with the shorter tail first
            if (c == 0) return "B" + std::to_string(b) + "," + std::to_string(a);
            return "N(" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
    }
    return "?";
}

// ---- pattern name parsing ---------------------------------------------------

namespace {

int read_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("pattern syntax: number expected in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
}

PatternSpec read_pattern(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("pattern syntax: empty pattern");
    // greedy: "K1,3" beats the reading K1 followed by a stray "3"
    if (s.compare(pos, 4, "K1,3") == 0) {
        pos += 4;
        return PatternSpec::claw();
    }
    char head = s[pos];
    switch (head) {
        case 'K': {
            ++pos;
            int n = read_int(s, pos);
            if (n < 1) throw std::invalid_argument("pattern syntax: K needs order >= 1");
            return PatternSpec::complete(n);
        }
        case 'P': {
            ++pos;
            int n = read_int(s, pos);
            if (n < 1) throw std::invalid_argument("pattern syntax: P needs order >= 1");
            return PatternSpec::path(n);
        }
        case 'Z': {
            ++pos;
            return PatternSpec::Z(read_int(s, pos));
        }
        case 'B': {
            ++pos;
            int k = read_int(s, pos);
            if (pos >= s.size() || s[pos] != ',')
                throw std::invalid_argument("pattern syntax: B expects B<k>,<l>");
            ++pos;
            int l = read_int(s, pos);
            return PatternSpec::B(k, l);
        }
        case 'N': {
            ++pos;
            if (pos < s.size() && s[pos] == '(') {
                ++pos;
                int k = read_int(s, pos);
                if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("pattern syntax: N(k,l,m)");
                ++pos;
                int l = read_int(s, pos);
                if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("pattern syntax: N(k,l,m)");
                ++pos;
                int m = read_int(s, pos);
                if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("pattern syntax: N(k,l,m)");
                ++pos;
                return PatternSpec::nklm(k, l, m);
            }
            return PatternSpec::net();
        }
        default:
            throw std::invalid_argument(std::string("pattern syntax: unknown pattern at '") +
                                        s.substr(pos) + "'");
    }
}

}  // namespace

PatternSpec parse_pattern(const std::string& text) {
    std::size_t pos = 0;
    PatternSpec p = read_pattern(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("pattern syntax: trailing characters in '" + text + "'");
    return p;
}

std::vector<PatternSpec> parse_family(const std::string& text) {
    std::vector<PatternSpec> out;
    std::size_t pos = 0;
    while (true) {
        out.push_back(read_pattern(text, pos));
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw std::invalid_argument("family syntax: ',' expected in '" + text + "'");
        ++pos;
    }
    return out;
}

// ---- pattern construction ---------------------------------------------------

Graph make_pattern(const PatternSpec& spec) {
    switch (spec.kind) {
        case PatternSpec::Kind::Complete: {
            Graph g(spec.a);
            for (int u = 0; u < g.n; ++u)
                for (int v = u + 1; v < g.n; ++v) g.add_edge(u, v);
            return g;
        }
        case PatternSpec::Kind::Path: {
            Graph g(spec.a);
            for (int v = 1; v < g.n; ++v) g.add_edge(v - 1, v);
            return g;
        }
        case PatternSpec::Kind::Star13: {
            Graph g(4);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(0, 3);
            return g;
        }
        case PatternSpec::Kind::NKLM: {
            // triangle 0,1,2; tail of length a off 0, b off 1, c off 2
            Graph g(3 + spec.a + spec.b + spec.c);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(1, 2);
            int next = 3;
            for (int root : {0, 1, 2}) {
                int len = root == 0 ? spec.a : root == 1 ? spec.b : spec.c;
                int prev = root;
                for (int i = 0; i < len; ++i, ++next) {
                    g.add_edge(prev, next);
                    prev = next;
                }
            }
            return g;
        }
    }
    throw std::logic_error("make_pattern: bad kind");
}

// ---- induced-subgraph search -------------------------------------------------

namespace {

// Search order over pattern vertices: grow a connected order greedily, at each
// step preferring most already-ordered neighbours, then higher degree, then
// lower index. Components are appended in the same discipline.
std::vector<int> search_order(const Graph& p) {
    int n = p.n;
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> in(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, ba = -1, bd = -1;
        for (int v = 0; v < n; ++v) {
            if (in[v]) continue;
            int a = 0;
            for (int u : order)
                if (p.has_edge(u, v)) ++a;
            int d = p.degree(v);
            if (a > ba || (a == ba && (d > bd || (d == bd && (best < 0 || v < best))))) {
                best = v;
                ba = a;
                bd = d;
            }
        }
        order.push_back(best);
        in[best] = 1;
    }
    return order;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern) {
    int pn = pattern.n, hn = host.n;
    if (pn == 0) return std::vector<int>{};
    if (pn > hn) return std::nullopt;

    std::vector<int> order = search_order(pattern);
    std::vector<int> img(pn, -1);  // order position -> host vertex
    Bits used(hn);

    // host tried in ascending vertex order => lexicographically least
    // embedding under the search order
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == pn) return true;
        int pv = order[i];
        int pdeg = pattern.degree(pv);
        for (int hv = 0; hv < hn; ++hv) {
            if (used.test(hv) || host.degree(hv) < pdeg) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j)
                if (pattern.has_edge(order[j], pv) != host.has_edge(img[j], hv)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            img[i] = hv;
            used.set(hv);
            if (rec(i + 1)) return true;
            used.reset(hv);
            img[i] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::vector<int> map(pn);
    for (int i = 0; i < pn; ++i) map[order[i]] = img[i];
    return map;
}

// ---- freeness and family order ----------------------------------------------

std::optional<FreeViolation> find_family_violation(const Graph& host,
                                                   const std::vector<PatternSpec>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (auto emb = find_induced(host, make_pattern(family[i])))
            return FreeViolation{(int)i, *emb};
    }
    return std::nullopt;
}

bool is_free(const Graph& host, const std::vector<PatternSpec>& family) {
    return !find_family_violation(host, family).has_value();
}

bool family_leq(const std::vector<PatternSpec>& f1, const std::vector<PatternSpec>& f2) {
    for (const auto& s2 : f2) {
        Graph h2 = make_pattern(s2);
        bool covered = false;
        for (const auto& s1 : f1)
            if (find_induced(h2, make_pattern(s1))) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg(g.n), dh(h.n);
    for (int v = 0; v < g.n; ++v) dg[v] = g.degree(v);
    for (int v = 0; v < h.n; ++v) dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    // an induced embedding between equal-order graphs with equal size is an iso
    return find_induced(h, g).has_value();
}

}  // namespace clawkit
