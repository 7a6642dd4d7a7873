#pragma once
// Named pattern graphs (complete graphs, paths, the claw, the N_{k,l,m}
// family with its Z/B/net aliases), induced-subgraph search, freeness over
// pattern families, the family comparison order, and isomorphism testing.

#include <optional>
#include <string>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

struct PatternSpec {
    enum class Kind { Complete, Path, Star13, NKLM };
    Kind kind = Kind::Complete;
    int a = 0, b = 0, c = 0;  // Complete/Path: a = order; NKLM: tail lengths a >= b >= c

    static PatternSpec complete(int n) { return {Kind::Complete, n, 0, 0}; }
    static PatternSpec path(int n) { return {Kind::Path, n, 0, 0}; }
    static PatternSpec claw() { return {Kind::Star13, 0, 0, 0}; }
    // N_{k,l,m}: triangle with pendant paths of k, l, m extra vertices.
    static PatternSpec nklm(int k, int l, int m);
    static PatternSpec Z(int k) { return nklm(k, 0, 0); }
    static PatternSpec B(int k, int l) { return nklm(k, l, 0); }
    static PatternSpec net() { return nklm(1, 1, 1); }

    int order() const;
    // Canonical display name: K4, P6, K1,3, Z2, B1,2, N, N(2,1,1).
    std::string name() const;

    bool operator==(const PatternSpec& o) const {
        return kind == o.kind && a == o.a && b == o.b && c == o.c;
    }
};

// Parses one pattern name: K1,3 | K<n> | P<n> | Z<k> | B<k>,<l> | N | N(<k>,<l>,<m>).
PatternSpec parse_pattern(const std::string& text);
// Parses a comma-separated family, e.g. "K1,3,Z2" -> {claw, Z2}.
std::vector<PatternSpec> parse_family(const std::string& text);

// Concrete pattern graph; vertex layout is fixed and documented per kind
// (NKLM: 0,1,2 = triangle; then the three tails in order).
Graph make_pattern(const PatternSpec& spec);

// First induced embedding of `pattern` into `host` in the deterministic
// search order (lexicographically least under the internal vertex order),
// as a map pattern-vertex -> host-vertex. nullopt if none.
std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern);

struct FreeViolation {
    int family_index = 0;          // which family member was found
    std::vector<int> embedding;    // pattern vertex -> host vertex
};
// host is family-free iff no member occurs as an induced subgraph.
// If not free, reports the first violating member (family order) + embedding.
std::optional<FreeViolation> find_family_violation(const Graph& host,
                                                   const std::vector<PatternSpec>& family);
bool is_free(const Graph& host, const std::vector<PatternSpec>& family);

// Family order: f1 <= f2 iff every member of f2 contains some member of f1
// as an induced subgraph. Implies every f1-free graph is f2-free.
bool family_leq(const std::vector<PatternSpec>& f1, const std::vector<PatternSpec>& f2);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace clawkit
