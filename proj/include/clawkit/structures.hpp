#pragma once
// Structured graph families: generalized combs, the clique expansions
// H_1(C)..H_5(C) plus the fixed graphs H_6/H_7/H_8, fat paths/cycles and the
// class P(l), the tightness family F'(m), and constructive Hamiltonian cycles
// for fat structures. Builders come with exact recognizers (witness-producing)
// built on closed-twin quotients.

#include <optional>
#include <string>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

// ---- generalized combs --------------------------------------------------------

// Base clique C = {0..base_size-1}; m >= 3 pairwise-disjoint non-empty root
// sets R_i inside C; leaf cliques L_i (|L_i| >= 1) fully joined to R_i.
// Pointed iff every |L_i| == 1.
struct CombDescription {
    int base_size = 0;
    std::vector<std::vector<int>> roots;  // R_i, subsets of 0..base_size-1
    std::vector<int> leaf_sizes;          // |L_i|, parallel to roots

    int m() const { return (int)roots.size(); }
    bool pointed() const {
        for (int s : leaf_sizes)
            if (s != 1) return false;
        return true;
    }
    int order() const {
        int o = base_size;
        for (int s : leaf_sizes) o += s;
        return o;
    }
};

// Vertex layout: base 0..base_size-1, then leaf blocks L_1, L_2, ... in order.
// Throws invalid_argument if the description is not a valid comb (m < 3,
// |C| < m, roots not disjoint/non-empty/in range, leaf size < 1).
Graph build_comb(const CombDescription& d);

// Exact recognition via the closed-twin quotient (clique plus >= 3 pendant
// classes on distinct clique classes). Witness description rebuilds a graph
// isomorphic to g. nullopt if g is not a generalized comb.
std::optional<CombDescription> recognize_comb(const Graph& g);

// ---- the fixed graphs H_1..H_8 and their clique expansions ---------------------

// Fixed pattern H_i (1 <= i <= 8) with its documented vertex labeling.
const Graph& h_pattern(int i);
// Indices (within h_pattern(i)) of the expandable vertices U_i; empty for 6..8.
const std::vector<int>& h_expandable(int i);

// A member of H_0 u ... u H_8: index 0 carries a pointed comb; 1..5 carry the
// sizes of the cliques substituted at U_i (in h_expandable order, each >= 1);
// 6..8 are the fixed graphs themselves.
struct HExpansion {
    int index = -1;
    CombDescription comb;           // index == 0 only
    std::vector<int> clique_sizes;  // 1 <= index <= 5 only

    int order() const;
};

// Vertex layout for 1 <= index <= 5: blocks in h_pattern label order, each
// non-expandable vertex a singleton block, each expandable vertex a clique
// block of the requested size inheriting its neighbourhood.
Graph build_H(const HExpansion& e);

// Membership in H_0 u ... u H_8 with a witness; graphs in several families
// report the least index. nullopt if g lies in none.
std::optional<HExpansion> recognize_H_union(const Graph& g);

// ---- fat paths and cycles ------------------------------------------------------

// Fat l-path: cliques L_1..L_l, consecutive ones fully joined (l entries).
// Fat l-cycle: cliques L_0..L_l joined cyclically (l+1 entries).
struct FatDescription {
    enum class Kind { path, cycle };
    Kind kind = Kind::path;
    std::vector<int> clique_sizes;  // all >= 1

    int parameter() const {
        return kind == Kind::path ? (int)clique_sizes.size() : (int)clique_sizes.size() - 1;
    }
    int order() const {
        int o = 0;
        for (int s : clique_sizes) o += s;
        return o;
    }
    // Lexicographically least representative: reversal for paths,
    // rotation+reflection for cycles.
    FatDescription canonical() const;
};

// Vertex layout: clique blocks in clique_sizes order.
Graph build_fat(const FatDescription& d);

// Recognizes members of P(min_l): fat i-paths or fat i-cycles with i >= min_l
// (min_l >= 5; the closed-twin quotient must be a path/cycle of fundamental
// cliques). Returned description is canonical.
std::optional<FatDescription> recognize_fat(const Graph& g, int min_l);

// g in P(l): some fat i-path or fat i-cycle with i >= l. Requires l >= 5.
bool in_P(const Graph& g, int l);

// Internal building block, exposed for the independence-number dispatcher:
// the fundamental cliques of a fat structure in path/cycle order, or nullopt.
struct FatStructure {
    FatDescription desc;                    // in the order of `cliques`, not canonicalized
    std::vector<std::vector<int>> cliques;  // vertex sets of g
};
std::optional<FatStructure> fat_structure_of(const Graph& g);

// ---- tightness family F'(m) ----------------------------------------------------

// F'(m): fat path L_1..L_t with t = max(3m-1, m+3), plus a clique K fully
// joined to L_i for i in {max(m-1,1), max(m,2), max(2m,3), max(2m+1,4)}.
// Empty path_sizes means all ones. Layout: path blocks, then the K block.
Graph build_F_prime(int m, std::vector<int> path_sizes = {}, int k_size = 1);

// ---- Hamiltonian cycles of fat structures ---------------------------------------

// Constructive Hamiltonian cycle of build_fat(d) (requires 2-connectedness:
// throws invalid_argument otherwise). Paths traverse end cliques whole and
// split interior cliques into forward/return strands; cycles concatenate
// blocks. Returns the cyclic vertex order.
std::vector<int> fat_hamiltonian_cycle(const FatDescription& d);

// ---- textual construct syntax ---------------------------------------------------

// "fatpath:2,1,3,1,2" | "fatcycle:1,1,1,1,1,1" |
// "comb:m=3;C=4;R=1,1,1;L=1,1,2" (R = sizes of consecutive root blocks from
// vertex 0) | "H3:u6=2" (expandable-vertex names s3..s5/t3,t4/u6/v4..v6/w7,
// unset sizes default to 1; H6..H8 take no parameters) | "Fprime:m=2".
struct Construct {
    enum class Kind { fat, comb, h, fprime };
    Kind kind = Kind::fat;
    FatDescription fat;    // kind == fat
    CombDescription comb;  // kind == comb
    HExpansion h;          // kind == h
    int fprime_m = 1;      // kind == fprime
};

Construct parse_construct(const std::string& s);
Graph build_construct(const Construct& c);

}  // namespace clawkit
