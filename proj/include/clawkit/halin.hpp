#pragma once
// Fan-cycle systems and spanning Halin subgraph certificates: axiom-by-axiom
// verification, the constructive systems for the 3-connectable structure
// families, and the planarity surrogate (contiguity of subtree leaf sets on
// the cycle) used by the Halin verifier.

#include <string>
#include <utility>
#include <vector>

#include "clawkit/structures.hpp"

namespace clawkit {

// (C; v; Q_1..Q_m; x_1..x_m): cycle C in cyclic order, apex v, vertex-disjoint
// subpaths Q_i of C (order >= 2), attachment vertices x_i.
struct FanCycleSystem {
    std::vector<int> cycle;
    int apex = -1;
    std::vector<std::vector<int>> paths;
    std::vector<int> attach;
};

struct VerifyResult {
    bool ok = true;
    std::string reason;  // first violated axiom/check when !ok
};

// Checks the six axioms in order; reason names the first violated one.
VerifyResult verify_fan_cycle_system(const Graph& g, const FanCycleSystem& s);

// Constructive fan-cycle system for g = build_H(e) when e.index is one of
// {0, 1, 4, 7, 8} and g is 3-connected; throws invalid_argument otherwise
// (indices 2, 3, 5, 6 admit no 3-connected member).
FanCycleSystem fan_cycle_for_H(const Graph& g, const HExpansion& e);

// Spanning Halin certificate: tree edges plus the cycle on the tree's leaves.
struct HalinCandidate {
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> cycle;
};

// T = v joined to the uncovered cycle vertices and the x_i; each x_i joined
// to V(Q_i). Requires a valid system (throws logic_error otherwise).
HalinCandidate halin_from_fan_cycle(const Graph& g, const FanCycleSystem& s);

// Constructive spanning Halin candidate for a 3-connected fat structure
// (paths: interior cliques >= 3; cycles: at most two singleton cliques and
// then cyclically consecutive). Vertices refer to build_fat(d). Throws
// invalid_argument when the 3-connectedness shape conditions fail or the
// parameter is below 3.
HalinCandidate halin_for_fat(const FatDescription& d);

// Checks: spanning tree inside g with no degree-2 vertex and at least one
// internal vertex; cycle edges in g, on exactly the tree's leaves; planarity
// surrogate: every subtree's leaf set is contiguous on the cycle.
VerifyResult verify_halin(const Graph& g, const HalinCandidate& h);

}  // namespace clawkit
