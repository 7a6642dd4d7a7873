#pragma once
// Independence numbers: exact branch-and-bound, the closed-form value for fat
// structures (ceil(l/2) for fat l-paths, floor((l+1)/2) for fat l-cycles, with
// an explicit witness), and the dispatcher for connected {K1,3, B(1,1)}-free
// graphs that routes P5-containing inputs through the fat formula.

#include <string>
#include <vector>

#include "clawkit/graph.hpp"
#include "clawkit/structures.hpp"

namespace clawkit {

struct AlphaResult {
    int alpha = 0;
    std::vector<int> witness;  // a maximum independent set
    std::string method;        // "bruteforce" | "fat_formula" | "dispatcher"
};

// Exact maximum independent set (branch and bound on bitsets).
AlphaResult alpha_bruteforce(const Graph& g);

// alpha of build_fat(d) by the closed form, witness picks one vertex from
// every other fundamental clique (in build_fat(d) numbering).
AlphaResult alpha_fat(const FatDescription& d);

// Requires g connected and {K1,3, B(1,1)}-free (throws invalid_argument
// otherwise). If g contains an induced P5 it must be a fat structure; a
// recognition failure there throws logic_error (a theorem-level bug).
AlphaResult alpha_B11free(const Graph& g);

}  // namespace clawkit
