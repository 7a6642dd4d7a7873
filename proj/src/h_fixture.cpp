// Fixture tables for the fixed graphs H_1..H_8. This file is the single
// point of transcription: no other code spells these adjacencies.
//
// Vertex labels follow the source drawings; label k maps to vertex k-1.
//   H1: s1..s5   H2: t1..t6   H3: u1..u6   H4: v1..v6
//   H5: w1..w7   H6: x1..x7   H7: y1..y8   H8: z1..z9
// Expandable vertex sets (clique substitution points):
//   U1 = {s3,s4,s5}   U2 = {t3,t4}   U3 = {u6}   U4 = {v4,v5,v6}   U5 = {w7}
// H6, H7, H8 admit no expansion.

#include "clawkit/structures.hpp"

namespace clawkit {

namespace {

struct HTable {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> expandable;
};

const HTable& h_table(int i) {
    static const HTable tables[8] = {
        // H1 = B(1,1), the bull
        {5,
         {{0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}},
         {2, 3, 4}},
        // H2
        {6,
         {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
         {2, 3}},
        // H3
        {6,
         {{0, 1}, {0, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 5}, {4, 5}},
         {5}},
        // H4, the 3-sun: inner triangle v4v5v6, outer v1v2v3
        {6,
         {{0, 3}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
         {3, 4, 5}},
        // H5: w7 is the common midpoint of both long diagonals (degree 4)
        {7,
         {{0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 6}, {4, 5}, {4, 6}, {5, 6}},
         {6}},
        // H6
        {7,
         {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6},
          {5, 6}},
         {}},
        // H7
        {8,
         {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 6}, {3, 5}, {3, 6},
          {4, 5}, {4, 7}, {5, 7}, {6, 7}},
         {}},
        // H8: 4-regular; z9 is adjacent to exactly z1, z2, z7, z8
        {9,
         {{0, 1}, {0, 2}, {0, 4}, {0, 8}, {1, 3}, {1, 5}, {1, 8}, {2, 3}, {2, 4}, {2, 6},
          {3, 5}, {3, 6}, {4, 5}, {4, 7}, {5, 7}, {6, 7}, {6, 8}, {7, 8}},
         {}},
    };
    if (i < 1 || i > 8) throw std::invalid_argument("h_pattern: index must be 1..8");
    return tables[i - 1];
}

}  // namespace

const Graph& h_pattern(int i) {
    static const std::vector<Graph> cache = [] {
        std::vector<Graph> c;
        for (int k = 1; k <= 8; ++k) {
            const HTable& t = h_table(k);
            c.push_back(Graph::from_edges(t.n, t.edges));
        }
        return c;
    }();
    h_table(i);  // range check
    return cache[i - 1];
}

const std::vector<int>& h_expandable(int i) { return h_table(i).expandable; }

}  // namespace clawkit
