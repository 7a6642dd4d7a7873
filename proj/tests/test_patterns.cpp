#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "clawkit/enumerate.hpp"
#include "clawkit/patterns.hpp"
#include "oracles.hpp"

using namespace clawkit;
using namespace clawkit::test;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("pattern shapes") {
    Graph claw = make_pattern(PatternSpec::claw());
    CHECK(claw.n == 4);
    CHECK(claw.edge_count() == 3);
    CHECK(sorted_degrees(claw) == std::vector<int>{1, 1, 1, 3});

    Graph p6 = make_pattern(PatternSpec::path(6));
    CHECK(p6.n == 6);
    CHECK(p6.edge_count() == 5);
    CHECK(sorted_degrees(p6) == std::vector<int>{1, 1, 2, 2, 2, 2});

    Graph z2 = make_pattern(PatternSpec::Z(2));
    CHECK(z2.n == 5);
    CHECK(z2.edge_count() == 5);

    Graph b12 = make_pattern(PatternSpec::B(1, 2));
    CHECK(b12.n == 6);
    CHECK(b12.edge_count() == 6);

    Graph net = make_pattern(PatternSpec::net());
    CHECK(net.n == 6);
    CHECK(net.edge_count() == 6);
    CHECK(sorted_degrees(net) == std::vector<int>{1, 1, 1, 3, 3, 3});
    CHECK_FALSE(brute_iso(net, b12));

    Graph k4 = make_pattern(PatternSpec::complete(4));
    CHECK(k4.n == 4);
    CHECK(k4.edge_count() == 6);

    // B(1,1) is the bull
    Graph bull = make_pattern(PatternSpec::B(1, 1));
    CHECK(bull.n == 5);
    CHECK(bull.edge_count() == 5);
    CHECK(sorted_degrees(bull) == std::vector<int>{1, 1, 2, 3, 3});
}

TEST_CASE("pattern names and parsing") {
    CHECK(PatternSpec::claw().name() == "K1,3");
    CHECK(PatternSpec::path(6).name() == "P6");
    CHECK(PatternSpec::Z(2).name() == "Z2");
    CHECK(PatternSpec::B(1, 2).name() == "B1,2");
    CHECK(PatternSpec::net().name() == "N");
    CHECK(PatternSpec::complete(4).name() == "K4");
    CHECK(PatternSpec::nklm(2, 1, 1).name() == "N(2,1,1)");
    CHECK(PatternSpec::nklm(0, 0, 0).name() == "K3");

    for (const char* s : {"K1,3", "P6", "Z2", "B1,2", "N", "N(2,1,1)", "K4"}) {
        PatternSpec spec = parse_pattern(s);
        CHECK(spec.name() == s);
    }
    CHECK(brute_iso(make_pattern(parse_pattern("K1,3")), make_pattern(PatternSpec::claw())));
    CHECK(brute_iso(make_pattern(parse_pattern("N")), make_pattern(PatternSpec::nklm(1, 1, 1))));
    CHECK_THROWS_AS(parse_pattern("Q7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern("P0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern(""), std::invalid_argument);

    auto fam = parse_family("K1,3,Z2");
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].name() == "K1,3");
    CHECK(fam[1].name() == "Z2");
    auto fam2 = parse_family("K1,3,B1,2");
    REQUIRE(fam2.size() == 2);
    CHECK(fam2[1].name() == "B1,2");
}

TEST_CASE("find_induced agrees with subset search") {
    std::vector<PatternSpec> pats{PatternSpec::claw(),   PatternSpec::path(4),
                                  PatternSpec::path(5),  PatternSpec::complete(3),
                                  PatternSpec::Z(1),     PatternSpec::B(1, 1),
                                  PatternSpec::net()};
    std::vector<Graph> pgraphs;
    for (const auto& p : pats) pgraphs.push_back(make_pattern(p));
    for (int n = 2; n <= 6; ++n)
        enumerate_connected_stream(n, [&](const Graph& g) {
            for (size_t i = 0; i < pats.size(); ++i) {
                auto emb = find_induced(g, pgraphs[i]);
                bool oracle = brute_has_induced(g, pgraphs[i]);
                CHECK(emb.has_value() == oracle);
                if (emb) {
                    // embedding is a genuine induced copy
                    const Graph& pat = pgraphs[i];
                    for (int a = 0; a < pat.n; ++a)
                        for (int b = a + 1; b < pat.n; ++b)
                            CHECK(pat.has_edge(a, b) ==
                                  g.has_edge((*emb)[a], (*emb)[b]));
                }
            }
        });
}

TEST_CASE("freeness and violations") {
    Graph claw = make_pattern(PatternSpec::claw());
    std::vector<PatternSpec> fam{PatternSpec::claw(), PatternSpec::Z(2)};
    CHECK_FALSE(is_free(claw, fam));
    auto viol = find_family_violation(claw, fam);
    REQUIRE(viol.has_value());
    CHECK(viol->family_index == 0);
    CHECK(viol->embedding.size() == 4);

    Graph p5 = make_pattern(PatternSpec::path(5));
    CHECK(is_free(p5, fam));
    CHECK_FALSE(find_family_violation(p5, fam).has_value());
}

TEST_CASE("family order") {
    std::vector<PatternSpec> f_claw_b11{PatternSpec::claw(), PatternSpec::B(1, 1)};
    std::vector<PatternSpec> f_claw_b12{PatternSpec::claw(), PatternSpec::B(1, 2)};
    std::vector<PatternSpec> f_z1{PatternSpec::Z(1)};
    std::vector<PatternSpec> f_z2{PatternSpec::Z(2)};

    // every member of the coarser family contains a member of the finer one
    CHECK(family_leq(f_claw_b11, f_claw_b12));
    CHECK_FALSE(family_leq(f_claw_b12, f_claw_b11));
    CHECK(family_leq(f_z1, f_z2));
    CHECK_FALSE(family_leq(f_z2, f_z1));
    // B(1,1) contains Z1 as induced subgraph
    CHECK(family_leq(f_z1, {PatternSpec::B(1, 1)}));
    CHECK(family_leq(f_claw_b11, f_claw_b11));
}

TEST_CASE("isomorphic wrapper agrees with the oracle") {
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Graph p5 = make_pattern(PatternSpec::path(5));
    CHECK_FALSE(isomorphic(c5, p5));
    Graph c5b = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(isomorphic(c5, c5b));
    CHECK(brute_iso(c5, c5b));
    for (int n = 4; n <= 5; ++n) {
        std::vector<Graph> all;
        enumerate_connected_stream(n, [&](const Graph& g) { all.push_back(g); });
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j)
                CHECK(isomorphic(all[i], all[j]) == (i == j));
    }
}
