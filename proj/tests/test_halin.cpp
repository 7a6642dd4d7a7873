#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "clawkit/halin.hpp"
#include "clawkit/patterns.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace clawkit;
using namespace clawkit::test;

namespace {

Graph wheel(int rim) {
    Graph g(rim + 1);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Subdivide edge (u, v): remove it, route through a fresh vertex.
Graph subdivide(const Graph& g, int u, int v) {
    Graph h(g.n + 1);
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
    h.add_edge(u, g.n);
    h.add_edge(v, g.n);
    return h;
}

// The graph consisting of exactly the candidate's tree and cycle edges.
Graph halin_graph(int n, const HalinCandidate& c) {
    Graph g(n);
    for (auto [u, v] : c.tree_edges)
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    int cl = (int)c.cycle.size();
    for (int i = 0; i < cl; ++i) {
        int a = c.cycle[i], b = c.cycle[(i + 1) % cl];
        if (!g.has_edge(a, b)) g.add_edge(a, b);
    }
    return g;
}

FanCycleSystem wheel5_system() {
    FanCycleSystem s;
    s.cycle = {0, 1, 2, 3, 4};
    s.apex = 5;
    return s;
}

}  // namespace

TEST_CASE("planarity oracle self-tests") {
    CHECK(planar_kuratowski(complete(4)));
    CHECK(planar_kuratowski(wheel(6)));
    Graph k5e = complete(5);
    Graph k5_minus = Graph(5);
    for (auto [u, v] : k5e.edges())
        if (!(u == 0 && v == 1)) k5_minus.add_edge(u, v);
    CHECK(planar_kuratowski(k5_minus));
    CHECK(planar_kuratowski(make_pattern(PatternSpec::path(7))));

    CHECK_FALSE(planar_kuratowski(complete(5)));
    CHECK_FALSE(planar_kuratowski(complete_bipartite(3, 3)));
    CHECK_FALSE(planar_kuratowski(petersen()));
    CHECK_FALSE(planar_kuratowski(subdivide(complete(5), 0, 1)));
    CHECK_FALSE(planar_kuratowski(subdivide(complete_bipartite(3, 3), 0, 3)));
    CHECK_FALSE(planar_kuratowski(complete(6)));
}

TEST_CASE("wheel fan-cycle system and Halin certificate") {
    Graph w5 = wheel(5);
    FanCycleSystem s = wheel5_system();
    CHECK(verify_fan_cycle_system(w5, s).ok);

    HalinCandidate cand = halin_from_fan_cycle(w5, s);
    CHECK(cand.tree_edges.size() == 5);
    CHECK(cand.cycle.size() == 5);
    CHECK(verify_halin(w5, cand).ok);
    CHECK(planar_kuratowski(halin_graph(6, cand)));

    Graph w6 = wheel(6);
    FanCycleSystem s6;
    s6.cycle = {0, 1, 2, 3, 4, 5};
    s6.apex = 6;
    CHECK(verify_fan_cycle_system(w6, s6).ok);
    CHECK(verify_halin(w6, halin_from_fan_cycle(w6, s6)).ok);
}

TEST_CASE("fan-cycle axioms fail with the right reasons") {
    Graph w5 = wheel(5);
    auto expect = [&](const Graph& g, const FanCycleSystem& s, const char* prefix) {
        VerifyResult r = verify_fan_cycle_system(g, s);
        CHECK_FALSE(r.ok);
        CHECK(r.reason.substr(0, std::string(prefix).size()) == prefix);
    };

    {  // axiom 1
        FanCycleSystem s = wheel5_system();
        s.cycle = {0, 1};
        expect(w5, s, "axiom 1");
        s = wheel5_system();
        s.cycle = {0, 1, 2, 3, 1};
        expect(w5, s, "axiom 1: repeated");
        s = wheel5_system();
        s.cycle = {0, 2, 4, 1, 3};
        expect(w5, s, "axiom 1: consecutive");
    }

    // richer host: H7 with its fixed system
    Graph h7 = h_pattern(7);
    HExpansion e7{7, {}, {}};
    FanCycleSystem s7 = fan_cycle_for_H(h7, e7);
    CHECK(verify_fan_cycle_system(h7, s7).ok);
    REQUIRE(s7.paths.size() == 2);

    {  // axiom 2
        FanCycleSystem s = s7;
        s.paths.push_back({s.cycle[0]});
        expect(h7, s, "axiom 2: paths/attachments count mismatch");
        s = s7;
        s.paths[0] = {s7.paths[0][0]};
        expect(h7, s, "axiom 2: path of order < 2");
        s = s7;
        s.paths[0] = {s7.apex, s7.paths[0][1]};
        expect(h7, s, "axiom 2: path vertex not on cycle");
        s = s7;
        s.paths[1] = s7.paths[0];
        expect(h7, s, "axiom 2: paths not vertex-disjoint");
        s = s7;
        // two cycle vertices two steps apart
        s.paths[0] = {s.cycle[0], s.cycle[2]};
        expect(h7, s, "axiom 2: path not consecutive");
    }
    {  // axiom 3
        FanCycleSystem s = s7;
        s.apex = s.cycle[0];
        expect(h7, s, "axiom 3: apex missing or on cycle");
        s = s7;
        s.attach[0] = s.cycle[0];
        expect(h7, s, "axiom 3: attachment on cycle");
        s = s7;
        s.attach[0] = s.apex;
        expect(h7, s, "axiom 3: apex/attachments not distinct");
        s = s7;
        s.paths.pop_back();
        s.attach.pop_back();
        expect(h7, s, "axiom 3: cycle plus apex/attachments do not exhaust V");
    }
    {  // axiom 4: apex with too few branches
        Graph g(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        FanCycleSystem s;
        s.cycle = {0, 1, 2, 3};
        s.apex = 4;
        s.paths = {{0, 1, 2, 3}};
        s.attach = {5};
        expect(g, s, "axiom 4");
    }
    {  // axiom 5: apex missing adjacencies
        Graph g(6);
        for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
        FanCycleSystem s;
        s.cycle = {0, 1, 2, 3, 4};
        s.apex = 5;
        expect(g, s, "axiom 5: apex not adjacent to uncovered");

        Graph h(7);
        for (int i = 0; i < 5; ++i) {
            h.add_edge(i, (i + 1) % 5);
            h.add_edge(i, 5);
        }
        FanCycleSystem t;
        t.cycle = {0, 1, 2, 3, 4};
        t.apex = 5;
        t.paths = {{0, 1}};
        t.attach = {6};
        expect(h, t, "axiom 5: apex not adjacent to attachment");

        // axiom 6: attachment missing an edge into its path
        h.add_edge(5, 6);
        h.add_edge(6, 0);
        expect(h, t, "axiom 6");
        h.add_edge(6, 1);
        CHECK(verify_fan_cycle_system(h, t).ok);
    }
}

TEST_CASE("constructive systems for the 3-connected families") {
    std::vector<std::pair<Graph, HExpansion>> cases;

    CombDescription comb{9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}, {1, 1, 1}};
    cases.push_back({build_comb(comb), HExpansion{0, comb, {}}});
    CombDescription comb2{10, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8, 9}}, {1, 1, 1}};
    cases.push_back({build_comb(comb2), HExpansion{0, comb2, {}}});
    for (auto sizes : {std::vector<int>{3, 3, 1}, std::vector<int>{3, 4, 2}}) {
        HExpansion e{1, {}, sizes};
        cases.push_back({build_H(e), e});
    }
    HExpansion e4{4, {}, {2, 2, 2}};
    cases.push_back({build_H(e4), e4});
    cases.push_back({h_pattern(7), HExpansion{7, {}, {}}});
    cases.push_back({h_pattern(8), HExpansion{8, {}, {}}});

    for (auto& [g, e] : cases) {
        CAPTURE(e.index);
        REQUIRE(vertex_connectivity(g) >= 3);
        FanCycleSystem s = fan_cycle_for_H(g, e);
        CHECK(verify_fan_cycle_system(g, s).ok);
        HalinCandidate cand = halin_from_fan_cycle(g, s);
        VerifyResult r = verify_halin(g, cand);
        CHECK(r.ok);
        if (g.n <= 11) CHECK(planar_kuratowski(halin_graph(g.n, cand)));
    }

    // families without 3-connected members refuse construction
    for (int i : {2, 3, 5, 6}) {
        std::vector<int> ones(h_expandable(i).size(), 1);
        HExpansion e{i, {}, ones};
        CHECK_THROWS_AS(fan_cycle_for_H(h_pattern(i), e), std::invalid_argument);
    }
    // a member that is not 3-connected refuses too
    HExpansion bull{1, {}, {1, 1, 1}};
    CHECK_THROWS_AS(fan_cycle_for_H(build_H(bull), bull), std::invalid_argument);
    // graph/description mismatch
    CHECK_THROWS_AS(fan_cycle_for_H(h_pattern(7), HExpansion{8, {}, {}}),
                    std::invalid_argument);
}

TEST_CASE("Halin candidates for fat structures") {
    std::vector<FatDescription> good{
        {FatDescription::Kind::path, {1, 3, 3, 3, 1}},
        {FatDescription::Kind::path, {2, 3, 4, 3, 2}},
        {FatDescription::Kind::path, {1, 3, 3, 1}},
        {FatDescription::Kind::cycle, {2, 2, 2, 2, 2, 2}},
        {FatDescription::Kind::cycle, {1, 1, 2, 2, 2, 2}},
        {FatDescription::Kind::cycle, {2, 2, 2, 3}},
    };
    for (const auto& d : good) {
        Graph g = build_fat(d);
        REQUIRE(vertex_connectivity(g) >= 3);
        HalinCandidate cand = halin_for_fat(d);
        VerifyResult r = verify_halin(g, cand);
        CAPTURE(r.reason);
        CHECK(r.ok);
        if (g.n <= 11) CHECK(planar_kuratowski(halin_graph(g.n, cand)));
    }

    std::vector<FatDescription> bad{
        {FatDescription::Kind::path, {1, 2, 3, 3, 1}},      // thin interior
        {FatDescription::Kind::path, {1, 3}},               // parameter below 3
        {FatDescription::Kind::cycle, {2, 1, 2, 1, 2, 2}},  // singletons apart
        {FatDescription::Kind::cycle, {1, 1, 1, 2, 2, 2}},  // three singletons
    };
    for (const auto& d : bad) CHECK_THROWS_AS(halin_for_fat(d), std::invalid_argument);

    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        FatDescription d = random_fat_3connected(rng, 4, 7, 3);
        Graph g = build_fat(d);
        REQUIRE(vertex_connectivity(g) >= 3);
        HalinCandidate cand = halin_for_fat(d);
        CHECK(verify_halin(g, cand).ok);
    }
}

TEST_CASE("verify_halin failure reasons") {
    Graph w5 = wheel(5);
    HalinCandidate base = halin_from_fan_cycle(w5, wheel5_system());
    auto expect = [&](const Graph& g, const HalinCandidate& c, const char* prefix) {
        VerifyResult r = verify_halin(g, c);
        CHECK_FALSE(r.ok);
        CHECK(r.reason.substr(0, std::string(prefix).size()) == prefix);
    };

    HalinCandidate c = base;
    c.tree_edges.pop_back();
    expect(w5, c, "tree: edge count");

    c = base;
    c.tree_edges[0] = {0, 2};  // not an edge of the wheel
    expect(w5, c, "tree: edge not present");

    c = base;
    c.tree_edges[0] = c.tree_edges[1];  // repeated edge: n-1 edges but a cycle
    expect(w5, c, "tree: not spanning");

    c = base;  // path tree through the hub has degree-2 vertices
    c.tree_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    expect(w5, c, "tree: vertex of degree 2");

    c = base;
    c.cycle = {0, 1, 2, 3};
    expect(w5, c, "cycle:");

    c = base;
    c.cycle = {0, 2, 4, 1, 3};
    expect(w5, c, "cycle: consecutive vertices not adjacent");
}

TEST_CASE("contiguity is exactly planarity on tree-plus-cycle graphs") {
    // interleaved spider: the classic non-contiguous candidate, and a K3,3
    // subdivision in disguise
    Graph host(8);
    host.add_edge(0, 1);  // two centers
    int a1 = 2, a2 = 3, a3 = 4, b1 = 5, b2 = 6, b3 = 7;
    for (int a : {a1, a2, a3}) host.add_edge(0, a);
    for (int b : {b1, b2, b3}) host.add_edge(1, b);
    HalinCandidate spider;
    spider.tree_edges = {{0, 1}, {0, a1}, {0, a2}, {0, a3}, {1, b1}, {1, b2}, {1, b3}};

    std::vector<int> interleaved{a1, b1, a2, b2, a3, b3};
    for (size_t i = 0; i < interleaved.size(); ++i)
        host.add_edge(interleaved[i], interleaved[(i + 1) % interleaved.size()]);
    spider.cycle = interleaved;
    VerifyResult r = verify_halin(host, spider);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.substr(0, 9) == "planarity");
    CHECK_FALSE(planar_kuratowski(host));

    // grouped order: contiguous and planar
    Graph host2(8);
    host2.add_edge(0, 1);
    for (int a : {a1, a2, a3}) host2.add_edge(0, a);
    for (int b : {b1, b2, b3}) host2.add_edge(1, b);
    std::vector<int> grouped{a1, a2, a3, b1, b2, b3};
    for (size_t i = 0; i < grouped.size(); ++i)
        host2.add_edge(grouped[i], grouped[(i + 1) % grouped.size()]);
    HalinCandidate spider2 = spider;
    spider2.cycle = grouped;
    CHECK(verify_halin(host2, spider2).ok);
    CHECK(planar_kuratowski(host2));

    // randomized agreement: take a genuine Halin tree, permute the cycle
    // order, and host exactly tree + permuted cycle; the verifier's
    // contiguity check must coincide with the planarity oracle
    std::mt19937 rng(29);
    int checked = 0, nonplanar_seen = 0;
    while (checked < 120) {
        FatDescription d = random_fat_3connected(rng, 4, 6, 2);
        if (build_fat(d).n > 11) continue;
        HalinCandidate cand = halin_for_fat(d);
        std::vector<int> order = cand.cycle;
        std::shuffle(order.begin(), order.end(), rng);
        HalinCandidate mutant{cand.tree_edges, order};
        Graph g = halin_graph(build_fat(d).n, mutant);
        VerifyResult v = verify_halin(g, mutant);
        if (!v.ok) {
            // only the contiguity check may reject: the host contains the
            // mutated cycle by construction
            CHECK(v.reason.substr(0, 9) == "planarity");
        }
        CHECK(v.ok == planar_kuratowski(g));
        if (!v.ok) ++nonplanar_seen;
        ++checked;
    }
    CHECK(nonplanar_seen > 0);  // the shuffles did exercise the negative side
}
