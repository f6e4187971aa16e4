// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <set>

#include "obstruction.hpp"

using namespace modtor;

TEST_CASE("candidate construction for x0_32 over F_27") {
    const ModelSet& set = builtin_models();
    const Model& m = set.get("x0_32");
    Candidates c = build_candidates(m, set.field(3, 3), 32);

    CHECK(c.rows.size() == 28);
    CHECK(c.vertex_count() == 24);

    // the first candidate is the first extension point, numbered 1
    const CandidateRow& first = c.row_of_vertex(1);
    CHECK(first.point.x.str() == "[0,1,0]");
    CHECK(first.point.y.str() == "[2,1,1]");
    CHECK(first.j.has_value());
    CHECK(first.j->str() == "[2,1,2]");
    CHECK(first.marked);
    CHECK(first.images.size() == 2);

    // degenerate rows carry no j, no trace, no vertex
    for (const auto& row : c.rows)
        if (!row.j) {
            CHECK(row.vertex == 0);
            CHECK_FALSE(row.trace.has_value());
        }
}

TEST_CASE("no candidates survive over F_3 itself") {
    const ModelSet& set = builtin_models();
    Candidates c = build_candidates(set.get("x0_32"), set.field(3, 1), 32);
    CHECK(c.rows.size() == 4);
    CHECK(c.vertex_count() == 0);
}

TEST_CASE("x0_32 branch graphs") {
    const ModelSet& set = builtin_models();
    Candidates c = build_candidates(set.get("x0_32"), set.field(3, 3), 32);

    ObstructionGraph g = build_graph(c, "omega");
    CHECK(g.vertex_count == 24);
    CHECK(g.edges.size() == 12);  // a perfect matching, no fixed points
    for (const auto& e : g.edges) CHECK(e[0] != e[1]);
    CHECK(g.components.size() == 12);

    // a single involution gives a 1-regular graph
    std::map<int, int> degree;
    for (const auto& e : g.edges) {
        degree[e[0]]++;
        degree[e[1]]++;
    }
    for (int v = 1; v <= 24; ++v) CHECK(degree[v] == 1);

    EliminationResult res = graph_verdict(g);
    CHECK(res.pass);

    ObstructionGraph g2 = build_graph(c, "omega_prime");
    CHECK(graph_verdict(g2).pass);
    CHECK(g2.edges != g.edges);

    // branch handling is strict
    CHECK_THROWS_AS(build_graph(c, ""), Error);
    CHECK_THROWS_AS(build_graph(c, "omega3"), Error);
}

TEST_CASE("x0_24 graph is 24 copies of K4") {
    const ModelSet& set = builtin_models();
    Candidates c = build_candidates(set.get("x0_24"), set.field(5, 3), 24);
    CHECK(c.rows.size() == 104);
    CHECK(c.vertex_count() == 96);

    ObstructionGraph g = build_graph(c, "");
    CHECK(g.vertex_count == 96);
    CHECK(g.edges.size() == 144);
    for (const auto& e : g.edges) CHECK(e[0] != e[1]);
    REQUIRE(g.components.size() == 24);
    for (const auto& comp : g.components) {
        REQUIRE(comp.size() == 4);
        // complete: all 6 unordered pairs are edges
        int found = 0;
        for (const auto& e : g.edges) {
            bool a_in = std::find(comp.begin(), comp.end(), e[0]) != comp.end();
            bool b_in = std::find(comp.begin(), comp.end(), e[1]) != comp.end();
            CHECK(a_in == b_in);  // edges never leave a component
            if (a_in && b_in) ++found;
        }
        CHECK(found == 6);
    }

    CHECK(graph_verdict(g).pass);

    // every component contains at least one black vertex
    std::set<int> blacks;
    for (int v = 1; v <= g.vertex_count; ++v)
        if (g.black[static_cast<size_t>(v)]) blacks.insert(v);
    CHECK(blacks.size() == 36);
    for (const auto& comp : g.components) {
        bool has_black = false;
        for (int v : comp) has_black = has_black || blacks.count(v);
        CHECK(has_black);
    }

    CHECK_THROWS_AS(build_graph(c, "omega24"), Error);  // no branches on this model
}

TEST_CASE("verdict flags an all-white neighborhood") {
    ObstructionGraph g;
    g.vertex_count = 4;
    g.edges = {{1, 2}, {3, 4}};
    g.black = {false, false, true, false, false};  // only vertex 2 is black
    EliminationResult res = graph_verdict(g);
    CHECK_FALSE(res.pass);
    CHECK(res.surviving == std::vector<int>{3, 4});

    // a self-loop makes the vertex its own (white) neighbor; it survives
    ObstructionGraph loop;
    loop.vertex_count = 1;
    loop.edges = {{1, 1}};
    loop.black = {false, false};
    CHECK_FALSE(graph_verdict(loop).pass);
    loop.black = {false, true};
    CHECK(graph_verdict(loop).pass);  // black vertices never survive
}
