#include <doctest.h>

#include <sstream>

#include "lced/errors.hpp"
#include "lced/fixtures.hpp"
#include "lced/graph.hpp"
#include "lced/demand.hpp"
#include "lced/matching_sequence.hpp"
#include "lced/moving_cut.hpp"
#include "lced/rng.hpp"
#include "oracles.hpp"

using namespace lced;

namespace {

LengthCapGraph random_unit_capacity_graph(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.below(100) < 55) {
                Rat length = rat_frac(rng.range(0, 6), rng.range(1, 3));
                edges.push_back(Edge{u, v, length, rng.range(1, 4)});
            }
        }
    }
    // Occasional parallel edge: this is a multigraph.
    if (!edges.empty() && rng.below(2) == 0) {
        Edge dup = edges[static_cast<std::size_t>(rng.below(edges.size()))];
        dup.length += Rat(1, 2);
        edges.push_back(dup);
    }
    return LengthCapGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("construction rejects malformed edges") {
    CHECK_THROWS_AS(LengthCapGraph(2, {Edge{0, 0, Rat(1), 1}}), ArgumentError);
    CHECK_THROWS_AS(LengthCapGraph(2, {Edge{0, 1, Rat(-1), 1}}), ArgumentError);
    CHECK_THROWS_AS(LengthCapGraph(2, {Edge{0, 1, Rat(1), 0}}), ArgumentError);
    CHECK_THROWS_AS(LengthCapGraph(2, {Edge{0, 2, Rat(1), 1}}), ArgumentError);
}

TEST_CASE("unit path distances") {
    LengthCapGraph g = fixture_graph("path3");
    CHECK(g.distance(0, 2) == Rat(2));
    CHECK(g.distance(0, 0) == Rat(0));
    CHECK(g.distance(2, 2) == Rat(0));
    CHECK_THROWS_AS(g.distance(0, 5), ArgumentError);
}

TEST_CASE("disconnected pairs have infinite distance") {
    LengthCapGraph g(3, {Edge{0, 1, Rat(1), 1}});
    CHECK_FALSE(g.distance(0, 2).has_value());
}

TEST_CASE("distances match the all-pairs oracle on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.range(2, 8));
        LengthCapGraph g = random_unit_capacity_graph(rng, n);
        auto oracle = testing::floyd_warshall(g);
        for (int u = 0; u < n; ++u) {
            auto dist = g.distances_from(u);
            for (int v = 0; v < n; ++v) {
                CHECK(dist[v] == oracle[u][v]);
            }
        }
    }
}

TEST_CASE("distance properties: symmetry, triangle inequality, monotonicity") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.range(3, 8));
        LengthCapGraph g = random_unit_capacity_graph(rng, n);
        auto d = testing::floyd_warshall(g);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                CHECK(d[u][v] == d[v][u]);
                for (int w = 0; w < n; ++w) {
                    if (d[u][v].has_value() && d[v][w].has_value()) {
                        REQUIRE(d[u][w].has_value());
                        CHECK(*d[u][w] <= *d[u][v] + *d[v][w]);
                    }
                }
            }
        }
        if (g.edge_count() == 0) {
            continue;
        }
        // Increasing one edge length never shortens any distance.
        std::vector<Rat> lengths;
        for (int id = 0; id < g.edge_count(); ++id) {
            lengths.push_back(g.edge(id).length);
        }
        int bump = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.edge_count())));
        lengths[static_cast<std::size_t>(bump)] += Rat(3, 2);
        LengthCapGraph longer = g.with_lengths(lengths);
        for (int u = 0; u < n; ++u) {
            auto before = g.distances_from(u);
            auto after = longer.distances_from(u);
            for (int v = 0; v < n; ++v) {
                if (after[v].has_value()) {
                    REQUIRE(before[v].has_value());
                    CHECK(*before[v] <= *after[v]);
                }
            }
        }
    }
}

TEST_CASE("degree weighting") {
    LengthCapGraph triangle = fixture_graph("triangle");
    NodeWeighting w = triangle.degree_weighting();
    for (int v = 0; v < 3; ++v) {
        CHECK(w[v] == 2);
    }
    CHECK(w.total() == 6);

    LengthCapGraph heavy(2, {Edge{0, 1, Rat(1), 5}});
    NodeWeighting hw = heavy.degree_weighting();
    CHECK(hw[0] == 5);
    CHECK(hw[1] == 5);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        LengthCapGraph g = random_unit_capacity_graph(rng, static_cast<int>(rng.range(2, 8)));
        NodeWeighting dw = g.degree_weighting();
        std::vector<long long> recount(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int id = 0; id < g.edge_count(); ++id) {
            recount[static_cast<std::size_t>(g.edge(id).u)] += g.edge(id).capacity;
            recount[static_cast<std::size_t>(g.edge(id).v)] += g.edge(id).capacity;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(dw[v] == recount[static_cast<std::size_t>(v)]);
        }
        CHECK_NOTHROW(dw.validate_against(g));
    }
}

TEST_CASE("node weighting invariant") {
    LengthCapGraph g = fixture_graph("path3");
    CHECK_THROWS_AS(NodeWeighting({5, 1, 1}).validate_against(g), ArgumentError);
    CHECK_THROWS_AS(NodeWeighting({1, 1}).validate_against(g), ArgumentError);
    CHECK_THROWS_AS(NodeWeighting({-1, 0, 0}), ArgumentError);
    CHECK_NOTHROW(NodeWeighting({0, 1, 1}).validate_against(g));
}

TEST_CASE("balls") {
    LengthCapGraph g = fixture_graph("path3");
    CHECK(g.ball(1, Rat(0)) == std::vector<int>{1});
    CHECK(g.ball(0, Rat(1)) == std::vector<int>{0, 1});
    CHECK(g.ball(0, Rat(2)) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(g.ball(0, Rat(-1)), ArgumentError);
    CHECK_THROWS_AS(g.ball(9, Rat(1)), ArgumentError);

    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.range(2, 8));
        LengthCapGraph h = random_unit_capacity_graph(rng, n);
        auto oracle = testing::floyd_warshall(h);
        int center = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        Rat radius = rat_frac(rng.range(0, 5), rng.range(1, 2));
        std::vector<int> expected;
        for (int v = 0; v < n; ++v) {
            if (dist_leq(oracle[center][v], radius)) {
                expected.push_back(v);
            }
        }
        CHECK(h.ball(center, radius) == expected);
    }
}

TEST_CASE("graph file round trip is byte-stable") {
    LengthCapGraph g = fixture_graph("dumbbell");
    std::ostringstream first;
    g.write(first);
    std::istringstream parse(first.str());
    LengthCapGraph reread = LengthCapGraph::read(parse);
    std::ostringstream second;
    reread.write(second);
    CHECK(first.str() == second.str());
    CHECK(reread.edge_count() == g.edge_count());
    CHECK(reread.distance(0, 5) == g.distance(0, 5));
}

TEST_CASE("graph parse errors") {
    std::istringstream missing("3");
    CHECK_THROWS_AS(LengthCapGraph::read(missing), ParseError);
    std::istringstream bad_edge("2 1\n0 1 x 1\n");
    CHECK_THROWS_AS(LengthCapGraph::read(bad_edge), ParseError);
    std::istringstream loop("2 1\n1 1 1/1 1\n");
    CHECK_THROWS_AS(LengthCapGraph::read(loop), ParseError);
    std::istringstream zero_den("2 1\n0 1 1/0 1\n");
    CHECK_THROWS_AS(LengthCapGraph::read(zero_den), ParseError);
}

TEST_CASE("parsers survive arbitrary input") {
    // Readers must either parse or throw ParseError; nothing else.
    Rng rng(90210);
    const char alphabet[] = "0123456789 /-\nab\t";
    for (int trial = 0; trial < 400; ++trial) {
        std::string text;
        std::size_t len = rng.below(60);
        for (std::size_t i = 0; i < len; ++i) {
            text += alphabet[rng.below(sizeof(alphabet) - 1)];
        }
        for (int kind = 0; kind < 4; ++kind) {
            std::istringstream in(text);
            try {
                switch (kind) {
                    case 0:
                        LengthCapGraph::read(in);
                        break;
                    case 1:
                        MatchingSequence::read(in);
                        break;
                    case 2:
                        Demand::read(in);
                        break;
                    default:
                        MovingCut::read(in);
                        break;
                }
            } catch (const ParseError&) {
            } catch (const ArgumentError&) {
            }
        }
    }
    // A hostile edge count must not pre-allocate unbounded memory.
    std::istringstream hostile("2 99999999999\n");
    CHECK_THROWS_AS(LengthCapGraph::read(hostile), ParseError);
}
