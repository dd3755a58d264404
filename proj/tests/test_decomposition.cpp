#include <doctest.h>

#include <sstream>

#include "lced/decomposition.hpp"
#include "lced/dispersal.hpp"
#include "lced/errors.hpp"
#include "lced/fixtures.hpp"
#include "lced/campaign.hpp"
#include "lced/rng.hpp"

using namespace lced;

namespace {

// Dumbbell parameters under which the first bridge edge is the only sparse
// cut: the bridge separates the sides at sparsity 1/14, while every other
// candidate (including splitting off the path midpoint after the first cut,
// at 1/4) stays above phi = 1/6.
struct DumbbellSetup {
    LengthCapGraph graph = fixture_graph("dumbbell");
    NodeWeighting weighting = graph.degree_weighting();
    Rat h = Rat(5);
    Rat s = Rat(2);
    Rat phi = Rat(1, 6);
};

}  // namespace

TEST_CASE("find_sparse_cut locates the dumbbell bridge") {
    DumbbellSetup d;
    FinderSpec spec{FinderFamily::Exhaustive, 3, 200'000};
    auto found = find_sparse_cut(d.graph, d.weighting, d.h, d.s, d.phi, spec);
    REQUIRE(found.has_value());
    // Edge 6 is {2,6}, the first bridge edge in id order.
    CHECK(found->values().size() == 1);
    CHECK(found->value(6) == Rat(1));
    auto spars = sparsity(d.graph, *found, d.weighting, d.h, d.s);
    REQUIRE(spars.has_value());
    CHECK(*spars <= d.phi);

    // Singleton family finds the same cut.
    FinderSpec singles{FinderFamily::Singletons, 1, 1000};
    auto single = find_sparse_cut(d.graph, d.weighting, d.h, d.s, d.phi, singles);
    REQUIRE(single.has_value());
    CHECK(single->value(6) == Rat(1));
}

TEST_CASE("dumbbell decomposition: one cut, exact slack") {
    DumbbellSetup d;
    FinderSpec spec{FinderFamily::Exhaustive, 3, 200'000};
    DecompositionResult result = build_decomposition(d.graph, d.weighting, d.h, d.s, d.phi, spec);
    REQUIRE(result.cuts.size() == 1);
    CHECK(result.cuts[0].value(6) == Rat(1));
    // Union scale (1 + 1/(s-1)) = 2, so |C| = 2 and slack = 2 / (phi * |A|)
    // with |A| = 16.
    CHECK(result.total_size == Rat(2));
    CHECK(result.slack == Rat(3, 4));
    CHECK(verify_cut_sequence(d.graph, d.weighting, result.cuts, d.h, d.s, d.phi).ok);
    CHECK(union_sparsity_check(d.graph, d.weighting, result.cuts, d.h, d.s, union_calibration())
              .all_pass());

    // The remaining graph is expander-certified relative to the family.
    LengthCapGraph after = apply_cut(d.graph, result.cuts[0], d.h * d.s);
    CHECK(certify_no_sparse_cut(after, d.weighting, d.h, d.s, d.phi, spec));
}

TEST_CASE("already-expanding input yields an empty decomposition") {
    LengthCapGraph k5 = fixture_graph("k5");
    NodeWeighting a = k5.degree_weighting();
    FinderSpec spec{FinderFamily::Exhaustive, 2, 200'000};
    // Any single pair keeps a 2-hop detour, so no tiny cut separates at
    // threshold h*s = 2 and phi = 1/4 rejects everything.
    DecompositionResult result = build_decomposition(k5, a, Rat(1), Rat(2), Rat(1, 4), spec);
    CHECK(result.cuts.empty());
    CHECK(result.total_size == Rat(0));
    CHECK(result.slack == Rat(0));
    CHECK(certify_no_sparse_cut(k5, a, Rat(1), Rat(2), Rat(1, 4), spec));
}

TEST_CASE("a long path with tiny phi still has a sparse interior cut") {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < 8; ++v) {
        edges.push_back(Edge{v, v + 1, Rat(1), 1});
    }
    LengthCapGraph path(8, std::move(edges));
    NodeWeighting a = path.degree_weighting();
    FinderSpec spec{FinderFamily::Singletons, 1, 1000};
    CHECK_FALSE(certify_no_sparse_cut(path, a, Rat(3), Rat(2), Rat(1, 6), spec));
}

TEST_CASE("ball family cuts boundaries") {
    DumbbellSetup d;
    FinderSpec spec{FinderFamily::Balls, 0, 10'000};
    auto found = find_sparse_cut(d.graph, d.weighting, d.h, d.s, d.phi, spec);
    REQUIRE(found.has_value());
    auto spars = sparsity(d.graph, *found, d.weighting, d.h, d.s);
    REQUIRE(spars.has_value());
    CHECK(*spars <= d.phi);
}

TEST_CASE("resource guards") {
    DumbbellSetup d;
    FinderSpec tiny_budget{FinderFamily::Exhaustive, 3, 10};
    CHECK_THROWS_AS(find_sparse_cut(d.graph, d.weighting, d.h, d.s, d.phi, tiny_budget),
                    ResourceError);

    FinderSpec spec{FinderFamily::Exhaustive, 3, 200'000};
    CHECK_THROWS_AS(build_decomposition(d.graph, d.weighting, d.h, d.s, d.phi, spec, 0),
                    ResourceError);
}

TEST_CASE("decompositions on the random corpus verify end to end") {
    Rng seeds(31337);
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(seeds.next());
        LengthCapGraph g = random_length_graph(rng, 3, 7);
        NodeWeighting a = g.degree_weighting();
        Rat h(3);
        Rat s(3);
        Rat phi(1);
        FinderSpec spec{FinderFamily::Exhaustive, 3, 200'000};
        DecompositionResult result = build_decomposition(g, a, h, s, phi, spec);
        CHECK(verify_cut_sequence(g, a, result.cuts, h, s, phi).ok);
        Rat step_total = 0;
        for (const auto& step : result.steps) {
            step_total += step.cut.size(g);
        }
        CHECK(result.total_size == Rat(s) / (s - 1) * step_total);
        CHECK(result.slack == result.total_size / (phi * rat_of(a.total())));
        auto union_report = union_sparsity_check(g, a, result.cuts, h, s, union_calibration());
        CHECK(union_report.all_pass());
        if (!result.cuts.empty()) {
            CHECK(union_report.union_demand_size <= a.total());
        }
        LengthCapGraph final_graph = g;
        for (const MovingCut& cut : result.cuts) {
            final_graph = apply_cut(final_graph, cut, h * s);
        }
        CHECK(certify_no_sparse_cut(final_graph, a, h, s, phi, spec));
    }
}

TEST_CASE("decomposition is deterministic") {
    DumbbellSetup d;
    FinderSpec spec{FinderFamily::Balls, 0, 10'000};
    DecompositionResult first = build_decomposition(d.graph, d.weighting, d.h, d.s, d.phi, spec);
    DecompositionResult second = build_decomposition(d.graph, d.weighting, d.h, d.s, d.phi, spec);
    REQUIRE(first.cuts.size() == second.cuts.size());
    std::ostringstream a;
    std::ostringstream b;
    for (const auto& cut : first.cuts) {
        cut.write(a);
    }
    for (const auto& cut : second.cuts) {
        cut.write(b);
    }
    CHECK(a.str() == b.str());
    CHECK(first.total_size == second.total_size);
}
