#include <doctest.h>

#include <sstream>

#include "lced/demand.hpp"
#include "lced/errors.hpp"
#include "lced/fixtures.hpp"
#include "lced/campaign.hpp"
#include "lced/moving_cut.hpp"
#include "lced/rng.hpp"
#include "oracles.hpp"

using namespace lced;

TEST_CASE("demand accumulates and stays positive") {
    Demand d;
    d.add(0, 1, 2);
    d.add(0, 1, 1);
    CHECK(d.value(0, 1) == 3);
    CHECK(d.size() == 3);
    CHECK(d.value(1, 0) == 0);
    CHECK_THROWS_AS(d.add(0, 1, 0), ArgumentError);
    CHECK_THROWS_AS(d.add(0, 1, -2), ArgumentError);
}

TEST_CASE("canonicalization folds orientations") {
    Demand d;
    d.add(2, 0, 1);
    d.add(0, 2, 2);
    d.add(1, 3, 1);
    Demand folded = d.canonical();
    CHECK(folded.value(0, 2) == 3);
    CHECK(folded.value(2, 0) == 0);
    CHECK(folded.value(1, 3) == 1);
    CHECK(folded.size() == d.size());
}

TEST_CASE("h-length predicate") {
    LengthCapGraph edge = fixture_graph("single_edge");
    Demand empty;
    CHECK(is_h_length(empty, edge, Rat(0)));

    Demand d;
    d.add(0, 1, 1);
    CHECK(is_h_length(d, edge, Rat(1)));
    CHECK_FALSE(is_h_length(d, edge, Rat(1, 2)));

    Demand invalid;
    invalid.add(0, 7, 1);
    CHECK_THROWS_AS(is_h_length(invalid, edge, Rat(1)), ArgumentError);
}

TEST_CASE("h-length matches the all-pairs oracle on random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        LengthCapGraph g = random_length_graph(rng, 3, 8);
        auto oracle = testing::floyd_warshall(g);
        Demand d;
        for (int k = 0; k < 5; ++k) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
            if (u != v) {
                d.add(u, v, rng.range(1, 3));
            }
        }
        Rat h = rat_frac(rng.range(1, 5), rng.range(1, 2));
        bool expected = true;
        for (const auto& [pair, amount] : d.entries()) {
            (void)amount;
            expected = expected && dist_leq(oracle[pair.first][pair.second], h);
        }
        CHECK(is_h_length(d, g, h) == expected);
    }
}

TEST_CASE("a-respecting predicate") {
    NodeWeighting a({2, 2, 1});
    Demand empty;
    CHECK(is_a_respecting(empty, a));

    Demand over;
    over.add(0, 1, 3);
    CHECK_FALSE(is_a_respecting(over, a));

    Demand ok;
    ok.add(0, 1, 2);
    ok.add(2, 0, 1);
    CHECK(is_a_respecting(ok, a));

    // Row and column sums are checked separately.
    Demand both;
    both.add(0, 1, 2);
    both.add(1, 0, 2);
    CHECK(is_a_respecting(both, a));
    both.add(2, 1, 1);
    CHECK_FALSE(is_a_respecting(both, a));
}

TEST_CASE("separated amount examples") {
    LengthCapGraph edge = fixture_graph("single_edge");
    Demand d;
    d.add(0, 1, 1);

    MovingCut zero;
    CHECK(separated_amount(d, edge, zero, Rat(2)) == 0);

    MovingCut c;
    c.set(0, Rat(1));
    // New length 1 + 1*1 = 2 > 1.
    CHECK(separated_amount(d, edge, c, Rat(1)) == 1);

    // Landing exactly on the threshold is not a separation: 1 + 3*(2/3) = 3.
    MovingCut boundary;
    boundary.set(0, Rat(2, 3));
    CHECK(separated_amount(d, edge, boundary, Rat(3)) == 0);
}

TEST_CASE("separated amount is monotone in the cut and bounded by |D|") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        LengthCapGraph g = random_length_graph(rng, 3, 7);
        Demand d;
        for (int k = 0; k < 4; ++k) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
            if (u != v) {
                d.add(u, v, rng.range(1, 2));
            }
        }
        MovingCut small;
        MovingCut large;
        for (int id = 0; id < g.edge_count(); ++id) {
            if (rng.below(2) == 0) {
                Rat value = rat_frac(rng.range(1, 3), 2);
                small.set(id, value);
                large.set(id, value + Rat(rng.range(0, 2)));
            }
        }
        Rat h(rng.range(1, 4));
        long long lo = small.is_zero() ? 0 : separated_amount(d, g, small, h);
        long long hi = large.is_zero() ? 0 : separated_amount(d, g, large, h);
        CHECK(lo <= hi);
        CHECK(hi <= d.size());
    }
}

TEST_CASE("demand file round trip") {
    Demand d;
    d.add(0, 3, 2);
    d.add(2, 1, 5);
    std::ostringstream out;
    d.write(out);
    std::istringstream in(out.str());
    Demand reread = Demand::read(in);
    CHECK(reread.entries() == d.entries());

    std::istringstream bad("0 1 0\n");
    CHECK_THROWS_AS(Demand::read(bad), ParseError);
    std::istringstream garbage("0 x 1\n");
    CHECK_THROWS_AS(Demand::read(garbage), ParseError);
}
