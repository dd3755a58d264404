#pragma once

#include <iosfwd>
#include <vector>

#include "lced/matching_sequence.hpp"
#include "lced/rational.hpp"

namespace lced {

/// Simple undirected graph view (no self-loops, no parallel edges).
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

SimpleGraph union_graph(const MatchingSequence& seq);

/// Edge-disjoint forests (by edge id into the host graph) covering every edge.
struct ForestCover {
    std::vector<std::vector<int>> forests;
    int size() const { return static_cast<int>(forests.size()); }
};

/// Exact arboricity: min forest-cover size, equal by Nash-Williams to
/// max over U (|U| >= 2) of ceil(|E(U)| / (|U|-1)). Density feasibility is
/// decided by rooted max-flow on the peeled core. Edgeless graphs yield 0.
long long arboricity_exact(const SimpleGraph& g);

/// The exact value plus a subset certifying it: ceil(|E(U)|/(|U|-1)) equals
/// alpha on the returned subset.
struct DensityWitness {
    long long alpha = 0;
    std::vector<int> subset;
};

DensityWitness arboricity_witness(const SimpleGraph& g);

/// Valid cover built by repeatedly extracting maximal spanning forests in
/// edge-id order; not necessarily minimum.
ForestCover forest_cover(const SimpleGraph& g);

/// Structural recheck: pairwise disjoint, acyclic, union covers all edges.
bool forest_cover_valid(const SimpleGraph& g, const ForestCover& cover);

/// Dump format: one line per forest listing its edge ids.
void write_forest_cover(const ForestCover& cover, std::ostream& out);

struct ArboricityBoundCheck {
    bool ok = false;
    long long alpha = 0;
    long long m = 0;
    double ratio = 0.0;  // alpha / (s * n^(2/s)), reporting only
};

/// alpha <= c * s * n^(2/s), compared exactly as alpha^s * q^s <= p^s * s^s * n^2
/// for c = p/q.
ArboricityBoundCheck check_pg_arboricity_bound(const MatchingSequence& seq, int s, const Rat& c);

/// Average degree 2m/n <= c * s * n^(2/s) in the same exact-power form.
bool check_average_degree_bound(const SimpleGraph& g, int s, const Rat& c);

}  // namespace lced
