#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lced/graph.hpp"
#include "lced/moving_cut.hpp"

namespace lced {

// Candidate families for the sparse-cut search. All candidates are {0,1}
// valued; the existence argument behind decompositions is non-constructive,
// so "no sparse cut" is always certified relative to a family.
enum class FinderFamily {
    Exhaustive,  // all edge subsets up to max_cut_edges (tiny graphs only)
    Balls,       // per center and radius, the unit cut on edges leaving the ball
    Singletons,  // unit cuts on single edges
};

std::string family_name(FinderFamily family);
FinderFamily parse_family(const std::string& name);

struct FinderSpec {
    FinderFamily family = FinderFamily::Balls;
    int max_cut_edges = 3;               // Exhaustive subset size bound
    long long candidate_budget = 200'000;
};

/// First cut in the family's deterministic order whose (h,s)-length sparsity
/// with respect to a is at most phi, or nullopt when the family has none.
std::optional<MovingCut> find_sparse_cut(const LengthCapGraph& g, const NodeWeighting& a,
                                         const Rat& h, const Rat& s, const Rat& phi,
                                         const FinderSpec& spec);

/// True iff the family contains no (h,s)-length phi-sparse cut.
bool certify_no_sparse_cut(const LengthCapGraph& g, const NodeWeighting& a, const Rat& h,
                           const Rat& s, const Rat& phi, const FinderSpec& spec);

struct DecompositionStep {
    MovingCut cut;
    Rat cut_size;
    long long demand_size = 0;
    Rat sparsity;
};

struct DecompositionResult {
    std::vector<MovingCut> cuts;
    MovingCut union_cut;  // (1 + 1/(s-1)) * sum of cuts
    Rat total_size;       // |union_cut|
    Rat slack;            // total_size / (phi * |A|)
    std::vector<DecompositionStep> steps;
    FinderSpec finder;
};

/// Repeatedly finds a sparse cut, applies it at threshold h*s, and searches
/// again until the family is exhausted. Iterations beyond the cap raise
/// ResourceError carrying the progress so far.
DecompositionResult build_decomposition(const LengthCapGraph& g, const NodeWeighting& a,
                                        const Rat& h, const Rat& s, const Rat& phi,
                                        const FinderSpec& spec, int iteration_cap = 64);

}  // namespace lced
