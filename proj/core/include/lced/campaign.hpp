#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lced/arboricity.hpp"
#include "lced/calibration.hpp"
#include "lced/decomposition.hpp"
#include "lced/dispersal.hpp"
#include "lced/graph.hpp"
#include "lced/matching_sequence.hpp"
#include "lced/rng.hpp"

namespace lced {

struct Budgets {
    long long cycle_expansions = 20'000'000;
    long long exhaustive_candidates = 200'000;
    int decomposition_iterations = 64;
};

struct CampaignConfig {
    std::string lemma = "all";
    int instances = -1;          // -1 selects the campaign's default corpus size
    int max_n = -1;              // caps generated vertex counts when positive
    std::vector<int> s_values;   // restricts the length-parameter palette
    int max_rounds = -1;         // caps matching rounds when positive
    std::uint64_t seed = 7;
    int threads = 1;
    bool report_ratio = false;
    Budgets budgets;
};

struct CampaignResult {
    std::string name;
    std::string csv;   // header, one row per instance, trailing '#' note lines
    std::string json;  // per-instance report objects, when the campaign emits them
    long long passed = 0;
    long long failed = 0;
    long long skipped = 0;
    bool ok() const { return failed == 0; }
};

std::vector<std::string> campaign_names();
CampaignResult run_campaign(const std::string& name, const CampaignConfig& config);
/// Runs config.lemma, or every campaign in order when it is "all".
std::vector<CampaignResult> run_campaigns(const CampaignConfig& config);

/// Exponential-subset oracle for the Nash-Williams maximum, independent of
/// the flow-based implementation; n <= 20.
long long arboricity_bruteforce(const SimpleGraph& g);

/// Exact counting-bound comparison with c = p/q and even s:
/// paths * (n*p*s)^(s/2) >= n * (2m*q)^(s/2).
bool counting_bound_holds(long long paths, int n, long long m, int s, const Rat& c);

/// Random connected multigraph with small rational lengths and capacities in
/// {1, 2}; vertex count drawn from [min_n, max_n].
LengthCapGraph random_length_graph(Rng& rng, int min_n, int max_n);

// A small graph with its degree weighting and a sparse cut sequence found by
// one of the candidate families; the shared corpus of the appendix campaigns.
struct SequenceInstance {
    LengthCapGraph graph;
    NodeWeighting weighting;
    Rat h;
    int s;
    Rat phi;
    FinderFamily family;
    std::vector<MovingCut> cuts;
};

SequenceInstance generate_sequence_instance(std::uint64_t seed);

/// The matching-safe witness of each cut, evaluated sequentially.
std::vector<Demand> sequence_witnesses(const SequenceInstance& instance);

}  // namespace lced
