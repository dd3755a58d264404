#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lced/arboricity.hpp"
#include "lced/calibration.hpp"
#include "lced/demand.hpp"
#include "lced/graph.hpp"
#include "lced/matching_sequence.hpp"
#include "lced/moving_cut.hpp"

namespace lced {

// Graph on A(v) copies of each vertex whose edges realize a list of demands,
// one matching per demand. Built deterministically: copies in vertex order,
// demand entries in (u, v) order, each unit consuming the lowest unused copy
// of each endpoint within its matching.
struct DemandMatchingGraph {
    std::vector<std::vector<int>> copies;  // host vertex -> copy ids
    std::vector<int> owner;                // copy id -> host vertex
    std::vector<std::vector<std::pair<int, int>>> matchings;  // demand order

    int copy_count() const { return static_cast<int>(owner.size()); }
    long long edge_count() const;

    /// The matchings in reverse demand order, the order in which the far-
    /// endpoints condition is expected to hold.
    MatchingSequence as_parallel_greedy() const;
};

/// Requires each demand's combined incidence sum_w(D(v,w) + D(w,v)) <= A(v);
/// throws ConstructionError naming the vertex and demand index otherwise.
DemandMatchingGraph build_demand_matching_graph(const LengthCapGraph& g, const NodeWeighting& a,
                                                const std::vector<Demand>& demands);

struct Tree {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
};

struct TreeMatchingDemand {
    int root = 0;
    // Internal vertex -> its sibling matching, deterministic consecutive
    // pairing in id order.
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> matchings_by_vertex;
    Demand demand;
};

/// Roots at the lowest id; per internal vertex pairs its children (plus the
/// vertex itself when the child count is odd) consecutively in id order.
TreeMatchingDemand tree_matching_demand(const Tree& tree);

// Dispersed demand carried as (integer unscaled demand, exact scale 1/(2k))
// so that every downstream inequality can be checked in cleared-denominator
// form. k is the size of the forest cover actually used.
struct DispersedDemand {
    Demand unscaled;  // canonical support over host vertices
    long long cover_size = 0;
    DemandMatchingGraph graph;
    ForestCover cover;
    std::vector<std::pair<int, long long>> tree_stats;  // (vertices, demand size) per tree

    Rat scale() const { return Rat(1) / rat_of(2 * cover_size); }
    Rat scaled_size() const { return rat_of(unscaled.size()) * scale(); }
};

DispersedDemand matching_dispersed_demand(const LengthCapGraph& g, const NodeWeighting& a,
                                          const std::vector<Demand>& demands);

struct PropertyCheck {
    std::string property;
    bool pass = false;
    std::string witness;
    std::string lhs;
    std::string rhs;
};

struct DispersalReport {
    bool all_pass = true;
    long long cover_size = 0;
    std::vector<PropertyCheck> checks;
};

/// Validates that each demand is the h-length A-respecting witness fully
/// (h*s)-separated by its cut in the graph after the previous cuts, then
/// checks the dispersed demand's support distances, incidence bound,
/// separation under the scaled union cut, and size chain.
DispersalReport verify_dispersed_properties(const LengthCapGraph& g, const NodeWeighting& a,
                                            const std::vector<MovingCut>& cuts,
                                            const std::vector<Demand>& demands, const Rat& h,
                                            const Rat& s);

struct UnionSparsityReport {
    bool vacuous = false;
    bool pass_sparsity = false;
    bool pass_certificate = false;
    bool pass_calibrated = false;
    bool all_pass() const {
        return vacuous || (pass_sparsity && pass_certificate && pass_calibrated);
    }

    long long cover_size = 0;
    Rat sum_cut_sizes;
    long long sum_demand_sizes = 0;   // true per-step demand-sizes
    long long sum_witness_sizes = 0;  // matching-safe witnesses actually dispersed
    Rat union_size;                   // |(1 + 1/(s-1)) * sum C_i|
    long long union_demand_size = 0;
    std::optional<Rat> union_sparsity;  // nullopt = infinite
    Rat phi_prime;            // 8k * sum|C_i| / sum demand-sizes
    Rat certificate_bound;    // sum witness sizes / (4k), what the dispersal certifies
    Rat dispersed_scaled_size;
    std::optional<Rat> max_step_sparsity;
    Rat calibration_constant;
    Rat calibrated_lhs;  // sparsity^s, cleared form of the calibrated check
    Rat calibrated_rhs;  // (c*s*max_step)^s * |A|^2
};

/// Forms (1 + 1/(s-1)) * sum C_i, measures its sparsity at length 2h with
/// separation threshold h*(s-1), and compares against 8k * sum|C_i| / sum
/// demand-sizes plus the calibrated s * |A|^(2/s) form.
UnionSparsityReport union_sparsity_check(const LengthCapGraph& g, const NodeWeighting& a,
                                         const std::vector<MovingCut>& cuts, const Rat& h,
                                         const Rat& s,
                                         const Rat& calibration_constant = union_calibration());

/// Per-check JSON array: {property, pass, witness, lhs, rhs} objects with
/// rationals rendered as "num/den" strings.
std::string dispersal_report_json(const DispersalReport& report);
std::string union_report_json(const UnionSparsityReport& report);

}  // namespace lced
