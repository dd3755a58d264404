#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lced {

// An ordered list of matchings M_1..M_k over vertices 0..n-1, the witness that
// their union was built greedily from far pairs. Edges carry unit length; all
// distances here are hop counts.
struct MatchingSequence {
    int vertex_count = 0;
    std::vector<std::vector<std::pair<int, int>>> matchings;

    int matching_count() const { return static_cast<int>(matchings.size()); }
    long long edge_count() const;

    /// Flattened (u, v, matching index) triples; position is the global edge id.
    std::vector<std::tuple<int, int, int>> edges() const;

    void write(std::ostream& out) const;
    static MatchingSequence read(std::istream& in);
};

struct PgViolation {
    int matching_index = 0;  // 0-based
    std::pair<int, int> edge;
    long long prefix_distance = 0;
};

struct PgVerifyResult {
    bool ok = true;
    std::optional<PgViolation> violation;
};

/// Checks the far-endpoints condition: every matched pair must be at hop
/// distance > s in the union of all earlier matchings. Malformed structure
/// (shared vertices in a matching, duplicate edges) throws StructureError.
PgVerifyResult verify_parallel_greedy(const MatchingSequence& seq, int s);

/// Random corpus instance: per round, a random maximal matching of the
/// current far-pairs graph; stops early when no far pair remains.
MatchingSequence generate_parallel_greedy(int n, int s, int rounds, std::uint64_t seed);

/// Spanner-style variant: processes random pairs and admits each far pair as
/// its own single-edge matching. Denser than the matching generator.
MatchingSequence generate_singleton_greedy(int n, int s, int attempts, std::uint64_t seed);

/// Counts simple paths of exactly `length` edges whose matching indices
/// strictly increase, keyed by ordered endpoint pair (walk direction).
std::map<std::pair<int, int>, long long> enumerate_monotonic_paths(const MatchingSequence& seq,
                                                                   int length);

struct DispersionCheck {
    bool ok = true;
    std::optional<std::pair<int, int>> violating_pair;
    long long max_pair_count = 0;
    long long total_paths = 0;
    int path_length = 0;
};

/// No ordered pair may admit two monotonic ceil(s/2)-paths.
DispersionCheck check_dispersion(const MatchingSequence& seq, int s);

struct CycleCheck {
    bool ok = true;
    std::vector<int> violating_cycle;  // global edge ids
    long long cycles_checked = 0;
};

/// Every cycle of at most s+1 edges must contain >= 2 edges of its
/// highest-indexed incident matching. Enumeration work beyond the budget
/// raises ResourceError.
CycleCheck check_cycle_property(const MatchingSequence& seq, int s,
                                long long budget = 20'000'000);

struct HikerResult {
    std::vector<std::vector<int>> walks;  // per-hiker global edge ids, in walk order
    long long total_edges_walked = 0;
    int longest_walk = 0;
};

/// One hiker per vertex; matchings processed in index order swap the hikers
/// at the endpoints of each matched edge across it.
HikerResult hiker_walk(const MatchingSequence& seq);

MatchingSequence read_sequence_file(const std::string& path);
void write_sequence_file(const MatchingSequence& seq, const std::string& path);

}  // namespace lced
