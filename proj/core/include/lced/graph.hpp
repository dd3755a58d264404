#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lced/rational.hpp"

namespace lced {

struct Edge {
    int u = 0;
    int v = 0;
    Rat length;
    long long capacity = 1;
};

class NodeWeighting;

// Undirected multigraph with exact-rational edge lengths and positive integer
// capacities. Immutable after construction; derived graphs (e.g. after a cut
// is applied) are new values.
class LengthCapGraph {
public:
    LengthCapGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const;
    const std::vector<Edge>& edges() const { return edges_; }
    /// Ids of edges incident to v.
    const std::vector<int>& incident(int v) const;
    int other_end(int edge_id, int v) const;

    long long capacity_weighted_degree(int v) const;
    NodeWeighting degree_weighting() const;

    /// Exact shortest-path distance; nullopt when disconnected.
    Dist distance(int u, int v) const;
    std::vector<Dist> distances_from(int source) const;

    /// {v : distance(center, v) <= radius}, ascending ids.
    std::vector<int> ball(int center, const Rat& radius) const;

    /// Same topology with replaced lengths.
    LengthCapGraph with_lengths(std::vector<Rat> lengths) const;

    void write(std::ostream& out) const;
    static LengthCapGraph read(std::istream& in);

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

// Per-vertex non-negative integer weights; the host-graph invariant
// A(v) <= deg(v) is checked by validate_against.
class NodeWeighting {
public:
    explicit NodeWeighting(std::vector<long long> weights);

    int size() const { return static_cast<int>(weights_.size()); }
    long long operator[](int v) const { return weights_.at(static_cast<std::size_t>(v)); }
    long long total() const;
    const std::vector<long long>& weights() const { return weights_; }

    /// Throws ArgumentError unless every weight is within the capacity-weighted degree.
    void validate_against(const LengthCapGraph& g) const;

private:
    std::vector<long long> weights_;
};

LengthCapGraph read_graph_file(const std::string& path);
void write_graph_file(const LengthCapGraph& g, const std::string& path);

}  // namespace lced
