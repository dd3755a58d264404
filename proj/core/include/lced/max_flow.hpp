#pragma once

#include <vector>

namespace lced {

// Dinic max-flow on integer capacities. Arc insertion order is fixed, so flows
// and residual cuts are deterministic for a given network.
class MaxFlow {
public:
    explicit MaxFlow(int node_count);

    /// Adds a directed arc and returns its id (reverse arc has capacity 0).
    int add_arc(int from, int to, long long capacity);

    long long run(int source, int sink);

    /// Flow pushed over an arc, valid after run().
    long long flow_on(int arc_id) const;

    /// True if the node is on the source side of the residual min cut.
    bool source_side(int node) const;

private:
    bool build_levels(int source, int sink);
    long long push(int v, int sink, long long limit);

    struct Arc {
        int to;
        long long capacity;
    };

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_;
    std::vector<std::size_t> cursor_;
    std::vector<long long> initial_capacity_;
};

}  // namespace lced
