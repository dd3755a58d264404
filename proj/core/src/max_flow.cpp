#include "lced/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "lced/errors.hpp"

namespace lced {

MaxFlow::MaxFlow(int node_count)
    : out_(static_cast<std::size_t>(node_count)),
      level_(static_cast<std::size_t>(node_count)),
      cursor_(static_cast<std::size_t>(node_count)) {}

int MaxFlow::add_arc(int from, int to, long long capacity) {
    if (capacity < 0) {
        throw ArgumentError("arc capacity must be non-negative");
    }
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    out_[static_cast<std::size_t>(from)].push_back(id);
    out_[static_cast<std::size_t>(to)].push_back(id + 1);
    initial_capacity_.push_back(capacity);
    initial_capacity_.push_back(0);
    return id;
}

bool MaxFlow::build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> frontier;
    level_[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int id : out_[static_cast<std::size_t>(v)]) {
            const Arc& arc = arcs_[static_cast<std::size_t>(id)];
            if (arc.capacity > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
                level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
                frontier.push(arc.to);
            }
        }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
}

long long MaxFlow::push(int v, int sink, long long limit) {
    if (v == sink || limit == 0) {
        return limit;
    }
    long long pushed = 0;
    for (std::size_t& i = cursor_[static_cast<std::size_t>(v)];
         i < out_[static_cast<std::size_t>(v)].size(); ++i) {
        int id = out_[static_cast<std::size_t>(v)][i];
        Arc& arc = arcs_[static_cast<std::size_t>(id)];
        if (arc.capacity <= 0 ||
            level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1) {
            continue;
        }
        long long got = push(arc.to, sink, std::min(limit - pushed, arc.capacity));
        if (got > 0) {
            arc.capacity -= got;
            arcs_[static_cast<std::size_t>(id ^ 1)].capacity += got;
            pushed += got;
            if (pushed == limit) {
                return pushed;
            }
        }
    }
    return pushed;
}

long long MaxFlow::run(int source, int sink) {
    long long total = 0;
    const long long kUnbounded = std::numeric_limits<long long>::max();
    while (build_levels(source, sink)) {
        std::fill(cursor_.begin(), cursor_.end(), 0);
        total += push(source, sink, kUnbounded);
    }
    return total;
}

long long MaxFlow::flow_on(int arc_id) const {
    return initial_capacity_[static_cast<std::size_t>(arc_id)] -
           arcs_[static_cast<std::size_t>(arc_id)].capacity;
}

bool MaxFlow::source_side(int node) const {
    return level_[static_cast<std::size_t>(node)] >= 0;
}

}  // namespace lced
