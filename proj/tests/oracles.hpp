#pragma once

// Independent oracles used to pin expected values. These deliberately avoid
// the implementation paths they check: distances via Floyd-Warshall instead
// of Dijkstra, demand maxima via exhaustive enumeration instead of max-flow,
// path counts via unfiltered simple-path DFS.

#include <functional>
#include <map>
#include <vector>

#include "lced/demand.hpp"
#include "lced/graph.hpp"
#include "lced/matching_sequence.hpp"
#include "lced/moving_cut.hpp"

namespace lced::testing {

inline std::vector<std::vector<Dist>> floyd_warshall(const LengthCapGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<Dist>> d(static_cast<std::size_t>(n),
                                     std::vector<Dist>(static_cast<std::size_t>(n)));
    for (int v = 0; v < n; ++v) {
        d[v][v] = Rat(0);
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (!d[e.u][e.v].has_value() || e.length < *d[e.u][e.v]) {
            d[e.u][e.v] = e.length;
            d[e.v][e.u] = e.length;
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (!d[i][k].has_value()) {
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (!d[k][j].has_value()) {
                    continue;
                }
                Rat through = *d[i][k] + *d[k][j];
                if (!d[i][j].has_value() || through < *d[i][j]) {
                    d[i][j] = through;
                }
            }
        }
    }
    return d;
}

/// Counts all simple paths of the given edge count whose matching indices
/// strictly increase, without the increasing-index DFS pruning.
inline std::map<std::pair<int, int>, long long> monotonic_paths_bruteforce(
    const MatchingSequence& seq, int length) {
    auto edges = seq.edges();
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(seq.vertex_count));
    for (std::size_t id = 0; id < edges.size(); ++id) {
        incident[std::get<0>(edges[id])].push_back(static_cast<int>(id));
        incident[std::get<1>(edges[id])].push_back(static_cast<int>(id));
    }
    std::map<std::pair<int, int>, long long> counts;
    std::vector<bool> visited(static_cast<std::size_t>(seq.vertex_count), false);
    std::vector<int> indices;

    std::function<void(int, int, int)> extend = [&](int start, int vertex, int depth) {
        if (depth == length) {
            bool increasing = true;
            for (std::size_t i = 1; i < indices.size(); ++i) {
                increasing = increasing && indices[i - 1] < indices[i];
            }
            if (increasing) {
                ++counts[{start, vertex}];
            }
            return;
        }
        for (int id : incident[static_cast<std::size_t>(vertex)]) {
            auto [a, b, mi] = edges[static_cast<std::size_t>(id)];
            int next = a == vertex ? b : a;
            if (visited[static_cast<std::size_t>(next)]) {
                continue;
            }
            visited[static_cast<std::size_t>(next)] = true;
            indices.push_back(mi);
            extend(start, next, depth + 1);
            indices.pop_back();
            visited[static_cast<std::size_t>(next)] = false;
        }
    };
    for (int start = 0; start < seq.vertex_count; ++start) {
        visited[static_cast<std::size_t>(start)] = true;
        extend(start, start, 0);
        visited[static_cast<std::size_t>(start)] = false;
    }
    return counts;
}

/// Counts cycles of at most max_edges edges by scanning all edge subsets:
/// a subset is a cycle iff every touched vertex has degree two and the
/// subset is connected. Independent of the DFS enumeration.
inline long long cycle_count_bruteforce(const MatchingSequence& seq, int max_edges) {
    auto edges = seq.edges();
    int m = static_cast<int>(edges.size());
    long long cycles = 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 3 || size > max_edges) {
            continue;
        }
        std::map<int, int> degree;
        for (int id = 0; id < m; ++id) {
            if (mask >> id & 1u) {
                ++degree[std::get<0>(edges[static_cast<std::size_t>(id)])];
                ++degree[std::get<1>(edges[static_cast<std::size_t>(id)])];
            }
        }
        bool all_two = true;
        for (const auto& [v, d] : degree) {
            all_two = all_two && d == 2;
        }
        // Degree-two everywhere means a disjoint union of cycles; one cycle
        // iff the touched vertex count equals the edge count.
        if (all_two && static_cast<int>(degree.size()) == size) {
            std::map<int, std::vector<int>> adj;
            for (int id = 0; id < m; ++id) {
                if (mask >> id & 1u) {
                    auto [u, v, mi] = edges[static_cast<std::size_t>(id)];
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
            }
            std::vector<int> stack{degree.begin()->first};
            std::map<int, bool> seen{{stack.back(), true}};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[v]) {
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
            long long reached = 0;
            for (const auto& [v, s] : seen) {
                reached += s ? 1 : 0;
            }
            if (reached == static_cast<long long>(degree.size())) {
                ++cycles;
            }
        }
    }
    return cycles;
}

/// Exhaustive maximization over all A-respecting demands supported on the
/// eligible ordered pairs.
inline long long demand_size_bruteforce(const LengthCapGraph& g, const MovingCut& c,
                                        const NodeWeighting& a, const Rat& h, const Rat& s) {
    auto base = floyd_warshall(g);
    auto moved = floyd_warshall(apply_cut(g, c, h * s));
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (u != v && a[u] > 0 && a[v] > 0 && dist_leq(base[u][v], h) &&
                dist_greater(moved[u][v], h * s)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    std::vector<long long> row(static_cast<std::size_t>(g.vertex_count()));
    std::vector<long long> col(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        row[v] = col[v] = a[v];
    }
    long long best = 0;
    std::function<void(std::size_t, long long)> assign = [&](std::size_t idx, long long total) {
        best = std::max(best, total);
        if (idx == pairs.size()) {
            return;
        }
        auto [u, v] = pairs[idx];
        long long cap = std::min(row[static_cast<std::size_t>(u)],
                                 col[static_cast<std::size_t>(v)]);
        for (long long amount = cap; amount >= 0; --amount) {
            row[static_cast<std::size_t>(u)] -= amount;
            col[static_cast<std::size_t>(v)] -= amount;
            assign(idx + 1, total + amount);
            row[static_cast<std::size_t>(u)] += amount;
            col[static_cast<std::size_t>(v)] += amount;
        }
    };
    assign(0, 0);
    return best;
}

/// Exhaustive maximization under the combined bound sent+received <= A(v),
/// over canonical (u < v) eligible pairs.
inline long long matching_safe_bruteforce(const LengthCapGraph& g, const MovingCut& c,
                                          const NodeWeighting& a, const Rat& h, const Rat& s) {
    auto base = floyd_warshall(g);
    auto moved = floyd_warshall(apply_cut(g, c, h * s));
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (a[u] > 0 && a[v] > 0 && dist_leq(base[u][v], h) &&
                dist_greater(moved[u][v], h * s)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    std::vector<long long> budget(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        budget[v] = a[v];
    }
    long long best = 0;
    std::function<void(std::size_t, long long)> assign = [&](std::size_t idx, long long total) {
        best = std::max(best, total);
        if (idx == pairs.size()) {
            return;
        }
        auto [u, v] = pairs[idx];
        long long cap = std::min(budget[static_cast<std::size_t>(u)],
                                 budget[static_cast<std::size_t>(v)]);
        for (long long amount = cap; amount >= 0; --amount) {
            budget[static_cast<std::size_t>(u)] -= amount;
            budget[static_cast<std::size_t>(v)] -= amount;
            assign(idx + 1, total + amount);
            budget[static_cast<std::size_t>(u)] += amount;
            budget[static_cast<std::size_t>(v)] += amount;
        }
    };
    assign(0, 0);
    return best;
}

}  // namespace lced::testing
