#include "lced/arboricity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>

#include "lced/errors.hpp"
#include "lced/max_flow.hpp"

namespace lced {

namespace {

void validate_simple(const SimpleGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count) {
            throw ArgumentError("simple graph edge references invalid vertex");
        }
        if (u == v) {
            throw ArgumentError("simple graph must not contain self-loops");
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw ArgumentError("simple graph must not contain parallel edges");
        }
    }
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    bool unite(int a, int b) {
        int ra = find(a);
        int rb = find(b);
        if (ra == rb) {
            return false;
        }
        parent[static_cast<std::size_t>(ra)] = rb;
        return true;
    }
};

// Subgraph restricted to surviving vertices, with local indices.
struct CoreGraph {
    std::vector<int> vertices;                    // original ids, ascending
    std::vector<std::pair<int, int>> edges;       // local indices
};

// Iteratively removes vertices of degree <= alpha. A subset violating the
// Nash-Williams density bound for alpha survives peeling, so an empty core
// certifies feasibility.
CoreGraph peel_core(const SimpleGraph& g, long long alpha) {
    std::vector<long long> degree(static_cast<std::size_t>(g.vertex_count), 0);
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count));
    for (std::size_t id = 0; id < g.edges.size(); ++id) {
        auto [u, v] = g.edges[id];
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
        incident[static_cast<std::size_t>(u)].push_back(static_cast<int>(id));
        incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
    }
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count), false);
    std::vector<bool> edge_removed(g.edges.size(), false);
    std::vector<int> queue;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (degree[static_cast<std::size_t>(v)] <= alpha) {
            queue.push_back(v);
            removed[static_cast<std::size_t>(v)] = true;
        }
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int id : incident[static_cast<std::size_t>(v)]) {
            if (edge_removed[static_cast<std::size_t>(id)]) {
                continue;
            }
            edge_removed[static_cast<std::size_t>(id)] = true;
            auto [a, b] = g.edges[static_cast<std::size_t>(id)];
            int w = a == v ? b : a;
            if (!removed[static_cast<std::size_t>(w)] &&
                --degree[static_cast<std::size_t>(w)] <= alpha) {
                removed[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    CoreGraph core;
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count), -1);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (!removed[static_cast<std::size_t>(v)]) {
            local[static_cast<std::size_t>(v)] = static_cast<int>(core.vertices.size());
            core.vertices.push_back(v);
        }
    }
    for (std::size_t id = 0; id < g.edges.size(); ++id) {
        auto [u, v] = g.edges[id];
        if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)]) {
            core.edges.emplace_back(local[static_cast<std::size_t>(u)],
                                    local[static_cast<std::size_t>(v)]);
        }
    }
    return core;
}

// Does some U containing local vertex `root` satisfy |E(U)| >= alpha*(|U|-1)+1?
// Project selection: gain 1 per induced edge, cost alpha per vertex other than
// the forced root; a violation exists iff the min cut leaves some source arc
// uncut, i.e. max flow < m.
bool root_has_violation(const CoreGraph& core, long long alpha, int root,
                        const std::vector<bool>& alive_vertex,
                        const std::vector<bool>& alive_edge, long long alive_edge_count,
                        std::vector<int>* witness) {
    int n = static_cast<int>(core.vertices.size());
    int m = static_cast<int>(core.edges.size());
    MaxFlow flow(1 + m + n + 1);
    int source = 0;
    int sink = 1 + m + n;
    long long big = alive_edge_count + 1;
    for (int id = 0; id < m; ++id) {
        if (!alive_edge[static_cast<std::size_t>(id)]) {
            continue;
        }
        auto [u, v] = core.edges[static_cast<std::size_t>(id)];
        flow.add_arc(source, 1 + id, 1);
        if (u != root) {
            flow.add_arc(1 + id, 1 + m + u, big);
        }
        if (v != root) {
            flow.add_arc(1 + id, 1 + m + v, big);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (v != root && alive_vertex[static_cast<std::size_t>(v)]) {
            flow.add_arc(1 + m + v, sink, alpha);
        }
    }
    if (flow.run(source, sink) >= alive_edge_count) {
        return false;
    }
    if (witness != nullptr) {
        // The min cut's source side is the densest subset containing the root.
        witness->clear();
        witness->push_back(core.vertices[static_cast<std::size_t>(root)]);
        for (int v = 0; v < n; ++v) {
            if (v != root && alive_vertex[static_cast<std::size_t>(v)] &&
                flow.source_side(1 + m + v)) {
                witness->push_back(core.vertices[static_cast<std::size_t>(v)]);
            }
        }
    }
    return true;
}

// Feasibility of Nash-Williams at alpha: no vertex subset induces more than
// alpha*(|U|-1) edges. Confirmed roots are deleted before moving on, which
// re-triggers peeling and keeps the flow count low.
bool nash_williams_feasible(const SimpleGraph& g, long long alpha,
                            std::vector<int>* witness = nullptr) {
    CoreGraph core = peel_core(g, alpha);
    if (core.edges.empty()) {
        return true;
    }
    int n = static_cast<int>(core.vertices.size());
    std::vector<bool> alive_vertex(static_cast<std::size_t>(n), true);
    std::vector<bool> alive_edge(core.edges.size(), true);
    long long alive_edges = static_cast<long long>(core.edges.size());
    std::vector<long long> degree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (std::size_t id = 0; id < core.edges.size(); ++id) {
        auto [u, v] = core.edges[id];
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
        incident[static_cast<std::size_t>(u)].push_back(static_cast<int>(id));
        incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
    }

    auto remove_vertex = [&](int start) {
        std::vector<int> queue{start};
        alive_vertex[static_cast<std::size_t>(start)] = false;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int id : incident[static_cast<std::size_t>(v)]) {
                if (!alive_edge[static_cast<std::size_t>(id)]) {
                    continue;
                }
                alive_edge[static_cast<std::size_t>(id)] = false;
                --alive_edges;
                auto [a, b] = core.edges[static_cast<std::size_t>(id)];
                int w = a == v ? b : a;
                if (alive_vertex[static_cast<std::size_t>(w)] &&
                    --degree[static_cast<std::size_t>(w)] <= alpha) {
                    alive_vertex[static_cast<std::size_t>(w)] = false;
                    queue.push_back(w);
                }
            }
        }
    };

    while (alive_edges > 0) {
        // Lowest-degree live vertex; ties by id.
        int root = -1;
        for (int v = 0; v < n; ++v) {
            if (alive_vertex[static_cast<std::size_t>(v)] &&
                degree[static_cast<std::size_t>(v)] > 0 &&
                (root < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(root)])) {
                root = v;
            }
        }
        if (root < 0) {
            break;
        }
        if (root_has_violation(core, alpha, root, alive_vertex, alive_edge, alive_edges,
                               witness)) {
            return false;
        }
        remove_vertex(root);
    }
    return true;
}

long long degeneracy(const SimpleGraph& g) {
    std::vector<long long> degree(static_cast<std::size_t>(g.vertex_count), 0);
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count));
    for (std::size_t id = 0; id < g.edges.size(); ++id) {
        auto [u, v] = g.edges[id];
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
        incident[static_cast<std::size_t>(u)].push_back(static_cast<int>(id));
        incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
    }
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count), false);
    std::vector<bool> edge_gone(g.edges.size(), false);
    long long best = 0;
    for (int step = 0; step < g.vertex_count; ++step) {
        int pick = -1;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)])) {
                pick = v;
            }
        }
        best = std::max(best, degree[static_cast<std::size_t>(pick)]);
        removed[static_cast<std::size_t>(pick)] = true;
        for (int id : incident[static_cast<std::size_t>(pick)]) {
            if (edge_gone[static_cast<std::size_t>(id)]) {
                continue;
            }
            edge_gone[static_cast<std::size_t>(id)] = true;
            auto [a, b] = g.edges[static_cast<std::size_t>(id)];
            int w = a == pick ? b : a;
            if (!removed[static_cast<std::size_t>(w)]) {
                --degree[static_cast<std::size_t>(w)];
            }
        }
    }
    return best;
}

// Max over connected components of ceil(m_c / (n_c - 1)).
long long component_density_floor(const SimpleGraph& g) {
    Dsu dsu(g.vertex_count);
    for (auto [u, v] : g.edges) {
        dsu.unite(u, v);
    }
    std::vector<long long> comp_edges(static_cast<std::size_t>(g.vertex_count), 0);
    std::vector<long long> comp_vertices(static_cast<std::size_t>(g.vertex_count), 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        ++comp_vertices[static_cast<std::size_t>(dsu.find(v))];
    }
    for (auto [u, v] : g.edges) {
        ++comp_edges[static_cast<std::size_t>(dsu.find(u))];
    }
    long long lo = 1;
    for (int r = 0; r < g.vertex_count; ++r) {
        long long m = comp_edges[static_cast<std::size_t>(r)];
        long long n = comp_vertices[static_cast<std::size_t>(r)];
        if (m > 0 && n >= 2) {
            lo = std::max(lo, (m + n - 2) / (n - 1));
        }
    }
    return lo;
}

}  // namespace

SimpleGraph union_graph(const MatchingSequence& seq) {
    SimpleGraph g;
    g.vertex_count = seq.vertex_count;
    for (const auto& matching : seq.matchings) {
        for (auto [u, v] : matching) {
            g.edges.emplace_back(u, v);
        }
    }
    return g;
}

long long arboricity_exact(const SimpleGraph& g) {
    validate_simple(g);
    if (g.edges.empty()) {
        return 0;
    }
    long long lo = component_density_floor(g);
    long long hi = std::max(lo, degeneracy(g));
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (nash_williams_feasible(g, mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

DensityWitness arboricity_witness(const SimpleGraph& g) {
    DensityWitness result;
    result.alpha = arboricity_exact(g);
    if (result.alpha == 0) {
        return result;
    }
    if (nash_williams_feasible(g, result.alpha - 1, &result.subset)) {
        throw std::logic_error("arboricity witness extraction found no violating subset");
    }
    std::sort(result.subset.begin(), result.subset.end());
    return result;
}

ForestCover forest_cover(const SimpleGraph& g) {
    validate_simple(g);
    ForestCover cover;
    std::vector<int> remaining(g.edges.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    while (!remaining.empty()) {
        Dsu dsu(g.vertex_count);
        std::vector<int> forest;
        std::vector<int> rest;
        for (int id : remaining) {
            auto [u, v] = g.edges[static_cast<std::size_t>(id)];
            if (dsu.unite(u, v)) {
                forest.push_back(id);
            } else {
                rest.push_back(id);
            }
        }
        cover.forests.push_back(std::move(forest));
        remaining = std::move(rest);
    }
    return cover;
}

bool forest_cover_valid(const SimpleGraph& g, const ForestCover& cover) {
    std::vector<int> seen(g.edges.size(), 0);
    for (const auto& forest : cover.forests) {
        Dsu dsu(g.vertex_count);
        for (int id : forest) {
            if (id < 0 || id >= static_cast<int>(g.edges.size())) {
                return false;
            }
            ++seen[static_cast<std::size_t>(id)];
            auto [u, v] = g.edges[static_cast<std::size_t>(id)];
            if (!dsu.unite(u, v)) {
                return false;  // cycle within a forest
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

void write_forest_cover(const ForestCover& cover, std::ostream& out) {
    for (const auto& forest : cover.forests) {
        for (std::size_t i = 0; i < forest.size(); ++i) {
            out << forest[i] << (i + 1 < forest.size() ? ' ' : '\n');
        }
        if (forest.empty()) {
            out << '\n';
        }
    }
}

ArboricityBoundCheck check_pg_arboricity_bound(const MatchingSequence& seq, int s, const Rat& c) {
    if (s < 2) {
        throw ArgumentError("bound check requires s >= 2");
    }
    if (c <= 0) {
        throw ArgumentError("bound constant must be positive");
    }
    SimpleGraph g = union_graph(seq);
    ArboricityBoundCheck result;
    result.alpha = arboricity_exact(g);
    result.m = static_cast<long long>(g.edges.size());

    // alpha <= c*s*n^(2/s)  <=>  (alpha*q)^s <= (p*s)^s * n^2 with c = p/q.
    Int lhs_base = Int(static_cast<long>(result.alpha)) * c.get_den();
    Int lhs;
    mpz_pow_ui(lhs.get_mpz_t(), lhs_base.get_mpz_t(), static_cast<unsigned long>(s));
    Int rhs_base = c.get_num() * s;
    Int rhs;
    mpz_pow_ui(rhs.get_mpz_t(), rhs_base.get_mpz_t(), static_cast<unsigned long>(s));
    rhs *= Int(g.vertex_count) * Int(g.vertex_count);
    result.ok = lhs <= rhs;

    double n = static_cast<double>(g.vertex_count);
    result.ratio = static_cast<double>(result.alpha) /
                   (static_cast<double>(s) * std::pow(n, 2.0 / static_cast<double>(s)));
    return result;
}

bool check_average_degree_bound(const SimpleGraph& g, int s, const Rat& c) {
    if (g.vertex_count == 0) {
        return true;
    }
    // 2m/n <= c*s*n^(2/s)  <=>  (2m*q)^s <= (p*s)^s * n^(s+2).
    Int lhs_base = Int(2 * static_cast<long>(g.edges.size())) * c.get_den();
    Int lhs;
    mpz_pow_ui(lhs.get_mpz_t(), lhs_base.get_mpz_t(), static_cast<unsigned long>(s));
    Int rhs_base = c.get_num() * s;
    Int rhs;
    mpz_pow_ui(rhs.get_mpz_t(), rhs_base.get_mpz_t(), static_cast<unsigned long>(s));
    Int npow;
    mpz_pow_ui(npow.get_mpz_t(), Int(g.vertex_count).get_mpz_t(),
               static_cast<unsigned long>(s + 2));
    rhs *= npow;
    return lhs <= rhs;
}

}  // namespace lced
