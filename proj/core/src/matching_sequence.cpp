#include "lced/matching_sequence.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <tuple>

#include "lced/errors.hpp"
#include "lced/rng.hpp"

namespace lced {

namespace {

std::pair<int, int> normalized(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Adjacency over global edge ids; edges() order.
struct Adjacency {
    std::vector<std::tuple<int, int, int>> edges;  // u, v, matching index
    std::vector<std::vector<int>> incident;

    explicit Adjacency(const MatchingSequence& seq)
        : edges(seq.edges()), incident(static_cast<std::size_t>(seq.vertex_count)) {
        for (std::size_t id = 0; id < edges.size(); ++id) {
            auto [u, v, mi] = edges[id];
            incident[static_cast<std::size_t>(u)].push_back(static_cast<int>(id));
            incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(id));
        }
    }

    int other(int id, int v) const {
        auto [a, b, mi] = edges[static_cast<std::size_t>(id)];
        return a == v ? b : a;
    }

    int index(int id) const { return std::get<2>(edges[static_cast<std::size_t>(id)]); }
};

void check_structure(const MatchingSequence& seq) {
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < seq.matchings.size(); ++i) {
        std::set<int> touched;
        for (auto [u, v] : seq.matchings[i]) {
            if (u < 0 || u >= seq.vertex_count || v < 0 || v >= seq.vertex_count) {
                throw StructureError("matching " + std::to_string(i + 1) +
                                     " references invalid vertex");
            }
            if (u == v) {
                throw StructureError("matching " + std::to_string(i + 1) + " contains a self-loop");
            }
            if (!touched.insert(u).second || !touched.insert(v).second) {
                throw StructureError("matching " + std::to_string(i + 1) +
                                     " is not a matching: vertex shared by two edges");
            }
            if (!seen.insert(normalized(u, v)).second) {
                throw StructureError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                     "} appears in two matchings");
            }
        }
    }
}

// Hop distances from source, capped at limit (entries beyond stay -1).
std::vector<int> bounded_hops(const std::vector<std::vector<int>>& adj, int source, int limit) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        if (dist[static_cast<std::size_t>(v)] >= limit) {
            continue;
        }
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

long long MatchingSequence::edge_count() const {
    long long total = 0;
    for (const auto& m : matchings) {
        total += static_cast<long long>(m.size());
    }
    return total;
}

std::vector<std::tuple<int, int, int>> MatchingSequence::edges() const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (std::size_t i = 0; i < matchings.size(); ++i) {
        for (auto [u, v] : matchings[i]) {
            out.emplace_back(u, v, static_cast<int>(i));
        }
    }
    return out;
}

void MatchingSequence::write(std::ostream& out) const {
    out << vertex_count << ' ' << matching_count() << '\n';
    for (int i = 0; i < matching_count(); ++i) {
        const auto& m = matchings[static_cast<std::size_t>(i)];
        out << (i + 1) << ' ' << m.size() << '\n';
        for (auto [u, v] : m) {
            out << u << ' ' << v << '\n';
        }
    }
}

MatchingSequence MatchingSequence::read(std::istream& in) {
    MatchingSequence seq;
    int k = 0;
    if (!(in >> seq.vertex_count >> k)) {
        throw ParseError("sequence header: expected 'n k'");
    }
    if (seq.vertex_count < 0 || k < 0) {
        throw ParseError("sequence header: negative count");
    }
    for (int i = 0; i < k; ++i) {
        int index = 0;
        long long count = 0;
        if (!(in >> index >> count) || index != i + 1 || count < 0) {
            throw ParseError("sequence matching header " + std::to_string(i + 1));
        }
        std::vector<std::pair<int, int>> m;
        m.reserve(static_cast<std::size_t>(std::min<long long>(count, 1 << 20)));
        for (long long j = 0; j < count; ++j) {
            int u = 0;
            int v = 0;
            if (!(in >> u >> v)) {
                throw ParseError("sequence matching " + std::to_string(i + 1) + ": short edge list");
            }
            if (u < 0 || u >= seq.vertex_count || v < 0 || v >= seq.vertex_count) {
                throw ParseError("sequence matching " + std::to_string(i + 1) +
                                 ": vertex id out of range");
            }
            m.push_back(normalized(u, v));
        }
        seq.matchings.push_back(std::move(m));
    }
    return seq;
}

PgVerifyResult verify_parallel_greedy(const MatchingSequence& seq, int s) {
    if (s < 2) {
        throw ArgumentError("parallel-greedy parameter s must be >= 2");
    }
    check_structure(seq);
    std::vector<std::vector<int>> prefix(static_cast<std::size_t>(seq.vertex_count));
    for (std::size_t i = 0; i < seq.matchings.size(); ++i) {
        for (auto [u, v] : seq.matchings[i]) {
            auto dist = bounded_hops(prefix, u, s);
            int d = dist[static_cast<std::size_t>(v)];
            if (d >= 0 && d <= s) {
                PgVerifyResult result;
                result.ok = false;
                result.violation = PgViolation{static_cast<int>(i), {u, v}, d};
                return result;
            }
        }
        for (auto [u, v] : seq.matchings[i]) {
            prefix[static_cast<std::size_t>(u)].push_back(v);
            prefix[static_cast<std::size_t>(v)].push_back(u);
        }
    }
    return PgVerifyResult{};
}

MatchingSequence generate_parallel_greedy(int n, int s, int rounds, std::uint64_t seed) {
    if (n < 2) {
        throw ArgumentError("generator requires n >= 2");
    }
    if (s < 2) {
        throw ArgumentError("generator requires s >= 2");
    }
    if (rounds < 1) {
        throw ArgumentError("generator requires rounds >= 1");
    }
    Rng rng(seed);
    MatchingSequence seq;
    seq.vertex_count = n;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int round = 0; round < rounds; ++round) {
        std::vector<std::pair<int, int>> far;
        for (int u = 0; u < n; ++u) {
            auto dist = bounded_hops(adj, u, s);
            for (int v = u + 1; v < n; ++v) {
                int d = dist[static_cast<std::size_t>(v)];
                if (d < 0 || d > s) {
                    far.emplace_back(u, v);
                }
            }
        }
        if (far.empty()) {
            break;
        }
        rng.shuffle(far);
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        std::vector<std::pair<int, int>> matching;
        for (auto [u, v] : far) {
            if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
                used[static_cast<std::size_t>(u)] = true;
                used[static_cast<std::size_t>(v)] = true;
                matching.emplace_back(u, v);
            }
        }
        std::sort(matching.begin(), matching.end());
        for (auto [u, v] : matching) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        seq.matchings.push_back(std::move(matching));
    }
    return seq;
}

MatchingSequence generate_singleton_greedy(int n, int s, int attempts, std::uint64_t seed) {
    if (n < 2 || s < 2 || attempts < 1) {
        throw ArgumentError("singleton generator requires n >= 2, s >= 2, attempts >= 1");
    }
    Rng rng(seed);
    MatchingSequence seq;
    seq.vertex_count = n;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int t = 0; t < attempts; ++t) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) {
            continue;
        }
        auto dist = bounded_hops(adj, u, s);
        if (dist[static_cast<std::size_t>(v)] < 0) {
            seq.matchings.push_back({normalized(u, v)});
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
    }
    return seq;
}

std::map<std::pair<int, int>, long long> enumerate_monotonic_paths(const MatchingSequence& seq,
                                                                   int length) {
    if (length < 1) {
        throw ArgumentError("path length must be >= 1");
    }
    Adjacency adj(seq);
    // Incident edges sorted by matching index so extensions scan the strictly
    // higher-indexed suffix.
    for (auto& inc : adj.incident) {
        std::sort(inc.begin(), inc.end(),
                  [&](int a, int b) { return adj.index(a) < adj.index(b) || (adj.index(a) == adj.index(b) && a < b); });
    }
    std::map<std::pair<int, int>, long long> counts;
    std::vector<bool> visited(static_cast<std::size_t>(seq.vertex_count), false);

    struct Frame {
        int vertex;
        int last_index;
        int depth;
    };
    for (int start = 0; start < seq.vertex_count; ++start) {
        // Depth-first extension over strictly increasing matching indices.
        std::vector<std::pair<Frame, std::size_t>> stack;
        visited[static_cast<std::size_t>(start)] = true;
        stack.push_back({{start, -1, 0}, 0});
        while (!stack.empty()) {
            auto& [frame, cursor] = stack.back();
            if (frame.depth == length) {
                ++counts[{start, frame.vertex}];
                visited[static_cast<std::size_t>(frame.vertex)] = false;
                stack.pop_back();
                continue;
            }
            const auto& inc = adj.incident[static_cast<std::size_t>(frame.vertex)];
            bool advanced = false;
            while (cursor < inc.size()) {
                int id = inc[cursor++];
                if (adj.index(id) <= frame.last_index) {
                    continue;
                }
                int next = adj.other(id, frame.vertex);
                if (visited[static_cast<std::size_t>(next)]) {
                    continue;
                }
                visited[static_cast<std::size_t>(next)] = true;
                stack.push_back({{next, adj.index(id), frame.depth + 1}, 0});
                advanced = true;
                break;
            }
            if (!advanced) {
                visited[static_cast<std::size_t>(frame.vertex)] = false;
                stack.pop_back();
            }
        }
    }
    return counts;
}

DispersionCheck check_dispersion(const MatchingSequence& seq, int s) {
    if (s < 2) {
        throw ArgumentError("dispersion check requires s >= 2");
    }
    DispersionCheck result;
    result.path_length = (s + 1) / 2;
    auto counts = enumerate_monotonic_paths(seq, result.path_length);
    for (const auto& [pair, count] : counts) {
        result.total_paths += count;
        if (count > result.max_pair_count) {
            result.max_pair_count = count;
        }
        if (count >= 2 && result.ok) {
            result.ok = false;
            result.violating_pair = pair;
        }
    }
    return result;
}

CycleCheck check_cycle_property(const MatchingSequence& seq, int s, long long budget) {
    if (s < 2) {
        throw ArgumentError("cycle check requires s >= 2");
    }
    Adjacency adj(seq);
    CycleCheck result;
    long long expansions = 0;
    int max_edges = s + 1;

    // Canonical enumeration: cycles are rooted at their smallest vertex, walk
    // only through larger vertices, and are closed in one direction only
    // (second vertex smaller than the last).
    std::vector<bool> on_path(static_cast<std::size_t>(seq.vertex_count), false);
    std::vector<int> path_edges;
    std::vector<int> path_vertices;

    auto inspect_cycle = [&](int closing_edge) {
        std::vector<int> cycle = path_edges;
        cycle.push_back(closing_edge);
        int top = -1;
        for (int id : cycle) {
            top = std::max(top, adj.index(id));
        }
        int top_count = 0;
        for (int id : cycle) {
            if (adj.index(id) == top) {
                ++top_count;
            }
        }
        ++result.cycles_checked;
        if (top_count < 2 && result.ok) {
            result.ok = false;
            result.violating_cycle = cycle;
        }
    };

    for (int root = 0; root < seq.vertex_count && result.ok; ++root) {
        struct Frame {
            int vertex;
            std::size_t cursor;
        };
        std::vector<Frame> stack;
        on_path[static_cast<std::size_t>(root)] = true;
        path_vertices.push_back(root);
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const auto& inc = adj.incident[static_cast<std::size_t>(frame.vertex)];
            if (frame.cursor >= inc.size()) {
                on_path[static_cast<std::size_t>(frame.vertex)] = false;
                path_vertices.pop_back();
                if (!path_edges.empty()) {
                    path_edges.pop_back();
                }
                stack.pop_back();
                continue;
            }
            int id = inc[frame.cursor++];
            if (++expansions > budget) {
                throw ResourceError("cycle enumeration exceeded budget of " +
                                    std::to_string(budget) + " expansions");
            }
            int next = adj.other(id, frame.vertex);
            if (next == root) {
                // Closing edge; require >= 3 edges and canonical direction.
                if (static_cast<int>(path_edges.size()) >= 2 && path_vertices.size() >= 3 &&
                    path_vertices[1] < path_vertices.back()) {
                    inspect_cycle(id);
                    if (!result.ok) {
                        break;
                    }
                }
                continue;
            }
            if (next < root || on_path[static_cast<std::size_t>(next)]) {
                continue;
            }
            if (static_cast<int>(path_edges.size()) + 2 > max_edges) {
                continue;  // even with a closing edge the cycle would be too long
            }
            on_path[static_cast<std::size_t>(next)] = true;
            path_vertices.push_back(next);
            path_edges.push_back(id);
            stack.push_back({next, 0});
        }
        // Reset any leftovers after an early break.
        for (int v : path_vertices) {
            on_path[static_cast<std::size_t>(v)] = false;
        }
        path_vertices.clear();
        path_edges.clear();
    }
    return result;
}

HikerResult hiker_walk(const MatchingSequence& seq) {
    HikerResult result;
    result.walks.resize(static_cast<std::size_t>(seq.vertex_count));
    std::vector<int> hiker_at(static_cast<std::size_t>(seq.vertex_count));
    for (int v = 0; v < seq.vertex_count; ++v) {
        hiker_at[static_cast<std::size_t>(v)] = v;
    }
    int edge_id = 0;
    for (const auto& matching : seq.matchings) {
        for (auto [u, v] : matching) {
            int hu = hiker_at[static_cast<std::size_t>(u)];
            int hv = hiker_at[static_cast<std::size_t>(v)];
            result.walks[static_cast<std::size_t>(hu)].push_back(edge_id);
            result.walks[static_cast<std::size_t>(hv)].push_back(edge_id);
            hiker_at[static_cast<std::size_t>(u)] = hv;
            hiker_at[static_cast<std::size_t>(v)] = hu;
            ++edge_id;
        }
    }
    for (const auto& walk : result.walks) {
        result.total_edges_walked += static_cast<long long>(walk.size());
        result.longest_walk = std::max(result.longest_walk, static_cast<int>(walk.size()));
    }
    return result;
}

MatchingSequence read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open sequence file: " + path);
    }
    return MatchingSequence::read(in);
}

void write_sequence_file(const MatchingSequence& seq, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open sequence file for writing: " + path);
    }
    seq.write(out);
}

}  // namespace lced
