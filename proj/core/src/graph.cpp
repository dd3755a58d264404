#include "lced/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "lced/errors.hpp"

namespace lced {

LengthCapGraph::LengthCapGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) {
        throw ArgumentError("vertex count must be non-negative");
    }
    incident_.resize(static_cast<std::size_t>(n_));
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        Edge& e = edges_[id];
        e.length.canonicalize();
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
            throw ArgumentError("edge " + std::to_string(id) + " references invalid vertex");
        }
        if (e.u == e.v) {
            throw ArgumentError("edge " + std::to_string(id) + " is a self-loop");
        }
        if (e.length < 0) {
            throw ArgumentError("edge " + std::to_string(id) + " has negative length");
        }
        if (e.capacity < 1) {
            throw ArgumentError("edge " + std::to_string(id) + " has non-positive capacity");
        }
        incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(id));
        incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(id));
    }
}

void LengthCapGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw ArgumentError("invalid vertex id " + std::to_string(v));
    }
}

const Edge& LengthCapGraph::edge(int id) const {
    if (id < 0 || id >= edge_count()) {
        throw ArgumentError("invalid edge id " + std::to_string(id));
    }
    return edges_[static_cast<std::size_t>(id)];
}

const std::vector<int>& LengthCapGraph::incident(int v) const {
    check_vertex(v);
    return incident_[static_cast<std::size_t>(v)];
}

int LengthCapGraph::other_end(int edge_id, int v) const {
    const Edge& e = edge(edge_id);
    return e.u == v ? e.v : e.u;
}

long long LengthCapGraph::capacity_weighted_degree(int v) const {
    check_vertex(v);
    long long total = 0;
    for (int id : incident_[static_cast<std::size_t>(v)]) {
        total += edges_[static_cast<std::size_t>(id)].capacity;
    }
    return total;
}

NodeWeighting LengthCapGraph::degree_weighting() const {
    std::vector<long long> w(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        w[static_cast<std::size_t>(v)] = capacity_weighted_degree(v);
    }
    return NodeWeighting(std::move(w));
}

std::vector<Dist> LengthCapGraph::distances_from(int source) const {
    check_vertex(source);
    std::vector<Dist> dist(static_cast<std::size_t>(n_));
    std::vector<bool> done(static_cast<std::size_t>(n_), false);
    using Item = std::pair<Rat, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<std::size_t>(source)] = Rat(0);
    heap.emplace(Rat(0), source);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (done[static_cast<std::size_t>(v)]) {
            continue;
        }
        done[static_cast<std::size_t>(v)] = true;
        for (int id : incident_[static_cast<std::size_t>(v)]) {
            const Edge& e = edges_[static_cast<std::size_t>(id)];
            int w = e.u == v ? e.v : e.u;
            if (done[static_cast<std::size_t>(w)]) {
                continue;
            }
            Rat cand = d + e.length;
            Dist& slot = dist[static_cast<std::size_t>(w)];
            if (!slot.has_value() || cand < *slot) {
                slot = cand;
                heap.emplace(std::move(cand), w);
            }
        }
    }
    return dist;
}

Dist LengthCapGraph::distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        return Rat(0);
    }
    return distances_from(u)[static_cast<std::size_t>(v)];
}

std::vector<int> LengthCapGraph::ball(int center, const Rat& radius) const {
    check_vertex(center);
    if (radius < 0) {
        throw ArgumentError("ball radius must be non-negative");
    }
    std::vector<int> members;
    auto dist = distances_from(center);
    for (int v = 0; v < n_; ++v) {
        if (dist_leq(dist[static_cast<std::size_t>(v)], radius)) {
            members.push_back(v);
        }
    }
    return members;
}

LengthCapGraph LengthCapGraph::with_lengths(std::vector<Rat> lengths) const {
    if (lengths.size() != edges_.size()) {
        throw ArgumentError("length vector size mismatch");
    }
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edges[i].length = std::move(lengths[i]);
    }
    return LengthCapGraph(n_, std::move(edges));
}

void LengthCapGraph::write(std::ostream& out) const {
    out << n_ << ' ' << edge_count() << '\n';
    for (const Edge& e : edges_) {
        out << e.u << ' ' << e.v << ' ' << rat_str(e.length) << ' ' << e.capacity << '\n';
    }
}

LengthCapGraph LengthCapGraph::read(std::istream& in) {
    int n = 0;
    int m = 0;
    if (!(in >> n >> m)) {
        throw ParseError("graph header: expected 'n m'");
    }
    if (n < 0 || m < 0) {
        throw ParseError("graph header: negative count");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::min(m, 1 << 20)));
    for (int i = 0; i < m; ++i) {
        int u = 0;
        int v = 0;
        std::string len;
        long long cap = 0;
        if (!(in >> u >> v >> len >> cap)) {
            throw ParseError("graph edge line " + std::to_string(i) + ": expected 'u v length capacity'");
        }
        Rat length = parse_rat(len);
        if (length < 0) {
            throw ParseError("graph edge line " + std::to_string(i) + ": negative length");
        }
        edges.push_back(Edge{u, v, std::move(length), cap});
    }
    try {
        return LengthCapGraph(n, std::move(edges));
    } catch (const ArgumentError& err) {
        throw ParseError(std::string("graph file: ") + err.what());
    }
}

NodeWeighting::NodeWeighting(std::vector<long long> weights) : weights_(std::move(weights)) {
    for (long long w : weights_) {
        if (w < 0) {
            throw ArgumentError("node weight must be non-negative");
        }
    }
}

long long NodeWeighting::total() const {
    long long sum = 0;
    for (long long w : weights_) {
        sum += w;
    }
    return sum;
}

void NodeWeighting::validate_against(const LengthCapGraph& g) const {
    if (size() != g.vertex_count()) {
        throw ArgumentError("node weighting size mismatch");
    }
    for (int v = 0; v < size(); ++v) {
        if ((*this)[v] > g.capacity_weighted_degree(v)) {
            throw ArgumentError("node weight at vertex " + std::to_string(v) +
                                " exceeds capacity-weighted degree");
        }
    }
}

LengthCapGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file: " + path);
    }
    return LengthCapGraph::read(in);
}

void write_graph_file(const LengthCapGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open graph file for writing: " + path);
    }
    g.write(out);
}

}  // namespace lced
