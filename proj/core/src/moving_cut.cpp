#include "lced/moving_cut.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "lced/errors.hpp"
#include "lced/max_flow.hpp"

namespace lced {

void MovingCut::set(int edge_id, Rat value) {
    if (edge_id < 0) {
        throw ArgumentError("cut references negative edge id");
    }
    value.canonicalize();
    if (value <= 0) {
        throw ArgumentError("cut values must be positive");
    }
    values_[edge_id] = std::move(value);
}

Rat MovingCut::value(int edge_id) const {
    auto it = values_.find(edge_id);
    return it == values_.end() ? Rat(0) : it->second;
}

Rat MovingCut::size(const LengthCapGraph& g) const {
    Rat total = 0;
    for (const auto& [edge_id, value] : values_) {
        total += rat_of(g.edge(edge_id).capacity) * value;
    }
    return total;
}

MovingCut MovingCut::scaled(const Rat& factor) const {
    if (factor <= 0) {
        throw ArgumentError("scale factor must be positive");
    }
    MovingCut out;
    for (const auto& [edge_id, value] : values_) {
        out.values_[edge_id] = value * factor;
    }
    return out;
}

MovingCut& MovingCut::operator+=(const MovingCut& other) {
    for (const auto& [edge_id, value] : other.values_) {
        values_[edge_id] += value;
    }
    return *this;
}

void MovingCut::write(std::ostream& out) const {
    for (const auto& [edge_id, value] : values_) {
        out << edge_id << ' ' << rat_str(value) << '\n';
    }
}

MovingCut MovingCut::read(std::istream& in) {
    MovingCut c;
    int edge_id = 0;
    std::string value;
    while (in >> edge_id >> value) {
        Rat v = parse_rat(value);
        if (v <= 0) {
            throw ParseError("cut file: non-positive value");
        }
        c.set(edge_id, std::move(v));
    }
    if (!in.eof()) {
        throw ParseError("cut file: expected 'edge_id value' lines");
    }
    return c;
}

LengthCapGraph apply_cut(const LengthCapGraph& g, const MovingCut& c, const Rat& h) {
    if (h <= 0) {
        throw ArgumentError("cut application threshold must be positive");
    }
    std::vector<Rat> lengths;
    lengths.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int id = 0; id < g.edge_count(); ++id) {
        lengths.push_back(g.edge(id).length);
    }
    for (const auto& [edge_id, value] : c.values()) {
        if (edge_id >= g.edge_count()) {
            throw ArgumentError("cut references unknown edge id " + std::to_string(edge_id));
        }
        lengths[static_cast<std::size_t>(edge_id)] += h * value;
    }
    return g.with_lengths(std::move(lengths));
}

namespace {

// Ordered pairs (u, v) with A(u), A(v) > 0 that are h_length-close in g but
// pushed strictly beyond sep_threshold once the cut is applied.
std::vector<std::pair<int, int>> eligible_pairs(const LengthCapGraph& g, const MovingCut& c,
                                                const NodeWeighting& a, const Rat& h_length,
                                                const Rat& sep_threshold) {
    LengthCapGraph cut_graph = apply_cut(g, c, sep_threshold);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (a[u] == 0) {
            continue;
        }
        auto base = g.distances_from(u);
        auto moved = cut_graph.distances_from(u);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v == u || a[v] == 0) {
                continue;
            }
            if (dist_leq(base[static_cast<std::size_t>(v)], h_length) &&
                dist_greater(moved[static_cast<std::size_t>(v)], sep_threshold)) {
                pairs.emplace_back(u, v);
            }
        }
    }
    return pairs;
}

}  // namespace

DemandSizeResult demand_size_at(const LengthCapGraph& g, const MovingCut& c,
                                const NodeWeighting& a, const Rat& h_length,
                                const Rat& sep_threshold) {
    if (h_length <= 0 || sep_threshold <= 0) {
        throw ArgumentError("demand-size thresholds must be positive");
    }
    a.validate_against(g);
    auto pairs = eligible_pairs(g, c, a, h_length, sep_threshold);

    int n = g.vertex_count();
    // Nodes: 0 = source, 1..n senders, n+1..2n receivers, 2n+1 = sink.
    MaxFlow flow(2 * n + 2);
    int source = 0;
    int sink = 2 * n + 1;
    for (int v = 0; v < n; ++v) {
        if (a[v] > 0) {
            flow.add_arc(source, 1 + v, a[v]);
            flow.add_arc(1 + n + v, sink, a[v]);
        }
    }
    std::vector<int> pair_arcs;
    pair_arcs.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        pair_arcs.push_back(flow.add_arc(1 + u, 1 + n + v, std::min(a[u], a[v])));
    }
    DemandSizeResult result;
    result.value = flow.run(source, sink);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        long long amount = flow.flow_on(pair_arcs[i]);
        if (amount > 0) {
            result.witness.add(pairs[i].first, pairs[i].second, amount);
        }
    }
    return result;
}

DemandSizeResult demand_size(const LengthCapGraph& g, const MovingCut& c, const NodeWeighting& a,
                             const Rat& h, const Rat& s) {
    if (h < 1) {
        throw ArgumentError("demand-size requires h >= 1");
    }
    if (s < 2) {
        throw ArgumentError("demand-size requires s >= 2");
    }
    return demand_size_at(g, c, a, h, h * s);
}

namespace {

struct MatchingSafeSearch {
    const std::vector<std::pair<int, int>>& pairs;
    std::vector<long long>& residual;
    long long budget;
    long long expansions = 0;
    long long best = 0;
    std::vector<long long> chosen;
    std::vector<long long> best_chosen;

    void run() {
        chosen.assign(pairs.size(), 0);
        best_chosen = chosen;
        dfs(0, 0);
    }

    void dfs(std::size_t idx, long long current) {
        if (++expansions > budget) {
            throw ResourceError("matching-safe demand search exceeded budget of " +
                                std::to_string(budget) + " nodes");
        }
        // Upper bound: residual halves and per-pair residual minima.
        long long res_total = 0;
        for (long long r : residual) {
            res_total += r;
        }
        long long pair_room = 0;
        for (std::size_t j = idx; j < pairs.size(); ++j) {
            pair_room += std::min(residual[static_cast<std::size_t>(pairs[j].first)],
                                  residual[static_cast<std::size_t>(pairs[j].second)]);
        }
        if (current + std::min(res_total / 2, pair_room) <= best) {
            return;
        }
        if (idx == pairs.size()) {
            if (current > best) {
                best = current;
                best_chosen = chosen;
            }
            return;
        }
        auto [u, v] = pairs[idx];
        long long max_here = std::min(residual[static_cast<std::size_t>(u)],
                                      residual[static_cast<std::size_t>(v)]);
        for (long long amount = max_here; amount >= 0; --amount) {
            residual[static_cast<std::size_t>(u)] -= amount;
            residual[static_cast<std::size_t>(v)] -= amount;
            chosen[idx] = amount;
            dfs(idx + 1, current + amount);
            residual[static_cast<std::size_t>(u)] += amount;
            residual[static_cast<std::size_t>(v)] += amount;
            chosen[idx] = 0;
        }
    }
};

}  // namespace

DemandSizeResult demand_size_matching_safe(const LengthCapGraph& g, const MovingCut& c,
                                           const NodeWeighting& a, const Rat& h, const Rat& s,
                                           long long node_budget) {
    if (h < 1) {
        throw ArgumentError("demand-size requires h >= 1");
    }
    if (s < 2) {
        throw ArgumentError("demand-size requires s >= 2");
    }
    a.validate_against(g);
    auto ordered = eligible_pairs(g, c, a, h, h * s);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(ordered.size());
    for (const auto& [u, v] : ordered) {
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    std::vector<long long> residual = a.weights();
    MatchingSafeSearch search{pairs, residual, node_budget, 0, 0, {}, {}};
    search.run();

    DemandSizeResult result;
    result.value = search.best;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (search.best_chosen[i] > 0) {
            result.witness.add(pairs[i].first, pairs[i].second, search.best_chosen[i]);
        }
    }
    return result;
}

std::optional<Rat> sparsity(const LengthCapGraph& g, const MovingCut& c, const NodeWeighting& a,
                            const Rat& h, const Rat& s) {
    auto ds = demand_size(g, c, a, h, s);
    if (ds.value == 0) {
        return std::nullopt;
    }
    return c.size(g) / rat_of(ds.value);
}

SequenceReport verify_cut_sequence(const LengthCapGraph& g, const NodeWeighting& a,
                                   const std::vector<MovingCut>& cuts, const Rat& h, const Rat& s,
                                   const Rat& phi) {
    if (phi <= 0) {
        throw ArgumentError("phi must be positive");
    }
    a.validate_against(g);
    SequenceReport report;
    LengthCapGraph current = g;
    for (const MovingCut& cut : cuts) {
        CutReport entry;
        entry.cut_size = cut.size(current);
        auto ds = demand_size(current, cut, a, h, s);
        entry.demand_size = ds.value;
        if (ds.value > 0) {
            entry.sparsity = entry.cut_size / rat_of(ds.value);
        }
        entry.sparse = entry.sparsity.has_value() && *entry.sparsity <= phi;
        if (entry.sparse && entry.cut_size > phi * rat_of(a.total())) {
            // A phi-sparse cut has size at most phi * |A|; anything else is a
            // computation bug, not a property failure.
            throw std::logic_error("certified sparse cut exceeds phi * |A|");
        }
        report.ok = report.ok && entry.sparse;
        report.cuts.push_back(std::move(entry));
        current = apply_cut(current, cut, h * s);
    }
    return report;
}

MovingCut read_cut_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open cut file: " + path);
    }
    return MovingCut::read(in);
}

void write_cut_file(const MovingCut& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open cut file for writing: " + path);
    }
    c.write(out);
}

}  // namespace lced
