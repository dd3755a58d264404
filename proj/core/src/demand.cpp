#include "lced/demand.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "lced/errors.hpp"
#include "lced/moving_cut.hpp"

namespace lced {

void Demand::add(int u, int v, long long amount) {
    if (u < 0 || v < 0) {
        throw ArgumentError("demand pair references negative vertex id");
    }
    if (amount <= 0) {
        throw ArgumentError("demand values must be positive");
    }
    entries_[{u, v}] += amount;
    total_ += amount;
}

long long Demand::value(int u, int v) const {
    auto it = entries_.find({u, v});
    return it == entries_.end() ? 0 : it->second;
}

Demand Demand::canonical() const {
    Demand folded;
    for (const auto& [pair, amount] : entries_) {
        int lo = std::min(pair.first, pair.second);
        int hi = std::max(pair.first, pair.second);
        folded.add(lo, hi, amount);
    }
    return folded;
}

std::vector<long long> Demand::sent_by(int vertex_count) const {
    std::vector<long long> out(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [pair, amount] : entries_) {
        out.at(static_cast<std::size_t>(pair.first)) += amount;
    }
    return out;
}

std::vector<long long> Demand::received_by(int vertex_count) const {
    std::vector<long long> out(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [pair, amount] : entries_) {
        out.at(static_cast<std::size_t>(pair.second)) += amount;
    }
    return out;
}

std::vector<long long> Demand::incidence(int vertex_count) const {
    std::vector<long long> out(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [pair, amount] : entries_) {
        out.at(static_cast<std::size_t>(pair.first)) += amount;
        out.at(static_cast<std::size_t>(pair.second)) += amount;
    }
    return out;
}

void Demand::write(std::ostream& out) const {
    for (const auto& [pair, amount] : entries_) {
        out << pair.first << ' ' << pair.second << ' ' << amount << '\n';
    }
}

Demand Demand::read(std::istream& in) {
    Demand d;
    int u = 0;
    int v = 0;
    long long amount = 0;
    while (in >> u >> v >> amount) {
        if (u < 0 || v < 0) {
            throw ParseError("demand file: negative vertex id");
        }
        if (amount <= 0) {
            throw ParseError("demand file: non-positive value");
        }
        d.add(u, v, amount);
    }
    if (!in.eof()) {
        throw ParseError("demand file: expected 'u v value' lines");
    }
    return d;
}

bool is_h_length(const Demand& d, const LengthCapGraph& g, const Rat& h) {
    if (h < 0) {
        throw ArgumentError("h must be non-negative");
    }
    // Group by source so each one costs a single shortest-path run.
    int current = -1;
    std::vector<Dist> dist;
    for (const auto& [pair, amount] : d.entries()) {
        (void)amount;
        if (pair.first >= g.vertex_count() || pair.second >= g.vertex_count()) {
            throw ArgumentError("demand references invalid vertex");
        }
        if (pair.first != current) {
            current = pair.first;
            dist = g.distances_from(current);
        }
        if (!dist_leq(dist[static_cast<std::size_t>(pair.second)], h)) {
            return false;
        }
    }
    return true;
}

bool is_a_respecting(const Demand& d, const NodeWeighting& a) {
    auto sent = d.sent_by(a.size());
    auto received = d.received_by(a.size());
    for (int v = 0; v < a.size(); ++v) {
        if (std::max(sent[static_cast<std::size_t>(v)], received[static_cast<std::size_t>(v)]) > a[v]) {
            return false;
        }
    }
    return true;
}

long long separated_amount(const Demand& d, const LengthCapGraph& g, const MovingCut& c,
                           const Rat& h) {
    LengthCapGraph cut_graph = apply_cut(g, c, h);
    long long separated = 0;
    int current = -1;
    std::vector<Dist> dist;
    for (const auto& [pair, amount] : d.entries()) {
        if (pair.first != current) {
            current = pair.first;
            dist = cut_graph.distances_from(current);
        }
        if (dist_greater(dist[static_cast<std::size_t>(pair.second)], h)) {
            separated += amount;
        }
    }
    return separated;
}

Demand read_demand_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open demand file: " + path);
    }
    return Demand::read(in);
}

void write_demand_file(const Demand& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open demand file for writing: " + path);
    }
    d.write(out);
}

}  // namespace lced
