#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "lced/graph.hpp"
#include "lced/rational.hpp"

namespace lced {

class MovingCut;

// Sparse integer demand on ordered vertex pairs. Zero entries are never
// stored, so |D| is the sum over entries().
class Demand {
public:
    using Entries = std::map<std::pair<int, int>, long long>;

    Demand() = default;

    /// Accumulates amount onto (u, v); amount must be positive.
    void add(int u, int v, long long amount);
    long long value(int u, int v) const;
    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    long long size() const { return total_; }

    /// Folds both orientations onto (min(u,v), max(u,v)) support.
    Demand canonical() const;

    /// Row sum, column sum and their combined total at each vertex.
    std::vector<long long> sent_by(int vertex_count) const;
    std::vector<long long> received_by(int vertex_count) const;
    std::vector<long long> incidence(int vertex_count) const;

    void write(std::ostream& out) const;
    static Demand read(std::istream& in);

private:
    Entries entries_;
    long long total_ = 0;
};

/// True iff every support pair is within distance h in g.
bool is_h_length(const Demand& d, const LengthCapGraph& g, const Rat& h);

/// True iff max(sent, received) <= A(v) at every vertex.
bool is_a_respecting(const Demand& d, const NodeWeighting& a);

/// Total demand between pairs whose distance in (g with lengths l + h*C)
/// strictly exceeds h.
long long separated_amount(const Demand& d, const LengthCapGraph& g, const MovingCut& c,
                           const Rat& h);

Demand read_demand_file(const std::string& path);
void write_demand_file(const Demand& d, const std::string& path);

}  // namespace lced
