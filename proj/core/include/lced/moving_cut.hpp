#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lced/demand.hpp"
#include "lced/graph.hpp"
#include "lced/rational.hpp"

namespace lced {

// Fractional length-increase assignment on edges. The zero function is
// representable for helper arithmetic but is never certified as a cut: a zero
// cut separates nothing, so its sparsity is infinite.
class MovingCut {
public:
    using Values = std::map<int, Rat>;

    MovingCut() = default;

    /// Sets C(edge) = value; value must be positive (erase by omission).
    void set(int edge_id, Rat value);
    Rat value(int edge_id) const;
    const Values& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    /// |C| = sum_e capacity(e) * C(e).
    Rat size(const LengthCapGraph& g) const;

    MovingCut scaled(const Rat& factor) const;
    MovingCut& operator+=(const MovingCut& other);
    friend MovingCut operator+(MovingCut lhs, const MovingCut& rhs) { return lhs += rhs; }

    void write(std::ostream& out) const;
    static MovingCut read(std::istream& in);

private:
    Values values_;
};

/// New graph with each length l_e replaced by l_e + h * C(e).
LengthCapGraph apply_cut(const LengthCapGraph& g, const MovingCut& c, const Rat& h);

struct DemandSizeResult {
    long long value = 0;
    Demand witness;
};

/// Largest A-respecting h-length demand fully (h*s)-separated by c, evaluated
/// in g, plus an integral witness read off a bipartite max-flow.
DemandSizeResult demand_size(const LengthCapGraph& g, const MovingCut& c, const NodeWeighting& a,
                             const Rat& h, const Rat& s);

/// Generalized form: support pairs within h_length of each other that the cut,
/// applied at sep_threshold, pushes strictly beyond sep_threshold.
DemandSizeResult demand_size_at(const LengthCapGraph& g, const MovingCut& c,
                                const NodeWeighting& a, const Rat& h_length,
                                const Rat& sep_threshold);

/// Largest demand under the stricter combined bound sent+received <= A(v),
/// canonical (u < v) support. This is the form whose entries can always be
/// realized as matchings on A(v) vertex copies.
DemandSizeResult demand_size_matching_safe(const LengthCapGraph& g, const MovingCut& c,
                                           const NodeWeighting& a, const Rat& h, const Rat& s,
                                           long long node_budget = 20'000'000);

/// |C| / demand-size; nullopt means infinite (demand-size zero).
std::optional<Rat> sparsity(const LengthCapGraph& g, const MovingCut& c, const NodeWeighting& a,
                            const Rat& h, const Rat& s);

struct CutReport {
    Rat cut_size;
    long long demand_size = 0;
    std::optional<Rat> sparsity;
    bool sparse = false;
};

struct SequenceReport {
    bool ok = true;
    std::vector<CutReport> cuts;
};

/// Checks that each cut is (h,s)-length phi-sparse in the graph after all
/// previous cuts have been applied at threshold h*s.
SequenceReport verify_cut_sequence(const LengthCapGraph& g, const NodeWeighting& a,
                                   const std::vector<MovingCut>& cuts, const Rat& h, const Rat& s,
                                   const Rat& phi);

MovingCut read_cut_file(const std::string& path);
void write_cut_file(const MovingCut& c, const std::string& path);

}  // namespace lced
