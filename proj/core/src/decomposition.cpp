#include "lced/decomposition.hpp"

#include <algorithm>
#include <set>

#include "lced/errors.hpp"

namespace lced {

std::string family_name(FinderFamily family) {
    switch (family) {
        case FinderFamily::Exhaustive:
            return "exhaustive";
        case FinderFamily::Balls:
            return "balls";
        case FinderFamily::Singletons:
            return "singletons";
    }
    return "unknown";
}

FinderFamily parse_family(const std::string& name) {
    if (name == "exhaustive") {
        return FinderFamily::Exhaustive;
    }
    if (name == "balls") {
        return FinderFamily::Balls;
    }
    if (name == "singletons") {
        return FinderFamily::Singletons;
    }
    throw ArgumentError("unknown finder family: " + name);
}

namespace {

MovingCut unit_cut(const std::vector<int>& edge_ids) {
    MovingCut cut;
    for (int id : edge_ids) {
        cut.set(id, Rat(1));
    }
    return cut;
}

// Candidate edge sets in the family's deterministic order, deduplicated.
std::vector<std::vector<int>> candidates(const LengthCapGraph& g, const FinderSpec& spec) {
    std::vector<std::vector<int>> out;
    int m = g.edge_count();
    switch (spec.family) {
        case FinderFamily::Singletons: {
            for (int id = 0; id < m; ++id) {
                out.push_back({id});
            }
            break;
        }
        case FinderFamily::Balls: {
            std::set<std::vector<int>> seen;
            for (int center = 0; center < g.vertex_count(); ++center) {
                auto dist = g.distances_from(center);
                std::set<Rat> radii;
                for (const Dist& d : dist) {
                    if (d.has_value()) {
                        radii.insert(*d);
                    }
                }
                for (const Rat& radius : radii) {
                    std::vector<bool> inside(static_cast<std::size_t>(g.vertex_count()), false);
                    for (int v = 0; v < g.vertex_count(); ++v) {
                        inside[static_cast<std::size_t>(v)] =
                            dist_leq(dist[static_cast<std::size_t>(v)], radius);
                    }
                    std::vector<int> boundary;
                    for (int id = 0; id < m; ++id) {
                        const Edge& e = g.edge(id);
                        if (inside[static_cast<std::size_t>(e.u)] !=
                            inside[static_cast<std::size_t>(e.v)]) {
                            boundary.push_back(id);
                        }
                    }
                    if (!boundary.empty() && seen.insert(boundary).second) {
                        out.push_back(std::move(boundary));
                    }
                }
            }
            break;
        }
        case FinderFamily::Exhaustive: {
            int bound = std::min(spec.max_cut_edges, m);
            // Count first so the budget refuses oversized enumerations up front.
            long long count = 0;
            for (int size = 1; size <= bound; ++size) {
                long long binom = 1;
                for (int i = 0; i < size; ++i) {
                    binom = binom * (m - i) / (i + 1);
                }
                count += binom;
                if (count > spec.candidate_budget) {
                    throw ResourceError("exhaustive finder would enumerate more than " +
                                        std::to_string(spec.candidate_budget) +
                                        " candidates (bound " + std::to_string(bound) + ")");
                }
            }
            for (int size = 1; size <= bound; ++size) {
                std::vector<int> pick(static_cast<std::size_t>(size));
                for (int i = 0; i < size; ++i) {
                    pick[static_cast<std::size_t>(i)] = i;
                }
                while (true) {
                    out.push_back(pick);
                    int i = size - 1;
                    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i) {
                        --i;
                    }
                    if (i < 0) {
                        break;
                    }
                    ++pick[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < size; ++j) {
                        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
                    }
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::optional<MovingCut> find_sparse_cut(const LengthCapGraph& g, const NodeWeighting& a,
                                         const Rat& h, const Rat& s, const Rat& phi,
                                         const FinderSpec& spec) {
    if (phi <= 0) {
        throw ArgumentError("phi must be positive");
    }
    a.validate_against(g);
    for (const auto& edge_ids : candidates(g, spec)) {
        MovingCut cut = unit_cut(edge_ids);
        auto spars = sparsity(g, cut, a, h, s);
        if (spars.has_value() && *spars <= phi) {
            if (cut.size(g) > phi * rat_of(a.total())) {
                throw std::logic_error("sparse candidate exceeds phi * |A|");
            }
            return cut;
        }
    }
    return std::nullopt;
}

bool certify_no_sparse_cut(const LengthCapGraph& g, const NodeWeighting& a, const Rat& h,
                           const Rat& s, const Rat& phi, const FinderSpec& spec) {
    return !find_sparse_cut(g, a, h, s, phi, spec).has_value();
}

DecompositionResult build_decomposition(const LengthCapGraph& g, const NodeWeighting& a,
                                        const Rat& h, const Rat& s, const Rat& phi,
                                        const FinderSpec& spec, int iteration_cap) {
    if (s < 2) {
        throw ArgumentError("decomposition requires s >= 2");
    }
    if (a.total() == 0) {
        throw ArgumentError("node weighting must have positive total");
    }
    DecompositionResult result;
    result.finder = spec;
    LengthCapGraph current = g;
    MovingCut total;
    while (true) {
        auto found = find_sparse_cut(current, a, h, s, phi, spec);
        if (!found.has_value()) {
            break;
        }
        if (static_cast<int>(result.cuts.size()) >= iteration_cap) {
            throw ResourceError("decomposition exceeded iteration cap of " +
                                std::to_string(iteration_cap) + " after removing " +
                                std::to_string(result.cuts.size()) + " cuts of total size " +
                                rat_str(total.size(g)));
        }
        DecompositionStep step;
        step.cut = *found;
        step.cut_size = found->size(current);
        auto ds = demand_size(current, *found, a, h, s);
        step.demand_size = ds.value;
        step.sparsity = step.cut_size / rat_of(ds.value);
        result.steps.push_back(step);
        result.cuts.push_back(*found);
        total += *found;
        current = apply_cut(current, *found, h * s);
    }
    Rat scale = Rat(s) / (s - 1);
    result.union_cut = total.is_zero() ? MovingCut() : total.scaled(scale);
    result.total_size = result.union_cut.size(g);
    result.slack = result.total_size / (phi * rat_of(a.total()));
    return result;
}

}  // namespace lced
