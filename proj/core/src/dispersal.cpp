#include "lced/dispersal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "lced/errors.hpp"

namespace lced {

long long DemandMatchingGraph::edge_count() const {
    long long total = 0;
    for (const auto& m : matchings) {
        total += static_cast<long long>(m.size());
    }
    return total;
}

MatchingSequence DemandMatchingGraph::as_parallel_greedy() const {
    MatchingSequence seq;
    seq.vertex_count = copy_count();
    for (auto it = matchings.rbegin(); it != matchings.rend(); ++it) {
        seq.matchings.push_back(*it);
    }
    return seq;
}

DemandMatchingGraph build_demand_matching_graph(const LengthCapGraph& g, const NodeWeighting& a,
                                                const std::vector<Demand>& demands) {
    a.validate_against(g);
    int n = g.vertex_count();

    DemandMatchingGraph out;
    out.copies.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (long long i = 0; i < a[v]; ++i) {
            out.copies[static_cast<std::size_t>(v)].push_back(out.copy_count());
            out.owner.push_back(v);
        }
    }

    for (std::size_t i = 0; i < demands.size(); ++i) {
        Demand folded = demands[i].canonical();
        auto incidence = folded.incidence(n);
        for (int v = 0; v < n; ++v) {
            if (incidence[static_cast<std::size_t>(v)] > a[v]) {
                throw ConstructionError(
                    "demand " + std::to_string(i + 1) + " has combined incidence " +
                    std::to_string(incidence[static_cast<std::size_t>(v)]) + " > A(" +
                    std::to_string(v) + ") = " + std::to_string(a[v]) +
                    "; no matching realizes it");
            }
        }
        std::vector<long long> used(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<int, int>> matching;
        auto take_copy = [&](int v) {
            long long slot = used[static_cast<std::size_t>(v)]++;
            return out.copies[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)];
        };
        for (const auto& [pair, amount] : folded.entries()) {
            for (long long unit = 0; unit < amount; ++unit) {
                int cu = take_copy(pair.first);
                int cv = take_copy(pair.second);
                matching.emplace_back(std::min(cu, cv), std::max(cu, cv));
            }
        }
        out.matchings.push_back(std::move(matching));
    }
    return out;
}

TreeMatchingDemand tree_matching_demand(const Tree& tree) {
    if (tree.vertices.empty()) {
        throw ArgumentError("tree must have at least one vertex");
    }
    std::vector<int> vertices = tree.vertices;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw ArgumentError("tree vertex list contains duplicates");
    }
    if (tree.edges.size() + 1 != vertices.size()) {
        throw ArgumentError("input is not a tree: edge count mismatch");
    }
    std::map<int, std::vector<int>> adjacent;
    for (int v : vertices) {
        adjacent[v];
    }
    for (auto [u, v] : tree.edges) {
        if (!adjacent.count(u) || !adjacent.count(v) || u == v) {
            throw ArgumentError("tree edge references invalid vertex");
        }
        adjacent[u].push_back(v);
        adjacent[v].push_back(u);
    }

    TreeMatchingDemand result;
    result.root = vertices.front();

    // Rooted BFS in id order; disconnected input shows up as unvisited vertices.
    std::map<int, std::vector<int>> children;
    std::set<int> visited{result.root};
    std::vector<int> frontier{result.root};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier) {
            auto& adj = adjacent[v];
            std::sort(adj.begin(), adj.end());
            for (int w : adj) {
                if (visited.insert(w).second) {
                    children[v].push_back(w);
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    if (visited.size() != vertices.size()) {
        throw ArgumentError("input is not a tree: disconnected");
    }

    for (int v : vertices) {
        auto it = children.find(v);
        if (it == children.end() || it->second.empty()) {
            continue;  // leaf
        }
        std::vector<int> group = it->second;
        if (group.size() % 2 == 1) {
            group.push_back(v);
        }
        std::sort(group.begin(), group.end());
        std::vector<std::pair<int, int>> matching;
        for (std::size_t i = 0; i + 1 < group.size(); i += 2) {
            matching.emplace_back(group[i], group[i + 1]);
            result.demand.add(group[i], group[i + 1], 1);
        }
        result.matchings_by_vertex.emplace_back(v, std::move(matching));
    }
    return result;
}

namespace {

std::vector<Tree> forest_trees(const SimpleGraph& host, const std::vector<int>& forest) {
    // Components of the forest's edge set; vertices untouched by the forest
    // contribute nothing.
    std::map<int, std::vector<std::pair<int, int>>> adjacency;  // vertex -> (neighbor, edge id)
    for (int id : forest) {
        auto [u, v] = host.edges[static_cast<std::size_t>(id)];
        adjacency[u].emplace_back(v, id);
        adjacency[v].emplace_back(u, id);
    }
    std::set<int> remaining;
    for (const auto& [v, adj] : adjacency) {
        remaining.insert(v);
    }
    std::vector<Tree> trees;
    while (!remaining.empty()) {
        int start = *remaining.begin();
        Tree tree;
        std::set<int> used_edges;
        std::vector<int> stack{start};
        remaining.erase(start);
        tree.vertices.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : adjacency[v]) {
                if (used_edges.insert(id).second) {
                    tree.edges.emplace_back(host.edges[static_cast<std::size_t>(id)]);
                    if (remaining.erase(w)) {
                        tree.vertices.push_back(w);
                        stack.push_back(w);
                    }
                }
            }
        }
        std::sort(tree.vertices.begin(), tree.vertices.end());
        trees.push_back(std::move(tree));
    }
    return trees;
}

}  // namespace

DispersedDemand matching_dispersed_demand(const LengthCapGraph& g, const NodeWeighting& a,
                                          const std::vector<Demand>& demands) {
    DispersedDemand out;
    out.graph = build_demand_matching_graph(g, a, demands);

    SimpleGraph host;
    host.vertex_count = out.graph.copy_count();
    for (const auto& matching : out.graph.matchings) {
        for (auto [u, v] : matching) {
            host.edges.emplace_back(u, v);
        }
    }
    out.cover = forest_cover(host);
    out.cover_size = std::max(1, out.cover.size());

    for (const auto& forest : out.cover.forests) {
        for (const Tree& tree : forest_trees(host, forest)) {
            TreeMatchingDemand tmd = tree_matching_demand(tree);
            out.tree_stats.emplace_back(static_cast<int>(tree.vertices.size()),
                                        tmd.demand.size());
            for (const auto& [pair, amount] : tmd.demand.entries()) {
                int u = out.graph.owner[static_cast<std::size_t>(pair.first)];
                int v = out.graph.owner[static_cast<std::size_t>(pair.second)];
                out.unscaled.add(std::min(u, v), std::max(u, v), amount);
            }
        }
    }
    return out;
}

namespace {

std::string dist_str(const Dist& d) { return d.has_value() ? rat_str(*d) : "inf"; }

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

DispersalReport verify_dispersed_properties(const LengthCapGraph& g, const NodeWeighting& a,
                                            const std::vector<MovingCut>& cuts,
                                            const std::vector<Demand>& demands, const Rat& h,
                                            const Rat& s) {
    if (cuts.size() != demands.size()) {
        throw ArgumentError("cuts and demands must have equal length");
    }
    if (h < 1 || s < 2) {
        throw ArgumentError("dispersal verification requires h >= 1 and s >= 2");
    }
    a.validate_against(g);

    // Precondition: each demand is the witness its cut (h*s)-separates in the
    // graph after the previous cuts.
    LengthCapGraph current = g;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (!is_h_length(demands[i], current, h)) {
            throw ArgumentError("demand " + std::to_string(i + 1) +
                                " is not h-length in its evaluation graph");
        }
        if (!is_a_respecting(demands[i], a)) {
            throw ArgumentError("demand " + std::to_string(i + 1) + " is not A-respecting");
        }
        if (separated_amount(demands[i], current, cuts[i], h * s) != demands[i].size()) {
            throw ArgumentError("demand " + std::to_string(i + 1) +
                                " is not fully separated by its cut");
        }
        current = apply_cut(current, cuts[i], h * s);
    }

    DispersalReport report;
    if (cuts.empty()) {
        report.checks.push_back({"vacuous", true, "", "0", "0"});
        return report;
    }

    DispersedDemand dispersed = matching_dispersed_demand(g, a, demands);
    long long k = dispersed.cover_size;
    report.cover_size = k;
    long long total_input = 0;
    for (const Demand& d : demands) {
        total_input += d.size();
    }

    auto add_check = [&](PropertyCheck check) {
        report.all_pass = report.all_pass && check.pass;
        report.checks.push_back(std::move(check));
    };

    // The matchings realizing the witness demands must form a parallel-greedy
    // sequence in reverse demand order.
    {
        PropertyCheck check{"matching_graph_parallel_greedy", false, "", "", ""};
        Int s_floor_int = s.get_num() / s.get_den();
        long long s_floor = mpz_get_si(s_floor_int.get_mpz_t());
        try {
            auto verdict =
                verify_parallel_greedy(dispersed.graph.as_parallel_greedy(),
                                       static_cast<int>(s_floor));
            check.pass = verdict.ok;
            if (!verdict.ok) {
                check.witness = "matching " + std::to_string(verdict.violation->matching_index + 1) +
                                " edge " +
                                pair_str(verdict.violation->edge.first,
                                         verdict.violation->edge.second);
            }
        } catch (const StructureError& err) {
            check.witness = err.what();
        }
        check.lhs = std::to_string(dispersed.graph.copy_count());
        check.rhs = std::to_string(a.total());
        add_check(std::move(check));
    }

    // Support pairs within 2h in the original graph.
    {
        PropertyCheck check{"support_within_2h", true, "", "0/1", rat_str(2 * h)};
        for (const auto& [pair, amount] : dispersed.unscaled.entries()) {
            (void)amount;
            Dist d = g.distance(pair.first, pair.second);
            if (!dist_leq(d, 2 * h)) {
                check.pass = false;
                check.witness = pair_str(pair.first, pair.second);
                check.lhs = dist_str(d);
                break;
            }
            if (d.has_value() && parse_rat(check.lhs) < *d) {
                check.lhs = rat_str(*d);
            }
        }
        add_check(std::move(check));
    }

    // Cleared-denominator respecting bound: unscaled incidence <= 2k * A(v).
    {
        PropertyCheck check{"incidence_within_2k_weight", true, "", "0", "0"};
        auto incidence = dispersed.unscaled.incidence(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            long long bound = 2 * k * a[v];
            if (incidence[static_cast<std::size_t>(v)] > bound) {
                check.pass = false;
                check.witness = "vertex " + std::to_string(v);
                check.lhs = std::to_string(incidence[static_cast<std::size_t>(v)]);
                check.rhs = std::to_string(bound);
                break;
            }
        }
        add_check(std::move(check));
    }

    // Separation by the scaled union cut: distances under l + h*s*sum(C_i)
    // must strictly exceed h*(s-1).
    {
        MovingCut total;
        for (const MovingCut& cut : cuts) {
            total += cut;
        }
        LengthCapGraph moved = apply_cut(g, total, h * s);
        Rat threshold = h * (s - 1);
        PropertyCheck check{"separated_by_scaled_union", true, "", "", rat_str(threshold)};
        for (const auto& [pair, amount] : dispersed.unscaled.entries()) {
            (void)amount;
            Dist d = moved.distance(pair.first, pair.second);
            if (!dist_greater(d, threshold)) {
                check.pass = false;
                check.witness = pair_str(pair.first, pair.second);
                check.lhs = dist_str(d);
                break;
            }
        }
        add_check(std::move(check));
    }

    // Each tree's demand covers at least half its non-root vertices.
    {
        PropertyCheck check{"tree_demand_half_vertices", true, "", "", ""};
        for (const auto& [vertices, demand] : dispersed.tree_stats) {
            if (2 * demand < vertices - 1) {
                check.pass = false;
                check.witness = "tree with " + std::to_string(vertices) + " vertices";
                check.lhs = std::to_string(demand);
                check.rhs = rat_str(Rat(vertices - 1) / 2);
                break;
            }
        }
        add_check(std::move(check));
    }

    // Size chain: unscaled >= sum|D_i| / 2, i.e. scaled >= sum|D_i| / (4k).
    {
        PropertyCheck check{"size_unscaled_half_sum", 2 * dispersed.unscaled.size() >= total_input,
                            "", std::to_string(dispersed.unscaled.size()),
                            rat_str(rat_of(total_input) / 2)};
        add_check(std::move(check));
    }
    {
        PropertyCheck check{"size_scaled_quarter_sum", false, "",
                            rat_str(dispersed.scaled_size()),
                            rat_str(rat_of(total_input) / rat_of(4 * k))};
        check.pass = dispersed.scaled_size() >= rat_of(total_input) / rat_of(4 * k);
        add_check(std::move(check));
    }
    return report;
}

UnionSparsityReport union_sparsity_check(const LengthCapGraph& g, const NodeWeighting& a,
                                         const std::vector<MovingCut>& cuts, const Rat& h,
                                         const Rat& s, const Rat& calibration_constant) {
    if (h < 1 || s < 2) {
        throw ArgumentError("union check requires h >= 1 and s >= 2");
    }
    a.validate_against(g);
    UnionSparsityReport report;
    report.calibration_constant = calibration_constant;
    if (cuts.empty()) {
        report.vacuous = true;
        return report;
    }

    LengthCapGraph current = g;
    std::vector<Demand> witnesses;
    MovingCut total;
    for (const MovingCut& cut : cuts) {
        auto true_size = demand_size(current, cut, a, h, s);
        if (true_size.value == 0) {
            throw ArgumentError("cut sequence contains a cut with zero demand-size");
        }
        report.sum_demand_sizes += true_size.value;
        Rat cut_size = cut.size(current);
        report.sum_cut_sizes += cut_size;
        Rat step_sparsity = cut_size / rat_of(true_size.value);
        if (!report.max_step_sparsity.has_value() || *report.max_step_sparsity < step_sparsity) {
            report.max_step_sparsity = step_sparsity;
        }
        witnesses.push_back(demand_size_matching_safe(current, cut, a, h, s).witness);
        report.sum_witness_sizes += witnesses.back().size();
        total += cut;
        current = apply_cut(current, cut, h * s);
    }

    DispersedDemand dispersed = matching_dispersed_demand(g, a, witnesses);
    report.cover_size = dispersed.cover_size;
    report.dispersed_scaled_size = dispersed.scaled_size();

    Rat scale = Rat(s) / (s - 1);  // 1 + 1/(s-1)
    MovingCut union_cut = total.scaled(scale);
    report.union_size = union_cut.size(g);

    Rat h_prime = 2 * h;
    Rat threshold = h * (s - 1);  // h' * s' with s' = (s-1)/2
    auto union_ds = demand_size_at(g, union_cut, a, h_prime, threshold);
    report.union_demand_size = union_ds.value;
    if (union_ds.value > 0) {
        report.union_sparsity = report.union_size / rat_of(union_ds.value);
    }

    report.phi_prime =
        rat_of(8 * dispersed.cover_size) * report.sum_cut_sizes / rat_of(report.sum_demand_sizes);
    report.pass_sparsity =
        report.union_sparsity.has_value() && *report.union_sparsity <= report.phi_prime;

    // The dispersed demand certifies a demand-size of at least the witness
    // total over 4k, i.e. 2*sum|C_i| / phi' with phi' taken over the witness
    // sizes actually dispersed. (The full demand-sizes need not be realizable
    // as matchings, so they can exceed what any dispersal certifies.)
    report.certificate_bound = rat_of(report.sum_witness_sizes) / rat_of(4 * dispersed.cover_size);
    report.pass_certificate = report.dispersed_scaled_size >= report.certificate_bound;

    // Calibrated theorem form: sparsity <= c * s * |A|^(2/s) * max step
    // sparsity, compared via s-th powers (requires integral s so that
    // |A|^(2/s) clears to |A|^2).
    if (report.union_sparsity.has_value() && s.get_den() == 1) {
        unsigned exp = static_cast<unsigned>(mpz_get_ui(Int(s.get_num()).get_mpz_t()));
        report.calibrated_lhs = rat_pow(*report.union_sparsity, exp);
        report.calibrated_rhs = rat_pow(calibration_constant * s * *report.max_step_sparsity, exp) *
                                rat_of(a.total()) * rat_of(a.total());
        report.pass_calibrated = report.calibrated_lhs <= report.calibrated_rhs;
    }
    return report;
}

namespace {

nlohmann::ordered_json check_json(const PropertyCheck& check) {
    nlohmann::ordered_json out;
    out["property"] = check.property;
    out["pass"] = check.pass;
    out["witness"] = check.witness;
    out["lhs"] = check.lhs;
    out["rhs"] = check.rhs;
    return out;
}

}  // namespace

std::string dispersal_report_json(const DispersalReport& report) {
    nlohmann::ordered_json doc;
    doc["pass"] = report.all_pass;
    doc["cover_size"] = report.cover_size;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const PropertyCheck& check : report.checks) {
        doc["checks"].push_back(check_json(check));
    }
    return doc.dump();
}

std::string union_report_json(const UnionSparsityReport& report) {
    nlohmann::ordered_json doc;
    doc["pass"] = report.all_pass();
    if (report.vacuous) {
        doc["vacuous"] = true;
        return doc.dump();
    }
    doc["cover_size"] = report.cover_size;
    doc["checks"] = nlohmann::ordered_json::array();
    doc["checks"].push_back(check_json(
        {"union_sparsity_within_phi_prime", report.pass_sparsity, "",
         report.union_sparsity.has_value() ? rat_str(*report.union_sparsity) : "inf",
         rat_str(report.phi_prime)}));
    doc["checks"].push_back(check_json({"dispersed_demand_certificate", report.pass_certificate,
                                        "", rat_str(report.dispersed_scaled_size),
                                        rat_str(report.certificate_bound)}));
    doc["checks"].push_back(check_json({"calibrated_union_bound", report.pass_calibrated, "",
                                        rat_str(report.calibrated_lhs),
                                        rat_str(report.calibrated_rhs)}));
    doc["sum_cut_sizes"] = rat_str(report.sum_cut_sizes);
    doc["sum_demand_sizes"] = report.sum_demand_sizes;
    doc["sum_witness_sizes"] = report.sum_witness_sizes;
    doc["union_size"] = rat_str(report.union_size);
    doc["union_demand_size"] = report.union_demand_size;
    return doc.dump();
}

}  // namespace lced
