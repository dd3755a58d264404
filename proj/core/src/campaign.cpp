#include "lced/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "lced/calibration.hpp"
#include "lced/errors.hpp"

namespace lced {

namespace {

std::uint64_t tag_hash(const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

enum RowStatus { kPass = 0, kFail = 1, kSkip = 2 };

struct Row {
    std::string line;
    int status = kPass;
    std::string json;
};

std::vector<Row> compute_rows(long long count, int threads,
                              const std::function<Row(long long)>& make_row) {
    std::vector<Row> rows(static_cast<std::size_t>(count));
    int workers = std::max(1, threads);
    std::atomic<long long> next{0};
    auto work = [&]() {
        while (true) {
            long long i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                rows[static_cast<std::size_t>(i)] = make_row(i);
            } catch (const std::exception& err) {
                rows[static_cast<std::size_t>(i)] =
                    Row{std::to_string(i) + ",error: " + err.what(), kFail, {}};
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back(work);
        }
        for (auto& thread : pool) {
            thread.join();
        }
    }
    return rows;
}

CampaignResult assemble(const std::string& name, const std::string& header,
                        const std::vector<Row>& rows, const std::vector<std::string>& notes) {
    CampaignResult result;
    result.name = name;
    std::ostringstream out;
    out << header << '\n';
    for (const Row& row : rows) {
        out << row.line << '\n';
        switch (row.status) {
            case kPass:
                ++result.passed;
                break;
            case kFail:
                ++result.failed;
                break;
            default:
                ++result.skipped;
                break;
        }
    }
    for (const std::string& note : notes) {
        out << "# " << note << '\n';
    }
    result.csv = out.str();
    std::ostringstream json;
    bool any_json = false;
    json << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].json.empty()) {
            json << (any_json ? ",\n " : "\n ") << rows[i].json;
            any_json = true;
        }
    }
    json << "\n]\n";
    if (any_json) {
        result.json = json.str();
    }
    return result;
}

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

const char* pf(bool ok) { return ok ? "1" : "0"; }

int pick(Rng& rng, const std::vector<int>& options) {
    return options[static_cast<std::size_t>(rng.below(options.size()))];
}

// Corpus knobs: user-config overrides clamp the default ranges.
int pick_s(Rng& rng, const CampaignConfig& config, const std::vector<int>& defaults) {
    if (!config.s_values.empty()) {
        return pick(rng, config.s_values);
    }
    return pick(rng, defaults);
}

int draw_n(Rng& rng, const CampaignConfig& config, int lo, int hi) {
    if (config.max_n > 0) {
        hi = config.max_n;
        lo = std::min(lo, hi);
    }
    return static_cast<int>(rng.range(lo, std::max(lo, hi)));
}

int draw_rounds(Rng& rng, const CampaignConfig& config, int lo, int hi) {
    if (config.max_rounds > 0) {
        hi = config.max_rounds;
        lo = std::min(lo, hi);
    }
    return static_cast<int>(rng.range(lo, std::max(lo, hi)));
}

// ---------------------------------------------------------------------------
// dispersion

CampaignResult run_dispersion(const CampaignConfig& config) {
    long long count = config.instances > 0 ? config.instances : 1000;
    std::uint64_t master = config.seed ^ tag_hash("dispersion");
    std::atomic<long long> worst_pairs{0};
    auto rows = compute_rows(count, config.threads, [&](long long i) {
        Rng rng(derive_seed(master, static_cast<std::uint64_t>(i)));
        int s = pick_s(rng, config, {4, 6, 8, 10});
        int n = draw_n(rng, config, 20, 200);
        int rounds = draw_rounds(rng, config, 3, s + 4);
        MatchingSequence seq = generate_parallel_greedy(n, s, rounds, rng.next());
        bool valid = verify_parallel_greedy(seq, s).ok;
        DispersionCheck disp = check_dispersion(seq, s);
        bool pass = valid && disp.ok;
        long long m = seq.edge_count();
        long long seen = worst_pairs.load();
        while (disp.max_pair_count > seen &&
               !worst_pairs.compare_exchange_weak(seen, disp.max_pair_count)) {
        }
        std::ostringstream line;
        line << i << ',' << n << ',' << s << ',' << rounds << ',' << m << ','
             << disp.path_length << ',' << disp.max_pair_count << ',' << disp.total_paths << ','
             << pf(pass);
        return Row{line.str(), pass ? kPass : kFail, {}};
    });
    return assemble("dispersion", "id,n,s,rounds,m,path_length,max_pair_count,total_paths,pass",
                    rows,
                    {"max monotonic path count over any ordered pair: " +
                     std::to_string(worst_pairs.load())});
}

// ---------------------------------------------------------------------------
// cycles

CampaignResult run_cycles(const CampaignConfig& config) {
    long long count = config.instances > 0 ? config.instances : 200;
    std::uint64_t master = config.seed ^ tag_hash("cycles");
    auto rows = compute_rows(count, config.threads, [&](long long i) {
        Rng rng(derive_seed(master, static_cast<std::uint64_t>(i)));
        int s = pick_s(rng, config, {4, 6, 8, 10, 12});
        int n = draw_n(rng, config, 12, 60);
        int rounds = draw_rounds(rng, config, 3, 8);
        MatchingSequence seq = generate_parallel_greedy(n, s, rounds, rng.next());
        std::ostringstream line;
        line << i << ',' << n << ',' << s << ',' << rounds << ',' << seq.edge_count() << ',';
        try {
            CycleCheck check = check_cycle_property(seq, s, config.budgets.cycle_expansions);
            line << check.cycles_checked << ',' << (check.ok ? "pass" : "fail");
            return Row{line.str(), check.ok ? kPass : kFail, {}};
        } catch (const ResourceError&) {
            line << 0 << ",skipped";
            return Row{line.str(), kSkip, {}};
        }
    });
    return assemble("cycles", "id,n,s,rounds,m,cycles_checked,status", rows, {});
}

// ---------------------------------------------------------------------------
// hiker

CampaignResult run_hiker(const CampaignConfig& config) {
    long long count = config.instances > 0 ? config.instances : 300;
    std::uint64_t master = config.seed ^ tag_hash("hiker");
    auto rows = compute_rows(count, config.threads, [&](long long i) {
        Rng rng(derive_seed(master, static_cast<std::uint64_t>(i)));
        int s = pick_s(rng, config, {4, 6, 8, 10});
        int n = draw_n(rng, config, 10, 150);
        int rounds = draw_rounds(rng, config, 2, s + 6);
        MatchingSequence seq = generate_parallel_greedy(n, s, rounds, rng.next());
        HikerResult hikers = hiker_walk(seq);
        long long m = seq.edge_count();
        bool accounting = hikers.total_edges_walked == 2 * m;
        bool bound_applies = 4 * m >= static_cast<long long>(s) * n;
        bool long_walk = !bound_applies || 2 * hikers.longest_walk >= s;
        bool pass = accounting && long_walk;
        std::ostringstream line;
        line << i << ',' << n << ',' << s << ',' << rounds << ',' << m << ','
             << hikers.total_edges_walked << ',' << hikers.longest_walk << ','
             << pf(bound_applies) << ',' << pf(pass);
        return Row{line.str(), pass ? kPass : kFail, {}};
    });
    return assemble("hiker", "id,n,s,rounds,m,total_walked,longest_walk,bound_applies,pass", rows,
                    {});
}

// ---------------------------------------------------------------------------
// counting

CampaignResult run_counting(const CampaignConfig& config) {
    long long count = config.instances > 0 ? config.instances : 300;
    std::uint64_t master = config.seed ^ tag_hash("counting");
    std::atomic<long long> applicable{0};
    std::vector<double> implied(static_cast<std::size_t>(count), 0.0);
    auto rows = compute_rows(count, config.threads, [&](long long i) {
        Rng rng(derive_seed(master, static_cast<std::uint64_t>(i)));
        bool dense_mode = rng.below(2) == 0;
        std::vector<int> evens;
        for (int v : config.s_values) {
            if (v % 2 == 0) {
                evens.push_back(v);
            }
        }
        if (evens.empty()) {
            evens = {4, 6};  // the exponent s/2 must be integral
        }
        int s = dense_mode ? evens.front() : pick(rng, evens);
        int n = draw_n(rng, config, 16, 120);
        MatchingSequence seq;
        int rounds = 0;
        if (dense_mode) {
            int attempts = static_cast<int>(rng.range(8 * n, 20 * n));
            seq = generate_singleton_greedy(n, s, attempts, rng.next());
            rounds = seq.matching_count();
        } else {
            rounds = draw_rounds(rng, config, s, s + 8);
            seq = generate_parallel_greedy(n, s, rounds, rng.next());
        }
        long long m = seq.edge_count();
        bool applies = 2 * m >= static_cast<long long>(s) * n;
        long long paths = 0;
        bool pass = true;
        double implied_c = 0.0;
        if (applies) {
            applicable.fetch_add(1);
            auto counts = enumerate_monotonic_paths(seq, s / 2);
            for (const auto& [pair, c] : counts) {
                (void)pair;
                paths += c;
            }
            pass = counting_bound_holds(paths, n, m, s, counting_calibration());
            double d = 2.0 * static_cast<double>(m) / n;
            implied_c = d / (s * std::pow(static_cast<double>(paths) / n,
                                          2.0 / static_cast<double>(s)));
            implied[static_cast<std::size_t>(i)] = implied_c;
        }
        std::ostringstream line;
        line << i << ',' << n << ',' << s << ',' << rounds << ',' << m << ',' << pf(applies)
             << ',' << paths << ',' << fixed6(implied_c) << ',' << pf(pass);
        return Row{line.str(), pass ? kPass : kFail, {}};
    });
    double max_implied = 0.0;
    for (double c : implied) {
        max_implied = std::max(max_implied, c);
    }
    return assemble(
        "counting", "id,n,s,rounds,m,applies,paths,implied_c,pass", rows,
        {"calibrated constant c = " + rat_str(counting_calibration()),
         "applicable instances: " + std::to_string(applicable.load()) + " of " +
             std::to_string(count),
         "max implied constant over applicable instances: " + fixed6(max_implied)});
}

// ---------------------------------------------------------------------------
// arboricity

CampaignResult run_arboricity(const CampaignConfig& config) {
    long long per_phase = config.instances > 0 ? config.instances : 200;
    std::uint64_t oracle_master = config.seed ^ tag_hash("arboricity-oracle");
    std::uint64_t bound_master = config.seed ^ tag_hash("arboricity-bound");

    auto oracle_rows = compute_rows(per_phase, config.threads, [&](long long i) {
        Rng rng(derive_seed(oracle_master, static_cast<std::uint64_t>(i)));
        int n = draw_n(rng, config, 4, 12);
        int percent = static_cast<int>(rng.range(20, 90));
        SimpleGraph g;
        g.vertex_count = n;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (static_cast<int>(rng.below(100)) < percent) {
                    g.edges.emplace_back(u, v);
                }
            }
        }
        long long flow_alpha = arboricity_exact(g);
        long long brute_alpha = arboricity_bruteforce(g);
        bool pass = flow_alpha == brute_alpha;
        std::ostringstream line;
        line << "oracle," << i << ',' << n << ",0,0," << g.edges.size() << ',' << flow_alpha
             << ',' << brute_alpha << ',' << pf(pass);
        if (config.report_ratio) {
            line << ",0.000000";
        }
        return Row{line.str(), pass ? kPass : kFail, {}};
    });

    std::vector<double> ratios(static_cast<std::size_t>(per_phase), 0.0);
    auto bound_rows = compute_rows(per_phase, config.threads, [&](long long i) {
        Rng rng(derive_seed(bound_master, static_cast<std::uint64_t>(i)));
        int s = pick_s(rng, config, {4, 6, 8, 10});
        int n = draw_n(rng, config, 16, 128);
        MatchingSequence seq;
        int rounds = 0;
        if (rng.below(4) == 0) {
            int attempts = static_cast<int>(rng.range(6 * n, 16 * n));
            seq = generate_singleton_greedy(n, s, attempts, rng.next());
            rounds = seq.matching_count();
        } else {
            rounds = draw_rounds(rng, config, 3, s + 4);
            seq = generate_parallel_greedy(n, s, rounds, rng.next());
        }
        SimpleGraph g = union_graph(seq);
        ArboricityBoundCheck check = check_pg_arboricity_bound(seq, s, arboricity_calibration());
        bool avg_ok = check_average_degree_bound(g, s, arboricity_calibration());
        // Certify the exact value: the witness subset must attain it.
        bool witness_ok = check.m == 0;
        long long witness_alpha = 0;
        if (check.m > 0) {
            DensityWitness witness = arboricity_witness(g);
            std::vector<bool> member(static_cast<std::size_t>(g.vertex_count), false);
            for (int v : witness.subset) {
                member[static_cast<std::size_t>(v)] = true;
            }
            long long inside = 0;
            for (auto [u, v] : g.edges) {
                if (member[static_cast<std::size_t>(u)] && member[static_cast<std::size_t>(v)]) {
                    ++inside;
                }
            }
            long long k = static_cast<long long>(witness.subset.size());
            witness_alpha =
                k >= 2 ? (inside + k - 2) / (k - 1) : 0;
            witness_ok = witness.alpha == check.alpha && witness_alpha == check.alpha;
        }
        bool pass = check.ok && avg_ok && witness_ok;
        ratios[static_cast<std::size_t>(i)] = check.ratio;
        std::ostringstream line;
        line << "bound," << i << ',' << n << ',' << s << ',' << rounds << ',' << check.m << ','
             << check.alpha << ',' << witness_alpha << ',' << pf(pass);
        if (config.report_ratio) {
            line << ',' << fixed6(check.ratio);
        }
        return Row{line.str(), pass ? kPass : kFail, {}};
    });

    std::vector<Row> rows = oracle_rows;
    rows.insert(rows.end(), bound_rows.begin(), bound_rows.end());
    double max_ratio = 0.0;
    for (double r : ratios) {
        max_ratio = std::max(max_ratio, r);
    }
    std::string header = "kind,id,n,s,rounds,m,alpha,alpha_oracle,pass";
    if (config.report_ratio) {
        header += ",ratio";
    }
    return assemble("arboricity", header, rows,
                    {"calibrated constant c' = " + rat_str(arboricity_calibration()),
                     "max ratio alpha/(s*n^(2/s)) over corpus: " + fixed6(max_ratio)});
}

// ---------------------------------------------------------------------------
// dispersal / union corpora

CampaignResult run_dispersal(const CampaignConfig& config) {
    long long count = config.instances > 0 ? config.instances : 200;
    std::uint64_t master = config.seed ^ tag_hash("dispersal");
    auto rows = compute_rows(count, config.threads, [&](long long i) {
        SequenceInstance inst = generate_sequence_instance(derive_seed(master, static_cast<std::uint64_t>(i)));
        std::ostringstream line;
        line << i << ',' << inst.graph.vertex_count() << ',' << inst.graph.edge_count() << ','
             << inst.s << ',' << rat_str(inst.h) << ',' << rat_str(inst.phi) << ','
             << family_name(inst.family) << ',' << inst.cuts.size() << ',';
        if (inst.cuts.empty()) {
            line << "0,1";
            return Row{line.str(), kPass, {}};
        }
        std::vector<Demand> witnesses = sequence_witnesses(inst);
        DispersalReport report = verify_dispersed_properties(inst.graph, inst.weighting, inst.cuts,
                                                             witnesses, inst.h, Rat(inst.s));
        line << report.cover_size << ',' << pf(report.all_pass);
        for (const PropertyCheck& check : report.checks) {
            line << ',' << check.property << '=' << pf(check.pass);
        }
        return Row{line.str(), report.all_pass ? kPass : kFail, dispersal_report_json(report)};
    });
    return assemble("dispersal", "id,n,m,s,h,phi,family,cuts,k,pass,checks...", rows, {});
}

CampaignResult run_union(const CampaignConfig& config) {
    long long count = config.instances > 0 ? config.instances : 200;
    // Same corpus as the dispersal campaign.
    std::uint64_t master = config.seed ^ tag_hash("dispersal");
    std::vector<double> gaps(static_cast<std::size_t>(count), 0.0);
    std::vector<double> implied(static_cast<std::size_t>(count), 0.0);
    auto rows = compute_rows(count, config.threads, [&](long long i) {
        SequenceInstance inst = generate_sequence_instance(derive_seed(master, static_cast<std::uint64_t>(i)));
        std::ostringstream line;
        line << i << ',' << inst.graph.vertex_count() << ',' << inst.graph.edge_count() << ','
             << inst.s << ',' << rat_str(inst.h) << ',' << inst.cuts.size() << ',';
        UnionSparsityReport report = union_sparsity_check(inst.graph, inst.weighting, inst.cuts,
                                                          inst.h, Rat(inst.s),
                                                          union_calibration());
        if (report.vacuous) {
            line << "0,vacuous,0/1,1,1,1,1";
            return Row{line.str(), kPass, union_report_json(report)};
        }
        bool pass = report.all_pass();
        if (report.union_sparsity.has_value() && report.phi_prime > 0) {
            Rat gap = *report.union_sparsity / report.phi_prime;
            gaps[static_cast<std::size_t>(i)] = gap.get_d();
        }
        if (report.union_sparsity.has_value() && report.max_step_sparsity.has_value()) {
            double denom = inst.s *
                           std::pow(static_cast<double>(inst.weighting.total()), 2.0 / inst.s) *
                           report.max_step_sparsity->get_d();
            implied[static_cast<std::size_t>(i)] = report.union_sparsity->get_d() / denom;
        }
        line << report.cover_size << ','
             << (report.union_sparsity.has_value() ? rat_str(*report.union_sparsity)
                                                   : std::string("inf"))
             << ',' << rat_str(report.phi_prime) << ',' << pf(report.pass_sparsity) << ','
             << pf(report.pass_certificate) << ',' << pf(report.pass_calibrated) << ','
             << pf(pass);
        return Row{line.str(), pass ? kPass : kFail, union_report_json(report)};
    });
    double max_gap = 0.0;
    for (double g : gaps) {
        max_gap = std::max(max_gap, g);
    }
    double max_implied = 0.0;
    for (double c : implied) {
        max_implied = std::max(max_implied, c);
    }
    return assemble("union",
                    "id,n,m,s,h,cuts,k,union_sparsity,phi_prime,sparsity_ok,certificate_ok,"
                    "calibrated_ok,pass",
                    rows,
                    {"calibrated constant = " + rat_str(union_calibration()),
                     "max observed sparsity/phi' ratio: " + fixed6(max_gap),
                     "max implied calibrated constant: " + fixed6(max_implied)});
}

// ---------------------------------------------------------------------------
// decomposition

CampaignResult run_decomposition(const CampaignConfig& config) {
    long long count = config.instances > 0 ? config.instances : 100;
    std::uint64_t master = config.seed ^ tag_hash("decomposition");
    std::vector<double> slacks(static_cast<std::size_t>(count), 0.0);
    auto rows = compute_rows(count, config.threads, [&](long long i) {
        Rng rng(derive_seed(master, static_cast<std::uint64_t>(i)));
        LengthCapGraph g = random_length_graph(rng, 3, 7);
        NodeWeighting a = g.degree_weighting();
        int s = rng.below(2) == 0 ? 3 : 5;
        Rat diameter = 0;
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (const Dist& d : g.distances_from(u)) {
                if (d.has_value() && *d > diameter) {
                    diameter = *d;
                }
            }
        }
        Rat h = std::max(Rat(1), diameter);
        Rat phi = rng.below(2) == 0 ? Rat(1) : Rat(2);
        FinderSpec spec{FinderFamily::Exhaustive, 3, config.budgets.exhaustive_candidates};
        std::ostringstream line;
        line << i << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << s << ','
             << rat_str(h) << ',' << rat_str(phi) << ',';
        try {
            DecompositionResult result = build_decomposition(
                g, a, h, Rat(s), phi, spec, config.budgets.decomposition_iterations);
            bool seq_ok = verify_cut_sequence(g, a, result.cuts, h, Rat(s), phi).ok;
            UnionSparsityReport union_report =
                union_sparsity_check(g, a, result.cuts, h, Rat(s), union_calibration());
            bool union_ok = union_report.all_pass();
            bool size_ok = true;
            if (!result.cuts.empty()) {
                // |C| <= phi' * |A| with phi' the certified union sparsity:
                // equivalent to demand-size <= |A|, asserted exactly.
                size_ok = union_report.union_demand_size <= a.total();
            }
            unsigned exp = static_cast<unsigned>(s);
            bool slack_ok = rat_pow(result.slack, exp) <=
                            rat_pow(slack_calibration() * Rat(s), exp) * rat_of(a.total()) *
                                rat_of(a.total());
            slacks[static_cast<std::size_t>(i)] =
                result.slack.get_d() /
                (s * std::pow(static_cast<double>(a.total()), 2.0 / s));
            bool pass = seq_ok && union_ok && size_ok && slack_ok;
            line << result.cuts.size() << ',' << rat_str(result.slack) << ',' << pf(seq_ok) << ','
                 << pf(union_ok) << ',' << pf(size_ok) << ',' << pf(slack_ok) << ','
                 << (pass ? "pass" : "fail");
            return Row{line.str(), pass ? kPass : kFail, {}};
        } catch (const ResourceError&) {
            line << "0,0/1,0,0,0,0,skipped";
            return Row{line.str(), kSkip, {}};
        }
    });
    double max_slack = 0.0;
    for (double s : slacks) {
        max_slack = std::max(max_slack, s);
    }
    return assemble("decomposition",
                    "id,n,m,s,h,phi,cuts,slack,sequence_ok,union_ok,size_ok,slack_ok,status",
                    rows,
                    {"calibrated constant c'' = " + rat_str(slack_calibration()),
                     "max slack/(s*|A|^(2/s)) over corpus: " + fixed6(max_slack)});
}

}  // namespace

std::vector<std::string> campaign_names() {
    return {"dispersion", "cycles",    "hiker", "counting",
            "arboricity", "dispersal", "union", "decomposition"};
}

CampaignResult run_campaign(const std::string& name, const CampaignConfig& config) {
    if (name == "dispersion") {
        return run_dispersion(config);
    }
    if (name == "cycles") {
        return run_cycles(config);
    }
    if (name == "hiker") {
        return run_hiker(config);
    }
    if (name == "counting") {
        return run_counting(config);
    }
    if (name == "arboricity") {
        return run_arboricity(config);
    }
    if (name == "dispersal") {
        return run_dispersal(config);
    }
    if (name == "union") {
        return run_union(config);
    }
    if (name == "decomposition") {
        return run_decomposition(config);
    }
    throw ArgumentError("unknown campaign: " + name);
}

std::vector<CampaignResult> run_campaigns(const CampaignConfig& config) {
    std::vector<CampaignResult> results;
    if (config.lemma == "all") {
        for (const std::string& name : campaign_names()) {
            results.push_back(run_campaign(name, config));
        }
    } else {
        results.push_back(run_campaign(config.lemma, config));
    }
    return results;
}

// Multi-seed calibration maxima (seeds 1,2,3,7,13,42): counting 0.41,
// arboricity 0.14, union 0.21, slack 0.10.
Rat counting_calibration() { return Rat(1); }
Rat arboricity_calibration() { return Rat(1, 2); }
Rat union_calibration() { return Rat(1); }
Rat slack_calibration() { return Rat(1, 2); }

long long arboricity_bruteforce(const SimpleGraph& g) {
    if (g.vertex_count > 20) {
        throw ArgumentError("brute-force arboricity limited to n <= 20");
    }
    if (g.edges.empty()) {
        return 0;
    }
    int n = g.vertex_count;
    long long best = 1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int k = __builtin_popcount(mask);
        if (k < 2) {
            continue;
        }
        long long inside = 0;
        for (auto [u, v] : g.edges) {
            if ((mask >> u & 1u) && (mask >> v & 1u)) {
                ++inside;
            }
        }
        if (inside > 0) {
            best = std::max(best, (inside + k - 2) / (k - 1));
        }
    }
    return best;
}

bool counting_bound_holds(long long paths, int n, long long m, int s, const Rat& c) {
    if (s % 2 != 0) {
        throw ArgumentError("counting bound requires even s");
    }
    unsigned exp = static_cast<unsigned>(s / 2);
    Int lhs_base = Int(n) * c.get_num() * s;
    Int lhs;
    mpz_pow_ui(lhs.get_mpz_t(), lhs_base.get_mpz_t(), exp);
    lhs *= static_cast<long>(paths);
    Int rhs_base = Int(static_cast<long>(2 * m)) * c.get_den();
    Int rhs;
    mpz_pow_ui(rhs.get_mpz_t(), rhs_base.get_mpz_t(), exp);
    rhs *= static_cast<long>(n);
    return lhs >= rhs;
}

LengthCapGraph random_length_graph(Rng& rng, int min_n, int max_n) {
    int n = static_cast<int>(rng.range(min_n, max_n));
    const Rat palette[] = {Rat(1), Rat(1, 2), Rat(3, 2), Rat(2), Rat(3)};
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
        edges.push_back(Edge{parent, v, palette[rng.below(5)], rng.range(1, 2)});
    }
    long long extra = rng.range(0, n);
    for (long long i = 0; i < extra; ++i) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) {
            continue;
        }
        edges.push_back(Edge{std::min(u, v), std::max(u, v), palette[rng.below(5)],
                             rng.range(1, 2)});
    }
    return LengthCapGraph(n, std::move(edges));
}

SequenceInstance generate_sequence_instance(std::uint64_t seed) {
    Rng rng(seed);
    LengthCapGraph g = random_length_graph(rng, 3, 7);
    NodeWeighting a = g.degree_weighting();
    int s = rng.below(2) == 0 ? 3 : 5;
    Rat diameter = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (const Dist& d : g.distances_from(u)) {
            if (d.has_value() && *d > diameter) {
                diameter = *d;
            }
        }
    }
    Rat h = std::max(Rat(1), diameter);
    if (rng.below(3) == 0 && diameter >= 2) {
        Rat reduced = diameter * Rat(2, 3);
        h = std::max(Rat(1), reduced);
    }
    FinderFamily family = rng.below(2) == 0 ? FinderFamily::Singletons : FinderFamily::Balls;
    FinderSpec spec{family, 3, 200'000};

    std::vector<MovingCut> cuts;
    Rat phi = 1;
    for (const Rat& candidate : {Rat(1), Rat(2), Rat(4), Rat(8)}) {
        phi = candidate;
        cuts.clear();
        LengthCapGraph current = g;
        while (static_cast<int>(cuts.size()) < 4) {
            auto found = find_sparse_cut(current, a, h, Rat(s), phi, spec);
            if (!found.has_value()) {
                break;
            }
            current = apply_cut(current, *found, h * s);
            cuts.push_back(std::move(*found));
        }
        if (!cuts.empty()) {
            break;
        }
    }
    return SequenceInstance{std::move(g), std::move(a), std::move(h), s, std::move(phi), family,
                            std::move(cuts)};
}

std::vector<Demand> sequence_witnesses(const SequenceInstance& instance) {
    std::vector<Demand> witnesses;
    LengthCapGraph current = instance.graph;
    for (const MovingCut& cut : instance.cuts) {
        witnesses.push_back(demand_size_matching_safe(current, cut, instance.weighting,
                                                      instance.h, Rat(instance.s))
                                .witness);
        current = apply_cut(current, cut, instance.h * instance.s);
    }
    return witnesses;
}

}  // namespace lced
