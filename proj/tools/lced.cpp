// Command-line harness: instance generation, lemma campaigns, decomposition
// runs, fixture export.
//
// Exit codes: 0 all-pass, 1 usage, 2 I/O or parse failure, 3 budget/partial,
// 4 property failure.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lced/campaign.hpp"
#include "lced/decomposition.hpp"
#include "lced/errors.hpp"
#include "lced/fixtures.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitBudget = 3;
constexpr int kExitProperty = 4;

struct GenerateOptions {
    int n = 50;
    int s = 8;
    int rounds = 20;
    int instances = 1;
    std::uint64_t seed = 7;
    std::string out = "generated";
    std::string kind = "pg";
};

int cmd_generate(const GenerateOptions& opt) {
    if (opt.s < 2 || opt.n < 2 || opt.rounds < 1 || opt.instances < 1) {
        std::cerr << "generate: requires n >= 2, s >= 2, rounds >= 1, instances >= 1\n";
        return kExitUsage;
    }
    std::filesystem::create_directories(opt.out);
    std::ofstream manifest(opt.out + "/manifest.txt");
    if (!manifest) {
        std::cerr << "generate: cannot write manifest in " << opt.out << "\n";
        return kExitIo;
    }
    manifest << "kind " << opt.kind << "\nmaster_seed " << opt.seed << "\n";
    for (int i = 0; i < opt.instances; ++i) {
        std::uint64_t seed = lced::derive_seed(opt.seed, static_cast<std::uint64_t>(i));
        if (opt.kind == "pg") {
            lced::MatchingSequence seq =
                lced::generate_parallel_greedy(opt.n, opt.s, opt.rounds, seed);
            std::string path = opt.out + "/pg_" + std::to_string(i) + ".seq";
            lced::write_sequence_file(seq, path);
            manifest << "instance " << i << " seed " << seed << " file pg_" << i << ".seq\n";
        } else if (opt.kind == "graph") {
            lced::Rng rng(seed);
            lced::LengthCapGraph g = lced::random_length_graph(rng, std::max(2, opt.n / 2), opt.n);
            std::string path = opt.out + "/graph_" + std::to_string(i) + ".graph";
            lced::write_graph_file(g, path);
            manifest << "instance " << i << " seed " << seed << " file graph_" << i << ".graph\n";
        } else {
            std::cerr << "generate: unknown kind '" << opt.kind << "' (pg|graph)\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

struct CheckOptions {
    std::string lemma = "all";
    lced::CampaignConfig config;
    std::string out = "reports";
};

int cmd_check(const CheckOptions& opt) {
    lced::CampaignConfig config = opt.config;
    config.lemma = opt.lemma;
    std::filesystem::create_directories(opt.out);
    auto results = lced::run_campaigns(config);
    bool any_failed = false;
    bool any_skipped = false;
    for (const auto& result : results) {
        std::ofstream out(opt.out + "/" + result.name + ".csv", std::ios::binary);
        if (!out) {
            std::cerr << "check: cannot write report for " << result.name << "\n";
            return kExitIo;
        }
        out << result.csv;
        if (!result.json.empty()) {
            std::ofstream json_out(opt.out + "/" + result.name + ".json", std::ios::binary);
            if (!json_out) {
                std::cerr << "check: cannot write json report for " << result.name << "\n";
                return kExitIo;
            }
            json_out << result.json;
        }
        std::cout << result.name << ": passed " << result.passed << ", failed " << result.failed
                  << ", skipped " << result.skipped << "\n";
        any_failed = any_failed || result.failed > 0;
        any_skipped = any_skipped || result.skipped > 0;
    }
    if (any_failed) {
        return kExitProperty;
    }
    return any_skipped ? kExitBudget : kExitOk;
}

struct DecomposeOptions {
    std::string graph_path;
    std::string weighting = "deg";
    std::string h = "1";
    std::string s = "2";
    std::string phi = "1";
    std::string family = "balls";
    int max_cut_edges = 3;
    long long exhaustive_budget = 200'000;
    int iteration_cap = 64;
    std::string out;
    std::string cuts_out;
};

ordered_json cut_json(const lced::MovingCut& cut) {
    ordered_json values = ordered_json::object();
    for (const auto& [edge_id, value] : cut.values()) {
        values[std::to_string(edge_id)] = lced::rat_str(value);
    }
    return values;
}

int cmd_decompose(const DecomposeOptions& opt) {
    lced::LengthCapGraph g = lced::read_graph_file(opt.graph_path);
    lced::NodeWeighting a = g.degree_weighting();
    if (opt.weighting != "deg") {
        std::ifstream in(opt.weighting);
        if (!in) {
            throw lced::ParseError("cannot open weighting file: " + opt.weighting);
        }
        std::vector<long long> weights;
        long long w = 0;
        while (in >> w) {
            weights.push_back(w);
        }
        try {
            a = lced::NodeWeighting(std::move(weights));
            a.validate_against(g);
        } catch (const lced::ArgumentError& err) {
            throw lced::ParseError("weighting file: " + std::string(err.what()));
        }
    }
    lced::Rat h = lced::parse_rat(opt.h);
    lced::Rat s = lced::parse_rat(opt.s);
    lced::Rat phi = lced::parse_rat(opt.phi);
    lced::FinderSpec spec{lced::parse_family(opt.family), opt.max_cut_edges,
                          opt.exhaustive_budget};
    lced::DecompositionResult result =
        lced::build_decomposition(g, a, h, s, phi, spec, opt.iteration_cap);

    ordered_json doc;
    doc["parameters"] = {{"h", lced::rat_str(h)},
                         {"s", lced::rat_str(s)},
                         {"phi", lced::rat_str(phi)},
                         {"family", lced::family_name(spec.family)},
                         {"weighting_total", a.total()}};
    doc["iterations"] = result.steps.size();
    doc["cuts"] = ordered_json::array();
    for (const auto& step : result.steps) {
        ordered_json entry;
        entry["edges"] = cut_json(step.cut);
        entry["size"] = lced::rat_str(step.cut_size);
        entry["demand_size"] = step.demand_size;
        entry["sparsity"] = lced::rat_str(step.sparsity);
        doc["cuts"].push_back(entry);
    }
    doc["union_cut"] = cut_json(result.union_cut);
    doc["total_size"] = lced::rat_str(result.total_size);
    doc["cut_slack"] = lced::rat_str(result.slack);

    if (!opt.cuts_out.empty()) {
        lced::write_cut_file(result.union_cut, opt.cuts_out);
    }
    std::string text = doc.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) {
            throw lced::ParseError("cannot write result file: " + opt.out);
        }
        out << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"length-constrained cut and expander-decomposition workbench"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* generate = app.add_subcommand("generate", "write random instances");
    generate->add_option("--n", gen.n, "vertex count");
    generate->add_option("--s", gen.s, "length parameter");
    generate->add_option("--rounds", gen.rounds, "matching rounds");
    generate->add_option("--instances", gen.instances, "number of instances");
    generate->add_option("--seed", gen.seed, "master seed");
    generate->add_option("--out", gen.out, "output directory");
    generate->add_option("--kind", gen.kind, "pg | graph");

    CheckOptions chk;
    CLI::App* check = app.add_subcommand("check", "run lemma campaigns");
    check
        ->add_option("lemma", chk.lemma,
                     "dispersion|cycles|hiker|counting|arboricity|dispersal|union|decomposition|all")
        ->check(CLI::IsMember({"dispersion", "cycles", "hiker", "counting", "arboricity",
                               "dispersal", "union", "decomposition", "all"}));
    check->add_option("--instances", chk.config.instances, "instances per campaign");
    check->add_option("--n", chk.config.max_n, "cap generated vertex counts");
    check->add_option("--s", chk.config.s_values, "restrict length parameters (repeatable)");
    check->add_option("--rounds", chk.config.max_rounds, "cap matching rounds");
    check->add_option("--seed", chk.config.seed, "master seed");
    check->add_option("--threads", chk.config.threads, "worker threads");
    check->add_flag("--report-ratio", chk.config.report_ratio, "extra ratio column");
    check->add_option("--out", chk.out, "report directory");
    check->add_option("--budget-cycles", chk.config.budgets.cycle_expansions, "cycle budget")
        ->envname("LCED_BUDGET_CYCLES");
    check
        ->add_option("--budget-exhaustive", chk.config.budgets.exhaustive_candidates,
                     "exhaustive finder budget")
        ->envname("LCED_BUDGET_EXHAUSTIVE");
    check
        ->add_option("--budget-iterations", chk.config.budgets.decomposition_iterations,
                     "decomposition iteration cap")
        ->envname("LCED_BUDGET_ITERATIONS");

    DecomposeOptions dec;
    CLI::App* decompose = app.add_subcommand("decompose", "build a decomposition for a graph");
    decompose->set_help_flag("--help", "print help");
    decompose->add_option("graph", dec.graph_path, "graph file")->required();
    decompose->add_option("--weighting", dec.weighting, "weighting file or 'deg'");
    decompose->add_option("--h", dec.h, "length constraint (rational)");
    decompose->add_option("--s", dec.s, "length slack (rational)");
    decompose->add_option("--phi", dec.phi, "sparsity bound (rational)");
    decompose->add_option("--family", dec.family, "exhaustive | balls | singletons");
    decompose->add_option("--max-cut-edges", dec.max_cut_edges, "exhaustive subset bound");
    decompose
        ->add_option("--budget-exhaustive", dec.exhaustive_budget, "exhaustive candidate budget")
        ->envname("LCED_BUDGET_EXHAUSTIVE");
    decompose->add_option("--iteration-cap", dec.iteration_cap, "iteration cap")
        ->envname("LCED_BUDGET_ITERATIONS");
    decompose->add_option("--out", dec.out, "result file (default stdout)");
    decompose->add_option("--cuts-out", dec.cuts_out, "write the union cut in the cut file format");

    std::string fixtures_out = "fixtures";
    CLI::App* fixtures = app.add_subcommand("fixtures", "write bundled tiny instances");
    fixtures->add_option("--out", fixtures_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) {
            return cmd_generate(gen);
        }
        if (*check) {
            return cmd_check(chk);
        }
        if (*decompose) {
            return cmd_decompose(dec);
        }
        if (*fixtures) {
            lced::write_fixtures(fixtures_out);
            return kExitOk;
        }
    } catch (const lced::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIo;
    } catch (const lced::ResourceError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBudget;
    } catch (const lced::ArgumentError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitProperty;
    }
    return kExitUsage;
}
