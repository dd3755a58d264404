// Acceptance suite: runs every campaign-backed criterion at its stated scale
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "lced/campaign.hpp"
#include "lced/moving_cut.hpp"
#include "oracles.hpp"

#ifndef LCED_CLI_PATH
#define LCED_CLI_PATH "lced"
#endif

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double value) {
    std::ostringstream out;
    out.precision(1);
    out << std::fixed << value << " s";
    return out.str();
}

lced::CampaignResult timed_campaign(const std::string& name, const lced::CampaignConfig& base,
                                    int instances, double* elapsed) {
    lced::CampaignConfig config = base;
    config.instances = instances;
    auto start = Clock::now();
    lced::CampaignResult result = lced::run_campaign(name, config);
    *elapsed = seconds_since(start);
    return result;
}

std::string counts(const lced::CampaignResult& r) {
    return std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed, " +
           std::to_string(r.skipped) + " skipped";
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    lced::CampaignConfig config;
    config.seed = 7;
    unsigned hardware = std::thread::hardware_concurrency();
    config.threads = static_cast<int>(hardware == 0 ? 2 : std::min(hardware, 8u));

    // 1. Dispersion: 1000 instances, zero ordered pairs with two monotonic
    // ceil(s/2)-paths, under two minutes.
    {
        double elapsed = 0;
        auto r = timed_campaign("dispersion", config, 1000, &elapsed);
        bool pass = r.failed == 0 && r.skipped == 0 && r.passed == 1000 && elapsed < 120.0;
        results.push_back({1, "dispersion", pass, counts(r) + ", " + fmt_seconds(elapsed)});
    }

    // 2. Cycle property: 200 instances within the cycle budget, all pass.
    {
        double elapsed = 0;
        auto r = timed_campaign("cycles", config, 200, &elapsed);
        bool pass = r.failed == 0 && r.skipped == 0 && r.passed == 200;
        results.push_back({2, "cycle property", pass, counts(r) + ", " + fmt_seconds(elapsed)});
    }

    // 3. Hiker accounting: walk total is exactly 2m and dense instances have
    // a walk of >= s/2 edges.
    {
        double elapsed = 0;
        auto r = timed_campaign("hiker", config, 300, &elapsed);
        bool pass = r.failed == 0 && r.skipped == 0;
        results.push_back({3, "hiker accounting", pass, counts(r) + ", " + fmt_seconds(elapsed)});
    }

    // 4. Full counting statement with the calibrated constant.
    {
        double elapsed = 0;
        auto r = timed_campaign("counting", config, 300, &elapsed);
        bool pass = r.failed == 0 && r.skipped == 0;
        results.push_back({4, "full counting (c = " + lced::rat_str(lced::counting_calibration()) +
                                  ")",
                           pass, counts(r) + ", " + fmt_seconds(elapsed)});
    }

    // 5 & 6. Arboricity: flow value equals the subset oracle on 200 random
    // graphs (under a minute), and every parallel-greedy corpus instance
    // meets the calibrated alpha <= c'*s*n^(2/s) bound.
    {
        double elapsed = 0;
        auto start = Clock::now();
        lced::CampaignConfig arbo = config;
        arbo.instances = 200;
        lced::CampaignResult r = lced::run_campaign("arboricity", arbo);
        elapsed = seconds_since(start);
        long long oracle_failed = 0;
        long long bound_failed = 0;
        std::istringstream rows(r.csv);
        std::string line;
        auto passed = [](const std::string& row) {
            return row.size() >= 2 && row.compare(row.size() - 2, 2, ",1") == 0;
        };
        while (std::getline(rows, line)) {
            if (line.rfind("oracle,", 0) == 0 && !passed(line)) {
                ++oracle_failed;
            }
            if (line.rfind("bound,", 0) == 0 && !passed(line)) {
                ++bound_failed;
            }
        }
        bool oracle_pass = oracle_failed == 0 && elapsed < 60.0;
        bool bound_pass = bound_failed == 0 && r.failed == 0;
        results.push_back({5, "arboricity oracle equivalence", oracle_pass,
                           "200 oracle instances, " + std::to_string(oracle_failed) +
                               " mismatches, " + fmt_seconds(elapsed) + " for both phases"});
        results.push_back({6, "arboricity bound (c' = " +
                                  lced::rat_str(lced::arboricity_calibration()) + ")",
                           bound_pass,
                           "200 corpus instances, " + std::to_string(bound_failed) + " failures"});
    }

    // 7. Demand-size flow equals exhaustive enumeration on 200 instances
    // with n <= 7 and total weight <= 10.
    {
        auto start = Clock::now();
        long long mismatches = 0;
        std::uint64_t master = config.seed ^ 0x64656d616e647aULL;
        for (int i = 0; i < 200; ++i) {
            lced::Rng rng(lced::derive_seed(master, static_cast<std::uint64_t>(i)));
            lced::LengthCapGraph g = lced::random_length_graph(rng, 3, 7);
            std::vector<long long> weights(static_cast<std::size_t>(g.vertex_count()), 0);
            long long budget = 10;
            for (int v = 0; v < g.vertex_count() && budget > 0; ++v) {
                long long w = std::min({g.capacity_weighted_degree(v), static_cast<long long>(rng.range(0, 2)), budget});
                weights[static_cast<std::size_t>(v)] = w;
                budget -= w;
            }
            lced::NodeWeighting a(std::move(weights));
            lced::MovingCut cut;
            for (int id = 0; id < g.edge_count(); ++id) {
                if (rng.below(100) < 60) {
                    cut.set(id, lced::rat_frac(rng.range(1, 4), rng.range(1, 3)));
                }
            }
            if (cut.is_zero()) {
                cut.set(0, lced::Rat(1));
            }
            lced::Rat h(rng.range(1, 3));
            lced::Rat s(rng.range(2, 3));
            auto ds = lced::demand_size(g, cut, a, h, s);
            long long oracle = lced::testing::demand_size_bruteforce(g, cut, a, h, s);
            if (ds.value != oracle) {
                ++mismatches;
            }
        }
        bool pass = mismatches == 0;
        results.push_back({7, "demand-size oracle equivalence", pass,
                           "200 instances, " + std::to_string(mismatches) + " mismatches, " +
                               fmt_seconds(seconds_since(start))});
    }

    // 8. Appendix constructions: matching graph is parallel-greedy, tree
    // demands meet the half bound, dispersed demand has all properties and
    // the size chain, on 200 generated sparse-cut sequences.
    {
        double elapsed = 0;
        auto r = timed_campaign("dispersal", config, 200, &elapsed);
        bool pass = r.failed == 0 && r.skipped == 0;
        results.push_back({8, "dispersal suite", pass, counts(r) + ", " + fmt_seconds(elapsed)});
    }

    // 9. Union of cuts: scaled union sparsity at (2h, (s-1)/2) is at most
    // 8k * sum|C_i| / sum demand-sizes on the same corpus.
    {
        double elapsed = 0;
        auto r = timed_campaign("union", config, 200, &elapsed);
        bool pass = r.failed == 0 && r.skipped == 0;
        results.push_back({9, "union sparsity", pass, counts(r) + ", " + fmt_seconds(elapsed)});
    }

    // 10. Decompositions with the exhaustive family terminate, verify, and
    // meet the slack bound.
    {
        double elapsed = 0;
        auto r = timed_campaign("decomposition", config, 100, &elapsed);
        bool pass = r.failed == 0 && r.skipped == 0;
        results.push_back({10, "decomposition slack (c'' = " +
                                   lced::rat_str(lced::slack_calibration()) + ")",
                           pass, counts(r) + ", " + fmt_seconds(elapsed)});
    }

    // 11. Determinism: `check all --seed 7` twice (different thread counts)
    // produces byte-identical reports.
    {
        auto start = Clock::now();
        fs::path dir_a = fs::temp_directory_path() / "lced_acceptance_a";
        fs::path dir_b = fs::temp_directory_path() / "lced_acceptance_b";
        fs::remove_all(dir_a);
        fs::remove_all(dir_b);
        std::string base = std::string(LCED_CLI_PATH) + " check all --seed 7 ";
        int code_a = std::system(
            (base + "--threads 4 --out " + dir_a.string() + " >/dev/null 2>&1").c_str());
        int code_b = std::system(
            (base + "--threads 2 --out " + dir_b.string() + " >/dev/null 2>&1").c_str());
        bool pass = WEXITSTATUS(code_a) == 0 && WEXITSTATUS(code_b) == 0;
        int compared = 0;
        if (pass) {
            for (const auto& entry : fs::directory_iterator(dir_a)) {
                ++compared;
                if (slurp(entry.path()) != slurp(dir_b / entry.path().filename())) {
                    pass = false;
                }
            }
            pass = pass && compared == 10;
        }
        results.push_back({11, "determinism of check all", pass,
                           std::to_string(compared) + " reports compared, exit codes " +
                               std::to_string(WEXITSTATUS(code_a)) + "/" +
                               std::to_string(WEXITSTATUS(code_b)) + ", " +
                               fmt_seconds(seconds_since(start))});
    }

    bool all = true;
    for (const Criterion& c : results) {
        all = all && c.pass;
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << " — " << c.detail << "\n";
    }
    std::cout << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return all ? 0 : 1;
}
