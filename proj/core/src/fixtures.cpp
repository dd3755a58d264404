#include "lced/fixtures.hpp"

#include <filesystem>
#include <fstream>

#include "lced/errors.hpp"

namespace lced {

namespace {

LengthCapGraph unit_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        edges.push_back(Edge{u, v, Rat(1), 1});
    }
    return LengthCapGraph(n, std::move(edges));
}

}  // namespace

std::vector<std::string> fixture_graph_names() {
    return {"single_edge", "path3", "triangle", "k4", "k5", "dumbbell"};
}

std::vector<std::string> fixture_sequence_names() { return {"pg_s12_k3", "pg_small"}; }

LengthCapGraph fixture_graph(const std::string& name) {
    if (name == "single_edge") {
        return unit_graph(2, {{0, 1}});
    }
    if (name == "path3") {
        return unit_graph(3, {{0, 1}, {1, 2}});
    }
    if (name == "triangle") {
        return unit_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    }
    if (name == "k4") {
        return unit_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "k5") {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < 5; ++u) {
            for (int v = u + 1; v < 5; ++v) {
                pairs.emplace_back(u, v);
            }
        }
        return unit_graph(5, pairs);
    }
    if (name == "dumbbell") {
        // Two unit triangles joined by a long path through vertex 6: the two
        // bridge edges have length 2, so only cross pairs depend on them.
        std::vector<Edge> edges = {{0, 1, Rat(1), 1}, {0, 2, Rat(1), 1}, {1, 2, Rat(1), 1},
                                   {3, 4, Rat(1), 1}, {3, 5, Rat(1), 1}, {4, 5, Rat(1), 1},
                                   {2, 6, Rat(2), 1}, {6, 3, Rat(2), 1}};
        return LengthCapGraph(7, std::move(edges));
    }
    throw ArgumentError("unknown fixture graph: " + name);
}

MatchingSequence fixture_sequence(const std::string& name) {
    if (name == "pg_s12_k3") {
        // Three matchings on eight vertices whose union is a single 8-cycle;
        // every pair matched in round i was in a different component of the
        // earlier rounds, so the far-endpoints condition holds for any s.
        MatchingSequence seq;
        seq.vertex_count = 8;
        seq.matchings = {
            {{0, 1}, {2, 3}, {4, 5}, {6, 7}},
            {{1, 2}, {5, 6}},
            {{0, 4}, {3, 7}},
        };
        return seq;
    }
    if (name == "pg_small") {
        MatchingSequence seq;
        seq.vertex_count = 6;
        seq.matchings = {
            {{0, 1}, {2, 3}, {4, 5}},
            {{0, 2}},
        };
        return seq;
    }
    throw ArgumentError("unknown fixture sequence: " + name);
}

void write_fixtures(const std::string& directory) {
    std::filesystem::create_directories(directory);
    std::ofstream index(directory + "/fixtures.txt");
    if (!index) {
        throw ParseError("cannot write fixture index in " + directory);
    }
    for (const std::string& name : fixture_graph_names()) {
        std::string path = directory + "/" + name + ".graph";
        write_graph_file(fixture_graph(name), path);
        index << name << ".graph\n";
    }
    for (const std::string& name : fixture_sequence_names()) {
        std::string path = directory + "/" + name + ".seq";
        write_sequence_file(fixture_sequence(name), path);
        index << name << ".seq\n";
    }
}

}  // namespace lced
