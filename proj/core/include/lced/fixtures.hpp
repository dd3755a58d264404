#pragma once

#include <string>
#include <vector>

#include "lced/graph.hpp"
#include "lced/matching_sequence.hpp"

namespace lced {

// Bundled tiny instances used by tests, the CLI `fixtures` subcommand and the
// quick self-check paths.

std::vector<std::string> fixture_graph_names();
std::vector<std::string> fixture_sequence_names();

LengthCapGraph fixture_graph(const std::string& name);
MatchingSequence fixture_sequence(const std::string& name);

/// Writes every fixture as <name>.graph / <name>.seq plus an index file.
void write_fixtures(const std::string& directory);

}  // namespace lced
