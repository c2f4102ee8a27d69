#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgi/graph.hpp"

namespace qgi::fixtures {

/// 4-cycle, edges {0-1, 1-2, 2-3, 0-3}.
Graph c4();
/// 4-cycle labeled 0-2, 0-3, 1-2, 1-3.
Graph m2();
/// Path 0-1-2-3.
Graph m3();
/// Petersen graph: inner pentagon 0..4, outer vertices 5..9.
Graph petersen();
/// Pentagonal prism, labeled like petersen().
Graph prism5();
/// Two non-isomorphic 7-vertex graphs with the same edge-count histogram.
Graph g1();
Graph g2();

/// Lookup by CLI name: c4 (alias m1), m2, m3, petersen, prism5, g1, g2.
std::optional<Graph> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace qgi::fixtures
