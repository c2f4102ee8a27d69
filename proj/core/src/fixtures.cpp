#include "qgi/fixtures.hpp"

#include <array>

namespace qgi::fixtures {

namespace {

Graph from(int n, std::initializer_list<Edge> edges) {
  const std::vector<Edge> list(edges);
  return Graph::from_edges(n, list);
}

}  // namespace

Graph c4() { return from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Graph m2() { return from(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph m3() { return from(4, {{0, 1}, {1, 2}, {2, 3}}); }

Graph petersen() {
  return from(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                   {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

Graph prism5() {
  return from(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                   {3, 8}, {4, 9}, {5, 6}, {5, 9}, {6, 7}, {7, 8}, {8, 9}});
}

Graph g1() { return from(7, {{0, 1}, {0, 5}, {0, 6}, {1, 2}, {1, 6}, {2, 3}, {3, 4}, {4, 5}}); }

Graph g2() { return from(7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {4, 5}, {4, 6}, {5, 6}}); }

std::optional<Graph> by_name(std::string_view name) {
  if (name == "c4" || name == "m1") return c4();
  if (name == "m2") return m2();
  if (name == "m3") return m3();
  if (name == "petersen") return petersen();
  if (name == "prism5") return prism5();
  if (name == "g1") return g1();
  if (name == "g2") return g2();
  return std::nullopt;
}

std::vector<std::string> names() { return {"c4", "m2", "m3", "petersen", "prism5", "g1", "g2"}; }

}  // namespace qgi::fixtures
