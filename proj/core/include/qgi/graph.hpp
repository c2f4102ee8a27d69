#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgi {

/// Largest vertex count accepted anywhere in the library. The classical
/// subset sweep visits 2^n masks, so 24 is the practical ceiling.
inline constexpr int kMaxVertices = 24;

using Edge = std::pair<int, int>;

/// A set of vertices stored as a bit mask; vertex i is bit i.
struct VertexSubset {
  std::uint32_t mask = 0;

  bool contains(int v) const noexcept { return (mask >> v) & 1U; }
  int size() const noexcept;
  friend bool operator==(VertexSubset, VertexSubset) = default;
};

/// Simple undirected graph on vertices 0..n-1 as adjacency bit rows.
///
/// Instances are immutable once built. Every constructor path validates
/// symmetry, absence of loops and that no bit at position >= n is set.
class Graph {
 public:
  /// Empty graph on one vertex.
  Graph();

  /// Throws InputError on loops, duplicates or out-of-range endpoints,
  /// CapError when n is outside 1..kMaxVertices.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Rows must describe a symmetric loop-free relation; throws InputError otherwise.
  static Graph from_rows(std::vector<std::uint32_t> rows);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  std::uint32_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint32_t> rows() const noexcept { return adj_; }
  bool has_edge(int i, int j) const { return (row(i) >> j) & 1U; }
  int degree(int v) const;
  std::uint32_t all_vertices() const noexcept;

  /// Edges (i, j) with i < j, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<std::uint32_t> adj);

  int n_ = 1;
  int m_ = 0;
  std::vector<std::uint32_t> adj_;
};

/// Bijection on 0..n-1; map[i] is the image of vertex i.
class Permutation {
 public:
  /// Throws InputError if `map` is not a bijection on 0..size-1.
  explicit Permutation(std::vector<int> map);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(map_.size()); }
  int operator()(int v) const { return map_[static_cast<std::size_t>(v)]; }
  std::span<const int> map() const noexcept { return map_; }
  Permutation inverse() const;
  VertexSubset apply(VertexSubset s) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// Number of edges with both endpoints in `s`.
inline int induced_edge_count(const Graph& g, VertexSubset s) {
  int twice = 0;
  for (std::uint32_t rest = s.mask; rest != 0; rest &= rest - 1) {
    const int v = __builtin_ctz(rest);
    twice += __builtin_popcount(g.row(v) & s.mask);
  }
  return twice / 2;
}

/// Relabels g so that edge (i, j) becomes (p(i), p(j)).
Graph permute(const Graph& g, const Permutation& p);

// ---------------------------------------------------------------------------
// Text formats

/// Decodes one graph6 line. An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Whitespace separated 0/1 matrix, one row per line. Rows may also be
/// written without separators ("0101").
Graph parse_adjacency(std::string_view text);
std::string format_adjacency(const Graph& g);

/// "n; i j; i j; ..." with ';' or newlines between records, 0-indexed endpoints.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

enum class GraphFormat { kAuto, kGraph6, kAdjacency, kEdgeList };

GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

// ---------------------------------------------------------------------------
// Isomorphism

/// Backtracking search for a witness p with (i,j) in E1 <=> (p(i),p(j)) in E2.
/// Graphs of different order or size are reported as non-isomorphic.
std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2);

inline constexpr int kMaxCanonicalVertices = 8;

struct CanonicalForm {
  /// Upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),...;
  /// the minimum of that string over all relabelings.
  std::string code;
  /// Relabeling that realises the minimum: permute(g, labeling) has `code`.
  Permutation labeling;
};

/// Exact canonical form by branch-and-bound over relabelings. n <= 8.
CanonicalForm canonical_form(const Graph& g);
std::string canonical_code(const Graph& g);
/// Graph whose upper triangle is `code` (column order).
Graph graph_from_code(int n, std::string_view code);

}  // namespace qgi
