#include "qgi/graph.hpp"

#include <algorithm>
#include <string>

#include "qgi/error.hpp"

namespace qgi {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapError("vertex count " + std::to_string(n) + " outside 1.." +
                   std::to_string(kMaxVertices));
  }
}

}  // namespace

int VertexSubset::size() const noexcept { return __builtin_popcount(mask); }

Graph::Graph() : adj_(1, 0U) {}

Graph::Graph(int n, std::vector<std::uint32_t> adj) : n_(n), adj_(std::move(adj)) {
  int twice = 0;
  for (auto r : adj_) twice += __builtin_popcount(r);
  m_ = twice / 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0U);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (i == j) throw InputError("loop at vertex " + std::to_string(i));
    if ((adj[static_cast<std::size_t>(i)] >> j) & 1U) {
      throw InputError("duplicate edge (" + std::to_string(std::min(i, j)) + "," +
                       std::to_string(std::max(i, j)) + ")");
    }
    adj[static_cast<std::size_t>(i)] |= 1U << j;
    adj[static_cast<std::size_t>(j)] |= 1U << i;
  }
  return Graph(n, std::move(adj));
}

Graph Graph::from_rows(std::vector<std::uint32_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint32_t valid = n == 32 ? ~0U : ((1U << n) - 1U);
  for (int i = 0; i < n; ++i) {
    const auto r = rows[static_cast<std::size_t>(i)];
    if (r & ~valid) throw InputError("row " + std::to_string(i) + " has bits beyond n");
    if ((r >> i) & 1U) throw InputError("loop at vertex " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (((r >> j) & 1U) != ((rows[static_cast<std::size_t>(j)] >> i) & 1U)) {
        throw InputError("adjacency not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
  return Graph(n, std::move(rows));
}

int Graph::degree(int v) const { return __builtin_popcount(row(v)); }

std::uint32_t Graph::all_vertices() const noexcept { return (1U << n_) - 1U; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int i = 0; i < n_; ++i) {
    for (std::uint32_t rest = row(i) >> (i + 1); rest != 0; rest &= rest - 1) {
      out.emplace_back(i, i + 1 + __builtin_ctz(rest));
    }
  }
  return out;
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw InputError("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

VertexSubset Permutation::apply(VertexSubset s) const {
  VertexSubset out;
  for (std::uint32_t rest = s.mask; rest != 0; rest &= rest - 1) {
    out.mask |= 1U << (*this)(__builtin_ctz(rest));
  }
  return out;
}

Graph permute(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw InputError("permutation size does not match graph order");
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(g.order()), 0U);
  for (int i = 0; i < g.order(); ++i) {
    rows[static_cast<std::size_t>(p(i))] = p.apply(VertexSubset{g.row(i)}).mask;
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace qgi
