#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "qgi/error.hpp"
#include "qgi/graph.hpp"

namespace qgi {

namespace {

// Degree plus the sorted degrees of the neighbours; preserved by isomorphisms.
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto& s = sig[static_cast<std::size_t>(v)];
    s.push_back(g.degree(v));
    for (std::uint32_t rest = g.row(v); rest != 0; rest &= rest - 1) {
      s.push_back(g.degree(__builtin_ctz(rest)));
    }
    std::sort(s.begin() + 1, s.end());
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g1, const Graph& g2)
      : g1_(g1), g2_(g2), sig1_(vertex_signatures(g1)), sig2_(vertex_signatures(g2)) {
    const int n = g1.order();
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), false);
    order_ = search_order();
  }

  std::optional<Permutation> run() {
    auto a = sig1_;
    auto b = sig2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return Permutation(map_);
  }

 private:
  // Highest degree first, then vertices adjacent to the most already placed.
  std::vector<int> search_order() const {
    const int n = g1_.order();
    std::vector<int> order;
    std::uint32_t placed = 0;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      std::pair<int, int> best_key{-1, -1};
      for (int v = 0; v < n; ++v) {
        if ((placed >> v) & 1U) continue;
        const std::pair<int, int> key{__builtin_popcount(g1_.row(v) & placed), g1_.degree(v)};
        if (key > best_key) {
          best_key = key;
          best = v;
        }
      }
      order.push_back(best);
      placed |= 1U << best;
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < g2_.order(); ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      if (sig1_[static_cast<std::size_t>(v)] != sig2_[static_cast<std::size_t>(w)]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const int u = order_[k];
        consistent = g1_.has_edge(v, u) == g2_.has_edge(w, map_[static_cast<std::size_t>(u)]);
      }
      if (!consistent) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<std::vector<int>> sig1_;
  std::vector<std::vector<int>> sig2_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

// Branch and bound for the lexicographically smallest column-order code.
// Column k holds the bits (0,k),(1,k),...,(k-1,k); bit (0,k) is its most
// significant bit so numeric order on columns equals string order.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    place(0, 0U);
    std::string code;
    for (int k = 1; k < n_; ++k) {
      for (int i = k - 1; i >= 0; --i) code.push_back(((best_cols_[static_cast<std::size_t>(k)] >> i) & 1U) ? '1' : '0');
    }
    std::vector<int> labeling(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) {
      labeling[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(pos)])] = pos;
    }
    return CanonicalForm{std::move(code), Permutation(std::move(labeling))};
  }

 private:
  int compare_prefix(int k) const {
    if (!have_best_) return -1;
    for (int c = 1; c <= k; ++c) {
      const auto a = cols_[static_cast<std::size_t>(c)];
      const auto b = best_cols_[static_cast<std::size_t>(c)];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  std::uint32_t column_for(int k, int w) const {
    std::uint32_t col = 0;
    for (int i = 0; i < k; ++i) {
      col |= (g_.has_edge(order_[static_cast<std::size_t>(i)], w) ? 1U : 0U) << (k - 1 - i);
    }
    return col;
  }

  void place(int k, std::uint32_t used) {
    if (k == n_) {
      if (compare_prefix(n_ - 1) < 0) {
        best_cols_ = cols_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::array<std::pair<std::uint32_t, int>, kMaxCanonicalVertices> candidates{};
    int count = 0;
    for (int w = 0; w < n_; ++w) {
      if ((used >> w) & 1U) continue;
      candidates[static_cast<std::size_t>(count++)] = {column_for(k, w), w};
    }
    std::sort(candidates.begin(), candidates.begin() + count);
    for (int c = 0; c < count; ++c) {
      const auto [col, w] = candidates[static_cast<std::size_t>(c)];
      cols_[static_cast<std::size_t>(k)] = col;
      order_[static_cast<std::size_t>(k)] = w;
      if (compare_prefix(k) > 0) break;
      place(k + 1, used | (1U << w));
    }
  }

  const Graph& g_;
  int n_;
  std::array<std::uint32_t, kMaxCanonicalVertices> cols_{};
  std::array<int, kMaxCanonicalVertices> order_{};
  std::array<std::uint32_t, kMaxCanonicalVertices> best_cols_{};
  std::array<int, kMaxCanonicalVertices> best_order_{};
  bool have_best_ = false;
};

}  // namespace

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  return IsoSearch(g1, g2).run();
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    throw CapError("canonical code limited to n <= " + std::to_string(kMaxCanonicalVertices) +
                   ", got n=" + std::to_string(g.order()));
  }
  return CanonicalSearch(g).run();
}

std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

Graph graph_from_code(int n, std::string_view code) {
  if (code.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
    throw InputError("code length does not match n(n-1)/2");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (code[k] == '1') {
        edges.emplace_back(i, j);
      } else if (code[k] != '0') {
        throw InputError("code must contain only '0' and '1'");
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace qgi
