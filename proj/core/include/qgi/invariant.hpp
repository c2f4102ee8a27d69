#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgi/graph.hpp"

namespace qgi {

/// counts[k] = number of vertex subsets (including the empty set) whose
/// induced subgraph has exactly k edges, for k = 0..m.
struct EdgeHistogram {
  int n = 1;
  int m = 0;
  std::vector<std::uint64_t> counts{2};

  /// counts[k] / 2^n.
  std::vector<double> probabilities() const;
  friend bool operator==(const EdgeHistogram&, const EdgeHistogram&) = default;
};

struct SweepOptions {
  /// Worker count for the 2^n subset sweep; 0 picks hardware concurrency.
  /// Results do not depend on it.
  int threads = 1;
};

/// Brute-force histogram over all 2^n masks. n <= 24.
EdgeHistogram classical_histogram(const Graph& g, const SweepOptions& options = {});

struct IndependentSet {
  int size = 0;
  VertexSubset witness;
};

/// Largest edgeless subset; ties go to the smallest mask.
IndependentSet max_independent_set(const Graph& g, const SweepOptions& options = {});

enum class InvariantSource { kClassical, kQpeExact, kQpeShots };

std::string to_string(InvariantSource source);

struct QuantumMode {
  InvariantSource source = InvariantSource::kQpeExact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool fuse = false;
  int qubit_cap = 24;
  int threads = 1;

  static QuantumMode exact() { return {}; }
  static QuantumMode sampled(std::uint64_t shots, std::uint64_t seed) {
    return {InvariantSource::kQpeShots, shots, seed};
  }
};

/// Outcome of the simulated phase-estimation pipeline.
struct QuantumHistogram {
  int n = 1;
  int m = 0;
  InvariantSource source = InvariantSource::kQpeExact;
  /// p(x) for x = 0..m. Exact mode reports counts[x] / 2^n once the counts
  /// pass the integrality check; shots mode reports observed frequencies.
  std::vector<double> probabilities;
  /// Integer counts; present in exact mode only.
  std::optional<EdgeHistogram> histogram;
};

/// Builds the QPE circuit, simulates it and reads the estimation marginal.
/// Exact mode recovers counts as round(p(x) * 2^n) and throws InternalError
/// if any p(x) * 2^n is more than 1e-6 from an integer or if probability
/// appears above x = m. m = 0 short-circuits to the trivial histogram.
QuantumHistogram quantum_histogram(const Graph& g, const QuantumMode& mode = {});

/// Text key "n=..;m=..;h=c0,c1,..,cm"; equal strings <=> equal (n, histogram).
std::string fingerprint(const EdgeHistogram& h);
std::string fingerprint(const Graph& g);

bool invariant_equal(const Graph& g1, const Graph& g2);

/// Monic characteristic polynomial det(xI - A), highest degree first:
/// coeffs[0] = 1, coeffs[k] multiplies x^(n-k).
struct CharPoly {
  std::vector<std::int64_t> coeffs;

  std::string to_string() const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
  friend auto operator<=>(const CharPoly&, const CharPoly&) = default;
};

inline constexpr int kMaxCharPolyVertices = 16;

/// Exact integer Faddeev-LeVerrier in 128-bit arithmetic. Any overflow or
/// inexact division throws instead of wrapping. n <= 16.
CharPoly char_poly(const Graph& g);

/// True iff induced_edge_count(g1, S) == induced_edge_count(g2, f(S)) for
/// every subset S. Orders must match and be <= 16.
bool prop1_check(const Graph& g1, const Graph& g2, const Permutation& f);

/// JSON rendering {"n","m","counts","probabilities","source"}.
std::string to_json(const EdgeHistogram& h, InvariantSource source);
std::string to_json(const QuantumHistogram& q);

}  // namespace qgi
