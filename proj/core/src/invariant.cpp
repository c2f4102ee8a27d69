#include "qgi/invariant.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "parallel.hpp"
#include "qgi/circuit.hpp"
#include "qgi/error.hpp"
#include "qgi/simulator.hpp"

namespace qgi {

namespace {

constexpr double kCountTolerance = 1e-6;
constexpr double kNormTolerance = 1e-9;

std::uint64_t subset_count(const Graph& g) { return std::uint64_t{1} << g.order(); }

}  // namespace

std::vector<double> EdgeHistogram::probabilities() const {
  std::vector<double> p(counts.size());
  const double total = std::ldexp(1.0, n);
  for (std::size_t k = 0; k < counts.size(); ++k) p[k] = static_cast<double>(counts[k]) / total;
  return p;
}

EdgeHistogram classical_histogram(const Graph& g, const SweepOptions& options) {
  const int workers = detail::worker_count(options.threads);
  const auto m = static_cast<std::size_t>(g.size());
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers),
                                                  std::vector<std::uint64_t>(m + 1, 0));
  detail::parallel_chunks(subset_count(g), workers, [&](int w, std::uint64_t b, std::uint64_t e) {
    auto& local = partial[static_cast<std::size_t>(w)];
    for (std::uint64_t mask = b; mask < e; ++mask) {
      ++local[static_cast<std::size_t>(induced_edge_count(g, VertexSubset{static_cast<std::uint32_t>(mask)}))];
    }
  });
  EdgeHistogram h{g.order(), g.size(), std::vector<std::uint64_t>(m + 1, 0)};
  for (const auto& local : partial) {
    for (std::size_t k = 0; k <= m; ++k) h.counts[k] += local[k];
  }
  return h;
}

IndependentSet max_independent_set(const Graph& g, const SweepOptions& options) {
  const int workers = detail::worker_count(options.threads);
  std::vector<IndependentSet> best(static_cast<std::size_t>(workers));
  detail::parallel_chunks(subset_count(g), workers, [&](int w, std::uint64_t b, std::uint64_t e) {
    auto& local = best[static_cast<std::size_t>(w)];
    for (std::uint64_t mask = b; mask < e; ++mask) {
      const VertexSubset s{static_cast<std::uint32_t>(mask)};
      if (s.size() > local.size && induced_edge_count(g, s) == 0) local = {s.size(), s};
    }
  });
  // Chunks are ascending, so the first worker holding the maximum has the smallest mask.
  IndependentSet out;
  for (const auto& local : best) {
    if (local.size > out.size) out = local;
  }
  return out;
}

std::string to_string(InvariantSource source) {
  switch (source) {
    case InvariantSource::kClassical:
      return "classical";
    case InvariantSource::kQpeExact:
      return "qpe-exact";
    case InvariantSource::kQpeShots:
      return "qpe-shots";
  }
  return "unknown";
}

QuantumHistogram quantum_histogram(const Graph& g, const QuantumMode& mode) {
  if (mode.source == InvariantSource::kClassical) {
    throw InputError("quantum_histogram needs a QPE mode");
  }
  QuantumHistogram out;
  out.n = g.order();
  out.m = g.size();
  out.source = mode.source;
  const double subsets = std::ldexp(1.0, g.order());

  if (g.size() == 0) {
    out.probabilities = {1.0};
    if (mode.source == InvariantSource::kQpeExact) {
      out.histogram = EdgeHistogram{g.order(), 0, {subset_count(g)}};
    }
    return out;
  }

  const Circuit circuit = build_qpe(g, QpeOptions{mode.fuse, mode.qubit_cap});
  const Statevector state = run(circuit, SimOptions{mode.qubit_cap, mode.threads});
  const double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw InternalError("statevector norm drifted to " + std::to_string(norm));
  }
  const auto reg = circuit.estimation_register();
  const auto m = static_cast<std::size_t>(g.size());

  if (mode.source == InvariantSource::kQpeShots) {
    const ShotResult shots = sample(state, reg, mode.shots, mode.seed);
    out.probabilities.assign(m + 1, 0.0);
    for (const auto& [x, c] : shots.counts) {
      if (x > m) throw InternalError("sampled edge count " + std::to_string(x) + " exceeds m");
      out.probabilities[x] = static_cast<double>(c) / static_cast<double>(mode.shots);
    }
    return out;
  }

  const MarginalDistribution dist = marginal(state, reg);
  EdgeHistogram h{g.order(), g.size(), std::vector<std::uint64_t>(m + 1, 0)};
  for (std::size_t x = 0; x < dist.probs.size(); ++x) {
    const double scaled = dist.probs[x] * subsets;
    const double nearest = std::round(scaled);
    if (std::abs(scaled - nearest) > kCountTolerance) {
      throw InternalError("p(" + std::to_string(x) + ") * 2^n = " + std::to_string(scaled) +
                          " is not an integer count");
    }
    if (x > m) {
      if (nearest != 0.0) throw InternalError("probability mass above m at x=" + std::to_string(x));
      continue;
    }
    h.counts[x] = static_cast<std::uint64_t>(nearest);
  }
  // Report the recovered counts over 2^n so output carries no simulation rounding.
  out.probabilities = h.probabilities();
  out.histogram = std::move(h);
  return out;
}

std::string fingerprint(const EdgeHistogram& h) {
  std::string s = "n=" + std::to_string(h.n) + ";m=" + std::to_string(h.m) + ";h=";
  for (std::size_t k = 0; k < h.counts.size(); ++k) {
    if (k > 0) s.push_back(',');
    s += std::to_string(h.counts[k]);
  }
  return s;
}

std::string fingerprint(const Graph& g) { return fingerprint(classical_histogram(g)); }

bool invariant_equal(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  return classical_histogram(g1) == classical_histogram(g2);
}

bool prop1_check(const Graph& g1, const Graph& g2, const Permutation& f) {
  if (g1.order() != g2.order() || f.size() != g1.order()) {
    throw InputError("prop1_check needs graphs and permutation of equal order");
  }
  if (g1.order() > kMaxCharPolyVertices) {
    throw CapError("prop1_check limited to n <= " + std::to_string(kMaxCharPolyVertices));
  }
  for (std::uint32_t mask = 0; mask < (1U << g1.order()); ++mask) {
    const VertexSubset s{mask};
    if (induced_edge_count(g1, s) != induced_edge_count(g2, f.apply(s))) return false;
  }
  return true;
}

std::string to_json(const EdgeHistogram& h, InvariantSource source) {
  nlohmann::ordered_json j;
  j["n"] = h.n;
  j["m"] = h.m;
  j["counts"] = h.counts;
  j["probabilities"] = h.probabilities();
  j["source"] = to_string(source);
  return j.dump();
}

std::string to_json(const QuantumHistogram& q) {
  nlohmann::ordered_json j;
  j["n"] = q.n;
  j["m"] = q.m;
  if (q.histogram) {
    j["counts"] = q.histogram->counts;
  } else {
    j["counts"] = nullptr;
  }
  j["probabilities"] = q.probabilities;
  j["source"] = to_string(q.source);
  return j.dump();
}

}  // namespace qgi
