#include "qgi/invariant.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qgi/error.hpp"
#include "qgi/fixtures.hpp"

namespace qgi {
namespace {

using Counts = std::vector<std::uint64_t>;

Graph star_k14() { return Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }
Graph c4_plus_k1() { return Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

std::int64_t evaluate(const CharPoly& p, std::int64_t x) {
  std::int64_t acc = 0;
  for (std::int64_t c : p.coeffs) acc = acc * x + c;
  return acc;
}

TEST(Histogram, FixtureTables) {
  EXPECT_EQ(classical_histogram(fixtures::c4()).counts, (Counts{7, 4, 4, 0, 1}));
  EXPECT_EQ(classical_histogram(fixtures::m3()).counts, (Counts{8, 5, 2, 1}));
  EXPECT_EQ(classical_histogram(fixtures::petersen()).counts,
            (Counts{76, 135, 165, 135, 180, 87, 100, 60, 30, 30, 15, 0, 10, 0, 0, 1}));
  EXPECT_EQ(classical_histogram(fixtures::prism5()).counts,
            (Counts{81, 125, 155, 180, 125, 127, 80, 65, 30, 30, 15, 0, 10, 0, 0, 1}));
  EXPECT_EQ(classical_histogram(fixtures::g1()).counts, (Counts{26, 33, 27, 18, 13, 5, 5, 0, 1}));
  EXPECT_EQ(classical_histogram(Graph()).counts, (Counts{2}));
}

TEST(Histogram, MatchesEdgeTestingOracleAndIdentities) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const EdgeHistogram h = classical_histogram(g);
    ASSERT_EQ(h.counts, oracle::histogram_by_edges(g));
    std::uint64_t total = 0;
    std::uint64_t moment = 0;
    for (std::size_t k = 0; k < h.counts.size(); ++k) {
      total += h.counts[k];
      moment += k * h.counts[k];
    }
    EXPECT_EQ(total, std::uint64_t{1} << n);
    // The full edge set is induced by V minus any subset of isolated vertices.
    int isolated = 0;
    for (int v = 0; v < n; ++v) isolated += g.degree(v) == 0;
    EXPECT_EQ(h.counts.back(), std::uint64_t{1} << isolated);
    if (n >= 2) EXPECT_EQ(moment, static_cast<std::uint64_t>(g.size()) << (n - 2));
  }
}

TEST(Histogram, ThreadCountIndependent) {
  const Graph g = fixtures::petersen();
  const EdgeHistogram one = classical_histogram(g, {.threads = 1});
  for (int t : {2, 3, 7, 0}) EXPECT_EQ(classical_histogram(g, {.threads = t}), one);
  EXPECT_EQ(max_independent_set(g, {.threads = 5}).witness.mask, max_independent_set(g).witness.mask);
}

TEST(Quantum, ExactMatchesClassical) {
  for (const Graph& g : {fixtures::c4(), fixtures::m3(), fixtures::g1(), fixtures::g2(), fixtures::petersen()}) {
    const QuantumHistogram q = quantum_histogram(g);
    ASSERT_TRUE(q.histogram.has_value());
    EXPECT_EQ(*q.histogram, classical_histogram(g));
    EXPECT_EQ(q.source, InvariantSource::kQpeExact);
  }
  const QuantumHistogram fused = quantum_histogram(fixtures::c4(), {.fuse = true});
  EXPECT_EQ(fused.histogram->counts, (Counts{7, 4, 4, 0, 1}));
}

TEST(Quantum, EdgelessShortCircuits) {
  const QuantumHistogram q = quantum_histogram(Graph::from_edges(3, {}));
  EXPECT_EQ(q.histogram->counts, (Counts{8}));
  EXPECT_EQ(q.probabilities, (std::vector<double>{1.0}));
}

TEST(Quantum, ShotsModeIsSeeded) {
  const QuantumHistogram a = quantum_histogram(fixtures::c4(), QuantumMode::sampled(5000, 9));
  const QuantumHistogram b = quantum_histogram(fixtures::c4(), QuantumMode::sampled(5000, 9));
  EXPECT_EQ(a.source, InvariantSource::kQpeShots);
  EXPECT_FALSE(a.histogram.has_value());
  EXPECT_EQ(a.probabilities, b.probabilities);
  EXPECT_EQ(a.probabilities[3], 0.0);
  EXPECT_NEAR(a.probabilities[0], 7 / 16.0, 0.05);
}

TEST(Fingerprint, TextForm) {
  EXPECT_EQ(fingerprint(fixtures::c4()), "n=4;m=4;h=7,4,4,0,1");
  EXPECT_TRUE(invariant_equal(fixtures::c4(), fixtures::m2()));
  EXPECT_FALSE(invariant_equal(fixtures::c4(), fixtures::m3()));
  EXPECT_TRUE(invariant_equal(fixtures::g1(), fixtures::g2()));
  EXPECT_FALSE(invariant_equal(fixtures::petersen(), fixtures::prism5()));
}

TEST(CharPoly, KnownPolynomials) {
  EXPECT_EQ(char_poly(Graph::from_edges(2, std::vector<Edge>{{0, 1}})).coeffs, (std::vector<std::int64_t>{1, 0, -1}));
  EXPECT_EQ(char_poly(fixtures::c4()).to_string(), "x^4 - 4x^2");
  EXPECT_EQ(char_poly(Graph()).to_string(), "x");
  EXPECT_EQ(char_poly(star_k14()), char_poly(c4_plus_k1()));
  EXPECT_EQ(char_poly(star_k14()).to_string(), "x^5 - 4x^3");
  EXPECT_NE(fingerprint(star_k14()), fingerprint(c4_plus_k1()));
  EXPECT_THROW(char_poly(Graph::from_edges(17, {})), CapError);
}

TEST(CharPoly, MatchesDeterminantOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const CharPoly p = char_poly(g);
    ASSERT_EQ(p.coeffs.size(), static_cast<std::size_t>(n + 1));
    for (std::int64_t x = -2; x <= 2; ++x) {
      EXPECT_EQ(static_cast<long double>(evaluate(p, x)), static_cast<long double>(oracle::char_poly_at(g, x)))
          << "n=" << n << " x=" << x;
    }
  }
}

TEST(CharPoly, InvariantUnderRelabeling) {
  std::mt19937_64 rng(43);
  for (const Graph& g : {fixtures::petersen(), fixtures::prism5(), fixtures::g1()}) {
    const CharPoly base = char_poly(g);
    for (int trial = 0; trial < 100; ++trial) {
      ASSERT_EQ(char_poly(permute(g, oracle::random_permutation(g.order(), rng))), base);
    }
  }
}

TEST(Prop1, HoldsExactlyForIsomorphisms) {
  std::mt19937_64 rng(47);
  for (int n = 1; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int trial = 0; trial < 60; ++trial) {
      const Graph a = oracle::labeled_graph(n, static_cast<std::uint32_t>(rng() % (1U << bits)));
      // Half the time compare against a relabeled copy so true cases occur.
      const Graph b = trial % 2 == 0 ? permute(a, oracle::random_permutation(n, rng))
                                     : oracle::labeled_graph(n, static_cast<std::uint32_t>(rng() % (1U << bits)));
      std::iota(p.begin(), p.end(), 0);
      do {
        EXPECT_EQ(prop1_check(a, b, Permutation(p)), oracle::is_isomorphism(a, b, p));
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}

TEST(IndependentSet, PrismAndPetersen) {
  const IndependentSet prism = max_independent_set(fixtures::prism5());
  EXPECT_EQ(prism.size, 4);
  const VertexSubset known_witness{(1U << 1) | (1U << 3) | (1U << 7) | (1U << 9)};
  EXPECT_EQ(induced_edge_count(fixtures::prism5(), known_witness), 0);
  EXPECT_EQ(induced_edge_count(fixtures::prism5(), prism.witness), 0);
  EXPECT_EQ(prism.witness.size(), 4);
  EXPECT_EQ(max_independent_set(fixtures::petersen()).size, 4);
  EXPECT_EQ(max_independent_set(fixtures::c4()).witness.mask, 0b0101U);
}

TEST(Json, OrderedSchema) {
  const std::string text = to_json(classical_histogram(fixtures::c4()), InvariantSource::kClassical);
  EXPECT_EQ(text.rfind(R"({"n":4,"m":4,"counts":[7,4,4,0,1],"probabilities":[0.4375,0.25,0.25,0.0,0.0625],)", 0), 0U);
  const auto j = nlohmann::json::parse(to_json(quantum_histogram(fixtures::m3())));
  EXPECT_EQ(j["source"], "qpe-exact");
  EXPECT_EQ(j["counts"], nlohmann::json({8, 5, 2, 1}));
}

}  // namespace
}  // namespace qgi
