#include "qgi/simulator.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "qgi/error.hpp"
#include "qgi/fixtures.hpp"

namespace qgi {
namespace {

constexpr double kTol = 1e-12;

void expect_state_near(const Statevector& a, const Statevector& b, double tol) {
  ASSERT_EQ(a.dimension(), b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, tol) << i;
}

// Uniform superposition over the first n qubits followed by the oracle.
Statevector oracle_state(const Graph& g, PhaseAngle theta) {
  Statevector s(g.order());
  for (int q = 0; q < g.order(); ++q) s.apply(Gate::h(q));
  const Circuit oracle_circuit = build_oracle(g, theta);
  for (const Gate& gate : oracle_circuit.gates()) s.apply(gate);
  return s;
}

TEST(Statevector, InitAndCaps) {
  const Statevector s = init_state(3);
  EXPECT_EQ(s.dimension(), 8U);
  EXPECT_EQ(s[0], Amplitude(1.0));
  EXPECT_THROW(Statevector(0), CapError);
  EXPECT_THROW(Statevector(25), CapError);
  EXPECT_THROW(Statevector(29, {.qubit_cap = 30}), CapError);
  Statevector t(2);
  EXPECT_THROW(t.apply(Gate::h(2)), InputError);
}

TEST(Gates, HadamardAndPhase) {
  Statevector s(1);
  s.apply(Gate::h(0));
  EXPECT_NEAR(s[0].real(), 1 / std::numbers::sqrt2, kTol);
  EXPECT_NEAR(s[1].real(), 1 / std::numbers::sqrt2, kTol);
  s.apply(Gate::h(0));
  EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, kTol);
  EXPECT_NEAR(std::abs(s[1]), 0.0, kTol);

  s.apply(Gate::p(0, PhaseAngle::unit(3)));
  EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, kTol);  // P leaves |0> alone

  Statevector one(1);
  auto a = one.mutable_amplitudes();
  a[0] = 0;
  a[1] = 1;
  one.apply(Gate::p(0, PhaseAngle::unit(3)));
  EXPECT_NEAR(std::abs(one[1] - std::polar(1.0, std::numbers::pi / 4)), 0.0, kTol);
}

TEST(Gates, ControlledPhasesActOnlyWhenAllControlsSet) {
  Statevector s(3);
  for (int q = 0; q < 3; ++q) s.apply(Gate::h(q));
  s.apply(Gate::ccp(0, 1, 2, PhaseAngle::unit(1)));
  s.apply(Gate::cp(0, 2, PhaseAngle::unit(2)));
  for (std::size_t i = 0; i < 8; ++i) {
    double phase = 0;
    if (i == 7) phase += std::numbers::pi;
    if ((i & 0b101) == 0b101) phase += std::numbers::pi / 2;
    EXPECT_NEAR(std::abs(s[i] - std::polar(1 / std::sqrt(8.0), phase)), 0.0, kTol) << i;
  }
}

TEST(Gates, SwapExchangesQubits) {
  Statevector s(3);
  auto a = s.mutable_amplitudes();
  a[0] = 0;
  a[0b001] = 1;
  s.apply(Gate::swap(0, 2));
  EXPECT_NEAR(std::abs(s[0b100] - 1.0), 0.0, kTol);
}

TEST(Gates, RandomCircuitThenInverseRestoresState) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 5);
    std::vector<Gate> gates;
    for (int k = 0; k < 40; ++k) {
      std::vector<int> qs(static_cast<std::size_t>(q));
      std::iota(qs.begin(), qs.end(), 0);
      std::shuffle(qs.begin(), qs.end(), rng);
      const PhaseAngle a = PhaseAngle::turns(static_cast<std::int64_t>(rng() % 16), 4);
      switch (rng() % 5) {
        case 0: gates.push_back(Gate::h(qs[0])); break;
        case 1: gates.push_back(Gate::p(qs[0], a)); break;
        case 2: gates.push_back(Gate::cp(qs[0], qs[1], a)); break;
        case 3: gates.push_back(q >= 3 ? Gate::ccp(qs[0], qs[1], qs[2], a) : Gate::h(qs[1])); break;
        default: gates.push_back(Gate::swap(qs[0], qs[1])); break;
      }
    }
    Statevector s(q);
    for (const Gate& g : gates) s.apply(g);
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) s.apply(it->inverse());
    EXPECT_NEAR(std::abs(s[0] - 1.0), 0.0, 1e-10);
  }
}

TEST(Qpe, C4StateHasSixteenEqualAmplitudes) {
  const Statevector s = run(build_qpe(fixtures::c4()));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  int nonzero = 0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (std::abs(s[i]) < 1e-9) continue;
    ++nonzero;
    EXPECT_NEAR(std::abs(s[i]), 0.25, 1e-12);
    const std::uint32_t graph_bits = static_cast<std::uint32_t>(i & 0xF);
    const int est = static_cast<int>(i >> 4);
    EXPECT_EQ(est, induced_edge_count(fixtures::c4(), VertexSubset{graph_bits}));
  }
  EXPECT_EQ(nonzero, 16);
}

TEST(Qpe, FusedAndUnfusedAgree) {
  for (const Graph& g : {fixtures::c4(), fixtures::m3(), fixtures::g1()}) {
    expect_state_near(run(build_qpe(g)), run(build_qpe(g, {.fuse = true})), 1e-10);
  }
}

TEST(Qpe, ThreadCountDoesNotChangeState) {
  const Circuit c = build_qpe(fixtures::petersen(), {.fuse = true});
  expect_state_near(run(c, {.threads = 1}), run(c, {.threads = 4}), 0.0);
}

TEST(Marginal, C4EstimationRegister) {
  const Statevector s = run(build_qpe(fixtures::c4()));
  const MarginalDistribution d = marginal(s, {4, 5, 6});
  const std::vector<double> want{7 / 16.0, 4 / 16.0, 4 / 16.0, 0, 1 / 16.0, 0, 0, 0};
  ASSERT_EQ(d.probs.size(), 8U);
  for (std::size_t x = 0; x < 8; ++x) EXPECT_NEAR(d.probs[x], want[x], 1e-12) << x;
  EXPECT_THROW(marginal(s, {4, 4}), InputError);
  EXPECT_THROW(marginal(s, {7}), InputError);
}

TEST(Sampling, WithinFiveSigmaAndDeterministic) {
  const Statevector s = run(build_qpe(fixtures::c4()));
  const std::vector<int> reg{4, 5, 6};
  const std::uint64_t shots = 200000;
  const ShotResult r = sample(s, reg, shots, 42);
  const auto p = marginal(s, reg).probs;
  std::uint64_t total = 0;
  for (auto [x, c] : r.counts) {
    total += c;
    EXPECT_GT(p[x], 0.0) << "sampled an impossible outcome " << x;
  }
  EXPECT_EQ(total, shots);
  for (std::size_t x = 0; x < p.size(); ++x) {
    const double observed = r.counts.contains(x) ? static_cast<double>(r.counts.at(x)) : 0.0;
    const double sigma = std::sqrt(static_cast<double>(shots) * p[x] * (1 - p[x]));
    EXPECT_LE(std::abs(observed - static_cast<double>(shots) * p[x]), 5 * sigma + 1e-9) << x;
  }
  EXPECT_EQ(sample(s, reg, shots, 42).counts, r.counts);
  EXPECT_NE(sample(s, reg, shots, 43).counts, r.counts);
}

TEST(PhaseTable, C4TGateEncoding) {
  const PhaseAngle theta = PhaseAngle::unit(3);
  const Statevector s = oracle_state(fixtures::c4(), theta);
  const auto table = phase_table(s, theta);
  ASSERT_EQ(table.size(), 16U);
  for (const PhaseEntry& e : table) {
    EXPECT_EQ(e.multiple, induced_edge_count(fixtures::c4(), VertexSubset{static_cast<std::uint32_t>(e.index)}));
    // Direct check of the amplitude against exp(i * k * pi/4) / 4.
    EXPECT_NEAR(std::abs(s[e.index] - std::polar(0.25, static_cast<double>(e.multiple) * std::numbers::pi / 4)), 0.0, 1e-12);
  }
}

TEST(PhaseTable, OracleIsDiagonalWithEdgeCountPhases) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const PhaseAngle theta = plan_precision(g.size()).theta;
    const auto table = phase_table(oracle_state(g, theta), theta);
    ASSERT_EQ(table.size(), std::size_t{1} << n);
    for (const PhaseEntry& e : table) {
      EXPECT_EQ(e.multiple, induced_edge_count(g, VertexSubset{static_cast<std::uint32_t>(e.index)}));
    }
  }
}

TEST(PhaseTable, OracleGateOrderIrrelevant) {
  std::mt19937_64 rng(23);
  const Graph g = fixtures::petersen();
  const PhaseAngle theta = PhaseAngle::unit(4);
  const Statevector base = oracle_state(g, theta);
  const Circuit oracle_circuit = build_oracle(g, theta);
  auto gates = oracle_circuit.gates();
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gates.begin(), gates.end(), rng);
    Statevector s(10);
    for (int q = 0; q < 10; ++q) s.apply(Gate::h(q));
    for (const Gate& gate : gates) s.apply(gate);
    expect_state_near(base, s, 1e-12);
  }
}

TEST(Json, ListsNonzeroAmplitudes) {
  Statevector s(2);
  s.apply(Gate::h(1));
  const auto j = nlohmann::json::parse(state_to_json(s));
  EXPECT_EQ(j["qubits"], 2);
  ASSERT_EQ(j["amplitudes"].size(), 2U);
  EXPECT_EQ(j["amplitudes"][1][0], 2);
  EXPECT_NEAR(j["amplitudes"][1][1].get<double>(), 1 / std::numbers::sqrt2, 1e-15);
}

}  // namespace
}  // namespace qgi
