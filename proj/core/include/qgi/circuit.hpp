#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qgi/graph.hpp"
#include "qgi/phase.hpp"

namespace qgi {

enum class GateKind : std::uint8_t { kH, kP, kCP, kCCP, kSwap };

/// One gate of the restricted vocabulary the QPE construction needs.
/// Controls come first in `qubits`; the last entry is the target. The phase
/// gates are diagonal, so control and target roles are interchangeable.
struct Gate {
  GateKind kind = GateKind::kH;
  std::array<int, 3> qubits{-1, -1, -1};
  PhaseAngle angle;

  static Gate h(int q) { return {GateKind::kH, {q, -1, -1}, {}}; }
  static Gate p(int q, PhaseAngle a) { return {GateKind::kP, {q, -1, -1}, a}; }
  static Gate cp(int c, int t, PhaseAngle a) { return {GateKind::kCP, {c, t, -1}, a}; }
  static Gate ccp(int c1, int c2, int t, PhaseAngle a) { return {GateKind::kCCP, {c1, c2, t}, a}; }
  static Gate swap(int a, int b) { return {GateKind::kSwap, {a, b, -1}, {}}; }

  int arity() const noexcept;
  bool is_diagonal() const noexcept { return kind != GateKind::kH && kind != GateKind::kSwap; }
  /// Gate that undoes this one.
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over `width` qubits. For QPE circuits the graph register
/// is qubits 0..graph_qubits-1 and the estimation register the next
/// estimation_qubits qubits; `measured` lists the qubits read at the end.
class Circuit {
 public:
  explicit Circuit(int width, int graph_qubits = 0, int estimation_qubits = 0);

  int width() const noexcept { return width_; }
  int graph_qubits() const noexcept { return graph_qubits_; }
  int estimation_qubits() const noexcept { return estimation_qubits_; }
  std::vector<int> estimation_register() const;

  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<int>& measured() const noexcept { return measured_; }

  /// Throws InputError when indices are out of range or repeated.
  void add(const Gate& g);
  void append(const std::vector<Gate>& gates);
  void measure(int qubit);

  std::size_t count(GateKind kind) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_;
  int graph_qubits_;
  int estimation_qubits_;
  std::vector<Gate> gates_;
  std::vector<int> measured_;
};

/// Estimation-register size and oracle angle for a graph with m edges.
struct PrecisionPlan {
  int edges = 0;
  int estimation_qubits = 1;
  PhaseAngle theta;  // 2*pi / 2^estimation_qubits
  std::uint64_t oracle_calls = 1;  // 2^estimation_qubits - 1
};

/// t = max(1, ceil(log2(m + 1))): the smallest register that holds every
/// edge count 0..m without wrapping, so theta * m < 2*pi.
PrecisionPlan plan_precision(int edges);

/// Diagonal oracle: one CP(i, j, theta) per edge in sorted edge order, on a
/// circuit of width n. Multiplies basis state |s> by exp(i*theta*|E(s)|).
Circuit build_oracle(const Graph& g, PhaseAngle theta);

inline constexpr int kDefaultQubitCap = 24;
inline constexpr int kMaxQubitCap = 28;

struct QpeOptions {
  /// Emit one CCP(est_k, i, j, theta * 2^k) per edge instead of 2^k copies.
  bool fuse = false;
  int qubit_cap = kDefaultQubitCap;
};

/// Full phase-estimation circuit: H on every qubit, estimation qubit k
/// (0-based, qubit n + k) controlling U^(2^k), inverse QFT on the estimation
/// register, then measurement of it. Reading the estimation register
/// little-endian yields the induced edge count. Throws InputError for m = 0
/// and CapError when n + t exceeds the cap.
Circuit build_qpe(const Graph& g, const QpeOptions& options = {});

/// Number of times the oracle is applied in total (2^t - 1).
std::uint64_t oracle_applications(const Circuit& qpe);

/// Inverse QFT on `qubits` (qubits[0] least significant): bit-reversal swaps,
/// then per qubit the controlled rotations CP(-pi/2^k) followed by H.
std::vector<Gate> inverse_qft(const std::vector<int>& qubits);
/// Forward transform, the exact inverse of inverse_qft.
std::vector<Gate> qft(const std::vector<int>& qubits);

// ---------------------------------------------------------------------------
// OpenQASM 3 export

struct QasmOptions {
  /// Lower CCP into cp/cx gates instead of the `ctrl @ cp` modifier form.
  bool decompose_ccp = false;
};

/// Deterministic OpenQASM 3 text; angles printed with 12 significant digits.
std::string export_qasm(const Circuit& c, const QasmOptions& options = {});

/// Reads the subset of OpenQASM 3 that export_qasm writes without
/// decomposition. Throws ParseError on anything else.
Circuit parse_qasm(std::string_view text);

}  // namespace qgi
