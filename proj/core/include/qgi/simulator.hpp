#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qgi/circuit.hpp"
#include "qgi/phase.hpp"

namespace qgi {

using Amplitude = std::complex<double>;

/// Probabilities below this are reported as exactly zero.
inline constexpr double kProbabilityFloor = 1e-12;

struct SimOptions {
  int qubit_cap = kDefaultQubitCap;
  /// Worker threads for gate application; 0 picks hardware concurrency.
  int threads = 1;
};

/// Dense state over q qubits; qubit i is bit i of the amplitude index.
class Statevector {
 public:
  /// |0...0>. Throws CapError when q is outside 1..min(cap, 28).
  explicit Statevector(int qubits, const SimOptions& options = {});

  int qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// Throws InputError when a gate index is >= qubits().
  void apply(const Gate& gate);

  /// Exposed for tests that prepare arbitrary states.
  std::span<Amplitude> mutable_amplitudes() noexcept { return amps_; }

 private:
  template <typename Fn>
  void for_each_index(Fn&& fn);

  int qubits_;
  int threads_;
  std::vector<Amplitude> amps_;
};

Statevector init_state(int qubits, const SimOptions& options = {});
void apply_gate(Statevector& s, const Gate& gate);

/// Applies every gate of `c` to |0...0>. Measurements are left unperformed.
Statevector run(const Circuit& c, const SimOptions& options = {});

struct MarginalDistribution {
  std::vector<int> reg;
  /// probs[x] where bit b of x is the value of qubit reg[b].
  std::vector<double> probs;
};

/// Throws InputError on repeated or out-of-range register qubits.
MarginalDistribution marginal(const Statevector& s, const std::vector<int>& reg);

struct ShotResult {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
};

/// Draws i.i.d. outcomes from marginal(s, reg) by inverse CDF. Uniforms come
/// from std::mt19937_64 (top 53 bits of each draw), so results depend only on
/// (state, reg, shots, seed).
ShotResult sample(const Statevector& s, const std::vector<int>& reg, std::uint64_t shots,
                  std::uint64_t seed);

struct PhaseEntry {
  std::uint64_t index;
  std::int64_t multiple;  // phase of amplitude == multiple * theta (mod 2*pi)
};

/// For each amplitude with magnitude above `magnitude_floor`, the integer k
/// with arg(amp) == k * theta. theta must divide 2*pi. Throws InternalError
/// when some phase is more than 1e-6 rad away from every multiple.
std::vector<PhaseEntry> phase_table(const Statevector& s, PhaseAngle theta,
                                    double magnitude_floor = 1e-9);

/// {"qubits": q, "amplitudes": [[index, re, im], ...]} for nonzero amplitudes.
std::string state_to_json(const Statevector& s, double magnitude_floor = 1e-12);

}  // namespace qgi
