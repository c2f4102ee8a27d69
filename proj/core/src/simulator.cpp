#include "qgi/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "qgi/error.hpp"

namespace qgi {

namespace {

// Below this many index visits a gate runs on the calling thread.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 16;

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Index of the k-th basis state whose bit `q` is zero.
inline std::size_t insert_zero(std::size_t k, int q) {
  const std::size_t low = k & ((std::size_t{1} << q) - 1);
  return ((k >> q) << (q + 1)) | low;
}

}  // namespace

Statevector::Statevector(int qubits, const SimOptions& options)
    : qubits_(qubits), threads_(resolve_threads(options.threads)) {
  const int cap = std::min(options.qubit_cap, kMaxQubitCap);
  if (qubits < 1 || qubits > cap) {
    throw CapError("statevector of " + std::to_string(qubits) + " qubits outside 1.." +
                   std::to_string(cap));
  }
  amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

double Statevector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

template <typename Fn>
void Statevector::for_each_index(Fn&& fn) {
  // fn(begin, end) over the full index range, split across workers.
  const std::size_t total = amps_.size();
  if (threads_ <= 1 || total < kParallelThreshold) {
    fn(std::size_t{0}, total);
    return;
  }
  const std::size_t workers = static_cast<std::size_t>(threads_);
  const std::size_t chunk = (total + workers - 1) / workers;
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(total, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
}

void Statevector::apply(const Gate& gate) {
  const int arity = gate.arity();
  std::size_t mask = 0;
  for (int a = 0; a < arity; ++a) {
    const int q = gate.qubits[static_cast<std::size_t>(a)];
    if (q < 0 || q >= qubits_) {
      throw InputError("gate qubit " + std::to_string(q) + " outside state of " +
                       std::to_string(qubits_) + " qubits");
    }
    mask |= std::size_t{1} << q;
  }
  if (std::popcount(mask) != arity) throw InputError("gate repeats a qubit");

  switch (gate.kind) {
    case GateKind::kH: {
      const int q = gate.qubits[0];
      const std::size_t bit = std::size_t{1} << q;
      const double r = std::numbers::sqrt2 / 2.0;
      // Pair counter k in [0, N/2) maps to the pair (i, i | bit).
      for_each_index([&](std::size_t b, std::size_t e) {
        for (std::size_t k = b / 2; k < e / 2; ++k) {
          const std::size_t i = insert_zero(k, q);
          const Amplitude x = amps_[i];
          const Amplitude y = amps_[i | bit];
          amps_[i] = (x + y) * r;
          amps_[i | bit] = (x - y) * r;
        }
      });
      break;
    }
    case GateKind::kP:
    case GateKind::kCP:
    case GateKind::kCCP: {
      if (gate.angle.is_zero()) break;
      const double phi = gate.angle.radians();
      const Amplitude factor{std::cos(phi), std::sin(phi)};
      for_each_index([&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          if ((i & mask) == mask) amps_[i] *= factor;
        }
      });
      break;
    }
    case GateKind::kSwap: {
      const std::size_t lo = std::size_t{1} << gate.qubits[0];
      const std::size_t hi = std::size_t{1} << gate.qubits[1];
      for_each_index([&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          if ((i & lo) && !(i & hi)) std::swap(amps_[i], amps_[i ^ lo ^ hi]);
        }
      });
      break;
    }
  }
}

Statevector init_state(int qubits, const SimOptions& options) { return Statevector(qubits, options); }

void apply_gate(Statevector& s, const Gate& gate) { s.apply(gate); }

Statevector run(const Circuit& c, const SimOptions& options) {
  Statevector s(c.width(), options);
  for (const Gate& g : c.gates()) s.apply(g);
  return s;
}

MarginalDistribution marginal(const Statevector& s, const std::vector<int>& reg) {
  std::size_t seen = 0;
  for (int q : reg) {
    if (q < 0 || q >= s.qubits()) throw InputError("register qubit " + std::to_string(q) + " out of range");
    if ((seen >> q) & 1U) throw InputError("register repeats qubit " + std::to_string(q));
    seen |= std::size_t{1} << q;
  }
  MarginalDistribution out{reg, std::vector<double>(std::size_t{1} << reg.size(), 0.0)};
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::size_t x = 0;
    for (std::size_t b = 0; b < reg.size(); ++b) x |= ((i >> reg[b]) & 1U) << b;
    out.probs[x] += p;
  }
  for (double& p : out.probs) {
    if (p < kProbabilityFloor) p = 0.0;
  }
  return out;
}

ShotResult sample(const Statevector& s, const std::vector<int>& reg, std::uint64_t shots,
                  std::uint64_t seed) {
  if (shots == 0) throw InputError("shots must be at least 1");
  const auto dist = marginal(s, reg);
  std::vector<double> cdf(dist.probs.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < dist.probs.size(); ++x) {
    acc += dist.probs[x];
    cdf[x] = acc;
  }
  // Last outcome with nonzero probability absorbs rounding in the total.
  std::size_t last = 0;
  for (std::size_t x = 0; x < dist.probs.size(); ++x) {
    if (dist.probs[x] > 0.0) last = x;
  }

  ShotResult result{shots, seed, {}};
  std::mt19937_64 engine(seed);
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t x = it == cdf.end() ? last : static_cast<std::size_t>(it - cdf.begin());
    if (x > last) x = last;
    ++result.counts[x];
  }
  return result;
}

std::vector<PhaseEntry> phase_table(const Statevector& s, PhaseAngle theta, double magnitude_floor) {
  if (theta.is_zero() || theta.numerator() != 1) {
    throw InputError("phase_table needs theta = 2*pi / 2^d");
  }
  const double step = theta.radians();
  const std::int64_t period = std::int64_t{1} << theta.log2_denominator();
  std::vector<PhaseEntry> out;
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) <= magnitude_floor) continue;
    double arg = std::arg(amps[i]);
    if (arg < 0) arg += 2.0 * std::numbers::pi;
    const auto k = static_cast<std::int64_t>(std::llround(arg / step));
    if (std::abs(static_cast<double>(k) * step - arg) > 1e-6) {
      throw InternalError("amplitude " + std::to_string(i) + " has phase " + std::to_string(arg) +
                          ", not a multiple of " + std::to_string(step));
    }
    out.push_back({i, k % period});
  }
  return out;
}

std::string state_to_json(const Statevector& s, double magnitude_floor) {
  nlohmann::json j;
  j["qubits"] = s.qubits();
  auto& arr = j["amplitudes"] = nlohmann::json::array();
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) <= magnitude_floor) continue;
    arr.push_back({i, amps[i].real(), amps[i].imag()});
  }
  return j.dump();
}

}  // namespace qgi
