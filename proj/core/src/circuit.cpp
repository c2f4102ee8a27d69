#include "qgi/circuit.hpp"

#include <algorithm>
#include <string>

#include "qgi/error.hpp"

namespace qgi {

int Gate::arity() const noexcept {
  switch (kind) {
    case GateKind::kH:
    case GateKind::kP:
      return 1;
    case GateKind::kCP:
    case GateKind::kSwap:
      return 2;
    case GateKind::kCCP:
      return 3;
  }
  return 0;
}

Gate Gate::inverse() const {
  Gate g = *this;
  g.angle = -angle;
  return g;
}

Circuit::Circuit(int width, int graph_qubits, int estimation_qubits)
    : width_(width), graph_qubits_(graph_qubits), estimation_qubits_(estimation_qubits) {
  if (width < 1) throw InputError("circuit width must be at least 1");
  if (graph_qubits < 0 || estimation_qubits < 0 || graph_qubits + estimation_qubits > width) {
    throw InputError("register layout does not fit circuit width");
  }
}

std::vector<int> Circuit::estimation_register() const {
  std::vector<int> reg(static_cast<std::size_t>(estimation_qubits_));
  for (int k = 0; k < estimation_qubits_; ++k) reg[static_cast<std::size_t>(k)] = graph_qubits_ + k;
  return reg;
}

void Circuit::add(const Gate& g) {
  const int arity = g.arity();
  for (int a = 0; a < arity; ++a) {
    const int q = g.qubits[static_cast<std::size_t>(a)];
    if (q < 0 || q >= width_) {
      throw InputError("gate qubit " + std::to_string(q) + " outside circuit width " +
                       std::to_string(width_));
    }
    for (int b = 0; b < a; ++b) {
      if (g.qubits[static_cast<std::size_t>(b)] == q) throw InputError("gate repeats qubit " + std::to_string(q));
    }
  }
  gates_.push_back(g);
}

void Circuit::append(const std::vector<Gate>& gates) {
  for (const auto& g : gates) add(g);
}

void Circuit::measure(int qubit) {
  if (qubit < 0 || qubit >= width_) throw InputError("measured qubit out of range");
  if (std::find(measured_.begin(), measured_.end(), qubit) != measured_.end()) {
    throw InputError("qubit measured twice");
  }
  measured_.push_back(qubit);
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

PrecisionPlan plan_precision(int edges) {
  if (edges < 0) throw InputError("edge count must be non-negative");
  int t = 1;
  while ((1LL << t) <= edges) ++t;
  PrecisionPlan plan;
  plan.edges = edges;
  plan.estimation_qubits = t;
  plan.theta = PhaseAngle::unit(t);
  plan.oracle_calls = (1ULL << t) - 1ULL;
  return plan;
}

Circuit build_oracle(const Graph& g, PhaseAngle theta) {
  Circuit c(g.order(), g.order(), 0);
  if (theta.is_zero()) return c;
  for (auto [i, j] : g.edges()) c.add(Gate::cp(i, j, theta));
  return c;
}

std::vector<Gate> qft(const std::vector<int>& qubits) {
  const int t = static_cast<int>(qubits.size());
  std::vector<Gate> out;
  for (int j = t - 1; j >= 0; --j) {
    out.push_back(Gate::h(qubits[static_cast<std::size_t>(j)]));
    for (int k = j - 1; k >= 0; --k) {
      // pi / 2^(j-k) = 2*pi / 2^(j-k+1)
      out.push_back(Gate::cp(qubits[static_cast<std::size_t>(k)], qubits[static_cast<std::size_t>(j)],
                             PhaseAngle::unit(j - k + 1)));
    }
  }
  for (int i = 0; i < t / 2; ++i) {
    out.push_back(Gate::swap(qubits[static_cast<std::size_t>(i)], qubits[static_cast<std::size_t>(t - 1 - i)]));
  }
  return out;
}

std::vector<Gate> inverse_qft(const std::vector<int>& qubits) {
  if (qubits.empty()) throw InputError("inverse QFT needs at least one qubit");
  auto forward = qft(qubits);
  std::vector<Gate> out;
  out.reserve(forward.size());
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Circuit build_qpe(const Graph& g, const QpeOptions& options) {
  if (g.size() == 0) throw InputError("empty graph: no oracle");
  const int cap = std::min(options.qubit_cap, kMaxQubitCap);
  const PrecisionPlan plan = plan_precision(g.size());
  const int n = g.order();
  const int t = plan.estimation_qubits;
  if (n + t > cap) {
    throw CapError("QPE circuit needs " + std::to_string(n + t) + " qubits, cap is " +
                   std::to_string(cap));
  }

  Circuit c(n + t, n, t);
  for (int q = 0; q < n + t; ++q) c.add(Gate::h(q));

  const auto edges = g.edges();
  for (int k = 0; k < t; ++k) {
    const int control = n + k;
    if (options.fuse) {
      const PhaseAngle power = plan.theta.doubled(k);
      for (auto [i, j] : edges) c.add(Gate::ccp(control, i, j, power));
    } else {
      for (std::uint64_t rep = 0; rep < (1ULL << k); ++rep) {
        for (auto [i, j] : edges) c.add(Gate::ccp(control, i, j, plan.theta));
      }
    }
  }

  const auto est = c.estimation_register();
  c.append(inverse_qft(est));
  for (int q : est) c.measure(q);
  return c;
}

std::uint64_t oracle_applications(const Circuit& qpe) {
  return (1ULL << qpe.estimation_qubits()) - 1ULL;
}

}  // namespace qgi
