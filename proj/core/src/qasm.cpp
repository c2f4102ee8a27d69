#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qgi/circuit.hpp"
#include "qgi/error.hpp"

namespace qgi {

namespace {

// Register naming: "g" graph, "e" estimation, "q" when the circuit has no
// register layout; "c" holds the measured bits.
struct Layout {
  bool split;
  int graph;
  int est;
};

Layout layout_of(const Circuit& c) {
  const bool split = c.graph_qubits() > 0 && c.graph_qubits() + c.estimation_qubits() == c.width();
  return {split, c.graph_qubits(), c.estimation_qubits()};
}

std::string qubit_ref(const Layout& l, int q) {
  if (!l.split) return "q[" + std::to_string(q) + "]";
  if (q < l.graph) return "g[" + std::to_string(q) + "]";
  return "e[" + std::to_string(q - l.graph) + "]";
}

std::string format_angle(double radians) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", radians);
  return buf;
}

}  // namespace

std::string export_qasm(const Circuit& c, const QasmOptions& options) {
  const Layout l = layout_of(c);
  std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  if (l.split) {
    out += "qubit[" + std::to_string(l.graph) + "] g;\n";
    if (l.est > 0) out += "qubit[" + std::to_string(l.est) + "] e;\n";
  } else {
    out += "qubit[" + std::to_string(c.width()) + "] q;\n";
  }
  if (!c.measured().empty()) out += "bit[" + std::to_string(c.measured().size()) + "] c;\n";

  auto ref = [&](const Gate& g, int a) { return qubit_ref(l, g.qubits[static_cast<std::size_t>(a)]); };
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kH:
        out += "h " + ref(g, 0) + ";\n";
        break;
      case GateKind::kP:
        out += "p(" + format_angle(g.angle.radians()) + ") " + ref(g, 0) + ";\n";
        break;
      case GateKind::kCP:
        out += "cp(" + format_angle(g.angle.radians()) + ") " + ref(g, 0) + ", " + ref(g, 1) + ";\n";
        break;
      case GateKind::kSwap:
        out += "swap " + ref(g, 0) + ", " + ref(g, 1) + ";\n";
        break;
      case GateKind::kCCP:
        if (options.decompose_ccp) {
          // diag phase on |111>: cp(a/2) c2,t; cx c1,c2; cp(-a/2) c2,t; cx c1,c2; cp(a/2) c1,t
          const double half = g.angle.radians() / 2.0;
          const std::string c1 = ref(g, 0), c2 = ref(g, 1), t = ref(g, 2);
          out += "cp(" + format_angle(half) + ") " + c2 + ", " + t + ";\n";
          out += "cx " + c1 + ", " + c2 + ";\n";
          out += "cp(" + format_angle(-half) + ") " + c2 + ", " + t + ";\n";
          out += "cx " + c1 + ", " + c2 + ";\n";
          out += "cp(" + format_angle(half) + ") " + c1 + ", " + t + ";\n";
        } else {
          out += "ctrl @ cp(" + format_angle(g.angle.radians()) + ") " + ref(g, 0) + ", " + ref(g, 1) +
                 ", " + ref(g, 2) + ";\n";
        }
        break;
    }
  }
  for (std::size_t b = 0; b < c.measured().size(); ++b) {
    out += "c[" + std::to_string(b) + "] = measure " + qubit_ref(l, c.measured()[b]) + ";\n";
  }
  return out;
}

namespace {

class QasmReader {
 public:
  explicit QasmReader(std::string_view text) : text_(text) {}

  Circuit read() {
    expect_statement("OPENQASM 3.0");
    expect_statement("include \"stdgates.inc\"");
    std::vector<Gate> gates;
    std::vector<std::pair<int, std::pair<std::string, int>>> measures;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const std::size_t start = pos_;
      const std::size_t semi = text_.find(';', pos_);
      if (semi == std::string_view::npos) throw ParseError("missing ';'", pos_);
      const std::string_view stmt = text_.substr(pos_, semi - pos_);
      pos_ = semi + 1;
      statement(stmt, start, gates, measures);
    }

    int width = 0;
    int graph = 0;
    int est = 0;
    if (registers_.count("q")) {
      width = registers_["q"];
    } else {
      graph = registers_.count("g") ? registers_["g"] : 0;
      est = registers_.count("e") ? registers_["e"] : 0;
      width = graph + est;
    }
    if (width == 0) throw ParseError("no qubit register declared", 0);
    Circuit c(width, graph, est);
    for (auto& g : gates) {
      for (int a = 0; a < g.arity(); ++a) {
        auto& q = g.qubits[static_cast<std::size_t>(a)];
        q = resolve(pending_refs_[&g - gates.data()][static_cast<std::size_t>(a)]);
      }
      c.add(g);
    }
    std::sort(measures.begin(), measures.end());
    for (std::size_t b = 0; b < measures.size(); ++b) {
      if (measures[b].first != static_cast<int>(b)) throw ParseError("measurement bits not contiguous", 0);
      c.measure(resolve(measures[b].second));
    }
    return c;
  }

 private:
  using Ref = std::pair<std::string, int>;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect_statement(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) throw ParseError("expected '" + std::string(s) + "'", pos_);
    pos_ += s.size();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ';') throw ParseError("expected ';'", pos_);
    ++pos_;
  }

  int resolve(const Ref& r) {
    auto it = registers_.find(r.first);
    if (it == registers_.end()) throw ParseError("unknown register '" + r.first + "'", 0);
    if (r.second < 0 || r.second >= it->second) throw ParseError("qubit index out of range", 0);
    if (r.first == "e") return registers_.count("g") ? registers_["g"] + r.second : r.second;
    return r.second;
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  static Ref parse_ref(std::string_view s, std::size_t offset) {
    s = trim(s);
    const auto open = s.find('[');
    if (open == std::string_view::npos || s.back() != ']') throw ParseError("bad qubit reference", offset);
    int index = 0;
    const auto digits = s.substr(open + 1, s.size() - open - 2);
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || p != digits.data() + digits.size()) throw ParseError("bad qubit index", offset);
    return {std::string(trim(s.substr(0, open))), index};
  }

  static std::vector<Ref> parse_refs(std::string_view s, std::size_t offset) {
    std::vector<Ref> refs;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      refs.push_back(parse_ref(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), offset));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return refs;
  }

  static PhaseAngle parse_angle(std::string_view s, std::size_t offset) {
    s = trim(s);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError("bad angle", offset);
    try {
      return PhaseAngle::from_radians(v, 40, 1e-9);
    } catch (const InputError&) {
      throw ParseError("angle is not a dyadic multiple of 2*pi", offset);
    }
  }

  void statement(std::string_view stmt, std::size_t offset, std::vector<Gate>& gates,
                 std::vector<std::pair<int, Ref>>& measures) {
    stmt = trim(stmt);
    if (stmt.starts_with("qubit[") || stmt.starts_with("bit[")) {
      const auto open = stmt.find('[');
      const auto close = stmt.find(']');
      int size = 0;
      std::from_chars(stmt.data() + open + 1, stmt.data() + close, size);
      const std::string name(trim(stmt.substr(close + 1)));
      if (size <= 0 || name.empty()) throw ParseError("bad register declaration", offset);
      if (stmt.starts_with("qubit[")) registers_[name] = size;
      return;
    }
    if (stmt.starts_with("c[")) {
      const auto eq = stmt.find('=');
      const auto meas = stmt.find("measure", eq);
      if (eq == std::string_view::npos || meas == std::string_view::npos) {
        throw ParseError("bad measurement", offset);
      }
      const Ref bit = parse_ref(stmt.substr(0, eq), offset);
      measures.push_back({bit.second, parse_ref(stmt.substr(meas + 7), offset)});
      return;
    }

    bool controlled = false;
    if (stmt.starts_with("ctrl @")) {
      controlled = true;
      stmt = trim(stmt.substr(6));
    }
    std::size_t name_end = 0;
    while (name_end < stmt.size() && std::isalpha(static_cast<unsigned char>(stmt[name_end]))) ++name_end;
    const std::string_view name = stmt.substr(0, name_end);
    std::string_view rest = stmt.substr(name_end);
    PhaseAngle angle;
    bool has_angle = false;
    if (!rest.empty() && rest.front() == '(') {
      const auto close = rest.find(')');
      if (close == std::string_view::npos) throw ParseError("unterminated parameter list", offset);
      angle = parse_angle(rest.substr(1, close - 1), offset);
      has_angle = true;
      rest = rest.substr(close + 1);
    }
    const auto refs = parse_refs(rest, offset);

    Gate g;
    if (name == "h" && !controlled && !has_angle && refs.size() == 1) {
      g = Gate::h(0);
    } else if (name == "p" && !controlled && has_angle && refs.size() == 1) {
      g = Gate::p(0, angle);
    } else if (name == "cp" && !controlled && has_angle && refs.size() == 2) {
      g = Gate::cp(0, 0, angle);
    } else if (name == "cp" && controlled && has_angle && refs.size() == 3) {
      g = Gate::ccp(0, 0, 0, angle);
    } else if (name == "swap" && !controlled && !has_angle && refs.size() == 2) {
      g = Gate::swap(0, 0);
    } else {
      throw ParseError("unsupported statement '" + std::string(stmt) + "'", offset);
    }
    gates.push_back(g);
    pending_refs_.push_back(refs);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, int> registers_;
  std::vector<std::vector<Ref>> pending_refs_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) { return QasmReader(text).read(); }

}  // namespace qgi
