#include <algorithm>
#include <charconv>
#include <cctype>
#include <string>
#include <vector>

#include "qgi/error.hpp"
#include "qgi/graph.hpp"

namespace qgi {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

int parse_int(const Token& t) {
  int value = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.offset);
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;

  auto byte_at = [&](std::size_t i) -> unsigned {
    if (i >= end) throw ParseError("truncated graph6 data", i);
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("character out of graph6 range (63..126)", i);
    }
    return c - 63U;
  };

  if (pos >= end) throw ParseError("empty graph6 string", pos);
  std::uint64_t n = byte_at(pos);
  std::size_t cursor = pos + 1;
  if (n == 63) {
    // 126 prefix: either 3 or (after a second 126) 6 big-endian sextets.
    int groups = 3;
    if (cursor < end && static_cast<unsigned char>(text[cursor]) == 126) {
      groups = 6;
      ++cursor;
    }
    n = 0;
    for (int k = 0; k < groups; ++k) n = (n << 6) | byte_at(cursor++);
  }
  if (n < 1 || n > static_cast<std::uint64_t>(kMaxVertices)) {
    throw CapError("graph6 vertex count " + std::to_string(n) + " outside 1.." +
                   std::to_string(kMaxVertices));
  }

  const int order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (end - cursor < bytes) throw ParseError("truncated graph6 bit section", end);
  if (end - cursor > bytes) throw ParseError("trailing characters after graph6 data", cursor + bytes);

  std::vector<std::uint32_t> rows(static_cast<std::size_t>(order), 0U);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const unsigned group = byte_at(cursor + k / 6);
      if ((group >> (5 - k % 6)) & 1U) {
        rows[static_cast<std::size_t>(i)] |= 1U << j;
        rows[static_cast<std::size_t>(j)] |= 1U << i;
      }
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((byte_at(cursor + k / 6) >> (5 - k % 6)) & 1U) {
      throw ParseError("nonzero graph6 padding bit", cursor + k / 6);
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  unsigned group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph parse_adjacency(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    auto tokens = split_tokens(text.substr(line_start, line_end - line_start), line_start);
    if (tokens.size() == 1 && tokens[0].text.size() > 1) {
      // Compact row such as "0101".
      std::vector<Token> cells;
      for (std::size_t c = 0; c < tokens[0].text.size(); ++c) {
        cells.push_back({tokens[0].text.substr(c, 1), tokens[0].offset + c});
      }
      tokens = std::move(cells);
    }
    if (!tokens.empty()) rows.push_back(std::move(tokens));
    line_start = line_end + 1;
  }
  if (rows.empty()) throw ParseError("empty adjacency matrix", 0);

  const std::size_t n = rows.size();
  if (n > static_cast<std::size_t>(kMaxVertices)) {
    throw CapError("adjacency matrix has " + std::to_string(n) + " rows, cap is " +
                   std::to_string(kMaxVertices));
  }
  std::vector<std::uint32_t> adj(n, 0U);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("matrix is not square: row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n),
                       rows[i].front().offset);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Token& cell = rows[i][j];
      if (cell.text != "0" && cell.text != "1") {
        throw ParseError("non-binary entry '" + std::string(cell.text) + "'", cell.offset);
      }
      if (cell.text == "1") {
        if (i == j) throw ParseError("nonzero diagonal entry", cell.offset);
        adj[i] |= 1U << j;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (((adj[i] >> j) & 1U) != ((adj[j] >> i) & 1U)) {
        throw ParseError("matrix is not symmetric at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")",
                         rows[i][j].offset);
      }
    }
  }
  return Graph::from_rows(std::move(adj));
}

std::string format_adjacency(const Graph& g) {
  std::string out;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j > 0) out.push_back(' ');
      out.push_back(g.has_edge(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::vector<Token>> records;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find_first_of(";\n", start);
    if (stop == std::string_view::npos) stop = text.size();
    auto tokens = split_tokens(text.substr(start, stop - start), start);
    if (!tokens.empty()) records.push_back(std::move(tokens));
    start = stop + 1;
  }
  if (records.empty()) throw ParseError("empty edge list", 0);
  if (records[0].size() != 1) {
    throw ParseError("edge list must start with the vertex count", records[0].front().offset);
  }
  const int n = parse_int(records[0][0]);
  if (n < 1 || n > kMaxVertices) {
    throw CapError("vertex count " + std::to_string(n) + " outside 1.." +
                   std::to_string(kMaxVertices));
  }

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0U);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != 2) throw ParseError("edge record needs two endpoints", rec.front().offset);
    const int i = parse_int(rec[0]);
    const int j = parse_int(rec[1]);
    if (i < 0 || i >= n) throw ParseError("vertex index out of range", rec[0].offset);
    if (j < 0 || j >= n) throw ParseError("vertex index out of range", rec[1].offset);
    if (i == j) throw ParseError("loop at vertex " + std::to_string(i), rec[0].offset);
    if ((adj[static_cast<std::size_t>(i)] >> j) & 1U) {
      throw ParseError("duplicate edge (" + std::to_string(std::min(i, j)) + "," +
                           std::to_string(std::max(i, j)) + ")",
                       rec[0].offset);
    }
    adj[static_cast<std::size_t>(i)] |= 1U << j;
    adj[static_cast<std::size_t>(j)] |= 1U << i;
  }
  return Graph::from_rows(std::move(adj));
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ";";
  for (auto [i, j] : g.edges()) out += " " + std::to_string(i) + " " + std::to_string(j) + ";";
  return out;
}

GraphFormat detect_format(std::string_view text) {
  if (text.find(';') != std::string_view::npos) return GraphFormat::kEdgeList;
  bool binary_only = true;
  bool digits_only = true;
  bool any = false;
  for (char c : text) {
    if (is_space(c)) continue;
    any = true;
    if (c != '0' && c != '1') binary_only = false;
    if (!std::isdigit(static_cast<unsigned char>(c))) digits_only = false;
  }
  if (any && binary_only) return GraphFormat::kAdjacency;
  if (any && digits_only) return GraphFormat::kEdgeList;
  return GraphFormat::kGraph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = detect_format(text);
  switch (format) {
    case GraphFormat::kGraph6: {
      // Tolerate surrounding whitespace around a single graph6 token.
      std::size_t b = 0;
      std::size_t e = text.size();
      while (b < e && is_space(text[b])) ++b;
      while (e > b && is_space(text[e - 1])) --e;
      return parse_graph6(text.substr(b, e - b));
    }
    case GraphFormat::kAdjacency:
      return parse_adjacency(text);
    case GraphFormat::kEdgeList:
      return parse_edge_list(text);
    case GraphFormat::kAuto:
      break;
  }
  throw InputError("unknown graph format");
}

}  // namespace qgi
