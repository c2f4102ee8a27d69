#include "qgi/survey.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <string>

#include "parallel.hpp"
#include "qgi/error.hpp"
#include "qgi/fixtures.hpp"

namespace qgi {

namespace {

std::vector<Graph> extend_level(const std::vector<Graph>& previous, int k, int threads) {
  // Candidate c is (previous[c >> (k-1)], neighbourhood c & (2^(k-1) - 1)).
  const std::uint64_t per_rep = std::uint64_t{1} << (k - 1);
  const std::uint64_t total = previous.size() * per_rep;
  std::vector<std::string> codes(total);
  detail::parallel_chunks(total, detail::worker_count(threads),
                          [&](int, std::uint64_t b, std::uint64_t e) {
                            std::vector<std::uint32_t> rows(static_cast<std::size_t>(k));
                            for (std::uint64_t c = b; c < e; ++c) {
                              const Graph& base = previous[c / per_rep];
                              const auto nbrs = static_cast<std::uint32_t>(c % per_rep);
                              for (int v = 0; v < k - 1; ++v) {
                                rows[static_cast<std::size_t>(v)] = base.row(v) | (((nbrs >> v) & 1U) << (k - 1));
                              }
                              rows[static_cast<std::size_t>(k - 1)] = nbrs;
                              codes[c] = canonical_code(Graph::from_rows(rows));
                            }
                          });
  std::set<std::string> unique(codes.begin(), codes.end());
  std::vector<Graph> out;
  out.reserve(unique.size());
  for (const auto& code : unique) out.push_back(graph_from_code(k, code));
  return out;
}

}  // namespace

GraphClassSet enumerate_classes(int n, const EnumerateOptions& options) {
  if (n < 1 || n > kMaxSurveyVertices) {
    throw CapError("class enumeration limited to 1 <= n <= " + std::to_string(kMaxSurveyVertices));
  }
  std::vector<Graph> level{Graph()};
  for (int k = 2; k <= n; ++k) level = extend_level(level, k, options.threads);
  return GraphClassSet{n, std::move(level)};
}

bool SurveyReport::same_results(const SurveyReport& other) const {
  return n == other.n && source == other.source && class_count == other.class_count &&
         distinct_histograms == other.distinct_histograms &&
         distinct_charpolys == other.distinct_charpolys &&
         collision_indices == other.collision_indices && collisions == other.collisions;
}

SurveyReport run_survey(int n, const SurveyOptions& options) {
  if (options.source == InvariantSource::kQpeShots) {
    throw InputError("survey sources are classical or qpe-exact");
  }
  if (options.source == InvariantSource::kQpeExact && n > kMaxQpeSurveyVertices) {
    throw CapError("qpe-exact survey limited to n <= " + std::to_string(kMaxQpeSurveyVertices));
  }
  const auto start = std::chrono::steady_clock::now();
  SurveyReport r = run_survey(enumerate_classes(n, EnumerateOptions{options.threads}), options);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SurveyReport run_survey(const GraphClassSet& classes, const SurveyOptions& options) {
  if (options.source == InvariantSource::kQpeShots) {
    throw InputError("survey sources are classical or qpe-exact");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto& reps = classes.representatives;
  std::vector<std::string> prints(reps.size());
  std::vector<CharPoly> polys(reps.size());

  detail::parallel_chunks(reps.size(), detail::worker_count(options.threads),
                          [&](int, std::uint64_t b, std::uint64_t e) {
                            for (std::uint64_t i = b; i < e; ++i) {
                              if (options.source == InvariantSource::kClassical) {
                                prints[i] = fingerprint(classical_histogram(reps[i]));
                              } else {
                                prints[i] = fingerprint(*quantum_histogram(reps[i]).histogram);
                              }
                              polys[i] = char_poly(reps[i]);
                            }
                          });

  SurveyReport r;
  r.n = classes.n;
  r.source = options.source;
  r.class_count = reps.size();
  r.distinct_histograms = std::set<std::string>(prints.begin(), prints.end()).size();
  r.distinct_charpolys = std::set<CharPoly>(polys.begin(), polys.end()).size();

  std::map<std::string, std::vector<std::uint64_t>> groups;
  for (std::uint64_t i = 0; i < prints.size(); ++i) groups[prints[i]].push_back(i);
  for (const auto& [print, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Graph& x = reps[members[a]];
        const Graph& y = reps[members[b]];
        if (are_isomorphic(x, y)) {
          throw InternalError("classes " + encode_graph6(x) + " and " + encode_graph6(y) +
                              " are isomorphic");
        }
        if (classical_histogram(x) != classical_histogram(y)) {
          throw InternalError("collision " + encode_graph6(x) + " / " + encode_graph6(y) +
                              " not confirmed by the classical histogram");
        }
        r.collision_indices.emplace_back(members[a], members[b]);
      }
    }
  }
  std::sort(r.collision_indices.begin(), r.collision_indices.end());
  for (auto [a, b] : r.collision_indices) {
    r.collisions.emplace_back(encode_graph6(reps[a]), encode_graph6(reps[b]));
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CounterexampleReport verify_counterexample() {
  static const std::vector<std::uint64_t> kExpected{26, 33, 27, 18, 13, 5, 5, 0, 1};
  const Graph a = fixtures::g1();
  const Graph b = fixtures::g2();
  CounterexampleReport r;
  r.isomorphic = are_isomorphic(a, b).has_value();
  r.first = classical_histogram(a);
  r.second = classical_histogram(b);
  if (r.isomorphic) throw InternalError("counterexample graphs are isomorphic");
  if (r.first.counts != kExpected || r.second.counts != kExpected) {
    throw InternalError("counterexample histograms differ from [26,33,27,18,13,5,5,0,1]");
  }
  return r;
}

}  // namespace qgi
