#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgi/graph.hpp"
#include "qgi/invariant.hpp"

namespace qgi {

inline constexpr int kMaxSurveyVertices = 8;
inline constexpr int kMaxQpeSurveyVertices = 7;

/// One representative per isomorphism class on n vertices, sorted by
/// canonical code. Each representative is the canonically relabeled graph.
struct GraphClassSet {
  int n = 1;
  std::vector<Graph> representatives;
};

struct EnumerateOptions {
  int threads = 1;
};

/// Builds classes level by level: every class on k-1 vertices is extended by
/// a new vertex with each of the 2^(k-1) neighbourhoods, then deduplicated by
/// canonical code. 1 <= n <= 8.
GraphClassSet enumerate_classes(int n, const EnumerateOptions& options = {});

struct SurveyReport {
  int n = 1;
  InvariantSource source = InvariantSource::kClassical;
  std::uint64_t class_count = 0;
  std::uint64_t distinct_histograms = 0;
  std::uint64_t distinct_charpolys = 0;
  /// Non-isomorphic class pairs sharing a histogram, as indices into the
  /// representative list and as graph6 strings.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> collision_indices;
  std::vector<std::pair<std::string, std::string>> collisions;
  double elapsed_ms = 0.0;

  /// Equality on everything but timing.
  bool same_results(const SurveyReport& other) const;
};

struct SurveyOptions {
  InvariantSource source = InvariantSource::kClassical;
  int threads = 1;
};

/// Census for one n: class count, distinct histograms, distinct characteristic
/// polynomials and every histogram collision. Each collision is re-verified
/// (exact isomorphism check says no, classical histograms agree); a failed
/// re-check throws InternalError.
SurveyReport run_survey(int n, const SurveyOptions& options = {});
SurveyReport run_survey(const GraphClassSet& classes, const SurveyOptions& options = {});

struct CounterexampleReport {
  bool isomorphic = true;
  EdgeHistogram first;
  EdgeHistogram second;
};

/// Checks the built-in 7-vertex pair: not isomorphic, identical histograms
/// [26,33,27,18,13,5,5,0,1]. Throws InternalError if either fails.
CounterexampleReport verify_counterexample();

// ---------------------------------------------------------------------------
// Report cache: JSON lines, one report per (n, source, version) key, each
// line carrying a checksum of its report object.

std::string report_to_json(const SurveyReport& r);
SurveyReport report_from_json(const std::string& text);

std::string toolkit_version();

/// Inserts or replaces the entry for (r.n, r.source, version).
void save_report(const std::filesystem::path& path, const SurveyReport& r,
                 const std::string& version = toolkit_version());

/// Entry for (n, source) written by `version`, or nullopt when the file or a
/// matching entry is absent (entries from other versions are ignored).
/// Throws CacheError on a malformed line or checksum mismatch.
std::optional<SurveyReport> load_report(const std::filesystem::path& path, int n,
                                        InvariantSource source,
                                        const std::string& version = toolkit_version());

}  // namespace qgi
