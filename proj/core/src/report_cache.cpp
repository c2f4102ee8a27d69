#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgi/error.hpp"
#include "qgi/survey.hpp"

#ifndef QGI_VERSION_STRING
#define QGI_VERSION_STRING "0.0.0"
#endif

namespace qgi {

namespace {

using Json = nlohmann::ordered_json;

// FNV-1a, 64 bit.
std::string checksum(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

InvariantSource source_from_string(const std::string& s) {
  if (s == "classical") return InvariantSource::kClassical;
  if (s == "qpe-exact") return InvariantSource::kQpeExact;
  if (s == "qpe-shots") return InvariantSource::kQpeShots;
  throw CacheError("unknown invariant source '" + s + "'");
}

Json report_object(const SurveyReport& r) {
  Json j;
  j["n"] = r.n;
  j["source"] = to_string(r.source);
  j["classes"] = r.class_count;
  j["distinct_quantum"] = r.distinct_histograms;
  j["distinct_spectra"] = r.distinct_charpolys;
  j["collisions"] = Json::array();
  for (const auto& [a, b] : r.collisions) j["collisions"].push_back({a, b});
  j["collision_indices"] = Json::array();
  for (const auto& [a, b] : r.collision_indices) j["collision_indices"].push_back({a, b});
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

SurveyReport report_from_object(const Json& j) {
  SurveyReport r;
  r.n = j.at("n").get<int>();
  r.source = source_from_string(j.at("source").get<std::string>());
  r.class_count = j.at("classes").get<std::uint64_t>();
  r.distinct_histograms = j.at("distinct_quantum").get<std::uint64_t>();
  r.distinct_charpolys = j.at("distinct_spectra").get<std::uint64_t>();
  for (const auto& pair : j.at("collisions")) {
    r.collisions.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  }
  for (const auto& pair : j.at("collision_indices")) {
    r.collision_indices.emplace_back(pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint64_t>());
  }
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

struct Entry {
  int n;
  std::string source;
  std::string version;
  Json report;
};

Entry parse_line(const std::string& line, std::size_t line_no) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::exception& e) {
    throw CacheError("cache line " + std::to_string(line_no) + " is not valid JSON: " + e.what());
  }
  try {
    const auto& key = j.at("key");
    Entry e{key.at("n").get<int>(), key.at("source").get<std::string>(),
            key.at("version").get<std::string>(), j.at("report")};
    if (checksum(e.report.dump()) != j.at("checksum").get<std::string>()) {
      throw CacheError("cache line " + std::to_string(line_no) + " failed its checksum");
    }
    return e;
  } catch (const Json::exception& e) {
    throw CacheError("cache line " + std::to_string(line_no) + " is malformed: " + e.what());
  }
}

std::string entry_line(const Entry& e) {
  Json j;
  j["key"] = {{"n", e.n}, {"source", e.source}, {"version", e.version}};
  j["checksum"] = checksum(e.report.dump());
  j["report"] = e.report;
  return j.dump();
}

}  // namespace

std::string toolkit_version() { return QGI_VERSION_STRING; }

std::string report_to_json(const SurveyReport& r) { return report_object(r).dump(); }

SurveyReport report_from_json(const std::string& text) {
  try {
    return report_from_object(Json::parse(text));
  } catch (const Json::exception& e) {
    throw CacheError(std::string("malformed survey report: ") + e.what());
  }
}

void save_report(const std::filesystem::path& path, const SurveyReport& r, const std::string& version) {
  std::vector<std::string> kept;
  if (std::ifstream in{path}) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      Entry e;
      try {
        e = parse_line(line, line_no);
      } catch (const CacheError&) {
        continue;  // unreadable entries are dropped on rewrite
      }
      if (e.n == r.n && e.source == to_string(r.source) && e.version == version) continue;
      kept.push_back(line);
    }
  }
  kept.push_back(entry_line(Entry{r.n, to_string(r.source), version, report_object(r)}));

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp.string());
    for (const auto& line : kept) out << line << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<SurveyReport> load_report(const std::filesystem::path& path, int n, InvariantSource source,
                                        const std::string& version) {
  std::ifstream in{path};
  if (!in) return std::nullopt;
  std::string line;
  std::size_t line_no = 0;
  std::optional<SurveyReport> found;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const Entry e = parse_line(line, line_no);
    if (e.n != n || e.source != to_string(source) || e.version != version) continue;
    try {
      found = report_from_object(e.report);
    } catch (const Json::exception& ex) {
      throw CacheError("cache line " + std::to_string(line_no) + " holds a malformed report: " + ex.what());
    }
  }
  return found;
}

}  // namespace qgi
