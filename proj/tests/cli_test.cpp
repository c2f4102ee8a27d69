#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace qgi {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, InvariantC4Table) {
  const Result r = run_cli({"invariant", "c4", "--mode", "qpe"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "graph: n=4 m=4 source=qpe-exact\n"
            "#(edges)  %Probability  #(subgraphs)\n"
            "       0         43.75             7\n"
            "       1         25.00             4\n"
            "       2         25.00             4\n"
            "       3          0.00             0\n"
            "       4          6.25             1\n");
}

TEST(Cli, InvariantSingleVertex) {
  const Result r = run_cli({"invariant", "1;"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("       0        100.00             2\n"), std::string::npos);
}

TEST(Cli, InvariantPetersenRows) {
  const Result r = run_cli({"invariant", "petersen", "--output", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("edges,percent,subgraphs\n0,7.42,76\n1,13.18,135\n", 0), 0U);
  EXPECT_NE(r.out.find("\n15,0.10,1\n"), std::string::npos);
}

TEST(Cli, JsonIsStableAcrossModes) {
  const Result a = run_cli({"invariant", "c4", "-o", "json"});
  const Result b = run_cli({"invariant", "c4", "-o", "json", "--mode", "qpe"});
  EXPECT_EQ(a.out, R"({"n":4,"m":4,"counts":[7,4,4,0,1],"probabilities":[0.4375,0.25,0.25,0.0,0.0625],"source":"classical"})" "\n");
  EXPECT_EQ(b.out, R"({"n":4,"m":4,"counts":[7,4,4,0,1],"probabilities":[0.4375,0.25,0.25,0.0,0.0625],"source":"qpe-exact"})" "\n");
}

TEST(Cli, ShotsDeterministicPerSeed) {
  const std::vector<std::string> args{"invariant", "c4", "--mode", "shots", "--shots", "1000", "--seed", "5"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, CompareVerdicts) {
  EXPECT_NE(run_cli({"compare", "m1", "m2"}).out.find("verdict: invariant-equal, isomorphic\n"), std::string::npos);
  EXPECT_NE(run_cli({"compare", "m1", "m3"}).out.find("verdict: distinguished by invariant\n"), std::string::npos);
  EXPECT_NE(run_cli({"compare", "g1", "g2"}).out.find("verdict: invariant-equal, NOT isomorphic (counterexample)\n"),
            std::string::npos);
}

TEST(Cli, EncodeDeterministic) {
  const Result a = run_cli({"encode", "petersen", "--export", "qasm"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("qubit[10] g;\nqubit[4] e;\n"), std::string::npos);
  EXPECT_EQ(a.out, run_cli({"encode", "petersen", "--export", "qasm"}).out);
  EXPECT_NE(run_cli({"encode", "c4"}).out.find("qubit[3] e;"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const Result empty = run_cli({"encode", "3;"});
  EXPECT_EQ(empty.code, 2);
  EXPECT_NE(empty.err.find("empty graph: no oracle"), std::string::npos);
  EXPECT_EQ(run_cli({"invariant", "0 1\n0 0"}).code, 2);
  EXPECT_EQ(run_cli({"invariant", "c4", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"invariant", "0 1\n1 0", "--format", "graph6"}).code, 2);
  EXPECT_EQ(run_cli({"encode", "petersen", "--qubit-cap", "12"}).code, 3);
  EXPECT_EQ(run_cli({"survey", "--n", "9", "--no-cache"}).code, 3);
  EXPECT_EQ(run_cli({"survey", "--n", "8", "--source", "qpe", "--no-cache"}).code, 3);
}

TEST(Cli, SurveyAndCache) {
  const auto file = std::filesystem::temp_directory_path() / "qgi_cli_cache_test.jsonl";
  std::filesystem::remove(file);
  const std::vector<std::string> args{"survey", "--n", "6", "--cache", file.string()};
  const Result first = run_cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out,
            "n: classes distinct_quantum distinct_spectra\n"
            "1: 1 1 1\n2: 2 2 2\n3: 4 4 4\n4: 11 11 11\n5: 34 34 33\n6: 156 156 151\n");
  ASSERT_TRUE(std::filesystem::exists(file));
  EXPECT_EQ(run_cli(args).out, first.out);
  std::filesystem::remove(file);
  EXPECT_EQ(run_cli({"survey", "--n", "1", "--no-cache"}).out,
            "n: classes distinct_quantum distinct_spectra\n1: 1 1 1\n");
}

}  // namespace
}  // namespace qgi
