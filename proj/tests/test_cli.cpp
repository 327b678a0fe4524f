#include "schubss/cli.hpp"
#include "schubss/error.hpp"
#include "schubss/render.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace schubss;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = kExitOk) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run_cli(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, MinimalBFirstNode) {
  const Result r = run_cli({"minimal", "B", "3", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("-1·α_3"), std::string::npos) << r.out;
  const json j = run_json({"minimal", "B", "3", "1"});
  ASSERT_EQ(j["entries"].size(), 1u);
  EXPECT_EQ(j["entries"][0]["weight"], json({"0", "0", "-1"}));
  EXPECT_EQ(j["entries"][0]["word"], json({3, 2, 1}));
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(j["system"]["kind"], "B");
  EXPECT_EQ(j["system"]["rank"], 3);
}

TEST(Cli, MinimalTheoremSilent) {
  const Result r = run_cli({"minimal", "C", "3", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("theorem-silent"), std::string::npos) << r.out;
  const json j = run_json({"minimal", "C", "3", "3"});
  EXPECT_EQ(j["verdict"], "theorem-silent");
  EXPECT_FALSE(j.contains("match"));
}

TEST(Cli, MinimalJsonEntries) {
  const json j = run_json({"minimal", "B", "4", "2"});
  ASSERT_EQ(j["entries"].size(), 3u);
  std::vector<Weight> got;
  for (const auto& e : j["entries"]) got.push_back(weight_from_json(e["weight"]));
  std::sort(got.begin(), got.end());
  std::vector<Weight> want{-Weight::simple_root(4, 1), -Weight::simple_root(4, 2), -Weight::simple_root(4, 3)};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(Cli, FractionsAreExactStrings) {
  const json j = run_json({"minimal", "D", "5", "3"});
  bool seen = false;
  for (const auto& e : j["entries"])
    for (const auto& c : e["weight"]) {
      ASSERT_TRUE(c.is_string());
      seen |= c.get<std::string>() == "-3/2";
    }
  EXPECT_TRUE(seen);
  const json w = run_json({"weights", "D", "5"});
  EXPECT_NE(w.dump().find("\"5/4\""), std::string::npos) << w.dump();
}

TEST(Cli, CoxeterExamples) {
  const json g = run_json({"coxeter", "G", "2"});
  ASSERT_EQ(g["entries"].size(), 2u);
  for (const auto& e : g["entries"]) EXPECT_EQ(e["admits"], false);

  const json a = run_json({"coxeter", "A", "3"});
  ASSERT_EQ(a["entries"].size(), 4u);
  for (const auto& e : a["entries"]) {
    EXPECT_EQ(e["admits"], true);
    EXPECT_TRUE(e.contains("weight"));
  }

  const json e6 = run_json({"coxeter", "E", "6", "--workers", "2"});
  EXPECT_EQ(e6["entries"].size(), 32u);
  for (const auto& e : e6["entries"]) EXPECT_EQ(e["admits"], false);

  // The D4 biconditional does not hold as stated.
  EXPECT_EQ(run_cli({"coxeter", "D", "4"}).code, kExitFailure);
}

TEST(Cli, VerifyExamples) {
  EXPECT_EQ(run_cli({"verify", "pairing-bound", "--max-rank", "7"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "thm32", "--max-rank", "5"}).code, kExitOk);
  const Result p = run_cli({"verify", "prop31", "--max-rank", "6"});
  EXPECT_EQ(p.code, kExitOk);
  const json j = run_json({"verify", "thm42", "--max-rank", "5"}, kExitFailure);
  bool d4_failure = false;
  for (const auto& r : j["results"])
    if (r["status"] == "fail") d4_failure |= r["system"]["kind"] == "D" && r["system"]["rank"] == 4;
  EXPECT_TRUE(d4_failure);
}

TEST(Cli, ProgressGoesToDiagnostics) {
  const Result r = run_cli({"verify", "pairing-bound", "--max-rank", "3", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(json::accept(r.out));
}

TEST(Cli, AdmitsCommand) {
  EXPECT_EQ(run_cli({"admits", "A", "3", "--word", "1,3,2", "--weight", "1,2,1"}).code, kExitOk);
  const json j = run_json({"admits", "B", "3", "--word", "3,2,1", "--weight", "1,1,1"});
  EXPECT_EQ(j["match"], true);
  EXPECT_EQ(j["entries"][0]["weight"], json({"0", "0", "-1"}));
  EXPECT_EQ(run_cli({"admits", "A", "3", "--word", "1,3,2", "--weight", "0,0,0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"admits", "A", "3", "--word", "1,3,2", "--weight", "-1,0,0"}).code, kExitUsage);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"minimal", "Q", "3", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"minimal", "B", "3", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"minimal", "E", "6", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"minimal", "B", "1", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"minimal", "B", "3", "1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"minimal", "B", "3", "1", "--limit", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"coxeter", "A", "9"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "everything"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"minimal", "B", "7", "2", "--limit", "100"}).code, kExitLimit);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, EnvironmentLimit) {
  {
    const ScopedEnv env("SCHUBSS_ENUM_LIMIT", "10");
    EXPECT_EQ(run_cli({"minimal", "B", "3", "1"}).code, kExitLimit);
    // The flag wins over the environment.
    EXPECT_EQ(run_cli({"minimal", "B", "3", "1", "--limit", "1000"}).code, kExitOk);
  }
  {
    const ScopedEnv env("SCHUBSS_ENUM_LIMIT", "lots");
    EXPECT_EQ(run_cli({"minimal", "B", "3", "1"}).code, kExitUsage);
  }
}

TEST(Cli, CsvHeader) {
  const Result r = run_cli({"coxeter", "A", "3", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "kind,rank,word,lemma41,admits,witness,expected_kind,expected_admits,agreement");
}

// Parsing any report and re-serializing it reproduces the same bytes.
TEST(CliProperty, JsonRoundTrip) {
  const std::vector<std::vector<std::string>> commands = {
      {"minimal", "B", "4", "2"}, {"minimal", "D", "5", "5"}, {"minimal", "C", "4", "1"}, {"minimal", "A", "3", "2"},
      {"coxeter", "A", "4"},      {"coxeter", "G", "2"},      {"weights", "E", "8"},      {"verify", "invariants", "--max-rank", "3"}};
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const Result r = run_cli(args);
    ASSERT_TRUE(r.code == kExitOk || r.code == kExitFailure) << r.err;
    std::string body = r.out;
    while (!body.empty() && body.back() == '\n') body.pop_back();
    EXPECT_EQ(canonical(json::parse(body)), body) << args[0];
  }
}

TEST(Render, WeightJson) {
  const Weight w(std::vector<Rational>{Rational(-1, 2), 0, 3});
  const json j = weight_to_json(w);
  EXPECT_EQ(j, json({"-1/2", "0", "3"}));
  EXPECT_EQ(weight_from_json(j), w);
  EXPECT_EQ(weight_from_json(json({"2/4"})), Weight(std::vector<Rational>{Rational(1, 2)}));
  EXPECT_THROW(weight_from_json(json({1, 2})), UsageError);
  EXPECT_THROW(weight_from_json(json("1/2")), UsageError);
  EXPECT_THROW(parse_format("yaml"), UsageError);
}
