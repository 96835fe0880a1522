#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ghzcert/cli.hpp"
#include "ghzcert/json_io.hpp"

namespace ghzcert {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "ghzcert");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ghzcert_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

constexpr const char* kTriangle =
    R"({"k": 3, "edges": [{"vertices": [1, 2]}, {"vertices": [2, 3]}, {"vertices": [1, 3]}]})";
constexpr const char* kPath = R"({"k": 3, "edges": [{"vertices": [1, 2]}, {"vertices": [2, 3]}]})";
constexpr const char* kCycle =
    R"({"k": 4, "edges": [{"vertices": [1, 2]}, {"vertices": [2, 3]}, {"vertices": [3, 4]}, {"vertices": [4, 1]}]})";
constexpr const char* kDisconnected = R"({"k": 4, "edges": [{"vertices": [1, 2]}, {"vertices": [3, 4]}]})";

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST_F(CliTest, RateTriangle) {
  const CliRun r = run({"rate", write("k3.json", kTriangle)});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "lambda=2, rate: 1/2 copies per GHZ (2 GHZ per copy)\n");
}

TEST_F(CliTest, RateMixedLevels) {
  const CliRun r = run({"rate", write("w.json", R"({"k":2,"edges":[{"vertices":[1,2],"level":4}]})"), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["min_cut_rank"], 4);
  EXPECT_EQ(j["ghz_per_copy"], 2.0);
}

TEST_F(CliTest, Connectivity) {
  const CliRun r = run({"connectivity", write("c4.json", kCycle), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["lambda"], 2);
  EXPECT_EQ(j["min_cut_rank"], 4);
  EXPECT_EQ(j["cut"]["crossing"].size(), 2u);
}

TEST_F(CliTest, DisconnectedIsInputError) {
  const CliRun r = run({"connectivity", write("d.json", kDisconnected)});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(Json::parse(r.err)["code"], "Disconnected");
}

TEST_F(CliTest, InvalidHypergraphNamesEdge) {
  const CliRun r = run({"rate", write("bad.json", R"({"k":2,"edges":[{"vertices":[1,2]},{"vertices":[1,3]}]})")});
  EXPECT_EQ(r.code, kExitInput);
  const Json j = Json::parse(r.err);
  EXPECT_EQ(j["code"], "VertexOutOfRange");
  EXPECT_EQ(j["index"], 1);
}

TEST_F(CliTest, MissingFileAndMalformedJson) {
  CliRun r = run({"rate", path("nope.json")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(Json::parse(r.err)["code"], "IoError");
  r = run({"rate", write("junk.json", "{not json")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(Json::parse(r.err)["code"], "ParseError");
}

TEST_F(CliTest, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"certify", "x.json"}, {"certify", "x.json", "--n", "1"}, {"epr", "x.json", "--a", "1"}}) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(Json::parse(r.err)["code"], "Usage");
  }
}

TEST_F(CliTest, Help) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("certify"), std::string::npos);
}

TEST_F(CliTest, Epr) {
  const CliRun r = run({"epr", write("c4.json", kCycle), "--a", "1", "--b", "3", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["t"], 2);
  EXPECT_EQ(j["rate"], 0.5);
  EXPECT_EQ(j["paths"].size(), 2u);
}

TEST_F(CliTest, Gpor) {
  const CliRun r = run({"gpor", write("c4.json", kCycle), "--seed", "4", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["d"], 2);
  EXPECT_TRUE(j["report"]["ok"]);
  EXPECT_EQ(j["vectors"].size(), 4u);
}

TEST_F(CliTest, CertifyVerifyRoundTrip) {
  const std::string in = write("path.json", kPath);
  CliRun r = run({"certify", in, "--n", "16", "--out", path("cert.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json cert = Json::parse(slurp(path("cert.json")));
  EXPECT_EQ(cert["M"], 16);
  r = run({"verify", path("cert.json"), "--deep"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  r = run({"verify", path("cert.json"), "--json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Json::parse(r.out)["ok"]);
}

TEST_F(CliTest, CertifyIsDeterministic) {
  const std::string in = write("k3.json", kTriangle);
  ASSERT_EQ(run({"certify", in, "--n", "6", "--seed", "11", "--out", path("a.json")}).code, kExitOk);
  ASSERT_EQ(run({"certify", in, "--n", "6", "--seed", "11", "--out", path("b.json")}).code, kExitOk);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const CliRun stdout_run = run({"certify", in, "--n", "6", "--seed", "11"});
  EXPECT_EQ(stdout_run.out, slurp(path("a.json")));
}

TEST_F(CliTest, VerifyFailureExitsOne) {
  const std::string in = write("k3.json", kTriangle);
  ASSERT_EQ(run({"certify", in, "--n", "4", "--out", path("cert.json")}).code, kExitOk);
  Json cert = Json::parse(slurp(path("cert.json")));
  cert["M"] = 13;
  write("bad.json", cert.dump());
  const CliRun r = run({"verify", path("bad.json")});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, GridGuardFromEnvironment) {
  const std::string in = write("k3.json", kTriangle);
  ::setenv("GHZCERT_MAX_GRID", "100", 1);
  const CliRun r = run({"certify", in, "--n", "5"});
  ::unsetenv("GHZCERT_MAX_GRID");
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(Json::parse(r.err)["code"], "GridTooLarge");
}

}  // namespace
}  // namespace ghzcert
