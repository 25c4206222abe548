#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "evokit/cli.hpp"

using namespace evokit;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string demo(const std::string& name) { return std::string(EVOKIT_DEMO_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, TypeAndSquareDim) {
  auto r = run({"type", "--alg", "mu_4_10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[1,1,2]\n");
  EXPECT_EQ(run({"square-dim", "--alg", "mu_4_11"}).out, "3\n");
}

TEST(Cli, JsonOutputParses) {
  auto r = run({"h2", "--alg", "E1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["h2_dim"], 2);
  EXPECT_EQ(j["h2_positions"], Json::parse("[[2,1],[2,2]]"));
}

TEST(Cli, AlgebraFromFile) {
  auto r = run({"info", "--alg", demo("algebra_twisted.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["type"], Json::parse("[1,1,1]"));
}

TEST(Cli, DegenerateVerified) {
  auto r = run({"degenerate", "--from", "mu_3_4", "--g", demo("witness_mu34_mu33.json"), "--to", "mu_3_3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: verified"), std::string::npos);
}

TEST(Cli, DegenerateNoLimit) {
  auto r = run({"degenerate", "--g", demo("witness_no_limit.json"), "--format", "json"});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "no-limit");
  EXPECT_EQ(j["offending"][0]["valuation"], -2);
}

TEST(Cli, HasseDot) {
  auto r = run({"hasse", "--dim", "3", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t p = r.out.find(" -> "); p != std::string::npos; p = r.out.find(" -> ", p + 1)) ++edges;
  EXPECT_EQ(edges, 4u);
}

TEST(Cli, Obstructions) {
  auto r = run({"obstructions", "--from", "mu_4_5", "--to", "mu_4_6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_FALSE(j["type_ok"].get<bool>());
  EXPECT_FALSE(j["all_pass"].get<bool>());
}

TEST(Cli, Search) {
  auto r = run({"search", "--from", "mu_3_4", "--to", "mu_3_2", "--threads", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["found"].get<bool>());
  r = run({"search", "--from", "mu_4_5", "--to", "mu_4_6"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, Deformations) {
  std::string triv = temp_file("triv.json", R"({"base":"E1","coeffs":[[["0","1"],["0","0"]]]})");
  std::string nontriv = temp_file("nontriv.json", R"({"base":"E1","coeffs":[[["0","0"],["1","0"]]]})");
  std::string shifted = temp_file("shifted.json", R"({"base":"E1","coeffs":[[["1","0"],["1","0"]]]})");
  EXPECT_NE(run({"deform-trivial", "--def", triv}).out.find("trivial"), std::string::npos);
  EXPECT_EQ(Json::parse(run({"deform-trivial", "--def", nontriv, "--format", "json"}).out)["trivial"], false);
  auto r = run({"deform-equiv", "--d1", nontriv, "--d2", shifted, "--format", "json"});
  EXPECT_EQ(Json::parse(r.out)["equivalent"], true);
}

TEST(Cli, VerifyBuiltinData) {
  auto r = run({"verify-paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("16/16"), std::string::npos);
  EXPECT_NE(r.out.find("19/19"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"type"}).code, 2);
  EXPECT_EQ(run({"type", "--alg", "nope"}).code, 2);
  EXPECT_EQ(run({"hasse", "--dim", "7"}).code, 2);
  EXPECT_EQ(run({"type", "--alg", "mu_2_2", "--format", "xml"}).code, 2);
  std::string bad = temp_file("bad.json", R"({"dim":2,"matrix":[["1"]]})");
  auto r = run({"type", "--alg", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/matrix"), std::string::npos);
  EXPECT_EQ(run({"degenerate", "--from", "mu_3_4", "--to", "mu_3_3", "--g", "/nonexistent.json"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Binary, ExitCodes) {
  auto status = [](const std::string& args) {
    int raw = std::system((std::string(EVOKIT_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("type --alg mu_3_4"), 0);
  EXPECT_EQ(status("degenerate --g " + demo("witness_no_limit.json")), 1);
  EXPECT_EQ(status("type --alg nope"), 2);
}
