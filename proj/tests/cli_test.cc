// Copyright 2026 The degdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "degdiv/generators.h"
#include "degdiv/graph_io.h"

namespace degdiv {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "degdiv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("degdiv_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string graph_file(const std::string& name, const Graph& g) const {
    write_edge_list_file(path(name), g);
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenTuran) {
  const CliRun r =
      run({"gen", "--family", "turan", "--n", "12", "--k", "3", "--out", path("t.txt")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "12 48 turan\n");
  EXPECT_EQ(slurp(path("t.txt")).substr(0, 6), "12 48\n");
  const json m = json::parse(slurp(path("t.txt.manifest.json")));
  EXPECT_EQ(m["command"], "gen");
  EXPECT_EQ(m["outputs"][0], path("t.txt"));
}

TEST_F(CliTest, GenGnpToStdout) {
  const CliRun r = run({"gen", "--family", "gnp", "--n", "10", "--p", "0", "--seed", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "10 0\n");
  EXPECT_EQ(r.err, "10 0 gnp\n");
}

TEST_F(CliTest, GenErrors) {
  EXPECT_EQ(run({"gen", "--family", "turan", "--n", "12"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "turan", "--n", "3", "--k", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "petersen", "--n", "10"}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}

TEST_F(CliTest, ExactTuranAndClique) {
  const CliRun t = run({"exact", "--graph", graph_file("t.txt", turan(12, 3))});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  const json jt = json::parse(t.out);
  EXPECT_EQ(jt["f"], 3);
  EXPECT_EQ(jt["hom"], 4);

  const CliRun k =
      run({"exact", "--graph", graph_file("k5.txt", turan(5, 5)), "--out", path("k5.json")});
  ASSERT_EQ(k.code, kExitOk);
  const json jk = json::parse(k.out);
  EXPECT_EQ(jk["f"], 1);
  EXPECT_EQ(jk["hom"], 5);
  EXPECT_EQ(json::parse(slurp(path("k5.json"))), jk);
  EXPECT_TRUE(fs::exists(path("k5.json.manifest.json")));
}

TEST_F(CliTest, ExactOverCap) {
  const std::string g = graph_file("big.txt", gnp(40, 0.5, 1));
  EXPECT_EQ(run({"exact", "--graph", g, "--what", "f"}).code, kExitTooLarge);
  const CliRun hom = run({"exact", "--graph", g, "--what", "hom"});
  EXPECT_EQ(hom.code, kExitOk);
  EXPECT_FALSE(json::parse(hom.out).contains("f"));
}

TEST_F(CliTest, MissingFileIsIoError) {
  EXPECT_EQ(run({"exact", "--graph", path("absent.txt")}).code, kExitIo);
}

TEST_F(CliTest, FindOnPath) {
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}};
  const std::string g = graph_file("p3.txt", Graph::from_edges(3, e));
  const CliRun r = run({"find", "--graph", g, "--seed", "5", "--out", path("w.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["seed"], 5);
  const json m = json::parse(slurp(path("w.json.manifest.json")));
  EXPECT_EQ(m["seed"], 5);

  const CliRun v = run({"verify", "--graph", g, "--witness", path("w.json")});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(json::parse(v.out)["valid"], true);
}

TEST_F(CliTest, FindWithoutSeedLogsOne) {
  const std::string g = graph_file("g.txt", gnp(12, 0.5, 2));
  const CliRun r = run({"find", "--graph", g, "--out", path("w.json")});
  ASSERT_EQ(r.code, kExitOk);
  const json m = json::parse(slurp(path("w.json.manifest.json")));
  EXPECT_TRUE(m["seed"].is_number_unsigned());
  EXPECT_EQ(m["seed"], json::parse(r.out)["seed"]);
}

TEST_F(CliTest, FindConfig) {
  const std::string g = graph_file("g.txt", gnp(12, 0.5, 2));
  std::ofstream(path("cfg.json")) << R"({"schema":1,"preset":"asymptotic","greedy_restarts":2})";
  EXPECT_EQ(run({"find", "--graph", g, "--seed", "1", "--config", path("cfg.json")}).code, kExitOk);
  std::ofstream(path("bad.json")) << R"({"schema":1,"nonsense":2})";
  EXPECT_EQ(run({"find", "--graph", g, "--seed", "1", "--config", path("bad.json")}).code,
            kExitUsage);
}

TEST_F(CliTest, VerifyRejectsWrongWitness) {
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}};
  const std::string g = graph_file("p3.txt", Graph::from_edges(3, e));
  std::ofstream(path("w.json")) << R"({"S":[0,1,2],"U":[0,2]})";
  const CliRun r = run({"verify", "--graph", g, "--witness", path("w.json")});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_EQ(json::parse(r.out)["valid"], false);
}

TEST_F(CliTest, BadTrivialAndUniform) {
  const std::string g = graph_file("g.txt", gnp(20, 0.5, 3));
  const CliRun t = run({"bad", "--graph", g, "--dist", R"({"type":"trivial"})", "--u", "0", "--v",
                     "1", "--trials", "2000", "--seed", "1"});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_DOUBLE_EQ(json::parse(t.out)["value"].get<double>(), 1.0);

  EXPECT_EQ(run({"bad", "--graph", g, "--dist", R"({"type":"trivial"})", "--u", "0", "--v", "0",
                 "--trials", "2000"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"bad", "--graph", g, "--dist", R"({"type":"trivial"})", "--u", "0", "--v", "1",
                 "--trials", "10"})
                .code,
            kExitUsage);
  const CliRun b = run({"bad", "--graph", g, "--dist",
                     R"({"type":"blended","U":[0,1,2],"beta":0.05})", "--u", "3", "--v", "4",
                     "--trials", "2000", "--seed", "2"});
  EXPECT_EQ(b.code, kExitOk) << b.err;
}

TEST_F(CliTest, ExperimentIsReproducible) {
  std::ofstream(path("sweep.json"))
      << R"({"schema":1,"n":[256,512],"p_points":3,"seeds":2,"regime":"dense","base_seed":4})";
  const CliRun a = run({"--threads", "1", "experiment", "--config", path("sweep.json"), "--out",
                       path("a")});
  const CliRun b = run({"--threads", "3", "experiment", "--config", path("sweep.json"), "--out",
                       path("b")});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(slurp(path("a/sweep.csv")), slurp(path("b/sweep.csv")));
  EXPECT_FALSE(fs::exists(path("a/sweep.partial.csv")));
  const json m = json::parse(slurp(path("a/manifest.json")));
  EXPECT_EQ(m["command"], "experiment");
  EXPECT_EQ(m["outputs"].size(), 2u);
  EXPECT_EQ(json::parse(slurp(path("a/summary.json"))), json::parse(a.out));
}

TEST_F(CliTest, ExperimentBadConfig) {
  std::ofstream(path("sweep.json")) << R"({"schema":1,"regime":"other"})";
  EXPECT_EQ(run({"experiment", "--config", path("sweep.json"), "--out", path("x")}).code,
            kExitUsage);
  EXPECT_EQ(run({"experiment", "--config", path("none.json"), "--out", path("x")}).code, kExitIo);
}

}  // namespace
}  // namespace degdiv
