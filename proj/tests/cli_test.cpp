// Copyright 2026 The Erdos Clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "erdos/json.hpp"

namespace erdos {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("erdos_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string File(const std::string& name, const std::string& content) {
    fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Execute(args, out_, err_);
  }

  Json Output() const { return Json::parse(out_.str()); }

  static std::string Slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CheckZeroInO) {
  std::string zero = File("zero.json", R"({"coords": {}})");
  ASSERT_EQ(Run({"check", "--point", zero, "--set", "O", "--schedule", "default"}), cli::kExitOk) << err_.str();
  Json doc = Output();
  EXPECT_EQ(doc["member"], true);
  EXPECT_FALSE(doc["trace"].empty());
}

TEST_F(CliTest, CheckMembershipAndTrace) {
  std::string p = File("p.json", R"({"coords": {"1": "2/1", "2": "1/1"}})");
  ASSERT_EQ(Run({"check", "--point", p, "--set", "A", "--alpha-base", "2", "--beta-base", "1/2"}), cli::kExitOk);
  EXPECT_EQ(Output()["member"], false);
  ASSERT_EQ(Run({"check", "--point", p, "--set", "Ealpha"}), cli::kExitOk);
  EXPECT_EQ(Output()["member"], false);
  ASSERT_EQ(Run({"check", "--point", p, "--set", "O"}), cli::kExitOk);
  EXPECT_EQ(Output()["member"], true);
  std::string q = File("q.json", R"({"coords": {"1": "3", "2": "1"}})");
  ASSERT_EQ(Run({"check", "--point", q, "--set", "O"}), cli::kExitOk);
  EXPECT_EQ(Output()["member"], false);
  ASSERT_EQ(Run({"check", "--point", q, "--set", "A", "--schedule", "default", "--n", "2"}), cli::kExitOk);
  EXPECT_EQ(Output()["member"], false);
}

TEST_F(CliTest, MalformedInputExitsWithTwo) {
  std::string bad = File("bad.json", R"({"coords": {"1": "1/0"}})");
  EXPECT_EQ(Run({"check", "--point", bad, "--set", "O"}), cli::kExitInvalidInput);
  EXPECT_NE(err_.str().find("invalid rational"), std::string::npos) << err_.str();

  std::string garbage = File("garbage.json", "{not json");
  EXPECT_EQ(Run({"check", "--point", garbage, "--set", "O"}), cli::kExitInvalidInput);
  EXPECT_EQ(Run({"check", "--point", Path("missing.json"), "--set", "O"}), cli::kExitInvalidInput);
  EXPECT_EQ(Run({"check", "--point", bad, "--set", "B"}), cli::kExitInvalidInput);
  EXPECT_EQ(Run({"frobnicate"}), cli::kExitInvalidInput);
  std::string ok = File("ok.json", R"({"coords": {}})");
  EXPECT_EQ(Run({"check", "--point", ok, "--set", "O", "--alpha-base", "2"}), cli::kExitInvalidInput);
  EXPECT_EQ(Run({"check", "--point", ok, "--set", "A", "--alpha-base", "16"}), cli::kExitInvalidInput);
  EXPECT_EQ(Run({"witness", "--ball-radius", "0", "--source", "ray"}), cli::kExitInvalidInput);
  EXPECT_EQ(Run({"verify", "--samples", "-3"}), cli::kExitInvalidInput);
  EXPECT_EQ(Run({"verify", "--claims", "9"}), cli::kExitInvalidInput);
}

TEST_F(CliTest, HelpExitsCleanly) {
  EXPECT_EQ(Run({"--help"}), cli::kExitOk);
  EXPECT_NE(out_.str().find("verify"), std::string::npos);
}

TEST_F(CliTest, Radius) {
  std::string p = File("p.json", R"({"coords": {"1": "2", "2": "1/2"}})");
  ASSERT_EQ(Run({"radius", "--point", p, "--kind", "open"}), cli::kExitOk) << err_.str();
  Json doc = Output();
  EXPECT_EQ(doc["kind"], "Claim3_r");
  EXPECT_EQ(doc["indices"]["l0"], 3);
  ASSERT_EQ(Run({"radius", "--point", p, "--kind", "open", "--max-den", "1"}), cli::kExitOk);
  EXPECT_EQ(Output()["bound"], "1/5");
  EXPECT_EQ(Run({"radius", "--point", p, "--kind", "closed"}), cli::kExitInvalidInput);
  ASSERT_EQ(Run({"radius", "--point", p, "--kind", "o-open"}), cli::kExitOk);
  EXPECT_EQ(Output()["kind"], "Claim4_W");
}

TEST_F(CliTest, WitnessAndRefute) {
  ASSERT_EQ(Run({"witness", "--ball-radius", "1", "--source", "ray", "--schedule", "default"}), cli::kExitOk);
  Json w = Output();
  EXPECT_EQ(w["q"], "1/2");
  EXPECT_EQ(w["l_star"], 2);
  EXPECT_EQ(w["x"]["coords"]["1"], "4/1");

  std::string pts = File("pts.json", R"({"points": [{"coords": {"1": "1"}}, {"coords": {"7": "-5"}}]})");
  std::string out = Path("v.json");
  ASSERT_EQ(Run({"refute", "--ball-radius", "1", "--source", "file:" + pts, "--out", out}), cli::kExitOk);
  EXPECT_TRUE(out_.str().empty());
  Json v = Json::parse(Slurp(out));
  EXPECT_EQ(v["verified"], true);
  EXPECT_EQ(v["witness"]["l_star"], 8);

  std::string bounded = File("bounded.json", R"([{"coords": {"1": "1"}}])");
  EXPECT_EQ(Run({"refute", "--ball-radius", "1", "--source", "file:" + bounded}), cli::kExitInvalidInput);
  EXPECT_NE(err_.str().find("source failure"), std::string::npos) << err_.str();
}

TEST_F(CliTest, CustomScheduleFile) {
  std::string s = File("s.json", R"({"alpha_scale": "3", "beta_scale": "5/2", "degree": 4})");
  ASSERT_EQ(Run({"witness", "--ball-radius", "1/3", "--source", "ray", "--schedule", s}), cli::kExitOk) << err_.str();
  for (const auto& c : Output()["checks"]) EXPECT_TRUE(c["holds"].get<bool>());
  std::string bad = File("bad_s.json", R"({"alpha_scale": "3", "beta_scale": "5/2", "degree": 2})");
  EXPECT_EQ(Run({"witness", "--ball-radius", "1", "--source", "ray", "--schedule", bad}), cli::kExitInvalidInput);
}

TEST_F(CliTest, VerifyWritesReportAndSummary) {
  std::string report = Path("r.json");
  ASSERT_EQ(Run({"verify", "--claims", "1,2,5,remark", "--samples", "50", "--report", report}), cli::kExitOk);
  EXPECT_NE(out_.str().find("C1 pass samples=50"), std::string::npos) << out_.str();
  Json doc = Json::parse(Slurp(report));
  ASSERT_EQ(doc.size(), 4u);
  EXPECT_EQ(doc[3]["claim"], "Remark");
  EXPECT_FALSE(doc[0].contains("elapsed_ms"));
  std::string first = Slurp(report);
  ASSERT_EQ(Run({"verify", "--claims", "1,2,5,remark", "--samples", "50", "--report", report, "--threads", "1"}),
            cli::kExitOk);
  EXPECT_EQ(Slurp(report), first);
  ASSERT_EQ(Run({"verify", "--claims", "1", "--samples", "5", "--report", report, "--timings"}), cli::kExitOk);
  EXPECT_TRUE(Json::parse(Slurp(report))[0].contains("elapsed_ms"));
}

}  // namespace
}  // namespace erdos
