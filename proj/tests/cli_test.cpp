// Copyright 2026 The satd-scope Authors
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
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace satd {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = SATD_FIXTURE_DIR;
const fs::path kPlan = SATD_PLAN_FILE;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "satd-scope");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    work_ = fs::temp_directory_path() /
            ("satd_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
    fs::remove_all(work_);
    fs::create_directories(work_);
    fs::copy(kFixtures / "two_projects", work_ / "corpus", fs::copy_options::recursive);
    spit(work_ / "config.json", R"({"roots": ["corpus"], "cache_dir": "cache"})");
  }
  void TearDown() override { fs::remove_all(work_); }

  fs::path work_;
};

TEST_F(CliTest, EndToEnd) {
  Outcome scan = invoke({"scan", "--config", (work_ / "config.json").string()});
  ASSERT_EQ(scan.code, 0) << scan.err;
  EXPECT_NE(scan.out.find("scanned 2 projects"), std::string::npos) << scan.out;
  Outcome analyze = invoke({"analyze", "--cache", (work_ / "cache").string(), "--plan", kPlan.string(),
                     "--out", (work_ / "out").string()});
  ASSERT_EQ(analyze.code, 0) << analyze.err;
  EXPECT_TRUE(fs::exists(work_ / "out" / "metrics.json"));
  EXPECT_TRUE(fs::exists(work_ / "out" / "tests.json"));
  Outcome report = invoke({"report", "--metrics", (work_ / "out" / "metrics.json").string(), "--format",
                    "md", "--format", "csv,json", "--out", (work_ / "out").string()});
  ASSERT_EQ(report.code, 0) << report.err;
  const std::string md = slurp(work_ / "out" / "report.md");
  EXPECT_NE(md.find("| 1-100 | 2 |"), std::string::npos) << md;
  for (const char* name : {"localization.csv", "header_ns.csv", "nonheader_np.csv",
                           "nonheader_ns.csv", "pattern_small.csv", "pattern_medium.csv",
                           "pattern_large.csv", "tests.csv", "report.json"}) {
    EXPECT_TRUE(fs::exists(work_ / "out" / name)) << name;
  }
}

TEST_F(CliTest, AcceptanceCorpusShowsMoreNonHeaderSatd) {
  spit(work_ / "acc.json", R"({"roots": [")" + (kFixtures / "acceptance_corpus").generic_string() +
                               R"("], "cache_dir": "acc-cache"})");
  ASSERT_EQ(invoke({"scan", "--config", (work_ / "acc.json").string()}).code, 0);
  ASSERT_EQ(invoke({"analyze", "--cache", (work_ / "acc-cache").string(), "--plan",
                    kPlan.string(), "--out", (work_ / "out").string()})
                .code,
            0);
  ASSERT_EQ(invoke({"report", "--metrics", (work_ / "out" / "metrics.json").string(), "--format",
                    "csv,md", "--out", (work_ / "out").string()})
                .code,
            0);
  // Hand counts: header 2/10, 1/6, 1/5; non-header 5/10, 4/8, 2/5.
  const double header_mean = (2.0 / 10 + 1.0 / 6 + 1.0 / 5) / 3;
  const double nonheader_mean = (5.0 / 10 + 4.0 / 8 + 2.0 / 5) / 3;
  const std::string csv = slurp(work_ / "out" / "localization.csv");
  const auto row = csv.substr(csv.find("\nSMALL,") + 1);
  std::vector<std::string> f;
  std::stringstream ss(row.substr(0, row.find('\n')));
  for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
  ASSERT_GE(f.size(), 7u) << csv;
  EXPECT_EQ(f[2], "3");
  EXPECT_NEAR(std::stod(f[3]), header_mean, 1e-15);
  EXPECT_NEAR(std::stod(f[5]), nonheader_mean, 1e-15);
  EXPECT_GT(std::stod(f[5]), std::stod(f[3]));
  const std::string md = slurp(work_ / "out" / "report.md");
  EXPECT_NE(md.find("| 1-100 | 3 | 0.189 | 0.200 | 0.467 | 0.500 |"), std::string::npos) << md;
}

TEST_F(CliTest, MalformedPlanExitsTwoWithLineNumber) {
  ASSERT_EQ(invoke({"scan", "--config", (work_ / "config.json").string()}).code, 0);
  spit(work_ / "bad.plan", "# header\nok, locality, NON_HEADER, HEADER, ALL\nbroken line\n");
  Outcome r = invoke({"analyze", "--cache", (work_ / "cache").string(), "--plan",
               (work_ / "bad.plan").string(), "--out", (work_ / "out").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingCacheNamesScan) {
  Outcome r = invoke({"analyze", "--cache", (work_ / "nope").string(), "--plan", kPlan.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("satd-scope scan"), std::string::npos) << r.err;
}

TEST_F(CliTest, EmptyMetricsRenderHeadersOnlyCsv) {
  spit(work_ / "metrics.json", R"({"schema": "satd-scope/metrics/1", "projects": []})");
  Outcome r = invoke({"report", "--metrics", (work_ / "metrics.json").string(), "--format", "csv",
               "--out", (work_ / "out").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(work_ / "out")) {
    const std::string text = slurp(e.path());
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1) << e.path();
    ++files;
  }
  EXPECT_EQ(files, 8u);
}

TEST_F(CliTest, WarningsOverThresholdExitOne) {
  fs::create_symlink(work_ / "missing.java", work_ / "corpus" / "beta" / "Dead.java");
  Outcome r = invoke({"scan", "--config", (work_ / "config.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("beta/Dead.java"), std::string::npos) << r.err;
  spit(work_ / "config.json", R"({"roots": ["corpus"], "cache_dir": "cache", "warn_threshold": 1})");
  EXPECT_EQ(invoke({"scan", "--config", (work_ / "config.json").string()}).code, 0);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  spit(work_ / "bad.json", R"({"roots": ["absent"], "cache_dir": "cache"})");
  Outcome r = invoke({"scan", "--config", (work_ / "bad.json").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("root does not exist"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"scan", "--config", (work_ / "none.json").string()}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"scan"}).code, 2);
  spit(work_ / "metrics.json", R"({"schema": "satd-scope/metrics/1", "projects": []})");
  EXPECT_EQ(invoke({"report", "--metrics", (work_ / "metrics.json").string(), "--format", "pdf"}).code,
            2);
}

TEST_F(CliTest, HelpExitsZero) {
  Outcome r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("scan"), std::string::npos);
}

}  // namespace
}  // namespace satd
