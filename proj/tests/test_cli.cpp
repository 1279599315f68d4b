// Copyright 2026 The xsteer Authors
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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(XSTEER_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(cli, point_bell_state) {
  const CliResult r = run("point --family pure --alpha 0.7853981633974483 --channel none");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["report"]["C"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["report"]["B"].get<double>(), 2.8284271247461903, 1e-12);
  EXPECT_NEAR(j["report"]["S"].get<double>(), 6.0, 1e-12);
  EXPECT_TRUE(j["report"]["steerable"].get<bool>());
}

TEST(cli, point_separable_states) {
  for (const char* args : {"point --family mixed --v 0.5 --channel none",
                           "point --family pure --alpha 0 --channel ad --strength 0.3"}) {
    const CliResult r = run(args);
    ASSERT_EQ(r.code, 0) << args;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["report"]["C"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["report"]["B"].get<double>(), 2.0, 1e-12);
    EXPECT_NEAR(j["report"]["S"].get<double>(), 2.0, 1e-12);
    EXPECT_FALSE(j["report"]["entangled"].get<bool>());
  }
}

TEST(cli, point_accepts_state_json) {
  const CliResult r = run("point --state '{\"r11\":0.5,\"r22\":0,\"r33\":0,\"r44\":0.5,\"r14\":0.5,\"r23\":0}'");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["report"]["S"].get<double>(), 6.0, 1e-12);
}

TEST(cli, usage_and_domain_errors_exit_2) {
  EXPECT_EQ(run("point --family pure --alpha 2 --channel none").code, 2);
  EXPECT_EQ(run("point --family pure --alpha 0.3 --channel ad --strength 1.2").code, 2);
  EXPECT_EQ(run("point --family bogus --alpha 0.3").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("threshold --family pure --alpha pi/4 --channel ad --grid d:0:1:10 --measure B").code, 2);
  EXPECT_EQ(run("point --state '{\"r11\":0.25,\"r22\":0.25,\"r33\":0.25,\"r44\":0.25,\"r14\":0.6,\"r23\":0}'").code,
            2);
}

TEST(cli, threshold_bell_under_damping) {
  const CliResult r = run("threshold --family pure --alpha pi/4 --channel ad --grid d:0:1 --measure B");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["crossings"].size(), 1u);
  EXPECT_NEAR(j["crossings"][0]["param"].get<double>(), 0.5, 1e-9);
  EXPECT_EQ(j["crossings"][0]["direction"], "falling");
}

TEST(cli, threshold_steering_methods_agree) {
  const CliResult closed = run("threshold --family pure --alpha pi/4 --channel ad --grid d:0:1 --measure S");
  const CliResult oracle =
      run("threshold --family pure --alpha pi/4 --channel ad --grid d:0:1 --measure S --method oracle");
  ASSERT_EQ(closed.code, 0);
  ASSERT_EQ(oracle.code, 0);
  const double a = nlohmann::json::parse(closed.out)["crossings"][0]["param"].get<double>();
  const double b = nlohmann::json::parse(oracle.out)["crossings"][0]["param"].get<double>();
  EXPECT_NEAR(a, b, 1e-9);
  EXPECT_GT(a, 0.65);
  EXPECT_LT(a, 0.80);
}

TEST(cli, threshold_tangent_and_symmetric_pairs) {
  const CliResult pf = run("threshold --family pure --alpha pi/4 --channel pf --grid p:0:1 --measure C");
  ASSERT_EQ(pf.code, 0);
  const auto j = nlohmann::json::parse(pf.out);
  ASSERT_EQ(j["crossings"].size(), 1u);
  EXPECT_EQ(j["crossings"][0]["direction"], "tangent");
  EXPECT_NEAR(j["crossings"][0]["param"].get<double>(), 0.5, 1e-9);

  const CliResult bf = run("threshold --family pure --alpha pi/8 --channel bf --grid p:0:1 --measure S --format csv");
  ASSERT_EQ(bf.code, 0);
  const auto rows = csv_rows(bf.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"p", "direction"}));
  EXPECT_NEAR(std::stod(rows[1][0]) + std::stod(rows[2][0]), 1.0, 1e-9);
}

TEST(cli, threshold_without_crossing_exits_3) {
  const CliResult r = run("threshold --family pure --alpha pi/4 --channel pd --grid d:0:0.99 --measure S");
  EXPECT_EQ(r.code, 3);
}

TEST(cli, sweep_csv) {
  const CliResult r = run("sweep --family pure --channel none --grid alpha:0:pi/2:101 --measure all --format csv");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 102u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"alpha", "C", "B", "S"}));
  EXPECT_NEAR(std::stod(rows[51][1]), 1.0, 1e-11);
  EXPECT_NEAR(std::stod(rows[51][2]), 2 * std::sqrt(2.0), 1e-11);
  EXPECT_NEAR(std::stod(rows[51][3]), 6.0, 1e-11);
}

TEST(cli, sweep_two_dimensional) {
  const CliResult r = run("sweep --family mixed --channel bf --grid v:0:1:11 --grid p:0:1:11 --measure all --format csv");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 122u);
  for (const auto& row : rows) {
    if (row[0] != "0.5") continue;
    EXPECT_NEAR(std::stod(row[2]), 0.0, 1e-11);
    EXPECT_NEAR(std::stod(row[4]), 2.0, 1e-11);
  }
}

TEST(cli, sweep_json_and_determinism) {
  const std::string args = "sweep --family pure --channel ad --grid alpha:0:pi/2:7 --grid d:0:1:5 --measure S";
  const CliResult a = run(args + " --format json");
  const CliResult b = run(args + " --format json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(nlohmann::json::accept(a.out));
}

TEST(cli, figure_writes_files_and_io_error_exits_4) {
  const auto dir = std::filesystem::temp_directory_path() / "xsteer_cli_fig";
  std::filesystem::remove_all(dir);
  const CliResult r = run("figure --id fig1b --out " + dir.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(dir / "fig1b.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(csv_rows(ss.str()).size(), 102u);
  std::filesystem::remove_all(dir);

  EXPECT_EQ(run("figure --id fig1b --out /proc/xsteer_not_writable").code, 4);
}
