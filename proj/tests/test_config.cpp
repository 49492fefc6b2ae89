// Copyright 2026 The covertlab Authors
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


#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "covertlab/app.hpp"
#include "covertlab/errors.hpp"
#include "covertlab/run_config.hpp"
#include "covertlab/sparse.hpp"

namespace covertlab {
namespace {

std::string run(app::Command command, const config::RunConfig& c, int expected_status = 0) {
  std::ostringstream out;
  EXPECT_EQ(app::execute(command, c, out), expected_status);
  return out.str();
}

TEST(Presets, FigureParameters) {
  const auto a = config::preset("fig4a");
  EXPECT_EQ(*a.command, "sweep-nbar");
  EXPECT_EQ(*a.eta, 0.95);
  EXPECT_EQ(*a.n, 1e8);
  EXPECT_EQ(*a.delta, 0.05);
  EXPECT_EQ(*config::preset("fig4b").eta, 0.8);
  EXPECT_EQ(*config::preset("fig4c").eta, 0.65);
  EXPECT_EQ(*config::preset("fig4a-text").n, 6e10);
  EXPECT_EQ(*config::preset("fig5a").nbar_b, 1e-6);
  EXPECT_EQ(*config::preset("fig5b").nbar_b, 1e-3);
  EXPECT_EQ(*config::preset("fig5c").nbar_b, 1e-1);
  EXPECT_EQ(*config::preset("fig6").bandwidth, 1e10);
  EXPECT_EQ(*config::preset("fig6-text").bandwidth, 1e9);
  EXPECT_EQ(config::preset_names().size(), 11u);
  EXPECT_THROW(config::preset("fig7"), ParseError);
}

TEST(ConfigText, ParsesKeysAndComments) {
  const auto c = config::parse_config_text(
      "# run\n"
      "eta = 0.9\n"
      "nbar_b=0.01\n"
      "\n"
      "grid=list:0.1,0.2\n"
      "seed=12\n");
  EXPECT_EQ(*c.eta, 0.9);
  EXPECT_EQ(*c.nbar_b, 0.01);
  EXPECT_EQ(*c.grid, "list:0.1,0.2");
  EXPECT_EQ(*c.seed, 12u);
  EXPECT_FALSE(c.n);
}

TEST(ConfigText, ErrorsNameTheLine) {
  try {
    config::parse_config_text("eta=0.5\nn=lots\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(config::parse_config_text("colour=red\n"), ParseError);
  EXPECT_THROW(config::parse_config_text("eta\n"), ParseError);
  EXPECT_THROW(config::parse_config_text("seed=1.5\n"), ParseError);
}

TEST(Resolve, PresetThenFileThenFlags) {
  const std::string path = ::testing::TempDir() + "covertlab_resolve.cfg";
  {
    std::ofstream f(path);
    f << "preset=fig4a\nn=2e8\ndelta=0.1\n";
  }
  config::RunConfig flags;
  flags.delta = 0.02;
  const auto c = app::resolve(app::Command::kSweepNbar, flags, path);
  EXPECT_EQ(*c.eta, 0.95);
  EXPECT_EQ(*c.n, 2e8);
  EXPECT_EQ(*c.delta, 0.02);
  EXPECT_EQ(*c.command, "sweep-nbar");
  std::remove(path.c_str());
}

TEST(Resolve, PresetMustMatchCommand) {
  config::RunConfig flags;
  flags.preset = "fig5a";
  EXPECT_THROW(app::resolve(app::Command::kSweepNbar, flags, std::nullopt), ParseError);
  EXPECT_THROW(app::resolve(app::Command::kPlan, {}, std::string("/nonexistent.cfg")), ParseError);
}

TEST(Commands, NamesRoundTrip) {
  for (auto c : {app::Command::kSweepNbar, app::Command::kSweepEta, app::Command::kSweepFso,
                 app::Command::kPlan, app::Command::kVerify, app::Command::kSampleSecret}) {
    EXPECT_EQ(app::parse_command(app::command_name(c)), c);
  }
  EXPECT_THROW(app::parse_command("sweep"), ParseError);
}

TEST(Execute, SweepEchoesSettings) {
  config::RunConfig c;
  c.eta = 0.9;
  c.grid = "list:0.001,0.01";
  const std::string out = run(app::Command::kSweepNbar, c);
  EXPECT_NE(out.find("# eta=0.9\n"), std::string::npos);
  EXPECT_NE(out.find("# n=1e+08\n"), std::string::npos);
  EXPECT_NE(out.find("# asymptote_ebits="), std::string::npos);
  EXPECT_NE(out.find("abscissa,optimal_ebits"), std::string::npos);
  EXPECT_THROW(run(app::Command::kSweepNbar, {}), ParseError);
}

TEST(Execute, SweepIsByteDeterministic) {
  config::RunConfig flags;
  flags.preset = "fig5c";
  const auto c = app::resolve(app::Command::kSweepEta, flags, std::nullopt);
  EXPECT_EQ(run(app::Command::kSweepEta, c), run(app::Command::kSweepEta, c));
}

TEST(Execute, PlanFields) {
  config::RunConfig c;
  c.eta = 0.95;
  c.nbar_b = 1e-3;
  const std::string out = run(app::Command::kPlan, c);
  for (const char* key : {"field,value\n", "\nq,", "\nexpected_nonzero_uses,", "\nr_sr,",
                          "\nr_dr,", "\noptimal_ebits,", "\nsingle_rail_ebits,",
                          "\ndual_rail_ebits,", "\nlog_k1_bits,", "\nlog_k2_bits,",
                          "\nreason,\n"}) {
    EXPECT_NE(out.find(key), std::string::npos) << key;
  }
}

TEST(Execute, VerifyReportsStatus) {
  config::RunConfig c;
  c.suite = "chi2";
  const std::string ok = run(app::Command::kVerify, c);
  EXPECT_NE(ok.find("# passed 3/3"), std::string::npos);
  c.tolerance_scale = 0.0;
  const std::string bad = run(app::Command::kVerify, c, 1);
  EXPECT_NE(bad.find(",FAIL\n"), std::string::npos);
}

TEST(Execute, SampleSecretFromBudget) {
  config::RunConfig c;
  c.eta = 0.6;
  c.nbar_b = 0.2;
  c.n = 1e6;
  c.seed = 5;
  const std::string out = run(app::Command::kSampleSecret, c);
  const sparse::SecretPair s = sparse::parse_secret(out);
  EXPECT_EQ(s.x.size(), 1000000u);
  const double q = *sparse::q_from_budget({0.6, 0.2}, {0.05, 1e6});
  EXPECT_TRUE(sparse::in_window(s.weight(), {1000000, q, 0.01}));
  EXPECT_EQ(out, run(app::Command::kSampleSecret, c));
}

TEST(Execute, SampleSecretValidatesN) {
  config::RunConfig c;
  c.q = 0.2;
  c.n = 10.5;
  EXPECT_THROW(run(app::Command::kSampleSecret, c), DomainError);
  c.n = 20;
  const sparse::SecretPair s = sparse::parse_secret(run(app::Command::kSampleSecret, c));
  EXPECT_EQ(s.x.size(), 20u);
}

}  // namespace
}  // namespace covertlab
