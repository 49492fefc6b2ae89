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

#include <fstream>
#include <sstream>
#include <string>

#include "covertlab/app.hpp"

namespace covertlab {
namespace {

struct GoldenCase {
  const char* command;
  const char* preset;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in) << path;
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, RegenerationIsByteIdentical) {
  const auto& [command_name, preset] = GetParam();
  const app::Command command = app::parse_command(command_name);
  config::RunConfig flags;
  flags.preset = preset;
  std::ostringstream out;
  ASSERT_EQ(app::execute(command, app::resolve(command, flags, std::nullopt), out), 0);
  const std::string golden =
      read_file(std::string(COVERTLAB_SOURCE_DIR) + "/tests/golden/" + preset + ".csv");
  EXPECT_EQ(out.str(), golden);
}

INSTANTIATE_TEST_SUITE_P(Figures, Golden,
                         ::testing::Values(GoldenCase{"sweep-nbar", "fig4a"},
                                           GoldenCase{"sweep-nbar", "fig4b"},
                                           GoldenCase{"sweep-nbar", "fig4c"},
                                           GoldenCase{"sweep-eta", "fig5a"},
                                           GoldenCase{"sweep-eta", "fig5b"},
                                           GoldenCase{"sweep-eta", "fig5c"},
                                           GoldenCase{"sweep-fso", "fig6"}),
                         [](const auto& info) { return std::string(info.param.preset); });

}  // namespace
}  // namespace covertlab
