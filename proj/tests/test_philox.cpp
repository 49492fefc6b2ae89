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

#include <random>

#include "covertlab/philox.hpp"

namespace covertlab::philox {
namespace {

// Known-answer vectors for Philox4x32-10 from the Random123 distribution.
TEST(Philox, KnownAnswerZero) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
            (Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
}

TEST(Philox, KnownAnswerOnes) {
  EXPECT_EQ(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                       {0xffffffffu, 0xffffffffu}),
            (Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
}

TEST(Philox, KnownAnswerPi) {
  EXPECT_EQ(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                       {0xa4093822u, 0x299f31d0u}),
            (Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Philox, StreamsAreDeterministicAndDistinct) {
  Stream a(42, 0), b(42, 0), c(42, 1);
  bool differs = false;
  for (int i = 0; i < 64; ++i) {
    const auto va = a();
    EXPECT_EQ(va, b());
    differs |= va != c();
  }
  EXPECT_TRUE(differs);
}

TEST(Philox, StreamWalksBlocksInOrder) {
  Stream s(5, 9);
  for (std::uint64_t block = 0; block < 3; ++block) {
    const Counter expected = block_at(5, 9, block);
    for (int lane = 0; lane < 4; ++lane) EXPECT_EQ(s(), expected[lane]);
  }
}

TEST(Philox, UniformRangeAndMean) {
  Stream s(1, 2);
  double sum = 0.0;
  const int count = 100000;
  for (int i = 0; i < count; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Standard error of the mean is 1/sqrt(12 count) ~ 9e-4.
  EXPECT_NEAR(sum / count, 0.5, 5e-3);
}

TEST(Philox, UsableWithStandardDistributions) {
  Stream s(3, 4);
  std::uniform_int_distribution<int> dist(0, 9);
  for (int i = 0; i < 100; ++i) {
    const int v = dist(s);
    EXPECT_GE(v, 0);
    EXPECT_LE(v, 9);
  }
}

}  // namespace
}  // namespace covertlab::philox
