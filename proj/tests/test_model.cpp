// Copyright 2026 The gmacwt Authors.
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

#include "gmacwt/model.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

namespace gmacwt {
namespace {

ChannelParams TwoBudget() {
  ChannelParams p;
  p.gammas = {1.0, 0.4};
  p.gains = DegradedGains{0.3};
  p.lambda = 0.1;
  return p;
}

TEST(Coalition, BasicOps) {
  EXPECT_EQ(coalition_size(0b1011u), 3);
  EXPECT_EQ(full_coalition(3), 0b111u);
  EXPECT_EQ(singleton(2), 0b100u);
  EXPECT_EQ(complement_of(0b001u, 3), 0b110u);
  EXPECT_TRUE(coalition_contains(0b101u, 2));
  EXPECT_FALSE(coalition_contains(0b101u, 1));
}

TEST(Validate, AcceptsValidParams) {
  EXPECT_NO_THROW(validate(TwoBudget()));
  ChannelParams two;
  two.gammas = {1.0, 2.0};
  two.gains = TwoUserGains{0.1, 1.5};  // gains above 1 are fine
  EXPECT_NO_THROW(validate(two));
  ChannelParams big_gain = TwoBudget();
  big_gain.gains = DegradedGains{5.0};  // no upper bound on the shared gain
  EXPECT_NO_THROW(validate(big_gain));
}

TEST(Validate, RejectsBadParams) {
  ChannelParams p = TwoBudget();
  p.gammas[1] = 0.0;
  try {
    validate(p);
    FAIL() << "expected a fault";
  } catch (const GameError& e) {
    EXPECT_EQ(e.fault(), Fault::kNonPositivePower);
    EXPECT_NE(std::string(e.what()).find("NonPositivePower"),
              std::string::npos);
  }

  p = TwoBudget();
  p.gammas[0] = -1.0;
  EXPECT_THROW(validate(p), GameError);

  p = TwoBudget();
  p.lambda = -0.1;
  try {
    validate(p);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.fault(), Fault::kNegativeLambda);
  }

  p = TwoBudget();
  p.gains = DegradedGains{-0.2};
  try {
    validate(p);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.fault(), Fault::kGainsOutOfRange);
  }

  p = TwoBudget();
  p.gammas = {};
  try {
    validate(p);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.fault(), Fault::kLengthMismatch);
  }

  p = TwoBudget();
  p.gammas.assign(kMaxTransmitters + 1, 1.0);
  try {
    validate(p);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.fault(), Fault::kTooManyTransmitters);
  }

  // Per-transmitter gains demand exactly two transmitters.
  p = TwoBudget();
  p.gammas = {1.0, 1.0, 1.0};
  p.gains = TwoUserGains{0.1, 0.2};
  try {
    validate(p);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.fault(), Fault::kGainCountMismatch);
  }
}

TEST(JammerPower, MatchesCoherentCombining) {
  const ChannelParams p = TwoBudget();
  // Only transmitter 2 jams: (sqrt(0.1) + sqrt(0.4))^2 = 0.9.
  EXPECT_NEAR(jammer_power(p, 0b10), 0.9, 1e-12);
  // Only transmitter 1 jams: (sqrt(0.1) + 1)^2.
  EXPECT_NEAR(jammer_power(p, 0b01), 1.7324555320336759, 1e-12);
}

TEST(JammerPower, EmptySetIsExactlyLambda) {
  ChannelParams p = TwoBudget();
  p.lambda = 0.1;
  EXPECT_EQ(jammer_power(p, 0), 0.1);  // bitwise, not just approximately
  p.lambda = 0.0;
  EXPECT_EQ(jammer_power(p, 0), 0.0);
}

TEST(JammerPower, MonotoneInDefectors) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> power(0.01, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    ChannelParams p;
    for (int l = 0; l < 4; ++l) p.gammas.push_back(power(rng));
    p.lambda = trial % 2 == 0 ? 0.0 : power(rng);
    for (Coalition s = 0; s < 16; ++s) {
      for (int l = 0; l < 4; ++l) {
        if (coalition_contains(s, l)) continue;
        EXPECT_LE(jammer_power(p, s), jammer_power(p, s | singleton(l)));
      }
    }
  }
}

TEST(JammerPower, RejectsOutOfRangeMembers) {
  const ChannelParams p = TwoBudget();
  EXPECT_THROW(jammer_power(p, 0b100), GameError);
}

TEST(ActiveSet, ThresholdIsStrict) {
  ChannelParams p;
  p.gammas = {1.0, 0.5, 0.5};
  EXPECT_EQ(active_set(p, 0b111, 0.5), 0b001u);  // exactly at the bar: out
  EXPECT_EQ(active_set(p, 0b111, 0.4999), 0b111u);
  EXPECT_EQ(active_set(p, 0b110, 0.4999), 0b110u);  // restricted to coalition
  EXPECT_EQ(active_set(p, 0b111, 2.0), 0u);
}

TEST(ActiveSet, ShrinksWithThreshold) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> power(0.01, 5.0);
  ChannelParams p;
  for (int l = 0; l < 5; ++l) p.gammas.push_back(power(rng));
  Coalition previous = full_coalition(5);
  for (double threshold = 0.0; threshold <= 5.0; threshold += 0.25) {
    const Coalition now = active_set(p, full_coalition(5), threshold);
    EXPECT_EQ(now & previous, now);  // active sets only lose members
    previous = now;
  }
}

TEST(ScaleGame, DividesPowersKeepsGains) {
  ChannelParams p = TwoBudget();
  const ChannelParams scaled = scale_game(p, 2.0);
  EXPECT_DOUBLE_EQ(scaled.gammas[0], 0.5);
  EXPECT_DOUBLE_EQ(scaled.gammas[1], 0.2);
  EXPECT_DOUBLE_EQ(scaled.lambda, 0.05);
  EXPECT_DOUBLE_EQ(std::get<DegradedGains>(scaled.gains).h, 0.3);
}

TEST(ScaleGame, ComposesMultiplicatively) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> power(0.01, 5.0);
  std::uniform_real_distribution<double> omega(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    ChannelParams p;
    for (int l = 0; l < 3; ++l) p.gammas.push_back(power(rng));
    p.lambda = power(rng);
    const double a = omega(rng);
    const double b = omega(rng);
    const ChannelParams twice = scale_game(scale_game(p, a), b);
    const ChannelParams once = scale_game(p, a * b);
    for (int l = 0; l < 3; ++l) {
      EXPECT_NEAR(twice.gammas[l], once.gammas[l],
                  1e-12 * std::fabs(once.gammas[l]));
    }
    EXPECT_NEAR(twice.lambda, once.lambda, 1e-12 * once.lambda + 1e-300);
  }
}

TEST(ScaleGame, RejectsNonPositiveOmega) {
  const ChannelParams p = TwoBudget();
  try {
    scale_game(p, 0.0);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.fault(), Fault::kNonPositiveOmega);
  }
  EXPECT_THROW(scale_game(p, -1.0), GameError);
}

TEST(EffectiveGain, AmbientMatchesLambda) {
  ChannelParams p = TwoBudget();
  EXPECT_DOUBLE_EQ(ambient_gain(p), 1.0 / 1.1);
  EXPECT_DOUBLE_EQ(effective_gain(0.0), 1.0);
}

}  // namespace
}  // namespace gmacwt
