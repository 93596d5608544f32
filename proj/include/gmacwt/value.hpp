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

#pragma once

#include <cmath>

#include "gmacwt/model.hpp"

// Coalition value functions.  A coalition's worth is the secrecy sum-rate it
// can guarantee while every outsider jams with full power: one half log2 of
// the ratio between what the receiver decodes and what the eavesdropper
// overhears, clamped at zero.  All rates are in bits per channel use.

namespace gmacwt {

// [x]^+ : a coalition that would earn a negative rate simply stays silent.
inline double clamp_rate(double rate) { return rate > 0.0 ? rate : 0.0; }

// One-half log2((1 + receiver_gain*power) / (1 + eavesdropper_gain*power)),
// clamped at zero.  Both log arguments are at least one for non-negative
// inputs, so the clamp is the only guard needed.
inline double secrecy_rate(double receiver_gain, double eavesdropper_gain,
                           double power) {
  return clamp_rate(0.5 * std::log2((1.0 + receiver_gain * power) /
                                    (1.0 + eavesdropper_gain * power)));
}

// Value of `coalition` when the eavesdropper gain is shared.  Members whose
// budget does not strictly exceed the jamming they face stay silent; the
// remaining members pool their power.
inline double value_degraded(const ChannelParams& params, Coalition coalition) {
  if (!is_degraded(params)) {
    fail(Fault::kWrongGameKind,
         "value_degraded needs a shared eavesdropper gain");
  }
  const double jam =
      jammer_power(params, complement_of(coalition, params.size()));
  const Coalition talkers = active_set(params, coalition, jam);
  const double power = coalition_power(params, talkers);
  return secrecy_rate(effective_gain(jam),
                      std::get<DegradedGains>(params.gains).h, power);
}

// Grand-coalition value: nobody defects, only the standing jammer acts.
inline double sum_rate_degraded(const ChannelParams& params) {
  return value_degraded(params, full_coalition(params.size()));
}

// Value table for the two-transmitter game with per-transmitter gains.  A
// lone transmitter earns a positive rate only if its budget strictly tops the
// combined jamming it faces; the pair pools its power with no such filter
// (the clamp handles an unprofitable grand coalition).
inline double value_two_user(const ChannelParams& params, Coalition coalition) {
  if (!is_two_user(params)) {
    fail(Fault::kWrongGameKind,
         "value_two_user needs per-transmitter eavesdropper gains");
  }
  if (coalition >> 2) {
    fail(Fault::kIndexOutOfRange, "coalition member outside the game");
  }
  const auto& gains = std::get<TwoUserGains>(params.gains);
  switch (coalition) {
    case 0b00:
      return 0.0;
    case 0b01:
    case 0b10: {
      const int me = coalition == 0b01 ? 0 : 1;
      const int rival = 1 - me;
      const double jam = jammer_power(params, singleton(rival));
      if (!(params.gammas[me] > jam)) return 0.0;
      const double gain = me == 0 ? gains.h1 : gains.h2;
      return secrecy_rate(effective_gain(jam), gain, params.gammas[me]);
    }
    default: {
      const double pooled = params.gammas[0] + params.gammas[1];
      const double overheard =
          1.0 + gains.h1 * params.gammas[0] + gains.h2 * params.gammas[1];
      return clamp_rate(0.5 *
                        std::log2((1.0 + ambient_gain(params) * pooled) /
                                  overheard));
    }
  }
}

inline double coalition_value(const ChannelParams& params,
                              Coalition coalition) {
  if (is_degraded(params)) return value_degraded(params, coalition);
  return value_two_user(params, coalition);
}

}  // namespace gmacwt
