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

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Parameter records and coalition arithmetic for the Gaussian multiple-access
// wiretap channel with adversarial jamming.  L transmitters share a channel
// to one legitimate receiver while an eavesdropper listens in.  Transmitters
// that stay outside a coalition may dump their whole power budget on the
// channel as jamming, on top of a standing jammer of power lambda.  Noise
// variances are normalized to one; variance changes are modeled exclusively
// through scale_game.  Everything downstream (values, cores, allocations,
// rate regions) is a pure function of these records.

namespace gmacwt {

// Coalition bitmasks cap L at the word width; we keep L small enough that
// full 2^L tabulation stays cheap on a desk machine.
inline constexpr int kMaxTransmitters = 24;

enum class Fault {
  kNonPositivePower,
  kNegativeLambda,
  kGainCountMismatch,
  kGainsOutOfRange,
  kUnsupportedGame,
  kTooManyTransmitters,
  kWrongGameKind,
  kLengthMismatch,
  kNonPositiveOmega,
  kLambdaNotZero,
  kZeroGrandValue,
  kIndexOutOfRange,
  kEqualPowers,
  kInactiveIndex,
  kPowerBelowLambda,
  kInvalidPowerAllocation,
  kDomainViolation,
};

inline const char* fault_name(Fault fault) {
  switch (fault) {
    case Fault::kNonPositivePower: return "NonPositivePower";
    case Fault::kNegativeLambda: return "NegativeLambda";
    case Fault::kGainCountMismatch: return "GainCountMismatch";
    case Fault::kGainsOutOfRange: return "GainsOutOfRange";
    case Fault::kUnsupportedGame: return "UnsupportedGame";
    case Fault::kTooManyTransmitters: return "TooManyTransmitters";
    case Fault::kWrongGameKind: return "WrongGameKind";
    case Fault::kLengthMismatch: return "LengthMismatch";
    case Fault::kNonPositiveOmega: return "NonPositiveOmega";
    case Fault::kLambdaNotZero: return "LambdaNotZero";
    case Fault::kZeroGrandValue: return "ZeroGrandValue";
    case Fault::kIndexOutOfRange: return "IndexOutOfRange";
    case Fault::kEqualPowers: return "EqualPowers";
    case Fault::kInactiveIndex: return "InactiveIndex";
    case Fault::kPowerBelowLambda: return "PowerBelowLambda";
    case Fault::kInvalidPowerAllocation: return "InvalidPowerAllocation";
    case Fault::kDomainViolation: return "DomainViolation";
  }
  return "UnknownFault";
}

// Every domain failure surfaces as a GameError carrying a stable Fault code,
// so callers (and the CLI exit-code mapping) never have to match on strings.
class GameError : public std::runtime_error {
 public:
  GameError(Fault fault, const std::string& message)
      : std::runtime_error(std::string(fault_name(fault)) + ": " + message),
        fault_(fault) {}

  Fault fault() const { return fault_; }

 private:
  Fault fault_;
};

[[noreturn]] inline void fail(Fault fault, const std::string& message) {
  throw GameError(fault, message);
}

// A coalition is a set of transmitters packed into a bitmask; bit l stands
// for the transmitter with 0-based index l.
using Coalition = std::uint32_t;

inline int coalition_size(Coalition s) { return std::popcount(s); }

inline bool coalition_contains(Coalition s, int member) {
  return (s >> member) & 1u;
}

inline Coalition singleton(int member) { return Coalition{1} << member; }

inline Coalition full_coalition(int count) {
  return (Coalition{1} << count) - 1u;
}

inline Coalition complement_of(Coalition s, int count) {
  return full_coalition(count) & ~s;
}

// Shared eavesdropper gain: the eavesdropper hears every transmitter through
// the same attenuation h, making its observation a degraded version of the
// receiver's for h < 1.
struct DegradedGains {
  double h = 0.0;
};

// Per-transmitter eavesdropper gains; only the two-transmitter case has a
// closed-form theory, so this variant is restricted to L = 2.
struct TwoUserGains {
  double h1 = 0.0;
  double h2 = 0.0;
};

using Gains = std::variant<DegradedGains, TwoUserGains>;

struct ChannelParams {
  std::vector<double> gammas;     // per-transmitter power budgets
  Gains gains = DegradedGains{};  // eavesdropper side of the channel
  double lambda = 0.0;            // standing jammer power

  int size() const { return static_cast<int>(gammas.size()); }
};

inline bool is_degraded(const ChannelParams& params) {
  return std::holds_alternative<DegradedGains>(params.gains);
}

inline bool is_two_user(const ChannelParams& params) {
  return std::holds_alternative<TwoUserGains>(params.gains);
}

inline const ChannelParams& validate(const ChannelParams& params) {
  if (params.gammas.empty()) {
    fail(Fault::kLengthMismatch, "need at least one transmitter");
  }
  if (params.size() > kMaxTransmitters) {
    fail(Fault::kTooManyTransmitters,
         "at most " + std::to_string(kMaxTransmitters) +
             " transmitters supported");
  }
  for (double gamma : params.gammas) {
    if (!std::isfinite(gamma) || gamma <= 0.0) {
      fail(Fault::kNonPositivePower, "power budgets must be positive");
    }
  }
  if (!std::isfinite(params.lambda) || params.lambda < 0.0) {
    fail(Fault::kNegativeLambda, "jammer power must be non-negative");
  }
  if (const auto* degraded = std::get_if<DegradedGains>(&params.gains)) {
    if (!std::isfinite(degraded->h) || degraded->h < 0.0) {
      fail(Fault::kGainsOutOfRange, "eavesdropper gain must be non-negative");
    }
  } else {
    const auto& two = std::get<TwoUserGains>(params.gains);
    if (params.size() != 2) {
      fail(Fault::kGainCountMismatch,
           "per-transmitter gains require exactly two transmitters");
    }
    if (!std::isfinite(two.h1) || two.h1 < 0.0 || !std::isfinite(two.h2) ||
        two.h2 < 0.0) {
      fail(Fault::kGainsOutOfRange, "eavesdropper gains must be non-negative");
    }
  }
  return params;
}

// With unit noise power, jamming power x at the receiver scales the useful
// gain down to 1/(1+x).
inline double effective_gain(double jam_power) { return 1.0 / (1.0 + jam_power); }

// Effective gain when only the standing jammer acts; secrecy is possible only
// for eavesdropper gains strictly below this value.
inline double ambient_gain(const ChannelParams& params) {
  return effective_gain(params.lambda);
}

// Jamming power hitting the receiver when every member of `defectors` spends
// its whole budget alongside the standing jammer.  Amplitudes combine
// coherently in the worst case, so square roots add before squaring.  The
// empty set returns lambda exactly (no rounding through sqrt).
inline double jammer_power(const ChannelParams& params, Coalition defectors) {
  if (defectors >> params.size()) {
    fail(Fault::kIndexOutOfRange, "coalition member outside the game");
  }
  if (defectors == 0u) return params.lambda;
  double amplitude = std::sqrt(params.lambda);
  for (int l = 0; l < params.size(); ++l) {
    if (coalition_contains(defectors, l)) {
      amplitude += std::sqrt(params.gammas[l]);
    }
  }
  return amplitude * amplitude;
}

// Members of `coalition` whose budget strictly exceeds `threshold`.  A budget
// exactly at the threshold counts as inactive; the strict inequality is part
// of the model, there is no epsilon slack here.
inline Coalition active_set(const ChannelParams& params, Coalition coalition,
                            double threshold) {
  if (coalition >> params.size()) {
    fail(Fault::kIndexOutOfRange, "coalition member outside the game");
  }
  Coalition active = 0;
  for (int l = 0; l < params.size(); ++l) {
    if (coalition_contains(coalition, l) && params.gammas[l] > threshold) {
      active |= singleton(l);
    }
  }
  return active;
}

inline double coalition_power(const ChannelParams& params, Coalition s) {
  if (s >> params.size()) {
    fail(Fault::kIndexOutOfRange, "coalition member outside the game");
  }
  double total = 0.0;
  for (int l = 0; l < params.size(); ++l) {
    if (coalition_contains(s, l)) total += params.gammas[l];
  }
  return total;
}

// Rescales the instance as if every noise variance were multiplied by omega:
// all powers (budgets and jammer alike) shrink by the same factor while the
// gains stay put.  Activity of each transmitter is invariant under this map.
inline ChannelParams scale_game(const ChannelParams& params, double omega) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    fail(Fault::kNonPositiveOmega, "scale factor must be positive");
  }
  ChannelParams scaled = params;
  for (double& gamma : scaled.gammas) gamma /= omega;
  scaled.lambda /= omega;
  return scaled;
}

}  // namespace gmacwt
