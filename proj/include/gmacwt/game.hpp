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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmacwt/detail/format.hpp"
#include "gmacwt/detail/simplex.hpp"
#include "gmacwt/model.hpp"
#include "gmacwt/value.hpp"

// The coalitional game layer: tabulated values, superadditivity scans, core
// constraints and membership, and two independent routes to the core
// emptiness question (a closed-form two-transmitter criterion and a
// linear-programming feasibility check).  The two routes share nothing but
// the value function, which is what makes cross-checking them meaningful.

namespace gmacwt {

// Fully tabulated game: one value per coalition bitmask.  Building the table
// costs 2^L value evaluations; queries afterwards are array lookups.
class Game {
 public:
  explicit Game(ChannelParams params) : params_(std::move(params)) {
    validate(params_);
    table_.resize(std::size_t{1} << params_.size());
    for (Coalition s = 0; s < table_.size(); ++s) {
      table_[s] = coalition_value(params_, s);
    }
  }

  const ChannelParams& params() const { return params_; }
  int size() const { return params_.size(); }
  Coalition full() const { return full_coalition(size()); }

  double value(Coalition s) const {
    if (s >= table_.size()) {
      fail(Fault::kIndexOutOfRange, "coalition member outside the game");
    }
    return table_[s];
  }

  double grand_value() const { return table_.back(); }
  const std::vector<double>& table() const { return table_; }

 private:
  ChannelParams params_;
  std::vector<double> table_;
};

inline Game build_game(const ChannelParams& params) { return Game(params); }

struct SuperadditivityReport {
  bool superadditive = true;
  // First violating pair in scan order (ascending S, then ascending disjoint
  // T with min member after S's): set only when !superadditive.
  Coalition first = 0;
  Coalition second = 0;
  double shortfall = 0.0;  // v(S) + v(T) - v(S|T) at the violation
};

namespace detail {

// Shared scan skeleton so the memoized and the brute-force route differ only
// in where values come from.  Each unordered disjoint pair {S, T} is visited
// once, with S holding the smaller minimum member.
template <typename ValueFn>
SuperadditivityReport scan_superadditivity(int count, ValueFn&& value,
                                           double eps) {
  const Coalition full = full_coalition(count);
  SuperadditivityReport report;
  for (Coalition s = 1; s <= full; ++s) {
    const Coalition rest = full & ~s;
    if (rest == 0) continue;
    const double vs = value(s);
    // Ascending enumeration of the nonempty submasks of `rest`.
    for (Coalition t = rest & (0u - rest); t != 0; t = (t - rest) & rest) {
      if (std::countr_zero(s) > std::countr_zero(t)) continue;
      if (vs + value(t) > value(s | t) + eps) {
        report.superadditive = false;
        report.first = s;
        report.second = t;
        report.shortfall = vs + value(t) - value(s | t);
        return report;
      }
    }
  }
  return report;
}

}  // namespace detail

// Checks v(S) + v(T) <= v(S|T) + eps for every disjoint nonempty pair, out of
// the memoized table.
inline SuperadditivityReport is_superadditive(const Game& game,
                                              double eps = 1e-9) {
  return detail::scan_superadditivity(
      game.size(), [&game](Coalition s) { return game.value(s); }, eps);
}

struct CoreConstraint {
  Coalition coalition = 0;
  double lower = 0.0;  // v(S): the least S will accept
  double upper = 0.0;  // v(L) - v(S^c): the most efficiency leaves for S
};

// One interval per nonempty coalition.  A rate vector r lies in the core iff
// it is efficient and every group sum lands inside its interval; an empty
// interval (lower > upper) certifies an empty core.
inline std::vector<CoreConstraint> core_constraints(const Game& game) {
  const Coalition full = game.full();
  std::vector<CoreConstraint> constraints;
  constraints.reserve(full);
  for (Coalition s = 1; s <= full; ++s) {
    constraints.push_back(
        {s, game.value(s), game.grand_value() - game.value(full & ~s)});
  }
  return constraints;
}

struct CoreMembership {
  bool inside = true;
  double efficiency_gap = 0.0;        // |sum(r) - v(L)|
  std::vector<Coalition> violated;    // coalitions with r(S) < v(S) - eps
};

inline CoreMembership core_membership(const Game& game,
                                      std::span<const double> rates,
                                      double eps = 1e-9) {
  if (static_cast<int>(rates.size()) != game.size()) {
    fail(Fault::kLengthMismatch, "one rate per transmitter required");
  }
  CoreMembership result;
  double total = 0.0;
  for (double r : rates) total += r;
  result.efficiency_gap = std::fabs(total - game.grand_value());
  if (result.efficiency_gap > eps) result.inside = false;

  const Coalition full = game.full();
  for (Coalition s = 1; s <= full; ++s) {
    double group = 0.0;
    for (int l = 0; l < game.size(); ++l) {
      if (coalition_contains(s, l)) group += rates[l];
    }
    if (group < game.value(s) - eps) {
      result.inside = false;
      result.violated.push_back(s);
    }
  }
  return result;
}

inline bool core_contains(const Game& game, std::span<const double> rates,
                          double eps = 1e-9) {
  return core_membership(game, rates, eps).inside;
}

// Membership in the distinguished core subset that pins every strict
// sub-coalition of the active set to its pooled-power ceiling
//   r(S) <= (1/2) log2((1 + g_active * P_S) / (1 + h * P_S)),
// with g_active the gain under the standing jammer alone.  Transmitters that
// cannot overcome the standing jammer must sit exactly at zero, and the
// active set's total must exhaust the grand value.  The ceiling is evaluated
// unclamped: for h above the ambient gain it goes negative and the set is
// empty, which this predicate reports by returning false.
inline bool cstar_contains(const Game& game, std::span<const double> rates,
                           double eps = 1e-9) {
  const ChannelParams& params = game.params();
  if (!is_degraded(params)) {
    fail(Fault::kWrongGameKind,
         "this core subset is defined for a shared eavesdropper gain");
  }
  if (static_cast<int>(rates.size()) != game.size()) {
    fail(Fault::kLengthMismatch, "one rate per transmitter required");
  }
  const double h = std::get<DegradedGains>(params.gains).h;
  const double ambient = ambient_gain(params);
  const Coalition active = active_set(params, game.full(), params.lambda);

  for (int l = 0; l < game.size(); ++l) {
    if (rates[l] < -eps) return false;
    if (!coalition_contains(active, l) && std::fabs(rates[l]) > eps) {
      return false;
    }
  }

  const auto pooled_ceiling = [&](Coalition s) {
    const double power = coalition_power(params, s);
    return 0.5 * std::log2((1.0 + ambient * power) / (1.0 + h * power));
  };

  double total = 0.0;
  for (int l = 0; l < game.size(); ++l) {
    if (coalition_contains(active, l)) total += rates[l];
  }
  if (active != 0 && std::fabs(total - pooled_ceiling(active)) > eps) {
    return false;
  }
  if (active == 0 && std::fabs(total) > eps) return false;

  // Strict nonempty submasks of the active set.
  for (Coalition s = active & (0u - active); s != 0 && s != active;
       s = (s - active) & active) {
    double group = 0.0;
    for (int l = 0; l < game.size(); ++l) {
      if (coalition_contains(s, l)) group += rates[l];
    }
    if (group > pooled_ceiling(s) + eps) return false;
  }
  return true;
}

// Closed-form core emptiness test for the two-transmitter game without a
// standing jammer.  The game must have a strictly positive grand value; the
// core is then empty iff for some transmitter l the pair of odds
//   gamma_l / gamma_other   and
//   (1 + h1 g1 + h2 g2) / ((1 + h_l g_l) (1 + g_other))
// are both above one, i.e. the smaller of the two exceeds one.
inline bool core_is_empty_two_user(const ChannelParams& params) {
  validate(params);
  if (!is_two_user(params)) {
    fail(Fault::kWrongGameKind,
         "the closed-form emptiness test needs per-transmitter gains");
  }
  if (params.lambda != 0.0) {
    fail(Fault::kLambdaNotZero,
         "the closed-form emptiness test assumes no standing jammer");
  }
  if (!(value_two_user(params, 0b11) > 0.0)) {
    fail(Fault::kZeroGrandValue,
         "emptiness is only meaningful when the pair earns a positive rate");
  }
  const auto& gains = std::get<TwoUserGains>(params.gains);
  const double g1 = params.gammas[0];
  const double g2 = params.gammas[1];
  const double overheard = 1.0 + gains.h1 * g1 + gains.h2 * g2;
  double best = 0.0;
  for (int l = 0; l < 2; ++l) {
    const double mine = l == 0 ? g1 : g2;
    const double theirs = l == 0 ? g2 : g1;
    const double gain = l == 0 ? gains.h1 : gains.h2;
    const double crowding = overheard / ((1.0 + gain * mine) * (1.0 + theirs));
    const double criterion = std::min(mine / theirs, crowding);
    if (criterion > best) best = criterion;
  }
  return best > 1.0;
}

struct CoreLpResult {
  bool feasible = false;
  std::vector<double> witness;  // a core point when feasible
  double residual = 0.0;        // leftover infeasibility from phase one
  int iterations = 0;
};

// Decides core non-emptiness by phase-one simplex over the raw definition:
// r >= 0, r(S) >= v(S) for every nonempty S, sum(r) = v(L).  No structure of
// the value function is used, which keeps this route independent of the
// closed-form criteria it is checked against.  All right-hand sides are
// non-negative because values are clamped, so the artificial start is valid.
inline CoreLpResult core_nonempty_lp(const Game& game, double tol = 1e-9) {
  if (game.size() > 16) {
    fail(Fault::kTooManyTransmitters,
         "LP route tabulates 2^L rows; 16 transmitters is the cap");
  }
  const int count = game.size();
  const Coalition full = game.full();
  std::vector<detail::LinearConstraint> constraints;
  constraints.reserve(full + 1);
  for (Coalition s = 1; s <= full; ++s) {
    detail::LinearConstraint row;
    row.coeffs.assign(count, 0.0);
    for (int l = 0; l < count; ++l) {
      if (coalition_contains(s, l)) row.coeffs[l] = 1.0;
    }
    row.rhs = game.value(s);
    constraints.push_back(std::move(row));
  }
  detail::LinearConstraint efficiency;
  efficiency.coeffs.assign(count, 1.0);
  efficiency.rhs = game.grand_value();
  efficiency.equality = true;
  constraints.push_back(std::move(efficiency));

  const detail::PhaseOneResult lp =
      detail::phase_one_feasible(count, constraints, tol);
  CoreLpResult result;
  result.feasible = lp.feasible;
  result.residual = lp.residual;
  result.iterations = lp.iterations;
  if (lp.feasible) result.witness = lp.point;
  return result;
}

// CSV dump of the whole table: bitmask, 1-based member list, value in bits.
inline std::string game_to_csv(const Game& game, int precision = 6) {
  std::string out = "coalition_bitmask,members,value_bits\n";
  for (Coalition s = 0; s <= game.full(); ++s) {
    out += std::to_string(s);
    out += ',';
    out += detail::member_list(s, game.size());
    out += ',';
    out += detail::format_fixed(game.value(s), precision);
    out += '\n';
  }
  return out;
}

}  // namespace gmacwt
