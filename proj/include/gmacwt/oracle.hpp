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

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmacwt/game.hpp"
#include "gmacwt/model.hpp"
#include "gmacwt/value.hpp"

// Independent cross-checks.  The six reference functions below are the
// monotonicity workhorses behind the comparison arguments elsewhere in the
// library (value monotonicity, allocation ordering, scaling limits); each
// comes with a closed-form derivative so a numerical scan can confront the
// two.  brute_force_superadditivity re-derives every coalition value from
// scratch, bypassing the memoized game table on purpose.

namespace gmacwt {

// f1..f4 are differences of half-log2 rate expressions in a power-like
// variable x >= 0 and are non-increasing; f5 and f6 are ratios of natural-log
// expressions in a noise-like variable w > 0 (the log base cancels) and are
// non-decreasing.  All six need eavesdropper gains 0 <= h1 < h2 <= 1.
enum class LemmaFunction { kF1, kF2, kF3, kF4, kF5, kF6 };

inline const char* lemma_function_name(LemmaFunction fn) {
  switch (fn) {
    case LemmaFunction::kF1: return "f1";
    case LemmaFunction::kF2: return "f2";
    case LemmaFunction::kF3: return "f3";
    case LemmaFunction::kF4: return "f4";
    case LemmaFunction::kF5: return "f5";
    case LemmaFunction::kF6: return "f6";
  }
  return "unknown";
}

// Expected monotonicity direction: -1 non-increasing, +1 non-decreasing.
inline int lemma_direction(LemmaFunction fn) {
  switch (fn) {
    case LemmaFunction::kF1:
    case LemmaFunction::kF2:
    case LemmaFunction::kF3:
    case LemmaFunction::kF4:
      return -1;
    default:
      return +1;
  }
}

struct LemmaParams {
  int k = 1;       // multiplicity (f1..f4)
  double h1 = 0.0; // smaller eavesdropper gain
  double h2 = 0.5; // larger eavesdropper gain
  double a = 1.0;  // baseline power offset
  double b = 2.0;  // second offset (f2) or increment (f5, f6)
  double c = 1.0;  // pivot power (f4) or increment (f5)
  double d = 1.0;  // increment (f5)
};

inline void check_lemma_domain(LemmaFunction fn, const LemmaParams& p,
                               double x) {
  const auto require = [](bool ok, const char* what) {
    if (!ok) fail(Fault::kDomainViolation, what);
  };
  require(std::isfinite(x) && std::isfinite(p.h1) && std::isfinite(p.h2) &&
              std::isfinite(p.a) && std::isfinite(p.b) && std::isfinite(p.c) &&
              std::isfinite(p.d),
          "parameters must be finite");
  require(p.h1 >= 0.0 && p.h1 < p.h2 && p.h2 <= 1.0,
          "gains must satisfy 0 <= h1 < h2 <= 1");
  switch (fn) {
    case LemmaFunction::kF1:
    case LemmaFunction::kF3:
      require(p.k >= 1, "k must be a positive integer");
      require(p.a >= 0.0, "offset a must be non-negative");
      require(x >= 0.0, "x must be non-negative");
      break;
    case LemmaFunction::kF2:
      require(p.k >= 1, "k must be a positive integer");
      require(p.a >= 0.0, "offset a must be non-negative");
      require(p.b > p.a, "offset b must exceed offset a");
      require(x >= 0.0, "x must be non-negative");
      break;
    case LemmaFunction::kF4:
      require(p.k >= 1, "k must be a positive integer");
      require(p.a >= 0.0, "offset a must be non-negative");
      require(p.c > 0.0, "pivot c must be positive");
      require(x >= 0.0 && x < p.c, "x must lie in [0, c)");
      break;
    case LemmaFunction::kF5:
      require(p.a > 0.0 && p.b > 0.0 && p.c > 0.0 && p.d > 0.0,
              "increments a, b, c, d must be positive");
      require(x > 0.0, "w must be positive");
      break;
    case LemmaFunction::kF6:
      require(p.a > 0.0, "offset a must be positive");
      require(p.b >= 0.0, "increment b must be non-negative");
      require(x > 0.0, "w must be positive");
      break;
  }
}

namespace detail {

inline double half_log2_gap(double h1, double h2, double power) {
  return 0.5 * std::log2((1.0 + h1 * power) / (1.0 + h2 * power));
}

}  // namespace detail

inline double eval_lemma_function(LemmaFunction fn, const LemmaParams& p,
                                  double x) {
  check_lemma_domain(fn, p, x);
  const double h1 = p.h1;
  const double h2 = p.h2;
  switch (fn) {
    case LemmaFunction::kF1:
      return detail::half_log2_gap(h1, h2, p.k * x + p.a);
    case LemmaFunction::kF2:
      return detail::half_log2_gap(h1, h2, x + p.k * p.a) -
             detail::half_log2_gap(h1, h2, x + p.k * p.b);
    case LemmaFunction::kF3:
      return (p.k + 1.0) * detail::half_log2_gap(h1, h2, p.k * x + p.a) -
             p.k * detail::half_log2_gap(h1, h2, (p.k + 1.0) * x + p.a);
    case LemmaFunction::kF4:
      return detail::half_log2_gap(h1, h2, (p.k + 1.0) * x + p.a) -
             (p.k + 1.0) *
                 detail::half_log2_gap(h1, h2, x + p.a + p.c * p.k);
    case LemmaFunction::kF5: {
      const double s1 = p.a + p.b + p.c;
      const double s2 = s1 + p.d;
      const double num = std::log((x + h1 * s1) / (x + h2 * s1) *
                                  ((x + h2 * s2) / (x + h1 * s2)));
      const double den = std::log((x + h1 * p.a) / (x + h2 * p.a) *
                                  ((x + h2 * (p.a + p.b)) /
                                   (x + h1 * (p.a + p.b))));
      return num / den;
    }
    case LemmaFunction::kF6: {
      const double s = p.a + p.b;
      return std::log((x + h2 * s) / (x + h1 * s)) /
             std::log((x + h2 * p.a) / (x + h1 * p.a));
    }
  }
  fail(Fault::kDomainViolation, "unknown function id");
}

// The sign-carrying bracket inside the f5 derivative.  f5' equals
// -(h2-h1)/den^2 times this bracket, so f5 is non-decreasing exactly when the
// bracket stays non-positive; exposing it lets tests pin the sign directly.
inline double lemma_f5_bracket(const LemmaParams& p, double w) {
  check_lemma_domain(LemmaFunction::kF5, p, w);
  const double h1 = p.h1;
  const double h2 = p.h2;
  const double ab = p.a + p.b;
  const double s1 = ab + p.c;
  const double s2 = s1 + p.d;
  const double t1 =
      p.b * (p.a * h1 * h2 * ab - w * w) *
      std::log(((h1 * s1 + w) * (h2 * s2 + w)) /
               ((h2 * s1 + w) * (h1 * s2 + w))) /
      ((p.a * h1 + w) * (p.a * h2 + w) * (h1 * ab + w) * (h2 * ab + w));
  const double t2 =
      p.d * (h1 * h2 * s1 * s2 - w * w) *
      std::log(((p.a * h1 + w) * (h2 * ab + w)) /
               ((p.a * h2 + w) * (h1 * ab + w))) /
      ((h1 * s1 + w) * (h2 * s1 + w) * (h1 * s2 + w) * (h2 * s2 + w));
  return t1 - t2;
}

// Closed-form derivative of each reference function, matching the half-log2
// normalization of f1..f4 (hence the 1/(2 ln 2) factor) and the natural-log
// ratios of f5, f6.
inline double lemma_derivative(LemmaFunction fn, const LemmaParams& p,
                               double x) {
  check_lemma_domain(fn, p, x);
  constexpr double kTwoLn2 = 2.0 * 0.693147180559945309417232121458176568;
  const double h1 = p.h1;
  const double h2 = p.h2;
  const double gap = h2 - h1;
  switch (fn) {
    case LemmaFunction::kF1: {
      const double s = p.a + p.k * x;
      return -gap * p.k / ((h1 * s + 1.0) * (h2 * s + 1.0)) / kTwoLn2;
    }
    case LemmaFunction::kF2: {
      const double sa = p.k * p.a + x;
      const double sb = p.k * p.b + x;
      const double num = -gap * p.k * (p.b - p.a) *
                         (h1 * (h2 * (p.k * (p.a + p.b) + 2.0 * x) + 1.0) + h2);
      const double den = (h1 * sa + 1.0) * (h2 * sa + 1.0) * (h1 * sb + 1.0) *
                         (h2 * sb + 1.0);
      return num / den / kTwoLn2;
    }
    case LemmaFunction::kF3: {
      const double s = p.a + p.k * x;
      const double num =
          -gap * p.k * (p.k + 1.0) * x *
          (h1 * (h2 * (2.0 * p.a + 2.0 * p.k * x + x) + 1.0) + h2);
      const double den = (h1 * s + 1.0) * (h1 * (s + x) + 1.0) *
                         (h2 * s + 1.0) * (h2 * (s + x) + 1.0);
      return num / den / kTwoLn2;
    }
    case LemmaFunction::kF4: {
      const double s = p.a + p.k * x + x;
      const double t = p.a + p.c * p.k + x;
      const double num =
          -gap * p.k * (p.k + 1.0) * (p.c - x) *
          (h1 * (h2 * (2.0 * p.a + p.c * p.k + (p.k + 2.0) * x) + 1.0) + h2);
      const double den =
          (h1 * s + 1.0) * (h2 * s + 1.0) * (h1 * t + 1.0) * (h2 * t + 1.0);
      return num / den / kTwoLn2;
    }
    case LemmaFunction::kF5: {
      const double ab = p.a + p.b;
      const double den = std::log(((p.a * h1 + x) * (h2 * ab + x)) /
                                  ((p.a * h2 + x) * (h1 * ab + x)));
      return -gap / (den * den) * lemma_f5_bracket(p, x);
    }
    case LemmaFunction::kF6: {
      const double s = p.a + p.b;
      const double num = std::log((h2 * s + x) / (h1 * s + x));
      const double den = std::log((p.a * h2 + x) / (p.a * h1 + x));
      const double t1 = s * den / ((h1 * s + x) * (h2 * s + x));
      const double t2 = p.a * num / ((p.a * h1 + x) * (p.a * h2 + x));
      return -gap * (t1 - t2) / (den * den);
    }
  }
  fail(Fault::kDomainViolation, "unknown function id");
}

// Plain central difference (f(x+step) - f(x-step)) / (2 step).  Callers keep
// x +/- step inside the function's domain.
template <typename F>
double finite_difference(F&& fn, double x, double step) {
  if (!std::isfinite(step) || step <= 0.0) {
    fail(Fault::kDomainViolation, "step must be positive");
  }
  return (fn(x + step) - fn(x - step)) / (2.0 * step);
}

// Richardson extrapolation of the central difference (one halving), knocking
// the leading error term from O(step^2) down to O(step^4).  Worth using when
// a derivative comparison needs more headroom than a single stencil gives.
template <typename F>
double finite_difference_refined(F&& fn, double x, double step) {
  const double coarse = finite_difference(fn, x, step);
  const double fine = finite_difference(fn, x, 0.5 * step);
  return (4.0 * fine - coarse) / 3.0;
}

struct MonotoneCheckReport {
  LemmaFunction function_id = LemmaFunction::kF1;
  int direction = -1;
  std::vector<double> grid;
  bool monotone = true;
  int first_violation = -1;   // grid index where step i -> i+1 breaks
  double worst_step = 0.0;    // most adverse consecutive difference
  double max_derivative_sign_error = 0.0;  // closed form on the wrong side
};

// Confronts the claimed direction with both a value scan over the grid and
// the sign of the closed-form derivative at every grid point.  Steps within
// tie_eps of zero count as ties, not violations.
inline MonotoneCheckReport check_monotone(LemmaFunction fn,
                                          const LemmaParams& p,
                                          std::span<const double> grid,
                                          double tie_eps = 1e-12) {
  if (grid.size() < 2) {
    fail(Fault::kDomainViolation, "grid needs at least two points");
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i + 1] > grid[i])) {
      fail(Fault::kDomainViolation, "grid must be strictly increasing");
    }
  }
  MonotoneCheckReport report;
  report.function_id = fn;
  report.direction = lemma_direction(fn);
  report.grid.assign(grid.begin(), grid.end());

  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) {
    values.push_back(eval_lemma_function(fn, p, x));
    const double deriv = lemma_derivative(fn, p, x);
    const double sign_error =
        report.direction < 0 ? std::max(deriv, 0.0) : std::max(-deriv, 0.0);
    report.max_derivative_sign_error =
        std::max(report.max_derivative_sign_error, sign_error);
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double step = values[i + 1] - values[i];
    const double adverse = report.direction < 0 ? step : -step;
    report.worst_step = std::max(report.worst_step, adverse);
    if (adverse > tie_eps && report.first_violation < 0) {
      report.monotone = false;
      report.first_violation = static_cast<int>(i);
    }
  }
  return report;
}

// Re-derives every coalition value straight from the parameters and checks
// all disjoint pairs, including both orders.  Shares neither the memo table
// nor the scan order with is_superadditive, which is the point: the two
// routes can only agree by computing the same mathematics.
inline SuperadditivityReport brute_force_superadditivity(
    const ChannelParams& params, double eps = 1e-9) {
  validate(params);
  if (params.size() > 6) {
    fail(Fault::kTooManyTransmitters,
         "brute force recomputation is capped at six transmitters");
  }
  const Coalition full = full_coalition(params.size());
  SuperadditivityReport report;
  for (Coalition s = 1; s <= full; ++s) {
    for (Coalition t = 1; t <= full; ++t) {
      if ((s & t) != 0) continue;
      const double vs = coalition_value(params, s);
      const double vt = coalition_value(params, t);
      const double vst = coalition_value(params, s | t);
      if (vs + vt > vst + eps) {
        report.superadditive = false;
        report.first = s;
        report.second = t;
        report.shortfall = vs + vt - vst;
        return report;
      }
    }
  }
  return report;
}

}  // namespace gmacwt
