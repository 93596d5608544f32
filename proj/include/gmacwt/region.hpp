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

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "gmacwt/detail/format.hpp"
#include "gmacwt/model.hpp"
#include "gmacwt/value.hpp"

// Achievable secrecy-rate regions and the two-transmitter polygon exports.
// The shared-gain region is a union over power choices of box-plus-sum-cap
// polytopes; membership tests scan a power grid, and the planar exports build
// the exact upper envelope of the grid's polygons.

namespace gmacwt {

// Ceiling on the pooled rate of a talking group that spends power_t, while
// the rest of the coalition spends power_rest alongside it.  The rest's
// transmissions act as cover traffic: they reach the eavesdropper too and
// drown out part of what it hears from the group.
inline double degraded_group_bound(const ChannelParams& params, double power_t,
                                   double power_rest) {
  const double h = std::get<DegradedGains>(params.gains).h;
  return clamp_rate(0.5 *
                    std::log2((1.0 + ambient_gain(params) * power_t) /
                              (1.0 + h * power_t / (1.0 + h * power_rest))));
}

// Membership in the polytope attached to one power choice: transmitters the
// standing jammer silences must sit at zero power and zero rate; every other
// transmitter spends strictly more than lambda and at most its budget.  Every
// talking group's rate sum is capped by degraded_group_bound.
inline bool degraded_region_contains_at_power(const ChannelParams& params,
                                              std::span<const double> rates,
                                              std::span<const double> powers,
                                              double eps = 1e-9) {
  validate(params);
  if (!is_degraded(params)) {
    fail(Fault::kWrongGameKind, "this region needs a shared eavesdropper gain");
  }
  if (static_cast<int>(rates.size()) != params.size()) {
    fail(Fault::kLengthMismatch, "one rate per transmitter required");
  }
  if (static_cast<int>(powers.size()) != params.size()) {
    fail(Fault::kInvalidPowerAllocation, "one power per transmitter required");
  }
  const Coalition active =
      active_set(params, full_coalition(params.size()), params.lambda);
  for (int l = 0; l < params.size(); ++l) {
    if (!std::isfinite(powers[l])) {
      fail(Fault::kInvalidPowerAllocation, "powers must be finite");
    }
    if (coalition_contains(active, l)) {
      if (!(powers[l] > params.lambda) || powers[l] > params.gammas[l]) {
        fail(Fault::kInvalidPowerAllocation,
             "active transmitters must spend in (lambda, budget]");
      }
    } else if (powers[l] != 0.0) {
      fail(Fault::kInvalidPowerAllocation,
           "silenced transmitters must spend exactly zero");
    }
  }

  for (int l = 0; l < params.size(); ++l) {
    if (rates[l] < -eps) return false;
    if (!coalition_contains(active, l) && std::fabs(rates[l]) > eps) {
      return false;
    }
  }
  double active_power = 0.0;
  for (int l = 0; l < params.size(); ++l) {
    if (coalition_contains(active, l)) active_power += powers[l];
  }
  // Nonempty talking groups within the active set.
  for (Coalition t = active & (0u - active); t != 0;
       t = (t - active) & active) {
    double group_rate = 0.0;
    double group_power = 0.0;
    for (int l = 0; l < params.size(); ++l) {
      if (coalition_contains(t, l)) {
        group_rate += rates[l];
        group_power += powers[l];
      }
    }
    if (group_rate >
        degraded_group_bound(params, group_power, active_power - group_power) +
            eps) {
      return false;
    }
  }
  return true;
}

// Membership in the union over power choices, probed on a per-transmitter
// grid of `resolution` levels from just above lambda to the full budget.  The
// grid always contains the full-power corner, so acceptance at full power is
// exact; rejection is approximate (a finer grid may still accept).
inline bool degraded_region_contains(const ChannelParams& params,
                                     std::span<const double> rates,
                                     int resolution = 32, double eps = 1e-9) {
  validate(params);
  if (!is_degraded(params)) {
    fail(Fault::kWrongGameKind, "this region needs a shared eavesdropper gain");
  }
  if (resolution < 1) {
    fail(Fault::kDomainViolation, "grid resolution must be at least one");
  }
  const Coalition active =
      active_set(params, full_coalition(params.size()), params.lambda);
  std::vector<int> members;
  for (int l = 0; l < params.size(); ++l) {
    if (coalition_contains(active, l)) members.push_back(l);
  }
  std::vector<double> powers(params.gammas.size(), 0.0);
  std::vector<int> level(members.size(), 1);
  for (;;) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int l = members[i];
      powers[l] = level[i] == resolution
                      ? params.gammas[l]
                      : params.lambda + level[i] *
                            (params.gammas[l] - params.lambda) / resolution;
    }
    if (degraded_region_contains_at_power(params, rates, powers, eps)) {
      return true;
    }
    // Odometer step through the level grid.
    std::size_t i = 0;
    while (i < level.size() && level[i] == resolution) level[i++] = 1;
    if (i == level.size()) break;
    ++level[i];
  }
  return false;
}

// Membership in the two-transmitter region with per-transmitter gains: two
// single-axis caps (each computed with the other transmitter covering at full
// power) plus the pooled sum cap.
inline bool two_user_region_contains(const ChannelParams& params,
                                     std::span<const double> rates,
                                     double eps = 1e-9) {
  validate(params);
  if (!is_two_user(params)) {
    fail(Fault::kWrongGameKind,
         "this region needs per-transmitter eavesdropper gains");
  }
  if (rates.size() != 2) {
    fail(Fault::kLengthMismatch, "one rate per transmitter required");
  }
  if (!(std::min(params.gammas[0], params.gammas[1]) > params.lambda)) {
    fail(Fault::kPowerBelowLambda,
         "both budgets must exceed the standing jammer power");
  }
  const auto& gains = std::get<TwoUserGains>(params.gains);
  const double ambient = ambient_gain(params);
  const double g1 = params.gammas[0];
  const double g2 = params.gammas[1];
  const double cap1 = clamp_rate(
      0.5 * std::log2((1.0 + ambient * g1) /
                      (1.0 + gains.h1 * g1 / (1.0 + gains.h2 * g2))));
  const double cap2 = clamp_rate(
      0.5 * std::log2((1.0 + ambient * g2) /
                      (1.0 + gains.h2 * g2 / (1.0 + gains.h1 * g1))));
  const double sum_cap = value_two_user(params, 0b11);
  return rates[0] >= -eps && rates[1] >= -eps && rates[0] <= cap1 + eps &&
         rates[1] <= cap2 + eps && rates[0] + rates[1] <= sum_cap + eps;
}

enum class RegionKind { kAchievable, kCore, kCstar };

inline const char* region_kind_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::kAchievable: return "achievable";
    case RegionKind::kCore: return "core";
    case RegionKind::kCstar: return "cstar";
  }
  return "unknown";
}

struct PolygonVertex {
  double r1 = 0.0;
  double r2 = 0.0;
  std::string role;  // origin, r1_axis, r2_axis or boundary
};

struct RegionPolygon {
  RegionKind kind = RegionKind::kAchievable;
  bool empty = false;  // the requested set has no points at all
  std::vector<PolygonVertex> vertices;  // counterclockwise, starting at the
                                        // max-r1 (then max-r2) vertex
};

namespace detail {

using PlanePoint = std::array<double, 2>;

// Keeps the part of a convex polygon with a*x + b*y <= c.
inline std::vector<PlanePoint> clip_halfplane(
    const std::vector<PlanePoint>& poly, double a, double b, double c) {
  std::vector<PlanePoint> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& s = poly[i];
    const PlanePoint& e = poly[(i + 1) % n];
    const double fs = a * s[0] + b * s[1] - c;
    const double fe = a * e[0] + b * e[1] - c;
    const bool s_in = fs <= 0.0;
    const bool e_in = fe <= 0.0;
    if (s_in != e_in) {
      const double t = fs / (fs - fe);
      out.push_back({s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1])});
    }
    if (e_in) out.push_back(e);
  }
  return out;
}

// Drops consecutive duplicates (cyclically) and middle points of straight
// runs, then rotates so the max-r1 / max-r2 vertex comes first.
inline std::vector<PlanePoint> tidy_polygon(std::vector<PlanePoint> poly) {
  constexpr double kTol = 1e-12;
  const auto same = [](const PlanePoint& a, const PlanePoint& b) {
    return std::fabs(a[0] - b[0]) <= kTol && std::fabs(a[1] - b[1]) <= kTol;
  };
  // Cyclic duplicate removal.
  std::vector<PlanePoint> pts;
  for (const PlanePoint& p : poly) {
    if (pts.empty() || !same(pts.back(), p)) pts.push_back(p);
  }
  while (pts.size() > 1 && same(pts.front(), pts.back())) pts.pop_back();
  // Cyclic straight-run removal.
  bool changed = pts.size() > 2;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; pts.size() > 2 && i < pts.size(); ++i) {
      const PlanePoint& a = pts[(i + pts.size() - 1) % pts.size()];
      const PlanePoint& b = pts[i];
      const PlanePoint& c = pts[(i + 1) % pts.size()];
      const double cross = (b[0] - a[0]) * (c[1] - b[1]) -
                           (b[1] - a[1]) * (c[0] - b[0]);
      if (std::fabs(cross) <= kTol) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() > 1) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] > pts[start][0] + kTol ||
          (pts[i][0] > pts[start][0] - kTol && pts[i][1] > pts[start][1])) {
        start = i;
      }
    }
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(start),
                pts.end());
  }
  return pts;
}

inline std::vector<PolygonVertex> label_vertices(
    const std::vector<PlanePoint>& pts) {
  constexpr double kTol = 1e-12;
  std::vector<PolygonVertex> out;
  out.reserve(pts.size());
  for (const PlanePoint& p : pts) {
    PolygonVertex v;
    v.r1 = p[0];
    v.r2 = p[1];
    const bool on_x = std::fabs(p[1]) <= kTol;
    const bool on_y = std::fabs(p[0]) <= kTol;
    v.role = on_x && on_y ? "origin"
             : on_x       ? "r1_axis"
             : on_y       ? "r2_axis"
                          : "boundary";
    out.push_back(std::move(v));
  }
  return out;
}

// One box-plus-sum-cap polytope {0 <= x <= cap1, 0 <= y <= cap2, x+y <= cap12}.
struct PlanarPentagon {
  double cap1 = 0.0;
  double cap2 = 0.0;
  double cap12 = 0.0;
  double support() const { return std::min(cap1, cap12); }
  // Height of the pentagon's roof at abscissa x (only valid for x <= support).
  double roof(double x) const { return std::min(cap2, cap12 - x); }
};

// Exact upper envelope of a family of pentagons, returned as a CCW polygon.
// The roof of each pentagon is the min of a constant and a slope -1 line, so
// between consecutive breakpoints the envelope is the max of one constant and
// one line; a straight-run cleanup afterwards merges the pieces.
inline std::vector<PlanePoint> pentagon_union_polygon(
    const std::vector<PlanarPentagon>& pentagons) {
  double xmax = 0.0;
  for (const PlanarPentagon& p : pentagons) {
    xmax = std::max(xmax, p.support());
  }

  std::vector<double> breaks{0.0, xmax};
  for (const PlanarPentagon& p : pentagons) {
    if (p.support() > 0.0 && p.support() < xmax) {
      breaks.push_back(p.support());
    }
    const double kink = p.cap12 - p.cap2;
    if (kink > 0.0 && kink < xmax) breaks.push_back(kink);
  }
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> grid;
  for (double x : breaks) {
    if (grid.empty() || x > grid.back() + 1e-13) grid.push_back(x);
  }

  constexpr double kNone = -std::numeric_limits<double>::infinity();
  std::vector<PlanePoint> upper;  // envelope traced right to left
  for (std::size_t i = grid.size(); i-- > 1;) {
    const double xa = grid[i - 1];
    const double xb = grid[i];
    const double mid = 0.5 * (xa + xb);
    double flat = kNone;   // best constant roof piece over this interval
    double slope = kNone;  // best sloped roof piece, stored as its cap12
    for (const PlanarPentagon& p : pentagons) {
      if (p.support() < mid) continue;
      if (p.cap2 <= p.cap12 - mid) {
        flat = std::max(flat, p.cap2);
      } else {
        slope = std::max(slope, p.cap12);
      }
    }
    const auto height = [&](double x) {
      return std::max(flat, slope == kNone ? kNone : slope - x);
    };
    if (upper.empty()) upper.push_back({xb, std::max(height(xb), 0.0)});
    if (flat != kNone && slope != kNone) {
      const double crossing = slope - flat;
      if (crossing > xa + 1e-13 && crossing < xb - 1e-13) {
        upper.push_back({crossing, flat});
      }
    }
    upper.push_back({xa, std::max(height(xa), 0.0)});
  }
  if (upper.empty()) upper.push_back({0.0, 0.0});

  std::vector<PlanePoint> poly = upper;
  poly.push_back({0.0, 0.0});
  poly.push_back({xmax, 0.0});
  return tidy_polygon(std::move(poly));
}

}  // namespace detail

// Planar polygon exports for two-transmitter instances.  The achievable set
// comes out of the power-grid union (shared gain) or the three closed-form
// caps (per-transmitter gains); core and cstar come out of their constraint
// intervals.  An empty set is reported in-band through the `empty` flag.
inline RegionPolygon export_two_user_polygons(const ChannelParams& params,
                                              RegionKind which,
                                              int resolution = 32) {
  validate(params);
  if (params.size() != 2) {
    fail(Fault::kLengthMismatch, "polygon export is two-transmitter only");
  }
  if (resolution < 1) {
    fail(Fault::kDomainViolation, "grid resolution must be at least one");
  }
  RegionPolygon out;
  out.kind = which;

  if (which == RegionKind::kCore) {
    const double v1 = coalition_value(params, 0b01);
    const double v2 = coalition_value(params, 0b10);
    const double v12 = coalition_value(params, 0b11);
    const double lo = v1;
    const double hi = v12 - v2;
    if (lo > hi) {
      out.empty = true;
      return out;
    }
    std::vector<detail::PlanePoint> pts{{hi, v12 - hi}};
    if (hi > lo) pts.push_back({lo, v12 - lo});
    out.vertices = detail::label_vertices(detail::tidy_polygon(pts));
    return out;
  }

  if (which == RegionKind::kCstar) {
    if (!is_degraded(params)) {
      fail(Fault::kWrongGameKind,
           "this core subset is defined for a shared eavesdropper gain");
    }
    const double h = std::get<DegradedGains>(params.gains).h;
    const double ambient = ambient_gain(params);
    const Coalition active = active_set(params, 0b11, params.lambda);
    const auto ceiling = [&](double power) {
      return 0.5 * std::log2((1.0 + ambient * power) / (1.0 + h * power));
    };
    std::vector<detail::PlanePoint> pts;
    if (active == 0b11) {
      const double total = ceiling(params.gammas[0] + params.gammas[1]);
      const double cap1 = ceiling(params.gammas[0]);
      const double cap2 = ceiling(params.gammas[1]);
      const double lo = std::max(0.0, total - cap2);
      const double hi = std::min(cap1, total);
      if (lo > hi) {
        out.empty = true;
        return out;
      }
      pts.push_back({hi, total - hi});
      if (hi > lo) pts.push_back({lo, total - lo});
    } else if (active != 0) {
      const int talker = active == 0b01 ? 0 : 1;
      const double total = ceiling(params.gammas[talker]);
      if (total < 0.0) {
        out.empty = true;
        return out;
      }
      pts.push_back(talker == 0 ? detail::PlanePoint{total, 0.0}
                                : detail::PlanePoint{0.0, total});
    } else {
      pts.push_back({0.0, 0.0});
    }
    out.vertices = detail::label_vertices(detail::tidy_polygon(pts));
    return out;
  }

  // Achievable region.
  std::vector<detail::PlanePoint> poly;
  if (is_two_user(params)) {
    if (!(std::min(params.gammas[0], params.gammas[1]) > params.lambda)) {
      fail(Fault::kPowerBelowLambda,
           "both budgets must exceed the standing jammer power");
    }
    const auto& gains = std::get<TwoUserGains>(params.gains);
    const double ambient = ambient_gain(params);
    const double g1 = params.gammas[0];
    const double g2 = params.gammas[1];
    const double cap1 = clamp_rate(
        0.5 * std::log2((1.0 + ambient * g1) /
                        (1.0 + gains.h1 * g1 / (1.0 + gains.h2 * g2))));
    const double cap2 = clamp_rate(
        0.5 * std::log2((1.0 + ambient * g2) /
                        (1.0 + gains.h2 * g2 / (1.0 + gains.h1 * g1))));
    const double sum_cap = value_two_user(params, 0b11);
    const double big = cap1 + cap2 + sum_cap + 1.0;
    poly = {{0.0, 0.0}, {big, 0.0}, {big, big}, {0.0, big}};
    poly = detail::clip_halfplane(poly, 1.0, 0.0, cap1);
    poly = detail::clip_halfplane(poly, 0.0, 1.0, cap2);
    poly = detail::clip_halfplane(poly, 1.0, 1.0, sum_cap);
    poly = detail::tidy_polygon(std::move(poly));
    if (poly.empty()) poly.push_back({0.0, 0.0});
  } else {
    const Coalition active = active_set(params, 0b11, params.lambda);
    std::vector<int> members;
    for (int l = 0; l < 2; ++l) {
      if (coalition_contains(active, l)) members.push_back(l);
    }
    std::vector<detail::PlanarPentagon> pentagons;
    std::vector<int> level(members.size(), 1);
    std::array<double, 2> powers{0.0, 0.0};
    for (;;) {
      if (members.empty()) break;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const int l = members[i];
        powers[l] = level[i] == resolution
                        ? params.gammas[l]
                        : params.lambda + level[i] *
                              (params.gammas[l] - params.lambda) / resolution;
      }
      detail::PlanarPentagon pentagon;
      pentagon.cap1 = coalition_contains(active, 0)
                          ? degraded_group_bound(params, powers[0], powers[1])
                          : 0.0;
      pentagon.cap2 = coalition_contains(active, 1)
                          ? degraded_group_bound(params, powers[1], powers[0])
                          : 0.0;
      pentagon.cap12 =
          degraded_group_bound(params, powers[0] + powers[1], 0.0);
      pentagons.push_back(pentagon);
      std::size_t i = 0;
      while (i < level.size() && level[i] == resolution) level[i++] = 1;
      if (i == level.size()) break;
      ++level[i];
    }
    if (pentagons.empty()) {
      poly.push_back({0.0, 0.0});
    } else {
      poly = detail::pentagon_union_polygon(pentagons);
    }
  }
  out.vertices = detail::label_vertices(poly);
  return out;
}

inline std::string polygon_to_csv(const RegionPolygon& polygon,
                                  int precision = 6) {
  std::string out;
  if (polygon.empty) out += "# empty core: no feasible rate pairs\n";
  out += "r1_bits,r2_bits\n";
  for (const PolygonVertex& v : polygon.vertices) {
    out += detail::format_fixed(v.r1, precision);
    out += ',';
    out += detail::format_fixed(v.r2, precision);
    out += '\n';
  }
  return out;
}

inline std::string polygon_to_json(const RegionPolygon& polygon) {
  const auto number = [](double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x == 0.0 ? 0.0 : x);
    return std::string(buffer);
  };
  std::string out = "{\"kind\":\"";
  out += region_kind_name(polygon.kind);
  out += "\",\"empty\":";
  out += polygon.empty ? "true" : "false";
  out += ",\"vertices\":[";
  for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
    const PolygonVertex& v = polygon.vertices[i];
    if (i > 0) out += ',';
    out += "{\"r1_bits\":" + number(v.r1) + ",\"r2_bits\":" + number(v.r2) +
           ",\"role\":\"" + v.role + "\"}";
  }
  out += "]}";
  return out;
}

}  // namespace gmacwt
