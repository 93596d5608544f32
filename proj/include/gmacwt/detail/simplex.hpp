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
#include <cstddef>
#include <limits>
#include <vector>

// Phase-one primal simplex on a dense tableau, used to decide feasibility of
// small systems {x >= 0 : Ax >= b (some rows ==), b >= 0}.  Deliberately
// plain: the systems here have at most a few thousand rows and the point of
// this routine is to be an independent check on closed-form answers, so
// simplicity beats speed.

namespace gmacwt::detail {

struct LinearConstraint {
  std::vector<double> coeffs;  // one coefficient per structural variable
  double rhs = 0.0;            // must be non-negative
  bool equality = false;       // otherwise coeffs . x >= rhs
};

struct PhaseOneResult {
  bool feasible = false;
  double residual = 0.0;       // artificial cost left when pivoting stopped
  std::vector<double> point;   // structural variables of the final basis
  int iterations = 0;
};

// Minimizes the sum of one artificial variable per row, starting from the
// all-artificial basis (valid because rhs >= 0).  Bland's rule on both the
// entering and the leaving choice keeps the walk deterministic and cycle
// free; `tol` decides how close to zero the artificial cost must get to
// declare the system feasible.
inline PhaseOneResult phase_one_feasible(
    int num_vars, const std::vector<LinearConstraint>& constraints,
    double tol = 1e-9) {
  constexpr double kPivotTol = 1e-11;
  const int rows = static_cast<int>(constraints.size());
  int num_surplus = 0;
  for (const LinearConstraint& c : constraints) {
    if (!c.equality) ++num_surplus;
  }
  const int artificial_base = num_vars + num_surplus;
  const int cols = artificial_base + rows;  // plus one rhs column below

  // Column layout: [structural | surplus | artificial | rhs].
  std::vector<std::vector<double>> t(rows, std::vector<double>(cols + 1, 0.0));
  int next_surplus = num_vars;
  for (int i = 0; i < rows; ++i) {
    const LinearConstraint& c = constraints[i];
    for (int j = 0; j < num_vars && j < static_cast<int>(c.coeffs.size()); ++j) {
      t[i][j] = c.coeffs[j];
    }
    if (!c.equality) t[i][next_surplus++] = -1.0;
    t[i][artificial_base + i] = 1.0;
    t[i][cols] = c.rhs;
  }

  // Reduced costs for min sum(artificials) with the artificials basic:
  // structural and surplus columns get minus their column sum, artificial
  // columns start at zero, and the last slot tracks minus the objective.
  std::vector<double> cost(cols + 1, 0.0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < artificial_base; ++j) cost[j] -= t[i][j];
    cost[cols] -= t[i][cols];
  }

  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = artificial_base + i;

  PhaseOneResult result;
  const int max_iterations = 200 * (rows + cols) + 1000;
  while (result.iterations < max_iterations) {
    // Entering: lowest-index column with a meaningfully negative reduced cost.
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (cost[j] < -kPivotTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    // Leaving: minimum ratio, ties broken by the lowest basic variable index.
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= kPivotTol) continue;
      const double ratio = t[i][cols] / t[i][enter];
      if (leave < 0) {
        best_ratio = ratio;
        leave = i;
        continue;
      }
      const double tie = 1e-12 * (1.0 + std::fabs(best_ratio));
      if (ratio < best_ratio - tie) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio < best_ratio + tie && basis[i] < basis[leave]) {
        best_ratio = std::min(best_ratio, ratio);
        leave = i;
      }
    }
    if (leave < 0) break;  // cannot happen from an artificial start; bail out

    // Pivot on (leave, enter).
    const double pivot = t[leave][enter];
    for (double& cell : t[leave]) cell /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double factor = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    if (cost[enter] != 0.0) {
      const double factor = cost[enter];
      for (int j = 0; j <= cols; ++j) cost[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++result.iterations;
  }

  result.residual = -cost[cols];
  result.feasible = result.residual <= tol;
  if (result.feasible) {
    result.point.assign(num_vars, 0.0);
    for (int i = 0; i < rows; ++i) {
      if (basis[i] < num_vars) result.point[basis[i]] = t[i][cols];
    }
  }
  return result;
}

}  // namespace gmacwt::detail
