// Copyright 2026 The trop Authors
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

/// \file oracle.hpp
/// Brute-force cross-checks for the closed-form solver. Nothing here
/// evaluates the theta formula: the grid search and the cycle enumeration
/// only evaluate objectives, constraints and cycle weights.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trop/solver.hpp"

namespace trop {

inline constexpr std::size_t kCycleEnumerationCap = 8;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct GridOptions {
  /// One interval per coordinate, or a single interval broadcast to all.
  std::vector<Interval> box{{-10.0, 10.0}};
  double step = 1.0;
  /// Fix x_1 = 1 (the identity); objective and constraint are invariant
  /// under x -> c x, so no minimum is lost.
  bool pin_first = true;
  /// Slack on B x <= x when the lattice is not integer-aligned. Integer
  /// lattices are compared exactly.
  double tolerance = 1e-9;
  std::uint64_t max_points = 50'000'000;
};

struct OracleReport {
  /// Minimum over feasible lattice points; the zero element if none.
  MaxPlusScalar estimated_min;
  std::optional<MaxPlusVector> argmin;
  double grid_step = 0.0;
  /// Effective per-coordinate box (the pinned coordinate shows [0, 0]).
  std::vector<Interval> grid_box;
  std::uint64_t samples_evaluated = 0;
  bool feasible_found = false;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Exhaustive search of the inclusive lattice lo + i * step over the box.
/// Ties go to the lexicographically smallest point.
OracleReport grid_min(const ProblemInstance<MaxPlus>& instance, const GridOptions& options);

/// Best cycle mean over all simple cycles of the weighted digraph of `a`.
/// Throws ResourceError for n above kCycleEnumerationCap.
template <Semifield S>
Scalar<S> cycle_mean_oracle(const Matrix<S>& a);

struct SampleFailure {
  std::size_t trial = 0;
  MaxPlusVector u{0.0};
  std::string reason;

  friend bool operator==(const SampleFailure&, const SampleFailure&) = default;
};

struct SampleReport {
  std::size_t trials = 0;
  std::vector<SampleFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/// Draws `trials` regular integer vectors u with entries in
/// [-u_range, u_range], forms x = G u and checks B x <= x and
/// x^- A x == theta exactly.
SampleReport sample_solution_family(const ProblemInstance<MaxPlus>& instance,
                                    const SolutionCone<MaxPlus>& cone, std::size_t trials,
                                    std::uint64_t seed, int u_range = 10);

struct LowerBoundReport {
  std::size_t accepted = 0;
  std::size_t attempts = 0;
  std::size_t violations = 0;
  /// First feasible x found with objective below theta.
  std::optional<MaxPlusVector> witness;
};

/// Rejection-samples regular integer x with B x <= x until `samples` are
/// accepted (or `max_attempts` proposals are spent) and counts those with
/// x^- A x < theta. Proposals mix uniform draws from [-range, range]^n with
/// jittered points near the feasible set.
LowerBoundReport check_lower_bound(const ProblemInstance<MaxPlus>& instance,
                                   MaxPlusScalar theta, std::size_t samples,
                                   std::uint64_t seed, int range = 20,
                                   std::size_t max_attempts = 0);

extern template Scalar<MaxPlus> cycle_mean_oracle(const Matrix<MaxPlus>&);
extern template Scalar<MinPlus> cycle_mean_oracle(const Matrix<MinPlus>&);

}  // namespace trop
