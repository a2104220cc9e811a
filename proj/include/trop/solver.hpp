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

/// \file solver.hpp
/// Closed-form solutions of
///
///   A x <= x                      (regular solutions of a linear inequality)
///   minimize x^- A x  s.t. B x <= x   (constrained extremal problem)
///
/// over regular vectors x. The constrained optimum is
///
///   theta = sum_{k=1..n} sum_{0 <= i_1+..+i_k <= n-k} tr^(1/k)(A B^i_1 ... A B^i_k)
///
/// and the optimal set is { (theta^-1 A (+) B)^* u : u regular }.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/spectral.hpp"
#include "trop/tensor.hpp"

namespace trop {

inline constexpr unsigned kDefaultEnumerationCap = 20;

struct SolveOptions {
  /// Largest order n for which the theta enumeration (2^n - 1 traces) runs.
  unsigned enumeration_cap = kDefaultEnumerationCap;
  /// Proceed when hypotheses fail; the result is then marked as having
  /// unverified completeness.
  bool override_hypotheses = false;
};

/// Objective matrix A and constraint matrix B, both n x n.
template <Semifield S>
class ProblemInstance {
 public:
  ProblemInstance(Matrix<S> objective, Matrix<S> constraint)
      : objective_(std::move(objective)), constraint_(std::move(constraint)) {
    detail::require_square(objective_, "problem instance");
    detail::require_square(constraint_, "problem instance");
    if (objective_.rows() != constraint_.rows()) {
      throw ShapeError("problem instance: A is " + std::to_string(objective_.rows()) +
                       "x" + std::to_string(objective_.rows()) + " but B is " +
                       std::to_string(constraint_.rows()) + "x" +
                       std::to_string(constraint_.rows()));
    }
  }

  const Matrix<S>& objective() const noexcept { return objective_; }
  const Matrix<S>& constraint() const noexcept { return constraint_; }
  std::size_t order() const noexcept { return objective_.rows(); }
  static constexpr SemifieldTag semifield() noexcept { return S::kTag; }

 private:
  Matrix<S> objective_;
  Matrix<S> constraint_;
};

template <Semifield S>
struct FeasibilityVerdict {
  bool feasible = false;
  Scalar<S> tr_value;
};

template <Semifield S>
struct InequalitySolution {
  FeasibilityVerdict<S> verdict;
  /// A^* when feasible; its regular combinations A^* u solve A x <= x.
  std::optional<Matrix<S>> generators;
  /// False for reducible A: every A^* u is a solution, but the family is
  /// only known to be exhaustive in the irreducible case.
  bool completeness_verified = true;
};

template <Semifield S>
struct HypothesisReport {
  bool objective_irreducible = false;
  bool constraint_irreducible = false;
  Scalar<S> spectral_radius;
  bool spectral_radius_positive = false;
  Scalar<S> constraint_tr;
  bool constraint_tr_ok = false;
  /// Irreducibility of theta^-1 A (+) B; only meaningful once theta exists.
  bool combined_irreducible = false;

  bool satisfied() const noexcept {
    return (objective_irreducible || constraint_irreducible) && spectral_radius_positive &&
           constraint_tr_ok;
  }
};

template <Semifield S>
struct SolutionCone {
  Scalar<S> theta;
  /// Columns g_1..g_r; the optimal set is { G u : u regular }.
  Matrix<S> generators = Matrix<S>(1, 1);
  /// (theta^-1 A (+) B)^* before collinear columns were dropped.
  Matrix<S> closure = Matrix<S>(1, 1);
  bool reduced = false;
  bool completeness_verified = true;
  /// Indices of generator columns containing a zero entry.
  std::vector<std::size_t> nonregular_generators;
  HypothesisReport<S> hypotheses;
  std::vector<std::string> warnings;

  bool degenerate() const noexcept { return !nonregular_generators.empty(); }
};

/// x^- A x. Throws DomainError unless x is regular.
template <Semifield S>
Scalar<S> objective(const Matrix<S>& a, const Vector<S>& x);

template <Semifield S>
InequalitySolution<S> solve_linear_inequality(const Matrix<S>& a);

/// Throws ResourceError when n exceeds `enumeration_cap`.
template <Semifield S>
Scalar<S> compute_theta(const Matrix<S>& a, const Matrix<S>& b,
                        unsigned enumeration_cap = kDefaultEnumerationCap);

/// Throws HypothesisError listing each violated precondition unless
/// `options.override_hypotheses` is set. A zero theta is refused either way.
template <Semifield S>
SolutionCone<S> solve_constrained(const ProblemInstance<S>& instance,
                                  const SolveOptions& options = {});

/// The B = 0 special case: theta is the spectral radius.
template <Semifield S>
SolutionCone<S> solve_unconstrained(const Matrix<S>& a, const SolveOptions& options = {});

/// Whether regular x attains `theta`, i.e. (theta^-1 A (+) B) x <= x.
template <Semifield S>
bool is_solution(const ProblemInstance<S>& instance, Scalar<S> theta, const Vector<S>& x);

#define TROP_SOLVER_EXTERN(S)                                                              \
  extern template Scalar<S> objective(const Matrix<S>&, const Vector<S>&);                 \
  extern template InequalitySolution<S> solve_linear_inequality(const Matrix<S>&);         \
  extern template Scalar<S> compute_theta(const Matrix<S>&, const Matrix<S>&, unsigned);   \
  extern template SolutionCone<S> solve_constrained(const ProblemInstance<S>&,             \
                                                    const SolveOptions&);                  \
  extern template SolutionCone<S> solve_unconstrained(const Matrix<S>&, const SolveOptions&); \
  extern template bool is_solution(const ProblemInstance<S>&, Scalar<S>, const Vector<S>&);

TROP_SOLVER_EXTERN(MaxPlus)
TROP_SOLVER_EXTERN(MinPlus)

#undef TROP_SOLVER_EXTERN

}  // namespace trop
