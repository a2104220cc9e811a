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

#include "trop/solver.hpp"

#include <string>
#include <vector>

namespace trop {

template <Semifield S>
Scalar<S> objective(const Matrix<S>& a, const Vector<S>& x) {
  detail::require_square(a, "objective");
  if (a.cols() != x.size()) throw ShapeError("objective: vector length does not match A");
  if (!is_regular(x)) throw DomainError("objective: x must be regular");
  return dot(conjugate(x), a * x);
}

template <Semifield S>
InequalitySolution<S> solve_linear_inequality(const Matrix<S>& a) {
  InequalitySolution<S> out;
  out.verdict.tr_value = big_tr(a);
  out.verdict.feasible = leq(out.verdict.tr_value, Scalar<S>::one());
  out.completeness_verified = is_irreducible(a);
  if (out.verdict.feasible) out.generators = kleene_star(a);
  return out;
}

namespace {

// Walks every product (A B^i_1)(A B^i_2)...(A B^i_k) with k + sum(i) <= n,
// one node per product, accumulating tr^(1/k) of each.
template <Semifield S>
class ThetaEnumeration {
 public:
  ThetaEnumeration(const Matrix<S>& a, const Matrix<S>& b) : n_(static_cast<unsigned>(a.rows())) {
    Matrix<S> b_pow = Matrix<S>::identity(n_);
    for (unsigned i = 0; i < n_; ++i) {
      a_b_pow_.push_back(a * b_pow);
      if (i + 1 < n_) b_pow = b_pow * b;
    }
  }

  Scalar<S> evaluate() {
    for (unsigned i = 0; i < n_; ++i) visit(a_b_pow_[i], 1, 1 + i);
    return theta_;
  }

 private:
  void visit(const Matrix<S>& product, unsigned factors, unsigned used) {
    theta_ += pow(trace(product), Rational(1, factors));
    for (unsigned i = 0; used + 1 + i <= n_; ++i) {
      visit(product * a_b_pow_[i], factors + 1, used + 1 + i);
    }
  }

  unsigned n_;
  std::vector<Matrix<S>> a_b_pow_;
  Scalar<S> theta_;
};

template <Semifield S>
void require_same_order(const Matrix<S>& a, const Matrix<S>& b, const char* op) {
  detail::require_square(a, op);
  detail::require_square(b, op);
  if (a.rows() != b.rows()) throw ShapeError(std::string(op) + ": A and B differ in order");
}

template <Semifield S>
void finish_cone(SolutionCone<S>& cone) {
  cone.generators = reduce_generators(cone.closure);
  cone.reduced = cone.generators.cols() < cone.closure.cols();
  for (std::size_t j = 0; j < cone.generators.cols(); ++j) {
    if (!is_regular(cone.generators.column(j))) cone.nonregular_generators.push_back(j);
  }
  if (cone.degenerate()) {
    cone.warnings.push_back("generator matrix has non-regular columns; only regular u apply");
  }
}

}  // namespace

template <Semifield S>
Scalar<S> compute_theta(const Matrix<S>& a, const Matrix<S>& b, unsigned enumeration_cap) {
  require_same_order(a, b, "theta");
  if (a.rows() > enumeration_cap) {
    throw ResourceError("theta: order " + std::to_string(a.rows()) +
                        " exceeds the enumeration cap " + std::to_string(enumeration_cap) +
                        " (2^n - 1 trace terms)");
  }
  return ThetaEnumeration<S>(a, b).evaluate();
}

template <Semifield S>
SolutionCone<S> solve_constrained(const ProblemInstance<S>& instance, const SolveOptions& options) {
  const Matrix<S>& a = instance.objective();
  const Matrix<S>& b = instance.constraint();

  SolutionCone<S> cone;
  auto& hyp = cone.hypotheses;
  hyp.objective_irreducible = is_irreducible(a);
  hyp.constraint_irreducible = is_irreducible(b);
  hyp.spectral_radius = spectral_radius(a);
  hyp.spectral_radius_positive = !hyp.spectral_radius.is_zero();
  hyp.constraint_tr = big_tr(b);
  hyp.constraint_tr_ok = leq(hyp.constraint_tr, Scalar<S>::one());

  std::vector<std::string> violations;
  if (!hyp.objective_irreducible && !hyp.constraint_irreducible) {
    violations.emplace_back("neither A nor B irreducible");
  }
  if (!hyp.spectral_radius_positive) violations.emplace_back("spectral radius of A is zero");
  if (!hyp.constraint_tr_ok) {
    violations.emplace_back("Tr(B) > 1: constraint set has no regular point");
  }
  if (!violations.empty()) {
    if (!options.override_hypotheses) throw HypothesisError(violations);
    cone.completeness_verified = false;
    for (const auto& v : violations) cone.warnings.push_back("hypothesis overridden: " + v);
  }

  cone.theta = compute_theta(a, b, options.enumeration_cap);
  if (cone.theta.is_zero()) throw HypothesisError({"spectral radius of A is zero"});

  const Matrix<S> combined = inv(cone.theta) * a + b;
  hyp.combined_irreducible = is_irreducible(combined);
  if (!hyp.combined_irreducible) {
    cone.completeness_verified = false;
    cone.warnings.emplace_back(
        "theta^-1 A + B is reducible; generator completeness unverified");
  }
  cone.closure = kleene_star(combined);
  finish_cone(cone);
  return cone;
}

template <Semifield S>
SolutionCone<S> solve_unconstrained(const Matrix<S>& a, const SolveOptions& options) {
  detail::require_square(a, "unconstrained");
  if (a.rows() > options.enumeration_cap) {
    throw ResourceError("unconstrained: order " + std::to_string(a.rows()) +
                        " exceeds the enumeration cap " + std::to_string(options.enumeration_cap));
  }
  SolutionCone<S> cone;
  auto& hyp = cone.hypotheses;
  hyp.objective_irreducible = is_irreducible(a);
  hyp.spectral_radius = spectral_radius(a);
  hyp.spectral_radius_positive = !hyp.spectral_radius.is_zero();
  hyp.constraint_tr = Scalar<S>::zero();
  hyp.constraint_tr_ok = true;

  if (!hyp.objective_irreducible) {
    if (!options.override_hypotheses) throw HypothesisError({"A is not irreducible"});
    cone.completeness_verified = false;
    cone.warnings.emplace_back("hypothesis overridden: A is not irreducible");
  }
  if (!hyp.spectral_radius_positive) throw HypothesisError({"spectral radius of A is zero"});

  cone.theta = hyp.spectral_radius;
  const Matrix<S> scaled = inv(cone.theta) * a;
  hyp.combined_irreducible = hyp.objective_irreducible;
  cone.closure = kleene_star(scaled);
  finish_cone(cone);
  return cone;
}

template <Semifield S>
bool is_solution(const ProblemInstance<S>& instance, Scalar<S> theta, const Vector<S>& x) {
  if (x.size() != instance.order()) throw ShapeError("is_solution: vector length mismatch");
  if (!is_regular(x)) throw DomainError("is_solution: x must be regular");
  const Matrix<S> combined = inv(theta) * instance.objective() + instance.constraint();
  return leq(combined * x, x);
}

#define TROP_SOLVER_INSTANTIATE(S)                                                         \
  template Scalar<S> objective(const Matrix<S>&, const Vector<S>&);                        \
  template InequalitySolution<S> solve_linear_inequality(const Matrix<S>&);                \
  template Scalar<S> compute_theta(const Matrix<S>&, const Matrix<S>&, unsigned);          \
  template SolutionCone<S> solve_constrained(const ProblemInstance<S>&, const SolveOptions&); \
  template SolutionCone<S> solve_unconstrained(const Matrix<S>&, const SolveOptions&);     \
  template bool is_solution(const ProblemInstance<S>&, Scalar<S>, const Vector<S>&);

TROP_SOLVER_INSTANTIATE(MaxPlus)
TROP_SOLVER_INSTANTIATE(MinPlus)

}  // namespace trop
