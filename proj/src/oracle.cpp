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

#include "trop/oracle.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace trop {

namespace {

bool is_integer(double v) { return std::isfinite(v) && v == std::trunc(v); }

std::uint64_t lattice_count(const Interval& iv, double step) {
  // Inclusive of both endpoints; the small slack keeps hi on the lattice
  // when (hi - lo) / step is integral up to rounding.
  return static_cast<std::uint64_t>(std::floor((iv.hi - iv.lo) / step + 1e-9)) + 1;
}

bool feasible(const Matrix<MaxPlus>& b, const MaxPlusVector& x, double tolerance) {
  const MaxPlusVector bx = b * x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (bx[i].is_zero()) continue;
    if (bx[i].value() > x[i].value() + tolerance) return false;
  }
  return true;
}

}  // namespace

OracleReport grid_min(const ProblemInstance<MaxPlus>& instance, const GridOptions& options) {
  const std::size_t n = instance.order();
  if (!(options.step > 0.0) || !std::isfinite(options.step)) {
    throw DomainError("grid step must be a positive finite number");
  }
  if (options.box.size() != 1 && options.box.size() != n) {
    throw ShapeError("grid box needs 1 or " + std::to_string(n) + " intervals, got " +
                     std::to_string(options.box.size()));
  }

  OracleReport report;
  report.grid_step = options.step;
  bool integer_aligned = is_integer(options.step);
  for (std::size_t i = 0; i < n; ++i) {
    const Interval iv = options.box.size() == 1 ? options.box[0] : options.box[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
      throw DomainError("grid box interval must be finite with lo <= hi");
    }
    if (i == 0 && options.pin_first) {
      report.grid_box.push_back({0.0, 0.0});
    } else {
      report.grid_box.push_back(iv);
      integer_aligned = integer_aligned && is_integer(iv.lo);
    }
  }
  const double tolerance = integer_aligned ? 0.0 : options.tolerance;

  std::vector<std::uint64_t> counts(n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    counts[i] = (i == 0 && options.pin_first) ? 1 : lattice_count(report.grid_box[i], options.step);
    if (total > options.max_points / counts[i]) {
      throw ResourceError("grid has more than " + std::to_string(options.max_points) + " points");
    }
    total *= counts[i];
  }

  // Odometer over the lattice, last coordinate fastest, so points are
  // visited in lexicographic order and the first strict minimum wins ties.
  std::vector<std::uint64_t> idx(n, 0);
  MaxPlusVector x(n);
  for (std::uint64_t visited = 0; visited < total; ++visited) {
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = MaxPlusScalar(report.grid_box[i].lo + static_cast<double>(idx[i]) * options.step);
    }
    ++report.samples_evaluated;
    if (feasible(instance.constraint(), x, tolerance)) {
      const MaxPlusScalar value = objective(instance.objective(), x);
      if (!report.feasible_found || value.value() < report.estimated_min.value()) {
        report.estimated_min = value;
        report.argmin = x;
        report.feasible_found = true;
      }
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < counts[i]) break;
      idx[i] = 0;
    }
  }
  return report;
}

namespace {

template <Semifield S>
class CycleEnumeration {
 public:
  explicit CycleEnumeration(const Matrix<S>& a) : a_(a), on_path_(a.rows(), 0) {}

  Scalar<S> run() {
    for (std::size_t s = 0; s < a_.rows(); ++s) {
      start_ = s;
      on_path_[s] = 1;
      extend(s, Scalar<S>::one(), 0);
      on_path_[s] = 0;
    }
    return best_;
  }

 private:
  // Cycles are rooted at their smallest vertex, so each is seen once per
  // rotation-free traversal.
  void extend(std::size_t v, Scalar<S> weight, unsigned length) {
    const std::size_t n = a_.rows();
    if (!a_(v, start_).is_zero()) {
      best_ += pow(weight * a_(v, start_), Rational(1, length + 1));
    }
    for (std::size_t w = start_ + 1; w < n; ++w) {
      if (on_path_[w] || a_(v, w).is_zero()) continue;
      on_path_[w] = 1;
      extend(w, weight * a_(v, w), length + 1);
      on_path_[w] = 0;
    }
  }

  const Matrix<S>& a_;
  std::vector<char> on_path_;
  std::size_t start_ = 0;
  Scalar<S> best_;
};

}  // namespace

template <Semifield S>
Scalar<S> cycle_mean_oracle(const Matrix<S>& a) {
  detail::require_square(a, "cycle mean oracle");
  if (a.rows() > kCycleEnumerationCap) {
    throw ResourceError("cycle enumeration is limited to n <= " +
                        std::to_string(kCycleEnumerationCap));
  }
  return CycleEnumeration<S>(a).run();
}

template Scalar<MaxPlus> cycle_mean_oracle(const Matrix<MaxPlus>&);
template Scalar<MinPlus> cycle_mean_oracle(const Matrix<MinPlus>&);

SampleReport sample_solution_family(const ProblemInstance<MaxPlus>& instance,
                                    const SolutionCone<MaxPlus>& cone, std::size_t trials,
                                    std::uint64_t seed, int u_range) {
  SampleReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-u_range, u_range);
  const Matrix<MaxPlus>& g = cone.generators;

  for (std::size_t t = 0; t < trials; ++t) {
    MaxPlusVector u(g.cols());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = MaxPlusScalar(dist(rng));
    const MaxPlusVector x = g * u;
    if (!is_regular(x)) {
      report.failures.push_back({t, u, "x = G u is not regular"});
      continue;
    }
    if (!leq(instance.constraint() * x, x)) {
      report.failures.push_back({t, u, "constraint B x <= x violated"});
      continue;
    }
    const MaxPlusScalar value = objective(instance.objective(), x);
    if (!(value == cone.theta)) {
      report.failures.push_back({t, u, "objective differs from theta"});
    }
  }
  return report;
}

LowerBoundReport check_lower_bound(const ProblemInstance<MaxPlus>& instance, MaxPlusScalar theta,
                                   std::size_t samples, std::uint64_t seed, int range,
                                   std::size_t max_attempts) {
  const std::size_t n = instance.order();
  if (max_attempts == 0) max_attempts = 100 * samples + 1000;
  LowerBoundReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-range, range);
  std::uniform_int_distribution<int> jitter(-2, 2);
  std::bernoulli_distribution near(0.5);

  // Columns of B^* span the feasible set when Tr(B) <= 1; they only steer
  // proposals, every candidate is still checked directly.
  const Matrix<MaxPlus> star = kleene_star(instance.constraint());

  MaxPlusVector x(n);
  MaxPlusVector u(n);
  while (report.accepted < samples && report.attempts < max_attempts) {
    ++report.attempts;
    if (near(rng)) {
      for (std::size_t j = 0; j < n; ++j) u[j] = MaxPlusScalar(coord(rng));
      x = star * u;
      for (std::size_t i = 0; i < n; ++i) x[i] = MaxPlusScalar(x[i].value() + jitter(rng));
    } else {
      for (std::size_t i = 0; i < n; ++i) x[i] = MaxPlusScalar(coord(rng));
    }
    if (!is_regular(x) || !leq(instance.constraint() * x, x)) continue;
    ++report.accepted;
    if (lt(objective(instance.objective(), x), theta)) {
      ++report.violations;
      if (!report.witness) report.witness = x;
    }
  }
  return report;
}

}  // namespace trop
