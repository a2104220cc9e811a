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

#include "trop/spectral.hpp"

#include <vector>

namespace trop {

template <Semifield S>
SpectralSummary<S> spectral_summary(const Matrix<S>& a) {
  detail::require_square(a, "spectral radius");
  const std::size_t n = a.rows();
  SpectralSummary<S> out;
  Matrix<S> power = a;
  for (unsigned m = 1; m <= n; ++m) {
    if (m > 1) power = power * a;
    const Scalar<S> tr = trace(power);
    out.per_power_traces.emplace_back(m, tr);
    out.lambda += pow(tr, Rational(1, m));
  }
  return out;
}

template <Semifield S>
Scalar<S> spectral_radius(const Matrix<S>& a) {
  return spectral_summary(a).lambda;
}

template <Semifield S>
Scalar<S> big_tr(const Matrix<S>& a) {
  detail::require_square(a, "Tr");
  Scalar<S> acc;
  Matrix<S> power = a;
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    if (m > 1) power = power * a;
    acc += trace(power);
  }
  return acc;
}

namespace {

// Vertices reachable from vertex 0, following arcs forward or backward.
template <Semifield S>
std::size_t reach_count(const Matrix<S>& a, bool forward) {
  const std::size_t n = a.rows();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      const Scalar<S> arc = forward ? a(v, w) : a(w, v);
      if (arc.is_zero() || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count;
}

}  // namespace

template <Semifield S>
bool is_irreducible(const Matrix<S>& a) {
  detail::require_square(a, "irreducibility test");
  const std::size_t n = a.rows();
  if (n == 1) return true;
  return reach_count(a, true) == n && reach_count(a, false) == n;
}

namespace {

template <Semifield S>
class BinomialExpansion {
 public:
  BinomialExpansion(const Matrix<S>& a, const Matrix<S>& b, unsigned m) : m_(m) {
    // a_b_pow_[i] = A B^i for i = 0..m-1
    Matrix<S> b_pow = Matrix<S>::identity(b.rows());
    for (unsigned i = 0; i < m; ++i) {
      a_b_pow_.push_back(a * b_pow);
      b_pow = b_pow * b;
    }
    trace_b_m_ = trace(b_pow);
  }

  Scalar<S> evaluate() {
    Scalar<S> acc = trace_b_m_;
    // A prefix of j factors (A B^i_1)...(A B^i_j) has consumed j + sum(i)
    // of the m slots; it contributes once all m slots are used.
    for (unsigned i = 0; i < m_; ++i) extend(a_b_pow_[i], 1 + i, acc);
    return acc;
  }

 private:
  void extend(const Matrix<S>& prefix, unsigned used, Scalar<S>& acc) {
    if (used == m_) {
      acc += trace(prefix);
      return;
    }
    for (unsigned i = 0; used + 1 + i <= m_; ++i) extend(prefix * a_b_pow_[i], used + 1 + i, acc);
  }

  unsigned m_;
  std::vector<Matrix<S>> a_b_pow_;
  Scalar<S> trace_b_m_;
};

}  // namespace

template <Semifield S>
Scalar<S> trace_binomial_rhs(const Matrix<S>& a, const Matrix<S>& b, unsigned m) {
  detail::require_square(a, "trace binomial");
  detail::require_square(b, "trace binomial");
  if (a.rows() != b.rows()) throw ShapeError("trace binomial: A and B differ in order");
  if (m == 0) throw DomainError("trace binomial: exponent must be at least 1");
  return BinomialExpansion<S>(a, b, m).evaluate();
}

template Scalar<MaxPlus> spectral_radius(const Matrix<MaxPlus>&);
template Scalar<MinPlus> spectral_radius(const Matrix<MinPlus>&);
template SpectralSummary<MaxPlus> spectral_summary(const Matrix<MaxPlus>&);
template SpectralSummary<MinPlus> spectral_summary(const Matrix<MinPlus>&);
template Scalar<MaxPlus> big_tr(const Matrix<MaxPlus>&);
template Scalar<MinPlus> big_tr(const Matrix<MinPlus>&);
template bool is_irreducible(const Matrix<MaxPlus>&);
template bool is_irreducible(const Matrix<MinPlus>&);
template Scalar<MaxPlus> trace_binomial_rhs(const Matrix<MaxPlus>&, const Matrix<MaxPlus>&,
                                            unsigned);
template Scalar<MinPlus> trace_binomial_rhs(const Matrix<MinPlus>&, const Matrix<MinPlus>&,
                                            unsigned);

}  // namespace trop
