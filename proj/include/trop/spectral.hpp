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

#include <utility>
#include <vector>

#include "trop/tensor.hpp"

namespace trop {

template <Semifield S>
struct SpectralSummary {
  Scalar<S> lambda;
  /// (m, tr A^m) for m = 1..n.
  std::vector<std::pair<unsigned, Scalar<S>>> per_power_traces;
};

/// Spectral radius as the sum over m = 1..n of tr^(1/m)(A^m).
template <Semifield S>
Scalar<S> spectral_radius(const Matrix<S>& a);

template <Semifield S>
SpectralSummary<S> spectral_summary(const Matrix<S>& a);

/// Tr(A) = tr A (+) ... (+) tr A^n.
template <Semifield S>
Scalar<S> big_tr(const Matrix<S>& a);

/// Strong connectivity of the digraph with an arc i -> j for every nonzero
/// a_ij. Every 1x1 matrix counts as irreducible.
template <Semifield S>
bool is_irreducible(const Matrix<S>& a);

/// Right-hand side of the trace binomial expansion of tr (A (+) B)^m:
///   tr B^m (+) sum_{k=1..m} sum_{i_1+..+i_k = m-k} tr(A B^i_1 ... A B^i_k).
/// Compositions are enumerated recursively over cached powers of B.
template <Semifield S>
Scalar<S> trace_binomial_rhs(const Matrix<S>& a, const Matrix<S>& b, unsigned m);

extern template Scalar<MaxPlus> spectral_radius(const Matrix<MaxPlus>&);
extern template Scalar<MinPlus> spectral_radius(const Matrix<MinPlus>&);
extern template SpectralSummary<MaxPlus> spectral_summary(const Matrix<MaxPlus>&);
extern template SpectralSummary<MinPlus> spectral_summary(const Matrix<MinPlus>&);
extern template Scalar<MaxPlus> big_tr(const Matrix<MaxPlus>&);
extern template Scalar<MinPlus> big_tr(const Matrix<MinPlus>&);
extern template bool is_irreducible(const Matrix<MaxPlus>&);
extern template bool is_irreducible(const Matrix<MinPlus>&);
extern template Scalar<MaxPlus> trace_binomial_rhs(const Matrix<MaxPlus>&,
                                                   const Matrix<MaxPlus>&, unsigned);
extern template Scalar<MinPlus> trace_binomial_rhs(const Matrix<MinPlus>&,
                                                   const Matrix<MinPlus>&, unsigned);

}  // namespace trop
