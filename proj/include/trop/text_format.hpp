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

/// \file text_format.hpp
/// Plain-text scalars and matrices.
///
/// Scalar tokens are decimal literals, or the zero token of the semifield
/// (`-inf` for max-plus, `inf` for min-plus). Integer values print without a
/// decimal point; other values print as the shortest decimal that reads back
/// to the same double.
///
/// A matrix file holds optional `#` comment lines and blank lines, a header
/// line `rows cols`, then `rows` lines of `cols` whitespace-separated tokens:
///
///   # objective
///   2 2
///   0 -3
///   -5 -2

#include <cstddef>
#include <string>
#include <string_view>

#include "trop/tensor.hpp"

namespace trop {

template <Semifield S>
std::string format_scalar(Scalar<S> x);

/// Throws ParseError tagged with `line` (0 if none).
template <Semifield S>
Scalar<S> parse_scalar(std::string_view token, std::size_t line = 0);

template <Semifield S>
std::string format_matrix(const Matrix<S>& m);

/// Throws ParseError with the 1-based line of the first problem.
template <Semifield S>
Matrix<S> parse_matrix(std::string_view text);

extern template std::string format_scalar(Scalar<MaxPlus>);
extern template std::string format_scalar(Scalar<MinPlus>);
extern template Scalar<MaxPlus> parse_scalar(std::string_view, std::size_t);
extern template Scalar<MinPlus> parse_scalar(std::string_view, std::size_t);
extern template std::string format_matrix(const Matrix<MaxPlus>&);
extern template std::string format_matrix(const Matrix<MinPlus>&);
extern template Matrix<MaxPlus> parse_matrix(std::string_view);
extern template Matrix<MinPlus> parse_matrix(std::string_view);

}  // namespace trop
