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

#include "trop/text_format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <vector>

namespace trop {

namespace {

// Beyond 2^53 not every integer is representable; such values use the
// shortest general form.
constexpr double kFixedIntegerLimit = 9007199254740992.0;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_dimension(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
    throw ParseError(line, "invalid dimension '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

template <Semifield S>
std::string format_scalar(Scalar<S> x) {
  if (x.is_zero()) return std::string(S::kZeroToken);
  const double v = x.value();
  std::array<char, 64> buf{};
  std::to_chars_result res;
  if (v == std::trunc(v) && std::fabs(v) < kFixedIntegerLimit) {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 0);
  } else {
    res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  }
  return std::string(buf.data(), res.ptr);
}

template <Semifield S>
Scalar<S> parse_scalar(std::string_view token, std::size_t line) {
  if (token == S::kZeroToken) return Scalar<S>::zero();
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(line, "malformed " + std::string(S::kName) + " scalar '" +
                               std::string(token) + "'");
  }
  return Scalar<S>(value);
}

template <Semifield S>
std::string format_matrix(const Matrix<S>& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_scalar(m(i, j));
    }
    out += '\n';
  }
  return out;
}

template <Semifield S>
Matrix<S> parse_matrix(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool have_header = false;
  std::vector<double> values;
  std::size_t rows_read = 0;

  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'rows cols'");
      rows = parse_dimension(tokens[0], line_no);
      cols = parse_dimension(tokens[1], line_no);
      have_header = true;
    } else {
      if (rows_read == rows) throw ParseError(line_no, "unexpected content after last row");
      if (tokens.size() != cols) {
        throw ParseError(line_no, "expected " + std::to_string(cols) + " entries, found " +
                                      std::to_string(tokens.size()));
      }
      for (const auto& tok : tokens) values.push_back(parse_scalar<S>(tok, line_no).value());
      ++rows_read;
    }
    if (end == text.size()) break;
  }

  if (!have_header) throw ParseError(line_no, "missing 'rows cols' header");
  if (rows_read != rows) {
    throw ParseError(line_no, "expected " + std::to_string(rows) + " rows, found " +
                                  std::to_string(rows_read));
  }
  return Matrix<S>::from_values(rows, cols, values);
}

template std::string format_scalar(Scalar<MaxPlus>);
template std::string format_scalar(Scalar<MinPlus>);
template Scalar<MaxPlus> parse_scalar(std::string_view, std::size_t);
template Scalar<MinPlus> parse_scalar(std::string_view, std::size_t);
template std::string format_matrix(const Matrix<MaxPlus>&);
template std::string format_matrix(const Matrix<MinPlus>&);
template Matrix<MaxPlus> parse_matrix(std::string_view);
template Matrix<MinPlus> parse_matrix(std::string_view);

}  // namespace trop
