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

/// \file semiring.hpp
/// Idempotent semifields over the extended reals.
///
/// A semifield policy `S` supplies the zero and identity elements together
/// with the idempotent addition and the induced total order; multiplication
/// is always ordinary real addition and inversion is negation. Scalars are
/// stored as IEEE doubles, with the infinity of the appropriate sign reserved
/// for the zero element. The opposite infinity and NaN are never valid.
///
///   max-plus:  a (+) b = max(a, b),  zero = -inf,  one = 0
///   min-plus:  a (+) b = min(a, b),  zero = +inf,  one = 0
///
/// All comparisons are exact. Signed zeros are folded to +0 on construction,
/// so equality of values coincides with bitwise equality.

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include "trop/error.hpp"

namespace trop {

enum class SemifieldTag { kMaxPlus, kMinPlus };

std::string_view to_string(SemifieldTag tag) noexcept;
/// Accepts "max-plus" and "min-plus"; throws std::invalid_argument otherwise.
SemifieldTag semifield_from_string(std::string_view name);

struct MaxPlus {
  static constexpr SemifieldTag kTag = SemifieldTag::kMaxPlus;
  static constexpr std::string_view kName = "max-plus";
  static constexpr std::string_view kZeroToken = "-inf";
  static constexpr double kZero = -std::numeric_limits<double>::infinity();
  static constexpr double kOne = 0.0;

  static constexpr double plus(double a, double b) noexcept { return a < b ? b : a; }
  static constexpr bool leq(double a, double b) noexcept { return a <= b; }
};

struct MinPlus {
  static constexpr SemifieldTag kTag = SemifieldTag::kMinPlus;
  static constexpr std::string_view kName = "min-plus";
  static constexpr std::string_view kZeroToken = "inf";
  static constexpr double kZero = std::numeric_limits<double>::infinity();
  static constexpr double kOne = 0.0;

  static constexpr double plus(double a, double b) noexcept { return b < a ? b : a; }
  static constexpr bool leq(double a, double b) noexcept { return b <= a; }
};

template <class S>
concept Semifield = requires(double a, double b) {
  { S::kTag } -> std::convertible_to<SemifieldTag>;
  { S::kName } -> std::convertible_to<std::string_view>;
  { S::kZeroToken } -> std::convertible_to<std::string_view>;
  { S::kZero } -> std::convertible_to<double>;
  { S::kOne } -> std::convertible_to<double>;
  { S::plus(a, b) } -> std::same_as<double>;
  { S::leq(a, b) } -> std::same_as<bool>;
};

/// Exact rational exponent with a positive denominator.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational exponent with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// One element of the semifield `S`.
template <Semifield S>
class Scalar {
 public:
  using semifield_type = S;

  /// The zero element.
  constexpr Scalar() noexcept : value_(S::kZero) {}

  /// Throws DomainError for NaN and for the infinity that has no meaning in
  /// `S` (+inf in max-plus, -inf in min-plus).
  explicit Scalar(double value) : value_(checked(value)) {}

  static constexpr Scalar zero() noexcept { return Scalar(); }
  static Scalar one() noexcept { return Scalar(S::kOne); }

  constexpr double value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == S::kZero; }

  friend constexpr bool operator==(const Scalar&, const Scalar&) = default;

  /// Semifield addition.
  friend Scalar operator+(Scalar x, Scalar y) noexcept {
    return Scalar(Raw{}, S::plus(x.value_, y.value_));
  }
  Scalar& operator+=(Scalar other) noexcept { return *this = *this + other; }

  /// Semifield multiplication; zero is absorbing.
  friend Scalar operator*(Scalar x, Scalar y) {
    if (x.is_zero() || y.is_zero()) return zero();
    const double sum = x.value_ + y.value_;
    if (std::isinf(sum)) throw DomainError("scalar product overflows the finite range");
    return Scalar(Raw{}, sum + 0.0);
  }
  Scalar& operator*=(Scalar other) { return *this = *this * other; }

 private:
  struct Raw {};
  constexpr Scalar(Raw, double v) noexcept : value_(v) {}

  static double checked(double v) {
    if (std::isnan(v)) throw DomainError("NaN is not a semifield element");
    if (std::isinf(v) && v != S::kZero) {
      throw DomainError(std::string(v > 0 ? "+inf" : "-inf") + " is not an element of " +
                        std::string(S::kName));
    }
    return v + 0.0;  // folds -0 into +0
  }

  double value_;
};

template <Semifield S>
Scalar<S> add(Scalar<S> x, Scalar<S> y) noexcept {
  return x + y;
}

template <Semifield S>
Scalar<S> mul(Scalar<S> x, Scalar<S> y) {
  return x * y;
}

/// Multiplicative inverse. Throws DomainError for the zero element.
template <Semifield S>
Scalar<S> inv(Scalar<S> x) {
  if (x.is_zero()) throw DomainError("zero element has no inverse");
  return Scalar<S>(0.0 - x.value());
}

/// x^p for a rational exponent, evaluated as exponent scaling x * num / den.
/// The zero element admits only positive exponents.
template <Semifield S>
Scalar<S> pow(Scalar<S> x, Rational p) {
  if (x.is_zero()) {
    if (p.num() <= 0) throw DomainError("zero element raised to a non-positive power");
    return x;
  }
  if (p.num() == 0) return Scalar<S>::one();
  const double scaled = x.value() * static_cast<double>(p.num()) / static_cast<double>(p.den());
  if (std::isinf(scaled)) throw DomainError("scalar power overflows the finite range");
  return Scalar<S>(scaled);
}

/// The order induced by addition: x <= y iff x (+) y == y.
template <Semifield S>
constexpr bool leq(Scalar<S> x, Scalar<S> y) noexcept {
  return S::leq(x.value(), y.value());
}

template <Semifield S>
constexpr bool lt(Scalar<S> x, Scalar<S> y) noexcept {
  return leq(x, y) && !(x == y);
}

/// Lower of the two in the semifield order.
template <Semifield S>
constexpr Scalar<S> meet(Scalar<S> x, Scalar<S> y) noexcept {
  return leq(x, y) ? x : y;
}

using MaxPlusScalar = Scalar<MaxPlus>;
using MinPlusScalar = Scalar<MinPlus>;

}  // namespace trop
