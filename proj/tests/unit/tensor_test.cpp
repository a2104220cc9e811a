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

#include <gtest/gtest.h>

#include <vector>

#include "support/generators.hpp"
#include "support/reference.hpp"
#include "trop/spectral.hpp"
#include "trop/tensor.hpp"

namespace trop {
namespace {

using M = MaxPlusMatrix;
using V = MaxPlusVector;
using X = MaxPlusScalar;
constexpr double kNegInf = reference::kNegInf;

const M kA{{0, -3}, {-5, -2}};
const M kB{{0, -8}, {5, -3}};

void expect_matches_reference(const M& m, const reference::Dense& d) {
  ASSERT_EQ(m.rows(), d.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j).value(), d[i][j]) << i << "," << j;
  }
}

TEST(Matrix, ConstructionAndShape) {
  EXPECT_THROW(M(0, 3), ShapeError);
  EXPECT_THROW(V(0), ShapeError);
  EXPECT_THROW((M{{1, 2}, {3}}), ShapeError);
  const std::vector<double> values{1, 2, 3};
  EXPECT_THROW(M::from_values(2, 2, values), ShapeError);
  EXPECT_TRUE(M::zero(2, 3).is_zero());
  EXPECT_EQ(M::identity(2), (M{{0, kNegInf}, {kNegInf, 0}}));
}

TEST(Matrix, AddExamples) {
  const M scaled = X(-2) * kA;
  EXPECT_EQ(scaled, (M{{-2, -5}, {-7, -4}}));
  EXPECT_EQ(scaled + kB, (M{{0, -5}, {5, -3}}));
  EXPECT_EQ(kA + M::zero(2, 2), kA);
  EXPECT_EQ(kA + kA, kA);
  EXPECT_THROW(kA + M::zero(2, 3), ShapeError);
}

TEST(Matrix, MultiplyExamples) {
  EXPECT_EQ(kA * kB, (M{{2, -6}, {3, -5}}));
  EXPECT_EQ(kA * M::identity(2), kA);
  EXPECT_TRUE((kA * M::zero(2, 2)).is_zero());
  EXPECT_THROW(kA * M::zero(3, 3), ShapeError);
  EXPECT_THROW(kA * V({1, 2, 3}), ShapeError);
}

TEST(Matrix, PowersAgainstDenseReference) {
  const auto dense_a = reference::to_dense(kA);
  EXPECT_EQ(mat_pow(kA, 2), (M{{0, -3}, {-5, -4}}));
  expect_matches_reference(mat_pow(kA, 2), reference::power(dense_a, 2));
  EXPECT_EQ(mat_pow(kA, 0), M::identity(2));
  EXPECT_EQ(mat_pow(kB, 2), kB);
  expect_matches_reference(mat_pow(kB, 2), reference::power(reference::to_dense(kB), 2));
  EXPECT_THROW(mat_pow(M::zero(2, 3), 2), ShapeError);
}

TEST(Matrix, ScalarMultiple) {
  EXPECT_EQ(scalar_mul(X::one(), kA), kA);
  EXPECT_TRUE(scalar_mul(X::zero(), kA).is_zero());
}

TEST(Matrix, TraceExamples) {
  EXPECT_EQ(trace(kA), X(0));
  EXPECT_EQ(trace(M::identity(4)), X::one());
  EXPECT_EQ(trace(kA * kB), X(2));
  EXPECT_TRUE(trace(M::zero(3, 3)).is_zero());
  EXPECT_THROW(trace(M::zero(2, 3)), ShapeError);
}

TEST(Vector, ConjugateAndRegularity) {
  EXPECT_EQ(conjugate(V{0, 5}), (V{0, -5}));
  EXPECT_EQ(conjugate(V{kNegInf, 3}), (V{kNegInf, -3}));
  EXPECT_EQ(dot(conjugate(V{4, -7}), V{4, -7}), X::one());
  EXPECT_THROW(conjugate(V{kNegInf, kNegInf}), DomainError);
  EXPECT_TRUE(is_regular(V{0, 5}));
  EXPECT_FALSE(is_regular(V{kNegInf, 3}));
}

TEST(Vector, Collinearity) {
  EXPECT_EQ(collinear(V{0, 5}, V{-5, 0}), X(-5));
  EXPECT_FALSE(collinear(V{0, 5}, V{0, 4}).has_value());
  EXPECT_EQ(collinear(V{kNegInf, 1}, V{kNegInf, 3}), X(2));
  EXPECT_FALSE(collinear(V{kNegInf, 1}, V{2, kNegInf}).has_value());
  EXPECT_FALSE(collinear(V{kNegInf, kNegInf}, V{kNegInf, kNegInf}).has_value());
  EXPECT_FALSE(collinear(V{1}, V{1, 2}).has_value());
}

TEST(Generators, ReduceExamples) {
  const M closure{{0, -5}, {5, 0}};
  EXPECT_EQ(reduce_generators(closure), (M{{0}, {5}}));
  EXPECT_EQ(reduce_generators(M::identity(2)), M::identity(2));
  const M duplicated{{1, 3, 1}, {2, 0, 2}};
  EXPECT_EQ(reduce_generators(duplicated), (M{{1, 3}, {2, 0}}));
}

TEST(KleeneStar, Examples) {
  EXPECT_EQ(kleene_star(kA), (M{{0, -3}, {-5, 0}}));
  EXPECT_EQ(kleene_star(M{{0, -5}, {5, -3}}), (M{{0, -5}, {5, 0}}));
  EXPECT_EQ(kleene_star(M::zero(3, 3)), M::identity(3));
  EXPECT_EQ(kleene_star(kB), (M{{0, -8}, {5, 0}}));
  EXPECT_THROW(kleene_star(M::zero(1, 2)), ShapeError);
}

TEST(KleeneStar, MinPlusIsShortestPaths) {
  using Mn = Matrix<MinPlus>;
  constexpr double kInf = -kNegInf;
  const Mn g{{kInf, 4, 1}, {kInf, kInf, kInf}, {kInf, 2, kInf}};
  EXPECT_EQ(kleene_star(g), (Mn{{0, 3, 1}, {kInf, 0, kInf}, {kInf, 2, 0}}));
}

// ---- properties ----

class TensorProperties : public ::testing::Test {
 protected:
  testing::Rng rng{4242};
};

TEST_F(TensorProperties, StarMatchesLongestPathsAndIsClosed) {
  for (int t = 0; t < 500; ++t) {
    const M a = testing::random_tr_feasible(rng, testing::random_order(rng, 1, 6));
    const M star = kleene_star(a);
    expect_matches_reference(star, reference::longest_paths(reference::to_dense(a)));
    ASSERT_EQ(star * star, star);
    ASSERT_EQ(kleene_star(star), star);
  }
}

TEST_F(TensorProperties, TraceIdentities) {
  for (int t = 0; t < 1'000; ++t) {
    const std::size_t n = testing::random_order(rng, 1, 5);
    const M a = testing::random_square(rng, n);
    const M b = testing::random_square(rng, n);
    const X c = testing::random_scalar(rng, {-9, 9, 0.0});
    ASSERT_EQ(trace(a * b), trace(b * a));
    ASSERT_EQ(trace(a + b), trace(a) + trace(b));
    ASSERT_EQ(trace(c * a), c * trace(a));
  }
}

TEST_F(TensorProperties, ProductMatchesReferenceAndAssociates) {
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = testing::random_order(rng, 1, 5);
    const M a = testing::random_square(rng, n);
    const M b = testing::random_square(rng, n);
    const M c = testing::random_square(rng, n);
    expect_matches_reference(a * b, reference::multiply(reference::to_dense(a), reference::to_dense(b)));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST_F(TensorProperties, ConjugateReversesOrder) {
  for (int t = 0; t < 1'000; ++t) {
    const std::size_t n = testing::random_order(rng, 1, 5);
    const V x = testing::random_regular(rng, n);
    V y = x;
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] * X(std::uniform_int_distribution<int>(0, 4)(rng));
    ASSERT_TRUE(leq(x, y));
    ASSERT_TRUE(leq(conjugate(y), conjugate(x)));
    ASSERT_TRUE(leq(M::identity(n), outer(x, conjugate(x))));
    ASSERT_EQ(dot(conjugate(x), x), X::one());
  }
}

TEST_F(TensorProperties, ReductionKeepsSpan) {
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = testing::random_order(rng, 1, 4);
    const M base = testing::random_matrix(rng, n, 3, {-9, 9, 0.0});
    // Append scaled copies of random columns so that reduction has work.
    M g(n, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      const std::size_t src = j < 3 ? j : std::uniform_int_distribution<std::size_t>(0, 2)(rng);
      const X c = j < 3 ? X::one() : testing::random_scalar(rng, {-5, 5, 0.0});
      for (std::size_t i = 0; i < n; ++i) g(i, j) = c * base(i, src);
    }
    const M r = reduce_generators(g);
    ASSERT_LE(r.cols(), 3u);
    for (std::size_t j = 0; j < g.cols(); ++j) {
      bool represented = false;
      for (std::size_t k = 0; k < r.cols() && !represented; ++k) {
        if (const auto c = collinear(r.column(k), g.column(j))) {
          represented = (*c * r.column(k) == g.column(j));
        }
        represented = represented || r.column(k) == g.column(j);
      }
      ASSERT_TRUE(represented) << "column " << j;
    }
  }
}

}  // namespace
}  // namespace trop
