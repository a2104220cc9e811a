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

#include "trop/trop.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr double kNegInf = -INFINITY;

struct Free {
  void operator()(trop_matrix* m) const { trop_matrix_free(m); }
  void operator()(trop_cone* c) const { trop_cone_free(c); }
  void operator()(trop_oracle_report* r) const { trop_oracle_report_free(r); }
  void operator()(trop_sample_report* r) const { trop_sample_report_free(r); }
};
template <class T>
using Owned = std::unique_ptr<T, Free>;

Owned<trop_matrix> make(trop_semifield s, std::size_t r, std::size_t c, std::vector<double> v) {
  trop_matrix* m = nullptr;
  EXPECT_EQ(trop_matrix_create(s, r, c, v.data(), &m), TROP_OK) << trop_last_error_message();
  return Owned<trop_matrix>(m);
}

Owned<trop_matrix> worked_a() { return make(TROP_MAX_PLUS, 2, 2, {0, -3, -5, -2}); }
Owned<trop_matrix> worked_b() { return make(TROP_MAX_PLUS, 2, 2, {0, -8, 5, -3}); }

std::vector<double> values(const trop_matrix* m) {
  std::vector<double> out(trop_matrix_rows(m) * trop_matrix_cols(m));
  EXPECT_EQ(trop_matrix_values(m, out.data(), out.size()), TROP_OK);
  return out;
}

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(trop_version(), "1.0.0");
  EXPECT_STRNE(trop_status_string(TROP_ERR_PARSE), trop_status_string(TROP_ERR_SHAPE));
}

TEST(CApi, MatrixLifecycleAndAccessors) {
  auto a = worked_a();
  EXPECT_EQ(trop_matrix_rows(a.get()), 2u);
  EXPECT_EQ(trop_matrix_semifield(a.get()), TROP_MAX_PLUS);
  double v = 0;
  EXPECT_EQ(trop_matrix_get(a.get(), 1, 0, &v), TROP_OK);
  EXPECT_EQ(v, -5);
  EXPECT_EQ(trop_matrix_get(a.get(), 2, 0, &v), TROP_ERR_INVALID_ARGUMENT);
  double small[2];
  EXPECT_EQ(trop_matrix_values(a.get(), small, 2), TROP_ERR_BUFFER_TOO_SMALL);

  trop_matrix* zero = nullptr;
  ASSERT_EQ(trop_matrix_create(TROP_MAX_PLUS, 2, 3, nullptr, &zero), TROP_OK);
  Owned<trop_matrix> z(zero);
  for (double x : values(z.get())) EXPECT_EQ(x, kNegInf);

  trop_matrix* bad = nullptr;
  EXPECT_EQ(trop_matrix_create(TROP_MAX_PLUS, 0, 3, nullptr, &bad), TROP_ERR_SHAPE);
  EXPECT_EQ(bad, nullptr);
  const double nan_value[] = {NAN};
  EXPECT_EQ(trop_matrix_create(TROP_MAX_PLUS, 1, 1, nan_value, &bad), TROP_ERR_DOMAIN);
  EXPECT_EQ(trop_matrix_create(TROP_MAX_PLUS, 1, 1, nullptr, nullptr), TROP_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(trop_matrix_create(static_cast<trop_semifield>(9), 1, 1, nullptr, &bad),
            TROP_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ArithmeticMatchesWorkedExample) {
  auto a = worked_a();
  auto b = worked_b();
  trop_matrix* raw = nullptr;
  ASSERT_EQ(trop_matrix_mul(a.get(), b.get(), &raw), TROP_OK);
  Owned<trop_matrix> ab(raw);
  EXPECT_EQ(values(ab.get()), (std::vector<double>{2, -6, 3, -5}));

  ASSERT_EQ(trop_matrix_pow(a.get(), 2, &raw), TROP_OK);
  Owned<trop_matrix> a2(raw);
  EXPECT_EQ(values(a2.get()), (std::vector<double>{0, -3, -5, -4}));

  ASSERT_EQ(trop_matrix_scale(-2, a.get(), &raw), TROP_OK);
  Owned<trop_matrix> scaled(raw);
  ASSERT_EQ(trop_matrix_add(scaled.get(), b.get(), &raw), TROP_OK);
  Owned<trop_matrix> c(raw);
  EXPECT_EQ(values(c.get()), (std::vector<double>{0, -5, 5, -3}));

  ASSERT_EQ(trop_kleene_star(c.get(), &raw), TROP_OK);
  Owned<trop_matrix> star(raw);
  EXPECT_EQ(values(star.get()), (std::vector<double>{0, -5, 5, 0}));
  ASSERT_EQ(trop_reduce_generators(star.get(), &raw), TROP_OK);
  Owned<trop_matrix> gens(raw);
  EXPECT_EQ(trop_matrix_cols(gens.get()), 1u);

  double t = 0;
  EXPECT_EQ(trop_trace(ab.get(), &t), TROP_OK);
  EXPECT_EQ(t, 2);
  int eq = 0;
  EXPECT_EQ(trop_matrix_equal(a.get(), a.get(), &eq), TROP_OK);
  EXPECT_EQ(eq, 1);

  auto wide = make(TROP_MAX_PLUS, 2, 3, {0, 0, 0, 0, 0, 0});
  EXPECT_EQ(trop_matrix_add(a.get(), wide.get(), &raw), TROP_ERR_SHAPE);
  EXPECT_NE(std::string(trop_last_error_message()), "");
}

TEST(CApi, MixedSemifieldsAreRejected) {
  auto a = worked_a();
  auto m = make(TROP_MIN_PLUS, 2, 2, {0, 1, 1, 0});
  trop_matrix* raw = nullptr;
  EXPECT_EQ(trop_matrix_mul(a.get(), m.get(), &raw), TROP_ERR_SEMIFIELD);
  double theta = 0;
  EXPECT_EQ(trop_compute_theta(m.get(), m.get(), 20, &theta), TROP_ERR_SEMIFIELD);
  double lambda = 0;
  EXPECT_EQ(trop_spectral_radius(m.get(), &lambda), TROP_OK);
  EXPECT_EQ(lambda, 0);
}

TEST(CApi, ScalarTextBufferProtocol) {
  std::size_t required = 0;
  EXPECT_EQ(trop_scalar_format(TROP_MAX_PLUS, -2.5, nullptr, 0, &required), TROP_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(required, 5u);
  char buf[8];
  EXPECT_EQ(trop_scalar_format(TROP_MAX_PLUS, -2.5, buf, sizeof buf, nullptr), TROP_OK);
  EXPECT_STREQ(buf, "-2.5");
  EXPECT_EQ(trop_scalar_format(TROP_MAX_PLUS, kNegInf, buf, sizeof buf, nullptr), TROP_OK);
  EXPECT_STREQ(buf, "-inf");
  double v = 1;
  EXPECT_EQ(trop_scalar_parse(TROP_MIN_PLUS, "inf", &v), TROP_OK);
  EXPECT_EQ(v, INFINITY);
  EXPECT_EQ(trop_scalar_parse(TROP_MAX_PLUS, "inf", &v), TROP_ERR_PARSE);
}

TEST(CApi, ParseReportsLine) {
  const char text[] = "2 2\n0 -3\n-5\n";
  trop_matrix* raw = nullptr;
  EXPECT_EQ(trop_matrix_parse(TROP_MAX_PLUS, text, std::strlen(text), &raw), TROP_ERR_PARSE);
  EXPECT_EQ(trop_last_error_line(), 3u);

  const char good[] = "# A\n2 2\n0 -3\n-5 -2\n";
  ASSERT_EQ(trop_matrix_parse(TROP_MAX_PLUS, good, std::strlen(good), &raw), TROP_OK);
  Owned<trop_matrix> m(raw);
  std::size_t required = 0;
  trop_matrix_format(m.get(), nullptr, 0, &required);
  std::string out(required, '\0');
  ASSERT_EQ(trop_matrix_format(m.get(), out.data(), out.size(), nullptr), TROP_OK);
  EXPECT_STREQ(out.c_str(), "2 2\n0 -3\n-5 -2\n");
}

TEST(CApi, SpectralQueries) {
  auto a = worked_a();
  double lambda = 1;
  ASSERT_EQ(trop_spectral_radius(a.get(), &lambda), TROP_OK);
  EXPECT_EQ(lambda, 0);
  double traces[2];
  ASSERT_EQ(trop_power_traces(a.get(), traces, 2), TROP_OK);
  EXPECT_EQ(traces[0], 0);
  EXPECT_EQ(traces[1], 0);
  EXPECT_EQ(trop_power_traces(a.get(), traces, 1), TROP_ERR_BUFFER_TOO_SMALL);
  int irreducible = 0;
  ASSERT_EQ(trop_is_irreducible(a.get(), &irreducible), TROP_OK);
  EXPECT_EQ(irreducible, 1);
  auto b = worked_b();
  double rhs = 0;
  ASSERT_EQ(trop_trace_binomial_rhs(a.get(), b.get(), 2, &rhs), TROP_OK);
  EXPECT_EQ(rhs, 2);
  EXPECT_EQ(trop_trace_binomial_rhs(a.get(), b.get(), 0, &rhs), TROP_ERR_DOMAIN);
  double tr = 1;
  ASSERT_EQ(trop_big_tr(b.get(), &tr), TROP_OK);
  EXPECT_EQ(tr, 0);
}

TEST(CApi, SolveConstrained) {
  auto a = worked_a();
  auto b = worked_b();
  trop_cone* raw = nullptr;
  ASSERT_EQ(trop_solve_constrained(a.get(), b.get(), nullptr, &raw), TROP_OK);
  Owned<trop_cone> cone(raw);
  EXPECT_EQ(trop_cone_theta(cone.get()), 2);
  EXPECT_EQ(values(trop_cone_closure(cone.get())), (std::vector<double>{0, -5, 5, 0}));
  EXPECT_EQ(values(trop_cone_generators(cone.get())), (std::vector<double>{0, 5}));
  EXPECT_EQ(trop_cone_reduced(cone.get()), 1);
  EXPECT_EQ(trop_cone_completeness_verified(cone.get()), 1);
  EXPECT_EQ(trop_cone_warning_count(cone.get()), 0u);
  trop_hypotheses h;
  trop_cone_hypotheses(cone.get(), &h);
  EXPECT_EQ(h.spectral_radius, 0);
  EXPECT_EQ(h.constraint_tr_ok, 1);

  const double x[] = {0, 5};
  double value = 0;
  ASSERT_EQ(trop_objective(a.get(), x, 2, &value), TROP_OK);
  EXPECT_EQ(value, 2);
  int ok = 0;
  ASSERT_EQ(trop_is_solution(a.get(), b.get(), 2, x, 2, &ok), TROP_OK);
  EXPECT_EQ(ok, 1);
  const double irregular[] = {0, kNegInf};
  EXPECT_EQ(trop_objective(a.get(), irregular, 2, &value), TROP_ERR_DOMAIN);
}

TEST(CApi, HypothesisViolationsAreListed) {
  auto a = make(TROP_MAX_PLUS, 2, 2, {kNegInf, 0, kNegInf, kNegInf});
  auto b = make(TROP_MAX_PLUS, 2, 2, {1, kNegInf, kNegInf, kNegInf});
  trop_cone* raw = nullptr;
  EXPECT_EQ(trop_solve_constrained(a.get(), b.get(), nullptr, &raw), TROP_ERR_HYPOTHESIS);
  EXPECT_EQ(raw, nullptr);
  ASSERT_EQ(trop_last_violation_count(), 3u);
  EXPECT_NE(std::string(trop_last_violation(0)), "");
  EXPECT_EQ(trop_last_violation(3), nullptr);

  auto diag = make(TROP_MAX_PLUS, 2, 2, {1, kNegInf, kNegInf, 2});
  auto zero = make(TROP_MAX_PLUS, 2, 2, {kNegInf, kNegInf, kNegInf, kNegInf});
  trop_solve_options opts;
  trop_solve_options_init(&opts);
  EXPECT_EQ(opts.enumeration_cap, 20u);
  opts.override_hypotheses = 1;
  ASSERT_EQ(trop_solve_constrained(diag.get(), zero.get(), &opts, &raw), TROP_OK);
  Owned<trop_cone> cone(raw);
  EXPECT_EQ(trop_cone_completeness_verified(cone.get()), 0);
  EXPECT_GT(trop_cone_warning_count(cone.get()), 0u);
  EXPECT_EQ(trop_cone_nonregular_count(cone.get()), 2u);
  EXPECT_EQ(trop_cone_warning(cone.get(), 99), nullptr);
}

TEST(CApi, LinearInequality) {
  auto b = worked_b();
  trop_inequality_result r;
  trop_matrix* raw = nullptr;
  ASSERT_EQ(trop_solve_linear_inequality(b.get(), &r, &raw), TROP_OK);
  Owned<trop_matrix> gens(raw);
  EXPECT_EQ(r.feasible, 1);
  EXPECT_EQ(values(gens.get()), (std::vector<double>{0, -8, 5, 0}));

  auto bad = make(TROP_MAX_PLUS, 2, 2, {1, -8, 5, -3});
  ASSERT_EQ(trop_solve_linear_inequality(bad.get(), &r, &raw), TROP_OK);
  EXPECT_EQ(r.feasible, 0);
  EXPECT_EQ(r.tr_value, 2);
  EXPECT_EQ(raw, nullptr);
}

TEST(CApi, OracleAndSampling) {
  auto a = worked_a();
  auto b = worked_b();
  trop_grid_options g;
  trop_grid_options_init(&g);
  trop_interval box{-10, 10};
  g.box = &box;
  g.box_count = 1;
  g.step = 0.5;
  trop_oracle_report* raw = nullptr;
  ASSERT_EQ(trop_grid_min(a.get(), b.get(), &g, &raw), TROP_OK);
  Owned<trop_oracle_report> report(raw);
  EXPECT_EQ(trop_oracle_estimated_min(report.get()), 2);
  EXPECT_EQ(trop_oracle_feasible_found(report.get()), 1);
  EXPECT_EQ(trop_oracle_samples_evaluated(report.get()), 41u);
  double argmin[2];
  ASSERT_EQ(trop_oracle_argmin(report.get(), argmin, 2), TROP_OK);
  EXPECT_EQ(argmin[1], 5);

  double mean = 1;
  ASSERT_EQ(trop_cycle_mean_oracle(a.get(), &mean), TROP_OK);
  EXPECT_EQ(mean, 0);

  trop_cone* cone_raw = nullptr;
  ASSERT_EQ(trop_solve_constrained(a.get(), b.get(), nullptr, &cone_raw), TROP_OK);
  Owned<trop_cone> cone(cone_raw);
  trop_sample_report* s = nullptr;
  ASSERT_EQ(trop_sample_solution_family(a.get(), b.get(), cone.get(), 500, 4, &s), TROP_OK);
  Owned<trop_sample_report> sample(s);
  EXPECT_EQ(trop_sample_trials(sample.get()), 500u);
  EXPECT_EQ(trop_sample_failure_count(sample.get()), 0u);
  double u[1];
  EXPECT_EQ(trop_sample_failure_u(sample.get(), 0, u, 1), TROP_ERR_INVALID_ARGUMENT);

  trop_lower_bound_result lb;
  ASSERT_EQ(trop_check_lower_bound(a.get(), b.get(), 2, 1000, 5, &lb), TROP_OK);
  EXPECT_EQ(lb.accepted, 1000u);
  EXPECT_EQ(lb.violations, 0u);
}

TEST(CApi, ErrorsAreThreadLocal) {
  auto a = worked_a();
  trop_matrix* raw = nullptr;
  ASSERT_EQ(trop_matrix_pow(a.get(), 2, &raw), TROP_OK);
  trop_matrix_free(raw);
  std::thread([] {
    double v = 0;
    EXPECT_EQ(trop_scalar_parse(TROP_MAX_PLUS, "oops", &v), TROP_ERR_PARSE);
  }).join();
  const char text[] = "1 1\nzz\n";
  EXPECT_EQ(trop_matrix_parse(TROP_MAX_PLUS, text, std::strlen(text), &raw), TROP_ERR_PARSE);
  const std::string mine = trop_last_error_message();
  std::thread([] {
    auto wide = make(TROP_MAX_PLUS, 1, 2, {0, 0});
    trop_matrix* out = nullptr;
    EXPECT_EQ(trop_kleene_star(wide.get(), &out), TROP_ERR_SHAPE);
  }).join();
  EXPECT_EQ(trop_last_error_message(), mine);
}

}  // namespace
