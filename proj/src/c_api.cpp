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

#include <cstdint>
#include <cstring>
#include <new>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "trop/oracle.hpp"
#include "trop/solver.hpp"
#include "trop/spectral.hpp"
#include "trop/text_format.hpp"

using trop::Matrix;
using trop::MaxPlus;
using trop::MinPlus;

struct trop_matrix {
  std::variant<Matrix<MaxPlus>, Matrix<MinPlus>> m;
};

struct trop_cone {
  trop::SolutionCone<MaxPlus> cone;
  trop_matrix closure;
  trop_matrix generators;
};

struct trop_oracle_report {
  trop::OracleReport report;
};

struct trop_sample_report {
  trop::SampleReport report;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::vector<std::string> violations;
};

thread_local LastError g_last_error;

class ApiError : public std::runtime_error {
 public:
  ApiError(trop_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  trop_status status() const noexcept { return status_; }

 private:
  trop_status status_;
};

trop_status fail(trop_status status, const char* what) {
  g_last_error.message = what;
  return status;
}

template <class F>
trop_status guarded(F&& body) noexcept {
  try {
    g_last_error = LastError{};
    body();
    return TROP_OK;
  } catch (const ApiError& e) {
    return fail(e.status(), e.what());
  } catch (const trop::HypothesisError& e) {
    g_last_error.violations = e.violations();
    return fail(TROP_ERR_HYPOTHESIS, e.what());
  } catch (const trop::ParseError& e) {
    g_last_error.line = e.line();
    return fail(TROP_ERR_PARSE, e.what());
  } catch (const trop::DomainError& e) {
    return fail(TROP_ERR_DOMAIN, e.what());
  } catch (const trop::ShapeError& e) {
    return fail(TROP_ERR_SHAPE, e.what());
  } catch (const trop::ResourceError& e) {
    return fail(TROP_ERR_RESOURCE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TROP_ERR_RESOURCE, "out of memory");
  } catch (const std::invalid_argument& e) {
    return fail(TROP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(TROP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TROP_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw ApiError(TROP_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

void require_semifield(trop_semifield s) {
  if (s != TROP_MAX_PLUS && s != TROP_MIN_PLUS) {
    throw ApiError(TROP_ERR_INVALID_ARGUMENT, "unknown semifield");
  }
}

template <class F>
auto with_semifield(trop_semifield s, F&& f) {
  require_semifield(s);
  if (s == TROP_MAX_PLUS) return f(MaxPlus{});
  return f(MinPlus{});
}

const Matrix<MaxPlus>& max_plus(const trop_matrix* m, const char* name) {
  require(m, name);
  if (const auto* p = std::get_if<Matrix<MaxPlus>>(&m->m)) return *p;
  throw ApiError(TROP_ERR_SEMIFIELD, std::string(name) + ": operation requires max-plus");
}

// Calls f(A, B) with both matrices from the same semifield.
template <class F>
void with_pair(const trop_matrix* a, const trop_matrix* b, F&& f) {
  require(a, "a");
  require(b, "b");
  if (a->m.index() != b->m.index()) {
    throw ApiError(TROP_ERR_SEMIFIELD, "operands belong to different semifields");
  }
  std::visit(
      [&](const auto& ma) {
        using M = std::decay_t<decltype(ma)>;
        f(ma, std::get<M>(b->m));
      },
      a->m);
}

template <class F>
void with_matrix(const trop_matrix* a, F&& f) {
  require(a, "matrix");
  std::visit(f, a->m);
}

template <class M>
trop_matrix* wrap(M&& m) {
  return new trop_matrix{std::forward<M>(m)};
}

void copy_out(const std::string& text, char* buf, std::size_t buf_size, std::size_t* required) {
  if (required != nullptr) *required = text.size() + 1;
  if (buf == nullptr || buf_size < text.size() + 1) {
    throw ApiError(TROP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  std::memcpy(buf, text.data(), text.size());
  buf[text.size()] = '\0';
}

trop::SolveOptions to_options(const trop_solve_options* options) {
  trop::SolveOptions out;
  if (options != nullptr) {
    out.enumeration_cap = options->enumeration_cap;
    out.override_hypotheses = options->override_hypotheses != 0;
  }
  return out;
}

trop::MaxPlusVector to_vector(const double* x, std::size_t n) {
  require(x, "x");
  return trop::MaxPlusVector::from_values(std::span<const double>(x, n));
}

trop_cone* wrap_cone(trop::SolutionCone<MaxPlus>&& cone) {
  trop_matrix closure{cone.closure};
  trop_matrix generators{cone.generators};
  return new trop_cone{std::move(cone), std::move(closure), std::move(generators)};
}

}  // namespace

extern "C" {

const char* trop_version(void) { return "1.0.0"; }

const char* trop_status_string(trop_status status) {
  switch (status) {
    case TROP_OK:
      return "ok";
    case TROP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TROP_ERR_DOMAIN:
      return "domain error";
    case TROP_ERR_SHAPE:
      return "shape error";
    case TROP_ERR_PARSE:
      return "parse error";
    case TROP_ERR_RESOURCE:
      return "resource error";
    case TROP_ERR_HYPOTHESIS:
      return "hypothesis error";
    case TROP_ERR_SEMIFIELD:
      return "semifield error";
    case TROP_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case TROP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* trop_last_error_message(void) { return g_last_error.message.c_str(); }
size_t trop_last_error_line(void) { return g_last_error.line; }
size_t trop_last_violation_count(void) { return g_last_error.violations.size(); }

const char* trop_last_violation(size_t index) {
  if (index >= g_last_error.violations.size()) return nullptr;
  return g_last_error.violations[index].c_str();
}

trop_status trop_scalar_format(trop_semifield semifield, double value, char* buf, size_t buf_size,
                               size_t* required) {
  return guarded([&] {
    const std::string text = with_semifield(semifield, [&](auto s) {
      using S = decltype(s);
      return trop::format_scalar(trop::Scalar<S>(value));
    });
    copy_out(text, buf, buf_size, required);
  });
}

trop_status trop_scalar_parse(trop_semifield semifield, const char* token, double* out) {
  return guarded([&] {
    require(token, "token");
    require(out, "out");
    *out = with_semifield(semifield, [&](auto s) {
      using S = decltype(s);
      return trop::parse_scalar<S>(token).value();
    });
  });
}

trop_status trop_matrix_create(trop_semifield semifield, size_t rows, size_t cols,
                               const double* values, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    *out = with_semifield(semifield, [&](auto s) {
      using S = decltype(s);
      if (values == nullptr) return wrap(Matrix<S>(rows, cols));
      return wrap(Matrix<S>::from_values(rows, cols, std::span<const double>(values, rows * cols)));
    });
  });
}

trop_status trop_matrix_identity(trop_semifield semifield, size_t n, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    *out = with_semifield(semifield, [&](auto s) {
      using S = decltype(s);
      return wrap(Matrix<S>::identity(n));
    });
  });
}

trop_status trop_matrix_parse(trop_semifield semifield, const char* text, size_t length,
                              trop_matrix** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    const std::string_view view(text, length);
    *out = with_semifield(semifield, [&](auto s) {
      using S = decltype(s);
      return wrap(trop::parse_matrix<S>(view));
    });
  });
}

trop_status trop_matrix_format(const trop_matrix* m, char* buf, size_t buf_size,
                               size_t* required) {
  return guarded([&] {
    with_matrix(m, [&](const auto& mat) { copy_out(trop::format_matrix(mat), buf, buf_size, required); });
  });
}

void trop_matrix_free(trop_matrix* m) { delete m; }

size_t trop_matrix_rows(const trop_matrix* m) {
  if (m == nullptr) return 0;
  return std::visit([](const auto& mat) { return mat.rows(); }, m->m);
}

size_t trop_matrix_cols(const trop_matrix* m) {
  if (m == nullptr) return 0;
  return std::visit([](const auto& mat) { return mat.cols(); }, m->m);
}

trop_semifield trop_matrix_semifield(const trop_matrix* m) {
  if (m != nullptr && m->m.index() == 1) return TROP_MIN_PLUS;
  return TROP_MAX_PLUS;
}

trop_status trop_matrix_get(const trop_matrix* m, size_t row, size_t col, double* out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(m, [&](const auto& mat) {
      if (row >= mat.rows() || col >= mat.cols()) {
        throw ApiError(TROP_ERR_INVALID_ARGUMENT, "matrix index out of range");
      }
      *out = mat(row, col).value();
    });
  });
}

trop_status trop_matrix_values(const trop_matrix* m, double* out, size_t count) {
  return guarded([&] {
    require(out, "out");
    with_matrix(m, [&](const auto& mat) {
      if (count < mat.rows() * mat.cols()) {
        throw ApiError(TROP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
      }
      for (std::size_t i = 0; i < mat.rows(); ++i) {
        for (std::size_t j = 0; j < mat.cols(); ++j) out[i * mat.cols() + j] = mat(i, j).value();
      }
    });
  });
}

trop_status trop_matrix_equal(const trop_matrix* a, const trop_matrix* b, int* out) {
  return guarded([&] {
    require(out, "out");
    require(a, "a");
    require(b, "b");
    *out = a->m == b->m ? 1 : 0;
  });
}

trop_status trop_matrix_add(const trop_matrix* a, const trop_matrix* b, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    with_pair(a, b, [&](const auto& ma, const auto& mb) { *out = wrap(ma + mb); });
  });
}

trop_status trop_matrix_mul(const trop_matrix* a, const trop_matrix* b, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    with_pair(a, b, [&](const auto& ma, const auto& mb) { *out = wrap(ma * mb); });
  });
}

trop_status trop_matrix_scale(double c, const trop_matrix* a, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) {
      using Sc = typename std::decay_t<decltype(ma)>::scalar_type;
      *out = wrap(Sc(c) * ma);
    });
  });
}

trop_status trop_matrix_pow(const trop_matrix* a, unsigned p, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) { *out = wrap(trop::mat_pow(ma, p)); });
  });
}

trop_status trop_trace(const trop_matrix* a, double* out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) { *out = trop::trace(ma).value(); });
  });
}

trop_status trop_kleene_star(const trop_matrix* a, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) { *out = wrap(trop::kleene_star(ma)); });
  });
}

trop_status trop_reduce_generators(const trop_matrix* g, trop_matrix** out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(g, [&](const auto& mg) { *out = wrap(trop::reduce_generators(mg)); });
  });
}

trop_status trop_spectral_radius(const trop_matrix* a, double* out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) { *out = trop::spectral_radius(ma).value(); });
  });
}

trop_status trop_power_traces(const trop_matrix* a, double* out, size_t count) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) {
      const auto summary = trop::spectral_summary(ma);
      if (count < summary.per_power_traces.size()) {
        throw ApiError(TROP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
      }
      for (std::size_t k = 0; k < summary.per_power_traces.size(); ++k) {
        out[k] = summary.per_power_traces[k].second.value();
      }
    });
  });
}

trop_status trop_big_tr(const trop_matrix* a, double* out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) { *out = trop::big_tr(ma).value(); });
  });
}

trop_status trop_is_irreducible(const trop_matrix* a, int* out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) { *out = trop::is_irreducible(ma) ? 1 : 0; });
  });
}

trop_status trop_trace_binomial_rhs(const trop_matrix* a, const trop_matrix* b, unsigned m,
                                    double* out) {
  return guarded([&] {
    require(out, "out");
    with_pair(a, b, [&](const auto& ma, const auto& mb) {
      *out = trop::trace_binomial_rhs(ma, mb, m).value();
    });
  });
}

void trop_solve_options_init(trop_solve_options* options) {
  if (options == nullptr) return;
  options->enumeration_cap = trop::kDefaultEnumerationCap;
  options->override_hypotheses = 0;
}

trop_status trop_solve_linear_inequality(const trop_matrix* a, trop_inequality_result* result,
                                         trop_matrix** generators) {
  return guarded([&] {
    require(result, "result");
    require(generators, "generators");
    with_matrix(a, [&](const auto& ma) {
      auto sol = trop::solve_linear_inequality(ma);
      trop_matrix* g = sol.generators ? wrap(std::move(*sol.generators)) : nullptr;
      result->feasible = sol.verdict.feasible ? 1 : 0;
      result->tr_value = sol.verdict.tr_value.value();
      result->completeness_verified = sol.completeness_verified ? 1 : 0;
      *generators = g;
    });
  });
}

trop_status trop_compute_theta(const trop_matrix* a, const trop_matrix* b,
                               unsigned enumeration_cap, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = trop::compute_theta(max_plus(a, "A"), max_plus(b, "B"), enumeration_cap).value();
  });
}

trop_status trop_objective(const trop_matrix* a, const double* x, size_t n, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = trop::objective(max_plus(a, "A"), to_vector(x, n)).value();
  });
}

trop_status trop_is_solution(const trop_matrix* a, const trop_matrix* b, double theta,
                             const double* x, size_t n, int* out) {
  return guarded([&] {
    require(out, "out");
    const trop::ProblemInstance<MaxPlus> instance(max_plus(a, "A"), max_plus(b, "B"));
    *out = trop::is_solution(instance, trop::MaxPlusScalar(theta), to_vector(x, n)) ? 1 : 0;
  });
}

trop_status trop_solve_constrained(const trop_matrix* a, const trop_matrix* b,
                                   const trop_solve_options* options, trop_cone** out) {
  return guarded([&] {
    require(out, "out");
    const trop::ProblemInstance<MaxPlus> instance(max_plus(a, "A"), max_plus(b, "B"));
    *out = wrap_cone(trop::solve_constrained(instance, to_options(options)));
  });
}

trop_status trop_solve_unconstrained(const trop_matrix* a, const trop_solve_options* options,
                                     trop_cone** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap_cone(trop::solve_unconstrained(max_plus(a, "A"), to_options(options)));
  });
}

void trop_cone_free(trop_cone* cone) { delete cone; }
double trop_cone_theta(const trop_cone* cone) { return cone->cone.theta.value(); }
const trop_matrix* trop_cone_closure(const trop_cone* cone) { return &cone->closure; }
const trop_matrix* trop_cone_generators(const trop_cone* cone) { return &cone->generators; }
int trop_cone_reduced(const trop_cone* cone) { return cone->cone.reduced ? 1 : 0; }

int trop_cone_completeness_verified(const trop_cone* cone) {
  return cone->cone.completeness_verified ? 1 : 0;
}

void trop_cone_hypotheses(const trop_cone* cone, trop_hypotheses* out) {
  if (cone == nullptr || out == nullptr) return;
  const auto& h = cone->cone.hypotheses;
  out->objective_irreducible = h.objective_irreducible;
  out->constraint_irreducible = h.constraint_irreducible;
  out->spectral_radius = h.spectral_radius.value();
  out->spectral_radius_positive = h.spectral_radius_positive;
  out->constraint_tr = h.constraint_tr.value();
  out->constraint_tr_ok = h.constraint_tr_ok;
  out->combined_irreducible = h.combined_irreducible;
}

size_t trop_cone_warning_count(const trop_cone* cone) { return cone->cone.warnings.size(); }

const char* trop_cone_warning(const trop_cone* cone, size_t index) {
  if (index >= cone->cone.warnings.size()) return nullptr;
  return cone->cone.warnings[index].c_str();
}

size_t trop_cone_nonregular_count(const trop_cone* cone) {
  return cone->cone.nonregular_generators.size();
}

size_t trop_cone_nonregular_index(const trop_cone* cone, size_t index) {
  const auto& idx = cone->cone.nonregular_generators;
  return index < idx.size() ? idx[index] : SIZE_MAX;
}

void trop_grid_options_init(trop_grid_options* options) {
  if (options == nullptr) return;
  static const trop_interval kDefaultBox{-10.0, 10.0};
  const trop::GridOptions defaults;
  options->box = &kDefaultBox;
  options->box_count = 1;
  options->step = defaults.step;
  options->pin_first = defaults.pin_first ? 1 : 0;
  options->tolerance = defaults.tolerance;
  options->max_points = defaults.max_points;
}

trop_status trop_grid_min(const trop_matrix* a, const trop_matrix* b,
                          const trop_grid_options* options, trop_oracle_report** out) {
  return guarded([&] {
    require(out, "out");
    require(options, "options");
    if (options->box_count > 0) require(options->box, "options->box");
    const trop::ProblemInstance<MaxPlus> instance(max_plus(a, "A"), max_plus(b, "B"));
    trop::GridOptions grid;
    grid.box.clear();
    for (std::size_t i = 0; i < options->box_count; ++i) {
      grid.box.push_back({options->box[i].lo, options->box[i].hi});
    }
    grid.step = options->step;
    grid.pin_first = options->pin_first != 0;
    grid.tolerance = options->tolerance;
    grid.max_points = options->max_points;
    *out = new trop_oracle_report{trop::grid_min(instance, grid)};
  });
}

void trop_oracle_report_free(trop_oracle_report* report) { delete report; }

double trop_oracle_estimated_min(const trop_oracle_report* report) {
  return report->report.estimated_min.value();
}

int trop_oracle_feasible_found(const trop_oracle_report* report) {
  return report->report.feasible_found ? 1 : 0;
}

uint64_t trop_oracle_samples_evaluated(const trop_oracle_report* report) {
  return report->report.samples_evaluated;
}

double trop_oracle_grid_step(const trop_oracle_report* report) { return report->report.grid_step; }

size_t trop_oracle_dimension(const trop_oracle_report* report) {
  return report->report.grid_box.size();
}

trop_status trop_oracle_argmin(const trop_oracle_report* report, double* out, size_t count) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (!report->report.argmin) throw trop::DomainError("no feasible grid point");
    const auto& x = *report->report.argmin;
    if (count < x.size()) throw ApiError(TROP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].value();
  });
}

trop_status trop_oracle_grid_box(const trop_oracle_report* report, trop_interval* out,
                                 size_t count) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    const auto& box = report->report.grid_box;
    if (count < box.size()) throw ApiError(TROP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    for (std::size_t i = 0; i < box.size(); ++i) out[i] = {box[i].lo, box[i].hi};
  });
}

trop_status trop_cycle_mean_oracle(const trop_matrix* a, double* out) {
  return guarded([&] {
    require(out, "out");
    with_matrix(a, [&](const auto& ma) { *out = trop::cycle_mean_oracle(ma).value(); });
  });
}

trop_status trop_sample_solution_family(const trop_matrix* a, const trop_matrix* b,
                                        const trop_cone* cone, size_t trials, uint64_t seed,
                                        trop_sample_report** out) {
  return guarded([&] {
    require(out, "out");
    require(cone, "cone");
    const trop::ProblemInstance<MaxPlus> instance(max_plus(a, "A"), max_plus(b, "B"));
    if (cone->cone.generators.rows() != instance.order()) {
      throw trop::ShapeError("cone does not match the instance order");
    }
    *out = new trop_sample_report{trop::sample_solution_family(instance, cone->cone, trials, seed)};
  });
}

void trop_sample_report_free(trop_sample_report* report) { delete report; }
size_t trop_sample_trials(const trop_sample_report* report) { return report->report.trials; }

size_t trop_sample_failure_count(const trop_sample_report* report) {
  return report->report.failures.size();
}

size_t trop_sample_failure_trial(const trop_sample_report* report, size_t index) {
  const auto& failures = report->report.failures;
  return index < failures.size() ? failures[index].trial : SIZE_MAX;
}

const char* trop_sample_failure_reason(const trop_sample_report* report, size_t index) {
  if (index >= report->report.failures.size()) return nullptr;
  return report->report.failures[index].reason.c_str();
}

size_t trop_sample_failure_dimension(const trop_sample_report* report, size_t index) {
  if (index >= report->report.failures.size()) return 0;
  return report->report.failures[index].u.size();
}

trop_status trop_sample_failure_u(const trop_sample_report* report, size_t index, double* out,
                                  size_t count) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->report.failures.size()) {
      throw ApiError(TROP_ERR_INVALID_ARGUMENT, "failure index out of range");
    }
    const auto& u = report->report.failures[index].u;
    if (count < u.size()) throw ApiError(TROP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i].value();
  });
}

trop_status trop_check_lower_bound(const trop_matrix* a, const trop_matrix* b, double theta,
                                   size_t samples, uint64_t seed, trop_lower_bound_result* out) {
  return guarded([&] {
    require(out, "out");
    const trop::ProblemInstance<MaxPlus> instance(max_plus(a, "A"), max_plus(b, "B"));
    const auto report =
        trop::check_lower_bound(instance, trop::MaxPlusScalar(theta), samples, seed);
    out->accepted = report.accepted;
    out->attempts = report.attempts;
    out->violations = report.violations;
  });
}

}  // extern "C"
