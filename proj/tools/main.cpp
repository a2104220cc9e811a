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

// trop: command-line front end to libtrop.
//
// Exit status: 0 success, 1 infeasible / hypothesis failure / failed
// verification, 2 usage or input error. In JSON mode stdout carries only
// the report; diagnostics always go to stderr.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trop/trop.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int exit_code;
  std::string message;
};

struct MatrixDeleter {
  void operator()(trop_matrix* m) const { trop_matrix_free(m); }
};
struct ConeDeleter {
  void operator()(trop_cone* c) const { trop_cone_free(c); }
};
struct OracleDeleter {
  void operator()(trop_oracle_report* r) const { trop_oracle_report_free(r); }
};
struct SampleDeleter {
  void operator()(trop_sample_report* r) const { trop_sample_report_free(r); }
};

using MatrixPtr = std::unique_ptr<trop_matrix, MatrixDeleter>;
using ConePtr = std::unique_ptr<trop_cone, ConeDeleter>;
using OraclePtr = std::unique_ptr<trop_oracle_report, OracleDeleter>;
using SamplePtr = std::unique_ptr<trop_sample_report, SampleDeleter>;

enum class Format { kText, kJson };

struct RunConfig {
  std::string subcommand;
  std::string objective_path;
  std::optional<std::string> constraint_path;
  trop_semifield semifield = TROP_MAX_PLUS;
  Format output_format = Format::kText;
  unsigned enumeration_cap = 20;
  bool override_hypotheses = false;
  // verify only
  std::vector<std::string> box{"-10:10"};
  double step = 0.5;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
};

void check(trop_status status, const std::string& context = {}) {
  if (status == TROP_OK) return;
  std::string message = trop_last_error_message();
  if (!context.empty()) message = context + ": " + message;
  const int code = status == TROP_ERR_HYPOTHESIS ? kExitInfeasible : kExitUsage;
  throw CliError{code, message};
}

std::string token(trop_semifield s, double value) {
  char buf[64];
  check(trop_scalar_format(s, value, buf, sizeof buf, nullptr));
  return buf;
}

std::vector<std::vector<std::string>> rows_of(const trop_matrix* m) {
  const std::size_t r = trop_matrix_rows(m);
  const std::size_t c = trop_matrix_cols(m);
  std::vector<double> values(r * c);
  check(trop_matrix_values(m, values.data(), values.size()));
  std::vector<std::vector<std::string>> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      out[i].push_back(token(trop_matrix_semifield(m), values[i * c + j]));
    }
  }
  return out;
}

std::string matrix_text(const trop_matrix* m) {
  std::size_t required = 0;
  trop_matrix_format(m, nullptr, 0, &required);
  std::string buf(required, '\0');
  check(trop_matrix_format(m, buf.data(), buf.size(), nullptr));
  buf.resize(required - 1);
  return buf;
}

MatrixPtr load_matrix(const std::string& path, trop_semifield s) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, path + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  trop_matrix* m = nullptr;
  check(trop_matrix_parse(s, text.data(), text.size(), &m), path);
  return MatrixPtr(m);
}

trop_solve_options solve_options(const RunConfig& cfg) {
  trop_solve_options opts;
  trop_solve_options_init(&opts);
  opts.enumeration_cap = cfg.enumeration_cap;
  opts.override_hypotheses = cfg.override_hypotheses ? 1 : 0;
  return opts;
}

const char* yes_no(int v) { return v ? "yes" : "no"; }

Json cone_json(const trop_cone* cone) {
  trop_hypotheses h;
  trop_cone_hypotheses(cone, &h);
  Json warnings = Json::array();
  for (std::size_t i = 0; i < trop_cone_warning_count(cone); ++i) {
    warnings.push_back(trop_cone_warning(cone, i));
  }
  Json nonregular = Json::array();
  for (std::size_t i = 0; i < trop_cone_nonregular_count(cone); ++i) {
    nonregular.push_back(trop_cone_nonregular_index(cone, i));
  }
  Json out;
  out["theta"] = token(TROP_MAX_PLUS, trop_cone_theta(cone));
  out["closure"] = rows_of(trop_cone_closure(cone));
  out["generators"] = rows_of(trop_cone_generators(cone));
  out["reduced"] = trop_cone_reduced(cone) != 0;
  out["completeness_verified"] = trop_cone_completeness_verified(cone) != 0;
  out["nonregular_generators"] = nonregular;
  out["hypotheses"] = {
      {"objective_irreducible", h.objective_irreducible != 0},
      {"constraint_irreducible", h.constraint_irreducible != 0},
      {"spectral_radius", token(TROP_MAX_PLUS, h.spectral_radius)},
      {"spectral_radius_positive", h.spectral_radius_positive != 0},
      {"constraint_tr", token(TROP_MAX_PLUS, h.constraint_tr)},
      {"constraint_tr_ok", h.constraint_tr_ok != 0},
      {"combined_irreducible", h.combined_irreducible != 0},
  };
  out["warnings"] = warnings;
  return out;
}

void print_cone_text(std::ostream& os, const trop_cone* cone, const char* closure_label) {
  trop_hypotheses h;
  trop_cone_hypotheses(cone, &h);
  os << "theta = " << token(TROP_MAX_PLUS, trop_cone_theta(cone)) << "\n";
  os << "closure " << closure_label << ":\n" << matrix_text(trop_cone_closure(cone));
  os << "generators:\n" << matrix_text(trop_cone_generators(cone));
  os << "reduced: " << yes_no(trop_cone_reduced(cone)) << "\n";
  os << "completeness verified: " << yes_no(trop_cone_completeness_verified(cone)) << "\n";
  os << "hypotheses: A irreducible " << yes_no(h.objective_irreducible) << ", B irreducible "
     << yes_no(h.constraint_irreducible) << ", lambda = " << token(TROP_MAX_PLUS, h.spectral_radius)
     << ", Tr(B) = " << token(TROP_MAX_PLUS, h.constraint_tr) << "\n";
  for (std::size_t i = 0; i < trop_cone_warning_count(cone); ++i) {
    os << "warning: " << trop_cone_warning(cone, i) << "\n";
  }
}

void emit(const RunConfig& cfg, const Json& report, const std::string& text) {
  if (cfg.output_format == Format::kJson) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_solve(const RunConfig& cfg) {
  const MatrixPtr a = load_matrix(cfg.objective_path, cfg.semifield);
  const MatrixPtr b = load_matrix(*cfg.constraint_path, cfg.semifield);
  const trop_solve_options opts = solve_options(cfg);
  trop_cone* raw = nullptr;
  check(trop_solve_constrained(a.get(), b.get(), &opts, &raw));
  const ConePtr cone(raw);
  std::ostringstream text;
  print_cone_text(text, cone.get(), "(theta^-1 A + B)*");
  emit(cfg, cone_json(cone.get()), text.str());
  return kExitOk;
}

int run_unconstrained(const RunConfig& cfg) {
  const MatrixPtr a = load_matrix(cfg.objective_path, cfg.semifield);
  const trop_solve_options opts = solve_options(cfg);
  trop_cone* raw = nullptr;
  check(trop_solve_unconstrained(a.get(), &opts, &raw));
  const ConePtr cone(raw);
  std::ostringstream text;
  print_cone_text(text, cone.get(), "(lambda^-1 A)*");
  emit(cfg, cone_json(cone.get()), text.str());
  return kExitOk;
}

int run_inequality(const RunConfig& cfg) {
  const MatrixPtr a = load_matrix(cfg.objective_path, cfg.semifield);
  trop_inequality_result result;
  trop_matrix* raw = nullptr;
  check(trop_solve_linear_inequality(a.get(), &result, &raw));
  const MatrixPtr generators(raw);

  Json report;
  report["feasible"] = result.feasible != 0;
  report["tr"] = token(cfg.semifield, result.tr_value);
  report["completeness_verified"] = result.completeness_verified != 0;
  report["generators"] = generators ? Json(rows_of(generators.get())) : Json(nullptr);

  std::ostringstream text;
  text << "feasible: " << yes_no(result.feasible) << "\n";
  text << "Tr(A) = " << token(cfg.semifield, result.tr_value) << "\n";
  if (generators) {
    text << "generators A*:\n" << matrix_text(generators.get());
    text << "completeness verified: " << yes_no(result.completeness_verified) << "\n";
  }
  emit(cfg, report, text.str());
  if (!result.feasible) {
    const double one = 0.0;
    throw CliError{kExitInfeasible, "no regular solution: Tr(A) = " +
                                        token(cfg.semifield, result.tr_value) +
                                        " exceeds the identity " + token(cfg.semifield, one)};
  }
  return kExitOk;
}

int run_spectral(const RunConfig& cfg) {
  const MatrixPtr a = load_matrix(cfg.objective_path, cfg.semifield);
  const std::size_t n = trop_matrix_rows(a.get());
  double lambda = 0.0;
  double tr = 0.0;
  int irreducible = 0;
  std::vector<double> traces(n);
  check(trop_spectral_radius(a.get(), &lambda));
  check(trop_power_traces(a.get(), traces.data(), traces.size()));
  check(trop_big_tr(a.get(), &tr));
  check(trop_is_irreducible(a.get(), &irreducible));

  Json report;
  report["semifield"] = cfg.semifield == TROP_MAX_PLUS ? "max-plus" : "min-plus";
  report["lambda"] = token(cfg.semifield, lambda);
  Json powers = Json::array();
  std::ostringstream text;
  text << "lambda = " << token(cfg.semifield, lambda) << "\n";
  for (std::size_t m = 0; m < n; ++m) {
    powers.push_back({{"m", m + 1}, {"trace", token(cfg.semifield, traces[m])}});
    text << "tr A^" << m + 1 << " = " << token(cfg.semifield, traces[m]) << "\n";
  }
  report["power_traces"] = powers;
  report["tr"] = token(cfg.semifield, tr);
  report["irreducible"] = irreducible != 0;
  text << "Tr(A) = " << token(cfg.semifield, tr) << "\n";
  text << "irreducible: " << yes_no(irreducible) << "\n";
  emit(cfg, report, text.str());
  return kExitOk;
}

int run_theta(const RunConfig& cfg) {
  const MatrixPtr a = load_matrix(cfg.objective_path, cfg.semifield);
  const MatrixPtr b = load_matrix(*cfg.constraint_path, cfg.semifield);
  double theta = 0.0;
  check(trop_compute_theta(a.get(), b.get(), cfg.enumeration_cap, &theta));
  Json report;
  report["theta"] = token(TROP_MAX_PLUS, theta);
  emit(cfg, report, "theta = " + token(TROP_MAX_PLUS, theta) + "\n");
  return kExitOk;
}

int run_star(const RunConfig& cfg) {
  const MatrixPtr a = load_matrix(cfg.objective_path, cfg.semifield);
  trop_matrix* raw = nullptr;
  check(trop_kleene_star(a.get(), &raw));
  const MatrixPtr star(raw);
  Json report;
  report["star"] = rows_of(star.get());
  emit(cfg, report, matrix_text(star.get()));
  return kExitOk;
}

trop_interval parse_interval(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) {
    throw CliError{kExitUsage, "--box expects lo:hi, got '" + text + "'"};
  }
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    trop_interval iv{std::stod(lo, &used_lo), std::stod(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
    return iv;
  } catch (const std::exception&) {
    throw CliError{kExitUsage, "--box expects lo:hi, got '" + text + "'"};
  }
}

int run_verify(const RunConfig& cfg) {
  const MatrixPtr a = load_matrix(cfg.objective_path, cfg.semifield);
  const MatrixPtr b = load_matrix(*cfg.constraint_path, cfg.semifield);
  const trop_solve_options opts = solve_options(cfg);
  trop_cone* raw_cone = nullptr;
  check(trop_solve_constrained(a.get(), b.get(), &opts, &raw_cone));
  const ConePtr cone(raw_cone);
  const double theta = trop_cone_theta(cone.get());

  std::vector<trop_interval> box;
  for (const auto& text : cfg.box) box.push_back(parse_interval(text));
  trop_grid_options grid;
  trop_grid_options_init(&grid);
  grid.box = box.data();
  grid.box_count = box.size();
  grid.step = cfg.step;
  trop_oracle_report* raw_oracle = nullptr;
  check(trop_grid_min(a.get(), b.get(), &grid, &raw_oracle), "grid oracle");
  const OraclePtr oracle(raw_oracle);

  trop_sample_report* raw_sample = nullptr;
  check(trop_sample_solution_family(a.get(), b.get(), cone.get(), cfg.trials, cfg.seed,
                                    &raw_sample));
  const SamplePtr sample(raw_sample);

  const std::size_t n = trop_oracle_dimension(oracle.get());
  const bool feasible_found = trop_oracle_feasible_found(oracle.get()) != 0;
  const double estimated = trop_oracle_estimated_min(oracle.get());
  std::vector<trop_interval> grid_box(n);
  check(trop_oracle_grid_box(oracle.get(), grid_box.data(), grid_box.size()));
  std::vector<double> argmin(n);
  if (feasible_found) check(trop_oracle_argmin(oracle.get(), argmin.data(), argmin.size()));

  const bool integer_grid = std::trunc(cfg.step) == cfg.step;
  const double slack = integer_grid ? 0.0 : grid.tolerance;
  const bool lower_bound_ok = !feasible_found || estimated >= theta - slack;
  const bool matches = feasible_found && std::fabs(estimated - theta) <= slack;

  Json oracle_json;
  oracle_json["estimated_min"] = feasible_found ? Json(token(TROP_MAX_PLUS, estimated)) : Json(nullptr);
  Json argmin_json = Json::array();
  for (double v : argmin) argmin_json.push_back(token(TROP_MAX_PLUS, v));
  oracle_json["argmin"] = feasible_found ? argmin_json : Json(nullptr);
  oracle_json["grid_step"] = trop_oracle_grid_step(oracle.get());
  Json box_json = Json::array();
  for (const auto& iv : grid_box) box_json.push_back({iv.lo, iv.hi});
  oracle_json["grid_box"] = box_json;
  oracle_json["samples_evaluated"] = trop_oracle_samples_evaluated(oracle.get());
  oracle_json["feasible_found"] = feasible_found;

  Json failures = Json::array();
  for (std::size_t i = 0; i < trop_sample_failure_count(sample.get()); ++i) {
    std::vector<double> u(trop_sample_failure_dimension(sample.get(), i));
    check(trop_sample_failure_u(sample.get(), i, u.data(), u.size()));
    Json u_json = Json::array();
    for (double v : u) u_json.push_back(token(TROP_MAX_PLUS, v));
    failures.push_back({{"trial", trop_sample_failure_trial(sample.get(), i)},
                        {"u", u_json},
                        {"reason", trop_sample_failure_reason(sample.get(), i)}});
  }
  const bool sampling_ok = failures.empty();

  Json report;
  report["theta"] = token(TROP_MAX_PLUS, theta);
  report["oracle"] = oracle_json;
  report["agreement"] = {{"lower_bound_holds", lower_bound_ok}, {"grid_min_equals_theta", matches}};
  report["sampling"] = {{"trials", trop_sample_trials(sample.get())},
                        {"seed", cfg.seed},
                        {"failures", failures}};

  std::ostringstream text;
  text << "theta = " << token(TROP_MAX_PLUS, theta) << "\n";
  if (feasible_found) {
    text << "grid minimum = " << token(TROP_MAX_PLUS, estimated) << " at (";
    for (std::size_t i = 0; i < n; ++i) text << (i ? ", " : "") << token(TROP_MAX_PLUS, argmin[i]);
    text << ")\n";
  } else {
    text << "grid minimum: no feasible grid point\n";
  }
  text << "grid points evaluated: " << trop_oracle_samples_evaluated(oracle.get()) << "\n";
  text << "lower bound holds: " << yes_no(lower_bound_ok) << "\n";
  text << "grid minimum equals theta: " << yes_no(matches) << "\n";
  text << "sampled solutions: " << trop_sample_trials(sample.get()) << ", failures "
       << failures.size() << "\n";
  emit(cfg, report, text.str());

  if (!feasible_found) {
    throw CliError{kExitInfeasible, "oracle found no feasible grid point; widen --box"};
  }
  if (!lower_bound_ok) {
    throw CliError{kExitInfeasible, "grid minimum lies below theta"};
  }
  if (!sampling_ok) {
    throw CliError{kExitInfeasible, "sampled solution family has failures"};
  }
  return kExitOk;
}

void validate(const RunConfig& cfg) {
  const std::string& sub = cfg.subcommand;
  const bool needs_b = sub == "solve" || sub == "theta" || sub == "verify";
  if (needs_b && !cfg.constraint_path) {
    throw CliError{kExitUsage, sub + " requires -B/--constraint"};
  }
  if (!needs_b && cfg.constraint_path) {
    throw CliError{kExitUsage, sub + " does not accept -B/--constraint"};
  }
  const bool min_plus_ok = sub == "star" || sub == "spectral" || sub == "inequality";
  if (cfg.semifield == TROP_MIN_PLUS && !min_plus_ok) {
    throw CliError{kExitUsage, sub + " is only defined for max-plus"};
  }
}

int dispatch(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.subcommand == "solve") return run_solve(cfg);
  if (cfg.subcommand == "unconstrained") return run_unconstrained(cfg);
  if (cfg.subcommand == "inequality") return run_inequality(cfg);
  if (cfg.subcommand == "spectral") return run_spectral(cfg);
  if (cfg.subcommand == "theta") return run_theta(cfg);
  if (cfg.subcommand == "verify") return run_verify(cfg);
  if (cfg.subcommand == "star") return run_star(cfg);
  throw CliError{kExitUsage, "unknown subcommand " + cfg.subcommand};
}

void report_error(const std::string& message) {
  const char* color = std::getenv("TROP_COLOR");
  if (color != nullptr && std::string(color) == "1") {
    std::cerr << "\x1b[1;31merror:\x1b[0m " << message << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical extremal problems: minimize x^- A x subject to B x <= x", "trop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(trop_version()));

  RunConfig cfg;
  std::string format = "text";
  std::string semifield = "max-plus";
  std::string constraint;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"solve", "closed-form constrained minimum and its solution cone"},
      {"unconstrained", "minimum of x^- A x without constraints (theta = spectral radius)"},
      {"inequality", "regular solutions of A x <= x"},
      {"spectral", "spectral radius and traces of powers"},
      {"theta", "the constrained minimum only"},
      {"verify", "cross-check the closed form against grid search and sampling"},
      {"star", "Kleene star I + A + ... + A^(n-1)"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-A,--objective", cfg.objective_path, "matrix file for A")->required();
    sub->add_option("-B,--constraint", constraint, "matrix file for B");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--semifield", semifield, "semifield")
        ->check(CLI::IsMember({"max-plus", "min-plus"}));
    sub->add_option("--cap", cfg.enumeration_cap, "largest n for the theta enumeration");
    sub->add_flag("--force", cfg.override_hypotheses,
                  "proceed when hypotheses fail (completeness unverified)");
    if (std::string(s.name) == "verify") {
      sub->add_option("--box", cfg.box, "grid interval lo:hi, once or per coordinate")
          ->allow_extra_args(false);
      sub->add_option("--step", cfg.step, "grid step")->check(CLI::PositiveNumber);
      sub->add_option("--trials", cfg.trials, "sampled members of the solution family");
      sub->add_option("--seed", cfg.seed, "sampling seed");
    }
    sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  cfg.output_format = format == "json" ? Format::kJson : Format::kText;
  cfg.semifield = semifield == "min-plus" ? TROP_MIN_PLUS : TROP_MAX_PLUS;
  if (!constraint.empty()) cfg.constraint_path = constraint;

  try {
    return dispatch(cfg);
  } catch (const CliError& e) {
    report_error(e.message);
    return e.exit_code;
  } catch (const std::exception& e) {
    report_error(e.what());
    return kExitUsage;
  }
}
