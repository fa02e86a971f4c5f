// Copyright 2026 The sre-purity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// sre: command-line front end.
//
//   sre oracle      exact A_alpha / M_alpha of a state
//   sre estimate    swap-test estimate of A_alpha
//   sre sweep       theta sweep over the single-qubit benchmark family
//   sre verify      exact identity suites
//   sre complexity  copy counts of the swap-test and direct estimators
//
// Exit codes: 0 ok, 1 internal error, 2 usage / parse error, 3 size guard,
// 4 verification failure, 5 I/O error.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sre/bench.hpp"
#include "sre/errors.hpp"
#include "sre/oracle.hpp"
#include "sre/pipeline.hpp"
#include "sre/verify.hpp"
#include "state_spec.hpp"

#ifndef SRE_VERSION
#define SRE_VERSION "0.0.0"
#endif

namespace {

using nlohmann::ordered_json;
using sre::cli::SpecError;

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kSizeGuard = 3,
  kVerifyFailed = 4,
  kIoError = 5,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

uint64_t fnv1a(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  std::string s(buf, ptr);
  return std::string(16 - s.size(), '0') + s;
}

// JSON null for non-finite values so the output stays valid JSON.
ordered_json jnum(double v) {
  if (v == 0.0) v = 0.0;
  return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

struct Meta {
  uint64_t seed = 0;
  ordered_json config;

  ordered_json json() const {
    return {{"tool", "sre"},
            {"version", SRE_VERSION},
            {"seed", seed},
            {"config_hash", hex64(fnv1a(config.dump()))},
            {"config", config}};
  }

  std::string csv_header() const {
    std::ostringstream out;
    out << "# tool: sre\n# version: " << SRE_VERSION << "\n# seed: " << seed
        << "\n# config_hash: " << hex64(fnv1a(config.dump())) << "\n# config: " << config.dump()
        << "\n";
    return out.str();
  }
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str(const Meta& meta, const std::vector<std::string>& notes = {}) const {
    std::string out = meta.csv_header();
    for (const auto& note : notes) out += "# note: " + note + "\n";
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
      out += "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

std::vector<double> parse_theta_grid(const std::string& text) {
  std::vector<std::string_view> parts;
  std::string_view rest = text;
  for (std::size_t pos; (pos = rest.find(':')) != std::string_view::npos; rest.remove_prefix(pos + 1))
    parts.push_back(rest.substr(0, pos));
  parts.push_back(rest);
  if (parts.size() != 3) throw SpecError("--theta-grid expects start:stop:count");
  const long long count = sre::cli::parse_integer(parts[2]);
  if (count < 1 || count > 100000) throw SpecError("--theta-grid count must lie in [1, 100000]");
  return sre::theta_grid(sre::cli::parse_real(parts[0]), sre::cli::parse_real(parts[1]),
                         static_cast<int>(count));
}

sre::PreparationMethod to_method(const std::string& text) {
  const auto m = sre::parse_method(text);
  if (!m) throw SpecError("unknown method '" + text + "'");
  return *m;
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") throw SpecError("--format must be json or csv");
}

void check_alphas(const std::vector<int>& alphas) {
  if (alphas.empty()) throw SpecError("at least one alpha is required");
  for (int a : alphas)
    if (a < 1) throw SpecError("alpha must be >= 1");
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string state;
  int alpha = 2;
  bool distribution = false;
  std::string out, format = "json";
};

int cmd_oracle(const OracleArgs& a) {
  check_format(a.format);
  check_alphas({a.alpha});
  const sre::StateVector psi = sre::cli::parse_state_spec(a.state);
  const sre::SreValue v = sre::sre_value(psi, a.alpha);
  Meta meta{0, {{"command", "oracle"}, {"state", a.state}, {"alpha", a.alpha}}};

  if (a.format == "csv") {
    CsvTable t{{"state", "alpha", "a_alpha", "m_alpha"}, {}};
    t.rows.push_back({a.state, std::to_string(a.alpha), num(v.a_alpha), v.m_alpha ? num(*v.m_alpha) : ""});
    emit(a.out, t.str(meta));
    return kOk;
  }
  ordered_json j;
  j["meta"] = meta.json();
  j["state"] = a.state;
  j["num_qubits"] = psi.num_qubits();
  j["alpha"] = a.alpha;
  j["a_alpha"] = v.a_alpha;
  j["m_alpha"] = v.m_alpha ? jnum(*v.m_alpha) : ordered_json(nullptr);
  if (a.distribution) {
    const auto dist = sre::characteristic_distribution(psi);
    ordered_json entries = ordered_json::array();
    for (std::size_t k = 0; k < dist.probs.size(); ++k)
      entries.push_back({{"pauli", dist.label(k)}, {"prob", dist.probs[k]}});
    j["characteristic_distribution"] = std::move(entries);
  }
  emit(a.out, j.dump(2) + "\n");
  return kOk;
}

struct EstimateArgs {
  std::string state;
  int alpha = 2;
  double eps = 0.05, delta = 0.1;
  std::string method = "coherent", marginal = "copies";
  uint64_t seed = 0;
  std::optional<uint64_t> shots;
  bool exact = false, full_circuit = false;
  std::string out, format = "json";
};

int cmd_estimate(const EstimateArgs& a) {
  check_format(a.format);
  const auto marginal = sre::parse_marginal(a.marginal);
  if (!marginal) throw SpecError("unknown marginal '" + a.marginal + "'");
  sre::EstimationRequest req{.state = sre::cli::parse_state_spec(a.state),
                             .alpha = a.alpha,
                             .epsilon = a.eps,
                             .delta = a.delta,
                             .method = to_method(a.method),
                             .seed = a.seed,
                             .marginal = *marginal,
                             .shot_mode = a.full_circuit ? sre::ShotMode::kCircuit : sre::ShotMode::kBernoulli,
                             .exact = a.exact,
                             .shots = a.shots};
  const sre::EstimateReport r = sre::run_estimation(req);
  const double a_exact = sre::a_alpha_exact(req.state, a.alpha);

  ordered_json config = {{"command", "estimate"}, {"state", a.state}, {"alpha", a.alpha},
                         {"eps", a.eps},          {"delta", a.delta}, {"method", a.method},
                         {"marginal", a.marginal}, {"exact", a.exact}, {"full_circuit", a.full_circuit},
                         {"shots", a.shots ? ordered_json(*a.shots) : ordered_json(nullptr)}};
  Meta meta{a.seed, config};
  if (a.format == "csv") {
    CsvTable t{{"state", "alpha", "method", "gamma_hat", "a_hat", "a_stderr", "m_hat", "a_exact",
                "shots", "copies", "seed"},
               {}};
    t.rows.push_back({a.state, std::to_string(a.alpha), std::string(sre::to_string(r.method)),
                      num(r.gamma_hat), num(r.a_hat), num(r.a_stderr), r.m_hat ? num(*r.m_hat) : "",
                      num(a_exact), std::to_string(r.shots_used), std::to_string(r.copies_used),
                      std::to_string(r.seed)});
    emit(a.out, t.str(meta));
    return kOk;
  }
  ordered_json j;
  j["meta"] = meta.json();
  j["state"] = a.state;
  j["num_qubits"] = r.num_qubits;
  j["alpha"] = r.alpha;
  j["method"] = sre::to_string(r.method);
  j["marginal"] = r.method == sre::PreparationMethod::kCoherent ? ordered_json(sre::to_string(r.marginal))
                                                                 : ordered_json(nullptr);
  j["shot_mode"] = r.shot_mode == sre::ShotMode::kCircuit ? "circuit" : "bernoulli";
  j["exact"] = r.exact;
  j["gamma_hat"] = jnum(r.gamma_hat);
  j["gamma_stderr"] = jnum(r.gamma_stderr);
  j["a_hat"] = jnum(r.a_hat);
  j["a_stderr"] = jnum(r.a_stderr);
  j["m_hat"] = r.m_hat ? jnum(*r.m_hat) : ordered_json(nullptr);
  j["m_hat_defined"] = r.m_hat.has_value();
  j["a_exact"] = a_exact;
  j["shots_used"] = r.shots_used;
  j["copies_used"] = r.copies_used;
  j["seed"] = r.seed;
  j["budget"] = {{"epsilon", r.budget.epsilon},
                 {"delta", r.budget.delta},
                 {"tau", r.budget.tau},
                 {"copies_of_psi", r.budget.copies_of_psi},
                 {"swap_shots", r.budget.swap_shots}};
  emit(a.out, j.dump(2) + "\n");
  return kOk;
}

struct SweepArgs {
  std::vector<int> alphas = {2, 3, 5, 7};
  std::string theta_grid = "0:1.5707963267948966:9";
  double eps = 0.05, delta = 0.1;
  int seeds = 10;
  uint64_t seed = 0;
  std::string method = "coherent";
  std::string out, format = "csv";
};

int cmd_sweep(const SweepArgs& a) {
  check_format(a.format);
  check_alphas(a.alphas);
  if (a.seeds < 1) throw SpecError("--seeds must be >= 1");
  sre::SweepConfig cfg;
  cfg.alphas = a.alphas;
  cfg.thetas = parse_theta_grid(a.theta_grid);
  cfg.epsilon = a.eps;
  cfg.delta = a.delta;
  cfg.seeds = a.seeds;
  cfg.master_seed = a.seed;
  cfg.method = to_method(a.method);
  const auto rows = sre::sweep_theta(cfg);

  Meta meta{a.seed, {{"command", "sweep"}, {"alphas", a.alphas}, {"theta_grid", a.theta_grid},
                     {"eps", a.eps}, {"delta", a.delta}, {"seeds", a.seeds}, {"method", a.method}}};
  if (a.format == "csv") {
    CsvTable t{{"theta", "alpha", "estimate", "exact", "abs_error", "copies", "seed", "within_eps"}, {}};
    for (const auto& r : rows) {
      t.rows.push_back({num(r.theta), std::to_string(r.alpha), num(r.a_hat), num(r.a_exact),
                        num(r.abs_error), std::to_string(r.copies_used), std::to_string(r.seed),
                        r.within_eps ? "true" : "false"});
    }
    emit(a.out, t.str(meta));
  } else {
    ordered_json j;
    j["meta"] = meta.json();
    ordered_json list = ordered_json::array();
    for (const auto& r : rows) {
      list.push_back({{"theta", r.theta}, {"alpha", r.alpha}, {"estimate", jnum(r.a_hat)},
                      {"exact", r.a_exact}, {"abs_error", jnum(r.abs_error)},
                      {"copies", r.copies_used}, {"seed", r.seed}, {"within_eps", r.within_eps}});
    }
    j["rows"] = std::move(list);
    emit(a.out, j.dump(2) + "\n");
  }
  std::size_t within = 0;
  for (const auto& r : rows) within += r.within_eps;
  std::cerr << "sweep: " << within << "/" << rows.size() << " estimates within eps\n";
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  uint64_t seed = 0;
  int states = 20;
  std::string out, format = "json";
};

int cmd_verify(const VerifyArgs& a) {
  check_format(a.format);
  const auto suite = sre::parse_suite(a.suite);
  if (!suite) throw SpecError("unknown suite '" + a.suite + "'");
  if (a.states < 1) throw SpecError("--states must be >= 1");
  const sre::SuiteReport report = sre::run_suite(*suite, a.seed, a.states);

  Meta meta{a.seed, {{"command", "verify"}, {"suite", a.suite}, {"states", a.states}}};
  if (a.format == "csv") {
    CsvTable t{{"suite", "check", "cases", "worst", "tolerance", "passed"}, {}};
    for (const auto& c : report.checks) {
      t.rows.push_back({c.suite, c.name, std::to_string(c.cases), num(c.worst), num(c.tolerance),
                        c.passed ? "true" : "false"});
    }
    emit(a.out, t.str(meta));
  } else {
    ordered_json j;
    j["meta"] = meta.json();
    j["suite"] = a.suite;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"suite", c.suite}, {"check", c.name}, {"cases", c.cases},
                        {"worst", jnum(c.worst)}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    }
    j["checks"] = std::move(checks);
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    emit(a.out, j.dump(2) + "\n");
  }
  for (const auto& c : report.checks)
    if (!c.passed) std::cerr << "FAILED " << c.suite << "/" << c.name << " worst=" << num(c.worst) << "\n";
  std::cerr << "verify " << a.suite << ": " << report.passed() << " passed, " << report.failed()
            << " failed\n";
  return report.ok() ? kOk : kVerifyFailed;
}

struct ComplexityArgs {
  std::string state = "haar:2:1";
  std::vector<std::string> methods = {"swap_purity", "direct_gamma", "direct_single_copy"};
  std::vector<int> alphas = {2};
  std::vector<double> eps = {0.1};
  double delta = 0.1;
  int seeds = 20;
  uint64_t seed = 0;
  std::string out, format = "csv";
};

const char* kTomographyNote =
    "state tomography is not simulated; it needs Theta(d / omega^2) copies for infidelity omega";

int cmd_complexity(const ComplexityArgs& a) {
  check_format(a.format);
  check_alphas(a.alphas);
  if (a.seeds < 1) throw SpecError("--seeds must be >= 1");
  sre::ComplexityConfig cfg;
  cfg.methods.clear();
  for (const auto& m : a.methods) {
    const auto kind = sre::parse_estimator(m);
    if (!kind) throw SpecError("unknown estimator '" + m + "'");
    cfg.methods.push_back(*kind);
  }
  cfg.alphas = a.alphas;
  cfg.epsilons = a.eps;
  cfg.delta = a.delta;
  cfg.seeds = a.seeds;
  cfg.master_seed = a.seed;
  const auto rows = sre::complexity_table(sre::cli::parse_state_spec(a.state), cfg);

  Meta meta{a.seed, {{"command", "complexity"}, {"state", a.state}, {"methods", a.methods},
                     {"alphas", a.alphas}, {"eps", a.eps}, {"delta", a.delta}, {"seeds", a.seeds}}};
  if (a.format == "csv") {
    CsvTable t{{"method", "n", "alpha", "epsilon", "delta", "copies", "empirical_rmse",
                "copies_at_target_rmse", "seeds"},
               {}};
    for (const auto& r : rows) {
      t.rows.push_back({std::string(sre::to_string(r.method)), std::to_string(r.num_qubits),
                        std::to_string(r.alpha), num(r.epsilon_target), num(r.delta),
                        std::to_string(r.copies), num(r.empirical_rmse), num(r.copies_at_target_rmse),
                        std::to_string(r.seeds)});
    }
    emit(a.out, t.str(meta, {kTomographyNote}));
    return kOk;
  }
  ordered_json j;
  j["meta"] = meta.json();
  ordered_json list = ordered_json::array();
  for (const auto& r : rows) {
    list.push_back({{"method", sre::to_string(r.method)}, {"n", r.num_qubits}, {"alpha", r.alpha},
                    {"epsilon", r.epsilon_target}, {"delta", r.delta}, {"copies", r.copies},
                    {"empirical_rmse", r.empirical_rmse},
                    {"copies_at_target_rmse", r.copies_at_target_rmse}, {"seeds", r.seeds}});
  }
  j["rows"] = std::move(list);
  j["notes"] = {kTomographyNote};
  emit(a.out, j.dump(2) + "\n");
  return kOk;
}

void add_output(CLI::App* sub, std::string& out, std::string& format, const std::string& fallback) {
  sub->add_option("--out", out, "Output path (default: stdout)");
  sub->add_option("--format", format, "csv or json")->default_str(fallback)->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer Renyi entropy estimation via purity", "sre"};
  app.set_version_flag("--version", std::string(SRE_VERSION));
  app.require_subcommand(1);

  OracleArgs oracle;
  auto* sub_oracle = app.add_subcommand("oracle", "Exact A_alpha and M_alpha");
  sub_oracle->add_option("--state", oracle.state, "State spec")->required();
  sub_oracle->add_option("--alpha", oracle.alpha, "Renyi index")->capture_default_str();
  sub_oracle->add_flag("--distribution", oracle.distribution, "Include the characteristic distribution");
  add_output(sub_oracle, oracle.out, oracle.format, "json");

  EstimateArgs est;
  auto* sub_est = app.add_subcommand("estimate", "Swap-test estimate of A_alpha");
  sub_est->add_option("--state", est.state, "State spec")->required();
  sub_est->add_option("--alpha", est.alpha, "Renyi index")->capture_default_str();
  sub_est->add_option("--eps", est.eps, "Additive error target")->capture_default_str();
  sub_est->add_option("--delta", est.delta, "Failure probability")->capture_default_str();
  sub_est->add_option("--method", est.method, "exact | coherent | incoherent")->capture_default_str();
  sub_est->add_option("--marginal", est.marginal, "copies | ancilla (coherent only)")->capture_default_str();
  sub_est->add_option("--seed", est.seed, "Seed")->capture_default_str();
  sub_est->add_option("--shots", est.shots, "Override the budget's swap-test shot count");
  sub_est->add_flag("--exact", est.exact, "Analytic purity, zero shots");
  sub_est->add_flag("--full-circuit", est.full_circuit, "Simulate the swap-test circuit for the outcome law");
  add_output(sub_est, est.out, est.format, "json");

  SweepArgs sweep;
  auto* sub_sweep = app.add_subcommand("sweep", "Single-qubit theta sweep");
  sub_sweep->add_option("--alphas,--alpha", sweep.alphas, "Comma-separated alphas")->delimiter(',')->capture_default_str();
  sub_sweep->add_option("--theta-grid", sweep.theta_grid, "start:stop:count, radians")->capture_default_str();
  sub_sweep->add_option("--eps", sweep.eps)->capture_default_str();
  sub_sweep->add_option("--delta", sweep.delta)->capture_default_str();
  sub_sweep->add_option("--seeds", sweep.seeds, "Seeds per point")->capture_default_str();
  sub_sweep->add_option("--seed", sweep.seed, "Master seed")->capture_default_str();
  sub_sweep->add_option("--method", sweep.method)->capture_default_str();
  add_output(sub_sweep, sweep.out, sweep.format, "csv");

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "Exact identity suites");
  sub_verify->add_option("--suite", verify.suite, "all | theorem1 | replica | monotone | twirl | normalization")
      ->capture_default_str();
  sub_verify->add_option("--seed", verify.seed)->capture_default_str();
  sub_verify->add_option("--states", verify.states, "Random states per case")->capture_default_str();
  add_output(sub_verify, verify.out, verify.format, "json");

  ComplexityArgs cx;
  auto* sub_cx = app.add_subcommand("complexity", "Copy counts of the estimators");
  sub_cx->add_option("--state", cx.state, "State spec (n = 1 or 2)")->capture_default_str();
  sub_cx->add_option("--methods", cx.methods, "Comma-separated estimators")->delimiter(',');
  sub_cx->add_option("--alphas,--alpha", cx.alphas)->delimiter(',')->capture_default_str();
  sub_cx->add_option("--eps", cx.eps, "Comma-separated epsilon targets")->delimiter(',');
  sub_cx->add_option("--delta", cx.delta)->capture_default_str();
  sub_cx->add_option("--seeds", cx.seeds)->capture_default_str();
  sub_cx->add_option("--seed", cx.seed, "Master seed")->capture_default_str();
  add_output(sub_cx, cx.out, cx.format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sub_oracle->parsed()) return cmd_oracle(oracle);
    if (sub_est->parsed()) return cmd_estimate(est);
    if (sub_sweep->parsed()) return cmd_sweep(sweep);
    if (sub_verify->parsed()) return cmd_verify(verify);
    if (sub_cx->parsed()) return cmd_complexity(cx);
  } catch (const sre::SizeError& e) {
    std::cerr << "sre: size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const IoError& e) {
    std::cerr << "sre: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sre: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "sre: error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
