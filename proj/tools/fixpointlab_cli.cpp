// Batch front-end over the fixpointlab C API: loads a mapping corpus, runs
// condition certification, single trajectories, coupled runs with inequality
// audits, and the ten-scheme equivalence suite; writes CSV and JSON reports.
//
// Exit codes: 0 success, 1 usage/I-O/configuration error, 2 mathematical
// violation (refuted condition, audit violation, or a scheme missing the
// common fixed point).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fixpointlab.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct CorpusDeleter {
  void operator()(fxl_corpus* p) const { fxl_corpus_free(p); }
};
struct ScheduleDeleter {
  void operator()(fxl_schedule* p) const { fxl_schedule_free(p); }
};
struct SchemeDeleter {
  void operator()(fxl_scheme* p) const { fxl_scheme_free(p); }
};
struct GaugeDeleter {
  void operator()(fxl_gauge* p) const { fxl_gauge_free(p); }
};
struct CheckDeleter {
  void operator()(fxl_check* p) const { fxl_check_free(p); }
};
struct TrajectoryDeleter {
  void operator()(fxl_trajectory* p) const { fxl_trajectory_free(p); }
};
struct CoupledDeleter {
  void operator()(fxl_coupled* p) const { fxl_coupled_free(p); }
};
struct AuditDeleter {
  void operator()(fxl_audit* p) const { fxl_audit_free(p); }
};
struct SuiteDeleter {
  void operator()(fxl_suite* p) const { fxl_suite_free(p); }
};

using CorpusPtr = std::unique_ptr<fxl_corpus, CorpusDeleter>;
using SchedulePtr = std::unique_ptr<fxl_schedule, ScheduleDeleter>;
using SchemePtr = std::unique_ptr<fxl_scheme, SchemeDeleter>;
using GaugePtr = std::unique_ptr<fxl_gauge, GaugeDeleter>;
using CheckPtr = std::unique_ptr<fxl_check, CheckDeleter>;
using TrajectoryPtr = std::unique_ptr<fxl_trajectory, TrajectoryDeleter>;
using CoupledPtr = std::unique_ptr<fxl_coupled, CoupledDeleter>;
using AuditPtr = std::unique_ptr<fxl_audit, AuditDeleter>;
using SuitePtr = std::unique_ptr<fxl_suite, SuiteDeleter>;

[[noreturn]] void fail(const std::string& what, fxl_status status) {
  std::cerr << "error: " << what << ": " << fxl_last_error() << " ["
            << fxl_status_name(status) << "]\n";
  std::exit(kExitUsage);
}

void require_ok(fxl_status status, const std::string& what) {
  if (status != FXL_OK) fail(what, status);
}

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      std::cerr << "error: cannot parse '" << item << "' in " << what << "\n";
      std::exit(kExitUsage);
    }
  }
  if (out.empty()) {
    std::cerr << "error: empty value list for " << what << "\n";
    std::exit(kExitUsage);
  }
  return out;
}

// Schedule spec: const:V | harmonic:C | list:v1,v2,... with optional @floor.
SchedulePtr parse_schedule(const std::string& spec, const std::string& what) {
  std::string body = spec;
  double floor = -1.0;
  if (auto at = body.find('@'); at != std::string::npos) {
    try {
      floor = std::stod(body.substr(at + 1));
    } catch (const std::exception&) {
      std::cerr << "error: bad floor in schedule spec '" << spec << "'\n";
      std::exit(kExitUsage);
    }
    body = body.substr(0, at);
  }
  auto colon = body.find(':');
  if (colon == std::string::npos) {
    std::cerr << "error: schedule spec '" << spec << "' for " << what
              << " must look like const:0.5, harmonic:2 or list:0.5,0.25\n";
    std::exit(kExitUsage);
  }
  std::string kind = body.substr(0, colon);
  std::string args = body.substr(colon + 1);
  fxl_schedule* handle = nullptr;
  if (kind == "const" || kind == "constant") {
    require_ok(fxl_schedule_constant(std::stod(args), &handle), what);
  } else if (kind == "harmonic") {
    require_ok(fxl_schedule_harmonic(std::stod(args), &handle), what);
  } else if (kind == "list") {
    std::vector<double> values = parse_doubles(args, what);
    require_ok(fxl_schedule_list(values.data(), values.size(), &handle), what);
  } else {
    std::cerr << "error: unknown schedule kind '" << kind << "' for " << what << "\n";
    std::exit(kExitUsage);
  }
  SchedulePtr schedule(handle);
  if (floor >= 0.0) require_ok(fxl_schedule_set_floor(schedule.get(), floor), what + " floor");
  return schedule;
}

// Gauge spec: linear:L | power:c,q | table:t1,v1;t2,v2;...
GaugePtr parse_gauge(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    std::cerr << "error: gauge spec '" << spec << "' must look like linear:1.0 or power:1.0,2.0\n";
    std::exit(kExitUsage);
  }
  std::string kind = spec.substr(0, colon);
  std::string args = spec.substr(colon + 1);
  fxl_gauge* handle = nullptr;
  if (kind == "linear") {
    require_ok(fxl_gauge_linear(std::stod(args), &handle), "gauge");
  } else if (kind == "power") {
    std::vector<double> v = parse_doubles(args, "gauge");
    if (v.size() != 2) {
      std::cerr << "error: power gauge needs coeff,exponent\n";
      std::exit(kExitUsage);
    }
    require_ok(fxl_gauge_power(v[0], v[1], &handle), "gauge");
  } else if (kind == "table") {
    std::vector<double> knots, values;
    std::stringstream ss(args);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
      std::vector<double> kv = parse_doubles(pair, "gauge table entry");
      if (kv.size() != 2) {
        std::cerr << "error: gauge table entries are t,v pairs\n";
        std::exit(kExitUsage);
      }
      knots.push_back(kv[0]);
      values.push_back(kv[1]);
    }
    require_ok(fxl_gauge_tabulated(knots.data(), values.data(), knots.size(), &handle), "gauge");
  } else {
    std::cerr << "error: unknown gauge kind '" << kind << "'\n";
    std::exit(kExitUsage);
  }
  return GaugePtr(handle);
}

GaugePtr default_or_parsed_gauge(const std::string& spec, double delta) {
  if (!spec.empty()) return parse_gauge(spec);
  fxl_gauge* handle = nullptr;
  require_ok(fxl_gauge_linear(2.0 * delta, &handle), "gauge");
  return GaugePtr(handle);
}

std::string timestamp_line() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return std::string("# generated: ") + buf + "\n";
}

void write_file(const fs::path& path, const std::string& body, bool with_timestamp) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path.string() << "'\n";
    std::exit(kExitUsage);
  }
  if (with_timestamp) out << timestamp_line();
  out << body;
}

fs::path out_path(const std::string& out, const std::string& default_name) {
  fs::path path(out);
  if (out == "." || fs::is_directory(path) || out.back() == '/') return path / default_name;
  return path;
}

struct CommonOptions {
  std::string corpus_path;
  std::string map_label;
  std::string x0_spec;
  double tol = 1e-10;
  std::size_t max_iters = 10000;
  double divergence_bound = 1e12;
  std::uint64_t seed = 42;
  std::string out = ".";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_x0) {
  cmd->add_option("--corpus", opt.corpus_path, "mapping corpus JSON file")->required();
  cmd->add_option("--map", opt.map_label, "map label within the corpus")->required();
  if (with_x0)
    cmd->add_option("--x0", opt.x0_spec,
                    "starting point, comma separated (default: domain midpoint)");
  cmd->add_option("--tol", opt.tol, "residual stopping tolerance")->capture_default_str();
  cmd->add_option("--max-iters", opt.max_iters, "iteration cap")->capture_default_str();
  cmd->add_option("--divergence-bound", opt.divergence_bound, "norm guard bound")
      ->capture_default_str();
  cmd->add_option("--seed", opt.seed, "seed for sample generation")->capture_default_str();
  cmd->add_option("--out", opt.out, "output file or directory")->capture_default_str();
}

CorpusPtr open_corpus(const std::string& path) {
  fxl_corpus* corpus = nullptr;
  require_ok(fxl_corpus_load(path.c_str(), &corpus), "--corpus " + path);
  return CorpusPtr(corpus);
}

const fxl_map* open_map(const CorpusPtr& corpus, const std::string& label) {
  const fxl_map* map = nullptr;
  require_ok(fxl_corpus_map(corpus.get(), label.c_str(), &map), "--map " + label);
  return map;
}

std::vector<double> resolve_x0(const fxl_map* map, const std::string& spec) {
  const std::size_t d = fxl_map_dimension(map);
  if (spec.empty()) {
    std::vector<double> lo(d), hi(d), mid(d);
    require_ok(fxl_map_domain(map, lo.data(), hi.data()), "domain");
    for (std::size_t i = 0; i < d; ++i) mid[i] = lo[i] + 0.5 * (hi[i] - lo[i]);
    return mid;
  }
  std::vector<double> x0 = parse_doubles(spec, "--x0");
  if (x0.size() != d) {
    std::cerr << "error: --x0 has " << x0.size() << " coordinates, map needs " << d << "\n";
    std::exit(kExitUsage);
  }
  return x0;
}

fxl_stopping make_stopping(const CommonOptions& opt) {
  return fxl_stopping{opt.tol, opt.max_iters, opt.divergence_bound};
}

struct SchemeOptions {
  std::string family = "mann";
  int k = 3;
  std::string alpha_spec = "const:0.5";
  std::vector<std::string> beta_specs;
};

void add_scheme_options(CLI::App* cmd, SchemeOptions& opt) {
  cmd->add_option("--scheme", opt.family,
                  "picard|krasnoselskij|mann|ishikawa|new_two_step|noor|sp|multistep|"
                  "new_multistep|s_iteration")
      ->capture_default_str();
  cmd->add_option("--k", opt.k, "levels for the multistep families")->capture_default_str();
  cmd->add_option("--alpha", opt.alpha_spec, "alpha schedule spec")->capture_default_str();
  cmd->add_option("--beta", opt.beta_specs,
                  "beta schedule spec, repeatable (one per auxiliary level; default const:0.5)");
}

std::size_t scheme_beta_count(const std::string& family, int k) {
  if (family == "picard" || family == "krasnoselskij" || family == "mann") return 0;
  if (family == "ishikawa" || family == "new_two_step" || family == "s_iteration") return 1;
  if (family == "noor" || family == "sp") return 2;
  return k >= 2 ? static_cast<std::size_t>(k - 1) : 0;
}

SchemePtr build_scheme(const SchemeOptions& opt) {
  SchedulePtr alpha = parse_schedule(opt.alpha_spec, "--alpha");
  std::vector<std::string> specs = opt.beta_specs;
  std::size_t need = scheme_beta_count(opt.family, opt.k);
  while (specs.size() < need) specs.push_back("const:0.5");
  if (specs.size() > need) specs.resize(need);
  std::vector<SchedulePtr> betas;
  std::vector<const fxl_schedule*> beta_handles;
  for (const std::string& spec : specs) {
    betas.push_back(parse_schedule(spec, "--beta"));
    beta_handles.push_back(betas.back().get());
  }
  fxl_scheme* handle = nullptr;
  require_ok(fxl_scheme_create(opt.family.c_str(), opt.k, alpha.get(),
                               beta_handles.empty() ? nullptr : beta_handles.data(),
                               beta_handles.size(), &handle),
             "--scheme " + opt.family);
  return SchemePtr(handle);
}

// The Mann reference paired with a target scheme shares its alpha values
// (Picard pins alpha to 1).
SchemePtr build_mann_reference(const SchemeOptions& target) {
  std::string alpha_spec = target.family == "picard" ? "const:1" : target.alpha_spec;
  SchedulePtr alpha = parse_schedule(alpha_spec, "--alpha");
  fxl_scheme* handle = nullptr;
  require_ok(fxl_scheme_create("mann", 2, alpha.get(), nullptr, 0, &handle), "mann reference");
  return SchemePtr(handle);
}

// ---- certify ----

struct CertifyOptions {
  CommonOptions common;
  double a = 0.9, b = 0.45, c = 0.45;
  double delta = -1.0;     // derived from (a, b, c) unless given
  double big_l = -1.0;     // defaults to 2*delta
  std::string gauge_spec;  // defaults to linear:2*delta
  std::size_t pairs = 10000;
};

int cmd_certify(const CertifyOptions& opt) {
  CorpusPtr corpus = open_corpus(opt.common.corpus_path);
  const fxl_map* map = open_map(corpus, opt.common.map_label);

  double delta = opt.delta;
  if (delta < 0.0)
    require_ok(fxl_delta_from_zamfirescu(opt.a, opt.b, opt.c, &delta), "--a/--b/--c");
  double big_l = opt.big_l >= 0.0 ? opt.big_l : 2.0 * delta;
  GaugePtr gauge = default_or_parsed_gauge(opt.gauge_spec, delta);

  std::vector<CheckPtr> checks;
  {
    fxl_check* h = nullptr;
    require_ok(fxl_certify_zamfirescu(map, nullptr, opt.a, opt.b, opt.c, opt.pairs,
                                      opt.common.seed, &h),
               "zamfirescu check");
    checks.emplace_back(h);
    require_ok(fxl_certify_quasi_contractive(map, nullptr, delta, opt.pairs, opt.common.seed, &h),
               "quasi-contractive check");
    checks.emplace_back(h);
    require_ok(fxl_certify_osilike(map, nullptr, delta, big_l, opt.pairs, opt.common.seed, &h),
               "osilike check");
    checks.emplace_back(h);
    require_ok(fxl_certify_contractive_like(map, nullptr, delta, gauge.get(), opt.pairs,
                                            opt.common.seed, &h),
               "contractive-like check");
    checks.emplace_back(h);
  }

  bool all_certified = true;
  for (const CheckPtr& check : checks) {
    const char* condition = fxl_check_condition(check.get());
    bool certified = fxl_check_certified(check.get()) != 0;
    all_certified = all_certified && certified;
    fs::path path = fs::path(opt.common.out) /
                    ("certify_" + opt.common.map_label + "_" + condition + ".json");
    write_file(path, fxl_check_json(check.get()), false);
    std::printf("%-18s %-9s max_slack=%.3e pairs=%zu -> %s\n", condition,
                certified ? "certified" : "REFUTED", fxl_check_max_slack(check.get()),
                fxl_check_sample_count(check.get()), path.string().c_str());
  }
  return all_certified ? kExitOk : kExitViolation;
}

// ---- run ----

struct RunOptions {
  CommonOptions common;
  SchemeOptions scheme;
};

int cmd_run(const RunOptions& opt) {
  CorpusPtr corpus = open_corpus(opt.common.corpus_path);
  const fxl_map* map = open_map(corpus, opt.common.map_label);
  SchemePtr scheme = build_scheme(opt.scheme);
  std::vector<double> x0 = resolve_x0(map, opt.common.x0_spec);
  fxl_stopping stopping = make_stopping(opt.common);

  fxl_trajectory* handle = nullptr;
  require_ok(fxl_run(map, scheme.get(), x0.data(), &stopping, nullptr, 0, &handle), "run");
  TrajectoryPtr traj(handle);

  fs::path path =
      out_path(opt.common.out, "run_" + opt.common.map_label + "_" + opt.scheme.family + ".csv");
  write_file(path, fxl_trajectory_csv(traj.get()), true);

  std::size_t n = fxl_trajectory_length(traj.get());
  double residual = 0.0;
  fxl_trajectory_residual(traj.get(), n - 1, &residual);
  std::printf("%s on %s: %zu iterates, stop=%s, final residual=%.3e -> %s\n",
              opt.scheme.family.c_str(), opt.common.map_label.c_str(), n,
              fxl_trajectory_stop_reason(traj.get()), residual, path.string().c_str());
  return kExitOk;
}

// ---- couple ----

struct CoupleOptions {
  CommonOptions common;
  SchemeOptions scheme;  // target; the reference Mann shares its alpha
  double delta = 0.9;
  std::string gauge_spec;
};

int cmd_couple(const CoupleOptions& opt) {
  CorpusPtr corpus = open_corpus(opt.common.corpus_path);
  const fxl_map* map = open_map(corpus, opt.common.map_label);
  SchemePtr target = build_scheme(opt.scheme);
  SchemePtr reference = build_mann_reference(opt.scheme);
  GaugePtr gauge = default_or_parsed_gauge(opt.gauge_spec, opt.delta);
  std::vector<double> x0 = resolve_x0(map, opt.common.x0_spec);
  fxl_stopping stopping = make_stopping(opt.common);

  fxl_coupled* handle = nullptr;
  require_ok(fxl_couple(map, reference.get(), target.get(), x0.data(), &stopping, nullptr,
                        &handle),
             "couple");
  CoupledPtr coupled(handle);

  fs::path csv_path =
      fs::path(opt.common.out) / ("couple_" + opt.common.map_label + "_" + opt.scheme.family + ".csv");
  write_file(csv_path, fxl_coupled_csv(coupled.get()), true);

  // Applicable audits: new-multistep pairings for that family and everything
  // that reduces to it, S-iteration pairings otherwise.
  std::vector<AuditPtr> audits;
  auto try_audit = [&](fxl_status (*fn)(const fxl_coupled*, double, const fxl_gauge*,
                                        fxl_audit**)) {
    fxl_audit* a = nullptr;
    fxl_status status = fn(coupled.get(), opt.delta, gauge.get(), &a);
    if (status == FXL_OK) audits.emplace_back(a);
    else if (status != FXL_ERR_SCHEME_MISMATCH) fail("audit", status);
  };
  try_audit(&fxl_audit_new_multistep_forward);
  try_audit(&fxl_audit_new_multistep_backward);
  try_audit(&fxl_audit_s_iteration_forward);
  try_audit(&fxl_audit_s_iteration_backward);

  std::size_t total_violations = 0;
  for (const AuditPtr& audit : audits) {
    fs::path path = fs::path(opt.common.out) / ("audit_" + opt.common.map_label + "_" +
                                                fxl_audit_inequality(audit.get()) + ".json");
    write_file(path, fxl_audit_json(audit.get()), false);
    std::size_t violations = fxl_audit_violations(audit.get());
    total_violations += violations;
    std::printf("%-32s steps=%zu violations=%zu min_slack=%.3e -> %s\n",
                fxl_audit_inequality(audit.get()), fxl_audit_length(audit.get()), violations,
                fxl_audit_min_slack(audit.get()), path.string().c_str());
  }

  std::printf("mann vs %s on %s: %zu lockstep iterates, outcome=%s, gap tail=%.3e -> %s\n",
              opt.scheme.family.c_str(), opt.common.map_label.c_str(),
              fxl_coupled_length(coupled.get()), fxl_coupled_outcome(coupled.get()),
              fxl_coupled_gap_tail_max(coupled.get()), csv_path.string().c_str());
  return total_violations == 0 ? kExitOk : kExitViolation;
}

// ---- suite ----

struct SuiteOptions {
  CommonOptions common;
  std::string alpha_spec = "const:0.5";
  std::string beta_spec = "const:0.5";
  int k = 3;
  double delta = 0.9;
  std::string gauge_spec;
  double fp_tol = 1e-7;
};

int cmd_suite(const SuiteOptions& opt) {
  CorpusPtr corpus = open_corpus(opt.common.corpus_path);
  const fxl_map* map = open_map(corpus, opt.common.map_label);
  SchedulePtr alpha = parse_schedule(opt.alpha_spec, "--alpha");
  SchedulePtr beta = parse_schedule(opt.beta_spec, "--beta");
  GaugePtr gauge = default_or_parsed_gauge(opt.gauge_spec, opt.delta);
  std::vector<double> x0 = resolve_x0(map, opt.common.x0_spec);
  fxl_stopping stopping = make_stopping(opt.common);

  fxl_suite* handle = nullptr;
  require_ok(fxl_suite_run(map, x0.data(), alpha.get(), beta.get(), opt.k, &stopping, nullptr,
                           opt.delta, gauge.get(), opt.fp_tol, &handle),
             "suite");
  SuitePtr suite(handle);

  fs::path csv_path = fs::path(opt.common.out) / ("suite_" + opt.common.map_label + ".csv");
  fs::path json_path = fs::path(opt.common.out) / ("suite_" + opt.common.map_label + ".json");
  write_file(csv_path, fxl_suite_csv(suite.get()), true);
  write_file(json_path, fxl_suite_json(suite.get()), false);

  for (std::size_t row = 0; row < fxl_suite_rows(suite.get()); ++row) {
    std::printf("%-14s fp_error=%.3e gap_tail=%.3e iters=%zu stop=%s audit_violations=%zu\n",
                fxl_suite_scheme(suite.get(), row), fxl_suite_fp_error(suite.get(), row),
                fxl_suite_gap_tail(suite.get(), row), fxl_suite_iterations(suite.get(), row),
                fxl_suite_stop_reason(suite.get(), row),
                fxl_suite_audit_violations(suite.get(), row));
  }
  bool pass = fxl_suite_pass(suite.get()) != 0;
  std::printf("suite on %s: %s -> %s, %s\n", opt.common.map_label.c_str(),
              pass ? "PASS" : "FAIL", csv_path.string().c_str(), json_path.string().c_str());
  return pass ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-point iteration schemes, contractive-condition certification and "
               "equivalence audits"};
  app.require_subcommand(1);

  CertifyOptions certify;
  CLI::App* certify_cmd =
      app.add_subcommand("certify", "check the four contractive conditions over a sample set");
  add_common(certify_cmd, certify.common, false);
  certify_cmd->add_option("--a", certify.a, "three-branch constant a in (0, 1)")
      ->capture_default_str();
  certify_cmd->add_option("--b", certify.b, "three-branch constant b in (0, 1/2)")
      ->capture_default_str();
  certify_cmd->add_option("--c", certify.c, "three-branch constant c in (0, 1/2)")
      ->capture_default_str();
  certify_cmd->add_option("--delta", certify.delta,
                          "ratio for the derived conditions (default: from a, b, c)");
  certify_cmd->add_option("--L", certify.big_l, "residual coefficient (default: 2*delta)");
  certify_cmd->add_option("--gauge", certify.gauge_spec,
                          "gauge spec linear:L | power:c,q | table:... (default: linear:2*delta)");
  certify_cmd->add_option("--pairs", certify.pairs, "sample pair count")->capture_default_str();

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "run one scheme and export the trajectory CSV");
  add_common(run_cmd, run.common, true);
  add_scheme_options(run_cmd, run.scheme);

  CoupleOptions couple;
  CLI::App* couple_cmd = app.add_subcommand(
      "couple", "run a scheme in lockstep against Mann and audit the one-step estimates");
  add_common(couple_cmd, couple.common, true);
  add_scheme_options(couple_cmd, couple.scheme);
  couple_cmd->add_option("--delta", couple.delta, "certified contraction ratio")
      ->capture_default_str();
  couple_cmd->add_option("--gauge", couple.gauge_spec, "gauge spec (default: linear:2*delta)");

  SuiteOptions suite;
  CLI::App* suite_cmd =
      app.add_subcommand("suite", "run all ten schemes against Mann from one starting point");
  add_common(suite_cmd, suite.common, true);
  suite_cmd->add_option("--alpha", suite.alpha_spec, "alpha schedule (constant, floor > 0)")
      ->capture_default_str();
  suite_cmd->add_option("--beta", suite.beta_spec, "beta schedule for auxiliary levels")
      ->capture_default_str();
  suite_cmd->add_option("--k", suite.k, "levels for the multistep families")
      ->capture_default_str();
  suite_cmd->add_option("--delta", suite.delta, "certified contraction ratio")
      ->capture_default_str();
  suite_cmd->add_option("--gauge", suite.gauge_spec, "gauge spec (default: linear:2*delta)");
  suite_cmd->add_option("--fp-tol", suite.fp_tol, "common fixed-point tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (certify_cmd->parsed()) return cmd_certify(certify);
  if (run_cmd->parsed()) return cmd_run(run);
  if (couple_cmd->parsed()) return cmd_couple(couple);
  if (suite_cmd->parsed()) return cmd_suite(suite);
  return kExitUsage;
}
