#include "fxl/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fxl {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::ostringstream out;
  const std::size_t d = trajectory.iterates.empty() ? 0 : trajectory.iterates.front().size();
  out << "n";
  for (std::size_t i = 0; i < d; ++i) out << ",x" << i;
  out << ",residual,fp_distance\n";
  for (std::size_t n = 0; n < trajectory.length(); ++n) {
    out << n;
    for (double v : trajectory.iterates[n]) out << ',' << format_double(v);
    out << ',' << format_double(trajectory.residuals[n]) << ','
        << format_double(trajectory.fp_distances[n]) << '\n';
  }
  return out.str();
}

std::string coupled_csv(const CoupledRun& run) {
  std::ostringstream out;
  const std::size_t d = run.reference.iterates.empty() ? 0 : run.reference.iterates.front().size();
  out << "n";
  for (std::size_t i = 0; i < d; ++i) out << ",u" << i;
  for (std::size_t i = 0; i < d; ++i) out << ",x" << i;
  out << ",gap,residual_reference,residual_target\n";
  for (std::size_t n = 0; n < run.length(); ++n) {
    out << n;
    for (double v : run.reference.iterates[n]) out << ',' << format_double(v);
    for (double v : run.target.iterates[n]) out << ',' << format_double(v);
    out << ',' << format_double(run.gap[n]) << ',' << format_double(run.reference.residuals[n])
        << ',' << format_double(run.target.residuals[n]) << '\n';
  }
  return out.str();
}

std::string suite_csv(const SuiteResult& result) {
  std::ostringstream out;
  out << "scheme,final_fp_error,gap_tail,iterations,stop_reason\n";
  for (const SuiteRow& row : result.rows) {
    out << family_name(row.family) << ',' << format_double(row.final_fp_error) << ','
        << format_double(row.gap_tail) << ',' << row.iterations << ','
        << stop_reason_name(row.stop_reason) << '\n';
  }
  return out.str();
}

namespace {

json vec_json(const Vec& v) { return json(v); }

json schedule_json_obj(const ParameterSchedule& s) {
  json j;
  switch (s.kind()) {
    case ParameterSchedule::Kind::constant:
      j["kind"] = "constant";
      j["value"] = s.constant_value();
      break;
    case ParameterSchedule::Kind::harmonic:
      j["kind"] = "harmonic";
      j["offset"] = s.harmonic_offset();
      break;
    case ParameterSchedule::Kind::list:
      j["kind"] = "list";
      j["values"] = s.values();
      break;
  }
  j["floor"] = s.floor();
  return j;
}

ParameterSchedule schedule_from_json_obj(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  bool has_floor = j.contains("floor");
  if (kind == "constant") {
    double v = j.at("value").get<double>();
    return has_floor ? ParameterSchedule::constant(v, j.at("floor").get<double>())
                     : ParameterSchedule::constant(v);
  }
  if (kind == "harmonic")
    return ParameterSchedule::harmonic(j.at("offset").get<double>(),
                                       has_floor ? j.at("floor").get<double>() : 0.0);
  if (kind == "list") {
    Vec values = j.at("values").get<Vec>();
    return has_floor ? ParameterSchedule::list(std::move(values), j.at("floor").get<double>())
                     : ParameterSchedule::list(std::move(values));
  }
  raise(ErrorCode::parse, "unknown schedule kind '" + kind + "'");
}

json audit_json_obj(const AuditReport& report) {
  json j;
  j["inequality"] = report.inequality;
  j["steps"] = report.size();
  j["tolerance"] = report.tolerance;
  j["violations"] = report.violation_count();
  j["min_slack"] = report.min_slack;
  if (report.first_violation)
    j["first_violation"] = *report.first_violation;
  else
    j["first_violation"] = nullptr;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["slack"] = report.slack;
  return j;
}

}  // namespace

std::string condition_check_json(const ConditionCheck& check, const std::string& map_label) {
  json j;
  j["map"] = map_label;
  j["condition"] = condition_class_name(check.condition);
  j["certified"] = check.certified;
  j["sample_count"] = check.sample_count;
  j["max_slack"] = check.max_slack;
  json constants;
  switch (check.condition) {
    case ConditionClass::zamfirescu:
      constants["a"] = check.a;
      constants["b"] = check.b;
      constants["c"] = check.c;
      break;
    case ConditionClass::quasi_contractive:
      constants["delta"] = check.delta;
      j["alternate_branch_holds"] = check.alt_branch_holds;
      break;
    case ConditionClass::osilike_udomene:
      constants["delta"] = check.delta;
      constants["L"] = check.big_l;
      break;
    case ConditionClass::contractive_like: {
      constants["delta"] = check.delta;
      if (check.gauge) {
        json g;
        switch (check.gauge->kind()) {
          case Gauge::Kind::linear:
            g["kind"] = "linear";
            g["slope"] = check.gauge->slope();
            break;
          case Gauge::Kind::power:
            g["kind"] = "power";
            g["coeff"] = check.gauge->coeff();
            g["exponent"] = check.gauge->exponent();
            break;
          case Gauge::Kind::tabulated:
            g["kind"] = "tabulated";
            g["knots"] = check.gauge->knots();
            g["values"] = check.gauge->values();
            break;
        }
        constants["gauge"] = g;
      }
      break;
    }
  }
  j["constants"] = constants;
  if (check.violation) {
    json v;
    v["pair_index"] = check.violation->pair_index;
    v["x"] = vec_json(check.violation->x);
    v["y"] = vec_json(check.violation->y);
    v["branch_excess"] = vec_json(check.violation->branch_excess);
    j["violation"] = v;
  }
  return j.dump(2);
}

std::string audit_json(const AuditReport& report, const std::string& label) {
  json j = audit_json_obj(report);
  j["label"] = label;
  return j.dump(2);
}

std::string recurrence_verdict_json(const RecurrenceVerdict& verdict, const std::string& label) {
  json j;
  j["label"] = label;
  j["recurrence_holds"] = verdict.recurrence_holds;
  if (verdict.first_violation)
    j["first_violation"] = *verdict.first_violation;
  else
    j["first_violation"] = nullptr;
  j["mu_partial_sum"] = verdict.mu_partial_sum;
  j["rho_over_mu_head_max"] = verdict.rho_over_mu_head_max;
  j["rho_over_mu_tail_max"] = verdict.rho_over_mu_tail_max;
  j["a_head_max"] = verdict.a_head_max;
  j["a_tail_max"] = verdict.a_tail_max;
  j["slack"] = verdict.slack;
  j["consistent"] = verdict.consistent;
  return j.dump(2);
}

std::string suite_json(const SuiteResult& result, const std::string& map_label) {
  json j;
  j["map"] = map_label;
  j["pass"] = result.pass;
  j["fp_tolerance"] = result.fp_tolerance;
  j["fixed_point"] = result.fixed_point;
  json rows = json::array();
  for (const SuiteRow& row : result.rows) {
    json r;
    r["scheme"] = family_name(row.family);
    r["final_fp_error"] = row.final_fp_error;
    r["gap_tail"] = row.gap_tail;
    r["iterations"] = row.iterations;
    r["stop_reason"] = stop_reason_name(row.stop_reason);
    r["outcome"] = couple_outcome_name(row.run.outcome);
    json audits = json::array();
    for (const AuditSummary& a : row.audits) {
      json aj;
      aj["inequality"] = a.inequality;
      aj["steps"] = a.steps;
      aj["violations"] = a.violations;
      aj["min_slack"] = a.min_slack;
      if (a.first_violation)
        aj["first_violation"] = *a.first_violation;
      else
        aj["first_violation"] = nullptr;
      audits.push_back(aj);
    }
    r["audits"] = audits;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2);
}

std::string scheme_json(const SchemeConfig& config) {
  json j;
  j["family"] = family_name(config.family);
  j["k"] = config.k;
  j["alpha"] = schedule_json_obj(config.alpha);
  json betas = json::array();
  for (const ParameterSchedule& b : config.betas) betas.push_back(schedule_json_obj(b));
  j["betas"] = betas;
  return j.dump(2);
}

SchemeConfig scheme_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    raise(ErrorCode::parse, std::string("scheme JSON parse failure: ") + ex.what());
  }
  try {
    Family family = family_from_name(j.at("family").get<std::string>());
    int k = j.contains("k") ? j.at("k").get<int>() : 2;
    ParameterSchedule alpha = j.contains("alpha") ? schedule_from_json_obj(j.at("alpha"))
                                                  : ParameterSchedule::constant(0.5);
    std::vector<ParameterSchedule> betas;
    if (j.contains("betas"))
      for (const auto& b : j.at("betas")) betas.push_back(schedule_from_json_obj(b));
    if (family == Family::picard && betas.empty()) return make_scheme(Family::picard);
    return make_scheme(family, alpha, betas, k);
  } catch (const json::exception& ex) {
    raise(ErrorCode::parse, std::string("scheme JSON malformed: ") + ex.what());
  }
}

}  // namespace fxl
