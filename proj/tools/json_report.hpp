#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistnorm/classifier.hpp"
#include "twistnorm/instances.hpp"
#include "twistnorm/lemmas.hpp"
#include "twistnorm/normality.hpp"
#include "twistnorm/sweep.hpp"

namespace twistnorm::report {

using nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline ordered_json subset_json(const ElementSubset& s) { return s.members(); }

inline ordered_json verdict_json(const NormalityVerdict& v, const std::string& group, const std::string& ring,
                                 const std::string& sigma_id, const std::string& f_id) {
  ordered_json j;
  j["normal"] = v.normal;
  j["method"] = v.method;
  j["witness_kind"] = to_string(v.witness_kind);
  switch (v.witness_kind) {
    case WitnessKind::kNone: j["witness"] = nullptr; break;
    case WitnessKind::kElement:
    case WitnessKind::kPair: j["witness"] = v.witness_elements; break;
    case WitnessKind::kVector: j["witness"] = v.witness_vector; break;
  }
  j["group"] = group;
  j["ring"] = ring;
  j["sigma_id"] = sigma_id;
  j["f_id"] = f_id;
  return j;
}

inline ordered_json sigma_group_json(const SigmaGroupWitness& w) {
  ordered_json j;
  j["a"] = w.a;
  j["b"] = w.b;
  j["commutator_c"] = w.commutator_c;
  j["subgroup"] = subset_json(w.subgroup);
  j["center"] = subset_json(w.center);
  j["frattini"] = subset_json(w.frattini);
  j["fixed"] = subset_json(w.fixed);
  j["frattini_equals_center"] = w.frattini_equals_center;
  j["center_equals_fixed"] = w.center_equals_fixed;
  j["sigma_action_matches"] = w.sigma_action_matches;
  return j;
}

inline ordered_json certificate_json(const ClassificationCertificate& c) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["case"] = to_string(c.tag);
  j["detail"] = c.detail;
  j["fixed_set"] = subset_json(c.fixed_set);
  j["W"] = subset_json(c.moved_set);
  j["W_span"] = subset_json(c.moved_span);
  ordered_json w = ordered_json::object();
  if (c.abelian_subgroup) w["H"] = subset_json(*c.abelian_subgroup);
  if (c.b) w["b"] = *c.b;
  if (!c.sigma_groups.empty()) {
    ordered_json groups = ordered_json::array();
    for (const auto& g : c.sigma_groups) groups.push_back(sigma_group_json(g));
    w["sigma_groups"] = groups;
  }
  if (c.centralizer) w["centralizer"] = subset_json(*c.centralizer);
  if (c.commutator_c) w["c"] = *c.commutator_c;
  if (c.d) w["d"] = *c.d;
  if (c.quotient_rank) w["quotient_rank"] = c.quotient_rank;
  j["witnesses"] = w;
  return j;
}

inline ordered_json lemma_json(const LemmaResult& r) {
  ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["vacuous"] = r.vacuous;
  j["checks"] = r.checks;
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

inline std::string shell_quote(const std::string& s) {
  if (s.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789:,._-/") == std::string::npos) {
    return s;
  }
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

/// A `twistnorm check` command line that reproduces the instance.
inline std::string reproduce_command(const std::string& group, const std::string& ring, const std::string& sigma_id,
                                     const std::string& f_id, bool oracle) {
  std::string cmd = "twistnorm check --group " + shell_quote(group) + " --ring " + shell_quote(ring) + " --sigma " +
                    shell_quote(sigma_id) + " --f " + shell_quote(f_id);
  if (oracle) cmd += " --oracle";
  return cmd;
}

inline ordered_json record_json(const InstanceRecord& r) {
  const std::string sigma_id = "map:" + join_values(r.sigma);
  const std::string f_id = "values:" + join_values(r.f);
  ordered_json j;
  j["group"] = r.group;
  j["ring"] = r.ring;
  j["sigma_index"] = r.sigma_index;
  j["f_index"] = r.f_index;
  j["sigma"] = r.sigma;
  j["f"] = r.f;
  j["pairwise"] = verdict_json(r.pairwise, r.group, r.ring, sigma_id, f_id);
  j["case"] = to_string(r.certificate.tag);
  if (r.oracle_normal) {
    j["oracle_normal"] = *r.oracle_normal;
  } else {
    j["oracle_normal"] = nullptr;
  }
  j["agreement"] = r.agreement;
  j["oracle_agreement"] = r.oracle_agreement;
  j["f_range_ok"] = r.f_range_ok;
  if (!r.lemmas.empty()) {
    ordered_json lemmas = ordered_json::array();
    for (const auto& l : r.lemmas) lemmas.push_back(lemma_json(l));
    j["lemmas"] = lemmas;
  }
  if (r.failed()) {
    j["certificate"] = certificate_json(r.certificate);
    j["reproduce"] = reproduce_command(r.group, r.ring, sigma_id, f_id, r.oracle_normal.has_value());
  }
  return j;
}

inline ordered_json summary_json(const SweepSummary& s) {
  ordered_json j;
  j["instances"] = s.instances;
  j["normal"] = s.normal;
  j["disagreements"] = s.disagreements;
  j["oracle_runs"] = s.oracle_runs;
  j["oracle_mismatches"] = s.oracle_mismatches;
  j["f_range_exceptions"] = s.f_range_exceptions;
  j["lemma_instances"] = s.lemma_instances;
  j["lemma_failures"] = s.lemma_failures;
  j["per_case"] = s.per_case;
  j["lemma_failures_by_suite"] = s.lemma_failures_by_suite;
  return j;
}

/// Deterministic report body; timing goes into a separate top-level section
/// only when requested.
inline ordered_json sweep_json(const SweepReport& report, bool timing) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json opts;
  opts["max_order"] = report.options.max_order;
  opts["rings"] = report.options.rings;
  opts["groups"] = report.options.groups;
  opts["oracle"] = report.options.oracle;
  opts["lemmas"] = report.options.lemmas;
  j["options"] = opts;
  j["summary"] = summary_json(report.summary);
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  j["records"] = records;
  if (timing) {
    ordered_json t;
    t["total_seconds"] = report.seconds;
    ordered_json per = ordered_json::array();
    for (const auto& r : report.records) per.push_back(r.seconds);
    t["per_record_seconds"] = per;
    j["timing"] = t;
  }
  return j;
}

inline void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "group,ring,sigma_index,f_index,pairwise_normal,case,oracle_normal,agreement,oracle_agreement,f_range_ok,"
         "lemmas_ok\n";
  for (const auto& r : report.records) {
    out << '"' << r.group << "\"," << r.ring << ',' << r.sigma_index << ',' << r.f_index << ','
        << (r.pairwise.normal ? "true" : "false") << ',' << to_string(r.certificate.tag) << ','
        << (r.oracle_normal ? (*r.oracle_normal ? "true" : "false") : "") << ','
        << (r.agreement ? "true" : "false") << ',' << (r.oracle_agreement ? "true" : "false") << ','
        << (r.f_range_ok ? "true" : "false") << ',' << (r.lemmas.empty() ? "" : (r.lemmas_ok() ? "true" : "false"))
        << '\n';
  }
}

}  // namespace twistnorm::report
