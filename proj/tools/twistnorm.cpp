#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_report.hpp"
#include "twistnorm/classifier.hpp"
#include "twistnorm/errors.hpp"
#include "twistnorm/instances.hpp"
#include "twistnorm/lemmas.hpp"
#include "twistnorm/normality.hpp"
#include "twistnorm/ring.hpp"
#include "twistnorm/sweep.hpp"

namespace {

using namespace twistnorm;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconsistent = 2;

struct InstanceArgs {
  std::string group;
  std::string ring;
  std::string sigma = "builtin:classical";
  std::string f = "builtin:trivial";
};

struct ScopeArgs {
  std::size_t max_order = 8;
  std::vector<std::string> rings{"Z2", "Z3"};
  std::vector<std::string> groups;
  std::size_t workers = 0;
  std::string out;
  std::string csv;
  bool timing = false;
  bool failures_only = false;
};

/// Group, ring and spec kept together: the spec refers to the other two.
struct LoadedInstance {
  Group group;
  CoefficientRing ring;
  std::optional<InvolutionSpec> spec;

  LoadedInstance(const InstanceArgs& args) : group(parse_group_label(args.group)), ring(make_ring(args.ring)) {
    spec.emplace(parse_sigma_source(args.sigma, group), parse_f_source(args.f, group, ring));
    const auto report = spec->validate();
    if (!report.valid) {
      throw InputError("f(g sigma(g)) != 1 for g = " + std::to_string(*report.violation) +
                       ": x -> x^sigma is not an involution");
    }
  }
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a, bool required) {
  auto* g = cmd->add_option("--group", a.group, "group label (cyclic:N, dihedral:N, quaternion:8, D4YD4, file:PATH, ...)");
  auto* r = cmd->add_option("--ring", a.ring, "coefficient ring (Z2..Z9, F2..F9)");
  if (required) {
    g->required();
    r->required();
  }
  cmd->add_option("--sigma", a.sigma, "builtin:NAME, map:i0,i1,... or file:PATH")->capture_default_str();
  cmd->add_option("--f", a.f, "builtin:NAME, values:v0,v1,... or file:PATH")->capture_default_str();
}

void add_scope_options(CLI::App* cmd, ScopeArgs& s) {
  cmd->add_option("--max-order", s.max_order, "largest catalog group order")->capture_default_str();
  cmd->add_option("--rings", s.rings, "comma-separated ring labels")->delimiter(',')->capture_default_str();
  cmd->add_option("--groups", s.groups, "explicit group labels (replaces the catalog)")->delimiter(',');
  cmd->add_option("--workers", s.workers, "worker threads (default: TWISTNORM_WORKERS or all cores)");
  cmd->add_option("--out", s.out, "write the JSON report here instead of stdout");
  cmd->add_option("--csv", s.csv, "also write a CSV projection of the records");
  cmd->add_flag("--timing", s.timing, "append a timing section");
  cmd->add_flag("--failures-only", s.failures_only, "keep only failing records in the report");
}

void emit(const ordered_json& j, const std::string& path = {}) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

int run_check(const InstanceArgs& args, bool oracle) {
  LoadedInstance inst(args);
  const auto& spec = *inst.spec;
  const auto verdict = check_pairwise(spec);
  const auto cert = classify(spec);
  ordered_json j;
  j["verdict"] = report::verdict_json(verdict, args.group, args.ring, args.sigma, args.f);
  j["certificate"] = report::certificate_json(cert);
  bool consistent = verdict.normal == cert.normal();
  if (oracle) {
    if (group_ring_size(inst.group, inst.ring, kMaxEnumeratedGroupRing) == 0) {
      j["oracle"] = nullptr;
      j["oracle_note"] = "skipped: |K|^|G| exceeds 2^16";
    } else {
      const auto exhaustive = check_exhaustive(spec);
      j["oracle"] = report::verdict_json(exhaustive, args.group, args.ring, args.sigma, args.f);
      consistent = consistent && exhaustive.normal == verdict.normal;
    }
  }
  if (!verdict.normal) {
    const auto x = verdict.witness_element(inst.group, inst.ring);
    j["witness_defect_nonzero"] = !normality_defect(spec, x).is_zero();
  }
  j["consistent"] = consistent;
  emit(j);
  return consistent ? kExitOk : kExitInconsistent;
}

int run_classify(const InstanceArgs& args) {
  LoadedInstance inst(args);
  auto j = report::certificate_json(classify(*inst.spec));
  j["group"] = args.group;
  j["ring"] = args.ring;
  j["sigma_id"] = args.sigma;
  j["f_id"] = args.f;
  emit(j);
  return kExitOk;
}

SweepOptions to_options(const ScopeArgs& s) {
  SweepOptions o;
  o.max_order = s.max_order;
  o.rings = s.rings;
  o.groups = s.groups;
  o.workers = s.workers;
  o.keep_all = !s.failures_only;
  return o;
}

/// Which failures a verb answers for.
enum class Gate { kAll, kLemmas, kOracle };

int finish_sweep(const SweepReport& report, const ScopeArgs& s, Gate gate) {
  const auto j = report::sweep_json(report, s.timing);
  emit(j, s.out);
  if (!s.out.empty()) std::cout << report::summary_json(report.summary).dump(2) << '\n';
  if (!s.csv.empty()) {
    std::ofstream csv(s.csv);
    if (!csv) throw InputError("cannot write '" + s.csv + "'");
    report::write_sweep_csv(csv, report);
  }
  const auto& sum = report.summary;
  bool clean = true;
  switch (gate) {
    case Gate::kAll:
      clean = sum.disagreements == 0 && sum.oracle_mismatches == 0 && sum.f_range_exceptions == 0 &&
              sum.lemma_failures == 0;
      break;
    case Gate::kLemmas: clean = sum.lemma_failures == 0; break;
    case Gate::kOracle: clean = sum.oracle_mismatches == 0; break;
  }
  return clean ? kExitOk : kExitInconsistent;
}

int run_sweep_cmd(const ScopeArgs& s, bool oracle, bool lemmas, Gate gate = Gate::kAll) {
  auto o = to_options(s);
  o.oracle = oracle;
  o.lemmas = lemmas;
  return finish_sweep(run_sweep(o), s, gate);
}

int run_lemmas(const InstanceArgs& args, const ScopeArgs& s) {
  if (args.group.empty()) {
    auto o = to_options(s);
    o.lemmas = true;
    auto report = run_sweep(o);
    // lemma reports are about sigma-normal instances only
    std::erase_if(report.records, [](const InstanceRecord& r) { return r.lemmas.empty(); });
    return finish_sweep(report, s, Gate::kLemmas);
  }
  if (args.ring.empty()) throw InputError("--ring is required together with --group");
  LoadedInstance inst(args);
  const auto& spec = *inst.spec;
  const auto verdict = check_pairwise(spec);
  ordered_json j;
  j["verdict"] = report::verdict_json(verdict, args.group, args.ring, args.sigma, args.f);
  if (!verdict.normal) {
    j["lemmas"] = nullptr;
    j["note"] = "lemma suites apply to sigma-normal instances only";
    emit(j);
    return kExitOk;
  }
  const auto cert = classify(spec);
  j["case"] = to_string(cert.tag);
  ordered_json lemmas = ordered_json::array();
  bool ok = true;
  for (const auto& r : run_lemma_suites(spec, cert)) {
    lemmas.push_back(report::lemma_json(r));
    ok = ok && r.passed;
  }
  j["lemmas"] = lemmas;
  const auto sets = fixed_and_moved_sets(spec.sigma());
  j["W_span"] = sets.moved_span.members();
  j["W_span_normal"] = is_normal(inst.group, sets.moved_span);
  j["W_span_abelian"] = is_abelian(sets.moved_span);
  emit(j);
  return ok ? kExitOk : kExitInconsistent;
}

int run_oracle_compare(const InstanceArgs& args, const ScopeArgs& s) {
  if (args.group.empty()) return run_sweep_cmd(s, true, false, Gate::kOracle);
  if (args.ring.empty()) throw InputError("--ring is required together with --group");
  LoadedInstance inst(args);
  const auto pairwise = check_pairwise(*inst.spec);
  const auto exhaustive = check_exhaustive(*inst.spec);
  ordered_json j;
  j["pairwise"] = report::verdict_json(pairwise, args.group, args.ring, args.sigma, args.f);
  j["exhaustive"] = report::verdict_json(exhaustive, args.group, args.ring, args.sigma, args.f);
  j["agree"] = pairwise.normal == exhaustive.normal;
  emit(j);
  return pairwise.normal == exhaustive.normal ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide sigma-normality of finite group rings KG and cross-check a structural classifier"};
  app.require_subcommand(1);

  InstanceArgs check_args, classify_args, lemma_args, oracle_args;
  ScopeArgs sweep_scope, lemma_scope, oracle_scope;
  oracle_scope.max_order = 6;
  oracle_scope.rings = {"Z2", "Z3", "F4"};
  bool check_oracle = false, sweep_oracle = false, sweep_lemmas = false;

  auto* check = app.add_subcommand("check", "pairwise verdict, certificate and optional exhaustive oracle");
  add_instance_options(check, check_args, true);
  check->add_flag("--oracle", check_oracle, "also run the exhaustive check when |K|^|G| <= 2^16");

  auto* classify_cmd = app.add_subcommand("classify", "structural certificate only");
  add_instance_options(classify_cmd, classify_args, true);

  auto* sweep = app.add_subcommand("sweep", "every catalog group x ring x sigma x f");
  add_scope_options(sweep, sweep_scope);
  sweep->add_flag("--oracle", sweep_oracle, "also run the exhaustive check where feasible");
  sweep->add_flag("--lemmas", sweep_lemmas, "run the lemma suites on sigma-normal instances");

  auto* lemmas = app.add_subcommand("lemmas", "lemma property suites on one instance or a sweep scope");
  add_instance_options(lemmas, lemma_args, false);
  add_scope_options(lemmas, lemma_scope);

  auto* oracle = app.add_subcommand("oracle-compare", "pairwise versus exhaustive on one instance or a sweep scope");
  add_instance_options(oracle, oracle_args, false);
  add_scope_options(oracle, oracle_scope);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (check->parsed()) return run_check(check_args, check_oracle);
    if (classify_cmd->parsed()) return run_classify(classify_args);
    if (sweep->parsed()) return run_sweep_cmd(sweep_scope, sweep_oracle, sweep_lemmas);
    if (lemmas->parsed()) return run_lemmas(lemma_args, lemma_scope);
    if (oracle->parsed()) return run_oracle_compare(oracle_args, oracle_scope);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ContractError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitInput;
}
