#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "twistnorm/classifier.hpp"
#include "twistnorm/group_ring.hpp"
#include "twistnorm/instances.hpp"
#include "twistnorm/lemmas.hpp"
#include "twistnorm/morphisms.hpp"
#include "twistnorm/normality.hpp"
#include "twistnorm/ring.hpp"

namespace twistnorm {

struct SweepOptions {
  std::size_t max_order = 8;
  std::vector<std::string> rings{"Z2", "Z3"};
  std::vector<std::string> groups;  ///< explicit labels; empty = catalog up to max_order
  bool oracle = false;              ///< also run check_exhaustive where |K|^|G| <= 2^16
  bool lemmas = false;              ///< run the lemma suites on sigma-normal instances
  bool keep_all = true;             ///< keep every record, not only the interesting ones
  std::size_t workers = 0;          ///< 0 = TWISTNORM_WORKERS or hardware concurrency
};

struct InstanceRecord {
  std::string group;
  std::string ring;
  std::size_t group_order = 0;
  bool abelian = false;
  std::size_t sigma_index = 0;
  std::size_t f_index = 0;
  std::vector<Elem> sigma;
  std::vector<Scalar> f;
  NormalityVerdict pairwise;
  ClassificationCertificate certificate;
  std::optional<bool> oracle_normal;
  bool agreement = true;         ///< pairwise normal <=> certificate normal
  bool oracle_agreement = true;  ///< pairwise = exhaustive (true when the oracle did not run)
  bool f_range_ok = true;        ///< normal and non-abelian => f(G) in {1,-1}
  std::vector<LemmaResult> lemmas;
  double seconds = 0.0;

  bool lemmas_ok() const {
    return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& r) { return r.passed; });
  }
  bool failed() const { return !agreement || !oracle_agreement || !f_range_ok || !lemmas_ok(); }
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t normal = 0;
  std::size_t disagreements = 0;
  std::size_t oracle_runs = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t f_range_exceptions = 0;
  std::size_t lemma_instances = 0;
  std::size_t lemma_failures = 0;
  std::map<std::string, std::size_t> per_case;
  std::map<std::string, std::size_t> lemma_failures_by_suite;
};

struct SweepReport {
  SweepOptions options;
  std::vector<InstanceRecord> records;  ///< sorted by (group, ring, sigma index, f index)
  SweepSummary summary;
  double seconds = 0.0;
  std::shared_ptr<const std::deque<Group>> groups;  ///< keeps the certificates' parent groups alive
};

/// Worker count: explicit request, else TWISTNORM_WORKERS, else hardware concurrency.
inline std::size_t resolve_workers(std::size_t requested) {
  std::size_t n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("TWISTNORM_WORKERS")) {
      try {
        n = static_cast<std::size_t>(std::stoul(env));
      } catch (const std::exception&) {
        n = 0;
      }
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Runs `task(i)` for i in [0, count) on a pool of `workers` threads.
template <typename Task>
void parallel_for(std::size_t count, std::size_t workers, Task&& task) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Group and ring data shared by the instances of one (group, ring) cell.
struct SweepCell {
  const Group* group = nullptr;
  const CoefficientRing* ring = nullptr;
  const std::vector<AntiAutomorphism>* sigmas = nullptr;
  std::vector<UnitHomomorphism> homs;
  std::unique_ptr<UnitGroup> units;
};

/// Evaluates one validated instance: pairwise check, classifier, optional oracle and lemma suites.
inline InstanceRecord evaluate_instance(const InvolutionSpec& spec, bool oracle, bool lemmas,
                                        const UnitGroup* units = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  const Group& G = spec.group();
  InstanceRecord r;
  r.group = G.name();
  r.ring = spec.ring().label();
  r.group_order = G.order();
  r.abelian = G.is_abelian();
  r.sigma = spec.sigma().map();
  r.f = spec.f().values();
  r.pairwise = check_pairwise(spec);
  r.certificate = classify(spec);
  r.agreement = r.pairwise.normal == r.certificate.normal();
  if (oracle && group_ring_size(G, spec.ring(), kMaxEnumeratedGroupRing) != 0) {
    r.oracle_normal = check_exhaustive(spec).normal;
    r.oracle_agreement = *r.oracle_normal == r.pairwise.normal;
  }
  if (r.pairwise.normal && !r.abelian) r.f_range_ok = spec.f().lands_in_plus_minus_one();
  if (lemmas && r.pairwise.normal) r.lemmas = run_lemma_suites(spec, r.certificate, units);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline SweepSummary summarize(const std::vector<InstanceRecord>& records) {
  SweepSummary s;
  for (const auto& r : records) {
    ++s.instances;
    if (r.pairwise.normal) ++s.normal;
    if (!r.agreement) ++s.disagreements;
    if (r.oracle_normal) ++s.oracle_runs;
    if (!r.oracle_agreement) ++s.oracle_mismatches;
    if (!r.f_range_ok) ++s.f_range_exceptions;
    ++s.per_case[to_string(r.certificate.tag)];
    if (!r.lemmas.empty()) {
      ++s.lemma_instances;
      if (!r.lemmas_ok()) ++s.lemma_failures;
      for (const auto& l : r.lemmas)
        if (!l.passed) ++s.lemma_failures_by_suite[l.name];
    }
  }
  return s;
}

/// Every catalog group (or the listed groups) x every ring x every order-2
/// anti-automorphism x every unit homomorphism passing the involution check.
/// Summary counts cover all instances even when `keep_all` is off.
inline SweepReport run_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.max_order > kMaxEnumerationOrder) {
    throw InputError("sweep max order is limited to " + std::to_string(kMaxEnumerationOrder));
  }
  SweepReport report;
  report.options = options;
  auto labels = options.groups.empty() ? catalog_labels(options.max_order) : options.groups;
  std::sort(labels.begin(), labels.end());
  auto ring_labels_sorted = options.rings;
  std::sort(ring_labels_sorted.begin(), ring_labels_sorted.end());

  auto group_storage = std::make_shared<std::deque<Group>>();
  auto& groups = *group_storage;
  report.groups = group_storage;
  std::deque<CoefficientRing> rings;
  std::deque<std::vector<AntiAutomorphism>> sigma_lists;
  for (const auto& label : ring_labels_sorted) rings.push_back(make_ring(label));
  for (const auto& label : labels) {
    groups.push_back(parse_group_label(label));
    if (groups.back().order() > kMaxEnumerationOrder) throw InputError("group '" + label + "' is too large to sweep");
    sigma_lists.push_back(enumerate_antiautomorphisms_order2(groups.back()));
  }

  struct Job {
    std::size_t cell, sigma, f;
  };
  std::vector<SweepCell> cells;
  std::vector<Job> jobs;
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (std::size_t ri = 0; ri < rings.size(); ++ri) {
      SweepCell cell;
      cell.group = &groups[gi];
      cell.ring = &rings[ri];
      cell.sigmas = &sigma_lists[gi];
      cell.homs = enumerate_unit_homomorphisms(groups[gi], rings[ri]);
      if (options.lemmas && !groups[gi].is_abelian() &&
          group_ring_size(groups[gi], rings[ri], std::size_t{1} << 12) != 0) {
        cell.units = std::make_unique<UnitGroup>(enumerate_units(groups[gi], rings[ri]));
      }
      for (std::size_t si = 0; si < cell.sigmas->size(); ++si)
        for (std::size_t fi = 0; fi < cell.homs.size(); ++fi)
          if (validate_involution_spec((*cell.sigmas)[si], cell.homs[fi]).valid) jobs.push_back({cells.size(), si, fi});
      cells.push_back(std::move(cell));
    }

  std::vector<InstanceRecord> records(jobs.size());
  parallel_for(jobs.size(), resolve_workers(options.workers), [&](std::size_t i) {
    const auto& job = jobs[i];
    const auto& cell = cells[job.cell];
    InvolutionSpec spec((*cell.sigmas)[job.sigma], cell.homs[job.f]);
    spec.validate();
    records[i] = evaluate_instance(spec, options.oracle, options.lemmas, cell.units.get());
    records[i].sigma_index = job.sigma;
    records[i].f_index = job.f;
  });
  report.summary = summarize(records);
  if (options.keep_all) {
    report.records = std::move(records);
  } else {
    for (auto& r : records)
      if (r.failed()) report.records.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace twistnorm
