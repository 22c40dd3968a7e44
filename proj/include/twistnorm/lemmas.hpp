#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistnorm/classifier.hpp"
#include "twistnorm/group_ring.hpp"
#include "twistnorm/morphisms.hpp"
#include "twistnorm/subgroups.hpp"

namespace twistnorm {

/// Outcome of one property suite on one instance. `vacuous` means the suite
/// had nothing to check (for example no non-commuting pair).
struct LemmaResult {
  std::string name;
  bool passed = true;
  bool vacuous = false;
  std::size_t checks = 0;
  std::string failure;  ///< first failing check, empty when passed
};

namespace detail {

inline std::string pair_text(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

inline std::string vector_text(const GroupRingElement& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) s += (i ? "," : "") + std::to_string(x.coeffs()[i]);
  return s + "]";
}

}  // namespace detail

/// Every unit a of KG satisfies a^sigma = t a with t = a^-1 a^sigma commuting
/// with a and t^sigma = t^-1. Skipped (vacuous) when |K|^|G| exceeds `limit`.
inline LemmaResult check_lemma1(const InvolutionSpec& spec, const UnitGroup* units = nullptr,
                                std::size_t limit = std::size_t{1} << 12) {
  spec.require_validated();
  LemmaResult r{"lemma1", true, false, 0, {}};
  const Group& G = spec.group();
  const CoefficientRing& K = spec.ring();
  if (group_ring_size(G, K, limit) == 0) {
    r.vacuous = true;
    return r;
  }
  UnitGroup local;
  if (units == nullptr) {
    local = enumerate_units(G, K);
    units = &local;
  }
  const auto one = GroupRingElement::one(G, K);
  for (std::size_t i = 0; i < units->units.size(); ++i) {
    const auto& a = units->units[i];
    const auto& a_inv = units->inverses[i];
    const auto t = mul(a_inv, apply_involution(spec, a));
    ++r.checks;
    if (!(mul(a, t) == mul(t, a)) || !(mul(apply_involution(spec, t), t) == one)) {
      r.passed = false;
      r.failure = "unit " + detail::vector_text(a);
      return r;
    }
  }
  return r;
}

/// Every non-commuting pair, in both orders, falls into one of the four cases.
inline LemmaResult check_lemma2(const InvolutionSpec& spec) {
  spec.require_validated();
  LemmaResult r{"lemma2", true, false, 0, {}};
  const Group& G = spec.group();
  for (Elem a = 0; a < G.order(); ++a)
    for (Elem b = 0; b < G.order(); ++b) {
      if (a == b || G.commute(a, b)) continue;
      ++r.checks;
      if (lemma2_case(spec, a, b) == Lemma2Case::kViolation) {
        r.passed = false;
        r.failure = "pair " + detail::pair_text(a, b) + " matches no case";
        return r;
      }
    }
  r.vacuous = r.checks == 0;
  return r;
}

/// <W> is normal in G; when <W> is abelian the certificate must be case_i.
inline LemmaResult check_lemma3(const InvolutionSpec& spec, const ClassificationCertificate& cert) {
  spec.require_validated();
  LemmaResult r{"lemma3", true, false, 0, {}};
  const Group& G = spec.group();
  if (G.is_abelian()) {
    r.vacuous = true;
    return r;
  }
  const auto sets = fixed_and_moved_sets(spec.sigma());
  ++r.checks;
  if (!is_normal(G, sets.moved_span)) {
    r.passed = false;
    r.failure = "<W> is not normal";
    return r;
  }
  if (is_abelian(sets.moved_span)) {
    ++r.checks;
    if (cert.tag != TheoremCase::kCaseI) {
      r.passed = false;
      r.failure = std::string("<W> is abelian but the certificate is ") + to_string(cert.tag);
    }
  }
  return r;
}

/// For every non-commuting a < b in W: <a,b> is a sigma-group with
/// Phi = Z = fixed points and the matching sigma action, G = <a,b> C with
/// C = C_G(<a,b>), sigma(x) in {x, x c} on C, C non-abelian only in
/// characteristic 2, and C abelian only for case (ii) certificates.
inline LemmaResult check_lemma4(const InvolutionSpec& spec, const ClassificationCertificate& cert) {
  spec.require_validated();
  LemmaResult r{"lemma4", true, false, 0, {}};
  const Group& G = spec.group();
  const auto& sigma = spec.sigma();
  const auto sets = fixed_and_moved_sets(sigma);
  const auto W = sets.moved.members();
  const auto whole = ElementSubset::whole(G);
  auto fail = [&](Elem a, Elem b, const std::string& what) {
    r.passed = false;
    r.failure = "pair " + detail::pair_text(a, b) + ": " + what;
    return r;
  };
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = i + 1; j < W.size(); ++j) {
      const Elem a = W[i], b = W[j];
      if (G.commute(a, b)) continue;
      ++r.checks;
      const auto w = detect_sigma_group(sigma, a, b);
      if (!w) return fail(a, b, "not a sigma-group");
      if (!w->frattini_equals_center) return fail(a, b, "Frattini subgroup differs from the center");
      if (!w->center_equals_fixed) return fail(a, b, "center differs from the fixed points");
      if (!w->sigma_action_matches) return fail(a, b, "sigma action differs from g / g c");
      const auto C = centralizer(G, w->subgroup);
      if (!(product_set(w->subgroup, C) == whole)) return fail(a, b, "G != <a,b> C_G(<a,b>)");
      for (Elem x : C.members()) {
        if (sigma(x) != x && sigma(x) != G.mul(x, w->commutator_c)) return fail(a, b, "sigma(x) not in {x, x c} on C");
      }
      if (is_abelian(C)) {
        if (cert.tag != TheoremCase::kCaseIIa && cert.tag != TheoremCase::kCaseIIb) {
          return fail(a, b, std::string("C is abelian but the certificate is ") + to_string(cert.tag));
        }
      } else if (!spec.ring().is_minus_one_equal_one()) {
        return fail(a, b, "C is non-abelian in characteristic != 2");
      }
    }
  r.vacuous = r.checks == 0;
  return r;
}

/// All four suites; lemma 1 only when |K|^|G| <= `lemma1_limit`.
inline std::vector<LemmaResult> run_lemma_suites(const InvolutionSpec& spec, const ClassificationCertificate& cert,
                                                 const UnitGroup* units = nullptr,
                                                 std::size_t lemma1_limit = std::size_t{1} << 12) {
  return {check_lemma1(spec, units, lemma1_limit), check_lemma2(spec), check_lemma3(spec, cert),
          check_lemma4(spec, cert)};
}

}  // namespace twistnorm
