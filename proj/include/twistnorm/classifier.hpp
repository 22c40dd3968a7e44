#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistnorm/catalog.hpp"
#include "twistnorm/errors.hpp"
#include "twistnorm/group.hpp"
#include "twistnorm/morphisms.hpp"
#include "twistnorm/ring.hpp"
#include "twistnorm/subgroups.hpp"

namespace twistnorm {

/// Structural verdicts. Everything except kNotNormal asserts that KG is sigma-normal.
enum class TheoremCase { kCommutative, kCaseI, kCaseIIa, kCaseIIb, kCaseIIIa, kCaseIIIb, kNotNormal };

inline const char* to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::kCommutative: return "commutative";
    case TheoremCase::kCaseI: return "case_i";
    case TheoremCase::kCaseIIa: return "case_ii_a";
    case TheoremCase::kCaseIIb: return "case_ii_b";
    case TheoremCase::kCaseIIIa: return "case_iii_a";
    case TheoremCase::kCaseIIIb: return "case_iii_b";
    case TheoremCase::kNotNormal: return "not_normal";
  }
  return "not_normal";
}

/// Fixed set R = {g : sigma(g) = g}, its complement W and the subgroup <W>.
struct FixedMovedSets {
  ElementSubset fixed;
  ElementSubset moved;
  ElementSubset moved_span;
};

inline FixedMovedSets fixed_and_moved_sets(const AntiAutomorphism& sigma) {
  const Group& G = sigma.group();
  std::uint64_t fixed = 0;
  for (Elem g = 0; g < G.order(); ++g)
    if (sigma(g) == g) fixed |= bit_of(g);
  const ElementSubset R(G, fixed);
  const ElementSubset W = ElementSubset::whole(G).minus(R);
  return {R, W, generated_subgroup(G, W.bits())};
}

/// The four relation bundles a non-commuting pair (a, b) must satisfy in a
/// sigma-normal group ring. Ordered: (a, b) and (b, a) can land in different cases.
enum class Lemma2Case { kI, kII, kIII, kIV, kViolation };

inline const char* to_string(Lemma2Case c) {
  switch (c) {
    case Lemma2Case::kI: return "i";
    case Lemma2Case::kII: return "ii";
    case Lemma2Case::kIII: return "iii";
    case Lemma2Case::kIV: return "iv";
    case Lemma2Case::kViolation: return "violation";
  }
  return "violation";
}

inline Lemma2Case lemma2_case(const InvolutionSpec& spec, Elem a, Elem b) {
  spec.require_validated();
  const Group& G = spec.group();
  const CoefficientRing& K = spec.ring();
  G.check_index(a);
  G.check_index(b);
  if (G.commute(a, b)) throw InputError("lemma2_case: a and b commute");
  const auto& sigma = spec.sigma();
  const auto& f = spec.f();
  const Scalar one = K.one(), minus_one = K.minus_one();
  const Elem e = G.identity();
  const Elem c = G.commutator(a, b);
  const Elem c_inv_sq = G.power(c, -2);
  const Elem ab = G.mul(a, b), ba = G.mul(b, a);
  const bool squares_agree = G.mul(ab, ab) == G.mul(ba, ba);

  if (f(a) == one && f(b) == minus_one && sigma(a) == G.mul(c, a) && sigma(b) == b &&
      G.commutator(G.mul(b, b), a) == e && squares_agree && G.commutator(c, a) == e &&
      G.commutator(c, b) == c_inv_sq) {
    return Lemma2Case::kI;
  }
  // mirror of case i with the roles of a and b exchanged: sigma(b) = a^-1 b a = (b,a) b
  if (f(a) == minus_one && f(b) == one && sigma(a) == a && sigma(b) == G.mul(G.commutator(b, a), b) &&
      G.commutator(b, G.mul(a, a)) == e && squares_agree && G.commutator(c, b) == e &&
      G.commutator(c, a) == c_inv_sq) {
    return Lemma2Case::kII;
  }
  if (f(a) == minus_one && f(b) == minus_one && sigma(a) == a && sigma(b) == b &&
      G.commutator(G.mul(a, a), b) == e && G.commutator(a, G.mul(b, b)) == e && squares_agree &&
      G.commutator(c, ab) == e) {
    return Lemma2Case::kIII;
  }
  if (f(a) == one && f(b) == one && sigma(a) == G.mul(c, a) && sigma(b) == G.mul(c, b)) {
    const auto H = generated_subgroup(G, std::vector<Elem>{a, b});
    const auto series = lower_central_series(H);
    if (series.size() == 3 && series[2].size() == 1 && series[1].size() == 2) return Lemma2Case::kIV;
  }
  return Lemma2Case::kViolation;
}

/// A two-generated subgroup <a,b> with derived subgroup {1, c} of order 2,
/// nilpotent of class 2, and sigma(a) = a c, sigma(b) = b c.
///
/// The flags record the additional structure sigma-groups carry inside a
/// sigma-normal group ring: Frattini subgroup = center = fixed points, and
/// sigma acting as g -> g off the center and g -> g c on it.
struct SigmaGroupWitness {
  Elem a = 0;
  Elem b = 0;
  Elem commutator_c = 0;
  ElementSubset subgroup;
  ElementSubset center;
  ElementSubset frattini;
  ElementSubset fixed;
  bool frattini_equals_center = false;
  bool center_equals_fixed = false;
  bool sigma_action_matches = false;

  bool lemma4_equalities() const { return frattini_equals_center && center_equals_fixed && sigma_action_matches; }
};

inline std::optional<SigmaGroupWitness> detect_sigma_group(const AntiAutomorphism& sigma, Elem a, Elem b) {
  const Group& G = sigma.group();
  G.check_index(a);
  G.check_index(b);
  if (G.commute(a, b)) return std::nullopt;
  const Elem c = G.commutator(a, b);
  if (sigma(a) != G.mul(a, c) || sigma(b) != G.mul(b, c)) return std::nullopt;
  const auto H = generated_subgroup(G, std::vector<Elem>{a, b});
  const auto series = lower_central_series(H);
  if (series.size() != 3 || series[2].size() != 1) return std::nullopt;
  if (!(series[1] == ElementSubset::of(G, {G.identity(), c}))) return std::nullopt;

  SigmaGroupWitness w;
  w.a = a;
  w.b = b;
  w.commutator_c = c;
  w.subgroup = H;
  w.center = centralizer(G, H).intersect(H);
  w.frattini = frattini_subgroup(H);
  std::uint64_t fixed = 0;
  for (Elem g : H.members())
    if (sigma(g) == g) fixed |= bit_of(g);
  w.fixed = ElementSubset(G, fixed);
  w.frattini_equals_center = w.frattini == w.center;
  w.center_equals_fixed = w.center == w.fixed;
  w.sigma_action_matches = true;
  for (Elem g : H.members()) {
    const Elem expected = w.center.contains(g) ? g : G.mul(g, c);
    if (sigma(g) != expected) w.sigma_action_matches = false;
  }
  return w;
}

/// Verdict plus the witnesses needed to re-check it.
struct ClassificationCertificate {
  TheoremCase tag = TheoremCase::kNotNormal;
  std::string detail;  ///< which condition decided the verdict
  ElementSubset fixed_set;
  ElementSubset moved_set;
  ElementSubset moved_span;

  // case_i
  std::optional<ElementSubset> abelian_subgroup;
  std::optional<Elem> b;

  // case_ii / case_iii
  std::vector<SigmaGroupWitness> sigma_groups;
  std::optional<ElementSubset> centralizer;  ///< the abelian central factor
  std::optional<Elem> commutator_c;
  std::optional<Elem> d;
  std::size_t quotient_rank = 0;  ///< rank of the elementary abelian quotient checked

  bool normal() const { return tag != TheoremCase::kNotNormal; }
};

namespace detail {

/// R0 = fixed points of sigma inside the center. sigma restricts to an
/// automorphism of the center, so this is always a (central) subgroup, and it
/// is the subgroup the elementary-abelian quotient checks are taken modulo.
inline ElementSubset central_fixed_subgroup(const ElementSubset& fixed, const ElementSubset& zeta) {
  return fixed.intersect(zeta);
}

/// Rank of G/N when that quotient is elementary abelian of exponent 2, else nullopt.
inline std::optional<std::size_t> elementary_quotient_rank(const Group& G, const ElementSubset& N) {
  const auto q = quotient(G, N);
  const auto [ok, rank] = is_elementary_abelian_2(q.group);
  if (!ok) return std::nullopt;
  return rank;
}

inline bool spans_modulo(const Group& G, const ElementSubset& N, const std::vector<Elem>& extra) {
  std::uint64_t seed = N.bits();
  for (Elem g : extra) seed |= bit_of(g);
  return generated_subgroup(G, seed).size() == G.order();
}

inline std::optional<std::pair<Elem, Elem>> first_noncommuting_pair(const Group& G, const ElementSubset& S) {
  const auto m = S.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!G.commute(m[i], m[j])) return std::make_pair(m[i], m[j]);
  return std::nullopt;
}

inline ElementSubset span_of_pairs(const Group& G, const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::uint64_t seed = 0;
  for (auto [x, y] : pairs) seed |= bit_of(x) | bit_of(y);
  return generated_subgroup(G, seed);
}

}  // namespace detail

/// Structural decision procedure.
///
///  0. abelian G: commutative.
///  1. <W> abelian: look for an abelian index-2 subgroup H and b outside it with
///     f(b) = -1, f|H = 1, sigma(b) = b and sigma(h) = b^-1 h b = b h b^-1 (case_i).
///  2. otherwise take the first non-commuting a < b in W; <a,b> must be a
///     sigma-group, G = <a,b> C with C = C_G(<a,b>), and G' = {1, c} central.
///  3. C abelian: case_ii_a or case_ii_b.
///  4. C non-abelian: char K = 2, f trivial, then greedy extraction of
///     commuting sigma-groups until the residual centralizer is abelian
///     (case_iii_a or case_iii_b, n >= 2).
///
/// In every branch f must take values in {1, -1}. Quotients "G/R" are taken
/// modulo R0 = R intersect Z(G): the fixed set R itself is not a subgroup once
/// a non-central fixed element exists (for example a1*a2 in D4 Y D4).
inline ClassificationCertificate classify(const InvolutionSpec& spec) {
  spec.require_validated();
  const Group& G = spec.group();
  const CoefficientRing& K = spec.ring();
  const auto& sigma = spec.sigma();
  const auto& f = spec.f();
  if (G.order() > kMaxLatticeOrder) {
    throw CapabilityError("classify is limited to groups of order " + std::to_string(kMaxLatticeOrder));
  }
  ClassificationCertificate cert;
  const auto sets = fixed_and_moved_sets(sigma);
  cert.fixed_set = sets.fixed;
  cert.moved_set = sets.moved;
  cert.moved_span = sets.moved_span;

  auto reject = [&](std::string why) {
    cert.tag = TheoremCase::kNotNormal;
    cert.detail = std::move(why);
    return cert;
  };

  if (G.is_abelian()) {
    cert.tag = TheoremCase::kCommutative;
    cert.detail = "G is abelian";
    return cert;
  }
  if (!f.lands_in_plus_minus_one()) return reject("f takes a value outside {1,-1}");

  const Scalar one = K.one(), minus_one = K.minus_one();
  const Elem e = G.identity();
  const auto whole = ElementSubset::whole(G);
  const auto zeta = center(G);

  // Step 1
  if (is_abelian(sets.moved_span)) {
    for (const auto& H : index_two_subgroups(G)) {
      if (!is_abelian(H)) continue;
      bool f_trivial_on_h = true;
      for (Elem h : H.members()) f_trivial_on_h = f_trivial_on_h && f(h) == one;
      if (!f_trivial_on_h) continue;
      for (Elem b : whole.minus(H).members()) {
        if (f(b) != minus_one || sigma(b) != b) continue;
        bool ok = true;
        for (Elem h : H.members()) {
          const Elem conj = G.conjugate(h, b);                 // b^-1 h b
          const Elem conj_inv = G.mul(G.mul(b, h), G.inv(b));  // b h b^-1
          if (sigma(h) != conj || sigma(h) != conj_inv) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        cert.tag = TheoremCase::kCaseI;
        cert.detail = "abelian index-2 subgroup H with b outside it";
        cert.abelian_subgroup = H;
        cert.b = b;
        return cert;
      }
    }
    return reject("<W> is abelian but no abelian index-2 subgroup satisfies the case (i) relations");
  }

  // Step 2
  const auto first = detail::first_noncommuting_pair(G, sets.moved);
  if (!first) return reject("<W> is non-abelian but W has no non-commuting pair");
  const auto [a, b] = *first;
  auto sg = detect_sigma_group(sigma, a, b);
  if (!sg) return reject("first non-commuting pair in W does not generate a sigma-group");
  const Elem c = sg->commutator_c;
  cert.commutator_c = c;
  const auto H = sg->subgroup;
  const auto C = centralizer(G, H);
  const auto derived = derived_subgroup(G);
  if (!(derived == ElementSubset::of(G, {e, c}))) return reject("G' is not {1, c}");
  if (!zeta.contains(c)) return reject("c is not central");
  if (!(product_set(H, C) == whole)) return reject("G != <a,b> C_G(<a,b>)");
  const auto R0 = detail::central_fixed_subgroup(sets.fixed, zeta);

  // Step 3
  if (is_abelian(C)) {
    cert.sigma_groups.push_back(*sg);
    cert.centralizer = C;
    if (!H.is_subset_of(f.kernel())) return reject("<a,b> is not contained in Ker f");
    bool sigma_fixes_c = true;
    for (Elem x : C.members()) sigma_fixes_c = sigma_fixes_c && sigma(x) == x;
    if (sigma_fixes_c && C.is_subset_of(f.kernel()) && sets.fixed == zeta) {
      const auto rank = detail::elementary_quotient_rank(G, zeta);
      if (rank && *rank == 2 && detail::spans_modulo(G, zeta, {a, b})) {
        cert.tag = TheoremCase::kCaseIIa;
        cert.quotient_rank = 2;
        cert.detail = "G = <a,b> Y C with sigma trivial on C";
        return cert;
      }
    }
    if (R0.size() * 2 == zeta.size()) {
      const auto rank = detail::elementary_quotient_rank(G, R0);
      if (rank && *rank == 3) {
        for (Elem d : C.members()) {
          if (sigma(d) != G.mul(d, c) || f(d) != minus_one) continue;
          if (!detail::spans_modulo(G, R0, {a, b, d})) continue;
          cert.tag = TheoremCase::kCaseIIb;
          cert.quotient_rank = 3;
          cert.d = d;
          cert.detail = "G = <a,b> Y C with d in C, sigma(d) = d c, f(d) = -1";
          return cert;
        }
      }
    }
    return reject("C_G(<a,b>) is abelian but neither case (ii) alternative holds");
  }

  // Step 4
  if (!K.is_minus_one_equal_one()) return reject("C_G(<a,b>) is non-abelian and char K != 2");
  if (!f.is_trivial()) return reject("C_G(<a,b>) is non-abelian and f is not trivial");

  std::vector<std::pair<Elem, Elem>> pairs{{a, b}};
  ElementSubset residual = C;
  bool stalled = true;
  for (std::size_t iteration = 0; iteration < 8; ++iteration) {
    residual = centralizer(G, detail::span_of_pairs(G, pairs));
    if (is_abelian(residual)) {
      stalled = false;
      break;
    }
    const auto in_w = residual.intersect(sets.moved);
    if (auto p = detail::first_noncommuting_pair(G, in_w)) {
      pairs.push_back(*p);
      continue;
    }
    // No usable pair inside W: rebuild with the exchange
    //   <a1,a2> Y <u,t>  ->  <a1 u, a2> Y <u, a2 t>   (u in W, t fixed)
    const auto p = detail::first_noncommuting_pair(G, residual);
    Elem u = p->first, t = p->second;
    if (!sets.moved.contains(u)) std::swap(u, t);
    if (!sets.moved.contains(u)) u = G.mul(p->first, p->second);
    if (!sets.moved.contains(u)) break;
    const auto [a1, a2] = pairs.front();
    pairs.front() = {G.mul(a1, u), a2};
    pairs.emplace_back(u, G.mul(a2, t));
  }
  if (stalled) return reject("sigma-group extraction stalled with a non-abelian residual centralizer");

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto w = detect_sigma_group(sigma, pairs[i].first, pairs[i].second);
    if (!w || w->commutator_c != c) {
      cert.sigma_groups.clear();
      return reject("extracted pair (" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) +
                    ") is not a sigma-group with commutator c");
    }
    cert.sigma_groups.push_back(*w);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      for (Elem x : {pairs[i].first, pairs[i].second})
        for (Elem y : {pairs[j].first, pairs[j].second})
          if (!G.commute(x, y)) return reject("extracted sigma-groups do not commute elementwise");
  const std::size_t n = pairs.size();
  if (n < 2) return reject("fewer than two sigma-groups extracted");
  const auto S = detail::span_of_pairs(G, pairs);
  if (!(product_set(S, residual) == whole)) return reject("G != S C_G(S)");
  cert.centralizer = residual;
  const auto exp_rank = detail::elementary_quotient_rank(G, R0);
  if (!exp_rank) return reject("G/R does not have exponent 2");

  std::vector<Elem> generators;
  for (auto [x, y] : pairs) {
    generators.push_back(x);
    generators.push_back(y);
  }
  bool sigma_fixes_c = true;
  for (Elem x : residual.members()) sigma_fixes_c = sigma_fixes_c && sigma(x) == x;
  if (sigma_fixes_c && R0 == zeta && *exp_rank == 2 * n && detail::spans_modulo(G, zeta, generators)) {
    cert.tag = TheoremCase::kCaseIIIa;
    cert.quotient_rank = 2 * n;
    cert.detail = "central product of " + std::to_string(n) + " sigma-groups, sigma trivial on C";
    return cert;
  }
  if (R0.size() * 2 == zeta.size() && *exp_rank == 2 * n + 1) {
    for (Elem d : residual.members()) {
      if (sigma(d) != G.mul(d, c)) continue;
      auto gens_d = generators;
      gens_d.push_back(d);
      if (!detail::spans_modulo(G, R0, gens_d)) continue;
      cert.tag = TheoremCase::kCaseIIIb;
      cert.quotient_rank = 2 * n + 1;
      cert.d = d;
      cert.detail = "central product of " + std::to_string(n) + " sigma-groups with d, sigma(d) = d c";
      return cert;
    }
  }
  return reject("sigma-groups extracted but neither case (iii) alternative holds");
}

}  // namespace twistnorm
