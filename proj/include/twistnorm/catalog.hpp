#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistnorm/errors.hpp"
#include "twistnorm/group.hpp"
#include "twistnorm/subgroups.hpp"

namespace twistnorm {

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// C_n with element i standing for g^i.
inline Group make_cyclic(std::size_t n) {
  if (n < 1 || n > kMaxGroupOrder) throw InputError("cyclic: order must be in 1..64");
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Elem>((i + j) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return Group(n, std::move(t), "C" + std::to_string(n), std::move(gens));
}

/// Dihedral group of order 2n. Element i + n*j is a^i b^j with a the rotation
/// (index 1) and b a reflection (index n); b^-1 a b = a^-1.
inline Group make_dihedral(std::size_t n) {
  if (n < 1 || 2 * n > kMaxGroupOrder) throw InputError("dihedral: n must be in 1..32");
  const std::size_t order = 2 * n;
  std::vector<Elem> t(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n, j = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k = y % n, l = y / n;
      const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      t[x * order + y] = static_cast<Elem>(rot + n * ((j + l) % 2));
    }
  }
  return Group(order, std::move(t), "D" + std::to_string(n),
               {static_cast<Elem>(n > 1 ? 1 : 0), static_cast<Elem>(n)});
}

/// Generalized quaternion group of order m (8 or 16): a^(m/2) = 1, b^2 = a^(m/4),
/// b^-1 a b = a^-1. Element i + (m/2)*j is a^i b^j; a = 1, b = m/2.
inline Group make_quaternion(std::size_t m) {
  if (m != 8 && m != 16) throw InputError("quaternion: order must be 8 or 16");
  const std::size_t n = m / 2;  // order of a
  const std::size_t half = n / 2;
  std::vector<Elem> t(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t i = x % n, j = x / n;
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t k = y % n, l = y / n;
      std::size_t rot = 0, b = 0;
      if (j == 0) {
        rot = (i + k) % n;
        b = l;
      } else if (l == 0) {
        rot = (i + n - k) % n;
        b = 1;
      } else {
        rot = (i + n - k + half) % n;  // b a^k b = a^-k b^2
        b = 0;
      }
      t[x * m + y] = static_cast<Elem>(rot + n * b);
    }
  }
  return Group(m, std::move(t), "Q" + std::to_string(m), {1, static_cast<Elem>(n)});
}

/// (Z/p)^k with base-p digit encoding.
inline Group make_elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p) || k < 1) throw InputError("elementary abelian: need p prime and k >= 1");
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxGroupOrder) throw InputError("elementary abelian: order exceeds 64");
  }
  std::vector<Elem> t(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t a = x, b = y, place = 1, sum = 0;
      for (std::size_t i = 0; i < k; ++i) {
        sum += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      t[x * order + y] = static_cast<Elem>(sum);
    }
  std::vector<Elem> gens;
  for (std::size_t i = 0, place = 1; i < k; ++i, place *= p) gens.push_back(static_cast<Elem>(place));
  return Group(order, std::move(t),
               k == 1 ? "C" + std::to_string(p) : "C" + std::to_string(p) + "^" + std::to_string(k),
               std::move(gens));
}

/// A x B with (a, b) stored at a + |A|*b.
inline Group direct_product(const Group& A, const Group& B) {
  const std::size_t na = A.order(), nb = B.order(), n = na * nb;
  if (n > kMaxGroupOrder) throw CapabilityError("direct product order exceeds 64");
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem a = A.mul(static_cast<Elem>(x % na), static_cast<Elem>(y % na));
      const Elem b = B.mul(static_cast<Elem>(x / na), static_cast<Elem>(y / na));
      t[x * n + y] = static_cast<Elem>(a + na * b);
    }
  std::vector<Elem> gens;
  for (Elem g : A.generators()) gens.push_back(g);
  for (Elem g : B.generators()) gens.push_back(static_cast<Elem>(na * g));
  return Group(n, std::move(t), A.name() + "x" + B.name(), std::move(gens));
}

/// Coset group G/N. `projection[g]` is the coset index of g; cosets are numbered
/// by their smallest member, so the identity coset is 0.
struct QuotientGroup {
  Group group;
  std::vector<Elem> projection;
};

inline QuotientGroup quotient(const Group& G, const ElementSubset& N, std::string name = {}) {
  if (!is_subgroup(N)) throw InputError("quotient: N is not a subgroup");
  if (!is_normal(G, N)) throw InputError("quotient: N is not normal");
  const std::size_t n = G.order();
  std::vector<Elem> projection(n, 0);
  std::vector<Elem> reps;
  std::vector<bool> assigned(n, false);
  const auto members = N.members();
  for (Elem g = 0; g < n; ++g) {
    if (assigned[g]) continue;
    const auto idx = static_cast<Elem>(reps.size());
    reps.push_back(g);
    for (Elem k : members) {
      projection[G.mul(g, k)] = idx;
      assigned[G.mul(g, k)] = true;
    }
  }
  const std::size_t m = reps.size();
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = projection[G.mul(reps[i], reps[j])];
  std::vector<Elem> gens;
  for (Elem g : G.generators()) gens.push_back(projection[g]);
  if (name.empty()) name = G.name() + "/N";
  return {Group(m, std::move(t), std::move(name), std::move(gens)), std::move(projection)};
}

/// Central product (A x B)/{(z, theta(z)^-1)}. `theta` lists pairs (z, theta(z))
/// for every z in ZA; it must be an isomorphism onto ZB, and both subsets must be
/// central subgroups of their groups.
inline Group central_product(const Group& A, const Group& B, const ElementSubset& ZA,
                             const ElementSubset& ZB, const std::vector<std::pair<Elem, Elem>>& theta,
                             std::string name = {}) {
  const auto zA = center(A), zB = center(B);
  if (!is_subgroup(ZA) || !ZA.is_subset_of(zA)) throw InputError("central product: ZA is not a central subgroup of A");
  if (!is_subgroup(ZB) || !ZB.is_subset_of(zB)) throw InputError("central product: ZB is not a central subgroup of B");
  if (ZA.size() != ZB.size() || theta.size() != ZA.size()) {
    throw InputError("central product: theta must be a bijection ZA -> ZB");
  }
  std::map<Elem, Elem> map;
  std::uint64_t image = 0;
  for (auto [z, w] : theta) {
    if (!ZA.contains(z) || !ZB.contains(w)) throw InputError("central product: theta leaves ZA or ZB");
    if (!map.emplace(z, w).second) throw InputError("central product: theta maps an element twice");
    image |= bit_of(w);
  }
  if (image != ZB.bits()) throw InputError("central product: theta is not onto ZB");
  for (auto [z1, w1] : map)
    for (auto [z2, w2] : map)
      if (map.at(A.mul(z1, z2)) != B.mul(w1, w2)) throw InputError("central product: theta is not a homomorphism");

  const Group AB = direct_product(A, B);
  const std::size_t na = A.order();
  std::vector<Elem> kernel;
  for (auto [z, w] : map) kernel.push_back(static_cast<Elem>(z + na * B.inv(w)));
  auto q = quotient(AB, ElementSubset::of(AB, kernel),
                    name.empty() ? A.name() + "Y" + B.name() : std::move(name));
  return std::move(q.group);
}

/// Central product identifying the unique central involutions of A and B
/// (the pattern used by D4 Y C4, D4 Y D4 and Q8 Y Q8).
inline Group central_product_over_involution(const Group& A, Elem za, const Group& B, Elem zb,
                                             std::string name) {
  return central_product(A, B, ElementSubset::of(A, {0, za}), ElementSubset::of(B, {0, zb}),
                         {{0, 0}, {za, zb}}, std::move(name));
}

inline Group make_d4_y_c4() {
  return central_product_over_involution(make_dihedral(4), 2, make_cyclic(4), 2, "D4YC4");
}

/// Extraspecial 2^(1+4) built as D4 Y D4. Recorded generators: a1, b1, a2, b2.
inline Group make_d4_y_d4() {
  const Group d4 = make_dihedral(4);
  return central_product_over_involution(d4, 2, d4, 2, "D4YD4");
}

/// Same abstract group as D4 Y D4, built from two copies of Q8.
inline Group make_q8_y_q8() {
  const Group q8 = make_quaternion(8);
  return central_product_over_involution(q8, 2, q8, 2, "Q8YQ8");
}

}  // namespace twistnorm
