#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "twistnorm/errors.hpp"
#include "twistnorm/group.hpp"

namespace twistnorm {

/// Subgroup lattices are enumerated exhaustively; beyond this order we refuse.
inline constexpr std::size_t kMaxLatticeOrder = 32;

inline std::uint64_t bit_of(Elem g) { return std::uint64_t{1} << g; }

/// Smallest subgroup containing `seed` (a mask of generators).
inline ElementSubset generated_subgroup(const Group& G, std::uint64_t seed) {
  std::vector<Elem> gens;
  for (std::uint64_t b = seed; b != 0; b &= b - 1) gens.push_back(static_cast<Elem>(std::countr_zero(b)));
  std::uint64_t seen = 1;
  std::vector<Elem> queue{G.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem g : gens) {
      const Elem y = G.mul(queue[i], g);
      if (!(seen & bit_of(y))) {
        seen |= bit_of(y);
        queue.push_back(y);
      }
    }
  }
  return {G, seen};
}

inline ElementSubset generated_subgroup(const Group& G, const std::vector<Elem>& gens) {
  std::uint64_t seed = 0;
  for (Elem g : gens) {
    G.check_index(g);
    seed |= bit_of(g);
  }
  return generated_subgroup(G, seed);
}

inline bool is_subgroup(const ElementSubset& S) {
  const Group& G = S.parent();
  if (!S.contains(G.identity())) return false;
  const auto members = S.members();
  for (Elem a : members) {
    if (!S.contains(G.inv(a))) return false;
    for (Elem b : members)
      if (!S.contains(G.mul(a, b))) return false;
  }
  return true;
}

inline void require_subgroup(const ElementSubset& S, const char* what) {
  if (!is_subgroup(S)) throw InputError(std::string(what) + ": subset is not a subgroup");
}

inline ElementSubset centralizer(const Group& G, const ElementSubset& S) {
  std::uint64_t bits = 0;
  const auto members = S.members();
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem s : members) {
      if (!G.commute(g, s)) {
        ok = false;
        break;
      }
    }
    if (ok) bits |= bit_of(g);
  }
  return {G, bits};
}

inline ElementSubset center(const Group& G) { return centralizer(G, ElementSubset::whole(G)); }

inline bool is_abelian(const ElementSubset& S) {
  const Group& G = S.parent();
  const auto m = S.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!G.commute(m[i], m[j])) return false;
  return true;
}

/// The subgroup generated by all commutators (a,b) with a in A, b in B.
inline ElementSubset commutator_subgroup(const ElementSubset& A, const ElementSubset& B) {
  const Group& G = A.parent();
  std::uint64_t seed = 0;
  for (Elem a : A.members())
    for (Elem b : B.members()) seed |= bit_of(G.commutator(a, b));
  return generated_subgroup(G, seed);
}

inline ElementSubset derived_subgroup(const ElementSubset& S) { return commutator_subgroup(S, S); }

inline ElementSubset derived_subgroup(const Group& G) {
  const auto all = ElementSubset::whole(G);
  return commutator_subgroup(all, all);
}

/// gamma_1 = S, gamma_{i+1} = (gamma_i, S), listed until the series stabilizes.
inline std::vector<ElementSubset> lower_central_series(const ElementSubset& S) {
  std::vector<ElementSubset> series{S};
  while (true) {
    auto next = commutator_subgroup(series.back(), S);
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

inline std::vector<ElementSubset> lower_central_series(const Group& G) {
  return lower_central_series(ElementSubset::whole(G));
}

/// Nilpotency class of S, or nullopt when the series stalls above the trivial group.
inline std::optional<std::size_t> nilpotency_class(const ElementSubset& S) {
  const auto series = lower_central_series(S);
  if (series.back().size() != 1) return std::nullopt;
  return series.size() - 1;
}

inline bool is_normal(const Group& G, const ElementSubset& S) {
  require_subgroup(S, "is_normal");
  const auto members = S.members();
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem s : members)
      if (!S.contains(G.conjugate(s, g))) return false;
  return true;
}

inline std::size_t exponent(const ElementSubset& S) {
  std::size_t e = 1;
  for (Elem g : S.members()) e = std::lcm(e, S.parent().element_order(g));
  return e;
}

inline std::size_t exponent(const Group& G) { return exponent(ElementSubset::whole(G)); }

/// Whether G is abelian of exponent at most 2; rank = log2(order) when it is.
inline std::pair<bool, std::size_t> is_elementary_abelian_2(const Group& G) {
  if (!G.is_abelian() || exponent(G) > 2) return {false, 0};
  return {true, static_cast<std::size_t>(std::countr_zero(G.order()))};
}

/// The product set {a*b : a in A, b in B}.
inline ElementSubset product_set(const ElementSubset& A, const ElementSubset& B) {
  const Group& G = A.parent();
  std::uint64_t bits = 0;
  const auto bm = B.members();
  for (Elem a : A.members())
    for (Elem b : bm) bits |= bit_of(G.mul(a, b));
  return {G, bits};
}

/// A subgroup re-indexed as a group in its own right. `embedding[i]` is the
/// parent index of local element i; the parent identity maps to local 0.
struct InducedGroup {
  Group group;
  std::vector<Elem> embedding;
};

inline InducedGroup induced_group(const ElementSubset& S, std::string name = "subgroup") {
  require_subgroup(S, "induced_group");
  const Group& G = S.parent();
  std::vector<Elem> embedding = S.members();  // identity 0 comes first
  std::vector<Elem> local(G.order(), 0);
  for (std::size_t i = 0; i < embedding.size(); ++i) local[embedding[i]] = static_cast<Elem>(i);
  const std::size_t m = embedding.size();
  std::vector<Elem> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local[G.mul(embedding[i], embedding[j])];
  return {Group(m, std::move(table), std::move(name)), std::move(embedding)};
}

/// A greedy generating set: elements of large order first, skipping anything
/// already generated. Not necessarily minimal but short in practice.
inline std::vector<Elem> greedy_generators(const Group& G) {
  std::vector<Elem> candidates(G.order());
  std::iota(candidates.begin(), candidates.end(), Elem{0});
  std::stable_sort(candidates.begin(), candidates.end(), [&](Elem a, Elem b) {
    return G.element_order(a) > G.element_order(b);
  });
  std::vector<Elem> gens;
  std::uint64_t seed = 0;
  ElementSubset current = ElementSubset::trivial(G);
  for (Elem g : candidates) {
    if (current.size() == G.order()) break;
    if (current.contains(g)) continue;
    gens.push_back(g);
    seed |= bit_of(g);
    current = generated_subgroup(G, seed);
  }
  return gens;
}

/// Every subgroup of a group of order at most 32, with maximality flags.
struct SubgroupLattice {
  const Group* parent = nullptr;
  std::vector<ElementSubset> subgroups;  // sorted by (size, member list)
  std::vector<bool> maximal;

  std::vector<ElementSubset> maximal_subgroups() const {
    std::vector<ElementSubset> out;
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      if (maximal[i]) out.push_back(subgroups[i]);
    return out;
  }
};

/// Breadth-first closure: seed with all cyclic subgroups, then join every
/// known subgroup with every cyclic one until nothing new appears.
inline SubgroupLattice subgroup_lattice(const Group& G) {
  if (G.order() > kMaxLatticeOrder) {
    throw CapabilityError("subgroup lattice enumeration is limited to order " +
                          std::to_string(kMaxLatticeOrder));
  }
  std::vector<std::uint64_t> cyclic;
  std::unordered_set<std::uint64_t> known;
  for (Elem g = 0; g < G.order(); ++g) {
    const auto c = generated_subgroup(G, bit_of(g)).bits();
    if (known.insert(c).second) cyclic.push_back(c);
  }
  std::vector<std::uint64_t> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::uint64_t c : cyclic) {
      if ((c & ~all[i]) == 0) continue;
      const auto joined = generated_subgroup(G, all[i] | c).bits();
      if (known.insert(joined).second) all.push_back(joined);
    }
  }
  std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic order of sorted member lists == reversed bit order comparison
    const std::uint64_t diff = a ^ b;
    const std::uint64_t low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  SubgroupLattice lattice;
  lattice.parent = &G;
  const std::uint64_t whole = ElementSubset::whole(G).bits();
  for (std::uint64_t s : all) lattice.subgroups.emplace_back(G, s);
  lattice.maximal.assign(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == whole) continue;
    bool is_max = true;
    for (std::size_t j = 0; j < all.size() && is_max; ++j) {
      if (all[j] == whole || all[j] == all[i]) continue;
      if ((all[i] & ~all[j]) == 0) is_max = false;
    }
    lattice.maximal[i] = is_max;
  }
  return lattice;
}

/// Intersection of all maximal subgroups (the whole group when there are none).
inline ElementSubset frattini_subgroup(const Group& G) {
  const auto lattice = subgroup_lattice(G);
  std::uint64_t bits = ElementSubset::whole(G).bits();
  for (const auto& m : lattice.maximal_subgroups()) bits &= m.bits();
  return {G, bits};
}

/// Frattini subgroup of a subgroup S, expressed in parent indices.
inline ElementSubset frattini_subgroup(const ElementSubset& S) {
  const auto induced = induced_group(S);
  const auto local = frattini_subgroup(induced.group);
  std::uint64_t bits = 0;
  for (Elem g : local.members()) bits |= bit_of(induced.embedding[g]);
  return {S.parent(), bits};
}

/// All subgroups of index exactly 2, found as kernels of surjections onto C2.
/// Sorted by their member lists.
inline std::vector<ElementSubset> index_two_subgroups(const Group& G) {
  std::vector<ElementSubset> out;
  if (G.order() % 2 != 0) return out;
  const auto gens = greedy_generators(G);
  const std::size_t k = gens.size();
  for (std::uint64_t assignment = 1; assignment < (std::uint64_t{1} << k); ++assignment) {
    // Extend the sign assignment along right multiplication by generators.
    std::vector<int> parity(G.order(), -1);
    parity[0] = 0;
    std::vector<Elem> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Elem y = G.mul(queue[i], gens[j]);
        const int p = parity[queue[i]] ^ static_cast<int>((assignment >> j) & 1U);
        if (parity[y] < 0) {
          parity[y] = p;
          queue.push_back(y);
        } else if (parity[y] != p) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    std::uint64_t kernel = 0;
    for (Elem g = 0; g < G.order(); ++g)
      if (parity[g] == 0) kernel |= bit_of(g);
    out.emplace_back(G, kernel);
  }
  std::sort(out.begin(), out.end(), [](const ElementSubset& a, const ElementSubset& b) {
    return a.members() < b.members();
  });
  return out;
}

}  // namespace twistnorm
