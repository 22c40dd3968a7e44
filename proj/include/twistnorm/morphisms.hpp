#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twistnorm/errors.hpp"
#include "twistnorm/group.hpp"
#include "twistnorm/ring.hpp"
#include "twistnorm/subgroups.hpp"

namespace twistnorm {

/// Bound on the group order for the exhaustive morphism enumerations.
inline constexpr std::size_t kMaxEnumerationOrder = 32;

/// A bijection sigma of G with sigma(gh) = sigma(h) sigma(g) and sigma^2 = id.
class AntiAutomorphism {
 public:
  AntiAutomorphism(const Group& G, std::vector<Elem> map) : group_(&G), map_(std::move(map)) {
    const std::size_t n = G.order();
    if (map_.size() != n) throw InputError("anti-automorphism: map must list one image per element");
    std::vector<char> hit(n, 0);
    for (Elem v : map_) {
      if (v >= n) throw InputError("anti-automorphism: image index out of range");
      if (hit[v]++) throw InputError("anti-automorphism: map is not a bijection");
    }
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        if (map_[G.mul(g, h)] != G.mul(map_[h], map_[g])) {
          throw InputError("anti-automorphism: sigma(gh) != sigma(h)sigma(g) at (" + std::to_string(g) +
                           "," + std::to_string(h) + ")");
        }
    for (Elem g = 0; g < n; ++g)
      if (map_[map_[g]] != g) throw InputError("anti-automorphism: sigma has order greater than 2");
  }

  const Group& group() const { return *group_; }
  const std::vector<Elem>& map() const { return map_; }
  Elem operator()(Elem g) const { return map_.at(g); }

  friend bool operator==(const AntiAutomorphism& a, const AntiAutomorphism& b) { return a.map_ == b.map_; }

 private:
  const Group* group_;
  std::vector<Elem> map_;
};

/// A homomorphism from G into the unit group of K.
class UnitHomomorphism {
 public:
  UnitHomomorphism(const Group& G, const CoefficientRing& K, std::vector<Scalar> values)
      : group_(&G), ring_(&K), values_(std::move(values)) {
    if (values_.size() != G.order()) throw InputError("unit homomorphism: need one value per group element");
    for (Scalar v : values_) {
      K.check_element(v);
      if (!K.is_unit(v)) throw InputError("unit homomorphism: value " + std::to_string(v) + " is not a unit of " + K.label());
    }
    if (values_[G.identity()] != K.one()) throw InputError("unit homomorphism: identity must map to one");
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem h = 0; h < G.order(); ++h)
        if (values_[G.mul(g, h)] != K.mul(values_[g], values_[h])) {
          throw InputError("unit homomorphism: f(gh) != f(g)f(h) at (" + std::to_string(g) + "," +
                           std::to_string(h) + ")");
        }
  }

  static UnitHomomorphism trivial(const Group& G, const CoefficientRing& K) {
    return {G, K, std::vector<Scalar>(G.order(), K.one())};
  }

  const Group& group() const { return *group_; }
  const CoefficientRing& ring() const { return *ring_; }
  const std::vector<Scalar>& values() const { return values_; }
  Scalar operator()(Elem g) const { return values_.at(g); }

  bool is_trivial() const {
    return std::all_of(values_.begin(), values_.end(), [&](Scalar v) { return v == ring_->one(); });
  }

  bool lands_in_plus_minus_one() const {
    return std::all_of(values_.begin(), values_.end(), [&](Scalar v) { return ring_->is_plus_minus_one(v); });
  }

  /// Kernel of f as a subset of G.
  ElementSubset kernel() const {
    std::uint64_t bits = 0;
    for (Elem g = 0; g < group_->order(); ++g)
      if (values_[g] == ring_->one()) bits |= bit_of(g);
    return {*group_, bits};
  }

 private:
  const Group* group_;
  const CoefficientRing* ring_;
  std::vector<Scalar> values_;
};

struct CompatibilityReport {
  bool valid = true;
  std::optional<Elem> violation;  ///< first g with f(g sigma(g)) != 1
};

/// x -> x^sigma is an involution of KG exactly when g*sigma(g) lies in Ker f for every g.
inline CompatibilityReport validate_involution_spec(const AntiAutomorphism& sigma, const UnitHomomorphism& f) {
  if (&sigma.group() != &f.group() && !(sigma.group() == f.group())) {
    throw InputError("involution spec: sigma and f are defined on different groups");
  }
  const Group& G = sigma.group();
  for (Elem g = 0; g < G.order(); ++g) {
    if (f(G.mul(g, sigma(g))) != f.ring().one()) return {false, g};
  }
  return {};
}

/// The pair (sigma, f). Operations on KG refuse specs that were never validated.
class InvolutionSpec {
 public:
  InvolutionSpec(AntiAutomorphism sigma, UnitHomomorphism f) : sigma_(std::move(sigma)), f_(std::move(f)) {}

  const AntiAutomorphism& sigma() const { return sigma_; }
  const UnitHomomorphism& f() const { return f_; }
  const Group& group() const { return sigma_.group(); }
  const CoefficientRing& ring() const { return f_.ring(); }
  bool validated() const { return validated_; }

  CompatibilityReport validate() {
    auto report = validate_involution_spec(sigma_, f_);
    validated_ = report.valid;
    return report;
  }

  void require_validated() const {
    if (!validated_) throw ContractError("involution spec used before passing validate_involution_spec");
  }

 private:
  AntiAutomorphism sigma_;
  UnitHomomorphism f_;
  bool validated_ = false;
};

/// Validates and returns the spec, or throws InputError naming the violating element.
inline InvolutionSpec make_involution_spec(AntiAutomorphism sigma, UnitHomomorphism f) {
  InvolutionSpec spec(std::move(sigma), std::move(f));
  const auto report = spec.validate();
  if (!report.valid) {
    throw InputError("involution spec: f(g sigma(g)) != 1 for g = " + std::to_string(*report.violation));
  }
  return spec;
}

/// g -> g^-1.
inline AntiAutomorphism classical_involution(const Group& G) {
  std::vector<Elem> map(G.order());
  for (Elem g = 0; g < G.order(); ++g) map[g] = G.inv(g);
  return {G, std::move(map)};
}

namespace detail {

/// Extends images of generators along x -> x*g_j. With `anti` set the rule is
/// phi(x g) = phi(g) phi(x), otherwise phi(x g) = phi(x) phi(g). Returns nullopt
/// on any inconsistency, or when `injective` is requested and two elements collide.
/// The result is defined exactly on the subgroup generated by `gens`.
inline std::optional<std::vector<int>> extend_on_generators(const Group& G, const std::vector<Elem>& gens,
                                                            const std::vector<Elem>& images, bool anti,
                                                            bool injective) {
  const std::size_t n = G.order();
  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    const auto px = static_cast<Elem>(phi[x]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = G.mul(x, gens[j]);
      const Elem img = anti ? G.mul(images[j], px) : G.mul(px, images[j]);
      if (phi[y] < 0) {
        if (injective && used[img]) return std::nullopt;
        phi[y] = static_cast<int>(img);
        used[img] = 1;
        queue.push_back(y);
      } else if (static_cast<Elem>(phi[y]) != img) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

inline std::vector<Elem> to_map(const std::vector<int>& phi) {
  std::vector<Elem> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = static_cast<Elem>(phi[i]);
  return out;
}

}  // namespace detail

/// Aut(G) by generator-image backtracking: images must preserve element orders,
/// and each partial assignment is extended and checked on the subgroup it generates.
inline std::vector<std::vector<Elem>> enumerate_automorphisms(const Group& G) {
  if (G.order() > kMaxEnumerationOrder) {
    throw CapabilityError("automorphism enumeration is limited to order " + std::to_string(kMaxEnumerationOrder));
  }
  const auto gens = greedy_generators(G);
  std::vector<std::vector<Elem>> out;
  if (gens.empty()) {
    out.push_back({0});
    return out;
  }
  std::vector<Elem> images;
  std::function<void(std::size_t)> search = [&](std::size_t level) {
    if (level == gens.size()) {
      auto phi = detail::extend_on_generators(G, gens, images, false, true);
      if (phi) out.push_back(detail::to_map(*phi));
      return;
    }
    std::vector<Elem> sub(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(level) + 1);
    for (Elem h = 0; h < G.order(); ++h) {
      if (G.element_order(h) != G.element_order(gens[level])) continue;
      images.push_back(h);
      if (detail::extend_on_generators(G, sub, images, false, true)) search(level + 1);
      images.pop_back();
    }
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// All anti-automorphisms of order at most 2, as inversion composed with an
/// automorphism, sorted by their image lists. The identity map appears exactly
/// when G is abelian.
inline std::vector<AntiAutomorphism> enumerate_antiautomorphisms_order2(const Group& G) {
  std::vector<std::vector<Elem>> maps;
  for (const auto& alpha : enumerate_automorphisms(G)) {
    std::vector<Elem> sigma(G.order());
    for (Elem g = 0; g < G.order(); ++g) sigma[g] = G.inv(alpha[g]);
    bool involutive = true;
    for (Elem g = 0; g < G.order() && involutive; ++g) involutive = sigma[sigma[g]] == g;
    if (involutive) maps.push_back(std::move(sigma));
  }
  std::sort(maps.begin(), maps.end());
  std::vector<AntiAutomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(G, std::move(m));
  return out;
}

/// Every homomorphism G -> U(K), trivial one included, sorted by value lists.
inline std::vector<UnitHomomorphism> enumerate_unit_homomorphisms(const Group& G, const CoefficientRing& K) {
  if (G.order() > kMaxEnumerationOrder) {
    throw CapabilityError("homomorphism enumeration is limited to order " + std::to_string(kMaxEnumerationOrder));
  }
  const auto gens = greedy_generators(G);
  const auto& units = K.units();
  std::vector<std::vector<Scalar>> found;
  // images of generators must have multiplicative order dividing the generator order
  std::vector<std::vector<Scalar>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Scalar u : units)
      if (G.element_order(gens[j]) % K.multiplicative_order(u) == 0) candidates[j].push_back(u);

  std::function<void(std::size_t, std::vector<Scalar>&)> search = [&](std::size_t level, std::vector<Scalar>& imgs) {
    if (level == gens.size()) {
      std::vector<Scalar> values(G.order(), K.one());
      std::vector<char> set(G.order(), 0);
      set[0] = 1;
      std::vector<Elem> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const Elem x = queue[i];
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const Elem y = G.mul(x, gens[j]);
          const Scalar v = K.mul(values[x], imgs[j]);
          if (!set[y]) {
            set[y] = 1;
            values[y] = v;
            queue.push_back(y);
          } else if (values[y] != v) {
            return;
          }
        }
      }
      found.push_back(std::move(values));
      return;
    }
    for (Scalar u : candidates[level]) {
      imgs.push_back(u);
      search(level + 1, imgs);
      imgs.pop_back();
    }
  };
  std::vector<Scalar> imgs;
  search(0, imgs);
  std::sort(found.begin(), found.end());
  std::vector<UnitHomomorphism> out;
  out.reserve(found.size());
  for (auto& v : found) out.emplace_back(G, K, std::move(v));
  return out;
}

/// Extends generator images anti-multiplicatively and validates the result.
inline AntiAutomorphism anti_automorphism_from_generators(const Group& G, const std::vector<Elem>& gens,
                                                          const std::vector<Elem>& images) {
  if (gens.size() != images.size()) throw InputError("need one image per generator");
  for (Elem g : gens) G.check_index(g);
  for (Elem g : images) G.check_index(g);
  auto phi = detail::extend_on_generators(G, gens, images, true, true);
  if (!phi) throw InputError("generator images do not extend to an anti-automorphism");
  for (int v : *phi)
    if (v < 0) throw InputError("generators do not generate the group");
  return {G, detail::to_map(*phi)};
}

/// Involution spec text format: a line with the n images of sigma, then a line
/// with the n ring literals f(0..n-1). '#' starts a comment.
struct InvolutionSpecText {
  std::vector<Elem> sigma;
  std::vector<Scalar> f;
};

inline std::vector<long long> parse_integer_line(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<long long> out;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw InputError(std::string(what) + ": negative entry");
    out.push_back(v);
  }
  if (!in.eof()) throw InputError(std::string(what) + ": non-integer token");
  return out;
}

inline InvolutionSpecText parse_involution_spec_text(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.size() != 2) throw InputError("involution spec: expected exactly two lines (sigma, f)");
  InvolutionSpecText out;
  for (long long v : parse_integer_line(lines[0], "involution spec sigma")) out.sigma.push_back(static_cast<Elem>(v));
  for (long long v : parse_integer_line(lines[1], "involution spec f")) out.f.push_back(static_cast<Scalar>(v));
  return out;
}

inline InvolutionSpec parse_involution_spec(std::istream& in, const Group& G, const CoefficientRing& K) {
  auto text = parse_involution_spec_text(in);
  if (text.sigma.size() != G.order() || text.f.size() != G.order()) {
    throw InputError("involution spec: line lengths must equal the group order " + std::to_string(G.order()));
  }
  return make_involution_spec(AntiAutomorphism(G, std::move(text.sigma)), UnitHomomorphism(G, K, std::move(text.f)));
}

inline void write_involution_spec(std::ostream& out, const InvolutionSpec& spec) {
  const auto& s = spec.sigma().map();
  const auto& f = spec.f().values();
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
  out << '\n';
}

}  // namespace twistnorm
