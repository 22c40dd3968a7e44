#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistnorm/errors.hpp"
#include "twistnorm/group.hpp"
#include "twistnorm/morphisms.hpp"
#include "twistnorm/ring.hpp"

namespace twistnorm {

/// x = sum over g of alpha_g g, stored densely in group-index order.
class GroupRingElement {
 public:
  GroupRingElement(const Group& G, const CoefficientRing& K)
      : group_(&G), ring_(&K), coeffs_(G.order(), K.zero()) {}

  GroupRingElement(const Group& G, const CoefficientRing& K, std::vector<Scalar> coeffs)
      : group_(&G), ring_(&K), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != G.order()) throw InputError("group ring element: need one coefficient per group element");
    for (Scalar c : coeffs_) K.check_element(c);
  }

  /// alpha * g
  static GroupRingElement basis(const Group& G, const CoefficientRing& K, Elem g, Scalar alpha = 1) {
    G.check_index(g);
    K.check_element(alpha);
    GroupRingElement x(G, K);
    x.coeffs_[g] = alpha;
    return x;
  }

  static GroupRingElement one(const Group& G, const CoefficientRing& K) { return basis(G, K, G.identity()); }

  const Group& group() const { return *group_; }
  const CoefficientRing& ring() const { return *ring_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  std::vector<Scalar>& mutable_coeffs() { return coeffs_; }
  Scalar operator[](Elem g) const { return coeffs_.at(g); }

  bool is_zero() const {
    for (Scalar c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// Group elements with a nonzero coefficient.
  std::vector<Elem> support() const {
    std::vector<Elem> out;
    for (Elem g = 0; g < coeffs_.size(); ++g)
      if (coeffs_[g] != 0) out.push_back(g);
    return out;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.coeffs_ == b.coeffs_; }

  void require_same_carrier(const GroupRingElement& other) const {
    if (coeffs_.size() != other.coeffs_.size() || ring_->size() != other.ring_->size() ||
        (group_ != other.group_ && !(*group_ == *other.group_)) ||
        (ring_ != other.ring_ && ring_->label() != other.ring_->label())) {
      throw InputError("group ring elements live in different group rings");
    }
  }

 private:
  const Group* group_;
  const CoefficientRing* ring_;
  std::vector<Scalar> coeffs_;
};

inline GroupRingElement add(const GroupRingElement& x, const GroupRingElement& y) {
  x.require_same_carrier(y);
  const auto& K = x.ring();
  GroupRingElement out(x.group(), K);
  auto& c = out.mutable_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = K.add(x.coeffs()[i], y.coeffs()[i]);
  return out;
}

inline GroupRingElement sub(const GroupRingElement& x, const GroupRingElement& y) {
  x.require_same_carrier(y);
  const auto& K = x.ring();
  GroupRingElement out(x.group(), K);
  auto& c = out.mutable_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = K.sub(x.coeffs()[i], y.coeffs()[i]);
  return out;
}

inline GroupRingElement scale(Scalar alpha, const GroupRingElement& x) {
  const auto& K = x.ring();
  K.check_element(alpha);
  GroupRingElement out(x.group(), K);
  auto& c = out.mutable_coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = K.mul(alpha, x.coeffs()[i]);
  return out;
}

/// Convolution: the coefficient of k in x*y is the sum of alpha_g beta_h over gh = k.
inline GroupRingElement mul(const GroupRingElement& x, const GroupRingElement& y) {
  x.require_same_carrier(y);
  const auto& G = x.group();
  const auto& K = x.ring();
  GroupRingElement out(G, K);
  auto& c = out.mutable_coeffs();
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  for (Elem g = 0; g < a.size(); ++g) {
    if (a[g] == 0) continue;
    for (Elem h = 0; h < b.size(); ++h) {
      if (b[h] == 0) continue;
      const Elem k = G.mul(g, h);
      c[k] = K.add(c[k], K.mul(a[g], b[h]));
    }
  }
  return out;
}

/// x^sigma = sum alpha_g f(g) sigma(g).
inline GroupRingElement apply_involution(const InvolutionSpec& spec, const GroupRingElement& x) {
  spec.require_validated();
  const auto& G = spec.group();
  const auto& K = spec.ring();
  if (x.coeffs().size() != G.order()) throw InputError("apply_involution: element and spec have different groups");
  GroupRingElement out(G, K);
  auto& c = out.mutable_coeffs();
  for (Elem g = 0; g < G.order(); ++g) c[spec.sigma()(g)] = K.mul(x.coeffs()[g], spec.f()(g));
  return out;
}

/// x x^sigma - x^sigma x; zero exactly when x satisfies the normality identity.
inline GroupRingElement normality_defect(const InvolutionSpec& spec, const GroupRingElement& x) {
  const auto xs = apply_involution(spec, x);
  return sub(mul(x, xs), mul(xs, x));
}

/// Number of elements of KG, or 0 when it does not fit the bound `limit`.
inline std::size_t group_ring_size(const Group& G, const CoefficientRing& K, std::size_t limit) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < G.order(); ++i) {
    total *= K.size();
    if (total > limit) return 0;
  }
  return total;
}

/// Base-|K| encoding of coefficient vectors: index = sum alpha_g |K|^g.
inline std::size_t encode_element(const GroupRingElement& x) {
  std::size_t idx = 0;
  const std::size_t q = x.ring().size();
  for (std::size_t g = x.coeffs().size(); g-- > 0;) idx = idx * q + x.coeffs()[g];
  return idx;
}

inline GroupRingElement decode_element(const Group& G, const CoefficientRing& K, std::size_t idx) {
  GroupRingElement x(G, K);
  auto& c = x.mutable_coeffs();
  for (std::size_t g = 0; g < G.order(); ++g, idx /= K.size()) c[g] = static_cast<Scalar>(idx % K.size());
  return x;
}

inline constexpr std::size_t kMaxEnumeratedGroupRing = std::size_t{1} << 16;

/// The unit group of KG with an inverse for each unit.
struct UnitGroup {
  std::vector<GroupRingElement> units;
  std::vector<GroupRingElement> inverses;
};

/// Exhaustive unit search for tiny KG. In a finite ring a is a unit exactly when
/// some power of a equals 1, so each element's power sequence is followed until
/// it reaches 1 or revisits an element.
inline UnitGroup enumerate_units(const Group& G, const CoefficientRing& K) {
  const std::size_t total = group_ring_size(G, K, kMaxEnumeratedGroupRing);
  if (total == 0) throw CapabilityError("unit enumeration needs |K|^|G| <= 2^16");
  constexpr int kUnknown = -1, kNonUnit = -2;
  std::vector<int> inverse(total, kUnknown);
  std::vector<std::uint32_t> stamp(total, 0);
  const std::size_t one_idx = encode_element(GroupRingElement::one(G, K));
  inverse[one_idx] = static_cast<int>(one_idx);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (inverse[idx] != kUnknown) continue;
    const auto a = decode_element(G, K, idx);
    std::vector<std::size_t> powers{idx};  // a^1, a^2, ...
    stamp[idx] = static_cast<std::uint32_t>(idx + 1);
    auto p = a;
    bool unit = false;
    while (true) {
      p = mul(p, a);
      const std::size_t pi = encode_element(p);
      if (pi == one_idx) {
        unit = true;
        break;
      }
      if (inverse[pi] == kNonUnit || stamp[pi] == idx + 1) break;
      stamp[pi] = static_cast<std::uint32_t>(idx + 1);
      powers.push_back(pi);
    }
    if (!unit) {
      inverse[idx] = kNonUnit;
      continue;
    }
    // a^k = 1 with k = powers.size() + 1: inverse of a^j is a^(k-j)
    const std::size_t k = powers.size() + 1;
    for (std::size_t j = 1; j < k; ++j) inverse[powers[j - 1]] = static_cast<int>(powers[k - j - 1]);
  }
  UnitGroup out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (inverse[idx] < 0) continue;
    out.units.push_back(decode_element(G, K, idx));
    out.inverses.push_back(decode_element(G, K, static_cast<std::size_t>(inverse[idx])));
  }
  return out;
}

}  // namespace twistnorm
