#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistnorm/errors.hpp"

namespace twistnorm {

/// Index of a coefficient-ring element.
///
/// Z/n: the residue itself. F4 = F2[x]/(x^2+x+1) and F8 = F2[x]/(x^3+x+1):
/// the integer whose binary digits are the polynomial coefficients (bit i is
/// the coefficient of x^i), so in F4 the literal 2 is x and 3 is x+1.
/// F9 = F3[i]/(i^2+1): a + 3b stands for a + b*i.
using Scalar = std::uint32_t;

/// A finite commutative ring with unity, stored as full addition and
/// multiplication tables. Zero is index 0 and one is index 1 for every label.
class CoefficientRing {
 public:
  CoefficientRing(std::string label, std::size_t size, std::vector<Scalar> add, std::vector<Scalar> mul)
      : label_(std::move(label)), size_(size), add_(std::move(add)), mul_(std::move(mul)) {
    validate();
  }

  const std::string& label() const { return label_; }
  std::size_t size() const { return size_; }
  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  std::size_t characteristic() const { return characteristic_; }
  const std::vector<Scalar>& units() const { return units_; }

  Scalar add(Scalar a, Scalar b) const { return add_[a * size_ + b]; }
  Scalar mul(Scalar a, Scalar b) const { return mul_[a * size_ + b]; }
  Scalar neg(Scalar a) const { return neg_[a]; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar minus_one() const { return neg(one()); }

  bool is_unit(Scalar a) const { return unit_inverse_[a] != kNoInverse; }

  Scalar unit_inverse(Scalar a) const {
    if (!is_unit(a)) throw InputError("ring element " + std::to_string(a) + " is not a unit in " + label_);
    return unit_inverse_[a];
  }

  /// Smallest k >= 1 with a^k = 1; only meaningful for units.
  std::size_t multiplicative_order(Scalar a) const {
    Scalar x = a;
    std::size_t k = 1;
    while (x != one()) {
      x = mul(x, a);
      if (++k > size_) throw InputError("multiplicative order requested for a non-unit");
    }
    return k;
  }

  /// -1 == 1, i.e. characteristic 2.
  bool is_minus_one_equal_one() const { return characteristic_ == 2; }

  bool is_plus_minus_one(Scalar a) const { return a == one() || a == minus_one(); }

  void check_element(Scalar a) const {
    if (a >= size_) {
      throw InputError("ring literal " + std::to_string(a) + " out of range for " + label_);
    }
  }

 private:
  static constexpr Scalar kNoInverse = ~Scalar{0};

  void validate() {
    const std::size_t n = size_;
    if (n < 2) throw InputError("ring must have at least two elements");
    if (add_.size() != n * n || mul_.size() != n * n) throw InputError("ring tables have the wrong size");
    for (Scalar v : add_)
      if (v >= n) throw InputError("ring addition table entry out of range");
    for (Scalar v : mul_)
      if (v >= n) throw InputError("ring multiplication table entry out of range");
    for (Scalar a = 0; a < n; ++a) {
      if (add(0, a) != a) throw InputError("ring: 0 is not the additive identity");
      if (mul(1, a) != a) throw InputError("ring: 1 is not the multiplicative identity");
      for (Scalar b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) throw InputError("ring: addition is not commutative");
        if (mul(a, b) != mul(b, a)) throw InputError("ring: multiplication is not commutative");
        for (Scalar c = 0; c < n; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))) throw InputError("ring: addition is not associative");
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("ring: multiplication is not associative");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) throw InputError("ring: distributivity fails");
        }
      }
    }
    neg_.assign(n, kNoInverse);
    unit_inverse_.assign(n, kNoInverse);
    for (Scalar a = 0; a < n; ++a)
      for (Scalar b = 0; b < n; ++b) {
        if (add(a, b) == 0) neg_[a] = b;
        if (mul(a, b) == 1) unit_inverse_[a] = b;
      }
    for (Scalar a = 0; a < n; ++a) {
      if (neg_[a] == kNoInverse) throw InputError("ring: missing additive inverse");
      if (unit_inverse_[a] != kNoInverse) units_.push_back(a);
    }
    Scalar x = one();
    characteristic_ = 1;
    while (x != zero()) {
      x = add(x, one());
      ++characteristic_;
    }
  }

  std::string label_;
  std::size_t size_;
  std::vector<Scalar> add_;
  std::vector<Scalar> mul_;
  std::vector<Scalar> neg_;
  std::vector<Scalar> unit_inverse_;
  std::vector<Scalar> units_;
  std::size_t characteristic_ = 0;
};

inline CoefficientRing make_integers_mod(std::size_t n) {
  std::vector<Scalar> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Scalar>((a + b) % n);
      mul[a * n + b] = static_cast<Scalar>((a * b) % n);
    }
  return CoefficientRing("Z" + std::to_string(n), n, std::move(add), std::move(mul));
}

/// GF(p^k) as F_p[x]/(modulus), elements encoded in base p (digit i = coefficient
/// of x^i). `modulus` lists the low coefficients of a monic irreducible of degree k.
inline CoefficientRing make_prime_power_field(std::string label, std::size_t p, std::size_t k,
                                              const std::vector<std::size_t>& modulus) {
  std::size_t q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= p;
  auto digits = [&](std::size_t v) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i, v /= p) d[i] = v % p;
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t v = 0;
    for (std::size_t i = k; i-- > 0;) v = v * p + d[i];
    return static_cast<Scalar>(v);
  };
  std::vector<Scalar> add(q * q), mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      const auto da = digits(a), db = digits(b);
      std::vector<std::size_t> s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
      add[a * q + b] = encode(s);
      std::vector<std::size_t> prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      // reduce with x^k = -(modulus)
      for (std::size_t deg = 2 * k - 1; deg-- > k;) {
        const std::size_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::size_t i = 0; i < k; ++i) {
          prod[deg - k + i] = (prod[deg - k + i] + (p - modulus[i]) * c) % p;
        }
      }
      prod.resize(k);
      mul[a * q + b] = encode(prod);
    }
  return CoefficientRing(std::move(label), q, std::move(add), std::move(mul));
}

/// Labels: "Z2".."Z9", prime fields "F2", "F3", "F5", "F7" (same tables as Z/p,
/// keeping the F label), and "F4", "F8", "F9".
inline CoefficientRing make_ring(const std::string& label) {
  if (label.size() == 2 && label[0] == 'Z' && label[1] >= '2' && label[1] <= '9') {
    return make_integers_mod(static_cast<std::size_t>(label[1] - '0'));
  }
  if (label == "F2" || label == "F3" || label == "F5" || label == "F7") {
    const auto zp = make_integers_mod(static_cast<std::size_t>(label[1] - '0'));
    std::vector<Scalar> add, mul;
    for (Scalar a = 0; a < zp.size(); ++a)
      for (Scalar b = 0; b < zp.size(); ++b) {
        add.push_back(zp.add(a, b));
        mul.push_back(zp.mul(a, b));
      }
    return CoefficientRing(label, zp.size(), std::move(add), std::move(mul));
  }
  if (label == "F4") return make_prime_power_field("F4", 2, 2, {1, 1});     // x^2 + x + 1
  if (label == "F8") return make_prime_power_field("F8", 2, 3, {1, 1, 0});  // x^3 + x + 1
  if (label == "F9") return make_prime_power_field("F9", 3, 2, {1, 0});     // x^2 + 1
  throw InputError("unknown ring label '" + label + "' (expected Z2..Z9, F2, F3, F4, F5, F7, F8, F9)");
}

inline const std::vector<std::string>& ring_labels() {
  static const std::vector<std::string> labels{"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9",
                                               "F2", "F3", "F4", "F5", "F7", "F8", "F9"};
  return labels;
}

}  // namespace twistnorm
