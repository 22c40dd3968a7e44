#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twistnorm/errors.hpp"

namespace twistnorm {

/// Index of a group element inside its Cayley table. The identity is always 0.
using Elem = std::uint32_t;

/// Tables are kept dense and subsets are 64-bit masks, so this is a hard bound.
inline constexpr std::size_t kMaxGroupOrder = 64;

/// A finite group given by an explicit multiplication table.
///
/// The constructor checks every group axiom (Latin square, identity at index 0,
/// associativity over all triples) and throws InputError naming the first
/// violated invariant. Instances are immutable afterwards.
class Group {
 public:
  Group(std::size_t order, std::vector<Elem> table, std::string name,
        std::vector<Elem> generators = {})
      : order_(order), table_(std::move(table)), name_(std::move(name)),
        generators_(std::move(generators)) {
    validate();
  }

  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  const std::string& name() const { return name_; }

  /// Distinguished generators recorded by the catalog constructors (may be empty).
  const std::vector<Elem>& generators() const { return generators_; }

  /// Unchecked product, for inner loops.
  Elem mul(Elem g, Elem h) const { return table_[g * order_ + h]; }
  Elem inv(Elem g) const { return inverses_[g]; }

  Elem multiply(Elem g, Elem h) const {
    check_index(g);
    check_index(h);
    return mul(g, h);
  }

  Elem inverse(Elem g) const {
    check_index(g);
    return inv(g);
  }

  /// (g,h) = g^-1 h^-1 g h
  Elem commutator(Elem g, Elem h) const {
    check_index(g);
    check_index(h);
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  /// g^-1 h g
  Elem conjugate(Elem h, Elem g) const { return mul(mul(inv(g), h), g); }

  Elem power(Elem g, long long k) const {
    check_index(g);
    if (k < 0) {
      g = inv(g);
      k = -k;
    }
    Elem result = identity();
    Elem base = g;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  std::size_t element_order(Elem g) const { return orders_.at(g); }

  bool commute(Elem g, Elem h) const { return mul(g, h) == mul(h, g); }

  bool is_abelian() const {
    for (Elem g = 0; g < order_; ++g)
      for (Elem h = g + 1; h < order_; ++h)
        if (!commute(g, h)) return false;
    return true;
  }

  /// Row-major copy of the table: entry g*order+h is g*h.
  const std::vector<Elem>& table() const { return table_; }

  void check_index(Elem g) const {
    if (g >= order_) {
      throw InputError("element index " + std::to_string(g) + " out of range for group " +
                       name_ + " of order " + std::to_string(order_));
    }
  }

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  void validate() {
    const std::size_t n = order_;
    if (n == 0) throw InputError("group order must be positive");
    if (n > kMaxGroupOrder) {
      throw CapabilityError("group order " + std::to_string(n) + " exceeds the supported bound " +
                            std::to_string(kMaxGroupOrder));
    }
    if (table_.size() != n * n) throw InputError("table must have order*order entries");
    for (Elem v : table_)
      if (v >= n) throw InputError("table entry " + std::to_string(v) + " out of range");

    std::vector<char> seen(n);
    for (std::size_t g = 0; g < n; ++g) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t h = 0; h < n; ++h) {
        if (seen[table_[g * n + h]]++) {
          throw InputError("Latin square violated: row " + std::to_string(g) +
                           " repeats an entry");
        }
      }
    }
    for (std::size_t h = 0; h < n; ++h) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t g = 0; g < n; ++g) {
        if (seen[table_[g * n + h]]++) {
          throw InputError("Latin square violated: column " + std::to_string(h) +
                           " repeats an entry");
        }
      }
    }
    for (Elem g = 0; g < n; ++g) {
      if (mul(0, g) != g || mul(g, 0) != g) {
        throw InputError("identity law violated: index 0 is not the identity");
      }
    }
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h) {
        const Elem gh = mul(g, h);
        for (Elem k = 0; k < n; ++k) {
          if (mul(gh, k) != mul(g, mul(h, k))) {
            throw InputError("associativity violated at (" + std::to_string(g) + "," +
                             std::to_string(h) + "," + std::to_string(k) + ")");
          }
        }
      }

    inverses_.assign(n, 0);
    for (Elem g = 0; g < n; ++g)
      for (Elem h = 0; h < n; ++h)
        if (mul(g, h) == 0) inverses_[g] = h;

    orders_.assign(n, 1);
    for (Elem g = 0; g < n; ++g) {
      Elem x = g;
      std::size_t k = 1;
      while (x != 0) {
        x = mul(x, g);
        ++k;
      }
      orders_[g] = k;
    }
    for (Elem g : generators_) check_index(g);
  }

  std::size_t order_;
  std::vector<Elem> table_;
  std::string name_;
  std::vector<Elem> generators_;
  std::vector<Elem> inverses_;
  std::vector<std::size_t> orders_;
};

/// A subset of a group's elements, stored as a bit mask over element indices.
class ElementSubset {
 public:
  ElementSubset() = default;
  ElementSubset(const Group& parent, std::uint64_t bits) : parent_(&parent), bits_(bits) {}

  static ElementSubset of(const Group& parent, const std::vector<Elem>& members) {
    std::uint64_t bits = 0;
    for (Elem g : members) {
      parent.check_index(g);
      bits |= std::uint64_t{1} << g;
    }
    return {parent, bits};
  }

  static ElementSubset whole(const Group& parent) {
    const std::size_t n = parent.order();
    return {parent, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  static ElementSubset trivial(const Group& parent) { return {parent, 1}; }

  const Group& parent() const { return *parent_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(Elem g) const { return g < 64 && ((bits_ >> g) & 1U); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<Elem>(std::countr_zero(b)));
    return out;
  }

  bool is_subset_of(const ElementSubset& other) const { return (bits_ & ~other.bits_) == 0; }

  ElementSubset intersect(const ElementSubset& other) const { return {*parent_, bits_ & other.bits_}; }
  ElementSubset unite(const ElementSubset& other) const { return {*parent_, bits_ | other.bits_}; }
  ElementSubset minus(const ElementSubset& other) const { return {*parent_, bits_ & ~other.bits_}; }

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) { return a.bits_ == b.bits_; }

 private:
  const Group* parent_ = nullptr;
  std::uint64_t bits_ = 0;
};

/// Builds a group from a row-major table given as nested vectors.
inline Group group_from_rows(const std::vector<std::vector<Elem>>& rows, std::string name) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("table row length differs from the order");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Group(n, std::move(flat), std::move(name));
}

/// Cayley-table text format: the order on the first line, then one line per
/// element g listing g*h for h = 0..n-1. Index 0 must be the identity.
inline Group parse_cayley_table(std::istream& in, std::string name = "file") {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("Cayley table: missing order line");
  long long n = 0;
  {
    std::istringstream first(lines[0]);
    if (!(first >> n) || n <= 0) throw InputError("Cayley table: order must be a positive integer");
    std::string extra;
    if (first >> extra) throw InputError("Cayley table: unexpected text after the order");
  }
  if (static_cast<std::size_t>(n) > kMaxGroupOrder) {
    throw CapabilityError("Cayley table: order " + std::to_string(n) + " exceeds the supported bound");
  }
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw InputError("Cayley table: expected " + std::to_string(n) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (long long r = 0; r < n; ++r) {
    std::istringstream row(lines[static_cast<std::size_t>(r) + 1]);
    long long v = 0;
    long long count = 0;
    while (row >> v) {
      if (v < 0 || v >= n) {
        throw InputError("Cayley table: entry " + std::to_string(v) + " in row " +
                         std::to_string(r) + " out of range");
      }
      flat.push_back(static_cast<Elem>(v));
      ++count;
    }
    if (!row.eof()) throw InputError("Cayley table: non-integer token in row " + std::to_string(r));
    if (count != n) {
      throw InputError("Cayley table: row " + std::to_string(r) + " has " + std::to_string(count) +
                       " entries, expected " + std::to_string(n));
    }
  }
  return Group(static_cast<std::size_t>(n), std::move(flat), std::move(name));
}

inline void write_cayley_table(std::ostream& out, const Group& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << '\n';
  }
}

}  // namespace twistnorm
