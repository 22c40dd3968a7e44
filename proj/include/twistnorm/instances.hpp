#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "twistnorm/catalog.hpp"
#include "twistnorm/errors.hpp"
#include "twistnorm/group.hpp"
#include "twistnorm/morphisms.hpp"
#include "twistnorm/ring.hpp"
#include "twistnorm/subgroups.hpp"

namespace twistnorm {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::size_t parse_size(const std::string& s, const std::string& context) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(context + ": '" + s + "' is not a non-negative integer");
  }
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (const std::out_of_range&) {
    throw InputError(context + ": '" + s + "' is out of range");
  }
}

inline std::vector<std::size_t> parse_list(const std::string& s, const std::string& context) {
  std::vector<std::size_t> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_size(part, context));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Group relabel(const Group& G, std::string name) {
  return Group(G.order(), G.table(), std::move(name), G.generators());
}

inline Group make_catalog_factor(const std::string& label) {
  const auto parts = split(label, ':');
  const auto& kind = parts[0];
  auto arg = [&](std::size_t i) {
    if (parts.size() <= i) throw InputError("group label '" + label + "' is missing a parameter");
    return parse_size(parts[i], "group label '" + label + "'");
  };
  if (kind == "D4YC4") return make_d4_y_c4();
  if (kind == "D4YD4") return make_d4_y_d4();
  if (kind == "Q8YQ8") return make_q8_y_q8();
  if (kind == "cyclic" && parts.size() == 2) return make_cyclic(arg(1));
  if (kind == "dihedral" && parts.size() == 2) return make_dihedral(arg(1));
  if (kind == "quaternion" && parts.size() == 2) return make_quaternion(arg(1));
  if (kind == "elementary" && parts.size() == 3) return make_elementary_abelian(arg(1), arg(2));
  throw InputError("unknown group label '" + label + "'");
}

}  // namespace detail

/// Group sources:
///   cyclic:N, dihedral:N (order 2N), quaternion:8|16, elementary:P:K,
///   D4YC4, D4YD4, Q8YQ8, products joined by '*' (dihedral:4*cyclic:2),
///   file:PATH for a Cayley table.
/// The returned group is named by the label itself.
inline Group parse_group_label(const std::string& label) {
  if (label.rfind("file:", 0) == 0) {
    const auto path = label.substr(5);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open group file '" + path + "'");
    return parse_cayley_table(in, label);
  }
  const auto factors = detail::split(label, '*');
  Group G = detail::make_catalog_factor(factors.at(0));
  for (std::size_t i = 1; i < factors.size(); ++i) G = direct_product(G, detail::make_catalog_factor(factors[i]));
  return detail::relabel(G, label);
}

/// Groups swept by default, with their orders. Sorted by label.
inline std::vector<std::pair<std::string, std::size_t>> catalog_entries() {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (std::size_t n = 1; n <= 16; ++n) out.emplace_back("cyclic:" + std::to_string(n), n);
  for (std::size_t n = 3; n <= 8; ++n) out.emplace_back("dihedral:" + std::to_string(n), 2 * n);
  out.emplace_back("quaternion:8", 8);
  out.emplace_back("quaternion:16", 16);
  out.emplace_back("elementary:2:2", 4);
  out.emplace_back("elementary:2:3", 8);
  out.emplace_back("elementary:2:4", 16);
  out.emplace_back("elementary:3:2", 9);
  out.emplace_back("cyclic:2*cyclic:3", 6);
  out.emplace_back("cyclic:4*cyclic:2", 8);
  out.emplace_back("cyclic:6*cyclic:2", 12);
  out.emplace_back("cyclic:8*cyclic:2", 16);
  out.emplace_back("cyclic:4*cyclic:4", 16);
  out.emplace_back("dihedral:3*cyclic:2", 12);
  out.emplace_back("dihedral:4*cyclic:2", 16);
  out.emplace_back("quaternion:8*cyclic:2", 16);
  out.emplace_back("D4YC4", 16);
  out.emplace_back("D4YD4", 32);
  out.emplace_back("Q8YQ8", 32);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> catalog_labels(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& [label, order] : catalog_entries())
    if (order <= max_order) out.push_back(label);
  return out;
}

/// First abelian subgroup of index 2 (in member order) and the smallest element outside it.
inline std::pair<ElementSubset, Elem> theorem_i_data(const Group& G) {
  for (const auto& H : index_two_subgroups(G)) {
    if (!is_abelian(H)) continue;
    return {H, ElementSubset::whole(G).minus(H).members().front()};
  }
  throw InputError(G.name() + " has no abelian subgroup of index 2");
}

/// Builtin sigmas:
///   classical   g -> g^-1
///   theorem-i   h -> b^-1 h b on the first abelian index-2 subgroup H, identity on the coset Hb
///   case-iii    g -> g c on every recorded generator, c the generator of G' (|G'| = 2),
///               extended anti-multiplicatively
///   identity    g -> g (abelian groups only)
inline AntiAutomorphism builtin_sigma(const std::string& name, const Group& G) {
  if (name == "classical") return classical_involution(G);
  if (name == "identity") {
    std::vector<Elem> map(G.order());
    for (Elem g = 0; g < G.order(); ++g) map[g] = g;
    return {G, std::move(map)};
  }
  if (name == "theorem-i") {
    const auto [H, b] = theorem_i_data(G);
    std::vector<Elem> map(G.order());
    for (Elem g = 0; g < G.order(); ++g) map[g] = H.contains(g) ? G.conjugate(g, b) : g;
    return {G, std::move(map)};
  }
  if (name == "case-iii") {
    const auto derived = derived_subgroup(G);
    if (derived.size() != 2) throw InputError("builtin:case-iii needs a derived subgroup of order 2");
    const Elem c = derived.members().back();
    const auto gens = G.generators().empty() ? greedy_generators(G) : G.generators();
    std::vector<Elem> images;
    for (Elem g : gens) images.push_back(G.mul(g, c));
    return anti_automorphism_from_generators(G, gens, images);
  }
  throw InputError("unknown builtin sigma '" + name + "' (classical, theorem-i, case-iii, identity)");
}

/// Builtin f: trivial, or sign (-1 off the subgroup used by theorem-i).
inline UnitHomomorphism builtin_f(const std::string& name, const Group& G, const CoefficientRing& K) {
  if (name == "trivial") return UnitHomomorphism::trivial(G, K);
  if (name == "sign") {
    const auto H = theorem_i_data(G).first;
    std::vector<Scalar> values(G.order());
    for (Elem g = 0; g < G.order(); ++g) values[g] = H.contains(g) ? K.one() : K.minus_one();
    return {G, K, std::move(values)};
  }
  throw InputError("unknown builtin f '" + name + "' (trivial, sign)");
}

/// Sigma sources: builtin:NAME, map:i0,i1,..., file:PATH (first line of a spec file).
inline AntiAutomorphism parse_sigma_source(const std::string& source, const Group& G) {
  if (source.rfind("builtin:", 0) == 0) return builtin_sigma(source.substr(8), G);
  std::vector<Elem> map;
  if (source.rfind("map:", 0) == 0) {
    for (auto v : detail::parse_list(source.substr(4), "sigma map")) map.push_back(static_cast<Elem>(v));
  } else if (source.rfind("file:", 0) == 0) {
    std::istringstream in(detail::read_file(source.substr(5)));
    map = parse_involution_spec_text(in).sigma;
  } else {
    throw InputError("sigma source must start with builtin:, map: or file:");
  }
  if (map.size() != G.order()) throw InputError("sigma source lists " + std::to_string(map.size()) +
                                                " images for a group of order " + std::to_string(G.order()));
  return {G, std::move(map)};
}

/// f sources: builtin:NAME, values:v0,v1,..., file:PATH (second line of a spec file).
inline UnitHomomorphism parse_f_source(const std::string& source, const Group& G, const CoefficientRing& K) {
  if (source.rfind("builtin:", 0) == 0) return builtin_f(source.substr(8), G, K);
  std::vector<Scalar> values;
  if (source.rfind("values:", 0) == 0) {
    for (auto v : detail::parse_list(source.substr(7), "f values")) values.push_back(static_cast<Scalar>(v));
  } else if (source.rfind("file:", 0) == 0) {
    std::istringstream in(detail::read_file(source.substr(5)));
    values = parse_involution_spec_text(in).f;
  } else {
    throw InputError("f source must start with builtin:, values: or file:");
  }
  if (values.size() != G.order()) throw InputError("f source lists " + std::to_string(values.size()) +
                                                   " values for a group of order " + std::to_string(G.order()));
  return {G, K, std::move(values)};
}

template <typename T>
std::string join_values(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string sigma_source_text(const AntiAutomorphism& sigma) { return "map:" + join_values(sigma.map()); }
inline std::string f_source_text(const UnitHomomorphism& f) { return "values:" + join_values(f.values()); }

}  // namespace twistnorm
