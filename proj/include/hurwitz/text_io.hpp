#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hurwitz/moduli.hpp"
#include "hurwitz/nielsen.hpp"

namespace hurwitz {

struct GroupSpec {
  std::optional<std::string> catalog;      // e.g. "S3"
  std::optional<std::string> permutations; // e.g. "(1 2), (1 2 3)"
};

// Exactly one of catalog / permutations must be set.
GroupPtr make_group(const GroupSpec& spec, std::size_t cap = kDefaultClosureCap);
nlohmann::json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const nlohmann::json& j);

/// Resolves one class selector:
///   "#k"        class index k
///   "o:t"       element order o and cycle type t (lengths joined by '.')
///   "T", "Ck"   transpositions, k-cycles (permutation groups)
///   "k"         class index for abstract groups; element order otherwise
/// Anything matching no class or several classes throws UsageError.
std::uint32_t resolve_class_selector(const FiniteGroup& G, std::string_view selector);
// Comma-separated selectors, one per branch point: "T,T,C3".
BranchingType parse_type_filter(const FiniteGroup& G, std::string_view text);
nlohmann::json type_to_json(const FiniteGroup& G, const BranchingType& type);
std::string type_to_string(const FiniteGroup& G, const BranchingType& type);

// "(1 2)" / "()" for permutation groups, or an element index.
Elem parse_element(const FiniteGroup& G, std::string_view text);
// "[a1,b1,...| c1,...,cn]"; validates the tuple invariants.
HurwitzTuple parse_tuple(const GroupPtr& group, std::string_view text);

nlohmann::json tuple_to_json(const HurwitzTuple& T);
HurwitzTuple tuple_from_json(const GroupPtr& group, std::size_t genus, const nlohmann::json& j);

// {group|perms, genus, n, base: {points, components}, assignment: {point: {divisor, tuple}}}
nlohmann::json family_to_json(const GroupSpec& spec, std::size_t genus, std::size_t n, const PointedFamily& F);

struct LoadedFamily {
  GroupSpec spec;
  GroupPtr group;
  std::size_t genus = 0;
  std::size_t n = 0;
  PointedFamily family;
};
LoadedFamily family_from_json(const nlohmann::json& j, std::size_t cap = kDefaultClosureCap);

}  // namespace hurwitz
