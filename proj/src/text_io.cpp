#include "hurwitz/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hurwitz {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<std::size_t> parse_number(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Splits on commas outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && c == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw UsageError("unbalanced parentheses: " + std::string(s));
  return out;
}

std::vector<std::uint32_t> classes_matching(const FiniteGroup& G, std::size_t order,
                                            const std::optional<std::vector<std::size_t>>& cycle_type) {
  std::vector<std::uint32_t> out;
  for (const auto& cls : G.conjugacy_classes()) {
    if (cls.order != order) continue;
    if (cycle_type) {
      auto t = G.label(cls.representative).cycle_type();
      if (t != *cycle_type) continue;
    }
    out.push_back(cls.id);
  }
  return out;
}

std::uint32_t unique_class(const std::vector<std::uint32_t>& matches, std::string_view selector) {
  if (matches.empty()) throw UsageError("class selector matches no class: " + std::string(selector));
  if (matches.size() > 1) throw UsageError("class selector is ambiguous: " + std::string(selector));
  return matches.front();
}

}  // namespace

GroupPtr make_group(const GroupSpec& spec, std::size_t cap) {
  if (spec.catalog.has_value() == spec.permutations.has_value())
    throw UsageError("exactly one of a catalog name or permutation generators is required");
  if (spec.catalog) return share(catalog_group(*spec.catalog, cap));
  return share(group_from_permutations(parse_generators(*spec.permutations), cap, *spec.permutations));
}

nlohmann::json group_spec_to_json(const GroupSpec& spec) {
  nlohmann::json j = nlohmann::json::object();
  if (spec.catalog) j["group"] = *spec.catalog;
  if (spec.permutations) j["perms"] = *spec.permutations;
  return j;
}

GroupSpec group_spec_from_json(const nlohmann::json& j) {
  GroupSpec spec;
  if (j.contains("group")) spec.catalog = j.at("group").get<std::string>();
  if (j.contains("perms")) spec.permutations = j.at("perms").get<std::string>();
  return spec;
}

std::uint32_t resolve_class_selector(const FiniteGroup& G, std::string_view selector) {
  selector = trim(selector);
  if (selector.empty()) throw UsageError("empty class selector");
  const auto nclasses = G.conjugacy_classes().size();

  if (selector.front() == '#') {
    auto k = parse_number(selector.substr(1));
    if (!k || *k >= nclasses) throw UsageError("no class with index " + std::string(selector));
    return static_cast<std::uint32_t>(*k);
  }
  if (auto colon = selector.find(':'); colon != std::string_view::npos) {
    if (!G.has_permutation_labels())
      throw UsageError("order:cycletype selectors need a permutation group: " + std::string(selector));
    auto order = parse_number(selector.substr(0, colon));
    if (!order) throw UsageError("bad element order in selector: " + std::string(selector));
    std::vector<std::size_t> type;
    auto rest = selector.substr(colon + 1);
    if (rest != "1") {
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto dot = rest.find('.', start);
        auto part = parse_number(rest.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
        if (!part || *part < 2) throw UsageError("bad cycle type in selector: " + std::string(selector));
        type.push_back(*part);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
      }
      std::sort(type.rbegin(), type.rend());
    }
    return unique_class(classes_matching(G, *order, type), selector);
  }
  if (selector == "T" || selector == "t") {
    if (!G.has_permutation_labels()) throw UsageError("'T' needs a permutation group");
    return unique_class(classes_matching(G, 2, std::vector<std::size_t>{2}), selector);
  }
  if ((selector.front() == 'C' || selector.front() == 'c') && selector.size() > 1) {
    if (!G.has_permutation_labels()) throw UsageError("'Ck' needs a permutation group");
    auto k = parse_number(selector.substr(1));
    if (!k || *k < 2) throw UsageError("bad cycle selector: " + std::string(selector));
    return unique_class(classes_matching(G, *k, std::vector<std::size_t>{*k}), selector);
  }
  if (auto k = parse_number(selector)) {
    if (!G.has_permutation_labels()) {
      if (*k >= nclasses) throw UsageError("no class with index " + std::string(selector));
      return static_cast<std::uint32_t>(*k);
    }
    return unique_class(classes_matching(G, *k, std::nullopt), selector);
  }
  throw UsageError("unrecognized class selector: " + std::string(selector));
}

BranchingType parse_type_filter(const FiniteGroup& G, std::string_view text) {
  BranchingType type;
  for (auto piece : split_top_level(text)) {
    if (piece.empty()) throw UsageError("empty class selector in type: " + std::string(text));
    ++type[resolve_class_selector(G, piece)];
  }
  return type;
}

nlohmann::json type_to_json(const FiniteGroup& G, const BranchingType& type) {
  nlohmann::json j = nlohmann::json::object();
  for (auto [cls, mult] : type) j[G.class_label(cls)] = mult;
  return j;
}

std::string type_to_string(const FiniteGroup& G, const BranchingType& type) {
  std::string out;
  for (auto [cls, mult] : type) {
    if (!out.empty()) out += ' ';
    out += G.class_label(cls) + "x" + std::to_string(mult);
  }
  return out;
}

Elem parse_element(const FiniteGroup& G, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw UsageError("empty element");
  if (text.front() == '(') {
    if (!G.has_permutation_labels()) throw UsageError("cycle notation needs a permutation group");
    auto p = parse_permutation(text, G.degree());
    auto idx = G.find(p);
    if (!idx) throw UsageError("permutation is not in the group: " + std::string(text));
    return *idx;
  }
  auto k = parse_number(text);
  if (!k || *k >= G.order()) throw UsageError("bad element: " + std::string(text));
  return static_cast<Elem>(*k);
}

HurwitzTuple parse_tuple(const GroupPtr& group, std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw UsageError("tuple must look like [a1,b1,...| c1,...,cn]: " + std::string(text));
  text = text.substr(1, text.size() - 2);
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw UsageError("tuple is missing '|': " + std::string(text));
  std::vector<Elem> entries;
  auto handles = trim(text.substr(0, bar));
  if (!handles.empty())
    for (auto piece : split_top_level(handles)) entries.push_back(parse_element(*group, piece));
  if (entries.size() % 2 != 0) throw UsageError("handle part needs an even number of entries");
  const auto genus = entries.size() / 2;
  auto branch = trim(text.substr(bar + 1));
  if (branch.empty()) throw UsageError("tuple needs at least one branch image");
  for (auto piece : split_top_level(branch)) entries.push_back(parse_element(*group, piece));
  return HurwitzTuple(group, genus, std::move(entries));
}

nlohmann::json tuple_to_json(const HurwitzTuple& T) {
  return nlohmann::json(std::vector<Elem>(T.entries().begin(), T.entries().end()));
}

HurwitzTuple tuple_from_json(const GroupPtr& group, std::size_t genus, const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("tuple JSON must be an array of element indices");
  std::vector<Elem> entries;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw UsageError("tuple entries must be element indices");
    entries.push_back(e.get<Elem>());
  }
  return HurwitzTuple::unchecked(group, genus, std::move(entries));
}

nlohmann::json family_to_json(const GroupSpec& spec, std::size_t genus, std::size_t n, const PointedFamily& F) {
  auto j = group_spec_to_json(spec);
  j["genus"] = genus;
  j["n"] = n;
  nlohmann::json components = nlohmann::json::object();
  for (const auto& [name, members] : F.base.components) components[name] = members;
  j["base"] = {{"points", F.base.points}, {"components", components}};
  nlohmann::json assignment = nlohmann::json::object();
  for (const auto& [p, inv] : F.assignment)
    assignment[p] = {{"divisor", inv.divisor.to_string()}, {"tuple", tuple_to_json(inv.tuple)}};
  j["assignment"] = assignment;
  return j;
}

LoadedFamily family_from_json(const nlohmann::json& j, std::size_t cap) {
  try {
    LoadedFamily out;
    out.spec = group_spec_from_json(j);
    out.group = make_group(out.spec, cap);
    out.genus = j.at("genus").get<std::size_t>();
    out.n = j.at("n").get<std::size_t>();
    const auto& base = j.at("base");
    out.family.base.points = base.at("points").get<std::vector<std::string>>();
    std::sort(out.family.base.points.begin(), out.family.base.points.end());
    for (const auto& [name, members] : base.at("components").items()) {
      auto pts = members.get<std::vector<std::string>>();
      std::sort(pts.begin(), pts.end());
      out.family.base.components[name] = std::move(pts);
    }
    for (const auto& [p, inv] : j.at("assignment").items()) {
      auto tuple = tuple_from_json(out.group, out.genus, inv.at("tuple"));
      if (tuple.branch_count() != out.n) throw UsageError("tuple at " + p + " does not have n branch images");
      out.family.assignment.emplace(p, MonodromyInvariant(parse_divisor(inv.at("divisor").get<std::string>()),
                                                          std::move(tuple)));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed family JSON: ") + e.what());
  }
}

}  // namespace hurwitz
