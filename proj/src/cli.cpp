#include "hurwitz/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/braid.hpp"
#include "hurwitz/cover.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/suite.hpp"
#include "hurwitz/symprod.hpp"
#include "hurwitz/text_io.hpp"

namespace hurwitz {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string group;
  std::string perms;
  std::size_t genus = 0;
  std::size_t n = 0;
  std::string type;
  std::string scope = "pointed";
  bool as_json = false;
  std::uint64_t cap = kDefaultWorkCap;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::size_t families = 100;
  std::string family_file;
  std::string tuple;
  std::string divisor;
};

GroupSpec spec_of(const RunConfig& c) {
  GroupSpec s;
  if (!c.group.empty()) s.catalog = c.group;
  if (!c.perms.empty()) s.permutations = c.perms;
  return s;
}

GroupPtr group_of(const RunConfig& c) { return make_group(spec_of(c)); }

std::optional<BranchingType> filter_of(const RunConfig& c, const FiniteGroup& G) {
  if (c.type.empty()) return std::nullopt;
  auto t = parse_type_filter(G, c.type);
  std::size_t total = 0;
  for (auto [cls, m] : t) total += m;
  if (total != c.n) throw UsageError("type filter lists " + std::to_string(total) + " classes but n = " + std::to_string(c.n));
  return t;
}

EnumerationOptions options_of(const RunConfig& c, const FiniteGroup& G) {
  return EnumerationOptions{filter_of(c, G), c.cap, c.threads};
}

void require_n(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
}

json header(const RunConfig& c, const FiniteGroup& G) {
  auto j = group_spec_to_json(spec_of(c));
  j["order"] = G.order();
  j["genus"] = c.genus;
  j["n"] = c.n;
  return j;
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t k = 0; k < head.size(); ++k) width[k] = head[k].size();
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t k = 0; k < r.size(); ++k) {
      s += r[k];
      if (k + 1 < r.size()) s += std::string(width[k] - r[k].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(head);
  for (const auto& r : rows) line(r);
}

int cmd_count(const RunConfig& c, std::ostream& out) {
  require_n(c);
  auto G = group_of(c);
  auto opts = options_of(c, *G);
  auto fiber = enumerate_tuples(G, c.genus, c.n, opts);
  const auto orbits = conjugation_orbits(fiber);

  std::map<BranchingType, std::vector<HurwitzTuple>> by_type;
  for (const auto& t : fiber) by_type[branching_type(t)].push_back(t);

  auto j = header(c, *G);
  j["pointed"] = fiber.size();
  j["unpointed"] = orbits.size();
  json types = json::object();
  for (const auto& [type, ts] : by_type)
    types[type_to_string(*G, type)] = {{"pointed", ts.size()}, {"unpointed", conjugation_orbits(ts).size()}};
  j["by_type"] = types;

  if (c.as_json) {
    out << j.dump() << '\n';
  } else {
    out << "pointed    " << fiber.size() << '\n' << "unpointed  " << orbits.size() << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, v] : types.items())
      rows.push_back({key, std::to_string(v["pointed"].get<std::size_t>()), std::to_string(v["unpointed"].get<std::size_t>())});
    if (!rows.empty()) print_table(out, {"type", "pointed", "unpointed"}, rows);
  }
  return kExitOk;
}

Scope scope_of(const RunConfig& c) {
  if (c.scope == "pointed") return Scope::pointed;
  if (c.scope == "unpointed") return Scope::unpointed;
  throw UsageError("--scope must be pointed or unpointed");
}

int cmd_orbits(const RunConfig& c, std::ostream& out) {
  require_n(c);
  if (c.genus != 0) throw UsageError("components unsupported for genus > 0");
  auto G = group_of(c);
  auto opts = options_of(c, *G);
  auto fiber = enumerate_tuples(G, 0, c.n, opts);
  auto orbits = braid_orbits(fiber, scope_of(c), c.threads);

  auto j = header(c, *G);
  j["scope"] = c.scope;
  j["type"] = opts.type_filter ? type_to_json(*G, *opts.type_filter) : json(nullptr);
  j["fiber_size"] = fiber.size();
  json list = json::array();
  for (const auto& o : orbits)
    list.push_back({{"size", o.size()},
                    {"representative", o.representative.to_string()},
                    {"type", type_to_string(*G, branching_type(o.representative))}});
  j["orbits"] = list;

  if (c.as_json) {
    out << j.dump() << '\n';
  } else {
    out << "fiber  " << fiber.size() << "\norbits " << orbits.size() << " (" << c.scope << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& o : orbits)
      rows.push_back({std::to_string(o.size()), type_to_string(*G, branching_type(o.representative)), o.representative.to_string()});
    if (!rows.empty()) print_table(out, {"size", "type", "representative"}, rows);
  }
  return kExitOk;
}

int cmd_genus(const RunConfig& c, std::ostream& out) {
  require_n(c);
  auto G = group_of(c);
  auto fiber = enumerate_tuples(G, c.genus, c.n, options_of(c, *G));

  struct Row {
    std::size_t count = 0;
    std::int64_t chi = 0;
    std::size_t genus = 0;
  };
  std::map<BranchingType, Row> rows;
  for (const auto& t : fiber) {
    CoverModel M(t);
    const auto g = genus_of_cover(M);
    const auto chi = euler_characteristic(M);
    auto [it, fresh] = rows.try_emplace(branching_type(t), Row{0, chi, g});
    if (!fresh && (it->second.genus != g || it->second.chi != chi))
      throw InvariantViolation("genus varies within one branching type");
    ++it->second.count;
  }

  auto j = header(c, *G);
  json table = json::array();
  for (const auto& [type, r] : rows) {
    json e = json::array();
    for (auto [cls, m] : type)
      for (std::size_t k = 0; k < m; ++k) e.push_back(G->conjugacy_classes()[cls].order);
    table.push_back({{"type", type_to_json(*G, type)}, {"ramification", e}, {"tuples", r.count},
                     {"euler_characteristic", r.chi}, {"genus", r.genus}});
  }
  j["rows"] = table;

  if (c.as_json) {
    out << j.dump() << '\n';
  } else {
    std::vector<std::vector<std::string>> text;
    for (const auto& [type, r] : rows)
      text.push_back({type_to_string(*G, type), std::to_string(r.count), std::to_string(r.chi), std::to_string(r.genus)});
    if (text.empty()) out << "empty fiber\n";
    else print_table(out, {"type", "tuples", "chi", "genus"}, text);
  }
  return kExitOk;
}

int cmd_types(const RunConfig& c, std::ostream& out) {
  require_n(c);
  auto G = group_of(c);
  auto fiber = enumerate_tuples(G, c.genus, c.n, options_of(c, *G));
  std::map<BranchingType, std::vector<HurwitzTuple>> by_type;
  for (const auto& t : fiber) by_type[branching_type(t)].push_back(t);

  auto j = header(c, *G);
  json classes = json::array();
  for (const auto& cls : G->conjugacy_classes())
    classes.push_back({{"id", cls.id}, {"label", G->class_label(cls.id)}, {"size", cls.members.size()},
                       {"order", cls.order}, {"representative", G->element_name(cls.representative)}});
  j["classes"] = classes;
  json census = json::array();
  for (const auto& [type, ts] : by_type) {
    json row{{"type", type_to_json(*G, type)}, {"pointed", ts.size()}, {"unpointed", conjugation_orbits(ts).size()}};
    if (c.genus == 0) row["components"] = braid_orbits(ts, Scope::pointed, c.threads).size();
    census.push_back(row);
  }
  j["census"] = census;

  if (c.as_json) {
    out << j.dump() << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : census)
      rows.push_back({r["type"].dump(), std::to_string(r["pointed"].get<std::size_t>()),
                      std::to_string(r["unpointed"].get<std::size_t>()),
                      r.contains("components") ? std::to_string(r["components"].get<std::size_t>()) : "-"});
    if (rows.empty()) out << "empty fiber\n";
    else print_table(out, {"type", "pointed", "unpointed", "components"}, rows);
  }
  return kExitOk;
}

int cmd_strata(const RunConfig& c, std::ostream& out) {
  auto D = parse_divisor(c.divisor);
  auto nu = partition_of(D);
  json layers = json::array();
  for (const auto& layer : decompose(D)) layers.push_back(layer.support());
  json j{{"divisor", D.to_string()}, {"degree", D.degree()}, {"partition", nu.parts},
         {"dimension", stratum_dimension(nu)}, {"layers", layers}};
  if (c.as_json) {
    out << j.dump() << '\n';
  } else {
    out << "divisor    " << D.to_string() << "\ndegree     " << D.degree() << "\npartition  (";
    for (std::size_t i = 0; i < nu.parts.size(); ++i) out << (i ? "," : "") << nu.parts[i];
    out << ")\ndimension  " << stratum_dimension(nu) << '\n';
  }
  return kExitOk;
}

int cmd_cover(const RunConfig& c, std::ostream& out) {
  auto G = group_of(c);
  auto T = parse_tuple(G, c.tuple);
  CoverModel M(T);
  json rows = json::array();
  std::vector<std::vector<std::string>> text;
  for (std::size_t j = 0; j < T.branch_count(); ++j) {
    auto pts = ramification_data(M, j);
    const auto e = pts.front().ram_index;
    rows.push_back({{"j", j + 1}, {"class", G->class_label(G->class_of(T.branch(j)))}, {"e", e}, {"r", pts.size()}});
    text.push_back({std::to_string(j + 1), G->class_label(G->class_of(T.branch(j))), std::to_string(e), std::to_string(pts.size())});
  }
  const auto genus = genus_of_cover(M);
  json j = group_spec_to_json(spec_of(c));
  j["tuple"] = T.to_string();
  j["base_genus"] = T.genus();
  j["branch_points"] = rows;
  j["euler_characteristic"] = euler_characteristic(M);
  j["genus"] = genus;
  j["connected"] = is_connected(M);
  if (c.as_json) {
    out << j.dump() << '\n';
  } else {
    print_table(out, {"j", "class", "e", "r"}, text);
    out << "chi    " << euler_characteristic(M) << "\ngenus  " << genus << '\n';
  }
  return kExitOk;
}

int report_suites(const std::vector<SuiteResult>& results, bool as_json, std::ostream& out) {
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (as_json) {
    out << json{{"passed", all}, {"suites", list}}.dump() << '\n';
  } else {
    for (const auto& r : results) out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail << '\n';
    out << (all ? "all suites passed" : "some suites failed") << '\n';
  }
  return all ? kExitOk : kExitSuiteFailure;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  if (!c.family_file.empty()) {
    std::ifstream in(c.family_file);
    if (!in) throw UsageError("cannot open " + c.family_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    auto loaded = family_from_json(j);
    EnumerationOptions opts{std::nullopt, c.cap, c.threads};
    return report_suites(run_family_suites(loaded.family, opts), c.as_json, out);
  }
  require_n(c);
  auto G = group_of(c);
  SuiteConfig cfg{G, c.genus, c.n, filter_of(c, *G), c.seed, c.cap, c.threads, c.families};
  return report_suites(run_invariant_suites(cfg), c.as_json, out);
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  if (c.group.empty() && c.perms.empty()) {
    json j{{"catalog", catalog_names()}};
    if (c.as_json) out << j.dump() << '\n';
    else
      for (const auto& n : catalog_names()) out << n << '\n';
    return kExitOk;
  }
  auto G = group_of(c);
  json classes = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& cls : G->conjugacy_classes()) {
    classes.push_back({{"id", cls.id}, {"label", G->class_label(cls.id)}, {"size", cls.members.size()},
                       {"order", cls.order}, {"representative", G->element_name(cls.representative)}});
    rows.push_back({std::to_string(cls.id), G->class_label(cls.id), std::to_string(cls.members.size()),
                    std::to_string(cls.order), G->element_name(cls.representative)});
  }
  json j = group_spec_to_json(spec_of(c));
  j["order"] = G->order();
  j["center"] = center(*G).size();
  j["classes"] = classes;
  if (c.as_json) {
    out << j.dump() << '\n';
  } else {
    out << "order   " << G->order() << "\ncenter  " << center(*G).size() << '\n';
    print_table(out, {"id", "label", "size", "order", "representative"}, rows);
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Hurwitz spaces of Galois covers, computed combinatorially", "hurwitz"};
  app.require_subcommand(1);

  auto add_group = [&c](CLI::App* sub) {
    auto* g = sub->add_option("--group", c.group, "catalog group: C<k>, D<k>, S<k>, A<k>, Q8");
    auto* p = sub->add_option("--perms", c.perms, "permutation generators, e.g. \"(1 2), (1 2 3)\"");
    g->excludes(p);
  };
  auto add_common = [&](CLI::App* sub, bool needs_n) {
    add_group(sub);
    sub->add_option("--genus", c.genus, "genus of the base curve");
    auto* n = sub->add_option("--n", c.n, "number of branch points");
    if (needs_n) n->required();
    sub->add_option("--type", c.type, "branching type, one class selector per branch point");
    sub->add_flag("--json", c.as_json, "machine-readable output");
    sub->add_option("--cap", c.cap, "enumeration work cap (visited nodes)")->envname("HURWITZ_CAP")->check(CLI::PositiveNumber);
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "pointed and unpointed fiber sizes");
  add_common(count, true);
  auto* orbits = app.add_subcommand("orbits", "braid orbits (connected components), genus 0 only");
  add_common(orbits, true);
  orbits->add_option("--scope", c.scope, "pointed or unpointed")->check(CLI::IsMember({"pointed", "unpointed"}));
  auto* genus = app.add_subcommand("genus", "genus of the covering curve per branching type");
  add_common(genus, true);
  auto* types = app.add_subcommand("types", "branching-type census");
  add_common(types, true);
  auto* strata = app.add_subcommand("strata", "multiplicity partition and stratum of a divisor");
  strata->add_option("divisor", c.divisor, "divisor such as a:1,b:2,c:3")->required();
  strata->add_flag("--json", c.as_json, "machine-readable output");
  auto* cover = app.add_subcommand("cover", "ramification table of one tuple");
  add_group(cover);
  cover->add_option("tuple", c.tuple, "tuple such as \"[| (1 2),(1 3),(1 3 2)]\"")->required();
  cover->add_flag("--json", c.as_json, "machine-readable output");
  auto* check = app.add_subcommand("check", "run the invariant suites");
  add_common(check, false);
  check->add_option("--family", c.family_file, "family JSON file to validate instead");
  check->add_option("--seed", c.seed, "seed for randomized suites");
  check->add_option("--families", c.families, "random families per run");
  auto* catalog = app.add_subcommand("catalog", "list catalog groups or describe one");
  add_group(catalog);
  catalog->add_flag("--json", c.as_json, "machine-readable output");
  for (auto* sub : {count, orbits, genus, types})
    sub->add_option("--seed", c.seed, "accepted for uniformity; these commands are deterministic");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(c, out);
    if (*orbits) return cmd_orbits(c, out);
    if (*genus) return cmd_genus(c, out);
    if (*types) return cmd_types(c, out);
    if (*strata) return cmd_strata(c, out);
    if (*cover) return cmd_cover(c, out);
    if (*check) {
      if (c.family_file.empty() && c.group.empty() && c.perms.empty())
        throw UsageError("check needs --group/--perms with --n, or --family");
      return cmd_check(c, out);
    }
    if (*catalog) return cmd_catalog(c, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitSuiteFailure;
  }
  return kExitUsage;
}

}  // namespace hurwitz
