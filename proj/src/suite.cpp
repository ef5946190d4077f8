#include "hurwitz/suite.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace hurwitz {

namespace {

// Collects the first few failure messages of a suite.
class Failures {
 public:
  void add(const std::string& msg) {
    if (count_++ < 5) msgs_.push_back(msg);
  }
  SuiteResult result(std::string name, const std::string& ok_detail) const {
    if (count_ == 0) return {std::move(name), true, ok_detail};
    std::string d = std::to_string(count_) + " failure(s): ";
    for (std::size_t i = 0; i < msgs_.size(); ++i) d += (i ? "; " : "") + msgs_[i];
    return {std::move(name), false, d};
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> msgs_;
};

SuiteResult group_axioms(const FiniteGroup& G) {
  Failures f;
  const auto N = G.order();
  for (Elem x = 0; x < N; ++x) {
    if (G.mul(0, x) != x || G.mul(x, 0) != x) f.add("identity law fails at " + G.element_name(x));
    if (G.mul(x, G.inv(x)) != 0) f.add("inverse law fails at " + G.element_name(x));
  }
  if (N <= 64)
    for (Elem a = 0; a < N; ++a)
      for (Elem b = 0; b < N; ++b)
        for (Elem c = 0; c < N; ++c)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) f.add("associativity fails");
  std::vector<std::size_t> covered(N, 0);
  for (const auto& cls : G.conjugacy_classes()) {
    if (N % cls.members.size() != 0) f.add("class size does not divide |G|");
    for (auto x : cls.members) {
      ++covered[x];
      if (G.element_order(x) != cls.order) f.add("class mixes element orders");
      for (Elem h = 0; h < N; ++h)
        if (G.class_of(G.conj(h, x)) != cls.id) f.add("class not closed under conjugation");
    }
  }
  for (auto c : covered)
    if (c != 1) f.add("classes do not partition the group");
  std::vector<Elem> all(N);
  for (Elem x = 0; x < N; ++x) all[x] = x;
  if (centralizer(G, std::span<const Elem>(all)) != center(G)) f.add("centralizer of G differs from the center");
  return f.result("group-axioms", "order " + std::to_string(N) + ", " + std::to_string(G.conjugacy_classes().size()) +
                                      " classes, |Z| = " + std::to_string(center(G).size()));
}

}  // namespace

std::vector<SuiteResult> run_invariant_suites(const SuiteConfig& config) {
  const auto& G = *config.group;
  std::vector<SuiteResult> out;
  out.push_back(group_axioms(G));

  EnumerationOptions opts{config.type_filter, config.work_cap, config.threads};
  const auto fiber = enumerate_tuples(config.group, config.genus, config.n, opts);
  const auto Z = center(G);
  const auto quotient = G.order() / Z.size();

  {
    Failures f;
    for (const auto& t : fiber)
      if (auto why = t.violation()) f.add(t.to_string() + ": " + *why);
    if (!config.type_filter) {
      std::map<BranchingType, std::size_t> by_type;
      for (const auto& t : fiber) ++by_type[branching_type(t)];
      std::size_t total = 0;
      for (const auto& [type, count] : by_type) {
        EnumerationOptions filtered{type, config.work_cap, config.threads};
        auto part = enumerate_tuples(config.group, config.genus, config.n, filtered);
        if (part.size() != count) f.add("filtered enumeration disagrees for one type");
        total += part.size();
      }
      if (total != fiber.size()) f.add("types do not partition the fiber");
    }
    out.push_back(f.result("fiber", std::to_string(fiber.size()) + " tuples"));
  }

  {
    Failures f;
    for (const auto& t : fiber)
      if (tuple_stabilizer(t) != Z) f.add("stabilizer differs from the center at " + t.to_string());
    out.push_back(f.result("stabilizer-is-center", "|Z(G)| = " + std::to_string(Z.size())));
  }

  const auto orbits = conjugation_orbits(fiber);
  {
    Failures f;
    for (const auto& o : orbits)
      if (o.size != quotient || o.members.size() != quotient) f.add("orbit size differs from |G|/|Z(G)|");
    if (orbits.size() * quotient != fiber.size()) f.add("orbit count times |G|/|Z(G)| differs from the fiber size");
    out.push_back(f.result("quotient-degree", std::to_string(orbits.size()) + " unpointed classes"));
  }

  if (config.genus == 0) {
    Failures f;
    const auto n = config.n;
    std::set<HurwitzTuple> in_fiber(fiber.begin(), fiber.end());
    auto move = [](const HurwitzTuple& t, std::size_t i, bool inv = false) { return apply_move(t, {i, inv}); };
    for (const auto& t : fiber) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        auto s = move(t, i);
        if (auto why = s.violation()) f.add("move breaks invariant: " + *why);
        if (branching_type(s) != branching_type(t)) f.add("move changes branching type");
        if (!in_fiber.contains(s)) f.add("move leaves the fiber");
        if (move(s, i, true) != t || move(move(t, i, true), i) != t) f.add("move and inverse do not cancel");
        for (Elem h = 0; h < G.order(); h += std::max<Elem>(1, static_cast<Elem>(G.order() / 4)))
          if (move(conjugate_tuple(h, t), i) != conjugate_tuple(h, s)) f.add("move does not commute with conjugation");
        if (i + 2 < n && move(move(move(t, i), i + 1), i) != move(move(move(t, i + 1), i), i + 1))
          f.add("braid relation fails");
        for (std::size_t j = i + 2; j + 1 < n; ++j)
          if (move(move(t, i), j) != move(move(t, j), i)) f.add("far commutation fails");
      }
    }
    const auto reference = braid_orbits(fiber, Scope::pointed, 1);
    for (unsigned threads : {2u, 3u, 4u}) {
      auto other = braid_orbits(fiber, Scope::pointed, threads);
      bool same = other.size() == reference.size();
      for (std::size_t k = 0; same && k < other.size(); ++k) same = other[k].members == reference[k].members;
      if (!same) f.add("orbit partition depends on the thread count");
    }
    for (const auto& o : reference) {
      const auto type = branching_type(o.representative);
      for (const auto& t : o.members)
        if (branching_type(t) != type) f.add("orbit mixes branching types");
    }
    out.push_back(f.result("braid", std::to_string(reference.size()) + " pointed components"));
  }

  {
    Failures f;
    std::set<std::size_t> genera;
    for (const auto& t : fiber) {
      try {
        CoverModel M(t);
        auto g = genus_of_cover(M);
        genera.insert(g);
        if (genus_of_cover(CoverModel(conjugate_tuple(G.order() - 1, t))) != g) f.add("genus changes under conjugation");
        if (config.genus == 0 && config.n >= 2 && genus_of_cover(CoverModel(apply_move(t, {0, false}))) != g)
          f.add("genus changes under a braid move");
      } catch (const InvariantViolation& e) {
        f.add(t.to_string() + ": " + e.what());
      }
    }
    std::string d = "genera {";
    for (auto g : genera) d += (d.back() == '{' ? "" : ",") + std::to_string(g);
    out.push_back(f.result("genus-double-entry", d + "}"));
  }

  {
    Failures f;
    for (const auto& t : fiber) {
      CoverModel M(t);
      for (std::size_t j = 0; j < t.branch_count(); ++j) {
        const auto pts = ramification_data(M, j);
        const auto e = G.element_order(t.branch(j));
        if (pts.size() * e != G.order()) f.add("point count differs from |G|/e");
        std::size_t sum = 0;
        for (const auto& p : pts) {
          sum += p.ram_index;
          if (p.ram_index != e) f.add("ramification index differs from the order of c_j");
          // Stabilizer of the point under the deck action.
          ElementSet stab;
          for (Elem g = 0; g < G.order(); ++g)
            if (std::binary_search(p.coset.begin(), p.coset.end(), G.mul(g, p.coset.front())))
              stab.push_back(g);
          if (stab != p.isotropy) f.add("isotropy differs from the deck stabilizer");
        }
        if (sum != G.order()) f.add("ramification indices do not sum to |G|");
      }
    }
    out.push_back(f.result("ramification", "checked " + std::to_string(fiber.size()) + " tuples"));
  }

  {
    Failures f;
    std::mt19937_64 rng(config.seed);
    std::vector<BraidOrbit> components;
    if (config.genus == 0) {
      components = braid_orbits(fiber, Scope::pointed, config.threads);
    } else {
      for (const auto& t : fiber) components.push_back({t, {t}});
    }
    std::size_t families = 0;
    if (!fiber.empty()) {
      const UniversalIndex universal(config.group, config.genus, config.n, opts);
      for (; families < config.random_families; ++families) {
        auto F = random_family(fiber, components, rng);
        auto report = fine_roundtrip_check(F, universal);
        if (!report.passed()) f.add("roundtrip fails: " + report.failures.front());
        const auto original = classifying_map(F);
        std::uniform_int_distribution<std::size_t> pick(0, F.base.points.size() - 1);
        const auto victim = F.base.points[pick(rng)];
        auto perturbed = perturb_family(F, victim, fiber, rng);
        auto bad = fine_roundtrip_check(perturbed, universal, original);
        std::size_t failing = 0;
        for (const auto& e : bad.entries) failing += e.passed ? 0 : 1;
        if (bad.passed() || failing != 1) f.add("perturbation at " + victim + " not isolated");
      }
    }
    out.push_back(f.result("fine-roundtrip", std::to_string(families) + " random families"));
  }

  {
    auto report = coarse_check(config.group, config.genus, config.n, opts);
    Failures f;
    for (const auto& m : report.failures) f.add(m);
    out.push_back(f.result("coarse", std::to_string(report.classes) + " classes, witnesses per pair " +
                                         std::to_string(report.witnesses_per_pair)));
  }
  return out;
}

std::vector<SuiteResult> run_family_suites(const PointedFamily& F, const EnumerationOptions& options) {
  std::vector<SuiteResult> out;
  try {
    F.validate();
    out.push_back({"family-valid", true, std::to_string(F.base.points.size()) + " points, " +
                                             std::to_string(F.base.components.size()) + " components"});
  } catch (const UsageError& e) {
    out.push_back({"family-valid", false, e.what()});
    return out;
  }

  auto report = fine_roundtrip_check(F, options);
  out.push_back({"fine-roundtrip", report.passed(),
                 report.passed() ? std::to_string(report.entries.size()) + " points" : report.failures.front()});

  auto id = pullback(F, BaseMorphism::identity(F.base));
  out.push_back({"pullback-identity", id == F, ""});

  Failures f;
  const auto unpointed = unpointed_classifying(F);
  for (const auto& [p, inv] : unpointed) {
    const auto& t = F.assignment.at(p).tuple;
    const auto quotient = t.group().order() / center(t.group()).size();
    if (inv.orbit_size != quotient) f.add("orbit size at " + p);
    if (equivalent_unpointed(CoverModel(inv.representative), CoverModel(t)).empty()) f.add("class mismatch at " + p);
  }
  out.push_back(f.result("unpointed-classifying", std::to_string(unpointed.size()) + " points"));
  return out;
}

}  // namespace hurwitz
