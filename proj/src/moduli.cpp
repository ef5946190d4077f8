#include "hurwitz/moduli.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace hurwitz {

// ---------------------------------------------------------------------------
// FiniteBase

FiniteBase FiniteBase::discrete(std::vector<std::string> points) {
  FiniteBase b;
  std::sort(points.begin(), points.end());
  for (const auto& p : points) b.components[p] = {p};
  b.points = std::move(points);
  b.validate();
  return b;
}

FiniteBase FiniteBase::connected(std::vector<std::string> points, std::string name) {
  FiniteBase b;
  std::sort(points.begin(), points.end());
  if (!points.empty()) b.components[std::move(name)] = points;
  b.points = std::move(points);
  b.validate();
  return b;
}

void FiniteBase::validate() const {
  if (!std::is_sorted(points.begin(), points.end()) ||
      std::adjacent_find(points.begin(), points.end()) != points.end())
    throw UsageError("base points must be sorted and distinct");
  std::vector<std::string> covered;
  for (const auto& [name, members] : components) {
    if (members.empty()) throw UsageError("empty component " + name);
    covered.insert(covered.end(), members.begin(), members.end());
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
    throw UsageError("components overlap");
  if (covered != points) throw UsageError("components do not cover the base exactly");
}

const std::string& FiniteBase::component_of(const std::string& point) const {
  for (const auto& [name, members] : components)
    if (std::binary_search(members.begin(), members.end(), point)) return name;
  throw UsageError("point " + point + " is not in the base");
}

bool FiniteBase::has_point(const std::string& point) const {
  return std::binary_search(points.begin(), points.end(), point);
}

// ---------------------------------------------------------------------------
// PointedFamily

void PointedFamily::validate() const {
  base.validate();
  if (assignment.size() != base.points.size()) throw UsageError("assignment does not cover the base");
  for (const auto& p : base.points)
    if (!assignment.contains(p)) throw UsageError("no invariant at point " + p);
  if (assignment.empty()) return;

  const auto& ref = assignment.begin()->second.tuple;
  for (const auto& [p, inv] : assignment) {
    const auto& t = inv.tuple;
    if (t.group_ptr() != ref.group_ptr() || t.genus() != ref.genus() || t.branch_count() != ref.branch_count())
      throw UsageError("family mixes groups, genera or branch counts at point " + p);
    if (inv.divisor.degree() != t.branch_count()) throw UsageError("divisor degree differs from n at point " + p);
    if (auto why = t.violation()) throw UsageError("invalid tuple at point " + p + ": " + *why);
  }
  for (const auto& [name, members] : base.components) {
    const auto type = branching_type(assignment.at(members.front()).tuple);
    for (const auto& p : members)
      if (branching_type(assignment.at(p).tuple) != type)
        throw UsageError("branching type is not constant on component " + name);
  }
}

// ---------------------------------------------------------------------------
// BaseMorphism

BaseMorphism BaseMorphism::identity(const FiniteBase& base) {
  BaseMorphism u{base, base, {}};
  for (const auto& p : base.points) u.map[p] = p;
  return u;
}

BaseMorphism BaseMorphism::constant(const FiniteBase& source, const FiniteBase& target, const std::string& point) {
  if (!target.has_point(point)) throw UsageError("constant morphism to a point outside the target");
  BaseMorphism u{source, target, {}};
  for (const auto& p : source.points) u.map[p] = point;
  return u;
}

void BaseMorphism::validate() const {
  source.validate();
  target.validate();
  for (const auto& p : source.points) {
    auto it = map.find(p);
    if (it == map.end()) throw UsageError("morphism undefined at " + p);
    if (!target.has_point(it->second)) throw UsageError("morphism leaves the target at " + p);
  }
  if (map.size() != source.points.size()) throw UsageError("morphism defined outside its source");
  for (const auto& [name, members] : source.components) {
    const auto& image = target.component_of(map.at(members.front()));
    for (const auto& p : members)
      if (target.component_of(map.at(p)) != image)
        throw UsageError("component " + name + " is not mapped into a single component");
  }
}

BaseMorphism compose(const BaseMorphism& outer, const BaseMorphism& inner) {
  if (!(inner.target == outer.source)) throw UsageError("morphisms are not composable");
  BaseMorphism u{inner.source, outer.target, {}};
  for (const auto& [p, q] : inner.map) u.map[p] = outer.map.at(q);
  return u;
}

// ---------------------------------------------------------------------------
// Classifying maps and pullbacks

ClassifyingMap classifying_map(const PointedFamily& F) {
  F.validate();
  return F.assignment;
}

namespace {

PointedFamily pullback_points(const PointedFamily& F, const BaseMorphism& u) {
  PointedFamily out;
  out.base = u.source;
  for (const auto& p : u.source.points) {
    auto it = u.map.find(p);
    if (it == u.map.end()) throw UsageError("morphism undefined at " + p);
    auto inv = F.assignment.find(it->second);
    if (inv == F.assignment.end()) throw UsageError("morphism leaves the family's base at " + p);
    out.assignment.emplace(p, inv->second);
  }
  return out;
}

}  // namespace

PointedFamily pullback(const PointedFamily& F, const BaseMorphism& u) {
  u.validate();
  if (!(u.target == F.base)) throw UsageError("morphism target is not the family's base");
  return pullback_points(F, u);
}

// ---------------------------------------------------------------------------
// Universal family

UniversalIndex::UniversalIndex(GroupPtr group, std::size_t genus, std::size_t n, const EnumerationOptions& options)
    : group_(std::move(group)), genus_(genus), n_(n) {
  fiber_ = enumerate_tuples(group_, genus, n, options);
  width_ = std::to_string(fiber_.size()).size();
  component_.resize(fiber_.size());
  components_known_ = genus == 0;
  if (components_known_) {
    auto orbits = braid_orbits(fiber_, Scope::pointed, options.threads);
    for (std::size_t k = 0; k < orbits.size(); ++k)
      for (const auto& t : orbits[k].members) component_[*find(t)] = k;
  } else {
    for (std::size_t i = 0; i < fiber_.size(); ++i) component_[i] = i;
  }
}

std::optional<std::size_t> UniversalIndex::find(const HurwitzTuple& t) const {
  if (t.group_ptr() != group_ || t.genus() != genus_ || t.branch_count() != n_) return std::nullopt;
  auto it = std::lower_bound(fiber_.begin(), fiber_.end(), t);
  if (it == fiber_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - fiber_.begin());
}

std::string UniversalIndex::point_id(const std::string& prefix, std::size_t i) const {
  auto digits = std::to_string(i);
  return prefix + "u" + std::string(width_ - std::min(width_, digits.size()), '0') + digits;
}

std::string UniversalIndex::component_id(const std::string& prefix, std::size_t i) const {
  return components_known_ ? prefix + "H" + std::to_string(component_[i]) : point_id(prefix, i);
}

PointedFamily UniversalIndex::restrict(const BranchDivisor& D, const std::string& prefix,
                                       const std::vector<std::size_t>& indices) const {
  PointedFamily F;
  for (auto i : indices) {
    auto id = point_id(prefix, i);
    if (!F.assignment.emplace(id, MonodromyInvariant(D, fiber_.at(i))).second) continue;
    F.base.points.push_back(id);
    F.base.components[component_id(prefix, i)].push_back(id);
  }
  std::sort(F.base.points.begin(), F.base.points.end());
  for (auto& [name, members] : F.base.components) std::sort(members.begin(), members.end());
  return F;
}

UniversalFamily universal_family(const GroupPtr& group, std::size_t genus, std::size_t n,
                                 const BranchDivisor& divisor, const EnumerationOptions& options,
                                 const std::string& prefix) {
  UniversalIndex index(group, genus, n, options);
  std::vector<std::size_t> all(index.fiber().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return {index.restrict(divisor, prefix, all), index.components_known()};
}

CheckReport fine_roundtrip_check(const PointedFamily& F, const EnumerationOptions& options,
                                 const std::optional<ClassifyingMap>& claimed) {
  try {
    F.validate();
  } catch (const UsageError& e) {
    CheckReport report;
    report.failures.push_back(std::string("family is invalid: ") + e.what());
    return report;
  }
  if (F.empty()) return {};
  const auto& ref = F.assignment.begin()->second.tuple;
  return fine_roundtrip_check(F, UniversalIndex(ref.group_ptr(), ref.genus(), ref.branch_count(), options), claimed);
}

CheckReport fine_roundtrip_check(const PointedFamily& F, const UniversalIndex& universal,
                                 const std::optional<ClassifyingMap>& claimed) {
  CheckReport report;
  try {
    F.validate();
  } catch (const UsageError& e) {
    report.failures.push_back(std::string("family is invalid: ") + e.what());
    return report;
  }
  if (F.empty()) return report;
  const auto& ref = F.assignment.begin()->second.tuple;
  if (ref.group_ptr() != universal.group() || ref.genus() != universal.genus() ||
      ref.branch_count() != universal.branch_count())
    throw UsageError("universal index built for other parameters");

  const ClassifyingMap u_inv = claimed ? *claimed : classifying_map(F);

  // Locate every point's image; the pullback only sees the image points, so
  // the universal family is restricted to them (one copy per divisor, glued
  // as a disjoint union).
  std::set<std::string> unmapped;
  std::map<std::string, std::pair<BranchDivisor, std::size_t>> image;
  std::map<BranchDivisor, std::vector<std::size_t>> hit;
  for (const auto& p : F.base.points) {
    auto it = u_inv.find(p);
    auto idx = it == u_inv.end() ? std::nullopt : universal.find(it->second.tuple);
    if (!idx) {
      unmapped.insert(p);
      continue;
    }
    image.emplace(p, std::make_pair(it->second.divisor, *idx));
    hit[it->second.divisor].push_back(*idx);
  }
  PointedFamily restricted;
  for (const auto& [D, indices] : hit) {
    auto part = universal.restrict(D, D.to_string() + "|", indices);
    restricted.base.points.insert(restricted.base.points.end(), part.base.points.begin(), part.base.points.end());
    restricted.base.components.merge(part.base.components);
    restricted.assignment.merge(part.assignment);
  }
  std::sort(restricted.base.points.begin(), restricted.base.points.end());

  BaseMorphism u{FiniteBase::discrete({}), restricted.base, {}};
  for (const auto& [p, target] : image) {
    u.source.points.push_back(p);
    u.map[p] = universal.point_id(target.first.to_string() + "|", target.second);
  }

  std::set<std::string> split;
  if (universal.components_known())
    for (const auto& [name, members] : F.base.components) {
      std::set<std::string> images;
      for (const auto& p : members)
        if (auto it = image.find(p); it != image.end())
          images.insert(it->second.first.to_string() + "|" + universal.component_id("", it->second.second));
      if (images.size() > 1) split.insert(members.begin(), members.end());
    }

  const auto pulled = pullback_points(restricted, u);

  for (const auto& p : F.base.points) {
    PointCheck check{p, false, {}};
    if (unmapped.contains(p)) {
      check.message = "invariant is not a point of the Hurwitz set";
    } else if (split.contains(p)) {
      check.message = "component maps into several components of the universal family";
    } else {
      const auto& original = F.assignment.at(p);
      const auto& back = pulled.assignment.at(p);
      auto witness = equivalent_pointed(CoverModel(back.tuple), CoverModel(original.tuple));
      if (back.divisor != original.divisor) {
        check.message = "branch divisor differs";
      } else if (!witness) {
        check.message = "no pointed equivalence";
      } else if (witness->index != back.tuple.group().identity()) {
        check.message = "pointed witness is not the identity";
      } else {
        check.passed = true;
      }
    }
    if (!check.passed) report.failures.push_back(p + ": " + check.message);
    report.entries.push_back(std::move(check));
  }
  return report;
}

std::map<std::string, UnpointedInvariant> unpointed_classifying(const PointedFamily& F) {
  std::map<std::string, UnpointedInvariant> out;
  for (const auto& [p, inv] : classifying_map(F)) out.emplace(p, unpointed_invariant(inv));
  return out;
}

CoarseReport coarse_check(const GroupPtr& group, std::size_t genus, std::size_t n,
                          const EnumerationOptions& options) {
  CoarseReport r;
  const auto fiber = enumerate_tuples(group, genus, n, options);
  const auto z = center(*group).size();
  r.pointed = fiber.size();
  r.expected_fiber = group->order() / z;

  const auto orbits = conjugation_orbits(fiber);
  r.classes = orbits.size();

  // Equivalence classes of cover models, found without the orbit machinery:
  // each model is compared against the representatives seen so far that
  // have the same conjugacy class in every coordinate.
  std::vector<std::size_t> class_of(fiber.size());
  std::vector<std::size_t> reps;
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> reps_by_classes;
  bool witness_count_set = false;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const CoverModel M(fiber[i]);
    std::vector<std::uint32_t> key;
    for (auto e : fiber[i].entries()) key.push_back(group->class_of(e));
    auto& candidates = reps_by_classes[key];
    bool found = false;
    for (std::size_t c = 0; c < candidates.size() && !found; ++c) {
      const auto k = candidates[c];
      auto w = equivalent_unpointed(CoverModel(fiber[reps[k]]), M);
      if (w.empty()) continue;
      found = true;
      class_of[i] = k;
      if (!witness_count_set) {
        r.witnesses_per_pair = w.size();
        witness_count_set = true;
      } else if (w.size() != r.witnesses_per_pair) {
        r.failures.push_back("witness count varies between equivalent pairs");
      }
    }
    if (!found) {
      class_of[i] = reps.size();
      candidates.push_back(reps.size());
      reps.push_back(i);
      const auto self = equivalent_unpointed(M, M).size();
      if (!witness_count_set) {
        r.witnesses_per_pair = self;
        witness_count_set = true;
      } else if (self != r.witnesses_per_pair) {
        r.failures.push_back("witness count varies between equivalent pairs");
      }
    }
  }
  r.equivalence_classes = reps.size();

  if (r.equivalence_classes != r.classes)
    r.failures.push_back("orbit count " + std::to_string(r.classes) + " differs from equivalence class count " +
                         std::to_string(r.equivalence_classes));
  for (const auto& o : orbits) {
    r.fiber_sizes.push_back(o.members.size());
    if (o.members.size() != r.expected_fiber)
      r.failures.push_back("orbit of " + o.representative.to_string() + " has " + std::to_string(o.members.size()) +
                           " pointed preimages, expected " + std::to_string(r.expected_fiber));
    std::set<std::size_t> eq;
    for (auto m : o.members) eq.insert(class_of[m]);
    if (eq.size() != 1) r.failures.push_back("orbit splits across equivalence classes");
  }
  if (witness_count_set && r.witnesses_per_pair != z)
    r.failures.push_back("witness count " + std::to_string(r.witnesses_per_pair) + " differs from |Z(G)| = " +
                         std::to_string(z));
  if (z == 1 && witness_count_set && r.witnesses_per_pair != 1) r.failures.push_back("witness is not unique");
  return r;
}

// ---------------------------------------------------------------------------
// Random families

PointedFamily random_family(const std::vector<HurwitzTuple>& fiber, const std::vector<BraidOrbit>& components,
                            std::mt19937_64& rng) {
  if (fiber.empty() || components.empty()) return {};
  const std::size_t n = fiber.front().branch_count();
  std::uniform_int_distribution<std::size_t> comp_count(1, 3), comp_size(1, 4), pick_comp(0, components.size() - 1);

  PointedFamily F;
  const auto k = comp_count(rng);
  std::size_t next_point = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n + 3; ++i) labels.push_back("p" + std::to_string(i + 1));
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(n);
    const auto divisor = BranchDivisor::simple(labels);
    const auto& orbit = components[pick_comp(rng)];
    std::uniform_int_distribution<std::size_t> pick_member(0, orbit.members.size() - 1);

    const std::string name = "K" + std::to_string(c);
    std::vector<std::string> members;
    for (std::size_t i = 0, m = comp_size(rng); i < m; ++i) {
      auto digits = std::to_string(next_point++);
      auto p = "s" + std::string(digits.size() < 3 ? 3 - digits.size() : 0, '0') + digits;
      members.push_back(p);
      F.assignment.emplace(p, MonodromyInvariant(divisor, orbit.members[pick_member(rng)]));
    }
    std::sort(members.begin(), members.end());
    F.base.points.insert(F.base.points.end(), members.begin(), members.end());
    F.base.components[name] = std::move(members);
  }
  std::sort(F.base.points.begin(), F.base.points.end());
  F.validate();
  return F;
}

PointedFamily perturb_family(const PointedFamily& F, const std::string& point, const std::vector<HurwitzTuple>& fiber,
                             std::mt19937_64& rng) {
  PointedFamily out = F;
  const auto& current = F.assignment.at(point);
  const auto type = branching_type(current.tuple);
  std::vector<const HurwitzTuple*> candidates;
  for (const auto& t : fiber)
    if (t != current.tuple && branching_type(t) == type) candidates.push_back(&t);

  if (!candidates.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    out.assignment.insert_or_assign(point, MonodromyInvariant(current.divisor, *candidates[pick(rng)]));
  } else {
    auto labels = current.divisor.support();
    labels.front() = "moved_" + labels.front();
    out.assignment.insert_or_assign(point, MonodromyInvariant(BranchDivisor::simple(labels), current.tuple));
  }
  return out;
}

}  // namespace hurwitz
