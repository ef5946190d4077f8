#include <random>

#include "doctest.h"

#include "hurwitz/braid.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/text_io.hpp"
#include "oracle.hpp"

using namespace hurwitz;

namespace {

PointedFamily s3_family() {
  auto S3 = share(catalog_group("S3"));
  auto fiber = enumerate_tuples(S3, 0, 3);
  PointedFamily F;
  F.base = FiniteBase::connected({"a", "b", "c"});
  auto D = parse_divisor("p1,p2,p3");
  F.assignment.emplace("a", MonodromyInvariant(D, fiber[0]));
  F.assignment.emplace("b", MonodromyInvariant(D, fiber[5]));
  F.assignment.emplace("c", MonodromyInvariant(D, fiber[0]));
  return F;
}

}  // namespace

TEST_CASE("finite bases and morphisms") {
  auto B = FiniteBase::discrete({"y", "x"});
  CHECK(B.points == std::vector<std::string>{"x", "y"});
  CHECK(B.components.size() == 2);
  CHECK_NOTHROW(B.validate());
  CHECK(B.component_of("x") != B.component_of("y"));
  CHECK_THROWS_AS(B.component_of("z"), UsageError);

  auto C = FiniteBase::connected({"u", "v"});
  CHECK(C.component_of("u") == C.component_of("v"));

  FiniteBase bad{{"a", "b"}, {{"K", {"a"}}}};
  CHECK_THROWS_AS(bad.validate(), UsageError);

  // A connected source cannot map onto two components.
  BaseMorphism split{C, B, {{"u", "x"}, {"v", "y"}}};
  CHECK_THROWS_AS(split.validate(), UsageError);
  BaseMorphism fine{B, C, {{"x", "u"}, {"y", "v"}}};
  CHECK_NOTHROW(fine.validate());
  CHECK_THROWS_AS(BaseMorphism::constant(B, C, "w"), UsageError);
  CHECK_THROWS_AS(compose(fine, fine), UsageError);
}

TEST_CASE("family validation") {
  auto F = s3_family();
  CHECK_NOTHROW(F.validate());
  auto missing = F;
  missing.assignment.erase("b");
  CHECK_THROWS_AS(missing.validate(), UsageError);

  // Changing the branching type inside one component is rejected.
  auto S3 = F.assignment.at("a").tuple.group_ptr();
  auto four = enumerate_tuples(S3, 0, 4);
  auto mixed = F;
  mixed.assignment.insert_or_assign("b", MonodromyInvariant(parse_divisor("p1,p2,p3,p4"), four.front()));
  CHECK_THROWS_AS(mixed.validate(), UsageError);
}

TEST_CASE("pullback is functorial and classifying maps are natural") {
  auto F = s3_family();
  auto S1 = FiniteBase::discrete({"s", "t"});
  auto S2 = FiniteBase::connected({"r"});
  BaseMorphism u{S1, F.base, {{"s", "b"}, {"t", "c"}}};
  BaseMorphism v{S2, S1, {{"r", "t"}}};
  u.validate();
  v.validate();

  CHECK(pullback(F, BaseMorphism::identity(F.base)) == F);
  CHECK(pullback(pullback(F, u), v) == pullback(F, compose(u, v)));

  auto pulled = pullback(F, u);
  auto phi = classifying_map(F);
  for (const auto& [s, inv] : classifying_map(pulled)) {
    CHECK(inv.tuple == phi.at(u.map.at(s)).tuple);
    CHECK(inv.divisor == phi.at(u.map.at(s)).divisor);
  }
  auto constant = pullback(F, BaseMorphism::constant(S1, F.base, "a"));
  for (const auto& [s, inv] : constant.assignment) CHECK(inv.tuple == F.assignment.at("a").tuple);

  BaseMorphism wrong{S1, S1, {{"s", "s"}, {"t", "t"}}};
  CHECK_THROWS_AS(pullback(F, wrong), UsageError);
}

TEST_CASE("universal family sizes") {
  auto S3 = share(catalog_group("S3"));
  auto C2 = share(catalog_group("C2"));
  auto U = universal_family(S3, 0, 3, parse_divisor("p1,p2,p3"));
  CHECK(U.components_known);
  CHECK(U.family.base.points.size() == 18);
  CHECK(U.family.base.components.size() == 1);
  CHECK_NOTHROW(U.family.validate());
  CHECK(U.family.base.points.front() == "u00");

  CHECK(universal_family(C2, 0, 2, parse_divisor("p1,p2")).family.base.points.size() == 1);
  CHECK(universal_family(C2, 0, 3, parse_divisor("p1,p2,p3")).family.empty());

  auto C4 = share(catalog_group("C4"));
  auto G1 = universal_family(C4, 1, 2, parse_divisor("p1,p2"));
  CHECK_FALSE(G1.components_known);
  CHECK(G1.family.base.components.size() == G1.family.base.points.size());
  CHECK(G1.family.base.points.size() == oracle::naive_fiber(*C4, 1, 2).size());

  // Components of the universal family are the braid orbits.
  auto S4 = share(catalog_group("S4"));
  auto U4 = universal_family(S4, 0, 4, parse_divisor("p1,p2,p3,p4"));
  CHECK(U4.family.base.components.size() == component_count(S4, 4, Scope::pointed));

  CHECK_THROWS_AS(universal_family(S3, 0, 3, parse_divisor("p1,p2")), UsageError);
}

TEST_CASE("fine roundtrip") {
  auto S3 = share(catalog_group("S3"));
  auto U = universal_family(S3, 0, 3, parse_divisor("p1,p2,p3"));
  auto r = fine_roundtrip_check(U.family);
  CHECK(r.passed());
  CHECK(r.entries.size() == 18);

  auto F = s3_family();
  CHECK(fine_roundtrip_check(F).passed());

  // Invariants are checked point by point: a tuple that is not in the
  // Hurwitz set fails only where it sits.
  auto bad = F;
  bad.base = FiniteBase::discrete({"a", "b", "c"});
  auto t12 = parse_element(*S3, "(1 2)");
  bad.assignment.insert_or_assign(
      "b", MonodromyInvariant(parse_divisor("p1,p2,p3"), HurwitzTuple::unchecked(S3, 0, {t12, t12, t12})));
  auto rb = fine_roundtrip_check(bad);
  CHECK_FALSE(rb.passed());
}

TEST_CASE("random families and a single perturbation") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"S3", "D4", "A4"}) {
    auto G = share(catalog_group(name));
    auto fiber = enumerate_tuples(G, 0, 4);
    auto comps = braid_orbits(fiber);
    for (int k = 0; k < 20; ++k) {
      auto F = random_family(fiber, comps, rng);
      CHECK_NOTHROW(F.validate());
      CHECK(fine_roundtrip_check(F).passed());
      const auto& point = F.base.points[rng() % F.base.points.size()];
      auto P = perturb_family(F, point, fiber, rng);
      auto report = fine_roundtrip_check(P, {}, classifying_map(F));
      REQUIRE(report.failures.size() == 1);
      CHECK(report.failures.front().rfind(point + ":", 0) == 0);
      std::size_t failing = 0;
      for (const auto& e : report.entries) failing += !e.passed;
      CHECK(failing == 1);
    }
  }
}

TEST_CASE("coarse check") {
  auto S3 = share(catalog_group("S3"));
  auto r = coarse_check(S3, 0, 3);
  CHECK(r.passed());
  CHECK(r.pointed == 18);
  CHECK(r.classes == 3);
  CHECK(r.equivalence_classes == 3);
  CHECK(r.expected_fiber == 6);
  CHECK(r.witnesses_per_pair == 1);
  for (auto s : r.fiber_sizes) CHECK(s == 6);

  auto Q8 = share(catalog_group("Q8"));
  auto q = coarse_check(Q8, 0, 4);
  CHECK(q.passed());
  CHECK(q.witnesses_per_pair == 2);
  CHECK(q.expected_fiber == 4);
  for (auto s : q.fiber_sizes) CHECK(s == 4);

  auto C2 = share(catalog_group("C2"));
  auto c = coarse_check(C2, 0, 2);
  CHECK(c.passed());
  CHECK(c.classes == 1);
  CHECK(c.witnesses_per_pair == 2);
  CHECK(coarse_check(C2, 0, 3).pointed == 0);

  auto S4 = share(catalog_group("S4"));
  auto s4 = coarse_check(S4, 1, 1);
  CHECK(s4.passed());
  CHECK(s4.witnesses_per_pair == 1);

  auto F = s3_family();
  auto un = unpointed_classifying(F);
  CHECK(un.at("a").representative == un.at("c").representative);
  CHECK(un.at("a").orbit_size == 6);
}

TEST_CASE("universal index agrees with the full universal family") {
  auto S4 = share(catalog_group("S4"));
  const auto D = parse_divisor("p1,p2,p3,p4");
  UniversalIndex index(S4, 0, 4);
  auto U = universal_family(S4, 0, 4, D, {}, "D|");
  CHECK(index.fiber() == enumerate_tuples(S4, 0, 4));
  for (std::size_t i = 0; i < index.fiber().size(); i += 37) {
    CHECK(index.find(index.fiber()[i]) == i);
    const auto id = index.point_id("D|", i);
    CHECK(U.family.assignment.at(id).tuple == index.fiber()[i]);
    CHECK(U.family.base.component_of(id) == index.component_id("D|", i));
  }
  auto other = share(catalog_group("S4"));
  CHECK_FALSE(index.find(enumerate_tuples(other, 0, 4).front()).has_value());

  auto part = index.restrict(D, "D|", {5, 3, 5});
  CHECK(part.base.points.size() == 2);
  CHECK_NOTHROW(part.validate());

  // A check against an index for other parameters is refused.
  auto S3 = share(catalog_group("S3"));
  auto fiber = enumerate_tuples(S3, 0, 3);
  PointedFamily F;
  F.base = FiniteBase::discrete({"a"});
  F.assignment.emplace("a", MonodromyInvariant(parse_divisor("p1,p2,p3"), fiber[0]));
  CHECK_THROWS_AS(fine_roundtrip_check(F, index), UsageError);
  CHECK(fine_roundtrip_check(F, UniversalIndex(S3, 0, 3)).passed());
}
