#include "doctest.h"

#include "hurwitz/group.hpp"
#include "oracle.hpp"

using namespace hurwitz;

namespace {

std::vector<std::size_t> class_sizes(const FiniteGroup& G) {
  std::vector<std::size_t> s;
  for (const auto& c : G.conjugacy_classes()) s.push_back(c.members.size());
  std::sort(s.begin(), s.end());
  return s;
}

const std::vector<std::string> kSmallCatalog = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11",
                                                "C12", "D1", "D2", "D3", "D4", "D5", "D6", "D12", "S1", "S2", "S3",
                                                "S4", "A3", "A4", "Q8"};

}  // namespace

TEST_CASE("permutation products read left to right") {
  auto a = parse_permutation("(1 2)", 3);
  auto b = parse_permutation("(1 3)", 3);
  CHECK((a * b).to_cycle_string() == "(1 2 3)");
  CHECK((a * b * parse_permutation("(1 3 2)", 3)).is_identity());
  CHECK(parse_permutation("(1 2)(3 4)").cycle_type() == std::vector<std::size_t>{2, 2});
  CHECK(parse_permutation("()", 4).to_cycle_string() == "()");
  CHECK_THROWS_AS(parse_permutation("(1 1)"), UsageError);
  CHECK_THROWS_AS(parse_permutation("1 2"), UsageError);
  CHECK_THROWS_AS(parse_permutation("(1 2"), UsageError);
}

TEST_CASE("generator lists split on top-level commas") {
  auto gens = parse_generators("(1 2)(3 4), (1 2 3)");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].degree() == 4);
  CHECK(gens[0].to_cycle_string() == "(1 2)(3 4)");
  CHECK(gens[1].to_cycle_string() == "(1 2 3)");
  CHECK(parse_generators("(1,2,3)").size() == 1);
  CHECK_THROWS_AS(parse_generators("(1 2),,(2 3)"), UsageError);
}

TEST_CASE("group_from_permutations") {
  SUBCASE("single involution") {
    auto G = group_from_permutations({parse_permutation("(1 2)")});
    CHECK(G.order() == 2);
  }
  SUBCASE("S3 from a transposition and a 3-cycle") {
    auto G = group_from_permutations(parse_generators("(1 2), (1 2 3)"));
    CHECK(G.order() == 6);
    CHECK(G.conjugacy_classes().size() == 3);
    CHECK(class_sizes(G) == std::vector<std::size_t>{1, 2, 3});
    CHECK(G.label(0).is_identity());
  }
  SUBCASE("BFS order is deterministic") {
    auto G1 = group_from_permutations(parse_generators("(1 2), (1 2 3 4)"));
    auto G2 = group_from_permutations(parse_generators("(1 2), (1 2 3 4)"));
    for (Elem x = 0; x < G1.order(); ++x) CHECK(G1.label(x) == G2.label(x));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(group_from_permutations({}), UsageError);
    CHECK_THROWS_AS(group_from_permutations({parse_permutation("(1 2)"), parse_permutation("(1 2 3)")}), UsageError);
    CHECK_THROWS_AS(group_from_permutations(parse_generators("(1 2), (1 2 3 4 5)"), 100), CapExceeded);
  }
}

TEST_CASE("catalog groups") {
  CHECK(catalog_group("S3").order() == 6);
  CHECK(catalog_group("S4").order() == 24);
  CHECK(catalog_group("A4").order() == 12);
  CHECK(catalog_group("A5").order() == 60);
  CHECK(catalog_group("D4").order() == 8);
  CHECK(catalog_group("D2").order() == 4);
  CHECK(catalog_group("C5").order() == 5);
  CHECK(catalog_group("C5").conjugacy_classes().size() == 5);

  auto Q = catalog_group("Q8");
  CHECK(Q.order() == 8);
  CHECK(oracle::naive_center(Q).size() == 2);
  CHECK(center(Q).size() == 2);
  // Five classes: 1, -1, {±i}, {±j}, {±k}.
  CHECK(class_sizes(Q) == std::vector<std::size_t>{1, 1, 2, 2, 2});

  CHECK_THROWS_AS(catalog_group("X3"), UsageError);
  CHECK_THROWS_AS(catalog_group("S"), UsageError);
  CHECK_THROWS_AS(catalog_group("C0"), UsageError);
  CHECK_THROWS_AS(catalog_group("S9"), CapExceeded);
  CHECK_THROWS_AS(catalog_group("C20", 10), CapExceeded);
}

TEST_CASE("table axioms hold exactly for small catalog groups") {
  for (const auto& name : kSmallCatalog) {
    CAPTURE(name);
    auto G = catalog_group(name);
    const auto N = G.order();
    for (Elem a = 0; a < N; ++a) {
      CHECK(G.mul(0, a) == a);
      CHECK(G.mul(a, G.inv(a)) == 0);
      std::vector<char> row(N, 0), col(N, 0);
      for (Elem b = 0; b < N; ++b) {
        row[G.mul(a, b)] = 1;
        col[G.mul(b, a)] = 1;
        for (Elem c = 0; c < N; ++c) REQUIRE(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      }
      CHECK(std::count(row.begin(), row.end(), 0) == 0);
      CHECK(std::count(col.begin(), col.end(), 0) == 0);
    }
    std::vector<int> covered(N, 0);
    for (const auto& cls : G.conjugacy_classes()) {
      CHECK(N % cls.members.size() == 0);
      for (auto x : cls.members) {
        ++covered[x];
        CHECK(G.element_order(x) == cls.order);
      }
    }
    CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
    CHECK(center(G) == oracle::naive_center(G));
  }
}

TEST_CASE("from_table rejects non-groups") {
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", 2, {0, 1, 1, 1}), UsageError);
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", 2, {0, 1, 1}), UsageError);
  CHECK_NOTHROW(FiniteGroup::from_table("C2", 2, {0, 1, 1, 0}));
}

TEST_CASE("center, centralizer, generated subgroup") {
  auto S3 = catalog_group("S3");
  auto C6 = catalog_group("C6");
  CHECK(center(S3) == ElementSet{0});
  CHECK(center(C6).size() == 6);

  auto t12 = *S3.find(parse_permutation("(1 2)", 3));
  auto t13 = *S3.find(parse_permutation("(1 3)", 3));
  auto r = *S3.find(parse_permutation("(1 2 3)", 3));
  std::vector<Elem> two{t12, t13};
  CHECK(generated_subgroup(S3, std::span<const Elem>(two)).size() == 6);
  CHECK(is_generating(S3, std::span<const Elem>(two)));
  std::vector<Elem> one{t12};
  CHECK_FALSE(is_generating(S3, std::span<const Elem>(one)));

  std::vector<Elem> rot{r};
  auto cr = centralizer(S3, std::span<const Elem>(rot));
  CHECK(cr.size() == 3);
  CHECK(cr == generated_subgroup(S3, std::span<const Elem>(rot)));
  CHECK(centralizer(S3, std::span<const Elem>()).size() == 6);
  CHECK(S3.element_order(S3.identity()) == 1);
  CHECK(S3.element_order(r) == 3);

  // centralizer(S) is the intersection of the single-element centralizers.
  auto S4 = catalog_group("S4");
  for (Elem a = 0; a < S4.order(); a += 5)
    for (Elem b = 1; b < S4.order(); b += 7) {
      std::vector<Elem> ab{a, b};
      auto ca = centralizer(S4, std::span<const Elem>(&a, 1));
      auto cb = centralizer(S4, std::span<const Elem>(&b, 1));
      ElementSet both;
      std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(both));
      CHECK(centralizer(S4, std::span<const Elem>(ab)) == both);
    }
  std::vector<Elem> gens{*S4.find(parse_permutation("(1 2)", 4)), *S4.find(parse_permutation("(1 2 3 4)", 4))};
  CHECK(centralizer(S4, std::span<const Elem>(gens)) == center(S4));
}

TEST_CASE("group elements reject other groups") {
  auto A = catalog_group("S3");
  auto B = catalog_group("S3");
  auto x = A.element(1);
  auto y = B.element(1);
  CHECK_THROWS_AS(x * y, UsageError);
  CHECK_NOTHROW(x * A.element(2));
  CHECK_THROWS_AS(B.element_order(x), UsageError);
  std::vector<GroupElement> mixed{x, y};
  CHECK_THROWS_AS(generated_subgroup(A, std::span<const GroupElement>(mixed)), UsageError);
  CHECK_THROWS_AS(A.element(6), UsageError);
}

TEST_CASE("subgroup lattice joins agree with closures") {
  auto G = catalog_group("S4");
  SubgroupLattice L(G);
  auto id = L.trivial();
  CHECK(L.size(id) == 1);
  for (Elem x = 0; x < G.order(); ++x) {
    auto h = L.join(id, x);
    std::vector<Elem> s{x};
    CHECK(L.members(h) == generated_subgroup(G, std::span<const Elem>(s)));
    for (Elem y = 0; y < G.order(); y += 3) {
      auto k = L.join(h, y);
      std::vector<Elem> s2{x, y};
      CHECK(L.size(k) == oracle::closure_size(G, s2));
    }
  }
  auto a = L.join(id, Elem{1});
  auto b = L.join(id, Elem{2});
  CHECK(L.join_subgroup(a, b) == L.join(a, Elem{2}));
}
