#include <random>

#include "doctest.h"

#include "hurwitz/group.hpp"
#include "hurwitz/symprod.hpp"

using namespace hurwitz;

TEST_CASE("partition_of and stratum_dimension") {
  CHECK(partition_of(parse_divisor("a:1,b:2,c:3")).parts == std::vector<std::size_t>{3, 2, 1});
  CHECK(partition_of(parse_divisor("a,b,c,d")).parts == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(partition_of(parse_divisor("a:4")).parts == std::vector<std::size_t>{4});

  CHECK(stratum_dimension(PartitionType{{3, 2, 1}}) == 3);
  CHECK(stratum_dimension(PartitionType{{1, 1, 1, 1}}) == 4);
  CHECK(stratum_dimension(PartitionType{{7}}) == 1);
}

TEST_CASE("divisor parsing and canonical form") {
  auto D = parse_divisor("c:3, a, b:2");
  CHECK(D.degree() == 6);
  CHECK(D.to_string() == "a,b:2,c:3");
  CHECK(D == parse_divisor("a:1,b:2,c:3"));
  CHECK(D.multiplicity("b") == 2);
  CHECK(D.multiplicity("z") == 0);
  CHECK_FALSE(D.is_multiplicity_free());
  CHECK(parse_divisor("").degree() == 0);
  CHECK_THROWS_AS(parse_divisor("a,a"), UsageError);
  CHECK_THROWS_AS(parse_divisor("a:0"), UsageError);
  CHECK_THROWS_AS(parse_divisor("a:x"), UsageError);
  CHECK_THROWS_AS(parse_divisor("a,,b"), UsageError);
}

TEST_CASE("decompose and compose") {
  auto layers = decompose(parse_divisor("a:1,b:2,c:3"));
  REQUIRE(layers.size() == 3);
  CHECK(layers[0] == parse_divisor("a"));
  CHECK(layers[1] == parse_divisor("b"));
  CHECK(layers[2] == parse_divisor("c"));
  CHECK(compose({parse_divisor("a"), parse_divisor("b"), parse_divisor("c")}) == parse_divisor("a:1,b:2,c:3"));
  CHECK_THROWS_AS(compose({parse_divisor("a"), parse_divisor("a")}), UsageError);
  CHECK_THROWS_AS(compose({parse_divisor("a:2")}), UsageError);
  // An empty middle layer is allowed.
  CHECK(compose({parse_divisor("a"), BranchDivisor{}, parse_divisor("c")}) == parse_divisor("a,c:3"));
}

TEST_CASE("universal divisor membership") {
  auto D = parse_divisor("a:2,b:1");
  CHECK(in_universal_divisor("a", D));
  CHECK_FALSE(in_universal_divisor("c", D));
  CHECK_FALSE(in_universal_divisor("y0", parse_divisor("p1,p2")));
}

TEST_CASE("random divisors: roundtrips and degree bookkeeping") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(0, 6), mult(1, 4);
  int tested = 0;
  while (tested < 1000) {
    std::vector<BranchDivisor::Entry> entries;
    std::size_t degree = 0;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) {
      std::size_t m = static_cast<std::size_t>(mult(rng));
      if (degree + m > 12) break;
      entries.emplace_back("q" + std::to_string(i), m);
      degree += m;
    }
    BranchDivisor D(entries);
    const auto layers = decompose(D);
    CHECK(compose(layers) == D);
    CHECK(decompose(compose(layers)) == layers);
    std::size_t support = 0;
    for (const auto& l : layers) support += l.support_size();
    CHECK(partition_of(compose(layers)).length() == support);
    CHECK(partition_of(D).n() == D.degree());
    CHECK(parse_divisor(D.to_string()) == D);
    ++tested;
  }
}
