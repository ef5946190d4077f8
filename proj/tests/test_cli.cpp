#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hurwitz/cli.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/text_io.hpp"
#include "json.hpp"

using namespace hurwitz;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("count") {
  auto j = run_json({"count", "--group", "S3", "--n", "3"});
  CHECK(j["pointed"] == 18);
  CHECK(j["unpointed"] == 3);
  CHECK(j["order"] == 6);
  CHECK(j["by_type"].size() == 1);

  CHECK(run_json({"count", "--group", "C2", "--n", "2"})["pointed"] == 1);
  CHECK(run_json({"count", "--group", "C2", "--n", "3"})["pointed"] == 0);
  CHECK(run_json({"count", "--perms", "(1 2), (1 2 3)", "--n", "3"})["pointed"] == 18);
  CHECK(run_json({"count", "--group", "S3", "--n", "4", "--type", "T,T,T,T"})["pointed"] == 24);
  CHECK(run_json({"count", "--group", "C4", "--genus", "1", "--n", "2"})["pointed"] == 44);

  auto text = run({"count", "--group", "S3", "--n", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("18") != std::string::npos);
}

TEST_CASE("orbits") {
  auto j = run_json({"orbits", "--group", "S3", "--n", "4", "--type", "T,T,T,T"});
  CHECK(j["fiber_size"] == 24);
  REQUIRE(j["orbits"].size() == 1);
  CHECK(j["orbits"][0]["size"] == 24);
  auto u = run_json({"orbits", "--group", "S3", "--n", "4", "--scope", "unpointed"});
  CHECK(u["scope"] == "unpointed");

  auto r = run({"orbits", "--group", "C4", "--genus", "1", "--n", "2"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("genus > 0") != std::string::npos);
}

TEST_CASE("genus, types, strata, cover, catalog") {
  auto g = run_json({"genus", "--group", "C2", "--n", "6"});
  REQUIRE(g["rows"].size() == 1);
  CHECK(g["rows"][0]["genus"] == 2);
  CHECK(g["rows"][0]["euler_characteristic"] == -2);

  auto t = run_json({"types", "--group", "S3", "--n", "4"});
  CHECK(t.contains("classes"));

  auto s = run_json({"strata", "a:1,b:2,c:3"});
  CHECK(s["partition"] == json::array({3, 2, 1}));
  CHECK(s["dimension"] == 3);

  auto c = run_json({"cover", "--group", "S3", "[| (1 2),(1 3),(1 3 2)]"});
  CHECK(c["genus"] == 0);
  CHECK(c["euler_characteristic"] == 2);
  CHECK(run({"cover", "--group", "S3", "[| (1 2),(1 3),(1 2 3)]"}).code == kExitSuiteFailure);

  auto q = run_json({"catalog", "--group", "Q8"});
  CHECK(q["center"] == 2);
  CHECK(q["classes"].size() == 5);
  CHECK(run({"catalog"}).out.find("S<k>") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"count", "--group", "X9", "--n", "3"}).code == kExitUsage);
  CHECK(run({"count", "--group", "S3"}).code == kExitUsage);
  CHECK(run({"count", "--group", "S3", "--perms", "(1 2)", "--n", "2"}).code == kExitUsage);
  CHECK(run({"count", "--group", "S3", "--n", "3", "--type", "T,T,C5"}).code == kExitUsage);
  CHECK(run({"count", "--group", "S3", "--n", "3", "--type", "T,T"}).code == kExitUsage);
  CHECK(run({"count", "--perms", "(1 2", "--n", "2"}).code == kExitUsage);
  CHECK(run({"strata", "a,a"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"check"}).code == kExitUsage);
  CHECK(run({"check", "--family", "/nonexistent/family.json"}).code == kExitUsage);
  auto junk = write_temp("hurwitz_junk.json", "{ not json");
  CHECK(run({"check", "--family", junk.string()}).code == kExitUsage);
}

TEST_CASE("work cap exits with 3") {
  CHECK(run({"count", "--group", "S4", "--n", "5", "--cap", "1000"}).code == kExitCap);
  CHECK(run({"count", "--group", "S9", "--n", "3"}).code == kExitCap);
  setenv("HURWITZ_CAP", "1000", 1);
  CHECK(run({"count", "--group", "S4", "--n", "5"}).code == kExitCap);
  unsetenv("HURWITZ_CAP");
  CHECK(run({"count", "--group", "S4", "--n", "5"}).code == 0);
}

TEST_CASE("check runs the suites") {
  auto r = run({"check", "--group", "S3", "--n", "3", "--seed", "3", "--families", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all suites passed") != std::string::npos);
  auto j = run_json({"check", "--group", "C4", "--genus", "1", "--n", "2", "--families", "5"});
  CHECK(j["passed"] == true);
}

TEST_CASE("check --family") {
  auto G = share(catalog_group("S3"));
  auto fiber = enumerate_tuples(G, 0, 3);
  PointedFamily F;
  F.base = FiniteBase::connected({"a", "b"});
  F.assignment.emplace("a", MonodromyInvariant(parse_divisor("p1,p2,p3"), fiber[0]));
  F.assignment.emplace("b", MonodromyInvariant(parse_divisor("p1,p2,p3"), fiber[7]));
  GroupSpec spec{"S3", std::nullopt};
  auto good = family_to_json(spec, 0, 3, F);
  auto loaded = family_from_json(good);
  CHECK(loaded.family.base == F.base);
  for (const auto& [p, inv] : F.assignment) {
    const auto& back = loaded.family.assignment.at(p);
    CHECK(back.divisor == inv.divisor);
    CHECK(back.tuple.to_string() == inv.tuple.to_string());
  }

  auto path = write_temp("hurwitz_good.json", good.dump());
  CHECK(run({"check", "--family", path.string()}).code == 0);

  // A tuple violating the product relation must fail the suite.
  auto bad = good;
  bad["assignment"]["b"]["tuple"] = bad["assignment"]["a"]["tuple"];
  std::swap(bad["assignment"]["b"]["tuple"][0], bad["assignment"]["b"]["tuple"][1]);
  auto bad_path = write_temp("hurwitz_bad.json", bad.dump());
  auto r = run({"check", "--family", bad_path.string()});
  CHECK(r.code == kExitSuiteFailure);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("output is deterministic across runs and thread counts") {
  for (const std::vector<std::string>& base : std::vector<std::vector<std::string>>{
           {"count", "--group", "S4", "--n", "4"},
           {"orbits", "--group", "S4", "--n", "4"},
           {"types", "--group", "A4", "--n", "3"},
           {"genus", "--group", "D4", "--n", "4"}}) {
    auto args = base;
    args.push_back("--json");
    const auto ref = run(args).out;
    CHECK(run(args).out == ref);
    for (const char* t : {"2", "5"}) {
      auto a = args;
      a.push_back("--threads");
      a.push_back(t);
      CHECK(run(a).out == ref);
    }
  }
}
