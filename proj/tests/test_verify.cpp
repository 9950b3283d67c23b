#include <catch_amalgamated.hpp>

#include "endosimplex/verify.hpp"

using namespace endosimplex;

TEST_CASE("suite names", "[verify]") {
  CHECK(parse_suite("strata") == Suite::strata);
  CHECK(parse_suite("all") == Suite::all);
  CHECK_FALSE(parse_suite("everything"));
  CHECK_THROWS_AS(verify(Suite::counts, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(verify(Suite::counts, max_verify_n + 1, 1), std::out_of_range);
}

TEST_CASE("every suite passes at n <= 5", "[verify]") {
  auto const report = verify(Suite::all, 5, 1);
  for (auto const& c : report.claims) {
    INFO(c.id << ": " << c.counterexample);
    CHECK(c.passed);
  }
  CHECK(report.ok());
}

TEST_CASE("claim ids are unique and module-scoped", "[verify]") {
  auto const report = verify(Suite::all, 3, 1);
  std::set<std::string> ids;
  for (auto const& c : report.claims) {
    CHECK(ids.insert(c.id).second);
    auto const module = c.id.substr(0, c.id.find('.'));
    CHECK((module == "chain" || module == "simplex" || module == "strata" || module == "typemap"
           || module == "counts"));
  }
}

TEST_CASE("reports are deterministic without timing", "[verify]") {
  auto const a = to_json(verify(Suite::typemap, 4, 42)).dump();
  auto const b = to_json(verify(Suite::typemap, 4, 42)).dump();
  CHECK(a == b);
  CHECK(a.find("elapsed_ms") == std::string::npos);
  CHECK(to_json(verify(Suite::counts, 3, 1), true).dump().find("elapsed_ms") != std::string::npos);
}

TEST_CASE("informational entries do not count", "[verify]") {
  auto const report = verify(Suite::strata, 5, 1);
  auto const it = std::find_if(report.claims.begin(), report.claims.end(),
                               [](auto const& c) { return c.id == "strata.I-add-closure"; });
  REQUIRE(it != report.claims.end());
  CHECK(it->informational);
  CHECK(it->counterexample.find("sigma^(5){1,2,3}") != std::string::npos);
  CHECK(report.ok());
}

TEST_CASE("the IC additive failure surfaces at n = 6", "[verify][slow]") {
  auto const report = verify(Suite::typemap, 6, 1);
  auto const it = std::find_if(report.claims.begin(), report.claims.end(), [](auto const& c) {
    return c.id == "typemap.partition-contracts";
  });
  REQUIRE(it != report.claims.end());
  CHECK_FALSE(it->passed);
  CHECK(it->counterexample.find("IC[2,2,2,5,5,5]") != std::string::npos);
}

TEST_CASE("generated subsemirings are closed", "[verify]") {
  std::mt19937_64 rng(3);
  auto const c = enumerate(full_simplex(4));
  for (int i = 0; i < 20; ++i) {
    auto const R = verify_detail::random_closed_subset(c, rng);
    CHECK(closure_check(R, c).subsemiring());
  }
}
