#include <catch_amalgamated.hpp>

#include <set>

#include "endosimplex/simplex.hpp"
#include "endosimplex/strata.hpp"
#include "oracle.hpp"

using namespace endosimplex;

namespace {

std::vector<oracle::Tuple> members(EndoSet const& set) {
  std::vector<oracle::Tuple> out;
  for (auto const& e : set) out.emplace_back(e.begin(), e.end());
  return out;
}

}  // namespace

TEST_CASE("make_simplex validates vertices", "[simplex]") {
  CHECK(make_simplex(5, {1, 3}).dimension() == 2);
  CHECK_THROWS_AS(make_simplex(0, {0}), invalid_simplex);
  CHECK_THROWS_AS(make_simplex(3, {}), invalid_simplex);
  CHECK_THROWS_AS(make_simplex(3, {3}), invalid_simplex);
  CHECK_THROWS_AS(make_simplex(3, {2, 1}), invalid_simplex);
  CHECK_THROWS_AS(make_simplex(3, {1, 1}), invalid_simplex);
}

TEST_CASE("enumeration matches the recursive oracle", "[simplex]") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (auto const& s : faces(full_simplex(n))) {
      REQUIRE(members(enumerate(s)) == oracle::monotone_maps(n, s.vertices()));
    }
  }
}

TEST_CASE("cardinality is binom(n+k-1, n)", "[simplex]") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (auto const& s : faces(full_simplex(n))) {
      auto const expected = oracle::pascal(n + s.dimension() - 1, n);
      REQUIRE(cardinality(s) == expected);
      REQUIRE(enumerate(s).size() == expected);
    }
  }
  CHECK(cardinality(make_simplex(10, {0, 2, 3, 5, 8})) == 1001);
  CHECK(cardinality(full_simplex(30)) == oracle::pascal(59, 30));
}

TEST_CASE("small enumerations", "[simplex]") {
  auto const set = enumerate(make_simplex(4, {0, 2}));
  std::vector<oracle::Tuple> const expected{
      {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 2}, {0, 2, 2, 2}, {2, 2, 2, 2}};
  CHECK(members(set) == expected);
  auto const single = enumerate(make_simplex(3, {1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == constant(3, 1));
}

TEST_CASE("enumeration cap", "[simplex]") {
  CHECK_THROWS_AS(enumerate(full_simplex(12)), size_limit_exceeded);
  CHECK_THROWS_AS(enumerate(full_simplex(6), 100), size_limit_exceeded);
  CHECK(enumerate(full_simplex(6), 462).size() == 462);
}

TEST_CASE("faces are ordered by size, then lexicographically", "[simplex]") {
  auto const fs = faces(make_simplex(5, {0, 2, 4}));
  REQUIRE(fs.size() == 7);
  CHECK(fs[0].vertices() == std::vector<element>{0});
  CHECK(fs[2].vertices() == std::vector<element>{4});
  CHECK(fs[3].vertices() == std::vector<element>{0, 2});
  CHECK(fs[6].vertices() == std::vector<element>{0, 2, 4});
  CHECK(faces(make_simplex(5, {0, 2, 4}), 2).size() == 3);
  // least face drops the top vertex, biggest face drops the bottom one
  CHECK(least_face(make_simplex(5, {0, 2, 4})).vertices() == std::vector<element>{0, 2});
  CHECK(biggest_face(make_simplex(5, {0, 2, 4})).vertices() == std::vector<element>{2, 4});
}

TEST_CASE("boundary and interior", "[simplex]") {
  auto const s = make_simplex(4, {0, 2});
  auto const in = interior(s);
  CHECK(members(in) == std::vector<oracle::Tuple>{{0, 0, 0, 2}, {0, 0, 2, 2}, {0, 2, 2, 2}});
  CHECK(members(boundary(s)) == std::vector<oracle::Tuple>{{0, 0, 0, 0}, {2, 2, 2, 2}});
  CHECK(boundary(make_simplex(4, {1})).empty());
  for (unsigned n = 1; n <= 6; ++n) {
    auto const in_full = interior(full_simplex(n));
    REQUIRE(in_full.size() == 1);
    REQUIRE(is_identity(in_full[0]));
  }
}

TEST_CASE("internal simplices", "[simplex]") {
  CHECK(is_internal(make_simplex(5, {1, 3})));
  CHECK_FALSE(is_internal(make_simplex(5, {0, 3})));
  CHECK_FALSE(is_internal(make_simplex(5, {1, 4})));
  CHECK(is_internal_face(make_simplex(6, {2, 3}), make_simplex(6, {1, 2, 3, 4})));
  CHECK_FALSE(is_internal_face(make_simplex(6, {1, 3}), make_simplex(6, {1, 2, 3, 4})));
  CHECK_THROWS(is_internal_face(make_simplex(6, {0}), make_simplex(6, {1, 2})));
}

TEST_CASE("faces are left ideals but not right ideals", "[simplex][ideal]") {
  auto const s = make_simplex(5, {0, 2, 4});
  auto const carrier = enumerate(s);
  for (auto const& f : faces(s)) {
    auto const r = closure_check(embed(enumerate(f), s), carrier);
    CHECK(r.subsemiring());
    CHECK(r.left_ideal);
    if (f != s) {
      CHECK_FALSE(r.right_ideal);
    }
  }
  // A vertex v-bar absorbs only on the left: const_0 * const_4 = const_4.
  auto const vertex0 = embed(enumerate(make_simplex(5, {0})), s);
  auto const r = closure_check(vertex0, carrier);
  REQUIRE(r.right_witness);
  CHECK(compose(r.right_witness->lhs, r.right_witness->rhs) == r.right_witness->result);
}

TEST_CASE("extreme faces and fixed-point subsemirings", "[simplex]") {
  for (unsigned n = 2; n <= 6; ++n) {
    auto const full = full_simplex(n);
    auto const all = enumerate(full);
    auto const top = set_difference(all, embed(enumerate(biggest_face(full)), full));
    auto const fixed0 = all.filter([](Endo const& e) { return e(0) == 0; });
    REQUIRE(top == fixed0);
    REQUIRE(fixed_subsemiring(full, 0) == fixed0);
  }
}

TEST_CASE("middle-face complement is not closed", "[simplex]") {
  auto const full = full_simplex(5);
  auto const all = enumerate(full);
  auto const rest = set_difference(all, embed(enumerate(make_simplex(5, {0, 1, 3, 4})), full));
  auto const r = closure_check(rest, all);
  CHECK_FALSE(r.mul_closed);
  auto const alpha = make_endo(5, {0, 0, 0, 0, 2});
  CHECK(rest.contains(alpha));
  CHECK_FALSE(rest.contains(alpha * alpha));
}

TEST_CASE("EndoSet rejects foreign members", "[simplex]") {
  auto const s = make_simplex(3, {0, 2});
  CHECK_THROWS_AS(EndoSet(s, {make_endo(3, {0, 1, 2})}), invalid_endo);
  EndoSet set(s, {constant(3, 2), constant(3, 0), constant(3, 2)});
  CHECK(set.size() == 2);
  CHECK(set[0] == constant(3, 0));
}
