#include <catch_amalgamated.hpp>

#include <set>

#include "endosimplex/strata.hpp"
#include "oracle.hpp"

using namespace endosimplex;

namespace {

using oracle::Tuple;

// Direct translation of the closure definitions over plain tuples.
struct Verdicts {
  bool add = true, mul = true, left = true, right = true;
};

Verdicts brute(std::set<Tuple> const& s, std::vector<Tuple> const& ambient) {
  Verdicts v;
  for (auto const& x : s) {
    for (auto const& y : s) {
      v.add = v.add && s.count(oracle::join(x, y));
      v.mul = v.mul && s.count(oracle::then(x, y));
    }
    for (auto const& phi : ambient) {
      v.left = v.left && s.count(oracle::then(phi, x));
      v.right = v.right && s.count(oracle::then(x, phi));
    }
  }
  return v;
}

std::set<Tuple> tuples(EndoSet const& set) {
  std::set<Tuple> out;
  for (auto const& e : set) out.emplace(e.begin(), e.end());
  return out;
}

std::size_t hits(Tuple const& t, std::uint32_t v) {
  return std::count(t.begin(), t.end(), v);
}

}  // namespace

TEST_CASE("layers and neighborhoods match their definitions", "[strata]") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (auto const& s : faces(full_simplex(n))) {
      auto const c = enumerate(s);
      auto const maps = oracle::monotone_maps(n, s.vertices());
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        auto const v = s.vertex(m);
        for (std::size_t count = 0; count <= n; ++count) {
          std::set<Tuple> expected;
          for (auto const& t : maps) {
            if (hits(t, v) == count) expected.insert(t);
          }
          REQUIRE(tuples(layer(c, m, count)) == expected);
        }
        for (std::size_t t = 0; t <= n; ++t) {
          std::set<Tuple> expected;
          for (auto const& tu : maps) {
            if (hits(tu, v) >= n - t) expected.insert(tu);
          }
          REQUIRE(tuples(neighborhood(c, m, t)) == expected);
        }
      }
    }
  }
}

TEST_CASE("neighborhood of radius zero is the vertex constant", "[strata]") {
  auto const s = make_simplex(5, {1, 3});
  auto const dn = neighborhood(s, 1, 0);
  REQUIRE(dn.size() == 1);
  CHECK(dn[0] == constant(5, 3));
  CHECK_THROWS_AS(neighborhood(s, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(neighborhood(s, 0, 6), std::out_of_range);
  CHECK_THROWS_AS(layer(s, 0, 6), std::out_of_range);
}

TEST_CASE("closure_check agrees with the brute-force verdicts", "[strata][closure]") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (auto const& s : faces(full_simplex(n))) {
      auto const c = enumerate(s);
      auto const ambient = oracle::monotone_maps(n, s.vertices());
      std::vector<EndoSet> candidates{union_neighborhoods(c, 1), union_neighborhoods(c, 2),
                                      interior(s), boundary(s)};
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        candidates.push_back(layer(c, m, n / 2));
        candidates.push_back(neighborhood(c, m, 1));
      }
      for (auto const& cand : candidates) {
        auto const r = closure_check(cand, c);
        auto const b = brute(tuples(cand), ambient);
        REQUIRE(r.add_closed == b.add);
        REQUIRE(r.mul_closed == b.mul);
        REQUIRE(r.left_ideal == b.left);
        REQUIRE(r.right_ideal == b.right);
        REQUIRE(r.ideal == (b.left && b.right));
        for (auto kind : {ClosureKind::add, ClosureKind::mul, ClosureKind::left_ideal,
                          ClosureKind::right_ideal}) {
          if (auto const& w = r.witness(kind)) {
            REQUIRE(witness_reproduces(*w, kind, cand, c));
          }
        }
      }
    }
  }
}

TEST_CASE("witnesses are the least failing pair", "[strata][closure]") {
  auto const s = make_simplex(4, {0, 1, 2});
  auto const c = enumerate(s);
  auto const J = union_neighborhoods(c, 1);
  auto const r = closure_check(J, c);
  REQUIRE_FALSE(r.add_closed);
  CHECK(r.add_witness->lhs == make_endo(4, {0, 0, 0, 2}));
  CHECK(r.add_witness->rhs == make_endo(4, {0, 1, 1, 1}));
  CHECK(r.add_witness->result == make_endo(4, {0, 1, 1, 2}));
  CHECK(r.right_ideal);
}

TEST_CASE("witness_reproduces rejects a tampered witness", "[strata][closure]") {
  auto const s = make_simplex(3, {0, 2});
  auto const c = enumerate(s);
  auto const v0 = embed(enumerate(make_simplex(3, {0})), s);
  auto const r = closure_check(v0, c);
  REQUIRE(r.right_witness);
  auto w = *r.right_witness;
  CHECK(witness_reproduces(w, ClosureKind::right_ideal, v0, c));
  w.result = constant(3, 0);
  CHECK_FALSE(witness_reproduces(w, ClosureKind::right_ideal, v0, c));
  CHECK_FALSE(witness_reproduces(*r.right_witness, ClosureKind::add, v0, c));
}

TEST_CASE("closure_check re-homes a face set onto its ambient simplex", "[strata][closure]") {
  auto const s = make_simplex(4, {0, 1, 3});
  auto const face = enumerate(make_simplex(4, {1, 3}));
  auto const r = closure_check(face, enumerate(s));
  CHECK(r.left_ideal);
  CHECK_FALSE(r.right_ideal);
  CHECK_THROWS_AS(closure_check(enumerate(make_simplex(4, {2})), enumerate(s)), invalid_endo);
}

TEST_CASE("internal DN1 is commutative and nilpotent", "[strata]") {
  auto const s = make_simplex(6, {1, 2, 4});
  auto const c = enumerate(s);
  for (std::size_t m = 0; m < 3; ++m) {
    auto const report = dn_properties(c, m);
    CHECK(report.dn1.subsemiring());
    CHECK(report.dn1.commutative);
    CHECK(report.dn1.all_nilpotent);
    REQUIRE(report.dn2);
    CHECK(report.dn2->subsemiring());
  }
  CHECK_FALSE(dn_properties(make_simplex(4, {0, 2}), 0).dn2);
}

TEST_CASE("J and I are right ideals; two-sided on internal simplices", "[strata]") {
  auto const internal = enumerate(make_simplex(7, {2, 3, 4}));
  auto const J = closure_check(union_neighborhoods(internal, 1), internal);
  auto const I = closure_check(union_neighborhoods(internal, 2), internal);
  CHECK(J.ideal);
  CHECK(I.ideal);
  auto const boundary_touching = enumerate(make_simplex(4, {0, 2}));
  auto const Jb = closure_check(union_neighborhoods(boundary_touching, 1), boundary_touching);
  CHECK(Jb.right_ideal);
}

TEST_CASE("I can fail additive closure on an internal simplex", "[strata]") {
  auto const c = enumerate(make_simplex(5, {1, 2, 3}));
  auto const r = closure_check(union_neighborhoods(c, 2), c);
  CHECK_FALSE(r.add_closed);
  CHECK(r.right_ideal);
  CHECK(r.left_ideal);
}

TEST_CASE("extreme neighborhoods are fixed-point sets", "[strata]") {
  auto const s = make_simplex(7, {1, 3, 5});
  auto const c = enumerate(s);
  auto const least = neighborhood(c, 0, 7 - 1 - 1);
  auto const greatest = neighborhood(c, 2, 5);
  CHECK(least == c.filter([](Endo const& e) { return e(1) == 1; }));
  CHECK(greatest == c.filter([](Endo const& e) { return e(5) == 5; }));
}
