#pragma once

// Exhaustive verification suites. Every claim sweeps all simplices (all
// nonempty vertex sets of C_n) over an n-range and reports the first
// counterexample it meets. Claims are identified by stable ids of the form
// <module>.<property>; see README.md for the table of ids.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "endosimplex/endo.hpp"
#include "endosimplex/serialize.hpp"
#include "endosimplex/simplex.hpp"
#include "endosimplex/strata.hpp"
#include "endosimplex/typemap.hpp"

namespace endosimplex {

enum class Suite { axioms, simplex, strata, typemap, counts, all };

inline std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "axioms") return Suite::axioms;
  if (name == "simplex") return Suite::simplex;
  if (name == "strata") return Suite::strata;
  if (name == "typemap") return Suite::typemap;
  if (name == "counts") return Suite::counts;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

inline char const* to_string(Suite s) {
  switch (s) {
    case Suite::axioms: return "axioms";
    case Suite::simplex: return "simplex";
    case Suite::strata: return "strata";
    case Suite::typemap: return "typemap";
    case Suite::counts: return "counts";
    case Suite::all: return "all";
  }
  return "?";
}

inline constexpr unsigned max_verify_n = 8;

struct ClaimResult {
  std::string id;
  std::string range;
  bool passed = false;
  bool informational = false;  // observed behaviour, not counted as pass/fail
  std::string counterexample;  // or the observation, for informational entries
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  unsigned max_n = 0;
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;

  std::size_t passed() const {
    return std::count_if(claims.begin(), claims.end(),
                         [](auto const& c) { return !c.informational && c.passed; });
  }
  std::size_t failed() const {
    return std::count_if(claims.begin(), claims.end(),
                         [](auto const& c) { return !c.informational && !c.passed; });
  }
  bool ok() const { return failed() == 0; }
};

inline json to_json(VerificationReport const& r, bool with_timing = false) {
  json j;
  j["suite"] = r.suite;
  j["max_n"] = r.max_n;
  j["seed"] = r.seed;
  json claims = json::array();
  for (auto const& c : r.claims) {
    json e;
    e["id"] = c.id;
    e["range"] = c.range;
    e["verdict"] = c.informational ? "info" : (c.passed ? "pass" : "fail");
    if (!c.counterexample.empty()) {
      e[c.informational ? "observation" : "counterexample"] = c.counterexample;
    }
    if (with_timing) {
      e["elapsed_ms"] = c.elapsed_ms;
    }
    claims.push_back(std::move(e));
  }
  j["claims"] = std::move(claims);
  j["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}, {"ok", r.ok()}};
  return j;
}

namespace verify_detail {

using Outcome = std::optional<std::string>;  // counterexample, empty on success

inline std::string show(Endo const& e) { return format_endo(e, Notation::run_length); }

inline std::string show(Simplex const& s) {
  std::string out = "sigma^(" + std::to_string(s.chain_size()) + "){";
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    out += (i ? "," : "") + std::to_string(s.vertex(i));
  }
  return out + "}";
}

inline std::string show(Witness const& w, char op) {
  return show(w.lhs) + " " + op + " " + show(w.rhs) + " = " + show(w.result);
}

inline std::string range(unsigned lo, unsigned hi) {
  return lo > hi ? "empty" : "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

/// Calls f(simplex, carrier) for every simplex with lo <= n <= hi; stops at the
/// first counterexample.
template <class F>
Outcome each_simplex(unsigned lo, unsigned hi, F&& f) {
  for (unsigned n = std::max(lo, 1u); n <= hi; ++n) {
    for (auto const& s : faces(full_simplex(n))) {
      auto const carrier = enumerate(s);
      if (auto bad = f(s, carrier)) {
        return show(s) + ": " + *bad;
      }
    }
  }
  return std::nullopt;
}

template <class F>
Outcome each_endo(unsigned lo, unsigned hi, F&& f) {
  for (unsigned n = std::max(lo, 1u); n <= hi; ++n) {
    for (auto const& e : enumerate(full_simplex(n))) {
      if (auto bad = f(e)) {
        return "n=" + std::to_string(n) + ": " + *bad;
      }
    }
  }
  return std::nullopt;
}

inline Outcome expect(bool ok, std::string const& what) {
  return ok ? std::nullopt : Outcome(what);
}

/// Closure of a generating set under + and *, inside the carrier.
inline EndoSet generated_subsemiring(EndoSet const& carrier, std::vector<Endo> gens) {
  std::set<Endo> seen(gens.begin(), gens.end());
  std::vector<Endo> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Endo> next;
    std::vector<Endo> const snapshot(seen.begin(), seen.end());
    for (auto const& x : frontier) {
      for (auto const& y : snapshot) {
        for (auto const& r : {add(x, y), compose(x, y), compose(y, x)}) {
          if (seen.insert(r).second) {
            next.push_back(r);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return EndoSet(carrier.simplex(), std::vector<Endo>(seen.begin(), seen.end()));
}

/// 1-3 random generators drawn from the carrier, closed under + and *.
inline EndoSet random_closed_subset(EndoSet const& carrier, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, carrier.size() - 1);
  std::vector<Endo> gens;
  for (auto i = count(rng); i > 0; --i) {
    gens.push_back(carrier[pick(rng)]);
  }
  return generated_subsemiring(carrier, std::move(gens));
}

inline bool same_verdicts(ClosureReport const& a, ClosureReport const& b) {
  return a.add_closed == b.add_closed && a.mul_closed == b.mul_closed
         && a.left_ideal == b.left_ideal && a.right_ideal == b.right_ideal;
}

inline std::string verdicts(ClosureReport const& r) {
  return std::string("add=") + (r.add_closed ? "1" : "0") + " mul=" + (r.mul_closed ? "1" : "0")
         + " left=" + (r.left_ideal ? "1" : "0") + " right=" + (r.right_ideal ? "1" : "0");
}

inline Outcome witnesses_reproduce(ClosureReport const& r, EndoSet const& candidate,
                                   EndoSet const& ambient) {
  for (auto kind : {ClosureKind::add, ClosureKind::mul, ClosureKind::left_ideal,
                    ClosureKind::right_ideal}) {
    if (auto const& w = r.witness(kind)) {
      if (!witness_reproduces(*w, kind, candidate, ambient)) {
        return std::string("unsound ") + to_string(kind) + " witness";
      }
    }
  }
  return std::nullopt;
}

struct Claim {
  std::string id;
  std::string range;
  std::function<Outcome()> run;
  bool informational = false;
};

// ---------------------------------------------------------------------------

inline std::vector<Claim> axiom_claims(unsigned max_n) {
  std::vector<Claim> out;
  auto const n5 = std::min(max_n, 5u);
  auto const n4 = std::min(max_n, 4u);

  out.push_back({"chain.closure", range(1, n5), [n5] {
    for (unsigned n = 1; n <= n5; ++n) {
      auto const all = enumerate(full_simplex(n));
      for (auto const& a : all) {
        for (auto const& b : all) {
          for (auto const& r : {add(a, b), compose(a, b)}) {
            try {
              make_endo(n, std::vector<element>(r.begin(), r.end()));
            } catch (invalid_endo const&) {
              return Outcome(show(a) + " with " + show(b) + " leaves the endomorphisms");
            }
          }
        }
      }
    }
    return Outcome{};
  }});

  out.push_back({"chain.semiring-axioms", range(1, n4), [n4] {
    for (unsigned n = 1; n <= n4; ++n) {
      auto const all = enumerate(full_simplex(n));
      for (auto const& x : all) {
        for (auto const& y : all) {
          if (x + y != y + x) return Outcome("addition not commutative at " + show(x));
          if (x + x != x) return Outcome("addition not idempotent at " + show(x));
          for (auto const& z : all) {
            auto const where = show(x) + ", " + show(y) + ", " + show(z);
            if ((x + y) + z != x + (y + z)) return Outcome("+ not associative: " + where);
            if ((x * y) * z != x * (y * z)) return Outcome("* not associative: " + where);
            if (x * (y + z) != x * y + x * z) return Outcome("left distributivity: " + where);
            if ((x + y) * z != x * z + y * z) return Outcome("right distributivity: " + where);
          }
        }
      }
    }
    return Outcome{};
  }});

  out.push_back({"chain.composition-order", "n=10 worked example", [] {
    auto const alpha = parse_endo("0_4 2_2 8_4", 10);
    auto const beta = parse_endo("0_3 2_2 3_3 8_2", 10);
    for (element x = 0; x < 10; ++x) {
      if (compose(alpha, beta)(x) != beta(alpha(x))) return Outcome("convention broken");
    }
    if (alpha * alpha != parse_endo("0_6 8_4", 10)) return Outcome("alpha^2");
    if (beta * beta != parse_endo("0_5 2_3 8_2", 10)) return Outcome("beta^2");
    if (power(beta, 3) != parse_endo("0_8 8_2", 10)) return Outcome("beta^3");
    if (alpha * beta != parse_endo("0_6 8_4", 10)) return Outcome("alpha*beta");
    if (beta * alpha != parse_endo("0_8 8_2", 10)) return Outcome("beta*alpha");
    return Outcome{};
  }});

  out.push_back({"chain.power-stabilization", range(1, n5), [n5] {
    return each_endo(1, n5, [](Endo const& a) -> Outcome {
      for (unsigned m = 1; m <= a.size(); ++m) {
        auto const p = power(a, m);
        if (power(a, 2 * m) == p && is_idempotent(p)) {
          return std::nullopt;
        }
      }
      return show(a) + " has no idempotent power with exponent <= n";
    });
  }});

  out.push_back({"chain.nilpotency-consistency", range(1, std::min(max_n, 6u)), [max_n] {
    return each_endo(1, std::min(max_n, 6u), [](Endo const& a) -> Outcome {
      auto const nil = nilpotency(a);
      auto const ev = eventual_idempotent(a);
      if (nil.has_value() != is_constant(ev.idempotent)) {
        return show(a) + ": nilpotency disagrees with eventual idempotent";
      }
      if (nil && power(a, nil->index) != constant(a.size(), nil->value)) {
        return show(a) + ": nilpotency index wrong";
      }
      return std::nullopt;
    });
  }});

  out.push_back({"chain.notation-roundtrip", range(1, n5), [n5] {
    return each_endo(1, n5, [](Endo const& a) -> Outcome {
      for (auto style : {Notation::tuple, Notation::run_length}) {
        if (parse_endo(format_endo(a, style), a.size()) != a) {
          return show(a) + " does not round-trip";
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"chain.endo-count", range(1, max_n), [max_n] {
    for (unsigned n = 1; n <= max_n; ++n) {
      auto const count = enumerate(full_simplex(n)).size();
      if (count != binomial(2 * n - 1, n)) {
        return Outcome("n=" + std::to_string(n) + ": " + std::to_string(count) + " endomorphisms");
      }
    }
    return Outcome{};
  }});
  return out;
}

inline std::vector<Claim> simplex_claims(unsigned max_n) {
  std::vector<Claim> out;
  auto const n6 = std::min(max_n, 6u);

  out.push_back({"simplex.cardinality", range(1, max_n), [max_n] {
    return each_simplex(1, max_n, [](Simplex const& s, EndoSet const& c) {
      return expect(c.size() == cardinality(s), "size " + std::to_string(c.size()));
    });
  }});

  out.push_back({"simplex.subsemiring", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) {
      auto const r = closure_check(c, full_simplex(s.chain_size()));
      return expect(r.subsemiring(), "not closed");
    });
  }});

  out.push_back({"simplex.faces-left-ideal", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      for (auto const& f : faces(s)) {
        auto const r = closure_check(embed(enumerate(f), s), c);
        if (!r.subsemiring() || !r.left_ideal) {
          return "face " + show(f) + ": " + verdicts(r);
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"simplex.faces-not-right-ideal", range(2, n6), [n6] {
    return each_simplex(2, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      auto const n = s.chain_size();
      for (auto const& f : faces(s)) {
        if (f.dimension() == s.dimension()) {
          continue;
        }
        auto const fset = embed(enumerate(f), s);
        auto const r = closure_check(fset, c);
        if (r.right_ideal || !r.right_witness
            || !witness_reproduces(*r.right_witness, ClosureKind::right_ideal, fset, c)) {
          return "face " + show(f) + " absorbs right multiplication";
        }
        // The explicit witness: constant b_0 times a missing vertex constant.
        for (auto a : s.vertices()) {
          if (!f.has_vertex(a)) {
            auto const product = compose(constant(n, f.vertex(0)), constant(n, a));
            if (fset.contains(product)) {
              return "face " + show(f) + ": vertex witness absorbed";
            }
          }
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"simplex.interior-add-closed", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) {
      auto const r = closure_check(interior(s), c);
      return expect(r.add_closed, r.add_witness ? show(*r.add_witness, '+') : "");
    });
  }});

  out.push_back({"simplex.boundary-mul-closed", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) {
      auto const b = boundary(s);
      auto const r = closure_check(b, c);
      auto const partition_ok = set_union(b, interior(s)) == c
                                && set_difference(b, interior(s)).size() == b.size();
      return expect(r.mul_closed && partition_ok, "boundary/interior");
    });
  }});

  out.push_back({"simplex.full-interior-identity", range(1, max_n), [max_n] {
    for (unsigned n = 1; n <= max_n; ++n) {
      auto const in = interior(full_simplex(n));
      if (in.size() != 1 || in[0] != identity(n)) {
        return Outcome("n=" + std::to_string(n));
      }
    }
    return Outcome{};
  }});

  out.push_back({"simplex.extreme-face-complements", range(2, n6), [n6] {
    for (unsigned n = 2; n <= n6; ++n) {
      auto const full = full_simplex(n);
      auto const all = enumerate(full);
      auto const top = set_difference(all, embed(enumerate(biggest_face(full)), full));
      auto const bottom = set_difference(all, embed(enumerate(least_face(full)), full));
      if (top != fixed_subsemiring(full, 0) || bottom != fixed_subsemiring(full, n - 1)) {
        return Outcome("n=" + std::to_string(n) + ": complement is not a fixed-point set");
      }
      if (!closure_check(top, all).subsemiring() || !closure_check(bottom, all).subsemiring()) {
        return Outcome("n=" + std::to_string(n) + ": complement not closed");
      }
    }
    return Outcome{};
  }});

  out.push_back({"simplex.middle-face-counterexample", range(3, max_n), [max_n] {
    for (unsigned n = 3; n <= max_n; ++n) {
      auto const full = full_simplex(n);
      auto const all = enumerate(full);
      for (element k = 1; k + 1 < n; ++k) {
        std::vector<element> verts;
        for (element v = 0; v < n; ++v) {
          if (v != k) verts.push_back(v);
        }
        auto const rest = set_difference(all, embed(enumerate(make_simplex(n, verts)), full));
        std::vector<element> a(n, 0);
        a.back() = k;
        auto const alpha = make_endo(n, a);
        auto const square = compose(alpha, alpha);
        auto const where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        if (!rest.contains(alpha) || square != constant(n, 0) || rest.contains(square)) {
          return Outcome(where + ": witness does not escape");
        }
        if (closure_check(rest, all).mul_closed) {
          return Outcome(where + ": complement is mul-closed");
        }
      }
    }
    return Outcome{};
  }});
  return out;
}

inline std::vector<Claim> strata_claims(unsigned max_n) {
  std::vector<Claim> out;
  auto const n6 = std::min(max_n, 6u);
  auto const n7 = std::min(max_n, 7u);

  out.push_back({"strata.layers-partition", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        std::size_t total = 0;
        for (std::size_t count = 0; count <= s.chain_size(); ++count) {
          auto const l = layer(c, m, count);
          total += l.size();
          auto const r = closure_check(l, c);
          if (!r.add_closed) {
            return "layer " + std::to_string(count) + " of vertex " + std::to_string(m)
                   + ": " + show(*r.add_witness, '+');
          }
        }
        if (total != c.size()) {
          return "layers of vertex " + std::to_string(m) + " do not partition";
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"strata.DN1-subsemiring", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        if (!closure_check(neighborhood(c, m, 1), c).subsemiring()) {
          return "DN1 of vertex " + std::to_string(m);
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"strata.J-right-ideal", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const&, EndoSet const& c) -> Outcome {
      auto const r = closure_check(union_neighborhoods(c, 1), c);
      return expect(r.right_ideal, r.right_witness ? show(*r.right_witness, '*') : "");
    });
  }});

  out.push_back({"strata.J-add-closure-profile", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      auto const r = closure_check(union_neighborhoods(c, 1), c);
      return expect(r.add_closed == (s.dimension() <= 2),
                    r.add_closed ? "J add-closed with k >= 3" : show(*r.add_witness, '+'));
    });
  }});

  out.push_back({"strata.DN1-internal-commutative-nilpotent", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      if (!is_internal(s)) return std::nullopt;
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        auto const p = neighborhood_properties(c, m, 1);
        if (!p.commutative || !p.all_nilpotent) {
          return "DN1 of vertex " + std::to_string(m);
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"strata.DN2-internal-subsemiring", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      if (!is_internal(s)) return std::nullopt;
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        if (!closure_check(neighborhood(c, m, 2), c).subsemiring()) {
          return "DN2 of vertex " + std::to_string(m);
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"strata.I-right-ideal", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      if (!is_internal(s)) return std::nullopt;
      auto const r = closure_check(union_neighborhoods(c, 2), c);
      return expect(r.right_ideal, r.right_witness ? show(*r.right_witness, '*') : "");
    });
  }});

  out.push_back({"strata.J-ideal-internal", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      if (!is_internal(s)) return std::nullopt;
      auto const r = closure_check(union_neighborhoods(c, 1), c);
      return expect(r.ideal, verdicts(r));
    });
  }});

  out.push_back({"strata.I-ideal-doubly-internal", range(1, n7), [n7] {
    return each_simplex(1, n7, [](Simplex const& s, EndoSet const& c) -> Outcome {
      if (s.least_vertex() < 2 || s.greatest_vertex() + 3 > s.chain_size()) return std::nullopt;
      auto const r = closure_check(union_neighborhoods(c, 2), c);
      return expect(r.ideal, verdicts(r));
    });
  }});

  out.push_back({"strata.fixed-point-neighborhoods", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      auto const n = s.chain_size();
      auto const a0 = s.least_vertex();
      auto const top = s.greatest_vertex();
      auto const least = neighborhood(c, 0, n - a0 - 1);
      auto const greatest = neighborhood(c, s.dimension() - 1, top);
      auto const fix_least = c.filter([&](Endo const& e) { return e(a0) == a0; });
      auto const fix_greatest = c.filter([&](Endo const& e) { return e(top) == top; });
      return expect(least == fix_least && greatest == fix_greatest, "set equality fails");
    });
  }});

  out.push_back({"strata.witness-soundness", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      std::vector<EndoSet> candidates{union_neighborhoods(c, 1)};
      if (s.chain_size() >= 2) candidates.push_back(union_neighborhoods(c, 2));
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        candidates.push_back(neighborhood(c, m, std::min<std::size_t>(2, s.chain_size())));
        candidates.push_back(layer(c, m, s.chain_size() / 2));
      }
      for (auto const& f : faces(s)) {
        candidates.push_back(embed(enumerate(f), s));
      }
      for (auto const& cand : candidates) {
        if (auto bad = witnesses_reproduce(closure_check(cand, c), cand, c)) {
          return bad;
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"strata.I-add-closure", range(1, n6), [n6] {
    std::size_t internal = 0;
    std::size_t failing = 0;
    std::string first;
    each_simplex(1, n6, [&](Simplex const& s, EndoSet const& c) -> Outcome {
      if (!is_internal(s)) return std::nullopt;
      ++internal;
      auto const r = closure_check(union_neighborhoods(c, 2), c);
      if (!r.add_closed) {
        if (failing++ == 0) first = show(s) + ": " + show(*r.add_witness, '+');
      }
      return std::nullopt;
    });
    return Outcome(std::to_string(failing) + " of " + std::to_string(internal)
                   + " internal simplices have I not add-closed"
                   + (first.empty() ? "" : "; first " + first));
  }, true});
  return out;
}

inline std::vector<Claim> typemap_claims(unsigned max_n, std::uint64_t seed) {
  std::vector<Claim> out;
  auto const n6 = std::min(max_n, 6u);
  auto const n5 = std::min(max_n, 5u);

  out.push_back({"typemap.type-homomorphism", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      std::vector<TypeSignature> types;
      for (auto const& e : c) types.push_back(type_of(s, e));
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
          if (type_of(s, c[i] + c[j]) != types[i] + types[j]
              || type_of(s, c[i] * c[j]) != types[i] * types[j]) {
            return show(c[i]) + ", " + show(c[j]);
          }
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"typemap.lift-closure", range(1, n5) + ", 100 random subsets each, seed "
                                            + std::to_string(seed),
                 [n5, seed] {
    std::mt19937_64 rng(seed);
    return each_simplex(1, n5, [&](Simplex const& s, EndoSet const& c) -> Outcome {
      auto const coord = enumerate(coordinate_simplex(s));
      std::vector<std::pair<std::string, EndoSet>> sets;
      for (auto const& f : faces(coordinate_simplex(s))) {
        sets.emplace_back("face " + show(f), embed(enumerate(f), coord.simplex()));
      }
      sets.emplace_back("coordinate J", union_neighborhoods(coord, 1));
      for (int i = 0; i < 100; ++i) {
        sets.emplace_back("random subset " + std::to_string(i), random_closed_subset(coord, rng));
      }
      for (auto const& [name, R] : sets) {
        auto const base = closure_check(R, coord);
        auto const lifted = closure_check(lift(c, R), c);
        if (!same_verdicts(base, lifted)) {
          return name + ": R " + verdicts(base) + " vs lift " + verdicts(lifted);
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"typemap.constant-type-ideal", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      // Each single constant type is a left ideal; all of them together form a
      // two-sided ideal (const_l * psi is the constant psi(l)).
      auto const k = s.dimension();
      std::vector<TypeSignature> all;
      for (element l = 0; l < k; ++l) {
        std::vector<TypeSignature> R{constant(k, l)};
        all.push_back(R.front());
        auto const r = closure_check(lift(c, R), c);
        if (!r.left_ideal || !r.subsemiring()) return "constant type " + std::to_string(l);
        if (k >= 2 && r.right_ideal) return "constant type " + std::to_string(l) + " absorbs right";
      }
      auto const r = closure_check(lift(c, all), c);
      return expect(r.ideal && r.subsemiring(), "union of constant types: " + verdicts(r));
    });
  }});

  out.push_back({"typemap.lift-J-right-ideal", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      auto const J = union_neighborhoods(enumerate(coordinate_simplex(s)), 1);
      return expect(closure_check(lift(c, J), c).right_ideal, "lift of J");
    });
  }});

  out.push_back({"typemap.nilpotent-blocks-lift", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const& c) -> Outcome {
      auto const p = partition(s);
      auto const coord = enumerate(coordinate_simplex(s));
      for (std::size_t l = 0; l < s.dimension(); ++l) {
        auto const N = coord.filter([&](Endo const& phi) {
          auto nil = nilpotency(phi);
          return nil && nil->value == l;
        });
        auto const it = p.blocks.find(NilpotentBlock{l});
        if (it == p.blocks.end() || it->second != lift(c, N)) {
          return "nilpotent block " + std::to_string(l);
        }
        if (!closure_check(it->second, c).subsemiring()) {
          return "nilpotent block " + std::to_string(l) + " not closed";
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"typemap.partition-contracts", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const&) -> Outcome {
      auto const p = partition(s);
      if (!p.disjoint || !p.covering) return std::string("blocks do not partition");
      for (auto const& [label, c] : p.checks) {
        if (!c.contract_met) {
          auto const& r = c.closure;
          std::string detail = verdicts(r);
          if (r.add_witness) detail += "; " + show(*r.add_witness, '+');
          return label_string(label, s) + ": " + detail;
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"typemap.idempotent-closure-union-subsemiring", range(1, n6), [n6] {
    return each_simplex(1, n6, [](Simplex const& s, EndoSet const&) -> Outcome {
      auto const p = partition(s);
      for (auto const& [label, c] : p.checks) {
        if (c.with_idempotent_type && !c.with_idempotent_type->subsemiring()) {
          return label_string(label, s);
        }
      }
      return std::nullopt;
    });
  }});

  out.push_back({"typemap.right-identities", range(1, std::min(max_n, 7u)), [max_n] {
    return each_simplex(1, std::min(max_n, 7u), [](Simplex const& s, EndoSet const& c) {
      auto const ri = right_identities(c);
      return expect(!ri.empty() && ri == interior_idempotents(c)
                        && ri.size() == right_identity_count(s),
                    std::to_string(ri.size()) + " right identities");
    });
  }});

  out.push_back({"typemap.no-left-identity", range(2, std::min(max_n, 7u)), [max_n] {
    return each_simplex(2, std::min(max_n, 7u), [](Simplex const& s, EndoSet const& c) -> Outcome {
      if (s.dimension() < 2) return std::nullopt;
      auto const left = left_identities(c);
      if (s.is_full()) {
        return expect(left.size() == 1 && left[0] == identity(s.chain_size()),
                      "full simplex: identity is not the unique left identity");
      }
      if (!left.empty()) return "left identity " + show(left[0]);
      auto const w = left_identity(s);
      if (auto const* one = std::get_if<RightIdentityNotLeft>(&w)) {
        return expect(compose(one->right_identity, one->alpha) != one->alpha, "witness");
      }
      auto const& two = std::get<DistinctRightIdentities>(w);
      return expect(two.first != two.second, "witness");
    });
  }});

  out.push_back({"typemap.no-roots-of-identity", range(1, max_n), [max_n] {
    return each_endo(1, max_n, [](Endo const& phi) -> Outcome {
      if (is_identity(phi)) return std::nullopt;
      return expect(!is_identity(eventual_idempotent(phi).idempotent), show(phi));
    });
  }});

  out.push_back({"typemap.worked-example", "n=10, vertices 0,2,3,5,8", [] {
    auto const s = make_simplex(10, {0, 2, 3, 5, 8});
    auto const alpha = parse_endo("0_4 2_2 8_4", 10);
    auto const beta = parse_endo("0_3 2_2 3_3 8_2", 10);
    auto const iota = make_endo(5, {0, 0, 0, 0, 4});
    if (type_of(s, alpha) != make_endo(5, {0, 0, 0, 1, 4})) return Outcome("type of alpha");
    if (type_of(s, beta) != make_endo(5, {0, 0, 1, 2, 4})) return Outcome("type of beta");
    BlockLabel const expected = IdempotentClosureBlock{iota};
    if (classify(s, alpha) != expected || classify(s, beta) != expected) {
      return Outcome("classification");
    }
    if (root_semiring(iota).size() != catalan(3)) return Outcome("root semiring size");
    if (right_identities(s).size() != 12) return Outcome("right identities");
    return Outcome{};
  }});
  return out;
}

inline std::vector<Claim> count_claims(unsigned max_n) {
  std::vector<Claim> out;
  auto const n8 = std::min(max_n, 8u);
  auto const n7 = std::min(max_n, 7u);

  out.push_back({"counts.nilpotent", range(2, n8), [n8] {
    for (unsigned n = 2; n <= n8; ++n) {
      std::vector<std::uint64_t> tally(n, 0);
      for (auto const& e : enumerate(full_simplex(n))) {
        if (auto nil = nilpotency(e)) ++tally[nil->value];
      }
      for (element a = 0; a < n; ++a) {
        if (tally[a] != nilpotent_count(n, a)) {
          return Outcome("n=" + std::to_string(n) + " a=" + std::to_string(a) + ": "
                         + std::to_string(tally[a]) + " vs "
                         + std::to_string(nilpotent_count(n, a)));
        }
      }
    }
    return Outcome{};
  }});

  out.push_back({"counts.idempotent", range(3, n7), [n7] {
    for (unsigned n = 3; n <= n7; ++n) {
      std::map<std::vector<element>, std::uint64_t> census;
      for (auto const& e : enumerate(full_simplex(n))) {
        if (is_idempotent(e)) ++census[fixed_points(e)];
      }
      for (auto const& f : faces(full_simplex(n))) {
        if (f.dimension() > n - 1) continue;
        auto const expected = idempotent_count(n, f.vertices());
        auto const it = census.find(f.vertices());
        auto const got = it == census.end() ? 0 : it->second;
        if (got != expected) {
          return Outcome(show(f) + ": " + std::to_string(got) + " vs " + std::to_string(expected));
        }
      }
    }
    return Outcome{};
  }});

  out.push_back({"counts.right-identity-order", range(1, n7), [n7] {
    return each_simplex(1, n7, [](Simplex const& s, EndoSet const& c) {
      return expect(interior_idempotents(c).size() == right_identity_count(s), "order");
    });
  }});

  out.push_back({"counts.catalan", "i=0..10", [] {
    std::uint64_t const known[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (std::uint64_t i = 0; i <= 10; ++i) {
      if (catalan(i) != known[i]) return Outcome("C_" + std::to_string(i));
    }
    return Outcome{};
  }});
  return out;
}

inline ClaimResult run_claim(Claim const& claim) {
  ClaimResult r;
  r.id = claim.id;
  r.range = claim.range;
  r.informational = claim.informational;
  auto const start = std::chrono::steady_clock::now();
  try {
    auto const outcome = claim.run();
    r.passed = claim.informational || !outcome.has_value();
    r.counterexample = outcome.value_or("");
  } catch (std::exception const& e) {
    r.passed = false;
    r.counterexample = std::string("exception: ") + e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace verify_detail

/// Runs a suite; throws std::out_of_range when max_n exceeds max_verify_n.
inline VerificationReport verify(Suite suite, unsigned max_n, std::uint64_t seed,
                                 std::function<void(ClaimResult const&)> on_claim = {}) {
  using namespace verify_detail;
  if (max_n < 1 || max_n > max_verify_n) {
    throw std::out_of_range("max-n must lie in 1.." + std::to_string(max_verify_n));
  }
  std::vector<Claim> claims;
  auto const append = [&](std::vector<Claim> more) {
    claims.insert(claims.end(), std::make_move_iterator(more.begin()),
                  std::make_move_iterator(more.end()));
  };
  if (suite == Suite::axioms || suite == Suite::all) append(axiom_claims(max_n));
  if (suite == Suite::simplex || suite == Suite::all) append(simplex_claims(max_n));
  if (suite == Suite::strata || suite == Suite::all) append(strata_claims(max_n));
  if (suite == Suite::typemap || suite == Suite::all) append(typemap_claims(max_n, seed));
  if (suite == Suite::counts || suite == Suite::all) append(count_claims(max_n));

  VerificationReport report;
  report.suite = to_string(suite);
  report.max_n = max_n;
  report.seed = seed;
  for (auto const& claim : claims) {
    report.claims.push_back(run_claim(claim));
    if (on_claim) on_claim(report.claims.back());
  }
  return report;
}

}  // namespace endosimplex
