#pragma once

// Layers and discrete neighborhoods of a simplex vertex, plus the brute-force
// closure/ideal checker used to verify every structural claim about them.
//
// Orientation: with (x * y)(i) = y(x(i)), a subset S of an ambient simplex R is
//   a left ideal  when phi * alpha lies in S for phi in R, alpha in S;
//   a right ideal when alpha * phi lies in S for alpha in S, phi in R.
// The ideal flags test only multiplicative absorption; additive closure is
// reported separately in add_closed.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "endosimplex/endo.hpp"
#include "endosimplex/simplex.hpp"

namespace endosimplex {

namespace detail {

inline void require_vertex_index(Simplex const& s, std::size_t m) {
  if (m >= s.dimension()) {
    throw std::out_of_range("vertex index " + std::to_string(m) + " out of range 0.."
                            + std::to_string(s.dimension() - 1));
  }
}

inline std::size_t count_value(Endo const& e, element v) {
  std::size_t c = 0;
  for (element x : e) {
    c += (x == v);
  }
  return c;
}

}  // namespace detail

/// Members taking the value a_m at exactly `count` positions. carrier = enumerate(s).
inline EndoSet layer(EndoSet const& carrier, std::size_t m, std::size_t count) {
  auto const& s = carrier.simplex();
  detail::require_vertex_index(s, m);
  if (count > s.chain_size()) {
    throw std::out_of_range("layer count exceeds chain length");
  }
  auto const v = s.vertex(m);
  return carrier.filter([&](Endo const& e) { return detail::count_value(e, v) == count; });
}

inline EndoSet layer(Simplex const& s, std::size_t m, std::size_t count) {
  detail::require_vertex_index(s, m);
  return layer(enumerate(s), m, count);
}

/// DN^t_m: the vertex constant together with layers n-t .. n-1, i.e. every
/// member hitting a_m at least n - t times. t = 0 gives just the constant.
inline EndoSet neighborhood(EndoSet const& carrier, std::size_t m, std::size_t t) {
  auto const& s = carrier.simplex();
  detail::require_vertex_index(s, m);
  auto const n = s.chain_size();
  if (t > n) {
    throw std::out_of_range("neighborhood radius exceeds chain length");
  }
  auto const v = s.vertex(m);
  return carrier.filter([&](Endo const& e) { return detail::count_value(e, v) + t >= n; });
}

inline EndoSet neighborhood(Simplex const& s, std::size_t m, std::size_t t) {
  detail::require_vertex_index(s, m);
  return neighborhood(enumerate(s), m, t);
}

/// Union of DN^t_m over every vertex index m.
inline EndoSet union_neighborhoods(EndoSet const& carrier, std::size_t t) {
  auto const& s = carrier.simplex();
  if (t > s.chain_size()) {
    throw std::out_of_range("neighborhood radius exceeds chain length");
  }
  auto const n = s.chain_size();
  return carrier.filter([&](Endo const& e) {
    for (auto v : s.vertices()) {
      if (detail::count_value(e, v) + t >= n) {
        return true;
      }
    }
    return false;
  });
}

inline EndoSet union_neighborhoods(Simplex const& s, std::size_t t) {
  return union_neighborhoods(enumerate(s), t);
}

enum class ClosureKind { add, mul, left_ideal, right_ideal };

inline char const* to_string(ClosureKind kind) {
  switch (kind) {
    case ClosureKind::add: return "add";
    case ClosureKind::mul: return "mul";
    case ClosureKind::left_ideal: return "left_ideal";
    case ClosureKind::right_ideal: return "right_ideal";
  }
  return "?";
}

/// lhs op rhs = result, with result outside the candidate.
struct Witness {
  Endo lhs;
  Endo rhs;
  Endo result;

  bool operator==(Witness const&) const = default;
};

struct ClosureReport {
  bool add_closed = true;
  bool mul_closed = true;
  bool left_ideal = true;
  bool right_ideal = true;
  bool ideal = true;  // left_ideal && right_ideal
  std::optional<Witness> add_witness;
  std::optional<Witness> mul_witness;
  std::optional<Witness> left_witness;
  std::optional<Witness> right_witness;

  bool subsemiring() const noexcept { return add_closed && mul_closed; }

  std::optional<Witness> const& witness(ClosureKind kind) const noexcept {
    switch (kind) {
      case ClosureKind::add: return add_witness;
      case ClosureKind::mul: return mul_witness;
      case ClosureKind::left_ideal: return left_witness;
      case ClosureKind::right_ideal: break;
    }
    return right_witness;
  }
};

namespace detail {

// First (in lexicographic (lhs, rhs) order) pair whose result escapes target.
template <class Lhs, class Rhs, class Op, class Target>
std::optional<Witness> find_escape(Lhs const& lhs_range, Rhs const& rhs_range, Op op,
                                   Target const& target) {
  for (auto const& x : lhs_range) {
    for (auto const& y : rhs_range) {
      auto r = op(x, y);
      if (!target.contains(r)) {
        return Witness{x, y, std::move(r)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Exhaustive closure and one-sided ideal verdicts for candidate inside the
/// ambient carrier (ambient = enumerate of the ambient simplex). Witnesses are
/// the lexicographically least failing pairs.
inline ClosureReport closure_check(EndoSet const& candidate, EndoSet const& ambient) {
  EndoSet const* cand = &candidate;
  std::optional<EndoSet> rehomed;
  if (candidate.simplex() != ambient.simplex()) {
    for (auto const& e : candidate) {
      if (!ambient.contains(e)) {
        throw invalid_endo("candidate member " + format_endo(e, Notation::tuple)
                           + " is not in the ambient simplex");
      }
    }
    rehomed.emplace(ambient.simplex(), candidate.members());
    cand = &*rehomed;
  } else {
    for (auto const& e : candidate) {
      if (!ambient.contains(e)) {
        throw invalid_endo("ambient carrier is not the full enumeration of its simplex");
      }
    }
  }

  auto const plus = [](Endo const& x, Endo const& y) { return add(x, y); };
  auto const times = [](Endo const& x, Endo const& y) { return compose(x, y); };

  ClosureReport r;
  r.add_witness = detail::find_escape(*cand, *cand, plus, *cand);
  r.mul_witness = detail::find_escape(*cand, *cand, times, *cand);
  r.left_witness = detail::find_escape(ambient, *cand, times, *cand);
  r.right_witness = detail::find_escape(*cand, ambient, times, *cand);
  r.add_closed = !r.add_witness;
  r.mul_closed = !r.mul_witness;
  r.left_ideal = !r.left_witness;
  r.right_ideal = !r.right_witness;
  r.ideal = r.left_ideal && r.right_ideal;
  return r;
}

inline ClosureReport closure_check(EndoSet const& candidate, Simplex const& ambient,
                                   std::uint64_t cap = default_enumeration_cap) {
  return closure_check(candidate, enumerate(ambient, cap));
}

/// Re-evaluates a witness: true iff it still exhibits a genuine violation.
inline bool witness_reproduces(Witness const& w, ClosureKind kind, EndoSet const& candidate,
                               EndoSet const& ambient) {
  auto const result = kind == ClosureKind::add ? add(w.lhs, w.rhs) : compose(w.lhs, w.rhs);
  if (result != w.result || candidate.contains(result)) {
    return false;
  }
  switch (kind) {
    case ClosureKind::add:
    case ClosureKind::mul:
      return candidate.contains(w.lhs) && candidate.contains(w.rhs);
    case ClosureKind::left_ideal:
      return ambient.contains(w.lhs) && candidate.contains(w.rhs);
    case ClosureKind::right_ideal:
      return candidate.contains(w.lhs) && ambient.contains(w.rhs);
  }
  return false;
}

/// Multiplication restricted to the set commutes.
inline bool is_commutative(EndoSet const& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (compose(set[i], set[j]) != compose(set[j], set[i])) {
        return false;
      }
    }
  }
  return true;
}

inline bool all_nilpotent_to(EndoSet const& set, element value) {
  for (auto const& e : set) {
    auto nil = nilpotency(e);
    if (!nil || nil->value != value) {
      return false;
    }
  }
  return true;
}

struct NeighborhoodProperties {
  std::size_t radius = 0;
  std::size_t size = 0;
  bool add_closed = false;
  bool mul_closed = false;
  bool commutative = false;
  bool all_nilpotent = false;  // every element is a_m-nilpotent

  bool subsemiring() const noexcept { return add_closed && mul_closed; }
};

struct DnReport {
  std::size_t vertex_index = 0;
  element vertex = 0;
  NeighborhoodProperties dn1;
  std::optional<NeighborhoodProperties> dn2;  // internal simplices only
};

inline NeighborhoodProperties neighborhood_properties(EndoSet const& carrier, std::size_t m,
                                                      std::size_t t) {
  auto const dn = neighborhood(carrier, m, t);
  auto const report = closure_check(dn, carrier);
  NeighborhoodProperties p;
  p.radius = t;
  p.size = dn.size();
  p.add_closed = report.add_closed;
  p.mul_closed = report.mul_closed;
  p.commutative = is_commutative(dn);
  p.all_nilpotent = all_nilpotent_to(dn, carrier.simplex().vertex(m));
  return p;
}

inline DnReport dn_properties(EndoSet const& carrier, std::size_t m) {
  auto const& s = carrier.simplex();
  detail::require_vertex_index(s, m);
  DnReport r;
  r.vertex_index = m;
  r.vertex = s.vertex(m);
  r.dn1 = neighborhood_properties(carrier, m, 1);
  if (is_internal(s) && s.chain_size() >= 2) {
    r.dn2 = neighborhood_properties(carrier, m, 2);
  }
  return r;
}

inline DnReport dn_properties(Simplex const& s, std::size_t m) {
  detail::require_vertex_index(s, m);
  return dn_properties(enumerate(s), m);
}

}  // namespace endosimplex
