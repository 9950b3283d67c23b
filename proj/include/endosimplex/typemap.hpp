#pragma once

/**
 * @file typemap.hpp
 * @brief Types of simplex elements, lifting from the coordinate simplex, and
 *        the block partition of a simplex.
 *
 * An element alpha of sigma^(n){a_0, ..., a_{k-1}} has type <<m_0, ..., m_{k-1}>>
 * when alpha(a_i) = a_{m_i}. The type is itself an endomorphism of C_k, i.e. a
 * member of the coordinate simplex sigma^(k){0, ..., k-1}, and the type map is a
 * surjective semiring homomorphism:
 *
 *     type(alpha + beta) = type(alpha) + type(beta)
 *     type(alpha * beta) = type(alpha) * type(beta)
 *
 * so closure and ideal properties of a set R of types carry over to its lift,
 * the set of all elements whose type lies in R.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "endosimplex/endo.hpp"
#include "endosimplex/simplex.hpp"
#include "endosimplex/strata.hpp"

namespace endosimplex {

/// <<m_0, ..., m_{k-1}>> as an Endo of C_k.
using TypeSignature = Endo;

inline TypeSignature type_of(Simplex const& s, Endo const& e) {
  if (!contains(s, e)) {
    throw invalid_endo(format_endo(e, Notation::tuple) + " is not a member of the simplex");
  }
  auto const k = s.dimension();
  std::vector<element> sig(k);
  for (std::size_t i = 0; i < k; ++i) {
    sig[i] = static_cast<element>(*s.index_of(e(s.vertex(i))));
  }
  return make_endo(k, std::move(sig));
}

inline Simplex coordinate_simplex(Simplex const& s) { return full_simplex(s.dimension()); }

/// All members of s whose type lies in types.
inline EndoSet lift(EndoSet const& carrier, std::span<TypeSignature const> types) {
  auto const& s = carrier.simplex();
  std::set<TypeSignature> wanted;
  for (auto const& t : types) {
    if (t.size() != s.dimension()) {
      throw invalid_endo("type signature " + format_endo(t, Notation::tuple)
                         + " does not belong to the coordinate simplex of dimension "
                         + std::to_string(s.dimension()));
    }
    wanted.insert(t);
  }
  return carrier.filter([&](Endo const& e) { return wanted.contains(type_of(s, e)); });
}

inline EndoSet lift(EndoSet const& carrier, EndoSet const& types) {
  if (types.simplex() != coordinate_simplex(carrier.simplex())) {
    throw invalid_simplex("type set must live in the coordinate simplex");
  }
  return lift(carrier, std::span<TypeSignature const>(types.members()));
}

inline EndoSet lift(Simplex const& s, std::span<TypeSignature const> types) {
  return lift(enumerate(s), types);
}

// ---------------------------------------------------------------------------
// Block classification

struct NilpotentBlock {
  std::size_t vertex_index;  // l: the type is l-nilpotent
  bool operator==(NilpotentBlock const&) const = default;
  auto operator<=>(NilpotentBlock const&) const = default;
};
struct IdempotentTypeBlock {
  TypeSignature idempotent;
  bool operator==(IdempotentTypeBlock const&) const = default;
  auto operator<=>(IdempotentTypeBlock const&) const = default;
};
struct IdempotentClosureBlock {
  TypeSignature idempotent;  // the type is a non-idempotent root of this
  bool operator==(IdempotentClosureBlock const&) const = default;
  auto operator<=>(IdempotentClosureBlock const&) const = default;
};
struct RightIdentityBlock {
  bool operator==(RightIdentityBlock const&) const = default;
  auto operator<=>(RightIdentityBlock const&) const = default;
};

using BlockLabel =
    std::variant<NilpotentBlock, IdempotentTypeBlock, IdempotentClosureBlock, RightIdentityBlock>;

/// Canonical label string: "N[a_l]" (vertex value), "I[sig]", "IC[sig]", "RI".
inline std::string label_string(BlockLabel const& label, Simplex const& s) {
  struct {
    Simplex const& s;
    std::string operator()(NilpotentBlock const& b) const {
      return "N[" + std::to_string(s.vertex(b.vertex_index)) + "]";
    }
    std::string operator()(IdempotentTypeBlock const& b) const {
      return "I[" + format_endo(b.idempotent, Notation::tuple) + "]";
    }
    std::string operator()(IdempotentClosureBlock const& b) const {
      return "IC[" + format_endo(b.idempotent, Notation::tuple) + "]";
    }
    std::string operator()(RightIdentityBlock const&) const { return "RI"; }
  } visitor{s};
  return std::visit(visitor, label);
}

/// Block of a type signature inside its own coordinate simplex.
/// For k = 1 the single signature is both constant and identity; it is filed
/// as nilpotent.
inline BlockLabel classify_signature(TypeSignature const& type) {
  if (type.size() > 1 && is_identity(type)) {
    return RightIdentityBlock{};
  }
  auto [iota, exponent] = eventual_idempotent(type);
  if (is_constant(iota)) {
    return NilpotentBlock{iota[0]};
  }
  if (exponent == 1) {
    return IdempotentTypeBlock{type};
  }
  // A root of the identity would be a monotone bijection, hence the identity.
  if (is_identity(iota)) {
    throw std::logic_error("found a proper root of the identity");
  }
  return IdempotentClosureBlock{std::move(iota)};
}

inline BlockLabel classify(Simplex const& s, Endo const& e) {
  return classify_signature(type_of(s, e));
}

/// iota together with every root of iota in E_{C_k}: {phi : phi^m = iota for some m}.
inline EndoSet root_semiring(TypeSignature const& iota) {
  if (!is_idempotent(iota)) {
    throw invalid_endo("root_semiring expects an idempotent");
  }
  return enumerate(full_simplex(iota.size())).filter([&](Endo const& phi) {
    return eventual_idempotent(phi).idempotent == iota;
  });
}

struct BlockChecks {
  ClosureReport closure;
  // For IC blocks: the verdict on I(iota) u IC(iota).
  std::optional<ClosureReport> with_idempotent_type;
  bool contract_met = false;
};

struct PartitionReport {
  Simplex simplex;
  std::map<BlockLabel, EndoSet> blocks;
  std::map<BlockLabel, BlockChecks> checks;
  bool disjoint = false;
  bool covering = false;

  std::map<std::string, std::size_t> census() const {
    std::map<std::string, std::size_t> out;
    for (auto const& [label, set] : blocks) {
      out[label_string(label, simplex)] = set.size();
    }
    return out;
  }

  bool all_contracts_met() const {
    if (!disjoint || !covering) {
      return false;
    }
    for (auto const& [label, c] : checks) {
      if (!c.contract_met) {
        return false;
      }
    }
    return true;
  }
};

/// Classifies every member and checks the per-block contracts:
/// nilpotent, idempotent-type and right-identity blocks are subsemirings;
/// IC(iota) is add-closed and I(iota) u IC(iota) is mul-closed.
inline PartitionReport partition(Simplex const& s, std::uint64_t cap = default_enumeration_cap) {
  auto const carrier = enumerate(s, cap);
  PartitionReport report{s, {}, {}, false, false};

  std::map<BlockLabel, std::vector<Endo>> grouped;
  for (auto const& e : carrier) {
    grouped[classify(s, e)].push_back(e);
  }
  std::size_t total = 0;
  for (auto& [label, members] : grouped) {
    total += members.size();
    report.blocks.emplace(label, EndoSet(s, std::move(members)));
  }
  // Disjointness and coverage are re-derived from the assembled blocks rather
  // than trusted from the grouping.
  std::vector<Endo> merged;
  for (auto const& [label, set] : report.blocks) {
    merged.insert(merged.end(), set.begin(), set.end());
  }
  std::sort(merged.begin(), merged.end());
  report.disjoint =
      std::adjacent_find(merged.begin(), merged.end()) == merged.end() && total == merged.size();
  report.covering = merged.size() == carrier.size()
                    && std::equal(merged.begin(), merged.end(), carrier.begin());

  for (auto const& [label, set] : report.blocks) {
    BlockChecks c;
    c.closure = closure_check(set, carrier);
    if (auto const* ic = std::get_if<IdempotentClosureBlock>(&label)) {
      auto const it = report.blocks.find(IdempotentTypeBlock{ic->idempotent});
      auto const together = it == report.blocks.end() ? set : set_union(set, it->second);
      c.with_idempotent_type = closure_check(together, carrier);
      c.contract_met = c.closure.add_closed && c.with_idempotent_type->mul_closed;
    } else {
      c.contract_met = c.closure.subsemiring();
    }
    report.checks.emplace(label, std::move(c));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Identities

/// {alpha in s : beta * alpha = beta for every beta in s}, by direct search.
inline EndoSet right_identities(EndoSet const& carrier) {
  return carrier.filter([&](Endo const& alpha) {
    for (auto const& beta : carrier) {
      if (compose(beta, alpha) != beta) {
        return false;
      }
    }
    return true;
  });
}

inline EndoSet right_identities(Simplex const& s) { return right_identities(enumerate(s)); }

inline EndoSet interior_idempotents(EndoSet const& carrier) {
  auto const k = carrier.simplex().dimension();
  return carrier.filter(
      [&](Endo const& e) { return is_idempotent(e) && image(e).size() == k; });
}

/// Product of consecutive vertex gaps (a_{i+1} - a_i), i = 0..k-2.
inline std::uint64_t right_identity_count(Simplex const& s) {
  std::uint64_t product = 1;
  for (std::size_t i = 0; i + 1 < s.dimension(); ++i) {
    product *= s.vertex(i + 1) - s.vertex(i);
  }
  return product;
}

/// Two distinct right identities: a left identity would have to equal both.
struct DistinctRightIdentities {
  Endo first;
  Endo second;
};

/// The unique right identity eps is not a left identity: eps * alpha != alpha.
struct RightIdentityNotLeft {
  Endo right_identity;
  Endo alpha;
  Endo product;
};

using LeftIdentityWitness = std::variant<DistinctRightIdentities, RightIdentityNotLeft>;

/// Evidence that a proper simplex (2 <= k < n) has no left identity. Any left
/// identity must coincide with every right identity, so it suffices to show
/// either two right identities or a unique one that fails on the left.
inline LeftIdentityWitness left_identity(Simplex const& s) {
  if (s.dimension() < 2) {
    throw invalid_simplex("a single-vertex simplex is trivial; its constant is an identity");
  }
  if (s.is_full()) {
    throw invalid_simplex("the full simplex has the two-sided identity");
  }
  auto const carrier = enumerate(s);
  auto const ri = right_identities(carrier);
  if (ri.size() >= 2) {
    return DistinctRightIdentities{ri[0], ri[1]};
  }
  if (ri.empty()) {
    throw std::logic_error("simplex without a right identity");
  }
  auto const& eps = ri[0];
  auto const n = s.chain_size();
  auto const a0 = s.vertex(0);
  auto const a1 = s.vertex(1);
  // alpha = (a_0)_c (a_1)_{n-c}; c = a_0 is the classic choice, which
  // degenerates to a constant when a_0 = 0, so other cut points are tried too.
  std::vector<std::size_t> cuts;
  if (a0 > 0) {
    cuts.push_back(a0);
  }
  for (std::size_t c = 1; c < n; ++c) {
    cuts.push_back(c);
  }
  for (auto c : cuts) {
    std::vector<element> v(n, a1);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(c), a0);
    auto alpha = make_endo(n, std::move(v));
    auto product = compose(eps, alpha);
    if (product != alpha) {
      return RightIdentityNotLeft{eps, std::move(alpha), std::move(product)};
    }
  }
  throw std::logic_error("no witness against a left identity found");
}

/// Every member that is a left identity, by direct search (used to confirm
/// the full-simplex case, where the identity map qualifies).
inline EndoSet left_identities(EndoSet const& carrier) {
  return carrier.filter([&](Endo const& omega) {
    for (auto const& beta : carrier) {
      if (compose(omega, beta) != beta) {
        return false;
      }
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Counting formulas

inline std::uint64_t catalan(std::uint64_t i) { return binomial(2 * i, i) / (i + 1); }

/// |N_n^[a]| = C_a * C_{n-a-1}.
inline std::uint64_t nilpotent_count(std::size_t n, element a) {
  if (n < 2 || a >= n) {
    throw std::out_of_range("nilpotent_count needs n >= 2 and 0 <= a < n");
  }
  return catalan(a) * catalan(n - a - 1);
}

/// Idempotents of E_{C_n} whose fixed-point set is exactly `fixed`:
/// product of consecutive gaps of the sorted fixed set.
inline std::uint64_t idempotent_count(std::size_t n, std::span<element const> fixed) {
  if (n < 3) {
    throw std::out_of_range("idempotent_count needs n >= 3");
  }
  if (fixed.empty() || fixed.size() > n - 1) {
    throw std::out_of_range("idempotent_count needs 1 <= |fixed| <= n - 1");
  }
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (fixed[i] >= n || (i > 0 && fixed[i - 1] >= fixed[i])) {
      throw std::out_of_range("fixed set must be strictly increasing inside the chain");
    }
  }
  std::uint64_t product = 1;
  for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
    product *= fixed[i + 1] - fixed[i];
  }
  return product;
}

}  // namespace endosimplex
