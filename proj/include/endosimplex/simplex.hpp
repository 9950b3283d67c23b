#pragma once

// Simplices sigma^(n){a_0 < ... < a_{k-1}}: all endomorphisms of C_n whose
// image lies in the vertex set A. Each is a subsemiring of the full
// endomorphism semiring, whose vertices are the constant maps.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endosimplex/endo.hpp"

namespace endosimplex {

class invalid_simplex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class size_limit_exceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t default_enumeration_cap = 1'000'000;

class Simplex;
Simplex make_simplex(std::size_t n, std::vector<element> vertices);

class Simplex {
 public:
  /// Chain length n.
  std::size_t chain_size() const noexcept { return n_; }
  /// Number of vertices k.
  std::size_t dimension() const noexcept { return vertices_.size(); }
  std::vector<element> const& vertices() const noexcept { return vertices_; }
  element vertex(std::size_t m) const { return vertices_.at(m); }
  element least_vertex() const noexcept { return vertices_.front(); }
  element greatest_vertex() const noexcept { return vertices_.back(); }

  std::optional<std::size_t> index_of(element v) const noexcept {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  bool has_vertex(element v) const noexcept { return index_of(v).has_value(); }

  /// True for sigma^(n){0, ..., n-1}, the whole endomorphism semiring.
  bool is_full() const noexcept { return vertices_.size() == n_; }

  bool operator==(Simplex const&) const = default;
  auto operator<=>(Simplex const&) const = default;

 private:
  friend Simplex make_simplex(std::size_t, std::vector<element>);
  Simplex(std::size_t n, std::vector<element> v) : n_(n), vertices_(std::move(v)) {}

  std::size_t n_;
  std::vector<element> vertices_;
};

inline Simplex make_simplex(std::size_t n, std::vector<element> vertices) {
  if (n == 0) {
    throw invalid_simplex("chain length must be at least 1");
  }
  if (vertices.empty()) {
    throw invalid_simplex("vertex set must be nonempty");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n) {
      throw invalid_simplex("vertex " + std::to_string(vertices[i])
                            + " is out of range for chain length " + std::to_string(n));
    }
    if (i > 0 && vertices[i - 1] >= vertices[i]) {
      throw invalid_simplex(vertices[i - 1] == vertices[i]
                                ? "duplicate vertex " + std::to_string(vertices[i])
                                : "vertices must be strictly increasing");
    }
  }
  return Simplex(n, std::move(vertices));
}

inline Simplex full_simplex(std::size_t n) {
  std::vector<element> all(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = static_cast<element>(i);
  }
  return make_simplex(n, std::move(all));
}

inline bool contains(Simplex const& s, Endo const& e) {
  if (e.size() != s.chain_size()) {
    throw invalid_endo("chain-length mismatch between simplex and endomorphism");
  }
  return std::all_of(e.begin(), e.end(), [&](element v) { return s.has_vertex(v); });
}

/// binomial(n, r), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) {
    return 0;
  }
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays exact because result = C(n - r + i - 1, i - 1).
    auto const num = n - r + i;
    auto const g = std::gcd(result, i);
    auto const reduced = result / g;
    auto const denom = i / g;
    if (reduced > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = reduced * num / denom;
  }
  return result;
}

/// |sigma^(n){A}| = binomial(n + k - 1, n): monotone words of length n over k letters.
inline std::uint64_t cardinality(Simplex const& s) {
  return binomial(s.chain_size() + s.dimension() - 1, s.chain_size());
}

/// A set of simplex members kept sorted in lexicographic order of value tuples.
class EndoSet {
 public:
  explicit EndoSet(Simplex s) : simplex_(std::move(s)) {}

  /// Sorts and deduplicates; every member must lie in s.
  EndoSet(Simplex s, std::vector<Endo> members)
      : simplex_(std::move(s)), members_(std::move(members)) {
    for (auto const& e : members_) {
      if (!endosimplex::contains(simplex_, e)) {
        throw invalid_endo("member " + format_endo(e, Notation::tuple)
                           + " does not lie in the simplex");
      }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  Simplex const& simplex() const noexcept { return simplex_; }
  std::vector<Endo> const& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Endo const& operator[](std::size_t i) const noexcept { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(Endo const& e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
  }

  /// Members satisfying pred, in canonical order.
  template <class Pred>
  EndoSet filter(Pred&& pred) const {
    EndoSet out(simplex_);
    for (auto const& e : members_) {
      if (pred(e)) {
        out.members_.push_back(e);
      }
    }
    return out;
  }

  bool operator==(EndoSet const& other) const {
    return simplex_ == other.simplex_ && members_ == other.members_;
  }

 private:
  friend EndoSet set_union(EndoSet const&, EndoSet const&);
  friend EndoSet set_difference(EndoSet const&, EndoSet const&);
  friend EndoSet enumerate(Simplex const&, std::uint64_t);

  Simplex simplex_;
  std::vector<Endo> members_;
};

inline void require_same_simplex(EndoSet const& a, EndoSet const& b) {
  if (a.simplex() != b.simplex()) {
    throw invalid_simplex("sets belong to different simplices");
  }
}

inline EndoSet set_union(EndoSet const& a, EndoSet const& b) {
  require_same_simplex(a, b);
  EndoSet out(a.simplex());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.members_));
  return out;
}

inline EndoSet set_difference(EndoSet const& a, EndoSet const& b) {
  require_same_simplex(a, b);
  EndoSet out(a.simplex());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out.members_));
  return out;
}

/// Every member of s in lexicographic order. Refuses carriers larger than cap.
inline EndoSet enumerate(Simplex const& s, std::uint64_t cap = default_enumeration_cap) {
  auto const count = cardinality(s);
  if (count > cap) {
    throw size_limit_exceeded("simplex has " + std::to_string(count)
                              + " members, above the enumeration cap of "
                              + std::to_string(cap));
  }
  auto const n = s.chain_size();
  auto const k = s.dimension();
  auto const& A = s.vertices();

  EndoSet out(s);
  out.members_.reserve(static_cast<std::size_t>(count));
  // Odometer over nondecreasing index words; lexicographic in indices is
  // lexicographic in values because A is increasing.
  std::vector<std::size_t> idx(n, 0);
  std::vector<element> values(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = A[idx[i]];
    }
    out.members_.push_back(make_endo(n, values));
    std::size_t pos = n;
    while (pos > 0 && idx[pos - 1] == k - 1) {
      --pos;
    }
    if (pos == 0) {
      break;
    }
    auto const next = idx[pos - 1] + 1;
    std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos - 1), idx.end(), next);
  }
  return out;
}

/// Faces on nonempty vertex subsets (of exactly dim vertices when given),
/// ordered by size, then lexicographically.
inline std::vector<Simplex> faces(Simplex const& s, std::optional<std::size_t> dim = {}) {
  auto const k = s.dimension();
  if (dim && (*dim == 0 || *dim > k)) {
    throw std::out_of_range("face dimension must lie in 1.." + std::to_string(k));
  }
  if (k >= 63) {
    throw size_limit_exceeded("too many vertices to list faces");
  }
  std::vector<Simplex> out;
  auto const lo = dim.value_or(1);
  auto const hi = dim.value_or(k);
  for (std::size_t size = lo; size <= hi; ++size) {
    std::vector<std::vector<element>> subsets;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) {
        continue;
      }
      std::vector<element> verts;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::uint64_t{1} << i)) {
          verts.push_back(s.vertex(i));
        }
      }
      subsets.push_back(std::move(verts));
    }
    std::sort(subsets.begin(), subsets.end());
    for (auto& v : subsets) {
      out.push_back(make_simplex(s.chain_size(), std::move(v)));
    }
  }
  return out;
}

inline bool is_face(Simplex const& f, Simplex const& s) {
  return f.chain_size() == s.chain_size()
         && std::includes(s.vertices().begin(), s.vertices().end(), f.vertices().begin(),
                          f.vertices().end());
}

/// The face omitting the greatest vertex (requires k >= 2).
inline Simplex least_face(Simplex const& s) {
  if (s.dimension() < 2) {
    throw invalid_simplex("least face needs at least two vertices");
  }
  auto v = s.vertices();
  v.pop_back();
  return make_simplex(s.chain_size(), std::move(v));
}

/// The face omitting the least vertex (requires k >= 2).
inline Simplex biggest_face(Simplex const& s) {
  if (s.dimension() < 2) {
    throw invalid_simplex("biggest face needs at least two vertices");
  }
  auto v = s.vertices();
  v.erase(v.begin());
  return make_simplex(s.chain_size(), std::move(v));
}

/// Re-homes the members of a face's set inside an ambient simplex.
inline EndoSet embed(EndoSet const& face_set, Simplex const& ambient) {
  return EndoSet(ambient, face_set.members());
}

/// Members whose image is a proper subset of A (the union of all proper faces).
inline EndoSet boundary(Simplex const& s, std::uint64_t cap = default_enumeration_cap) {
  return enumerate(s, cap).filter(
      [&](Endo const& e) { return image(e).size() < s.dimension(); });
}

/// Members whose image is all of A.
inline EndoSet interior(Simplex const& s, std::uint64_t cap = default_enumeration_cap) {
  return enumerate(s, cap).filter(
      [&](Endo const& e) { return image(e).size() == s.dimension(); });
}

/// Avoids both chain endpoints 0 and n-1.
inline bool is_internal(Simplex const& s) noexcept {
  return s.least_vertex() != 0 && s.greatest_vertex() + 1 != s.chain_size();
}

/// f is a face of s avoiding both extreme vertices of s.
inline bool is_internal_face(Simplex const& f, Simplex const& s) {
  if (!is_face(f, s)) {
    throw invalid_simplex("not a face of the given simplex");
  }
  return !f.has_vertex(s.least_vertex()) && !f.has_vertex(s.greatest_vertex());
}

/// {alpha in s : alpha(a) = a}; empty when a is not a vertex.
inline EndoSet fixed_subsemiring(Simplex const& s, element a,
                                 std::uint64_t cap = default_enumeration_cap) {
  if (a >= s.chain_size()) {
    throw std::out_of_range("fixed point outside the chain");
  }
  return enumerate(s, cap).filter([a](Endo const& e) { return e(a) == a; });
}

}  // namespace endosimplex
