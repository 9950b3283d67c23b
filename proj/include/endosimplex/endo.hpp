#pragma once

/**
 * @file endo.hpp
 * @brief Endomorphisms of a finite chain and their semiring operations.
 *
 * The chain C_n = {0 < 1 < ... < n-1} is a join-semilattice under max, and its
 * join-endomorphisms are exactly the order-preserving self-maps. An Endo stores
 * such a map as its value tuple. Addition is the pointwise join; multiplication
 * is composition read left to right:
 *
 *     (a * b)(x) = b(a(x))      "first a, then b"
 *
 * The set of all Endos of C_n is a semiring without zero and (for n > 1)
 * without additive neutral element, so nothing here assumes either.
 */

#include <algorithm>
#include <cassert>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace endosimplex {

using element = std::uint32_t;

class invalid_endo : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Endo;
Endo make_endo(std::size_t n, std::vector<element> values);

/// Order-preserving self-map of C_n, stored as values[i] = image of i.
class Endo {
 public:
  std::size_t size() const noexcept { return values_.size(); }
  element operator[](std::size_t i) const noexcept { return values_[i]; }
  element operator()(element x) const noexcept { return values_[x]; }
  std::span<element const> values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool operator==(Endo const&) const = default;
  auto operator<=>(Endo const&) const = default;

 private:
  friend Endo make_endo(std::size_t, std::vector<element>);
  friend Endo add(Endo const&, Endo const&);
  friend Endo compose(Endo const&, Endo const&);
  friend Endo constant(std::size_t, element);
  friend Endo identity(std::size_t);

  struct unchecked {};
  Endo(unchecked, std::vector<element> v) : values_(std::move(v)) {}

  std::vector<element> values_;
};

/// Validates a value tuple; rejects out-of-range or non-monotone input.
inline Endo make_endo(std::size_t n, std::vector<element> values) {
  if (n == 0) {
    throw invalid_endo("chain length must be at least 1");
  }
  if (values.size() != n) {
    throw invalid_endo("expected " + std::to_string(n) + " values, got "
                       + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] >= n) {
      throw invalid_endo("value " + std::to_string(values[i])
                         + " is outside the chain 0.."
                         + std::to_string(n - 1));
    }
    if (i > 0 && values[i - 1] > values[i]) {
      throw invalid_endo(
          "not an endomorphism of the join-semilattice: values[" + std::to_string(i - 1)
          + "] = " + std::to_string(values[i - 1]) + " > values[" + std::to_string(i)
          + "] = " + std::to_string(values[i]));
    }
  }
  return Endo(Endo::unchecked{}, std::move(values));
}

inline Endo constant(std::size_t n, element v) {
  if (n == 0 || v >= n) {
    throw invalid_endo("constant value out of range");
  }
  return Endo(Endo::unchecked{}, std::vector<element>(n, v));
}

inline Endo identity(std::size_t n) {
  if (n == 0) {
    throw invalid_endo("chain length must be at least 1");
  }
  std::vector<element> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<element>(i);
  }
  return Endo(Endo::unchecked{}, std::move(v));
}

inline void require_same_chain(Endo const& a, Endo const& b) {
  if (a.size() != b.size()) {
    throw invalid_endo("chain-length mismatch: " + std::to_string(a.size()) + " vs "
                       + std::to_string(b.size()));
  }
}

/// Pointwise join.
inline Endo add(Endo const& a, Endo const& b) {
  require_same_chain(a, b);
  std::vector<element> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = std::max(a[i], b[i]);
  }
  return Endo(Endo::unchecked{}, std::move(v));
}

/// First a, then b: result(x) = b(a(x)).
inline Endo compose(Endo const& a, Endo const& b) {
  require_same_chain(a, b);
  std::vector<element> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = b[a[i]];
  }
  return Endo(Endo::unchecked{}, std::move(v));
}

inline Endo operator+(Endo const& a, Endo const& b) { return add(a, b); }
inline Endo operator*(Endo const& a, Endo const& b) { return compose(a, b); }

inline Endo power(Endo const& a, unsigned m) {
  if (m == 0) {
    throw std::invalid_argument("power exponent must be positive");
  }
  Endo result = a;
  for (unsigned i = 1; i < m; ++i) {
    result = compose(result, a);
  }
  return result;
}

inline bool is_constant(Endo const& a) noexcept {
  return a[0] == a[a.size() - 1];
}

inline bool is_identity(Endo const& a) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != i) {
      return false;
    }
  }
  return true;
}

/// a is idempotent iff it fixes every point of its image.
inline bool is_idempotent(Endo const& a) noexcept {
  for (element v : a) {
    if (a(v) != v) {
      return false;
    }
  }
  return true;
}

struct EventualIdempotent {
  Endo idempotent;
  unsigned exponent;
};

// The powers of a monotone self-map of C_n become idempotent after at most
// max(1, n - 1) steps: every orbit walks monotonically to a fixed point.
inline EventualIdempotent eventual_idempotent(Endo const& a) {
  Endo p = a;
  unsigned m = 1;
  while (!is_idempotent(p)) {
    p = compose(p, a);
    ++m;
    assert(m <= a.size());
  }
  return {std::move(p), m};
}

struct Nilpotency {
  element value;
  unsigned index;

  bool operator==(Nilpotency const&) const = default;
};

/// (v, least m) with a^m = constant v, or nothing if no power is constant.
inline std::optional<Nilpotency> nilpotency(Endo const& a) {
  auto [p, m] = eventual_idempotent(a);
  if (!is_constant(p)) {
    return std::nullopt;
  }
  // The eventual idempotent is reached exactly when the power first becomes
  // constant, since a constant power stays constant.
  return Nilpotency{p[0], m};
}

inline std::vector<element> image(Endo const& a) {
  std::vector<element> out(a.begin(), a.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<element> fixed_points(Endo const& a) {
  std::vector<element> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == i) {
      out.push_back(static_cast<element>(i));
    }
  }
  return out;
}

enum class Notation { tuple, run_length };

/// "0,0,1,2" or "0_2 1 2" (run-length; a bare value means a run of one).
inline std::string format_endo(Endo const& e, Notation style) {
  std::string out;
  if (style == Notation::tuple) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(e[i]);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < e.size()) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) {
      ++j;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(e[i]);
    if (j - i > 1) {
      out += '_';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto const ws = " \t\r\n";
  auto const first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) {
    return {};
  }
  auto const last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::uint64_t parse_number(std::string_view token, std::string_view what) {
  token = trim(token);
  std::uint64_t value = 0;
  auto const* first = token.data();
  auto const* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw parse_error("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

inline element parse_element(std::string_view token, std::string_view what) {
  auto const value = parse_number(token, what);
  if (value > std::numeric_limits<element>::max()) {
    throw parse_error("value out of range: '" + std::string(trim(token)) + "'");
  }
  return static_cast<element>(value);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto const pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

}  // namespace detail

/// Parses either notation produced by format_endo.
inline Endo parse_endo(std::string_view text, std::size_t n) {
  text = detail::trim(text);
  if (text.empty()) {
    throw parse_error("empty endomorphism text");
  }
  std::vector<element> values;
  if (text.find(',') != std::string_view::npos) {
    for (auto token : detail::split(text, ',')) {
      values.push_back(detail::parse_element(token, "tuple entry"));
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto const start = text.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) {
        break;
      }
      auto end = text.find_first_of(" \t", start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto const token = text.substr(start, end - start);
      auto const underscore = token.find('_');
      auto const value = detail::parse_element(token.substr(0, underscore), "run value");
      std::uint64_t run = 1;
      if (underscore != std::string_view::npos) {
        run = detail::parse_number(token.substr(underscore + 1), "run length");
        if (run == 0) {
          throw parse_error("run length must be positive in '" + std::string(token) + "'");
        }
      }
      if (values.size() + run > n) {
        throw parse_error("runs exceed chain length " + std::to_string(n));
      }
      values.insert(values.end(), run, value);
      pos = end;
    }
  }
  if (values.size() != n) {
    throw parse_error("length mismatch: text describes " + std::to_string(values.size())
                      + " values, chain length is " + std::to_string(n));
  }
  return make_endo(n, std::move(values));
}

struct EndoHash {
  std::size_t operator()(Endo const& e) const noexcept {
    std::size_t h = e.size();
    for (element v : e) {
      h = h * 1099511628211ULL + v + 0x9e3779b9U;
    }
    return h;
  }
};

}  // namespace endosimplex
