#pragma once

// Reference implementations that share no code with the library: plain
// vectors, recursion, and the definitions taken literally.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Tuple = std::vector<std::uint32_t>;

// Every monotone map of {0..n-1} with values in `allowed`, lexicographic.
inline std::vector<Tuple> monotone_maps(unsigned n, Tuple const& allowed) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < allowed.size(); ++i) {
      cur.push_back(allowed[i]);
      go(i);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

inline Tuple chain(unsigned n) {
  Tuple t(n);
  for (unsigned i = 0; i < n; ++i) t[i] = i;
  return t;
}

inline std::vector<Tuple> all_maps(unsigned n) { return monotone_maps(n, chain(n)); }

// (a then b)(x) = b(a(x))
inline Tuple then(Tuple const& a, Tuple const& b) {
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Tuple join(Tuple const& a, Tuple const& b) {
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool idempotent(Tuple const& a) { return then(a, a) == a; }

inline bool constant(Tuple const& a) {
  return std::all_of(a.begin(), a.end(), [&](auto v) { return v == a[0]; });
}

// Value v with a^m = v-bar for some m, or -1.
inline long nil_value(Tuple const& a) {
  Tuple p = a;
  for (std::size_t m = 0; m <= a.size() + 1; ++m) {
    if (constant(p)) return p[0];
    p = then(p, a);
  }
  return -1;
}

inline Tuple fixed(Tuple const& a) {
  Tuple f;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (a[i] == i) f.push_back(i);
  }
  return f;
}

inline std::uint64_t pascal(unsigned n, unsigned r) {
  // Pascal's triangle, independent of the library's multiplicative formula.
  std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (unsigned j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return r > n ? 0 : c[n][r];
}

}  // namespace oracle
