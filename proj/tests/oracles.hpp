// Brute-force reference computations used by the tests. These deliberately
// avoid the library's lattice, mark and solver code: everything here works on
// plain std::vector<bool> element sets and the raw multiplication table.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "group.hpp"

namespace oracle {

using Set = std::vector<bool>;

inline std::size_t popcount(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

inline Set from_elements(std::size_t n, const std::vector<unsigned>& xs) {
  Set s(n, false);
  for (unsigned x : xs) s[x] = true;
  return s;
}

inline Set to_set(std::size_t n, const artinx::ElementSet& e) {
  Set s(n, false);
  for (std::size_t i = 0; i < n; ++i) s[i] = e.contains(static_cast<artinx::Element>(i));
  return s;
}

/// Smallest multiplicatively closed set containing `seed` and the identity
/// (finite, so this is a subgroup). Naive fixed point over all pairs.
inline Set closure(const artinx::GroupTable& g, Set s) {
  const std::size_t n = g.order();
  s[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!s[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!s[b]) continue;
        const auto c = g.mul(static_cast<artinx::Element>(a), static_cast<artinx::Element>(b));
        if (!s[c]) {
          s[c] = true;
          grew = true;
        }
      }
    }
  }
  return s;
}

/// Every subgroup, found by adjoining one element at a time starting from 1.
inline std::set<Set> all_subgroups(const artinx::GroupTable& g) {
  const std::size_t n = g.order();
  std::set<Set> seen;
  std::vector<Set> todo{closure(g, Set(n, false))};
  seen.insert(todo.front());
  while (!todo.empty()) {
    const Set h = todo.back();
    todo.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      if (h[x]) continue;
      Set t = h;
      t[x] = true;
      t = closure(g, t);
      if (seen.insert(t).second) todo.push_back(t);
    }
  }
  return seen;
}

inline Set conjugate(const artinx::GroupTable& g, artinx::Element x, const Set& s) {
  Set out(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out[g.conj(x, static_cast<artinx::Element>(i))] = true;
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

inline bool is_cyclic(const artinx::GroupTable& g, const Set& s) {
  const std::size_t k = popcount(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i]) continue;
    std::size_t ord = 1;
    auto x = static_cast<artinx::Element>(i);
    while (x != 0) {
      x = g.mul(x, static_cast<artinx::Element>(i));
      ++ord;
    }
    if (ord == k) return true;
  }
  return false;
}

/// Number of left cosets gV (as explicit sets) with u gV = gV for all u in U.
inline std::int64_t mark(const artinx::GroupTable& g, const Set& u, const Set& v) {
  const std::size_t n = g.order();
  std::set<Set> cosets;
  for (std::size_t x = 0; x < n; ++x) {
    Set c(n, false);
    for (std::size_t y = 0; y < n; ++y)
      if (v[y]) c[g.mul(static_cast<artinx::Element>(x), static_cast<artinx::Element>(y))] = true;
    cosets.insert(c);
  }
  std::int64_t fixed = 0;
  for (const auto& c : cosets) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!u[a]) continue;
      for (std::size_t y = 0; y < n && ok; ++y)
        if (c[y] && !c[g.mul(static_cast<artinx::Element>(a), static_cast<artinx::Element>(y))]) ok = false;
    }
    if (ok) ++fixed;
  }
  return fixed;
}

/// Exact fraction on long long; enough for the tiny denominators in tests.
struct Frac {
  long long num = 0, den = 1;
  Frac() = default;
  Frac(long long n, long long d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
};

/// Solves x M = target for lower-triangular M (rows = G-sets) by forward
/// elimination over columns from the last one down, in Frac arithmetic.
inline std::vector<Frac> solve(const std::vector<std::vector<long long>>& m, const std::vector<long long>& target) {
  const std::size_t n = m.size();
  std::vector<Frac> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Frac rest(target[k]);
    for (std::size_t v = k + 1; v < n; ++v) rest = rest - x[v] * Frac(m[v][k]);
    x[k] = rest / Frac(m[k][k]);
  }
  return x;
}

}  // namespace oracle
