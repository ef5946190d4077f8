#pragma once

// Brute-force reference computations for tests. Everything here reads only
// the multiplication table; none of it goes through the library's search,
// orbit or subgroup code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hurwitz/group.hpp"

namespace oracle {

using hurwitz::Elem;
using hurwitz::FiniteGroup;
using Raw = std::vector<Elem>;

inline std::size_t closure_size(const FiniteGroup& G, const Raw& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<Elem> stack{0};
  in[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    for (auto s : gens) {
      Elem y = G.mul(s, x);
      if (!in[y]) {
        in[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count;
}

inline Elem inverse_by_search(const FiniteGroup& G, Elem x) {
  for (Elem y = 0; y < G.order(); ++y)
    if (G.mul(x, y) == 0) return y;
  return 0;
}

inline bool relation_holds(const FiniteGroup& G, std::size_t genus, const Raw& t) {
  Elem p = 0;
  for (std::size_t i = 0; i < genus; ++i) {
    Elem a = t[2 * i], b = t[2 * i + 1];
    p = G.mul(p, G.mul(G.mul(a, b), G.mul(inverse_by_search(G, a), inverse_by_search(G, b))));
  }
  for (std::size_t j = 2 * genus; j < t.size(); ++j) p = G.mul(p, t[j]);
  return p == 0;
}

/// Every raw tuple in G^(2g+n), filtered by relation, c_j != 1 and
/// generation. Lexicographic order.
inline std::vector<Raw> naive_fiber(const FiniteGroup& G, std::size_t genus, std::size_t n) {
  const std::size_t len = 2 * genus + n;
  std::vector<Raw> out;
  Raw t(len, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t j = 2 * genus; j < len && ok; ++j) ok = t[j] != 0;
    if (ok && relation_holds(G, genus, t) && closure_size(G, t) == G.order()) out.push_back(t);
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++t[k] < G.order()) break;
      t[k] = 0;
      if (k == 0) return out;
    }
  }
}

inline std::vector<Elem> naive_center(const FiniteGroup& G) {
  std::vector<Elem> z;
  for (Elem x = 0; x < G.order(); ++x) {
    bool c = true;
    for (Elem y = 0; y < G.order(); ++y) c = c && G.mul(x, y) == G.mul(y, x);
    if (c) z.push_back(x);
  }
  return z;
}

inline Elem conj(const FiniteGroup& G, Elem h, Elem x) { return G.mul(G.mul(h, x), inverse_by_search(G, h)); }

// Sizes of the orbits of the closure under Hurwitz moves (and optionally
// conjugation), found by plain depth-first search on std::set.
inline std::vector<std::size_t> naive_braid_orbit_sizes(const FiniteGroup& G, const std::vector<Raw>& tuples,
                                                        bool with_conjugation) {
  std::set<Raw> seen;
  std::vector<std::size_t> sizes;
  for (const auto& start : tuples) {
    if (seen.contains(start)) continue;
    std::set<Raw> orbit{start};
    std::vector<Raw> stack{start};
    while (!stack.empty()) {
      Raw t = stack.back();
      stack.pop_back();
      std::vector<Raw> next;
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        Raw f = t, b = t;
        f[i] = conj(G, t[i], t[i + 1]);
        f[i + 1] = t[i];
        b[i] = t[i + 1];
        b[i + 1] = conj(G, inverse_by_search(G, t[i + 1]), t[i]);
        next.push_back(f);
        next.push_back(b);
      }
      if (with_conjugation)
        for (Elem h = 0; h < G.order(); ++h) {
          Raw c = t;
          for (auto& e : c) e = conj(G, h, e);
          next.push_back(c);
        }
      for (auto& u : next)
        if (orbit.insert(u).second) stack.push_back(u);
    }
    seen.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Orbit count of right multiplication by c on G.
inline std::size_t right_orbits(const FiniteGroup& G, Elem c) {
  std::vector<char> seen(G.order(), 0);
  std::size_t count = 0;
  for (Elem x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (Elem y = x; !seen[y]; y = G.mul(y, c)) seen[y] = 1;
  }
  return count;
}

}  // namespace oracle
