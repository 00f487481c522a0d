#pragma once

// Naive reference implementations used to cross-check the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Edge = std::array<int, 3>;
using EdgeSet = std::set<Edge>;

inline Edge sorted(int a, int b, int c) {
  Edge e{a, b, c};
  std::sort(e.begin(), e.end());
  return e;
}

inline long long choose(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long s3(long long n) { return n < 3 ? 0 : (n / 3) * ((n + 1) / 3) * ((n + 2) / 3); }

// Complete k-partite 2-graph on a round-robin split: sum of products of part
// sizes over pairs of parts.
inline long long tk(int k, int n) {
  std::vector<long long> part(k);
  for (int i = 0; i < k; ++i) part[i] = n > i ? (n - i + k - 1) / k : 0;
  long long c = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) c += part[i] * part[j];
  return c;
}

inline std::vector<Edge> all_triples(int n) {
  std::vector<Edge> out;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) out.push_back({a, b, c});
  return out;
}

inline EdgeSet relabel(const EdgeSet& g, const std::vector<int>& perm) {
  EdgeSet out;
  for (auto& e : g) out.insert(sorted(perm[e[0]], perm[e[1]], perm[e[2]]));
  return out;
}

// Tries all n! bijections.
inline bool isomorphic(int n, const EdgeSet& g, const EdgeSet& h) {
  if (g.size() != h.size()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (relabel(g, p) == h) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Does some injection of the pattern's vertices into the host's map every
// pattern edge onto a host edge?
inline bool contains(int host_n, const EdgeSet& host, int pat_n, const EdgeSet& pat) {
  std::vector<int> map(pat_n, -1);
  std::vector<bool> used(host_n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == pat_n) {
      for (auto& e : pat)
        if (!host.count(sorted(map[e[0]], map[e[1]], map[e[2]]))) return false;
      return true;
    }
    for (int v = 0; v < host_n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

inline const EdgeSet& k4_minus() {
  static const EdgeSet g{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}};
  return g;
}
inline const EdgeSet& f5() {
  static const EdgeSet g{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}};
  return g;
}
inline const EdgeSet& f6() {
  static const EdgeSet g{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {0, 4, 5}};
  return g;
}

// Any 4 vertices spanning 3 or more edges.
inline bool has_k4_minus(int n, const EdgeSet& g) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int k = g.count({a, b, c}) + g.count({a, b, d}) + g.count({a, c, d}) + g.count({b, c, d});
          if (k >= 3) return true;
        }
  return false;
}

inline bool kf6_free(int n, const EdgeSet& g) { return !has_k4_minus(n, g) && !contains(n, g, 6, f6()); }

// Defining property: no edges A != B and C with A xor B inside C.
inline bool cancellative(const EdgeSet& g) {
  for (auto& a : g)
    for (auto& b : g) {
      if (a == b) continue;
      std::vector<int> d;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
      for (auto& c : g)
        if (std::includes(c.begin(), c.end(), d.begin(), d.end())) return false;
    }
  return true;
}

// Link data of edge e: label of yz, link-neighbourhood.
struct Link {
  int n;
  Edge anchor;
  std::vector<int> rest;  // V minus the anchor
  std::vector<std::vector<int>> label;  // bitmask over anchor positions
  std::vector<bool> gamma;

  Link(int n_, const EdgeSet& g, Edge e) : n(n_), anchor(e), label(n_, std::vector<int>(n_, 0)), gamma(n_, false) {
    for (int v = 0; v < n; ++v)
      if (v != e[0] && v != e[1] && v != e[2]) rest.push_back(v);
    for (int y : rest)
      for (int z : rest) {
        if (y == z) continue;
        for (int i = 0; i < 3; ++i)
          if (g.count(sorted(e[i], y, z))) label[y][z] |= 1 << i;
      }
    for (int z : rest)
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (g.count(sorted(e[i], e[j], z))) gamma[z] = true;
  }

  long long weight() const {
    long long w = 0;
    for (int y : rest)
      for (int z : rest)
        if (y < z) w += __builtin_popcount(label[y][z]);
    return w;
  }
  long long gamma_size() const {
    long long c = 0;
    for (int z : rest) c += gamma[z];
    return c;
  }
  bool gamma_is_everything() const { return gamma_size() == static_cast<long long>(rest.size()); }

  // Weight-1 edges, underlying graph complete balanced tripartite, every
  // triangle carrying all three labels.
  bool rainbow_t3() const {
    const int s = static_cast<int>(rest.size());
    // non-adjacency must be an equivalence relation with balanced classes
    std::vector<int> cls(n, -1);
    int classes = 0;
    for (int y : rest) {
      if (cls[y] >= 0) continue;
      cls[y] = classes;
      for (int z : rest)
        if (z != y && label[y][z] == 0) {
          if (cls[z] >= 0) return false;
          cls[z] = classes;
        }
      ++classes;
    }
    for (int y : rest)
      for (int z : rest)
        if (y != z && (cls[y] == cls[z]) != (label[y][z] == 0)) return false;
    if (classes != std::min(s, 3)) return false;
    std::vector<int> sizes(3, 0);
    for (int y : rest) ++sizes[cls[y]];
    std::sort(sizes.begin(), sizes.end());
    if (sizes[2] - sizes[0] > 1 || sizes[0] + sizes[1] + sizes[2] != s) return false;
    for (int y : rest)
      for (int z : rest)
        if (label[y][z] && __builtin_popcount(label[y][z]) != 1) return false;
    for (int x : rest)
      for (int y : rest)
        for (int z : rest)
          if (x < y && y < z && label[x][y] && label[x][z] && label[y][z] &&
              (label[x][y] | label[x][z] | label[y][z]) != 7)
            return false;
    return true;
  }
};

// Minimum over all 3-colourings of the number of edges not meeting all three
// colours.
inline long long min_defect(int n, const EdgeSet& g) {
  long long best = -1;
  std::vector<int> col(n, 0);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i) {
      col[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    long long bad = 0;
    for (auto& e : g)
      if (col[e[0]] == col[e[1]] || col[e[0]] == col[e[2]] || col[e[1]] == col[e[2]]) ++bad;
    if (best < 0 || bad < best) best = bad;
  }
  return best;
}

}  // namespace oracle
