#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turan/core.hpp"

namespace turan {

/// Simple 2-graph: sorted pairs, no loops, no repeats.
class Graph2 {
 public:
  Graph2() = default;
  Graph2(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool has_edge(Vertex x, Vertex y) const;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

enum class Named { K4Minus, F5, F6, K4_3, C5_3 };

TripleSystem named(Named id);
// Accepts k4_minus, f5, f6, k4_3, c5_3 (case-insensitive, '-' or '_').
TripleSystem named(const std::string& id);

// Balanced part sizes, largest first; parts are contiguous vertex blocks.
std::vector<int> balanced_parts(int k, int n);

TripleSystem s3_graph(int n);
std::uint64_t s3_count(int n);  // 0 for n < 3

Graph2 turan_graph(int k, int n);
std::uint64_t tk_count(int k, int n);

// Vertex a of H becomes the block [a*t, (a+1)*t).
TripleSystem blow_up(const TripleSystem& h, int t);

// Checks one of the recurrences relating s3 and t_k:
//   1: s3(n) = s3(n-3) + t3(n-3) + n - 2      (n >= 6)
//   2: t3(n) = t3(n-3) + 2n - 3               (n >= 6)
//   3: t3(n) = t3(n-2) + n - 1 + floor(n/3)   (n >= 5)
//   4: tk(n) = tk(n-1) + n - ceil(n/k)        (n >= k >= 3)
bool identity_check(int which, int n, int k = 3);

}  // namespace turan
