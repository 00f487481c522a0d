#include "turan/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace turan {

Graph2::Graph2(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [x, y] : edges) {
    if (x == y) throw std::invalid_argument("loop in 2-graph");
    if (x < 0 || y < 0 || x >= n || y >= n) throw std::invalid_argument("2-graph vertex out of range");
    edges_.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph2::has_edge(Vertex x, Vertex y) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::pair{std::min(x, y), std::max(x, y)});
}

TripleSystem named(Named id) {
  // Edge lists in the usual 1-based notation, shifted to 0-based.
  auto from_one_based = [](int n, std::initializer_list<std::array<int, 3>> es) {
    std::vector<std::array<int, 3>> z;
    for (auto e : es) z.push_back({e[0] - 1, e[1] - 1, e[2] - 1});
    return make_system(n, z);
  };
  switch (id) {
    case Named::K4Minus: return from_one_based(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    case Named::F5: return from_one_based(5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
    case Named::F6: return from_one_based(6, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}, {1, 5, 6}});
    case Named::K4_3: return from_one_based(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    case Named::C5_3:
      return from_one_based(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}});
  }
  throw std::invalid_argument("unknown named graph");
}

TripleSystem named(const std::string& id) {
  std::string key;
  for (char c : id) key.push_back(c == '-' ? '_' : static_cast<char>(std::tolower(c)));
  if (key == "k4_minus" || key == "k4m") return named(Named::K4Minus);
  if (key == "f5") return named(Named::F5);
  if (key == "f6") return named(Named::F6);
  if (key == "k4_3" || key == "k4") return named(Named::K4_3);
  if (key == "c5_3" || key == "c5") return named(Named::C5_3);
  throw std::invalid_argument("unknown named graph '" + id + "'");
}

std::vector<int> balanced_parts(int k, int n) {
  std::vector<int> parts(k, n / k);
  for (int i = 0; i < n % k; ++i) ++parts[i];
  return parts;
}

std::uint64_t s3_count(int n) {
  if (n < 3) return 0;
  auto p = balanced_parts(3, n);
  return static_cast<std::uint64_t>(p[0]) * p[1] * p[2];
}

TripleSystem s3_graph(int n) {
  if (n < 3) throw std::invalid_argument("s3_graph needs n >= 3");
  auto p = balanced_parts(3, n);
  std::vector<Triple> edges;
  for (int a = 0; a < p[0]; ++a)
    for (int b = p[0]; b < p[0] + p[1]; ++b)
      for (int c = p[0] + p[1]; c < n; ++c) edges.emplace_back(a, b, c);
  return TripleSystem(n, std::move(edges));
}

std::uint64_t tk_count(int k, int n) {
  if (k < 2) throw std::invalid_argument("Turan graph needs k >= 2");
  if (n < 0) throw std::invalid_argument("negative vertex count");
  auto parts = balanced_parts(k, n);
  std::uint64_t within = 0;
  for (int p : parts) within += binom(p, 2);
  return binom(n, 2) - within;
}

Graph2 turan_graph(int k, int n) {
  if (k < 2) throw std::invalid_argument("Turan graph needs k >= 2");
  if (n < 1) throw std::invalid_argument("Turan graph needs n >= 1");
  auto parts = balanced_parts(k, n);
  std::vector<int> part_of;
  for (int i = 0; i < k; ++i) part_of.insert(part_of.end(), parts[i], i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (part_of[x] != part_of[y]) edges.emplace_back(x, y);
  return Graph2(n, std::move(edges));
}

TripleSystem blow_up(const TripleSystem& h, int t) {
  if (t < 1) throw std::invalid_argument("blow-up factor must be >= 1");
  if (h.order() * t > kMaxVertices) throw std::invalid_argument("blow-up too large");
  std::vector<Triple> edges;
  for (const auto& e : h.edges())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        for (int l = 0; l < t; ++l) edges.emplace_back(e[0] * t + i, e[1] * t + j, e[2] * t + l);
  return TripleSystem(h.order() * t, std::move(edges));
}

bool identity_check(int which, int n, int k) {
  using I = long long;
  auto s3 = [](int m) { return static_cast<I>(s3_count(m)); };
  auto t = [](int kk, int m) { return static_cast<I>(tk_count(kk, m)); };
  switch (which) {
    case 1:
      if (n < 6) throw std::invalid_argument("identity (i) needs n >= 6");
      return s3(n) == s3(n - 3) + t(3, n - 3) + n - 2;
    case 2:
      if (n < 6) throw std::invalid_argument("identity (ii) needs n >= 6");
      return t(3, n) == t(3, n - 3) + 2 * n - 3;
    case 3:
      if (n < 5) throw std::invalid_argument("identity (iii) needs n >= 5");
      return t(3, n) == t(3, n - 2) + n - 1 + n / 3;
    case 4: {
      if (k < 3 || n < k) throw std::invalid_argument("identity (iv) needs n >= k >= 3");
      I ceil_nk = (n + k - 1) / k;
      return t(k, n) == t(k, n - 1) + n - ceil_nk;
    }
    default: throw std::invalid_argument("identity index must be 1..4");
  }
}

}  // namespace turan
