#include "turan/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace turan {

std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

Triple::Triple(Vertex a, Vertex b, Vertex c) {
  if (a < 0 || b < 0 || c < 0 || a >= kMaxVertices || b >= kMaxVertices || c >= kMaxVertices)
    throw std::invalid_argument("triple vertex out of range");
  if (a == b || a == c || b == c) throw std::invalid_argument("triple has a repeated vertex");
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  v = {static_cast<std::uint8_t>(s[0]), static_cast<std::uint8_t>(s[1]),
       static_cast<std::uint8_t>(s[2])};
}

std::size_t colex_index(const Triple& t) {
  return binom(t[2], 3) + binom(t[1], 2) + t[0];
}

Triple triple_at(std::size_t index) {
  int c = 2;
  while (binom(c + 1, 3) <= index) ++c;
  index -= binom(c, 3);
  int b = 1;
  while (binom(b + 1, 2) <= index) ++b;
  index -= binom(b, 2);
  return Triple(static_cast<int>(index), b, c);
}

namespace {

std::size_t word_count(int n) { return (binom(n, 3) + 63) / 64; }

}  // namespace

TripleSystem::TripleSystem(int n, std::vector<Triple> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  for (const auto& t : edges_)
    if (t[2] >= n) throw std::invalid_argument("edge " + to_string(t) + " has a vertex >= n");
  std::sort(edges_.begin(), edges_.end(), [](const Triple& x, const Triple& y) {
    return colex_index(x) < colex_index(y);
  });
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  bits_.assign(word_count(n), 0);
  for (const auto& t : edges_) {
    auto i = colex_index(t);
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

bool TripleSystem::has_edge(const Triple& t) const {
  if (t[2] >= n_) return false;
  auto i = colex_index(t);
  return (bits_[i / 64] >> (i % 64)) & 1;
}

int TripleSystem::degree(Vertex x) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [x](const Triple& t) { return t.contains(x); }));
}

TripleSystem TripleSystem::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<Triple> out;
  out.reserve(edges_.size());
  for (const auto& t : edges_) out.emplace_back(perm[t[0]], perm[t[1]], perm[t[2]]);
  return TripleSystem(n_, std::move(out));
}

TripleSystem TripleSystem::with_edge(const Triple& t) const {
  auto e = edges_;
  e.push_back(t);
  return TripleSystem(n_, std::move(e));
}

TripleSystem TripleSystem::without_edge(const Triple& t) const {
  auto e = edges_;
  std::erase(e, t);
  return TripleSystem(n_, std::move(e));
}

TripleSystem make_system(int n, std::span<const std::array<int, 3>> edges) {
  std::vector<Triple> ts;
  ts.reserve(edges.size());
  for (const auto& e : edges) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] >= n || e[1] >= n || e[2] >= n)
      throw std::invalid_argument("vertex out of range in edge list");
    ts.emplace_back(e[0], e[1], e[2]);
  }
  return TripleSystem(n, std::move(ts));
}

TripleSystem make_system(int n, std::initializer_list<std::array<int, 3>> edges) {
  return make_system(n, std::span<const std::array<int, 3>>(edges.begin(), edges.size()));
}

std::vector<std::uint64_t> pair_masks(const TripleSystem& g) {
  const int n = g.order();
  std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * n, 0);
  for (const auto& t : g.edges()) {
    const int a = t[0], b = t[1], c = t[2];
    m[a * n + b] |= std::uint64_t{1} << c;
    m[b * n + a] |= std::uint64_t{1} << c;
    m[a * n + c] |= std::uint64_t{1} << b;
    m[c * n + a] |= std::uint64_t{1} << b;
    m[b * n + c] |= std::uint64_t{1} << a;
    m[c * n + b] |= std::uint64_t{1} << a;
  }
  return m;
}

int codegree(const TripleSystem& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("codegree needs two distinct vertices");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw std::invalid_argument("codegree vertex out of range");
  int d = 0;
  for (const auto& t : g.edges())
    if (t.contains(x) && t.contains(y)) ++d;
  return d;
}

TripleSystem induced(const TripleSystem& g, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("induced: repeated vertex");
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.order()) throw std::invalid_argument("induced: vertex not in G");
    pos[s[i]] = static_cast<int>(i);
  }
  std::vector<Triple> out;
  for (const auto& t : g.edges())
    if (pos[t[0]] >= 0 && pos[t[1]] >= 0 && pos[t[2]] >= 0)
      out.emplace_back(pos[t[0]], pos[t[1]], pos[t[2]]);
  return TripleSystem(static_cast<int>(s.size()), std::move(out));
}

// ---------------------------------------------------------------------------
// Canonical labeling: individualization-refinement over ordered partitions.
// Each leaf yields a vertex order; the leaf whose relabeled colex bitset is
// least (as a big-endian number) wins. Automorphisms found at equal leaves
// prune sibling branches.

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  explicit Canonizer(const TripleSystem& g) : g_(g), n_(g.order()) {
    incident_.resize(n_);
    for (const auto& t : g.edges())
      for (int i = 0; i < 3; ++i) incident_[t[i]].push_back(t);
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Cells cells(1);
    cells[0].resize(n_);
    std::iota(cells[0].begin(), cells[0].end(), 0);
    refine(cells);
    std::vector<Vertex> prefix;
    search(cells, prefix);
    return best_pos_;
  }

 private:
  void refine(Cells& cells) const {
    std::vector<int> color(n_);
    for (;;) {
      const int k = static_cast<int>(cells.size());
      if (k == n_) return;
      for (int i = 0; i < k; ++i)
        for (Vertex v : cells[i]) color[v] = i;
      const int width = k * (k + 1) / 2;
      std::vector<std::vector<int>> sig(n_, std::vector<int>(width, 0));
      for (Vertex v = 0; v < n_; ++v) {
        for (const auto& t : incident_[v]) {
          int o[2], j = 0;
          for (int i = 0; i < 3; ++i)
            if (t[i] != v) o[j++] = color[t[i]];
          int lo = std::min(o[0], o[1]), hi = std::max(o[0], o[1]);
          ++sig[v][hi * (hi + 1) / 2 + lo];
        }
      }
      Cells next;
      next.reserve(n_);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::stable_sort(cell.begin(), cell.end(),
                         [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
            next.emplace_back(cell.begin() + start, cell.begin() + i);
            start = i;
          }
        }
      }
      if (next.size() == cells.size()) return;
      cells = std::move(next);
    }
  }

  std::vector<std::uint64_t> leaf_bits(const std::vector<Vertex>& pos) const {
    std::vector<std::uint64_t> bits((binom(n_, 3) + 63) / 64, 0);
    for (const auto& t : g_.edges()) {
      auto i = colex_index(Triple(pos[t[0]], pos[t[1]], pos[t[2]]));
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return bits;
  }

  // <0 if a < b as big-endian numbers.
  static int compare(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  void search(const Cells& cells, std::vector<Vertex>& prefix) {
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> pos(n_);
      for (int i = 0; i < n_; ++i) pos[cells[i][0]] = i;
      auto bits = leaf_bits(pos);
      if (best_pos_.empty()) {
        best_pos_ = std::move(pos);
        best_bits_ = std::move(bits);
        return;
      }
      int c = compare(bits, best_bits_);
      if (c < 0) {
        best_pos_ = std::move(pos);
        best_bits_ = std::move(bits);
      } else if (c == 0) {
        // pos^{-1} . best_pos maps this leaf's order onto the best one.
        std::vector<Vertex> inv(n_), aut(n_);
        for (int v = 0; v < n_; ++v) inv[best_pos_[v]] = v;
        for (int v = 0; v < n_; ++v) aut[v] = inv[pos[v]];
        automorphisms_.push_back(std::move(aut));
      }
      return;
    }

    const auto idx = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex v : cells[idx]) {
      if (equivalent_to_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != idx) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  // True if some known automorphism fixing the prefix pointwise links v to a
  // vertex already explored at this node.
  bool equivalent_to_tried(Vertex v, const std::vector<Vertex>& tried,
                           const std::vector<Vertex>& prefix) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& aut : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return aut[p] == p; });
      if (!fixes) continue;
      for (Vertex x = 0; x < n_; ++x) parent[find(x)] = find(aut[x]);
    }
    return std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return find(w) == find(v); });
  }

  const TripleSystem& g_;
  int n_;
  std::vector<std::vector<Triple>> incident_;
  std::vector<Vertex> best_pos_;
  std::vector<std::uint64_t> best_bits_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

std::string pack_big_endian(const std::vector<std::uint64_t>& words, std::size_t nbits) {
  const std::size_t nbytes = (nbits + 7) / 8;
  std::string out(nbytes, '\0');
  for (std::size_t b = 0; b < nbytes; ++b) {
    std::size_t byte_index = nbytes - 1 - b;  // b-th least significant byte
    std::uint64_t w = words.empty() ? 0 : words[(b * 8) / 64];
    out[byte_index] = static_cast<char>((w >> ((b * 8) % 64)) & 0xff);
  }
  return out;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const TripleSystem& g) { return Canonizer(g).run(); }

CanonicalCode canonical_form(const TripleSystem& g) {
  auto pos = canonical_labeling(g);
  auto h = g.relabeled(pos);
  return CanonicalCode{g.order(), pack_big_endian(h.bits(), binom(g.order(), 3))};
}

bool are_isomorphic(const TripleSystem& g, const TripleSystem& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t ndigits = (binom(n, 3) + 3) / 4;
  std::string h;
  for (unsigned char c : bytes) {
    h.push_back(digits[c >> 4]);
    h.push_back(digits[c & 15]);
  }
  // Bytes hold 2 digits each; drop the leading pad digit when C(n,3)/4 is odd.
  h = h.substr(h.size() - ndigits);
  return "h3:" + std::to_string(n) + ":" + h;
}

std::string to_string(const Triple& t) {
  if (t[2] < 9)
    return std::to_string(t[0] + 1) + std::to_string(t[1] + 1) + std::to_string(t[2] + 1);
  return std::to_string(t[0] + 1) + "-" + std::to_string(t[1] + 1) + "-" + std::to_string(t[2] + 1);
}

std::string to_string(const TripleSystem& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) s += ",";
    s += to_string(g.edges()[i]);
  }
  return s + "}";
}

}  // namespace turan
