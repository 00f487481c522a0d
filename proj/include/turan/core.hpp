#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace turan {

using Vertex = int;

// Vertices live in 0..kMaxVertices-1 so that codegree neighbourhoods fit in a
// single 64-bit word.
inline constexpr int kMaxVertices = 64;

std::uint64_t binom(int n, int k);

// A 3-set {a < b < c}.
struct Triple {
  std::array<std::uint8_t, 3> v{};

  Triple() = default;
  // Sorts its arguments; throws std::invalid_argument on repeated vertices.
  Triple(Vertex a, Vertex b, Vertex c);

  Vertex operator[](int i) const { return v[i]; }
  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }

  auto operator<=>(const Triple&) const = default;
};

// Colexicographic rank: {a<b<c} -> C(c,3) + C(b,2) + a. Independent of n.
std::size_t colex_index(const Triple& t);
Triple triple_at(std::size_t index);

/// Immutable 3-uniform hypergraph on vertices 0..n-1.
///
/// Edges are kept sorted (colex order) together with a dense bitset over the
/// C(n,3) colex-ranked triples for O(1) membership.
class TripleSystem {
 public:
  TripleSystem() = default;
  // Deduplicates; throws std::invalid_argument for vertices outside 0..n-1.
  TripleSystem(int n, std::vector<Triple> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Triple>& edges() const { return edges_; }
  const std::vector<std::uint64_t>& bits() const { return bits_; }

  bool has_edge(const Triple& t) const;
  bool has_edge(Vertex a, Vertex b, Vertex c) const { return has_edge(Triple(a, b, c)); }

  int degree(Vertex x) const;

  // Vertex x of *this becomes perm[x] in the result.
  TripleSystem relabeled(std::span<const Vertex> perm) const;
  TripleSystem with_edge(const Triple& t) const;
  TripleSystem without_edge(const Triple& t) const;

  bool operator==(const TripleSystem& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::uint64_t> bits_;
};

TripleSystem make_system(int n, std::span<const std::array<int, 3>> edges);
TripleSystem make_system(int n, std::initializer_list<std::array<int, 3>> edges);

/// Isomorphism-invariant identifier: the colex bitset of the canonically
/// relabeled system, packed big-endian.
struct CanonicalCode {
  int n = 0;
  std::string bytes;

  std::string hex() const;  // "h3:<n>:<hex digits>"
  auto operator<=>(const CanonicalCode&) const = default;
};

// canonical_labeling(G)[x] is the position of vertex x in the canonical order;
// G.relabeled(canonical_labeling(G)) is the same system for all relabelings of G.
std::vector<Vertex> canonical_labeling(const TripleSystem& g);
CanonicalCode canonical_form(const TripleSystem& g);
bool are_isomorphic(const TripleSystem& g, const TripleSystem& h);

// Subsystem on the sorted vertex set S, relabeled 0..|S|-1 in order.
TripleSystem induced(const TripleSystem& g, std::span<const Vertex> subset);

int codegree(const TripleSystem& g, Vertex x, Vertex y);

// Codegree neighbourhoods: mask[x * n + y] has bit z set iff xyz is an edge.
std::vector<std::uint64_t> pair_masks(const TripleSystem& g);

std::string to_string(const Triple& t);  // 1-based, e.g. "123"
std::string to_string(const TripleSystem& g);

}  // namespace turan
