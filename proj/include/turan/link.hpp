#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/core.hpp"
#include "turan/embed.hpp"

namespace turan {

// Anchor letters: a = anchor[0], b = anchor[1], c = anchor[2]. A label is a
// 3-bit set over {a, b, c}.
using LabelSet = std::uint8_t;
inline constexpr LabelSet kA = 1, kB = 2, kC = 4;

// Pairs of anchor letters index the three link-neighbourhoods.
enum class AnchorPair { AB = 0, AC = 1, BC = 2 };
AnchorPair pair_of(int letter1, int letter2);

/// Edge-labelled link graph of an anchor edge abc of G on V- = V(G) - {a,b,c}.
///
/// yz carries letter x iff xyz is an edge of G, and z lies in the
/// neighbourhood of the pair xy iff xyz is an edge of G.
class LabeledLinkGraph {
 public:
  LabeledLinkGraph(const TripleSystem& g, const Triple& anchor);

  const TripleSystem& base() const { return base_; }
  const Triple& anchor() const { return anchor_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  LabelSet label(Vertex y, Vertex z) const { return labels_[y * n_ + z]; }
  bool adjacent(Vertex y, Vertex z) const { return label(y, z) != 0; }
  // Pairs yz (y < z) with a non-empty label.
  std::vector<std::pair<Vertex, Vertex>> labeled_edges() const;

  bool in_gamma(Vertex z, AnchorPair p) const { return (gamma_[z] >> static_cast<int>(p)) & 1; }
  bool in_gamma(Vertex z) const { return gamma_[z] != 0; }
  std::vector<Vertex> gamma(AnchorPair p) const;
  std::vector<Vertex> gamma_union() const;
  // Vertices lying in two or more of the three neighbourhoods.
  std::vector<Vertex> gamma_overlap() const;

 private:
  TripleSystem base_;
  Triple anchor_;
  int n_;
  std::vector<Vertex> vertices_;
  std::vector<LabelSet> labels_;
  std::vector<std::uint8_t> gamma_;
};

LabeledLinkGraph link_of_edge(const TripleSystem& g, const Triple& e);

// f[i] = number of edges meeting e in exactly i vertices.
std::array<std::size_t, 4> f_profile(const TripleSystem& g, const Triple& e);

std::size_t weight(const LabeledLinkGraph& l);

bool is_rainbow_t3(const LabeledLinkGraph& l);

struct LinkPartition {
  std::vector<Vertex> gamma_abc, v4, r;
  // Vertices in both gamma_abc and v4; empty whenever G is {K4-, F6}-free.
  std::vector<Vertex> overlap;
};

// Vertices of the underlying link 2-graph that lie in some K4.
std::vector<Vertex> k4_vertices(const LabeledLinkGraph& l);
LinkPartition partition(const LabeledLinkGraph& l);

enum class ConfigId { F6_1, F6_2, F6_3, F6_4, F6_5, K4m_1, K4m_2, K4m_3 };
inline constexpr std::array<ConfigId, 8> kAllConfigs = {
    ConfigId::F6_1, ConfigId::F6_2, ConfigId::F6_3,  ConfigId::F6_4,
    ConfigId::F6_5, ConfigId::K4m_1, ConfigId::K4m_2, ConfigId::K4m_3};
std::string to_string(ConfigId id);

struct ConfigWitness {
  ConfigId id;
  // letter i of the configuration is played by anchor letter permutation[i]
  std::array<int, 3> permutation;
  // Link vertices playing x, y, z, w (only as many as the configuration uses).
  std::vector<Vertex> vertices;
  Named pattern;  // F6 or K4Minus
  Embedding implied;
};

// Link-vertex roles of a configuration, in order x, y, z, w.
int config_vertex_count(ConfigId id);
Named config_pattern(ConfigId id);

std::vector<ConfigWitness> forbidden_config_scan(const LabeledLinkGraph& l);

// Smallest host realising configuration `id` under the letter permutation:
// anchor 012, link vertices 3.. in role order x, y, z, w.
TripleSystem plant_config(ConfigId id, const std::array<int, 3>& permutation);

struct AuditCheck {
  int index = 0;  // 1..9
  bool pass = true;
  std::vector<std::vector<Vertex>> witnesses;
};

struct AuditReport {
  Triple anchor;
  std::array<AuditCheck, 9> checks;
  bool all_pass() const;
};

AuditReport structural_audit(const TripleSystem& g, const Triple& e);

struct KeyBound {
  long long lhs = 0;  // w(L) + |Gamma_abc|
  long long rhs = 0;  // t3(n-3) + n - 3
  bool equality_structure = false;  // L is rainbow T3(n-3) and Gamma_abc = V-
};

KeyBound key_bound(const TripleSystem& g, const Triple& e);

struct InequalityResult {
  bool holds = false;
  bool equality = false;
};

// t3(j+k) + t4(l) + j + k + kl <= t3(s) + s for s = j+k+l >= 5 and
// j >= s - floor(s/3) - 1.
InequalityResult k4_inequality(long long j, long long k, long long l);

// Edge maximising the codegree sum d_uv + d_uw + d_vw (lexicographically
// least on ties). Throws if G has no edges or fewer than s3(n) edges.
Triple good_edge(const TripleSystem& g);
// |Gamma| of the edge computed from codegrees: d_uv + d_uw + d_vw - 3.
long long codegree_gamma(const TripleSystem& g, const Triple& e);

// n(n-1)(n - floor(n/3) - 1) / 18 < s3(n), in integers.
bool convexity_bound_check(int n);

}  // namespace turan
