#include "turan/link.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace turan {

AnchorPair pair_of(int letter1, int letter2) {
  int m = (1 << letter1) | (1 << letter2);
  switch (m) {
    case 3: return AnchorPair::AB;
    case 5: return AnchorPair::AC;
    case 6: return AnchorPair::BC;
  }
  throw std::invalid_argument("pair_of needs two distinct letters in 0..2");
}

LabeledLinkGraph::LabeledLinkGraph(const TripleSystem& g, const Triple& anchor)
    : base_(g), anchor_(anchor), n_(g.order()) {
  if (!g.has_edge(anchor)) throw std::invalid_argument("anchor " + to_string(anchor) + " is not an edge");
  labels_.assign(static_cast<std::size_t>(n_) * n_, 0);
  gamma_.assign(n_, 0);
  for (Vertex v = 0; v < n_; ++v)
    if (!anchor.contains(v)) vertices_.push_back(v);
  auto letter_of = [&](Vertex v) {
    for (int i = 0; i < 3; ++i)
      if (anchor[i] == v) return i;
    return -1;
  };
  for (const auto& t : g.edges()) {
    int letters[3], others[3], nl = 0, no = 0;
    for (int i = 0; i < 3; ++i) {
      int li = letter_of(t[i]);
      if (li >= 0) letters[nl++] = li;
      else others[no++] = t[i];
    }
    if (nl == 1) {
      labels_[others[0] * n_ + others[1]] |= LabelSet(1u << letters[0]);
      labels_[others[1] * n_ + others[0]] |= LabelSet(1u << letters[0]);
    } else if (nl == 2) {
      gamma_[others[0]] |= std::uint8_t(1u << static_cast<int>(pair_of(letters[0], letters[1])));
    }
  }
}

std::vector<std::pair<Vertex, Vertex>> LabeledLinkGraph::labeled_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (adjacent(vertices_[i], vertices_[j])) out.emplace_back(vertices_[i], vertices_[j]);
  return out;
}

std::vector<Vertex> LabeledLinkGraph::gamma(AnchorPair p) const {
  std::vector<Vertex> out;
  for (Vertex v : vertices_)
    if (in_gamma(v, p)) out.push_back(v);
  return out;
}

std::vector<Vertex> LabeledLinkGraph::gamma_union() const {
  std::vector<Vertex> out;
  for (Vertex v : vertices_)
    if (in_gamma(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> LabeledLinkGraph::gamma_overlap() const {
  std::vector<Vertex> out;
  for (Vertex v : vertices_)
    if (std::popcount(gamma_[v]) > 1) out.push_back(v);
  return out;
}

LabeledLinkGraph link_of_edge(const TripleSystem& g, const Triple& e) { return LabeledLinkGraph(g, e); }

std::array<std::size_t, 4> f_profile(const TripleSystem& g, const Triple& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("f_profile: " + to_string(e) + " is not an edge");
  std::array<std::size_t, 4> f{};
  for (const auto& t : g.edges()) {
    int meet = 0;
    for (int i = 0; i < 3; ++i) meet += e.contains(t[i]);
    ++f[meet];
  }
  return f;
}

std::size_t weight(const LabeledLinkGraph& l) {
  std::size_t w = 0;
  for (auto [y, z] : l.labeled_edges()) w += std::popcount(l.label(y, z));
  return w;
}

namespace {

bool weight_one(LabelSet s) { return std::popcount(s) == 1; }

bool rainbow_triangle(const LabeledLinkGraph& l, Vertex x, Vertex y, Vertex z) {
  LabelSet p = l.label(x, y), q = l.label(x, z), r = l.label(y, z);
  return weight_one(p) && weight_one(q) && weight_one(r) && (p | q | r) == (kA | kB | kC);
}

// Calls f on every k-subset of vs that is a clique of the underlying graph.
template <class F>
void for_each_clique(const LabeledLinkGraph& l, int k, F&& f) {
  const auto& vs = l.vertices();
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < vs.size(); ++i) {
      Vertex v = vs[i];
      if (std::all_of(cur.begin(), cur.end(), [&](Vertex u) { return l.adjacent(u, v); })) {
        cur.push_back(v);
        self(self, i + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
}

}  // namespace

bool is_rainbow_t3(const LabeledLinkGraph& l) {
  const auto& vs = l.vertices();
  const int s = static_cast<int>(vs.size());
  // Underlying graph is T3(s) iff non-adjacency is an equivalence relation with
  // balanced classes of at most three.
  std::vector<int> cls(s, -1);
  std::vector<int> sizes;
  for (int i = 0; i < s; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(sizes.size());
    sizes.push_back(1);
    for (int j = i + 1; j < s; ++j)
      if (!l.adjacent(vs[i], vs[j])) {
        if (cls[j] >= 0) return false;
        cls[j] = cls[i];
        ++sizes.back();
      }
  }
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if ((cls[i] == cls[j]) == l.adjacent(vs[i], vs[j])) return false;
  auto expected = balanced_parts(3, s);
  std::erase(expected, 0);
  std::sort(sizes.rbegin(), sizes.rend());
  if (sizes != expected) return false;
  for (auto [y, z] : l.labeled_edges())
    if (!weight_one(l.label(y, z))) return false;
  bool rainbow = true;
  for_each_clique(l, 3, [&](const std::vector<Vertex>& t) {
    if (!rainbow_triangle(l, t[0], t[1], t[2])) rainbow = false;
  });
  return rainbow;
}

std::vector<Vertex> k4_vertices(const LabeledLinkGraph& l) {
  std::set<Vertex> in;
  for_each_clique(l, 4, [&](const std::vector<Vertex>& q) { in.insert(q.begin(), q.end()); });
  return {in.begin(), in.end()};
}

LinkPartition partition(const LabeledLinkGraph& l) {
  LinkPartition p;
  p.gamma_abc = l.gamma_union();
  p.v4 = k4_vertices(l);
  std::set_intersection(p.gamma_abc.begin(), p.gamma_abc.end(), p.v4.begin(), p.v4.end(),
                        std::back_inserter(p.overlap));
  for (Vertex v : l.vertices())
    if (!std::binary_search(p.gamma_abc.begin(), p.gamma_abc.end(), v) &&
        !std::binary_search(p.v4.begin(), p.v4.end(), v))
      p.r.push_back(v);
  return p;
}

// ---------------------------------------------------------------------------
// Forbidden configurations. Roles 0..2 are the letters a, b, c; roles 3..6 are
// link vertices x, y, z, w. A label condition (u, v, S) asks for every letter of
// S on uv; a neighbourhood condition (u, p, q) asks for u in Gamma_pq.

namespace {

constexpr int kX = 3, kY = 4, kZ = 5, kW = 6;

struct LabelCond {
  int u, v;
  LabelSet letters;
};
struct GammaCond {
  int u, p, q;
};
struct ConfigSpec {
  ConfigId id;
  Named pattern;
  int link_vertices;
  std::vector<LabelCond> labels;
  std::vector<GammaCond> gammas;
  // 1-based pattern vertex played by each role a, b, c, x, y, z, w (0: unused).
  std::array<int, 7> pattern_vertex;
};

const std::vector<ConfigSpec>& config_specs() {
  static const std::vector<ConfigSpec> specs = {
      {ConfigId::F6_1, Named::F6, 3,
       {{kX, kY, kA}, {kX, kZ, kA}, {kY, kZ, kB}}, {},
       {1, 5, 6, 2, 3, 4, 0}},
      {ConfigId::F6_2, Named::F6, 3,
       {{kX, kY, kA | kB}, {kX, kZ, kC}}, {},
       {3, 4, 5, 1, 2, 6, 0}},
      {ConfigId::F6_3, Named::F6, 3,
       {{kX, kY, kC}, {kY, kZ, kA}}, {{kX, 0, 1}},
       {1, 2, 3, 4, 5, 6, 0}},
      {ConfigId::F6_4, Named::F6, 4,
       {{kX, kY, kA}, {kZ, kW, kA}, {kY, kZ, kB}}, {{kX, 0, 1}},
       {1, 3, 0, 2, 4, 5, 6}},
      {ConfigId::F6_5, Named::F6, 3,
       {{kX, kY, kB}}, {{kX, 0, 2}, {kY, 1, 2}, {kZ, 0, 1}},
       {5, 1, 3, 4, 2, 6, 0}},
      {ConfigId::K4m_1, Named::K4Minus, 3,
       {{kX, kY, kA}, {kX, kZ, kA}, {kY, kZ, kA}}, {},
       {1, 0, 0, 2, 3, 4, 0}},
      {ConfigId::K4m_2, Named::K4Minus, 2,
       {{kX, kY, kA | kB}}, {{kX, 0, 1}},
       {3, 4, 0, 1, 2, 0, 0}},
      {ConfigId::K4m_3, Named::K4Minus, 2,
       {{kX, kY, kA}}, {{kX, 0, 1}, {kY, 0, 1}},
       {1, 2, 0, 3, 4, 0, 0}},
  };
  return specs;
}

const ConfigSpec& spec_of(ConfigId id) { return config_specs()[static_cast<int>(id)]; }

constexpr std::array<std::array<int, 3>, 6> kLetterPerms = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

LabelSet permute(LabelSet s, const std::array<int, 3>& perm) {
  LabelSet out = 0;
  for (int i = 0; i < 3; ++i)
    if ((s >> i) & 1) out |= LabelSet(1u << perm[i]);
  return out;
}

}  // namespace

std::string to_string(ConfigId id) {
  static constexpr const char* names[] = {"F6-1", "F6-2", "F6-3", "F6-4",
                                          "F6-5", "K4m-1", "K4m-2", "K4m-3"};
  return names[static_cast<int>(id)];
}

int config_vertex_count(ConfigId id) { return spec_of(id).link_vertices; }
Named config_pattern(ConfigId id) { return spec_of(id).pattern; }

std::vector<ConfigWitness> forbidden_config_scan(const LabeledLinkGraph& l) {
  std::vector<ConfigWitness> out;
  std::set<std::pair<int, std::vector<Vertex>>> seen;
  const auto& vs = l.vertices();
  for (const auto& spec : config_specs()) {
    for (const auto& perm : kLetterPerms) {
      std::array<Vertex, 7> role{};
      for (int i = 0; i < 3; ++i) role[i] = l.anchor()[perm[i]];

      // Conditions are checked as soon as all their roles are bound.
      auto satisfied = [&](int bound_upto) {
        for (const auto& c : spec.labels) {
          if (std::max(c.u, c.v) != bound_upto) continue;
          LabelSet need = permute(c.letters, perm);
          if ((l.label(role[c.u], role[c.v]) & need) != need) return false;
        }
        for (const auto& c : spec.gammas) {
          if (c.u != bound_upto) continue;
          if (!l.in_gamma(role[c.u], pair_of(perm[c.p], perm[c.q]))) return false;
        }
        return true;
      };

      auto rec = [&](auto&& self, int r) -> void {
        if (r == kX + spec.link_vertices) {
          Embedding emb;
          const int pn = spec.pattern == Named::F6 ? 6 : 4;
          emb.map.assign(pn, -1);
          for (int i = 0; i < 7; ++i)
            if (spec.pattern_vertex[i]) emb.map[spec.pattern_vertex[i] - 1] = role[i];
          // one witness per configuration and host vertex set
          std::vector<Vertex> image = emb.map;
          std::sort(image.begin(), image.end());
          if (!seen.insert({static_cast<int>(spec.id), image}).second) return;
          ConfigWitness w{spec.id, perm, {role.begin() + kX, role.begin() + r}, spec.pattern, emb};
          out.push_back(std::move(w));
          return;
        }
        for (Vertex v : vs) {
          bool used = false;
          for (int i = kX; i < r; ++i) used |= role[i] == v;
          if (used) continue;
          role[r] = v;
          if (satisfied(r)) self(self, r + 1);
        }
      };
      rec(rec, kX);
    }
  }
  return out;
}

TripleSystem plant_config(ConfigId id, const std::array<int, 3>& perm) {
  const auto& spec = spec_of(id);
  std::array<Vertex, 7> role{};
  for (int i = 0; i < 3; ++i) role[i] = perm[i];
  for (int i = 0; i < spec.link_vertices; ++i) role[kX + i] = 3 + i;
  std::vector<Triple> edges{Triple(0, 1, 2)};
  for (const auto& c : spec.labels)
    for (int letter = 0; letter < 3; ++letter)
      if ((c.letters >> letter) & 1) edges.emplace_back(role[letter], role[c.u], role[c.v]);
  for (const auto& c : spec.gammas) edges.emplace_back(role[c.p], role[c.q], role[c.u]);
  return TripleSystem(3 + spec.link_vertices, std::move(edges));
}

// ---------------------------------------------------------------------------

bool AuditReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

AuditReport structural_audit(const TripleSystem& g, const Triple& e) {
  const LabeledLinkGraph l(g, e);
  const auto& vs = l.vertices();
  AuditReport rep;
  rep.anchor = e;
  for (int i = 0; i < 9; ++i) rep.checks[i].index = i + 1;
  auto fail = [&](int check, std::vector<Vertex> w) {
    rep.checks[check - 1].pass = false;
    rep.checks[check - 1].witnesses.push_back(std::move(w));
  };
  auto weight_of = [&](Vertex x, Vertex y) { return std::popcount(l.label(x, y)); };

  // (i) triangles are rainbow
  for_each_clique(l, 3, [&](const std::vector<Vertex>& t) {
    if (!rainbow_triangle(l, t[0], t[1], t[2])) fail(1, t);
  });
  // (ii) K4s are rainbow
  for_each_clique(l, 4, [&](const std::vector<Vertex>& q) {
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) ok = ok && rainbow_triangle(l, q[i], q[j], q[k]);
    if (!ok) fail(2, q);
  });
  // (iii) no K5
  for_each_clique(l, 5, [&](const std::vector<Vertex>& q) { fail(3, q); });
  // (iv) weight-3 edges are isolated and avoid the neighbourhood
  for (auto [x, y] : l.labeled_edges()) {
    if (weight_of(x, y) != 3) continue;
    bool ok = !l.in_gamma(x) && !l.in_gamma(y);
    for (Vertex z : vs) {
      if (z == x || z == y) continue;
      if (l.adjacent(x, z) || l.adjacent(y, z)) ok = false;
    }
    if (!ok) fail(4, {x, y});
  }
  const auto part = partition(l);
  auto in_v4 = [&](Vertex v) { return std::binary_search(part.v4.begin(), part.v4.end(), v); };
  // (v) neighbourhood and K4 vertices are disjoint
  for (Vertex v : part.overlap) fail(5, {v});
  // (vi) no link edges between them
  for (auto [x, y] : l.labeled_edges())
    if ((l.in_gamma(x) && in_v4(y)) || (l.in_gamma(y) && in_v4(x))) fail(6, {x, y});
  // (vii) K4 vertices meet only weight-1 edges
  for (Vertex x : part.v4)
    for (Vertex y : vs)
      if (y != x && weight_of(x, y) > 1) fail(7, {x, y});
  // (viii) x in Gamma_pr, y in Gamma_qr, l(xy) = pq forces Gamma_pq empty and
  // pins the other labels at x (to p) and at y (to q), away from the
  // neighbourhood.
  for (const auto& perm : kLetterPerms) {
    const int p = perm[0], q = perm[1], r = perm[2];
    const LabelSet pq = LabelSet((1u << p) | (1u << q));
    for (Vertex x : vs) {
      if (!l.in_gamma(x, pair_of(p, r))) continue;
      for (Vertex y : vs) {
        if (y == x || !l.in_gamma(y, pair_of(q, r)) || l.label(x, y) != pq) continue;
        for (Vertex z : l.gamma(pair_of(p, q))) fail(8, {x, y, z});
        for (Vertex z : vs) {
          if (z == x || z == y) continue;
          if (l.adjacent(x, z) && (l.in_gamma(z) || l.label(x, z) != LabelSet(1u << p)))
            fail(8, {x, y, z});
          if (l.adjacent(y, z) && (l.in_gamma(z) || l.label(y, z) != LabelSet(1u << q)))
            fail(8, {x, y, z});
        }
      }
    }
  }
  // (ix) a weight-2 edge xy and a neighbourhood vertex z adjacent to x give |l(xz)| <= 1
  for (Vertex x : vs)
    for (Vertex y : vs) {
      if (y == x || weight_of(x, y) != 2) continue;
      for (Vertex z : vs)
        if (z != x && z != y && l.in_gamma(z) && weight_of(x, z) > 1) fail(9, {x, y, z});
    }
  return rep;
}

KeyBound key_bound(const TripleSystem& g, const Triple& e) {
  const int n = g.order();
  if (n < 6) throw std::invalid_argument("key_bound needs n >= 6");
  const LabeledLinkGraph l(g, e);
  KeyBound kb;
  const auto gamma = l.gamma_union();
  kb.lhs = static_cast<long long>(weight(l) + gamma.size());
  kb.rhs = static_cast<long long>(tk_count(3, n - 3)) + n - 3;
  kb.equality_structure = is_rainbow_t3(l) && gamma.size() == l.vertices().size();
  return kb;
}

InequalityResult k4_inequality(long long j, long long k, long long l) {
  const long long s = j + k + l;
  if (j < 0 || k < 0 || l < 0) throw std::invalid_argument("k4_inequality: negative argument");
  if (s < 5) throw std::invalid_argument("k4_inequality: needs j + k + l >= 5");
  if (j < s - s / 3 - 1) throw std::invalid_argument("k4_inequality: needs j >= s - floor(s/3) - 1");
  auto t = [](int kk, long long m) { return static_cast<long long>(tk_count(kk, static_cast<int>(m))); };
  const long long lhs = t(3, j + k) + t(4, l) + j + k + k * l;
  const long long rhs = t(3, s) + s;
  return {lhs <= rhs, lhs == rhs};
}

long long codegree_gamma(const TripleSystem& g, const Triple& e) {
  const auto m = pair_masks(g);
  const int n = g.order();
  auto d = [&](Vertex x, Vertex y) { return std::popcount(m[x * n + y]); };
  return d(e[0], e[1]) + d(e[0], e[2]) + d(e[1], e[2]) - 3;
}

Triple good_edge(const TripleSystem& g) {
  if (g.size() == 0) throw std::invalid_argument("good_edge: no edges");
  if (g.size() < s3_count(g.order())) throw std::invalid_argument("good_edge: fewer than s3(n) edges");
  const auto m = pair_masks(g);
  const int n = g.order();
  auto d = [&](Vertex x, Vertex y) { return std::popcount(m[x * n + y]); };
  Triple best = g.edges().front();
  int best_sum = -1;
  for (const auto& t : g.edges()) {
    int sum = d(t[0], t[1]) + d(t[0], t[2]) + d(t[1], t[2]);
    if (sum > best_sum || (sum == best_sum && t < best)) {
      best = t;
      best_sum = sum;
    }
  }
  return best;
}

bool convexity_bound_check(int n) {
  if (n < 6) throw std::invalid_argument("convexity_bound_check needs n >= 6");
  using U = unsigned __int128;
  U lhs = U(n) * U(n - 1) * U(n - n / 3 - 1);
  return lhs < U(18) * U(s3_count(n));
}

}  // namespace turan
