#include "turan/embed.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "turan/constructions.hpp"

namespace turan {

bool is_valid_embedding(const TripleSystem& host, const TripleSystem& pattern, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.order()) return false;
  std::vector<bool> used(host.order(), false);
  for (Vertex h : e.map) {
    if (h < 0 || h >= host.order() || used[h]) return false;
    used[h] = true;
  }
  return std::all_of(pattern.edges().begin(), pattern.edges().end(), [&](const Triple& t) {
    return host.has_edge(e.map[t[0]], e.map[t[1]], e.map[t[2]]);
  });
}

namespace {

// Backtracking matcher assigning pattern vertices in index order with host
// candidates in increasing order, so the first complete map found is the
// lexicographically least one.
class Matcher {
 public:
  Matcher(const TripleSystem& host, const TripleSystem& pattern)
      : host_(host), pattern_(pattern), hn_(host.order()), pn_(pattern.order()) {
    masks_ = pair_masks(host);
    host_deg_.resize(hn_);
    for (Vertex v = 0; v < hn_; ++v) host_deg_[v] = host.degree(v);
    pat_deg_.resize(pn_);
    closing_.resize(pn_);
    for (const auto& t : pattern.edges()) {
      for (int i = 0; i < 3; ++i) ++pat_deg_[t[i]];
      closing_[t[2]].push_back({t[0], t[1]});
    }
    pat_codeg_.assign(static_cast<std::size_t>(pn_) * pn_, 0);
    for (const auto& t : pattern.edges())
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) ++pat_codeg_[t[i] * pn_ + t[j]];
    map_.assign(pn_, -1);
  }

  void fix(Vertex p, Vertex h) { fixed_.push_back({p, h}); }

  // Calls visit(map) for each embedding until it returns false.
  template <class Visit>
  void run(Visit&& visit) {
    if (pn_ > hn_) return;
    std::uint64_t used = 0;
    for (auto [p, h] : fixed_) {
      if (map_[p] != -1 && map_[p] != h) return;
      if (map_[p] == -1 && ((used >> h) & 1)) return;
      map_[p] = h;
      used |= std::uint64_t{1} << h;
    }
    stop_ = false;
    extend(0, used, visit);
  }

 private:
  template <class Visit>
  void extend(Vertex p, std::uint64_t used, Visit& visit) {
    if (p == pn_) {
      if (!visit(map_)) stop_ = true;
      return;
    }
    const bool preset = std::any_of(fixed_.begin(), fixed_.end(),
                                    [p](const auto& f) { return f.first == p; });
    std::uint64_t cand = hn_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << hn_) - 1);
    if (preset) {
      cand = std::uint64_t{1} << map_[p];
      used &= ~cand;
    }
    cand &= ~used;
    for (auto [a, b] : closing_[p]) cand &= masks_[map_[a] * hn_ + map_[b]];
    while (cand && !stop_) {
      const Vertex h = std::countr_zero(cand);
      cand &= cand - 1;
      if (host_deg_[h] < pat_deg_[p]) continue;
      bool ok = true;
      for (Vertex q = 0; q < p && ok; ++q) {
        int need = pat_codeg_[q * pn_ + p];
        if (need && std::popcount(masks_[map_[q] * hn_ + h]) < need) ok = false;
      }
      if (!ok) continue;
      map_[p] = h;
      extend(p + 1, used | (std::uint64_t{1} << h), visit);
      if (!preset) map_[p] = -1;
    }
  }

  const TripleSystem& host_;
  const TripleSystem& pattern_;
  int hn_, pn_;
  std::vector<std::uint64_t> masks_;
  std::vector<int> host_deg_, pat_deg_, pat_codeg_;
  std::vector<std::vector<std::pair<Vertex, Vertex>>> closing_;
  std::vector<std::pair<Vertex, Vertex>> fixed_;
  std::vector<Vertex> map_;
  bool stop_ = false;
};

}  // namespace

std::optional<Embedding> find_embedding(const TripleSystem& host, const TripleSystem& pattern) {
  std::optional<Embedding> out;
  Matcher m(host, pattern);
  m.run([&](const std::vector<Vertex>& map) {
    out = Embedding{map};
    return false;
  });
  return out;
}

std::vector<Embedding> all_embeddings(const TripleSystem& host, const TripleSystem& pattern) {
  std::vector<Embedding> out;
  Matcher m(host, pattern);
  m.run([&](const std::vector<Vertex>& map) {
    out.push_back(Embedding{map});
    return true;
  });
  return out;
}

std::optional<Embedding> find_embedding_through(const TripleSystem& host,
                                                const TripleSystem& pattern,
                                                const Triple& through) {
  if (!host.has_edge(through)) return std::nullopt;
  std::optional<Embedding> best;
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& pe : pattern.edges()) {
    for (const auto& perm : kPerms) {
      Matcher m(host, pattern);
      for (int i = 0; i < 3; ++i) m.fix(pe[i], through[perm[i]]);
      m.run([&](const std::vector<Vertex>& map) {
        if (!best || map < best->map) best = Embedding{map};
        return false;
      });
    }
  }
  return best;
}

Family::Family(std::string name, std::vector<TripleSystem> members)
    : name_(std::move(name)), members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("family '" + name_ + "' is empty");
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (are_isomorphic(members_[i], members_[j]))
        throw std::invalid_argument("family '" + name_ + "' has isomorphic members");
}

Family family_by_name(const std::string& name) {
  if (name == "kf6") return Family("kf6", {named(Named::K4Minus), named(Named::F6)});
  if (name == "kf5") return Family("kf5", {named(Named::K4Minus), named(Named::F5)});
  if (name == "k4m" || name == "k4_minus") return Family("k4m", {named(Named::K4Minus)});
  if (name == "f5") return Family("f5", {named(Named::F5)});
  if (name == "f6") return Family("f6", {named(Named::F6)});
  if (name == "k4_3") return Family("k4_3", {named(Named::K4_3)});
  throw std::invalid_argument("unknown family '" + name + "'");
}

Verdict is_free(const TripleSystem& g, const Family& fam) {
  for (std::size_t i = 0; i < fam.members().size(); ++i)
    if (auto e = find_embedding(g, fam.members()[i]))
      return Verdict{false, static_cast<int>(i), std::move(*e)};
  return Verdict{};
}

Verdict is_free_through(const TripleSystem& g, const Family& fam, const Triple& added) {
  for (std::size_t i = 0; i < fam.members().size(); ++i)
    if (auto e = find_embedding_through(g, fam.members()[i], added))
      return Verdict{false, static_cast<int>(i), std::move(*e)};
  return Verdict{};
}

bool is_cancellative(const TripleSystem& g) {
  // |a sym-diff b| is 2, 4 or 6 for distinct edges; only 2 fits inside an edge.
  const auto masks = pair_masks(g);
  const int n = g.order();
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      Vertex only_a = -1, only_b = -1;
      int shared = 0;
      for (int x = 0; x < 3; ++x) {
        if (es[j].contains(es[i][x])) ++shared;
        else only_a = es[i][x];
        if (!es[i].contains(es[j][x])) only_b = es[j][x];
      }
      if (shared == 2 && masks[only_a * n + only_b] != 0) return false;
    }
  }
  return true;
}

}  // namespace turan
