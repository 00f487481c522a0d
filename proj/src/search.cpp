#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "turan/constructions.hpp"

namespace turan {

std::string to_string(Method m) {
  return m == Method::Enumeration ? "enumeration" : "branch_and_bound";
}

namespace {

using Mask = unsigned __int128;
using Clock = std::chrono::steady_clock;

Mask bit(std::size_t i) { return Mask{1} << i; }

int popcount(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) +
         std::popcount(static_cast<std::uint64_t>(m >> 64));
}

int lowest_bit(Mask m) {
  auto lo = static_cast<std::uint64_t>(m);
  return lo ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

Mask to_mask(const TripleSystem& g) {
  Mask m = 0;
  for (const auto& t : g.edges()) m |= bit(colex_index(t));
  return m;
}

TripleSystem from_mask(int n, Mask m) {
  std::vector<Triple> edges;
  while (m) {
    int i = lowest_bit(m);
    m &= m - 1;
    edges.push_back(triple_at(i));
  }
  return TripleSystem(n, std::move(edges));
}

TripleSystem canonical_rep(const TripleSystem& g) { return g.relabeled(canonical_labeling(g)); }

void check_search_order(int n) {
  if (n < 0 || n > kSearchMaxVertices)
    throw std::invalid_argument("exhaustive search supports 0 <= n <= " +
                                std::to_string(kSearchMaxVertices));
}

// Every copy of every family member inside the complete 3-graph on n
// vertices, as a triple mask, indexed by the triples it uses.
class ForbiddenCopies {
 public:
  ForbiddenCopies(int n, const Family& fam) : by_triple_(binom(n, 3)) {
    std::set<Mask> all;
    for (const auto& p : fam.members()) {
      const int pn = p.order();
      if (pn > n) continue;
      std::vector<Vertex> map(pn);
      std::vector<bool> used(n, false);
      auto rec = [&](auto&& self, int i) -> void {
        if (i == pn) {
          Mask m = 0;
          for (const auto& t : p.edges()) m |= bit(colex_index(Triple(map[t[0]], map[t[1]], map[t[2]])));
          all.insert(m);
          return;
        }
        for (Vertex h = 0; h < n; ++h) {
          if (used[h]) continue;
          used[h] = true;
          map[i] = h;
          self(self, i + 1);
          used[h] = false;
        }
      };
      rec(rec, 0);
    }
    for (Mask m : all) {
      if (m == 0) {
        empty_member_ = true;
        continue;
      }
      Mask r = m;
      while (r) {
        int i = lowest_bit(r);
        r &= r - 1;
        by_triple_[i].push_back(m);
      }
    }
  }

  // True if adding triple t to g completes a copy.
  bool completes(Mask g, int t) const {
    const Mask with = g | bit(t);
    for (Mask c : by_triple_[t])
      if ((c & ~with) == 0) return true;
    return false;
  }

  bool free(Mask g) const {
    if (empty_member_) return false;
    Mask r = g;
    while (r) {
      int i = lowest_bit(r);
      r &= r - 1;
      for (Mask c : by_triple_[i])
        if ((c & ~g) == 0) return false;
    }
    return true;
  }

  const std::vector<Mask>& through(int t) const { return by_triple_[t]; }
  bool has_edgeless_member() const { return empty_member_; }

 private:
  std::vector<std::vector<Mask>> by_triple_;
  bool empty_member_ = false;
};

}  // namespace

// ---------------------------------------------------------------------------
// Enumeration by edge augmentation. A child C = P + t of a class
// representative P is kept iff deleting the canonically last edge of C gives
// a graph isomorphic to P; isomorphic siblings are merged by canonical code.

std::vector<TripleSystem> enumerate_free_graphs(int n, const Family& fam,
                                                std::optional<std::size_t> size_filter,
                                                const SearchOptions& opts) {
  check_search_order(n);
  if (n > opts.enumeration_ceiling && !opts.allow_above_ceiling)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration ceiling " +
                                std::to_string(opts.enumeration_ceiling));
  const ForbiddenCopies copies(n, fam);
  const int ntriples = static_cast<int>(binom(n, 3));

  std::vector<std::pair<CanonicalCode, TripleSystem>> out;
  if (copies.has_edgeless_member()) return {};
  std::vector<std::pair<CanonicalCode, TripleSystem>> level;
  TripleSystem empty(n, {});
  level.emplace_back(canonical_form(empty), empty);

  for (std::size_t e = 0;; ++e) {
    if (!size_filter || *size_filter == e)
      out.insert(out.end(), level.begin(), level.end());
    if (level.empty() || (size_filter && e >= *size_filter)) break;

    std::vector<std::pair<CanonicalCode, TripleSystem>> next;
    for (const auto& [pcode, parent] : level) {
      const Mask pm = to_mask(parent);
      std::set<CanonicalCode> seen;
      for (int t = 0; t < ntriples; ++t) {
        if ((pm >> t) & 1) continue;
        if (copies.completes(pm, t)) continue;
        const TripleSystem child = from_mask(n, pm | bit(t));
        const TripleSystem rep = canonical_rep(child);
        CanonicalCode ccode = canonical_form(rep);
        if (seen.count(ccode)) continue;
        const Triple last = rep.edges().back();  // edges are colex-sorted
        if (canonical_form(rep.without_edge(last)) != pcode) continue;
        seen.insert(ccode);
        next.emplace_back(std::move(ccode), rep);
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<TripleSystem> graphs;
  graphs.reserve(out.size());
  for (auto& [code, g] : out) graphs.push_back(std::move(g));
  return graphs;
}

std::vector<CanonicalCode> enumerate_free(int n, const Family& fam,
                                          std::optional<std::size_t> size_filter,
                                          const SearchOptions& opts) {
  std::vector<CanonicalCode> codes;
  for (const auto& g : enumerate_free_graphs(n, fam, size_filter, opts)) codes.push_back(canonical_form(g));
  std::sort(codes.begin(), codes.end());
  return codes;
}

// ---------------------------------------------------------------------------
// Branch-and-bound over the colex triple sequence. Triples with largest vertex
// k form block k, so closing block k fixes the induced subgraph on 0..k.
//
// Symmetry breaking: any graph has a vertex order in which vertex k has
// minimum degree inside G[0..k] for every k (peel minimum-degree vertices
// from the top). Only such orders are searched. Along them
// e(G[0..k-1]) >= e(G[0..k]) - floor(3 e(G[0..k]) / (k+1)), so a target size
// for G yields a threshold for every prefix.
//
// Bound: current size plus undecided triples not yet excluded. Including a
// triple excludes every triple that would complete a forbidden copy.

namespace {

enum class Mode { Maximize, CollectAtLeast };

struct BnbState {
  Mask included = 0, excluded = 0;
  int count = 0;
  int index = 0;
};

class BranchAndBound {
 public:
  BranchAndBound(int n, const Family& fam, Mode mode, std::size_t target, Clock::time_point deadline)
      : n_(n), ntriples_(static_cast<int>(binom(n, 3))), copies_(n, fam), mode_(mode),
        deadline_(deadline), best_(static_cast<int>(target)) {
    block_end_.resize(n);
    for (int k = 0; k < n; ++k) block_end_[k] = static_cast<int>(binom(k + 1, 3));
    vertex_mask_.assign(n, 0);
    prefix_mask_.assign(n, 0);
    for (int t = 0; t < ntriples_; ++t) {
      Triple tr = triple_at(t);
      for (int i = 0; i < 3; ++i) vertex_mask_[tr[i]] |= bit(t);
    }
    for (int k = 0; k < n; ++k) prefix_mask_[k] = block_end_[k] ? (bit(block_end_[k]) - 1) : 0;
  }

  // Returns false if the deadline expired.
  bool run(int workers) {
    BnbState root;
    if (copies_.has_edgeless_member()) return true;
    if (workers <= 1 || n_ < 5) {
      Worker w(*this);
      w.dfs(root);
      merge(w);
      return !expired_;
    }
    // Split at the end of block n-3 and hand subtrees to workers.
    const int split = block_end_[n_ - 3];
    std::vector<BnbState> tasks;
    {
      Worker w(*this);
      w.split_at = split;
      w.tasks = &tasks;
      w.dfs(root);
      merge(w);
    }
    std::atomic<std::size_t> next{0};
    std::vector<Worker> ws;
    ws.reserve(workers);
    for (int i = 0; i < workers; ++i) ws.emplace_back(*this);
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i)
      threads.emplace_back([&, i] {
        for (std::size_t j; (j = next.fetch_add(1)) < tasks.size();) ws[i].dfs(tasks[j]);
      });
    for (auto& t : threads) t.join();
    for (auto& w : ws) merge(w);
    return !expired_;
  }

  int best() const { return best_.load(); }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Mask>& leaves() const { return leaves_; }

 private:
  struct Worker {
    explicit Worker(BranchAndBound& b) : bb(b) {}
    BranchAndBound& bb;
    std::vector<std::pair<int, Mask>> found;
    std::uint64_t nodes = 0;
    int split_at = -1;
    std::vector<BnbState>* tasks = nullptr;

    int cached_target = -1;
    std::vector<int> th;

    int target() const { return bb.best_.load(std::memory_order_relaxed); }

    const std::vector<int>& thresholds(int target) {
      if (target == cached_target) return th;
      cached_target = target;
      th.assign(bb.n_, 0);
      int t = target;
      for (int k = bb.n_ - 1; k >= 0; --k) {
        th[k] = std::max(t, 0);
        t = t - (3 * t) / (k + 1);
      }
      return th;
    }

    void record(const BnbState& s) {
      if (bb.mode_ == Mode::Maximize) {
        int cur = bb.best_.load();
        while (s.count > cur && !bb.best_.compare_exchange_weak(cur, s.count)) {
        }
        if (s.count < bb.best_.load()) return;
      } else if (s.count < target()) {
        return;
      }
      found.emplace_back(s.count, s.included);
    }

    bool min_degree_ok(const BnbState& s, int k) const {
      const Mask pm = bb.prefix_mask_[k];
      const int dk = popcount(s.included & pm & bb.vertex_mask_[k]);
      for (int j = 0; j < k; ++j)
        if (popcount(s.included & pm & bb.vertex_mask_[j]) < dk) return false;
      return true;
    }

    void dfs(BnbState s) {
      if (bb.expired_.load(std::memory_order_relaxed)) return;
      if ((++nodes & 0xfff) == 0 && Clock::now() > bb.deadline_) {
        bb.expired_ = true;
        return;
      }
      if (tasks && s.index == split_at) {
        tasks->push_back(s);
        return;
      }
      const auto& th = thresholds(target());
      // Closing a block: prefix threshold and degree order.
      for (int k = 2; k < bb.n_; ++k) {
        if (bb.block_end_[k] != s.index || s.index == 0) continue;
        if (s.count < th[k] || !min_degree_ok(s, k)) return;
      }
      if (s.index == bb.ntriples_) {
        record(s);
        return;
      }
      // Bound every block still open.
      const Mask free_later = ~(s.included | s.excluded) & ~(bit(s.index) - 1);
      for (int k = 2; k < bb.n_; ++k) {
        if (bb.block_end_[k] <= s.index) continue;
        if (s.count + popcount(free_later & bb.prefix_mask_[k]) < th[k]) return;
      }
      const int t = s.index;
      if (!((s.excluded >> t) & 1)) {
        BnbState in = s;
        in.included |= bit(t);
        in.count += 1;
        in.index = t + 1;
        bool ok = true;
        for (Mask c : bb.copies_.through(t)) {
          Mask rest = c & ~in.included;
          if (rest == 0) {
            ok = false;
            break;
          }
          if ((rest & (rest - 1)) == 0) in.excluded |= rest;
        }
        if (ok) dfs(in);
      }
      BnbState out = s;
      out.excluded |= bit(t);
      out.index = t + 1;
      dfs(out);
    }
  };

  void merge(Worker& w) {
    nodes_ += w.nodes;
    for (auto& [c, m] : w.found) all_found_.emplace_back(c, m);
    w.found.clear();
    leaves_.clear();
    const int b = best_.load();
    for (auto& [c, m] : all_found_)
      if (mode_ == Mode::CollectAtLeast || c == b) leaves_.push_back(m);
  }

  int n_, ntriples_;
  ForbiddenCopies copies_;
  Mode mode_;
  Clock::time_point deadline_;
  std::atomic<int> best_;
  std::atomic<bool> expired_{false};
  std::vector<int> block_end_;
  std::vector<Mask> vertex_mask_, prefix_mask_;
  std::vector<std::pair<int, Mask>> all_found_;
  std::vector<Mask> leaves_;
  std::uint64_t nodes_ = 0;
};

std::vector<CanonicalCode> distinct_codes(int n, const std::vector<Mask>& masks) {
  std::set<CanonicalCode> codes;
  for (Mask m : masks) codes.insert(canonical_form(from_mask(n, m)));
  return {codes.begin(), codes.end()};
}

}  // namespace

std::vector<TripleSystem> free_graphs_at_least(int n, const Family& fam, std::size_t min_edges,
                                               const SearchOptions& opts) {
  check_search_order(n);
  BranchAndBound bb(n, fam, Mode::CollectAtLeast, min_edges, Clock::now() + opts.budget);
  if (!bb.run(opts.workers)) throw std::runtime_error("free_graphs_at_least: budget exhausted");
  std::map<CanonicalCode, TripleSystem> reps;
  for (Mask m : bb.leaves()) {
    auto rep = canonical_rep(from_mask(n, m));
    reps.emplace(canonical_form(rep), rep);
  }
  std::vector<TripleSystem> out;
  for (auto& [code, g] : reps) out.push_back(g);
  return out;
}

ExtremalResult extremal_by_enumeration(int n, const Family& fam, const SearchOptions& opts) {
  const auto start = Clock::now();
  SearchOptions o = opts;
  o.allow_above_ceiling = true;
  const auto all = enumerate_free_graphs(n, fam, std::nullopt, o);
  ExtremalResult r;
  r.n = n;
  r.family = fam.name();
  r.method = Method::Enumeration;
  for (const auto& g : all) r.ex_value = std::max(r.ex_value, g.size());
  for (const auto& g : all)
    if (g.size() == r.ex_value) r.extremal.push_back(canonical_form(g));
  std::sort(r.extremal.begin(), r.extremal.end());
  r.upper_bound = r.ex_value;
  r.unique = r.extremal.size() == 1;
  r.nodes = all.size();
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

ExtremalResult extremal_by_branch_and_bound(int n, const Family& fam, const SearchOptions& opts) {
  check_search_order(n);
  const auto start = Clock::now();
  // Seed the incumbent with S3(n) when it is admissible.
  std::size_t lower = 0;
  if (n >= 3) {
    const auto s3 = s3_graph(n);
    if (is_free(s3, fam).free) lower = s3.size();
  }
  BranchAndBound bb(n, fam, Mode::Maximize, lower, start + opts.budget);
  const bool complete = bb.run(opts.workers);
  ExtremalResult r;
  r.n = n;
  r.family = fam.name();
  r.method = Method::BranchAndBound;
  r.ex_value = static_cast<std::size_t>(bb.best());
  r.exact = complete;
  r.upper_bound = complete ? r.ex_value : binom(n, 3);
  r.extremal = distinct_codes(n, bb.leaves());
  if (r.extremal.empty() && lower > 0 && r.ex_value == lower) r.extremal.push_back(canonical_form(s3_graph(n)));
  r.unique = complete && r.extremal.size() == 1;
  r.nodes = bb.nodes();
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

ExtremalResult extremal(int n, const Family& fam, const SearchOptions& opts) {
  if (n < 3) throw std::invalid_argument("extremal needs n >= 3");
  if (n <= opts.extremal_enumeration_max_n) return extremal_by_enumeration(n, fam, opts);
  return extremal_by_branch_and_bound(n, fam, opts);
}

// ---------------------------------------------------------------------------

Rational::Rational(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  auto g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  using U = unsigned __int128;
  return U(a.num) * b.den <=> U(b.num) * a.den;
}

std::vector<DensityPoint> density_sequence(const Family& fam, const std::vector<int>& ns,
                                           const DensityOptions& opts) {
  std::vector<DensityPoint> out;
  for (int n : ns) {
    if (n < 3) throw std::invalid_argument("density_sequence needs n >= 3");
    DensityPoint p;
    p.n = n;
    if (n <= opts.certify_up_to) {
      auto r = extremal(n, fam, opts.search);
      if (!r.exact) throw std::runtime_error("density_sequence: n = " + std::to_string(n) + " not certified");
      p.ex_value = r.ex_value;
      p.provenance = to_string(r.method);
    } else if (opts.allow_fallback && (fam.name() == "kf6" || fam.name() == "kf5")) {
      p.ex_value = (fam.name() == "kf6" && n == 5) ? 5 : s3_count(n);
      p.provenance = "s3-fallback";
    } else {
      throw std::invalid_argument("density_sequence: n = " + std::to_string(n) +
                                  " is beyond the certified range for family " + fam.name());
    }
    p.density = Rational(p.ex_value, binom(n, 3));
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t defect_of(const TripleSystem& g, const std::vector<int>& part) {
  std::size_t d = 0;
  for (const auto& t : g.edges())
    if (part[t[0]] == part[t[1]] || part[t[0]] == part[t[2]] || part[t[1]] == part[t[2]]) ++d;
  return d;
}

StabilityFit finish(const TripleSystem& g, std::vector<int> part, bool exact) {
  StabilityFit f;
  const std::uint64_t n = g.order();
  f.defect = defect_of(g, part);
  f.transversal_edges = g.size() - f.defect;
  f.partition = std::move(part);
  f.defect_fraction = n ? Rational(f.defect, n * n * n) : Rational(0, 1);
  f.exact = exact;
  return f;
}

}  // namespace

StabilityFit stability_fit(const TripleSystem& g, const StabilityOptions& opts) {
  const int n = g.order();
  if (n == 0) return finish(g, {}, true);

  if (n <= opts.exact_max_n) {
    // Edges are charged once all their vertices are placed (at their largest
    // vertex). Vertex 0 is fixed to part 0.
    std::vector<std::vector<Triple>> closing(n);
    for (const auto& t : g.edges()) closing[t[2]].push_back(t);
    std::vector<int> part(n, 0), best_part(n, 0);
    std::size_t best = g.size() + 1;
    auto rec = [&](auto&& self, int v, std::size_t defect) -> void {
      if (defect >= best) return;
      if (v == n) {
        best = defect;
        best_part = part;
        return;
      }
      for (int p = 0; p < 3; ++p) {
        if (v == 0 && p > 0) break;
        part[v] = p;
        std::size_t d = defect;
        for (const auto& t : closing[v])
          if (part[t[0]] == part[t[1]] || part[t[0]] == part[t[2]] || part[t[1]] == part[t[2]]) ++d;
        self(self, v + 1, d);
      }
    };
    rec(rec, 0, 0);
    return finish(g, best_part, true);
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<int> best_part;
  std::size_t best = g.size() + 1;
  for (int r = 0; r < std::max(1, opts.restarts); ++r) {
    std::vector<int> part(n);
    for (auto& p : part) p = pick(rng);
    std::size_t cur = defect_of(g, part);
    for (bool improved = true; improved;) {
      improved = false;
      for (int v = 0; v < n; ++v) {
        const int keep = part[v];
        for (int p = 0; p < 3; ++p) {
          if (p == keep) continue;
          part[v] = p;
          std::size_t d = defect_of(g, part);
          if (d < cur) {
            cur = d;
            improved = true;
            break;
          }
          part[v] = keep;
        }
      }
    }
    if (cur < best) {
      best = cur;
      best_part = part;
    }
  }
  return finish(g, best_part, false);
}

}  // namespace turan
