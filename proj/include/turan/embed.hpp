#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/core.hpp"

namespace turan {

// map[p] is the host vertex receiving pattern vertex p.
struct Embedding {
  std::vector<Vertex> map;
  auto operator<=>(const Embedding&) const = default;
};

// Injective and edge-preserving (non-induced containment).
bool is_valid_embedding(const TripleSystem& host, const TripleSystem& pattern, const Embedding& e);

// Lexicographically least embedding of pattern into host, if any.
std::optional<Embedding> find_embedding(const TripleSystem& host, const TripleSystem& pattern);

// Some embedding whose image uses the host edge `through`, if any. Used for
// add-one-edge pruning: a free graph plus one edge can only gain copies
// through that edge.
std::optional<Embedding> find_embedding_through(const TripleSystem& host,
                                                const TripleSystem& pattern,
                                                const Triple& through);

// Every embedding (raw maps, not up to automorphism), in lexicographic order.
std::vector<Embedding> all_embeddings(const TripleSystem& host, const TripleSystem& pattern);

class Family {
 public:
  // Throws std::invalid_argument if empty or if two members are isomorphic.
  Family(std::string name, std::vector<TripleSystem> members);

  const std::string& name() const { return name_; }
  const std::vector<TripleSystem>& members() const { return members_; }

 private:
  std::string name_;
  std::vector<TripleSystem> members_;
};

// kf6 = {K4-, F6}, kf5 = {K4-, F5}, k4m = {K4-}, f5, f6, k4_3.
Family family_by_name(const std::string& name);

struct Verdict {
  bool free = true;
  int member = -1;  // index into Family::members() when !free
  Embedding witness;
};

Verdict is_free(const TripleSystem& g, const Family& fam);
// Only looks for copies using the edge `added`.
Verdict is_free_through(const TripleSystem& g, const Family& fam, const Triple& added);

// No distinct edges a, b and edge c with (a symmetric-difference b) inside c.
bool is_cancellative(const TripleSystem& g);

}  // namespace turan
