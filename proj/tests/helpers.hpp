#pragma once

#include <random>

#include "oracles.hpp"
#include "turan/core.hpp"

namespace testing_support {

inline oracle::EdgeSet to_set(const turan::TripleSystem& g) {
  oracle::EdgeSet s;
  for (const auto& t : g.edges()) s.insert({t[0], t[1], t[2]});
  return s;
}

inline turan::TripleSystem from_mask(int n, std::uint64_t mask) {
  std::vector<turan::Triple> es;
  for (std::size_t i = 0; i < turan::binom(n, 3); ++i)
    if ((mask >> i) & 1) es.push_back(turan::triple_at(i));
  return turan::TripleSystem(n, es);
}

inline turan::TripleSystem random_system(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<turan::Triple> es;
  for (std::size_t i = 0; i < turan::binom(n, 3); ++i)
    if (coin(rng)) es.push_back(turan::triple_at(i));
  return turan::TripleSystem(n, es);
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing_support
