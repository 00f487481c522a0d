#include <doctest.h>

#include <map>
#include <numeric>

#include "helpers.hpp"
#include "turan/constructions.hpp"
#include "turan/search.hpp"

using namespace turan;
using namespace testing_support;

namespace {

long long automorphisms(const TripleSystem& g) {
  const int n = g.order();
  const auto s = to_set(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long c = 0;
  do c += oracle::relabel(s, p) == s;
  while (std::next_permutation(p.begin(), p.end()));
  return c;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("enumeration examples") {
  const auto kf6 = family_by_name("kf6");
  const auto four = enumerate_free(5, kf6, 4);
  CHECK(four.size() == 3);
  CHECK(std::count(four.begin(), four.end(), canonical_form(s3_graph(5))) == 1);
  CHECK(std::count(four.begin(), four.end(), canonical_form(make_system(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}}))) == 1);
  CHECK(std::count(four.begin(), four.end(), canonical_form(make_system(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}}))) == 1);
  const auto five = enumerate_free(5, kf6, 5);
  REQUIRE(five.size() == 1);
  CHECK(five.front() == canonical_form(named(Named::C5_3)));
  CHECK(enumerate_free(4, kf6, 3).empty());
  CHECK_THROWS_AS(enumerate_free(8, kf6), std::invalid_argument);
}

TEST_CASE("enumeration against labelled counts, n <= 6") {
  // Every class contributes n!/|Aut| labelled graphs.
  for (const char* name : {"k4m", "kf5", "kf6", "f5"}) {
    const auto fam = family_by_name(name);
    for (int n = 3; n <= 6; ++n) {
      std::map<std::size_t, long long> labelled;
      for (std::uint64_t m = 0; m < (1ull << binom(n, 3)); ++m) {
        const auto g = from_mask(n, m);
        bool free = true;
        if (n <= 5) {
          const auto s = to_set(g);
          for (const auto& mem : fam.members()) free = free && !oracle::contains(n, s, mem.order(), to_set(mem));
        } else {
          free = is_free(g, fam).free;
        }
        if (free) ++labelled[g.size()];
      }
      std::map<std::size_t, long long> from_classes;
      const auto classes = enumerate_free_graphs(n, fam);
      for (const auto& g : classes) {
        CHECK(is_free(g, fam).free);
        from_classes[g.size()] += factorial(n) / automorphisms(g);
      }
      CHECK_MESSAGE(from_classes == labelled, name << " n=" << n);
      // classes are pairwise distinct
      std::set<CanonicalCode> codes;
      for (const auto& g : classes) codes.insert(canonical_form(g));
      CHECK(codes.size() == classes.size());
    }
  }
}

TEST_CASE("size filter agrees with the full list") {
  const auto fam = family_by_name("kf6");
  const auto all = enumerate_free_graphs(6, fam);
  for (std::size_t m = 0; m <= 9; ++m) {
    std::size_t want = 0;
    for (const auto& g : all) want += g.size() == m;
    CHECK(enumerate_free(6, fam, m).size() == want);
  }
}

TEST_CASE("branch and bound agrees with enumeration") {
  for (const char* name : {"k4m", "kf5", "kf6", "f5", "f6"}) {
    const auto fam = family_by_name(name);
    for (int n = 3; n <= 7; ++n) {
      const auto a = extremal_by_enumeration(n, fam);
      const auto b = extremal_by_branch_and_bound(n, fam);
      CHECK(b.exact);
      CHECK_MESSAGE(a.ex_value == b.ex_value, name << " n=" << n);
      CHECK_MESSAGE(a.extremal == b.extremal, name << " n=" << n);
      CHECK(a.unique == b.unique);
    }
  }
}

TEST_CASE("free_graphs_at_least agrees with enumeration") {
  const auto fam = family_by_name("kf6");
  const auto all = enumerate_free_graphs(7, fam);
  for (std::size_t min_edges : {9, 10, 11, 12}) {
    std::set<CanonicalCode> want;
    for (const auto& g : all)
      if (g.size() >= min_edges) want.insert(canonical_form(g));
    std::set<CanonicalCode> got;
    for (const auto& g : free_graphs_at_least(7, fam, min_edges)) got.insert(canonical_form(g));
    CHECK(got == want);
  }
}

TEST_CASE("extremal examples") {
  const auto kf6 = family_by_name("kf6");
  auto r = extremal(5, kf6);
  CHECK(r.ex_value == 5);
  CHECK(r.unique);
  CHECK(r.extremal.front() == canonical_form(named(Named::C5_3)));
  r = extremal(8, kf6);
  CHECK(r.exact);
  CHECK(r.ex_value == 18);
  CHECK(r.unique);
  CHECK(r.extremal.front() == canonical_form(s3_graph(8)));
  r = extremal(7, family_by_name("kf5"));
  CHECK(r.ex_value == 12);
  CHECK(r.extremal.front() == canonical_form(s3_graph(7)));
  CHECK_THROWS(extremal(2, kf6));
  CHECK_THROWS(extremal(10, kf6));
}

TEST_CASE("budget expiry yields an interval") {
  SearchOptions o;
  o.budget = std::chrono::milliseconds(0);
  const auto r = extremal_by_branch_and_bound(9, family_by_name("k4m"), o);
  CHECK_FALSE(r.exact);
  CHECK(r.ex_value >= 27);
  CHECK(r.upper_bound == 84);
  CHECK_FALSE(r.extremal.empty());
  CHECK_THROWS_AS(free_graphs_at_least(9, family_by_name("k4m"), 20, o), std::runtime_error);
}

TEST_CASE("workers give the same answer") {
  SearchOptions o;
  o.workers = 3;
  const auto fam = family_by_name("kf6");
  const auto a = extremal_by_branch_and_bound(8, fam);
  const auto b = extremal_by_branch_and_bound(8, fam, o);
  CHECK(a.ex_value == b.ex_value);
  CHECK(a.extremal == b.extremal);
}

TEST_CASE("rationals and densities") {
  CHECK(Rational(8, 20) == Rational(2, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(27, 84).str() == "9/28");
  CHECK_THROWS(Rational(1, 0));
  const auto kf6 = family_by_name("kf6");
  const auto pts = density_sequence(kf6, {3, 6, 9});
  CHECK(pts[0].density == Rational(1, 1));
  CHECK(pts[1].density == Rational(2, 5));
  CHECK(pts[2].density == Rational(9, 28));
  CHECK(pts[1].provenance == "enumeration");
  CHECK(pts[2].provenance == "s3-fallback");
  DensityOptions strict;
  strict.allow_fallback = false;
  CHECK_THROWS(density_sequence(kf6, {9}, strict));
  CHECK_THROWS(density_sequence(family_by_name("f5"), {12}));
  DensityOptions more;
  more.certify_up_to = 8;
  CHECK(density_sequence(kf6, {8}, more).front().provenance == "branch_and_bound");
}

TEST_CASE("stability fits") {
  const auto s9 = s3_graph(9);
  auto f = stability_fit(s9);
  CHECK(f.defect == 0);
  CHECK(f.exact);
  CHECK(f.transversal_edges == 27);
  const auto c5 = named(Named::C5_3);
  f = stability_fit(c5);
  CHECK(f.defect >= 1);
  CHECK(static_cast<long long>(f.defect) == oracle::min_defect(5, to_set(c5)));
  const auto planted = s9.without_edge(s9.edges().front()).with_edge(Triple(0, 1, 3));
  CHECK(stability_fit(planted).defect == 1);
  // local search on larger n still finds the planted partition
  const auto big = s3_graph(18);
  StabilityOptions o;
  o.exact_max_n = 10;
  o.seed = 42;
  f = stability_fit(big, o);
  CHECK_FALSE(f.exact);
  CHECK(f.defect == 0);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_system(7, 0.3, rng);
    CHECK(static_cast<long long>(stability_fit(g).defect) == oracle::min_defect(7, to_set(g)));
  }
}
