#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/core.hpp"
#include "turan/embed.hpp"

namespace turan {

// Exhaustive search works on bit masks over the C(n,3) colex triples.
inline constexpr int kSearchMaxVertices = 9;

struct SearchOptions {
  // enumerate_free refuses n above this unless allow_above_ceiling is set.
  int enumeration_ceiling = 7;
  bool allow_above_ceiling = false;
  // extremal() enumerates classes up to this n and uses branch-and-bound above.
  int extremal_enumeration_max_n = 6;
  std::chrono::milliseconds budget{std::chrono::minutes(15)};
  int workers = 1;
};

enum class Method { Enumeration, BranchAndBound };
std::string to_string(Method m);

struct ExtremalResult {
  int n = 0;
  std::string family;
  // Certified maximum when exact; otherwise ex lies in [ex_value, upper_bound].
  std::size_t ex_value = 0;
  std::size_t upper_bound = 0;
  bool exact = true;
  std::vector<CanonicalCode> extremal;  // sorted; complete only when exact
  bool unique = false;
  Method method = Method::Enumeration;
  double elapsed_seconds = 0;
  std::uint64_t nodes = 0;
};

/// Canonical representatives (one per isomorphism class) of the fam-free
/// 3-graphs on n vertices, optionally only those with exactly size_filter
/// edges. Sorted by canonical code.
std::vector<TripleSystem> enumerate_free_graphs(int n, const Family& fam,
                                                std::optional<std::size_t> size_filter = {},
                                                const SearchOptions& opts = {});
std::vector<CanonicalCode> enumerate_free(int n, const Family& fam,
                                          std::optional<std::size_t> size_filter = {},
                                          const SearchOptions& opts = {});

// Canonical representatives of all fam-free graphs with at least min_edges
// edges, found by the branch-and-bound engine. Empty if budget runs out
// (throws std::runtime_error in that case).
std::vector<TripleSystem> free_graphs_at_least(int n, const Family& fam, std::size_t min_edges,
                                               const SearchOptions& opts = {});

ExtremalResult extremal(int n, const Family& fam, const SearchOptions& opts = {});
ExtremalResult extremal_by_enumeration(int n, const Family& fam, const SearchOptions& opts = {});
ExtremalResult extremal_by_branch_and_bound(int n, const Family& fam, const SearchOptions& opts = {});

struct Rational {
  std::uint64_t num = 0, den = 1;
  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
};

struct DensityPoint {
  int n = 0;
  std::size_t ex_value = 0;
  Rational density;
  // "enumeration", "branch_and_bound" or "s3-fallback"
  std::string provenance;
};

struct DensityOptions {
  int certify_up_to = 6;
  bool allow_fallback = true;
  SearchOptions search;
};

// Fallback beyond certify_up_to is only known for kf6 (s3(n), or 5 at n = 5)
// and kf5 (s3(n)); other families throw std::invalid_argument there.
std::vector<DensityPoint> density_sequence(const Family& fam, const std::vector<int>& ns,
                                           const DensityOptions& opts = {});

struct StabilityFit {
  std::vector<int> partition;  // vertex -> part 0, 1 or 2
  std::size_t transversal_edges = 0;
  std::size_t defect = 0;
  Rational defect_fraction;  // defect / n^3
  bool exact = true;          // false when found by local search
};

struct StabilityOptions {
  int exact_max_n = 14;
  int restarts = 20;
  std::uint64_t seed = 0;
};

StabilityFit stability_fit(const TripleSystem& g, const StabilityOptions& opts = {});

}  // namespace turan
