#pragma once

#include <string>
#include <vector>

#include "turan/report.hpp"
#include "turan/search.hpp"

namespace turan {

struct ClaimResult {
  std::string claim;
  json params;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<ClaimResult> claims;
  bool pass() const;
};

struct SuiteParams {
  int max_n = 1000;            // identities
  int max_k = 10;              // identity (iv)
  int max_s = 200;             // k4-inequality
  int convexity_max_n = 10000;
  int equiv_n = 6;             // cancellative-equiv
  int extremal_max_n = 7;      // extremal-table
  int blowup_max_t = 3;
  int stability_max_n = 14;
  SearchOptions search;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteParams& params = {});

json to_json(const SuiteResult& r);

}  // namespace turan
