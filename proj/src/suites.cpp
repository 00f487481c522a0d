#include "turan/suites.hpp"

#include <stdexcept>

#include "turan/constructions.hpp"
#include "turan/embed.hpp"
#include "turan/link.hpp"

namespace turan {

bool SuiteResult::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "identities", "k4-inequality", "convexity", "blowup-containments",
      "cancellative-equiv", "extremal-table", "stability"};
  return names;
}

namespace {

SuiteResult identities(const SuiteParams& p) {
  SuiteResult r{"identities", {}};
  const int min_n[] = {6, 6, 5};
  for (int which = 1; which <= 3; ++which) {
    ClaimResult c{"identity (" + std::string(which == 1 ? "i" : which == 2 ? "ii" : "iii") + ")",
                  {{"min_n", min_n[which - 1]}, {"max_n", p.max_n}}, true, ""};
    for (int n = min_n[which - 1]; n <= p.max_n && c.pass; ++n)
      if (!identity_check(which, n)) {
        c.pass = false;
        c.detail = "fails at n = " + std::to_string(n);
      }
    r.claims.push_back(c);
  }
  ClaimResult c{"identity (iv)", {{"max_n", p.max_n}, {"max_k", p.max_k}}, true, ""};
  for (int k = 3; k <= p.max_k && c.pass; ++k)
    for (int n = k; n <= p.max_n && c.pass; ++n)
      if (!identity_check(4, n, k)) {
        c.pass = false;
        c.detail = "fails at k = " + std::to_string(k) + ", n = " + std::to_string(n);
      }
  r.claims.push_back(c);
  return r;
}

SuiteResult k4_inequality_suite(const SuiteParams& p) {
  SuiteResult r{"k4-inequality", {}};
  ClaimResult holds{"inequality holds", {{"max_s", p.max_s}}, true, ""};
  ClaimResult eq{"equality exactly at l = 0", {{"max_s", p.max_s}}, true, ""};
  long long cases = 0;
  for (long long s = 5; s <= p.max_s; ++s)
    for (long long j = s - s / 3 - 1; j <= s; ++j)
      for (long long l = 0; l <= s - j; ++l) {
        const long long k = s - j - l;
        auto res = k4_inequality(j, k, l);
        ++cases;
        if (!res.holds && holds.pass) {
          holds.pass = false;
          holds.detail = "fails at (j,k,l) = (" + std::to_string(j) + "," + std::to_string(k) + "," +
                         std::to_string(l) + ")";
        }
        if (res.equality != (l == 0) && eq.pass) {
          eq.pass = false;
          eq.detail = "equality mismatch at (j,k,l) = (" + std::to_string(j) + "," + std::to_string(k) +
                      "," + std::to_string(l) + ")";
        }
      }
  holds.params["cases"] = cases;
  eq.params["cases"] = cases;
  r.claims.push_back(holds);
  r.claims.push_back(eq);
  return r;
}

SuiteResult convexity(const SuiteParams& p) {
  SuiteResult r{"convexity", {}};
  ClaimResult c{"n(n-1)(n-floor(n/3)-1)/18 < s3(n)", {{"min_n", 6}, {"max_n", p.convexity_max_n}}, true, ""};
  for (int n = 6; n <= p.convexity_max_n && c.pass; ++n)
    if (!convexity_bound_check(n)) {
      c.pass = false;
      c.detail = "fails at n = " + std::to_string(n);
    }
  r.claims.push_back(c);
  return r;
}

SuiteResult blowups(const SuiteParams& p) {
  SuiteResult r{"blowup-containments", {}};
  const auto k4m2 = blow_up(named(Named::K4Minus), 2);
  for (auto id : {Named::F5, Named::F6}) {
    const auto pat = named(id);
    auto e = find_embedding(k4m2, pat);
    ClaimResult c{std::string(id == Named::F5 ? "F5" : "F6") + " embeds in K4-(2)", {{"t", 2}},
                  e && is_valid_embedding(k4m2, pat, *e), ""};
    if (e) c.params["witness"] = to_json(*e);
    r.claims.push_back(c);
  }
  for (int t = 1; t <= p.blowup_max_t; ++t) {
    auto e = find_embedding(blow_up(named(Named::F5), t), named(Named::F6));
    ClaimResult c{"F6 does not embed in F5(" + std::to_string(t) + ")", {{"t", t}, {"partial", true}}, !e,
                  "finite evidence only: blow-ups checked up to t = " + std::to_string(p.blowup_max_t)};
    r.claims.push_back(c);
  }
  return r;
}

SuiteResult cancellative_equiv(const SuiteParams& p) {
  SuiteResult r{"cancellative-equiv", {}};
  const int n = p.equiv_n;
  if (n < 0 || n > 6) throw std::invalid_argument("cancellative-equiv supports n <= 6");
  const auto fam = family_by_name("kf5");
  const std::size_t nt = binom(n, 3);
  std::vector<Triple> all;
  for (std::size_t i = 0; i < nt; ++i) all.push_back(triple_at(i));
  ClaimResult c{"cancellative <=> {K4-,F5}-free", {{"n", n}, {"graphs", 1ull << nt}}, true, ""};
  std::uint64_t cancellative = 0;
  for (std::uint64_t m = 0; m < (1ull << nt); ++m) {
    std::vector<Triple> es;
    for (std::size_t i = 0; i < nt; ++i)
      if ((m >> i) & 1) es.push_back(all[i]);
    TripleSystem g(n, std::move(es));
    bool canc = is_cancellative(g);
    cancellative += canc;
    if (canc != is_free(g, fam).free) {
      c.pass = false;
      c.detail = "disagreement on " + to_string(g);
      break;
    }
  }
  c.params["cancellative_graphs"] = cancellative;
  r.claims.push_back(c);
  return r;
}

SuiteResult extremal_table(const SuiteParams& p) {
  SuiteResult r{"extremal-table", {}};
  struct Row {
    std::string family;
    int max_n;
  };
  for (const Row& row : {Row{"kf6", p.extremal_max_n}, Row{"kf5", std::min(p.extremal_max_n, 7)}}) {
    const auto fam = family_by_name(row.family);
    for (int n = 3; n <= row.max_n; ++n) {
      auto res = extremal(n, fam, p.search);
      const bool c5 = row.family == "kf6" && n == 5;
      const auto expected_graph = c5 ? named(Named::C5_3) : s3_graph(n);
      const std::size_t expected = expected_graph.size();
      ClaimResult c{"ex(" + std::to_string(n) + ", " + row.family + ") = " + std::to_string(expected) +
                        ", unique " + (c5 ? "C5" : "S3(" + std::to_string(n) + ")"),
                    to_json(res), false, ""};
      c.pass = res.exact && res.ex_value == expected && res.unique &&
               res.extremal.front() == canonical_form(expected_graph);
      if (!c.pass) c.detail = "got ex = " + std::to_string(res.ex_value) + (res.exact ? "" : " (inexact)");
      r.claims.push_back(c);
    }
  }
  return r;
}

SuiteResult stability(const SuiteParams& p) {
  SuiteResult r{"stability", {}};
  ClaimResult s3{"defect(S3(n)) = 0", {{"max_n", p.stability_max_n}}, true, ""};
  for (int n = 3; n <= p.stability_max_n && s3.pass; ++n)
    if (stability_fit(s3_graph(n)).defect != 0) {
      s3.pass = false;
      s3.detail = "non-zero defect at n = " + std::to_string(n);
    }
  r.claims.push_back(s3);

  const auto fam = family_by_name("kf6");
  const auto graphs = free_graphs_at_least(7, fam, s3_count(7) - 1, p.search);
  ClaimResult dense{"kf6-free graphs on 7 vertices with >= 11 edges have defect <= 2",
                    {{"graphs", graphs.size()}}, true, ""};
  std::size_t worst = 0;
  for (const auto& g : graphs) {
    auto f = stability_fit(g);
    worst = std::max(worst, f.defect);
    if (f.defect > 2) {
      dense.pass = false;
      dense.detail = "defect " + std::to_string(f.defect) + " for " + to_string(g);
    }
  }
  dense.params["max_defect"] = worst;
  r.claims.push_back(dense);
  return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteParams& params) {
  if (name == "identities") return identities(params);
  if (name == "k4-inequality") return k4_inequality_suite(params);
  if (name == "convexity") return convexity(params);
  if (name == "blowup-containments") return blowups(params);
  if (name == "cancellative-equiv") return cancellative_equiv(params);
  if (name == "extremal-table") return extremal_table(params);
  if (name == "stability") return stability(params);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

json to_json(const SuiteResult& r) {
  json claims = json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"claim", c.claim}, {"pass", c.pass}, {"params", c.params}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"pass", r.pass()}, {"claims", claims}};
}

}  // namespace turan
