#include "turan/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "turan/constructions.hpp"
#include "turan/embed.hpp"
#include "turan/io.hpp"
#include "turan/link.hpp"
#include "turan/report.hpp"
#include "turan/search.hpp"
#include "turan/suites.hpp"

namespace turan {

CliConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  CliConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    auto strip = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (strip(line).empty()) continue;
    if (eq == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    try {
      if (key == "enumeration_ceiling") cfg.enumeration_ceiling = std::stoi(value);
      else if (key == "extremal_enumeration_max_n") cfg.extremal_enumeration_max_n = std::stoi(value);
      else if (key == "budget_seconds") cfg.budget_seconds = std::stod(value);
      else if (key == "workers") cfg.workers = std::stoi(value);
      else throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
  return cfg;
}

namespace {

using Clock = std::chrono::steady_clock;

// Thrown for bad user input that CLI11 cannot detect (unknown names etc).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string config_path;
  bool tsv = false;
  std::optional<double> budget_seconds;
  std::optional<int> workers;
  std::optional<int> ceiling;
};

SearchOptions search_options(const CliConfig& cfg, const Common& c) {
  SearchOptions o;
  o.enumeration_ceiling = c.ceiling.value_or(cfg.enumeration_ceiling);
  o.extremal_enumeration_max_n = cfg.extremal_enumeration_max_n;
  o.budget = std::chrono::milliseconds(static_cast<long long>(c.budget_seconds.value_or(cfg.budget_seconds) * 1000));
  o.workers = c.workers.value_or(cfg.workers);
  return o;
}

Family family_arg(const std::string& name) {
  try {
    return family_by_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

TripleSystem graph_arg(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph(buf.str());
  }
  return read_graph(path);
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Turan numbers and link-graph audits for 3-graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config_path, "key=value config file (default: $TURAN_CONFIG)");
  app.add_flag("--tsv", common.tsv, "Emit tab-separated tables instead of JSON");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit a named graph");
  std::string cname;
  int cn = 0, ck = 3, ct = 2;
  std::string cbase = "k4_minus";
  bool chex = false, cjson = false;
  construct->add_option("name", cname, "s3 | c5_3 | k4_minus | f5 | f6 | k4_3 | turan2 | blowup")->required();
  construct->add_option("--n", cn, "Order (s3, turan2)");
  construct->add_option("--k", ck, "Number of parts (turan2)");
  construct->add_option("--base", cbase, "Base graph for blowup");
  construct->add_option("--t", ct, "Blow-up factor");
  construct->add_flag("--hex", chex, "Emit the h3 hex code");
  construct->add_flag("--json", cjson, "Emit a JSON report");

  // check
  auto* check = app.add_subcommand("check", "Test a graph for family-freeness");
  std::string check_path, check_family = "kf6";
  bool check_audit = false;
  check->add_option("graph", check_path, "Graph file or hex code file ('-' for stdin)")->required();
  check->add_option("--family", check_family, "kf6 | kf5 | k4m | f5 | f6 | k4_3");
  check->add_flag("--audit", check_audit, "Add per-edge structural audit and configuration scan");

  // link
  auto* link_cmd = app.add_subcommand("link", "Describe the labelled link graph of an edge");
  std::string link_path;
  std::vector<int> link_edge;
  link_cmd->add_option("graph", link_path, "Graph file")->required();
  link_cmd->add_option("--edge", link_edge, "Anchor edge, three 1-based labels (default: good edge)")
      ->expected(3)
      ->delimiter(',');

  // ex
  auto* ex = app.add_subcommand("ex", "Exact Turan number for small n");
  int ex_n = 0;
  std::string ex_family = "kf6", ex_method = "auto";
  ex->add_option("--n", ex_n, "Order")->required();
  ex->add_option("--family", ex_family, "Forbidden family");
  ex->add_option("--budget", common.budget_seconds, "Wall-clock budget in seconds");
  ex->add_option("--workers", common.workers, "Search threads");
  ex->add_option("--method", ex_method, "auto | enumeration | bnb")
      ->check(CLI::IsMember({"auto", "enumeration", "bnb"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List isomorphism classes of free graphs");
  int en_n = 0;
  std::string en_family = "kf6";
  std::optional<std::size_t> en_size;
  bool en_force = false;
  enumerate->add_option("--n", en_n, "Order")->required();
  enumerate->add_option("--family", en_family, "Forbidden family");
  enumerate->add_option("--size", en_size, "Only classes with this many edges");
  enumerate->add_option("--ceiling", common.ceiling, "Largest n enumerated without --force");
  enumerate->add_flag("--force", en_force, "Allow n above the ceiling");

  // density
  auto* density = app.add_subcommand("density", "ex(n)/C(n,3) over a range of n");
  std::string de_family = "kf6";
  int de_from = 3, de_to = 30, de_step = 3, de_certify = 6;
  bool de_no_fallback = false;
  density->add_option("--family", de_family, "Forbidden family");
  density->add_option("--from", de_from, "First n");
  density->add_option("--to", de_to, "Last n");
  density->add_option("--step", de_step, "Step")->check(CLI::PositiveNumber);
  density->add_option("--certify-up-to", de_certify, "Largest n computed by search");
  density->add_flag("--no-fallback", de_no_fallback, "Fail beyond the certified range");

  // stability
  auto* stab = app.add_subcommand("stability", "Best tripartition of a graph");
  std::string st_path;
  StabilityOptions st_opts;
  stab->add_option("graph", st_path, "Graph file")->required();
  stab->add_option("--seed", st_opts.seed, "Local-search seed");
  stab->add_option("--restarts", st_opts.restarts, "Local-search restarts");
  stab->add_option("--exact-max-n", st_opts.exact_max_n, "Largest n solved exactly");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  SuiteParams sp;
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--max-n", sp.max_n, "identities: largest n");
  verify->add_option("--max-k", sp.max_k, "identities: largest k for (iv)");
  verify->add_option("--max-s", sp.max_s, "k4-inequality: largest s");
  verify->add_option("--convexity-max-n", sp.convexity_max_n, "convexity: largest n");
  verify->add_option("--n", sp.equiv_n, "cancellative-equiv: order");
  verify->add_option("--extremal-max-n", sp.extremal_max_n, "extremal-table: largest n");
  verify->add_option("--max-t", sp.blowup_max_t, "blowup-containments: largest t");
  verify->add_option("--budget", common.budget_seconds, "Search budget in seconds");
  verify->add_option("--workers", common.workers, "Search threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = Clock::now();
  try {
    CliConfig cfg;
    std::string cfg_path = common.config_path;
    if (cfg_path.empty())
      if (const char* env = std::getenv(kConfigEnv)) cfg_path = env;
    if (!cfg_path.empty()) cfg = load_config(cfg_path);
    const SearchOptions sopts = search_options(cfg, common);

    if (*construct) {
      TripleSystem g;
      if (cname == "turan2") {
        if (cn < 1 || ck < 2) throw UsageError("turan2 needs --n >= 1 and --k >= 2");
        auto t = turan_graph(ck, cn);
        if (cjson) {
          json edges = json::array();
          for (auto [x, y] : t.edges()) edges.push_back({x + 1, y + 1});
          out << json{{"operation", "construct"}, {"name", cname}, {"n", cn}, {"k", ck},
                      {"m", t.size()}, {"edges", edges}}.dump(2) << '\n';
        } else {
          out << t.order() << ' ' << t.size() << '\n';
          for (auto [x, y] : t.edges()) out << x + 1 << ' ' << y + 1 << '\n';
        }
        return kExitOk;
      }
      if (cname == "s3") {
        if (cn < 3) throw UsageError("s3 needs --n >= 3");
        g = s3_graph(cn);
      } else if (cname == "blowup") {
        if (ct < 1) throw UsageError("blowup needs --t >= 1");
        try {
          g = blow_up(named(cbase), ct);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      } else {
        try {
          g = named(cname);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      if (cjson)
        out << json{{"operation", "construct"}, {"name", cname}, {"graph", to_json(g)}}.dump(2) << '\n';
      else if (chex)
        out << to_hex_code(g) << '\n';
      else
        out << "# " << cname << '\n' << write_graph_file(g);
      return kExitOk;
    }

    if (*check) {
      const auto fam = family_arg(check_family);
      const auto g = graph_arg(check_path);
      const auto verdict = is_free(g, fam);
      json rep{{"operation", "check"},
               {"inputs", {{"graph", to_json(g)}, {"family", fam.name()}}},
               {"verdict", to_json(verdict, fam)}};
      bool audit_pass = true;
      std::vector<std::vector<std::string>> rows;
      if (check_audit) {
        json per_edge = json::array();
        for (const auto& e : g.edges()) {
          auto audit = structural_audit(g, e);
          auto configs = forbidden_config_scan(link_of_edge(g, e));
          json cj = json::array();
          for (const auto& w : configs) cj.push_back(to_json(w));
          audit_pass = audit_pass && audit.all_pass() && configs.empty();
          per_edge.push_back({{"edge", to_json(e)}, {"audit", to_json(audit)}, {"configs", cj}});
          std::string failed;
          for (const auto& c : audit.checks)
            if (!c.pass) failed += (failed.empty() ? "" : ",") + std::to_string(c.index);
          rows.push_back({to_string(e), audit.all_pass() ? "pass" : "fail", failed.empty() ? "-" : failed,
                          std::to_string(configs.size())});
        }
        rep["audit"] = per_edge;
        rep["audit_pass"] = audit_pass;
      }
      rep["elapsed_seconds"] = seconds_since(start);
      if (common.tsv) {
        out << to_tsv({"family", "free", "member", "witness"},
                      {{fam.name(), verdict.free ? "yes" : "no",
                        verdict.free ? "-" : std::to_string(verdict.member),
                        verdict.free ? "-" : rep["verdict"]["witness"]["map"].dump()}});
        if (check_audit) out << to_tsv({"edge", "audit", "failed_checks", "configs"}, rows);
      } else {
        out << rep.dump(2) << '\n';
      }
      return verdict.free && audit_pass ? kExitOk : kExitNegative;
    }

    if (*link_cmd) {
      const auto g = graph_arg(link_path);
      Triple e;
      if (link_edge.empty()) {
        if (g.size() == 0) throw UsageError("graph has no edges");
        e = g.size() >= s3_count(g.order()) ? good_edge(g) : g.edges().front();
      } else {
        for (int v : link_edge)
          if (v < 1 || v > g.order()) throw UsageError("--edge label out of range");
        e = Triple(link_edge[0] - 1, link_edge[1] - 1, link_edge[2] - 1);
        if (!g.has_edge(e)) throw UsageError("--edge " + to_string(e) + " is not an edge");
      }
      const auto l = link_of_edge(g, e);
      const auto f = f_profile(g, e);
      json configs = json::array();
      for (const auto& w : forbidden_config_scan(l)) configs.push_back(to_json(w));
      json rep{{"operation", "link"},
               {"link", to_json(l)},
               {"f_profile", f},
               {"weight", weight(l)},
               {"gamma_size", l.gamma_union().size()},
               {"rainbow_t3", is_rainbow_t3(l)},
               {"partition", to_json(partition(l))},
               {"configs", configs},
               {"audit", to_json(structural_audit(g, e))}};
      if (g.order() >= 6) rep["key_bound"] = to_json(key_bound(g, e));
      rep["elapsed_seconds"] = seconds_since(start);
      if (common.tsv) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& le : rep["link"]["edges"])
          rows.push_back({le["pair"].dump(), le["label"].get<std::string>()});
        out << to_tsv({"pair", "label"}, rows);
      } else {
        out << rep.dump(2) << '\n';
      }
      return kExitOk;
    }

    if (*ex) {
      if (ex_n < 3) throw UsageError("--n must be >= 3");
      if (ex_n > kSearchMaxVertices) throw UsageError("--n must be <= " + std::to_string(kSearchMaxVertices));
      const auto fam = family_arg(ex_family);
      ExtremalResult r;
      if (ex_method == "enumeration") r = extremal_by_enumeration(ex_n, fam, sopts);
      else if (ex_method == "bnb") r = extremal_by_branch_and_bound(ex_n, fam, sopts);
      else r = extremal(ex_n, fam, sopts);
      if (common.tsv) {
        std::string codes;
        for (const auto& c : r.extremal) codes += (codes.empty() ? "" : ",") + c.hex();
        out << to_tsv({"n", "family", "ex", "upper", "exact", "unique", "method", "extremal"},
                      {{std::to_string(r.n), r.family, std::to_string(r.ex_value), std::to_string(r.upper_bound),
                        r.exact ? "yes" : "no", r.unique ? "yes" : "no", to_string(r.method), codes}});
      } else {
        out << json{{"operation", "ex"}, {"result", to_json(r)}}.dump(2) << '\n';
      }
      return r.exact ? kExitOk : kExitBounded;
    }

    if (*enumerate) {
      const auto fam = family_arg(en_family);
      SearchOptions o = sopts;
      o.allow_above_ceiling = en_force;
      std::vector<TripleSystem> graphs;
      try {
        graphs = enumerate_free_graphs(en_n, fam, en_size, o);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (common.tsv) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& g : graphs) rows.push_back({std::to_string(g.size()), to_hex_code(g), to_string(g)});
        out << to_tsv({"m", "hex", "edges"}, rows);
      } else {
        json classes = json::array();
        for (const auto& g : graphs) classes.push_back(to_json(g));
        out << json{{"operation", "enumerate"},
                    {"inputs", {{"n", en_n}, {"family", fam.name()}, {"size", en_size ? json(*en_size) : json()}}},
                    {"count", graphs.size()},
                    {"classes", classes},
                    {"elapsed_seconds", seconds_since(start)}}
                   .dump(2)
            << '\n';
      }
      return kExitOk;
    }

    if (*density) {
      const auto fam = family_arg(de_family);
      if (de_from < 3 || de_to < de_from) throw UsageError("need 3 <= --from <= --to");
      std::vector<int> ns;
      for (int n = de_from; n <= de_to; n += de_step) ns.push_back(n);
      DensityOptions o;
      o.certify_up_to = de_certify;
      o.allow_fallback = !de_no_fallback;
      o.search = sopts;
      std::vector<DensityPoint> pts;
      try {
        pts = density_sequence(fam, ns, o);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (common.tsv) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& p : pts)
          rows.push_back({std::to_string(p.n), std::to_string(p.ex_value), p.density.str(),
                          std::to_string(p.density.to_double()), p.provenance});
        out << to_tsv({"n", "ex", "density", "decimal", "provenance"}, rows);
      } else {
        json arr = json::array();
        for (const auto& p : pts) arr.push_back(to_json(p));
        out << json{{"operation", "density"}, {"family", fam.name()}, {"points", arr}}.dump(2) << '\n';
      }
      return kExitOk;
    }

    if (*stab) {
      const auto g = graph_arg(st_path);
      const auto fit = stability_fit(g, st_opts);
      if (common.tsv) {
        out << to_tsv({"n", "m", "defect", "defect_fraction", "exact"},
                      {{std::to_string(g.order()), std::to_string(g.size()), std::to_string(fit.defect),
                        fit.defect_fraction.str(), fit.exact ? "yes" : "no"}});
      } else {
        out << json{{"operation", "stability"},
                    {"inputs", {{"graph", to_json(g)}, {"seed", st_opts.seed}}},
                    {"fit", to_json(fit)},
                    {"elapsed_seconds", seconds_since(start)}}
                   .dump(2)
            << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      sp.search = sopts;
      std::vector<std::string> names;
      if (suite == "all") names = suite_names();
      else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end())
        names = {suite};
      else
        throw UsageError("unknown suite '" + suite + "'");
      bool all_pass = true;
      json results = json::array();
      std::vector<std::vector<std::string>> rows;
      for (const auto& name : names) {
        auto t0 = Clock::now();
        auto r = run_suite(name, sp);
        all_pass = all_pass && r.pass();
        auto j = to_json(r);
        j["elapsed_seconds"] = seconds_since(t0);
        results.push_back(j);
        for (const auto& c : r.claims) rows.push_back({name, c.claim, c.pass ? "pass" : "FAIL", c.detail});
      }
      if (common.tsv) out << to_tsv({"suite", "claim", "result", "detail"}, rows);
      else out << json{{"operation", "verify"}, {"pass", all_pass}, {"suites", results}}.dump(2) << '\n';
      return all_pass ? kExitOk : kExitNegative;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace turan
