#include "turan/report.hpp"

#include <sstream>

#include "turan/io.hpp"

namespace turan {

namespace {

json one_based(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

}  // namespace

json to_json(const Triple& t) { return json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

json to_json(const TripleSystem& g) {
  json edges = json::array();
  for (const auto& t : g.edges()) edges.push_back(to_json(t));
  return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}, {"hex", to_hex_code(g)}};
}

json to_json(const Embedding& e) { return {{"map", one_based(e.map)}}; }

json to_json(const Verdict& v, const Family& fam) {
  if (v.free) return {{"free", true}, {"family", fam.name()}};
  return {{"free", false},
          {"family", fam.name()},
          {"member", v.member},
          {"pattern", to_json(fam.members()[v.member])},
          {"witness", to_json(v.witness)}};
}

json to_json(const LabeledLinkGraph& l) {
  json edges = json::array();
  for (auto [y, z] : l.labeled_edges()) {
    std::string label;
    for (int i = 0; i < 3; ++i)
      if ((l.label(y, z) >> i) & 1) label.push_back(static_cast<char>('a' + i));
    edges.push_back({{"pair", json::array({y + 1, z + 1})}, {"label", label}});
  }
  return {{"anchor", to_json(l.anchor())},
          {"vertices", one_based(l.vertices())},
          {"edges", edges},
          {"gamma_ab", one_based(l.gamma(AnchorPair::AB))},
          {"gamma_ac", one_based(l.gamma(AnchorPair::AC))},
          {"gamma_bc", one_based(l.gamma(AnchorPair::BC))},
          {"gamma_overlap", one_based(l.gamma_overlap())}};
}

json to_json(const LinkPartition& p) {
  return {{"gamma_abc", one_based(p.gamma_abc)},
          {"v4", one_based(p.v4)},
          {"r", one_based(p.r)},
          {"overlap", one_based(p.overlap)}};
}

json to_json(const ConfigWitness& w) {
  std::string perm;
  for (int x : w.permutation) perm.push_back(static_cast<char>('a' + x));
  return {{"config", to_string(w.id)},
          {"letters", perm},
          {"vertices", one_based(w.vertices)},
          {"pattern", w.pattern == Named::F6 ? "F6" : "K4-"},
          {"implied_embedding", to_json(w.implied)}};
}

json to_json(const AuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json ws = json::array();
    for (const auto& w : c.witnesses) ws.push_back(one_based(w));
    checks.push_back({{"check", c.index}, {"pass", c.pass}, {"witnesses", ws}});
  }
  return {{"anchor", to_json(r.anchor)}, {"pass", r.all_pass()}, {"checks", checks}};
}

json to_json(const KeyBound& k) {
  return {{"lhs", k.lhs}, {"rhs", k.rhs}, {"holds", k.lhs <= k.rhs}, {"equality_structure", k.equality_structure}};
}

json to_json(const ExtremalResult& r) {
  json codes = json::array();
  for (const auto& c : r.extremal) codes.push_back(c.hex());
  return {{"n", r.n},
          {"family", r.family},
          {"exact", r.exact},
          {"ex", r.ex_value},
          {"lower_bound", r.ex_value},
          {"upper_bound", r.upper_bound},
          {"extremal", codes},
          {"unique", r.unique},
          {"method", to_string(r.method)},
          {"nodes", r.nodes},
          {"elapsed_seconds", r.elapsed_seconds}};
}

json to_json(const DensityPoint& p) {
  return {{"n", p.n},
          {"ex", p.ex_value},
          {"density", p.density.str()},
          {"density_decimal", p.density.to_double()},
          {"provenance", p.provenance}};
}

json to_json(const StabilityFit& f) {
  return {{"partition", f.partition},
          {"transversal_edges", f.transversal_edges},
          {"defect", f.defect},
          {"defect_fraction", f.defect_fraction.str()},
          {"exact", f.exact}};
}

Triple triple_from_json(const json& j) {
  return Triple(j.at(0).get<int>() - 1, j.at(1).get<int>() - 1, j.at(2).get<int>() - 1);
}

Embedding embedding_from_json(const json& j) {
  Embedding e;
  for (const auto& v : j.at("map")) e.map.push_back(v.get<int>() - 1);
  return e;
}

std::string to_tsv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

}  // namespace turan
