#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "turan/core.hpp"
#include "turan/embed.hpp"
#include "turan/link.hpp"
#include "turan/search.hpp"

namespace turan {

using json = nlohmann::json;

// All vertex labels in reports are 1-based, matching the graph file format.
json to_json(const Triple& t);
json to_json(const TripleSystem& g);
json to_json(const Embedding& e);
json to_json(const Verdict& v, const Family& fam);
json to_json(const LabeledLinkGraph& l);
json to_json(const LinkPartition& p);
json to_json(const ConfigWitness& w);
json to_json(const AuditReport& r);
json to_json(const KeyBound& k);
json to_json(const ExtremalResult& r);
json to_json(const DensityPoint& p);
json to_json(const StabilityFit& f);

Triple triple_from_json(const json& j);
Embedding embedding_from_json(const json& j);

// Tab-separated table: header row then one row per entry.
std::string to_tsv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace turan
