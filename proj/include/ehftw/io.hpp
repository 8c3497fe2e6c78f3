#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ehftw/connectifier.hpp"
#include "ehftw/decomposer.hpp"
#include "ehftw/graph.hpp"
#include "ehftw/nonhub.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/td_dp.hpp"
#include "ehftw/treedec.hpp"

namespace ehftw::io {

using Json = nlohmann::json;

// graph6, n < 258048. Parse errors throw InputError.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// One graph6 string per non-empty line; an optional ">>graph6<<" header is
// skipped. Throws InputError when the file cannot be opened.
std::vector<Graph> read_graph6_file(const std::string& path);
Graph read_graph(const std::string& path);  // first graph of the file
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

// {"nodes": n, "bags": [[...]], "edges": [[a, b], ...]}
Json to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const Json& j);
TreeDecomposition read_td(const std::string& path);

// {"kind", "k", "wheel_kind", "roles": {name: [...]}, "role_order": [...]}
Json to_json(const PatternWitness& w);
PatternWitness witness_from_json(const Json& j);

Json to_json(const ClassReport& r);
Json to_json(const ValidationReport& r);
Json to_json(const TraceEntry& e);
Json to_json(const DecomposeResult& r);
Json to_json(const Solution& s);
Json to_json(const NonhubReport& r);
Json to_json(const Connectifier& c);
Json to_json(const HubPartition& p);

Json to_json(const Params& p);
// Missing keys keep their defaults; unknown keys or wrong types throw
// ConfigError, as does a failing Params::validate.
Params params_from_json(const Json& j);
Params read_params(const std::string& path);

Json read_json(const std::string& path);  // ConfigError on parse failure
void write_json(const std::string& path, const Json& j);

}  // namespace ehftw::io
