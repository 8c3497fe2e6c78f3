#include "ehftw/io.hpp"

#include <fstream>
#include <sstream>

#include "ehftw/errors.hpp"

namespace ehftw::io {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n >= 258048) throw InputError("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int bits = 0, acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw InputError("graph6: empty string");
  for (char c : s)
    if (c < 63 || c > 126) throw InputError("graph6: invalid character");
  std::size_t pos = 0;
  int n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw InputError("graph6: unsupported order encoding");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    pos = 4;
  }
  std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() - pos != need)
    throw InputError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(s.size() - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  return Graph(n, edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

Graph read_graph(const std::string& path) {
  auto gs = read_graph6_file(path);
  if (gs.empty()) throw InputError(path + " holds no graph");
  return gs.front();
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

Json to_json(const TreeDecomposition& td) {
  Json edges = Json::array();
  for (auto [a, b] : td.edges()) edges.push_back({a, b});
  return Json{{"nodes", td.node_count()}, {"bags", td.bags()}, {"edges", edges}};
}

TreeDecomposition td_from_json(const Json& j) {
  try {
    TreeDecomposition td;
    for (const auto& b : j.at("bags")) td.add_node(make_set(b.get<std::vector<Vertex>>()));
    if (j.contains("nodes") && j.at("nodes").get<int>() != td.node_count())
      throw InputError("td json: node count does not match bags");
    for (const auto& e : j.at("edges")) {
      auto ab = e.get<std::vector<int>>();
      if (ab.size() != 2 || ab[0] < 0 || ab[1] < 0 || ab[0] >= td.node_count() || ab[1] >= td.node_count())
        throw InputError("td json: bad edge");
      td.add_edge(ab[0], ab[1]);
    }
    return td;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("td json: ") + e.what());
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

TreeDecomposition read_td(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return td_from_json(j);
}

namespace {

PatternKind kind_from_string(const std::string& s) {
  for (PatternKind k : {PatternKind::Hole, PatternKind::EvenHole, PatternKind::Theta, PatternKind::Prism,
                        PatternKind::Pyramid, PatternKind::GeneralizedKPyramid, PatternKind::Wheel,
                        PatternKind::Clique})
    if (to_string(k) == s) return k;
  throw InputError("unknown pattern kind '" + s + "'");
}

WheelKind wheel_from_string(const std::string& s) {
  for (WheelKind k :
       {WheelKind::Proper, WheelKind::Even, WheelKind::Twin, WheelKind::Universal, WheelKind::ShortPyramid})
    if (to_string(k) == s) return k;
  throw InputError("unknown wheel kind '" + s + "'");
}

}  // namespace

Json to_json(const PatternWitness& w) {
  Json roles = Json::object();
  Json order = Json::array();
  for (const auto& r : w.roles) {
    roles[r.name] = r.vertices;
    order.push_back(r.name);
  }
  Json j{{"kind", to_string(w.kind)}, {"roles", roles}, {"role_order", order}};
  if (w.kind == PatternKind::GeneralizedKPyramid) j["k"] = w.k;
  if (w.kind == PatternKind::Wheel) j["wheel_kind"] = to_string(w.wheel_kind);
  return j;
}

PatternWitness witness_from_json(const Json& j) {
  try {
    PatternWitness w;
    w.kind = kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("k")) w.k = j.at("k").get<int>();
    if (j.contains("wheel_kind")) w.wheel_kind = wheel_from_string(j.at("wheel_kind").get<std::string>());
    const Json& roles = j.at("roles");
    std::vector<std::string> names;
    if (j.contains("role_order")) names = j.at("role_order").get<std::vector<std::string>>();
    else
      for (auto it = roles.begin(); it != roles.end(); ++it) names.push_back(it.key());
    for (const auto& name : names) w.roles.push_back({name, roles.at(name).get<std::vector<Vertex>>()});
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("witness json: ") + e.what());
  }
}

Json to_json(const ClassReport& r) {
  Json j{{"in_C", r.in_C}, {"in_C_t", r.in_C_t}, {"in_C_tt", r.in_C_tt}, {"blocking", r.blocking}};
  j["witness"] = r.blocking_witness ? to_json(*r.blocking_witness) : Json(nullptr);
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j{{"valid", r.valid()},
         {"tree", r.tree},
         {"vertex_coverage", r.vertex_coverage},
         {"edge_coverage", r.edge_coverage},
         {"connectivity", r.connectivity},
         {"bags_in_range", r.bags_in_range},
         {"message", r.message}};
  if (r.uncovered_vertex) j["uncovered_vertex"] = *r.uncovered_vertex;
  if (r.uncovered_edge) j["uncovered_edge"] = {r.uncovered_edge->first, r.uncovered_edge->second};
  if (r.disconnected_vertex) j["disconnected_vertex"] = *r.disconnected_vertex;
  return j;
}

Json to_json(const TraceEntry& e) {
  return Json{{"depth", e.depth}, {"order", e.order}, {"branch", e.branch}, {"detail", e.detail},
              {"verified", e.verified}};
}

Json to_json(const DecomposeResult& r) {
  Json trace = Json::array();
  for (const auto& e : r.trace) trace.push_back(to_json(e));
  return Json{{"width", r.width},     {"hub_order", r.hub_order}, {"formula", r.formula},
              {"max_depth", r.max_depth}, {"td", to_json(r.td)}, {"trace", trace}};
}

Json to_json(const Solution& s) {
  Json j{{"problem", to_string(s.problem)}, {"value", s.value}, {"feasible", s.feasible}};
  if (!s.coloring.empty()) j["coloring"] = s.coloring;
  else j["set"] = s.set;
  return j;
}

Json to_json(const NonhubReport& r) {
  Json bags = Json::array();
  for (const auto& b : r.bags)
    bags.push_back({{"node", b.node}, {"non_hubs", b.non_hubs}, {"max_stable", b.max_stable}});
  return Json{{"tau", r.tau},
              {"hubs", r.hubs},
              {"max_bag_stable", r.max_bag_stable},
              {"bag_bound", 4 * r.tau},
              {"bag_bound_ok", r.bag_bound_ok},
              {"max_separator_stable", r.max_separator_stable},
              {"separator_bound", r.tau},
              {"separator_bound_ok", r.separator_bound_ok},
              {"separators_checked", r.separators_checked},
              {"bags", bags}};
}

Json to_json(const Connectifier& c) {
  Json att = Json::array();
  for (auto [x, y] : c.attachment) att.push_back({x, y});
  Json legs = Json::array();
  for (const auto& l : c.legs) legs.push_back(l);
  return Json{{"kind", to_string(c.kind)}, {"h", c.h},     {"spine", c.spine},
              {"legs", legs},              {"attached", c.attached}, {"attachment", att}};
}

Json to_json(const HubPartition& p) {
  Json parts = Json::array();
  for (const auto& s : p.parts) parts.push_back(s);
  return Json{{"order", p.order()}, {"parts", parts}};
}

Json to_json(const Params& p) {
  return Json{{"t", p.t},
              {"d", p.d},
              {"k_t", p.k_t},
              {"m", p.m},
              {"c_t", p.c_t},
              {"tau", p.tau},
              {"beta_separator_bound", p.beta_separator_bound},
              {"exact_limit", p.exact_limit},
              {"check_membership", p.check_membership}};
}

Params params_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("params: expected a JSON object");
  Params p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    auto as_int = [&]() {
      if (!v.is_number_integer()) throw ConfigError("params: '" + key + "' must be an integer");
      return v.get<int>();
    };
    if (key == "t") p.t = as_int();
    else if (key == "d") p.d = as_int();
    else if (key == "k_t") p.k_t = as_int();
    else if (key == "m") p.m = as_int();
    else if (key == "c_t") p.c_t = as_int();
    else if (key == "tau") p.tau = as_int();
    else if (key == "beta_separator_bound") p.beta_separator_bound = as_int();
    else if (key == "exact_limit") p.exact_limit = as_int();
    else if (key == "check_membership") {
      if (!v.is_boolean()) throw ConfigError("params: 'check_membership' must be a boolean");
      p.check_membership = v.get<bool>();
    } else {
      throw ConfigError("params: unknown key '" + key + "'");
    }
  }
  p.validate();
  return p;
}

Params read_params(const std::string& path) { return params_from_json(read_json(path)); }

}  // namespace ehftw::io
