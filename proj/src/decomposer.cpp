#include "ehftw/decomposer.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>
#include <sstream>

#include "ehftw/errors.hpp"
#include "ehftw/lean.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/pmc.hpp"

namespace ehftw {

namespace {

std::string fmt(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

TreeDecomposition to_local(const TreeDecomposition& td, const InducedSubgraph& sub) {
  TreeDecomposition out;
  for (const auto& b : td.bags()) out.add_node(sub.lower(b));
  for (auto [a, b] : td.edges()) out.add_edge(a, b);
  return out;
}

ValidationReport validate_on(const Graph& g, const VertexSet& x, const TreeDecomposition& td) {
  for (const auto& b : td.bags())
    if (!is_subset(b, x)) {
      ValidationReport r;
      r.bags_in_range = false;
      r.message = "bag " + fmt(b) + " leaves the vertex set " + fmt(x);
      return r;
    }
  auto sub = induced(g, x);
  return validate(sub.graph, to_local(td, sub));
}

void require_valid_on(const Graph& g, const VertexSet& x, const TreeDecomposition& td, const std::string& what) {
  auto r = validate_on(g, x, td);
  if (!r.valid()) throw InputError(what + ": " + r.message);
}

TreeDecomposition structured_on(const Graph& g, const VertexSet& x, const TreeDecomposition& td) {
  if (x.empty()) return td;
  auto sub = induced(g, x);
  return lift(to_structured(sub.graph, to_local(td, sub)), sub.to_host);
}

[[noreturn]] void invariant_failed(const Graph& g, const std::string& what) {
  std::optional<PatternWitness> w;
  try {
    w = find_class_C_obstruction(g);
  } catch (const CapabilityError&) {
  }
  if (w) throw ClassViolation(what + "; the graph is outside the class", std::make_shared<const PatternWitness>(*w));
  throw CapabilityError(what + " at the configured constants");
}

VertexSet hubs_of(const Graph& g, const VertexSet& x) {
  auto sub = induced(g, x);
  return sub.lift(hubs(sub.graph));
}

// K for Conn(t1), without precondition checks.
VertexSet conn_core(const Graph& g, const TreeDecomposition& td, int t0, int t1) {
  const VertexSet m = td.adhesion_set(t0, t1);
  const VertexSet side = set_difference(td.branch_vertices(t0, t1), td.bag(t0));
  VertexSet k;
  for (auto& d : components_within(g, side))
    if (is_subset(m, open_neighborhood(g, d))) {
      k = std::move(d);
      break;
    }
  if (k.empty()) throw InputError("build_conn: no component beyond node " + std::to_string(t0) + " sees the adhesion " + fmt(m));
  // Delete vertices far from m first.
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  for (Vertex v : m) {
    dist[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0 && contains(k, w)) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  std::vector<Vertex> order(k.begin(), k.end());
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] != dist[b] ? dist[a] > dist[b] : a > b; });
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : order) {
      if (!contains(k, v)) continue;
      VertexSet cand = without(k, v);
      if (!cand.empty() && is_connected(g, cand) && is_subset(m, open_neighborhood(g, cand))) {
        k = std::move(cand);
        changed = true;
      }
    }
  }
  // No vertex of K is a hub of (G \ G_{t0->t1}) ∪ K ∪ M.
  const VertexSet local = set_union(set_difference(g.vertices(), td.branch_vertices(t0, t1)), set_union(k, m));
  const VertexSet bad = set_intersection(hubs_of(g, local), k);
  if (!bad.empty()) invariant_failed(g, "Conn(" + std::to_string(t1) + ") contains hubs " + fmt(bad));
  return k;
}

}  // namespace

void Params::validate() const {
  if (m < 3) throw ConfigError("params: m must be at least 3");
  if (t < 1 || d < 1 || k_t < 1 || c_t < 1 || tau < 1) throw ConfigError("params: t, d, k_t, c_t and tau must be positive");
  if (delta() < m) throw ConfigError("params: delta must be at least m");
  if (exact_limit < 0) throw ConfigError("params: exact_limit must be non-negative");
}

double Params::width_formula(int n, int hub_order) const {
  return c_t + static_cast<double>(delta()) * psi() * (std::log2(std::max(n, 1)) + hub_order);
}

HubPartition hub_partition(const Graph& g, int d) { return stable_layering(g, hubs(g), d); }

HubPartition stable_layering(const Graph& g, const VertexSet& x, int d) {
  check_vertex_set(g, x);
  if (d < 0) throw InputError("hub_partition: d must be non-negative");
  VertexSet remaining = x;
  HubPartition p;
  while (!remaining.empty()) {
    VertexSet peel;
    for (Vertex v : remaining)
      if (static_cast<int>(set_intersection(g.neighbors(v), remaining).size()) <= d) peel.push_back(v);
    if (peel.empty())
      throw CapabilityError("hub_partition: every vertex of the remaining hub graph " + fmt(remaining) + " has more than " +
                            std::to_string(d) + " hub neighbours");
    std::vector<VertexSet> classes;
    for (Vertex v : peel) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](const VertexSet& c) { return !intersects(c, g.neighbors(v)); });
      if (it == classes.end())
        classes.push_back({v});
      else
        it->push_back(v);
    }
    for (auto& c : classes) p.parts.push_back(std::move(c));
    remaining = set_difference(remaining, peel);
  }
  return p;
}

bool is_hub_partition(const Graph& g, const HubPartition& p, int d) {
  VertexSet all, later;
  for (const auto& s : p.parts) {
    if (s.empty() || !is_stable(g, s) || intersects(all, s)) return false;
    all = set_union(all, s);
  }
  if (all != hubs(g)) return false;
  for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
    later = set_union(later, *it);
    for (Vertex v : *it)
      if (static_cast<int>(set_intersection(g.neighbors(v), later).size()) > d) return false;
  }
  return true;
}

AOrder a_order_core(const std::map<Vertex, StarSeparation>& stars, const std::vector<Vertex>& order) {
  const std::size_t c = order.size();
  if (c != stars.size()) throw InputError("a_order_core: the order must list every star centre once");
  for (Vertex v : order)
    if (!stars.count(v)) throw InputError("a_order_core: vertex " + std::to_string(v) + " has no star separation");
  auto twins = [&](Vertex u, Vertex v) {
    const auto &su = stars.at(u), &sv = stars.at(v);
    return su.B == sv.B && without(su.C, u) == without(sv.C, v) && with(su.A, u) == with(sv.A, v);
  };
  std::vector<std::vector<char>> leq(c, std::vector<char>(c, 0));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      leq[i][j] = i == j || (twins(order[i], order[j]) ? i < j : contains(stars.at(order[i]).A, order[j]));
  AOrder r;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) r.partial_order = false;
      for (std::size_t k = 0; k < c; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) r.partial_order = false;
    }
  for (std::size_t j = 0; j < c; ++j) {
    bool minimal = true;
    for (std::size_t i = 0; i < c && minimal; ++i) minimal = i == j || !leq[i][j];
    if (minimal) r.core.push_back(order[j]);
  }
  r.core = make_set(r.core);
  return r;
}

VertexSet build_conn(const Graph& g, const TreeDecomposition& td, int t0, int t1) {
  require_valid(g, td);
  if (t0 < 0 || t0 >= td.node_count() || t1 < 0 || t1 >= td.node_count()) throw InputError("build_conn: node out of range");
  const auto& nb = td.tree_neighbors(t0);
  if (std::find(nb.begin(), nb.end(), t1) == nb.end()) throw InputError("build_conn: nodes are not adjacent");
  if (!is_tight(g, td).tight) throw InputError("build_conn: the decomposition is not tight");
  return set_union(conn_core(g, td, t0, t1), td.adhesion_set(t0, t1));
}

CentralBagState prepare_central(const Graph& g, const TreeDecomposition& td, int t0, const VertexSet& s_prime,
                                const Params& params) {
  params.validate();
  require_valid(g, td);
  if (t0 < 0 || t0 >= td.node_count()) throw InputError("central_bag: node out of range");
  check_vertex_set(g, s_prime);
  if (!is_stable(g, s_prime)) throw InputError("central_bag: S' must be stable");
  const VertexSet hub = hubs(g);
  for (Vertex v : s_prime)
    if (static_cast<int>(set_intersection(g.neighbors(v), hub).size()) > params.d)
      throw InputError("central_bag: vertex " + std::to_string(v) + " is not d-safe");
  if (clique_cutset(g)) throw InputError("central_bag: the graph has a clique cutset");
  if (!is_tight(g, td).tight) throw InputError("central_bag: the decomposition is not tight");

  CentralBagState st;
  st.t0 = t0;
  st.beta0 = td.bag(t0);
  st.s_prime = s_prime;
  const VertexSet& bag0 = td.bag(t0);
  for (int t1 : td.tree_neighbors(t0)) st.conn[t1] = set_union(conn_core(g, td, t0, t1), td.adhesion_set(t0, t1));
  st.verified.push_back("Conn conditions (1)-(3) for " + std::to_string(st.conn.size()) + " neighbours");

  const auto tor = torso(g, td, t0);
  const int lim = 2 * params.m * (params.m - 1);
  for (Vertex v : set_intersection(s_prime, bag0)) {
    const Vertex local = static_cast<Vertex>(std::lower_bound(tor.to_host.begin(), tor.to_host.end(), v) - tor.to_host.begin());
    if (tor.graph.degree(local) >= lim) st.s_bad.push_back(v);
  }
  if (st.s_bad.size() > 1) invariant_failed(g, "non-cooperative safe hubs " + fmt(st.s_bad) + " are pairwise nonadjacent");
  st.verified.push_back("|S_bad| <= 1");

  VertexSet beta = bag0;
  for (const auto& [t1, c] : st.conn) beta = set_union(beta, c);
  st.beta = set_difference(beta, st.s_bad);
  for (const auto& [t1, c] : st.conn)
    if (!is_subset(st.beta, set_union(set_difference(g.vertices(), td.branch_vertices(t0, t1)), c)))
      invariant_failed(g, "beta leaves (G \\ G_{t0->t1}) ∪ Conn(t1)");
  return st;
}

void finish_central(const Graph& g, const TreeDecomposition& td, CentralBagState& st, const Params& params) {
  const VertexSet& bag0 = td.bag(st.t0);
  const auto bsub = induced(g, st.beta);
  if (auto sep = balanced_separator(bsub.graph, 0.5, params.beta_bound()).separator)
    throw InputError("central_bag: beta has a balanced separator " + fmt(bsub.lift(*sep)) + " within the bound " +
                     std::to_string(params.beta_bound()));
  const int lim = 2 * params.m * (params.m - 1);
  st.candidates = set_intersection(set_difference(st.s_prime, st.s_bad), bag0);
  for (Vertex v : st.candidates) {
    if (static_cast<int>(set_intersection(g.neighbors(v), bag0).size()) >= lim)
      invariant_failed(g, "vertex " + std::to_string(v) + " has at least 2m(m-1) neighbours in the central bag");
    auto star = canonical_star(bsub.graph, bsub.to_local(v));
    if (!star) invariant_failed(g, "vertex " + std::to_string(v) + " is balanced in beta");
    st.stars[v] = StarSeparation{v, bsub.lift(star->A), bsub.lift(star->C), bsub.lift(star->B)};
  }
  st.verified.push_back("candidates unbalanced with small bag degree");

  const auto ord = a_order_core(st.stars, st.candidates);
  if (!ord.partial_order) invariant_failed(g, "the A-order is not a partial order");
  st.verified.push_back("A-order is a partial order");
  st.core = ord.core;
  for (Vertex u : st.core)
    for (Vertex v : st.core)
      if (u != v && intersects(st.stars.at(u).A, st.stars.at(v).C))
        invariant_failed(g, "core vertices " + std::to_string(u) + " and " + std::to_string(v) + " are not loosely laminar");
  st.verified.push_back("core loosely laminar");

  st.beta_a = st.beta;
  for (Vertex v : st.core) st.beta_a = set_intersection(st.beta_a, set_union(st.stars.at(v).B, st.stars.at(v).C));
  for (Vertex v : st.core) {
    if (!is_subset(st.stars.at(v).C, st.beta_a)) invariant_failed(g, "C(" + std::to_string(v) + ") leaves beta^A");
    if (static_cast<int>(set_intersection(st.stars.at(v).C, bag0).size()) > lim)
      invariant_failed(g, "C(" + std::to_string(v) + ") meets the central bag in more than 2m(m-1) vertices");
  }
  st.components = components_within(g, set_difference(st.beta, st.beta_a));
  st.anchors.clear();
  for (const auto& d : st.components) {
    Vertex anchor = -1;
    const VertexSet nd = set_intersection(open_neighborhood(g, d), st.beta);
    for (Vertex v : st.core) {
      if (!is_subset(d, st.stars.at(v).A)) continue;
      if (!is_subset(nd, st.stars.at(v).C)) invariant_failed(g, "N(D) leaves C(" + std::to_string(v) + ") for D = " + fmt(d));
      if (anchor < 0) anchor = v;
    }
    if (anchor < 0) invariant_failed(g, "component " + fmt(d) + " of beta \\ beta^A lies in no A(v)");
    st.anchors.push_back(anchor);
  }
  if (intersects(hubs_of(g, st.beta_a), st.s_prime)) invariant_failed(g, "S' meets the hubs of beta^A");
  st.verified.push_back("central bag conditions (1)-(4)");
  st.complete = true;
}

CentralBagState central_bag(const Graph& g, const TreeDecomposition& td, int t0, const VertexSet& s_prime,
                            const Params& params) {
  auto st = prepare_central(g, td, t0, s_prime, params);
  finish_central(g, td, st, params);
  return st;
}

TreeDecomposition assemble_beta(const Graph& g, const CentralBagState& st, const TreeDecomposition& td0,
                                const std::vector<TreeDecomposition>& component_tds, const Params& params) {
  if (!st.complete) throw InputError("assemble_beta: central bag state is incomplete");
  require_valid_on(g, st.beta_a, td0, "assemble_beta: td of beta^A");
  if (component_tds.size() != st.components.size())
    throw InputError("assemble_beta: expected " + std::to_string(st.components.size()) + " component decompositions");
  const int lim = 2 * params.m * (params.m - 1);
  TreeDecomposition out;
  for (const auto& b : td0.bags()) {
    VertexSet nb = b;
    const VertexSet core_here = set_intersection(st.core, b);
    for (Vertex v : core_here) nb = set_union(nb, st.stars.at(v).C);
    if (set_intersection(nb, st.beta0).size() > b.size() + lim * core_here.size())
      invariant_failed(g, "core bag " + fmt(b) + " grows past the bound");
    out.add_node(std::move(nb));
  }
  for (auto [a, b] : td0.edges()) out.add_edge(a, b);
  for (std::size_t i = 0; i < component_tds.size(); ++i) {
    const auto& ti = component_tds[i];
    require_valid_on(g, st.components[i], ti, "assemble_beta: component " + std::to_string(i));
    const Vertex r = st.anchors[i];
    int at = -1;
    for (int u = 0; u < td0.node_count() && at < 0; ++u)
      if (contains(td0.bag(u), r)) at = u;
    if (at < 0) throw InputError("assemble_beta: anchor " + std::to_string(r) + " is in no bag of the beta^A decomposition");
    const int offset = out.node_count();
    for (const auto& b : ti.bags()) {
      VertexSet nb = set_union(b, st.stars.at(r).C);
      if (set_intersection(nb, st.beta0).size() > b.size() + lim) invariant_failed(g, "component bag " + fmt(b) + " grows past the bound");
      out.add_node(std::move(nb));
    }
    for (auto [a, b] : ti.edges()) out.add_edge(a + offset, b + offset);
    out.add_edge(at, offset);
  }
  if (auto rep = validate_on(g, st.beta, out); !rep.valid()) invariant_failed(g, "assembled beta decomposition is invalid: " + rep.message);
  return out;
}

TreeDecomposition assemble_global(const Graph& g, const TreeDecomposition& td, const CentralBagState& st,
                                  const TreeDecomposition& td_beta, const std::vector<TreeDecomposition>& branch_tds) {
  require_valid(g, td);
  require_valid_on(g, st.beta, td_beta, "assemble_global: td of beta");
  const auto& nbrs = td.tree_neighbors(st.t0);
  if (branch_tds.size() != nbrs.size())
    throw InputError("assemble_global: expected " + std::to_string(nbrs.size()) + " branch decompositions");
  const VertexSet& bag0 = td.bag(st.t0);
  std::vector<VertexSet> rest(nbrs.size());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    auto it = st.conn.find(nbrs[i]);
    if (it == st.conn.end()) throw InputError("assemble_global: no Conn for node " + std::to_string(nbrs[i]));
    rest[i] = set_difference(it->second, bag0);
  }
  TreeDecomposition out;
  for (const auto& b : td_beta.bags()) {
    VertexSet psi = set_union(st.s_bad, set_intersection(b, bag0));
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      if (intersects(b, rest[i])) psi = set_union(psi, td.adhesion_set(st.t0, nbrs[i]));
    out.add_node(std::move(psi));
  }
  for (auto [a, b] : td_beta.edges()) out.add_edge(a, b);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const VertexSet d = set_difference(td.branch_vertices(st.t0, nbrs[i]), bag0);
    if (d.empty()) continue;
    require_valid_on(g, d, branch_tds[i], "assemble_global: branch " + std::to_string(i));
    int at = -1;
    for (int u = 0; u < td_beta.node_count() && at < 0; ++u)
      if (intersects(td_beta.bag(u), rest[i])) at = u;
    if (at < 0) throw InputError("assemble_global: no bag meets Conn(" + std::to_string(nbrs[i]) + ") beyond the central bag");
    const VertexSet adh = td.adhesion_set(st.t0, nbrs[i]);
    const int offset = out.node_count();
    for (const auto& b : branch_tds[i].bags()) out.add_node(set_union(st.s_bad, set_union(b, adh)));
    for (auto [a, b] : branch_tds[i].edges()) out.add_edge(a + offset, b + offset);
    out.add_edge(at, offset);
  }
  if (auto r = validate(g, out); !r.valid()) invariant_failed(g, "assembled decomposition is invalid: " + r.message);
  return out;
}

namespace {

struct Ctx {
  const Params& p;
  std::vector<TraceEntry> trace;
  int max_depth = 0;
};

TreeDecomposition rec(Ctx& ctx, const Graph& h, int depth);

// Decomposes h[x]; result in h's ids.
TreeDecomposition solve_on(Ctx& ctx, const Graph& h, const VertexSet& x, int depth) {
  auto sub = induced(h, x);
  return lift(rec(ctx, sub.graph, depth), sub.to_host);
}

std::vector<TreeDecomposition> solve_components(Ctx& ctx, const Graph& h, const VertexSet& x, int depth) {
  std::vector<TreeDecomposition> out;
  for (const auto& d : components(h, x)) {
    auto sub = induced(h, d);
    out.push_back(rec(ctx, sub.graph, depth));
  }
  return out;
}

TreeDecomposition rec(Ctx& ctx, const Graph& h, int depth) {
  if (depth > guard_limit(64)) throw CapabilityError("decompose: recursion depth exceeds the guard");
  ctx.max_depth = std::max(ctx.max_depth, depth);
  const int n = h.order();
  const std::size_t slot = ctx.trace.size();
  ctx.trace.push_back({depth, n, "", "", {}});
  auto entry = [&]() -> TraceEntry& { return ctx.trace[slot]; };
  if (n == 0) {
    entry().branch = "empty";
    return TreeDecomposition(VertexSet{});
  }
  if (hubs(h).empty()) {
    entry().branch = "no-hubs";
    if (n <= ctx.p.exact_limit) {
      auto ex = exact_treewidth(h);
      entry().detail = "exact width " + std::to_string(ex.width);
      return ex.td;
    }
    auto td = greedy_decomposition(h);
    entry().detail = "greedy width " + std::to_string(width(td));
    return td;
  }
  if (auto cut = clique_cutset(h)) {
    entry().branch = "clique-cutset";
    entry().detail = "cutset " + fmt(*cut);
    TreeDecomposition out;
    int first = -1;
    for (const auto& d : components(h, *cut)) {
      auto part = solve_on(ctx, h, set_union(*cut, d), depth + 1);
      int at = -1;
      for (int u = 0; u < part.node_count() && at < 0; ++u)
        if (is_subset(*cut, part.bag(u))) at = u;
      if (at < 0) throw CapabilityError("decompose: no bag holds the clique cutset " + fmt(*cut));
      const int offset = out.node_count();
      for (const auto& b : part.bags()) out.add_node(b);
      for (auto [a, b] : part.edges()) out.add_edge(a + offset, b + offset);
      if (first < 0)
        first = offset + at;
      else
        out.add_edge(first, offset + at);
    }
    return out;
  }
  const Params& p = ctx.p;
  auto sep = balanced_separator(h, 0.5, p.m);
  if (sep.separator) {
    entry().branch = "separator";
    entry().detail = "balanced separator " + fmt(*sep.separator) + (sep.exhaustive ? "" : " (heuristic)");
    return compose_with_separator(h, *sep.separator, solve_components(ctx, h, *sep.separator, depth + 1));
  }

  entry().branch = "central";
  const auto hp = hub_partition(h, p.d);
  const VertexSet s1 = hp.parts.front();
  const auto lean = refine_to_lean(h, p.m);
  const int t0 = find_center(h, lean);
  if (!is_center(h, lean, t0)) throw CapabilityError("decompose: find_center returned a non-centre");
  auto st = prepare_central(h, lean, t0, s1, p);
  entry().verified = st.verified;
  entry().verified.insert(entry().verified.begin(), "center");
  std::ostringstream detail;
  detail << "hub order " << hp.order() << ", S1 " << fmt(s1) << ", t0 bag " << fmt(lean.bag(t0)) << ", |beta| "
         << st.beta.size() << ", S_bad " << fmt(st.s_bad);
  const auto bsub = induced(h, st.beta);
  auto bsep = balanced_separator(bsub.graph, 0.5, p.beta_bound());
  TreeDecomposition td_beta;
  if (bsep.separator) {
    detail << "; beta separator " << fmt(bsub.lift(*bsep.separator));
    entry().detail = detail.str();
    td_beta = lift(compose_with_separator(bsub.graph, *bsep.separator, solve_components(ctx, bsub.graph, *bsep.separator, depth + 1)),
                   bsub.to_host);
  } else {
    finish_central(h, lean, st, p);
    detail << "; core " << fmt(st.core) << ", |beta^A| " << st.beta_a.size() << ", " << st.components.size() << " components";
    entry().detail = detail.str();
    entry().verified = st.verified;
    entry().verified.insert(entry().verified.begin(), "center");
    auto td0 = structured_on(h, st.beta_a, solve_on(ctx, h, st.beta_a, depth + 1));
    std::vector<TreeDecomposition> comps;
    for (const auto& d : st.components) comps.push_back(solve_on(ctx, h, d, depth + 1));
    td_beta = assemble_beta(h, st, td0, comps, p);
    ctx.trace[slot].verified.push_back("beta decomposition assembled");
  }
  td_beta = structured_on(h, st.beta, td_beta);
  std::vector<TreeDecomposition> branch_tds;
  for (int t1 : lean.tree_neighbors(t0)) {
    const VertexSet d = set_difference(lean.branch_vertices(t0, t1), lean.bag(t0));
    branch_tds.push_back(d.empty() ? TreeDecomposition{} : solve_on(ctx, h, d, depth + 1));
  }
  auto out = assemble_global(h, lean, st, td_beta, branch_tds);
  ctx.trace[slot].verified.push_back("global decomposition valid");
  return out;
}

}  // namespace

DecomposeResult decompose(const Graph& g, const Params& params) {
  params.validate();
  if (params.check_membership) {
    auto rep = class_membership(g, params.t);
    if (!rep.in_C_tt)
      throw ClassViolation("decompose needs a graph in C_tt; found " + (rep.blocking.empty() ? std::string("an obstruction") : rep.blocking),
                           rep.blocking_witness ? std::make_shared<const PatternWitness>(*rep.blocking_witness) : nullptr);
  }
  Ctx ctx{params, {}, 0};
  DecomposeResult r;
  r.td = rec(ctx, g, 0);
  require_valid(g, r.td);
  r.trace = std::move(ctx.trace);
  r.max_depth = ctx.max_depth;
  r.width = width(r.td);
  r.hub_order = hub_partition(g, params.d).order();
  r.formula = params.width_formula(g.order(), r.hub_order);
  return r;
}

BananaReport banana_report(const Graph& g) {
  BananaReport r;
  const VertexSet hub = hubs(g);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (intersects(g.neighbors(x), hub)) continue;
    for (Vertex y = 0; y < g.order(); ++y) {
      if (y == x || g.adjacent(x, y)) continue;
      const int k = local_connectivity(g, x, y, g.order());
      if (k > r.max_paths) {
        r.max_paths = k;
        r.pair = Edge{x, y};
      }
    }
  }
  return r;
}

}  // namespace ehftw
