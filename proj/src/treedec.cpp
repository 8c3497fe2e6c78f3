#include "ehftw/treedec.hpp"

#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <numeric>
#include <sstream>

#include "ehftw/errors.hpp"

namespace ehftw {

int TreeDecomposition::add_node(VertexSet bag) {
  bags_.push_back(std::move(bag));
  adj_.emplace_back();
  return static_cast<int>(bags_.size()) - 1;
}

void TreeDecomposition::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count() || a == b)
    throw InputError("tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") invalid");
  edges_.emplace_back(std::min(a, b), std::max(a, b));
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

void TreeDecomposition::set_bag(int node, VertexSet bag) {
  if (node < 0 || node >= node_count()) throw InputError("node id out of range");
  bags_[node] = std::move(bag);
}

const VertexSet& TreeDecomposition::bag(int node) const {
  if (node < 0 || node >= node_count()) throw InputError("node id " + std::to_string(node) + " out of range");
  return bags_[node];
}

const std::vector<int>& TreeDecomposition::tree_neighbors(int node) const {
  if (node < 0 || node >= node_count()) throw InputError("node id " + std::to_string(node) + " out of range");
  return adj_[node];
}

std::vector<int> TreeDecomposition::branch_nodes(int from, int to) const {
  std::vector<int> out{to};
  std::vector<char> seen(node_count(), 0);
  seen[from] = seen[to] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int w : adj_[out[i]])
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  return out;
}

VertexSet TreeDecomposition::branch_vertices(int from, int to) const {
  std::vector<Vertex> all;
  for (int t : branch_nodes(from, to)) all.insert(all.end(), bags_[t].begin(), bags_[t].end());
  return make_set(std::move(all));
}

std::vector<int> TreeDecomposition::tree_path(int a, int b) const {
  std::vector<int> parent(node_count(), -2);
  std::vector<int> queue{a};
  parent[a] = -1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : adj_[queue[i]])
      if (parent[w] == -2) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
  std::vector<int> path;
  if (parent[b] == -2) return path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------- validation

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
  ValidationReport r;
  const int nodes = td.node_count();
  std::ostringstream msg;
  if (nodes == 0 || static_cast<int>(td.edges().size()) != nodes - 1 ||
      td.tree_path(0, nodes - 1).empty() ||
      [&] {
        for (int t = 0; t < nodes; ++t)
          if (td.tree_path(0, t).empty()) return true;
        return false;
      }()) {
    r.tree = false;
    msg << "decomposition tree is not a tree; ";
  }
  for (int t = 0; t < nodes; ++t) {
    const auto& b = td.bag(t);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (!g.valid_vertex(b[i]) || (i > 0 && b[i - 1] >= b[i])) r.bags_in_range = false;
  }
  if (!r.bags_in_range) {
    msg << "bag with out-of-range or unsorted vertices; ";
    r.message = msg.str();
    return r;
  }
  std::vector<std::vector<int>> holders(g.order());
  for (int t = 0; t < nodes; ++t)
    for (Vertex v : td.bag(t)) holders[v].push_back(t);
  for (Vertex v = 0; v < g.order() && r.vertex_coverage; ++v)
    if (holders[v].empty()) {
      r.vertex_coverage = false;
      r.uncovered_vertex = v;
      msg << "vertex " << v << " in no bag; ";
    }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int t : holders[u])
      if (contains(td.bag(t), v)) covered = true;
    if (!covered) {
      r.edge_coverage = false;
      r.uncovered_edge = Edge{u, v};
      msg << "edge " << u << "-" << v << " in no bag; ";
      break;
    }
  }
  if (r.tree) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (holders[v].size() <= 1) continue;
      std::vector<char> in(nodes, 0), seen(nodes, 0);
      for (int t : holders[v]) in[t] = 1;
      std::vector<int> stack{holders[v][0]};
      seen[holders[v][0]] = 1;
      std::size_t reached = 0;
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : td.tree_neighbors(t))
          if (in[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      if (reached != holders[v].size()) {
        r.connectivity = false;
        r.disconnected_vertex = v;
        msg << "nodes holding vertex " << v << " are not connected; ";
        break;
      }
    }
  }
  r.message = msg.str();
  return r;
}

void require_valid(const Graph& g, const TreeDecomposition& td) {
  auto r = validate(g, td);
  if (!r.valid()) throw InputError("invalid tree decomposition: " + r.message);
}

int width(const TreeDecomposition& td) {
  int w = -1;
  for (const auto& b : td.bags()) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int adhesion(const TreeDecomposition& td) {
  int a = 0;
  for (auto [x, y] : td.edges()) a = std::max(a, static_cast<int>(td.adhesion_set(x, y).size()));
  return a;
}

std::strong_ordering Fatness::operator<=>(const Fatness& other) const {
  const std::size_t top = std::max(counts.size(), other.counts.size());
  for (std::size_t i = top; i-- > 0;) {
    int a = i < counts.size() ? counts[i] : 0;
    int b = i < other.counts.size() ? other.counts[i] : 0;
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::string Fatness::to_string() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (std::size_t i = counts.size(); i-- > 0;) {
    if (!first) out << ",";
    out << counts[i];
    first = false;
  }
  out << ")";
  return out.str();
}

Fatness fatness(const TreeDecomposition& td) {
  Fatness f;
  f.counts.assign(width(td) + 2, 0);
  for (const auto& b : td.bags()) ++f.counts[b.size()];
  return f;
}

Torso torso(const Graph& g, const TreeDecomposition& td, int node) {
  const VertexSet& bag = td.bag(node);
  auto sub = induced(g, bag);
  std::vector<Edge> extra;
  for (int w : td.tree_neighbors(node)) {
    VertexSet adh = sub.lower(td.adhesion_set(node, w));
    for (std::size_t i = 0; i < adh.size(); ++i)
      for (std::size_t j = i + 1; j < adh.size(); ++j) extra.emplace_back(adh[i], adh[j]);
  }
  return Torso{sub.graph.with_edges(extra), bag};
}

// ---------------------------------------------------------------- centers, tightness

bool is_center(const Graph& g, const TreeDecomposition& td, int node) {
  for (int w : td.tree_neighbors(node)) {
    auto outside = set_difference(td.branch_vertices(node, w), td.bag(node));
    if (2 * static_cast<int>(outside.size()) > g.order()) return false;
  }
  return true;
}

int find_center(const Graph& g, const TreeDecomposition& td) {
  // A sink of the orientation towards heavy sides; ties go to the least id.
  for (int t = 0; t < td.node_count(); ++t)
    if (is_center(g, td, t)) return t;
  throw InputError("tree decomposition has no center (is it valid?)");
}

TightnessReport is_tight(const Graph& g, const TreeDecomposition& td) {
  TightnessReport r;
  for (auto [a, b] : td.edges())
    for (auto [t, t2] : {std::pair{a, b}, std::pair{b, a}}) {
      VertexSet adh = td.adhesion_set(t, t2);
      VertexSet side = set_difference(td.branch_vertices(t, t2), td.bag(t));
      bool ok = false;
      for (const auto& d : components_within(g, side))
        if (is_subset(adh, open_neighborhood(g, d))) {
          ok = true;
          break;
        }
      if (!ok) {
        r.tight = false;
        r.failing_edge = std::pair{t, t2};
        return r;
      }
    }
  return r;
}

// ---------------------------------------------------------------- leanness

namespace {

template <class F>
bool for_each_subset(const VertexSet& base, int size, F&& f) {
  const int n = static_cast<int>(base.size());
  if (size > n) return false;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s(size);
    for (int i = 0; i < size; ++i) s[i] = base[idx[i]];
    if (f(s)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void for_each_lean_violation(const Graph& g, const TreeDecomposition& td, int k,
                             const std::function<bool(const LeanViolation&)>& visit) {
  if (k > guard_limit(4) || width(td) + 1 > guard_limit(16))
    throw CapabilityError("leanness check exceeds the guard (k <= " + std::to_string(guard_limit(4)) +
                          ", bag size <= " + std::to_string(guard_limit(16)) + ")");
  const int nodes = td.node_count();
  // Minimum adhesion along each tree path.
  std::vector<std::vector<int>> min_adh(nodes, std::vector<int>(nodes, std::numeric_limits<int>::max()));
  for (int t = 0; t < nodes; ++t)
    for (int t2 = t + 1; t2 < nodes; ++t2) {
      auto path = td.tree_path(t, t2);
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        min_adh[t][t2] = std::min(min_adh[t][t2], static_cast<int>(td.adhesion_set(path[i], path[i + 1]).size()));
    }
  for (int s = 1; s <= k; ++s)
    for (int t = 0; t < nodes; ++t)
      for (int t2 = t; t2 < nodes; ++t2) {
        if (min_adh[t][t2] < s) continue;
        const bool stop = for_each_subset(td.bag(t), s, [&](const VertexSet& z) {
          return for_each_subset(td.bag(t2), s, [&](const VertexSet& z2) {
            if (t == t2 && z2 < z) return false;
            auto m = menger(g, z, z2);
            if (m.count >= s) return false;
            return visit(LeanViolation{t, t2, z, z2, m.cut, m.paths});
          });
        });
        if (stop) return;
      }
}

LeanReport is_k_lean(const Graph& g, const TreeDecomposition& td, int k) {
  if (k < 1) throw InputError("leanness needs k >= 1");
  LeanReport r;
  if (adhesion(td) >= k && !td.edges().empty()) {
    r.lean = false;
    r.adhesion_ok = false;
    return r;
  }
  for_each_lean_violation(g, td, k, [&](const LeanViolation& v) {
    r.lean = false;
    r.witness = v;
    return true;
  });
  return r;
}

// ---------------------------------------------------------------- constructions

TreeDecomposition lift(const TreeDecomposition& td, const VertexSet& to_host) {
  TreeDecomposition out;
  for (const auto& b : td.bags()) {
    VertexSet hb;
    for (Vertex v : b) hb.push_back(to_host.at(v));
    out.add_node(make_set(std::move(hb)));
  }
  for (auto [a, b] : td.edges()) out.add_edge(a, b);
  return out;
}

TreeDecomposition compose_with_separator(const Graph& g, const VertexSet& x,
                                         const std::vector<TreeDecomposition>& component_tds) {
  check_vertex_set(g, x);
  auto comps = components(g, x);
  if (comps.size() != component_tds.size())
    throw InputError("compose_with_separator: expected " + std::to_string(comps.size()) +
                     " component decompositions, got " + std::to_string(component_tds.size()));
  TreeDecomposition out;
  const int root = out.add_node(x);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto sub = induced(g, comps[i]);
    auto rep = validate(sub.graph, component_tds[i]);
    if (!rep.valid()) throw InputError("compose_with_separator: component " + std::to_string(i) + ": " + rep.message);
    auto lifted = lift(component_tds[i], sub.to_host);
    const int offset = out.node_count();
    for (const auto& b : lifted.bags()) out.add_node(set_union(b, x));
    for (auto [a, b] : lifted.edges()) out.add_edge(a + offset, b + offset);
    out.add_edge(root, offset);
  }
  return out;
}

TreeDecomposition from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n || make_set(order) != g.vertices())
    throw InputError("elimination order must be a permutation of the vertices");
  if (n == 0) return TreeDecomposition(VertexSet{});
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<VertexSet> fill(n);
  for (Vertex v = 0; v < n; ++v) fill[v] = g.neighbors(v);
  TreeDecomposition td;
  std::vector<VertexSet> later(n);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet up;
    for (Vertex w : fill[v])
      if (pos[w] > i) up.push_back(w);
    for (Vertex a : up)
      for (Vertex b : up)
        if (a != b) fill[a] = with(fill[a], b);
    later[v] = up;
    td.add_node(with(up, v));
  }
  for (int i = 0; i + 1 < n; ++i) {
    Vertex v = order[i];
    int parent = i + 1;
    if (!later[v].empty()) {
      parent = n;
      for (Vertex w : later[v]) parent = std::min(parent, pos[w]);
    }
    td.add_edge(i, parent);
  }
  return td;
}

TreeDecomposition greedy_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> fill(n);
  for (Vertex v = 0; v < n; ++v) fill[v] = g.neighbors(v);
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    int best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      int d = 0;
      for (Vertex w : fill[v]) d += gone[w] ? 0 : 1;
      if (best < 0 || d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    VertexSet up;
    for (Vertex w : fill[best])
      if (!gone[w]) up.push_back(w);
    for (Vertex a : up)
      for (Vertex b : up)
        if (a != b) fill[a] = with(fill[a], b);
    gone[best] = 1;
    order.push_back(best);
  }
  return contract_nested(from_elimination_order(g, order));
}

ExactTreewidth exact_treewidth(const Graph& g) {
  const int n = g.order();
  const int limit = guard_limit(14);
  if (n > limit) throw CapabilityError("exact_treewidth: n = " + std::to_string(n) + " exceeds the guard of " + std::to_string(limit));
  if (n == 0) return {-1, TreeDecomposition(VertexSet{})};
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1U << w;
  // q(S, v): vertices outside S ∪ {v} reachable from v through S.
  auto q = [&](std::uint32_t s, Vertex v) {
    std::uint32_t reach = 1U << v, frontier = 1U << v, out = 0;
    while (frontier) {
      Vertex u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint32_t nb = nbr[u] & ~reach;
      out |= nb & ~s;
      std::uint32_t inner = nb & s;
      reach |= nb;
      frontier |= inner;
    }
    return std::popcount(out & ~(1U << v));
  };
  std::vector<int> tw(std::size_t{1} << n, 0);
  std::vector<signed char> choice(std::size_t{1} << n, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      std::uint32_t prev = s & ~(1U << v);
      int val = std::max(tw[prev], q(prev, v));
      if (val < best) {
        best = val;
        choice[s] = static_cast<signed char>(v);
      }
    }
    tw[s] = best;
    if (s == full) break;
  }
  std::vector<Vertex> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = choice[s];
    s &= ~(1U << choice[s]);
  }
  auto td = contract_nested(from_elimination_order(g, order));
  return {tw[full], td};
}

TreeDecomposition contract_nested(const TreeDecomposition& td) {
  const int n = td.node_count();
  std::vector<VertexSet> bags = td.bags();
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : td.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> alive(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n && !changed; ++a) {
      if (!alive[a]) continue;
      for (int b : adj[a]) {
        if (!is_subset(bags[a], bags[b])) continue;
        // Merge a into b.
        for (int c : adj[a])
          if (c != b) {
            adj[c].erase(a);
            adj[c].insert(b);
            adj[b].insert(c);
          }
        adj[b].erase(a);
        adj[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }
  TreeDecomposition out;
  std::vector<int> id(n, -1);
  for (int t = 0; t < n; ++t)
    if (alive[t]) id[t] = out.add_node(bags[t]);
  for (int t = 0; t < n; ++t)
    if (alive[t])
      for (int w : adj[t])
        if (t < w) out.add_edge(id[t], id[w]);
  return out;
}

}  // namespace ehftw
