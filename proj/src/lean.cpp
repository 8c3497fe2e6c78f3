#include "ehftw/lean.hpp"

#include <algorithm>

#include "ehftw/errors.hpp"

namespace ehftw {

TreeDecomposition normalize(const TreeDecomposition& td) {
  const int n = td.node_count();
  std::vector<int> id(n, -1);
  TreeDecomposition out;
  for (int t = 0; t < n; ++t)
    if (!td.bag(t).empty()) id[t] = out.add_node(td.bag(t));
  if (out.node_count() == 0) return TreeDecomposition(VertexSet{});
  for (auto [a, b] : td.edges())
    if (id[a] >= 0 && id[b] >= 0) out.add_edge(id[a], id[b]);
  // Dropping empty bags may split the tree; no vertex spans two pieces.
  std::vector<int> piece(out.node_count(), -1);
  int last_root = -1;
  for (int t = 0; t < out.node_count(); ++t) {
    if (piece[t] >= 0) continue;
    std::vector<int> stack{t};
    piece[t] = t;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : out.tree_neighbors(u))
        if (piece[w] < 0) {
          piece[w] = t;
          stack.push_back(w);
        }
    }
    if (last_root >= 0) out.add_edge(last_root, t);
    last_root = t;
  }
  return contract_nested(out);
}

bool has_edge_difference(const TreeDecomposition& td) {
  for (auto [a, b] : td.edges())
    if (is_subset(td.bag(a), td.bag(b)) || is_subset(td.bag(b), td.bag(a))) return false;
  return true;
}

void for_each_violation(const Graph& g, const TreeDecomposition& td, int k,
                        const std::function<bool(const LeanViolation&)>& visit) {
  if (adhesion(td) >= k && !td.edges().empty())
    throw InputError("find_violation needs adhesion < k");
  for_each_lean_violation(g, td, k, visit);
}

std::optional<LeanViolation> find_violation(const Graph& g, const TreeDecomposition& td, int k) {
  std::optional<LeanViolation> out;
  for_each_violation(g, td, k, [&](const LeanViolation& v) {
    out = v;
    return true;
  });
  return out;
}

namespace {

// Vertices reachable from `from` in g - cut.
VertexSet reach(const Graph& g, const VertexSet& from, const VertexSet& cut) {
  std::vector<char> seen(g.order(), 0);
  for (Vertex c : cut) seen[c] = 1;
  std::vector<Vertex> stack;
  for (Vertex v : from)
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  VertexSet out;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return make_set(std::move(out));
}

// One exchange: copies of T restricted to each side of the separation
// (a1, a2) with a1 ∩ a2 = x, joined at t2 (side 1) and t (side 2).
TreeDecomposition exchange(const TreeDecomposition& td, const LeanViolation& v, const VertexSet& x,
                           const VertexSet& a1, const VertexSet& a2,
                           const std::vector<std::vector<Vertex>>& paths) {
  // before[i] / after[i]: vertices of the path through x[i] on the z / z2 side.
  std::vector<VertexSet> before(x.size()), after(x.size());
  for (const auto& p : paths) {
    std::vector<Vertex> path = p;
    if (!contains(v.z, path.front())) std::reverse(path.begin(), path.end());
    auto it = std::find_if(path.begin(), path.end(), [&](Vertex w) { return contains(x, w); });
    if (it == path.end()) throw InputError("exchange: path avoids the separator");
    const auto i = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), *it) - x.begin());
    before[i] = make_set(std::vector<Vertex>(path.begin(), it));
    after[i] = make_set(std::vector<Vertex>(it + 1, path.end()));
  }
  const int n = td.node_count();
  TreeDecomposition out;
  for (int side = 0; side < 2; ++side)
    for (int u = 0; u < n; ++u) {
      const auto& bag = td.bag(u);
      VertexSet nb = set_intersection(bag, side == 0 ? a1 : a2);
      for (std::size_t i = 0; i < x.size(); ++i)
        if (intersects(bag, side == 0 ? after[i] : before[i])) nb.push_back(x[i]);
      out.add_node(make_set(std::move(nb)));
    }
  for (auto [a, b] : td.edges()) {
    out.add_edge(a, b);
    out.add_edge(a + n, b + n);
  }
  out.add_edge(v.t2, v.t + n);
  return normalize(out);
}

bool accept(const Graph& g, const TreeDecomposition& cand, const Fatness& before, int k) {
  return fatness(cand) < before && (cand.edges().empty() || adhesion(cand) < k) && validate(g, cand).valid();
}

}  // namespace

std::optional<TreeDecomposition> try_improvement(const Graph& g, const TreeDecomposition& td,
                                                 const LeanViolation& v, int k) {
  const Fatness before = fatness(td);
  const VertexSet all = g.vertices();
  auto forward = menger(g, v.z, v.z2);
  auto backward = menger(g, v.z2, v.z);
  for (const auto* m : {&forward, &backward}) {
    const VertexSet& x = m->cut;
    // Side containing z first, then the side containing z2.
    VertexSet near = set_union(x, reach(g, set_difference(v.z, x), x));
    VertexSet far = set_union(x, reach(g, set_difference(v.z2, x), x));
    const std::pair<VertexSet, VertexSet> splits[] = {
        {near, set_union(x, set_difference(all, near))},
        {set_union(x, set_difference(all, far)), far},
    };
    for (const auto& [a1, a2] : splits) {
      auto cand = exchange(td, v, x, a1, a2, forward.paths);
      if (accept(g, cand, before, k)) return cand;
    }
  }
  return std::nullopt;
}

TreeDecomposition apply_improvement(const Graph& g, const TreeDecomposition& td, const LeanViolation& v, int k) {
  auto r = try_improvement(g, td, v, k);
  if (!r) throw CapabilityError("no exchange along this violation decreases fatness");
  return *r;
}

TreeDecomposition tighten_edge(const Graph& g, const TreeDecomposition& td, int t, int t2) {
  const VertexSet adh = td.adhesion_set(t, t2);
  const VertexSet side = set_difference(td.branch_vertices(t, t2), td.bag(t));
  const auto comps = components_within(g, side);
  VertexSet seen;
  for (const auto& d : comps) seen = set_union(seen, open_neighborhood(g, d));
  const VertexSet unseen = set_difference(adh, seen);
  const auto branch = td.branch_nodes(t, t2);
  if (!unseen.empty()) {
    // Adhesion vertices with no neighbour beyond the bag leave the branch.
    TreeDecomposition out = td;
    for (int u : branch) out.set_bag(u, set_difference(td.bag(u), unseen));
    return normalize(out);
  }
  // One copy of the branch per component.
  std::vector<int> in_branch(td.node_count(), 0);
  for (int u : branch) in_branch[u] = 1;
  TreeDecomposition out;
  std::vector<int> keep(td.node_count(), -1);
  for (int u = 0; u < td.node_count(); ++u)
    if (!in_branch[u]) keep[u] = out.add_node(td.bag(u));
  for (auto [a, b] : td.edges())
    if (!in_branch[a] && !in_branch[b]) out.add_edge(keep[a], keep[b]);
  for (const auto& d : comps) {
    const VertexSet scope = set_union(d, open_neighborhood(g, d));
    std::vector<int> copy(td.node_count(), -1);
    for (int u : branch) copy[u] = out.add_node(set_intersection(td.bag(u), scope));
    for (auto [a, b] : td.edges())
      if (in_branch[a] && in_branch[b]) out.add_edge(copy[a], copy[b]);
    out.add_edge(keep[t], copy[t2]);
  }
  return normalize(out);
}

LeanResult refine_to_lean_traced(const Graph& g, int k, const std::optional<TreeDecomposition>& seed) {
  if (k < 2) throw InputError("refine_to_lean needs k >= 2");
  LeanResult r;
  r.td = seed ? *seed : TreeDecomposition(g.vertices());
  require_valid(g, r.td);
  if (!r.td.edges().empty() && adhesion(r.td) >= k) throw InputError("seed adhesion must be below k");
  auto record = [&](const char* kind, TreeDecomposition next) {
    r.steps.push_back({kind, fatness(r.td), fatness(next)});
    r.td = std::move(next);
  };
  {
    auto next = normalize(r.td);
    if (next.node_count() != r.td.node_count() || next.bags() != r.td.bags()) record("normalize", std::move(next));
  }
  while (true) {
    const Fatness before = fatness(r.td);
    std::optional<TreeDecomposition> next;
    const char* kind = "tighten";
    for (auto [a, b] : r.td.edges()) {
      for (auto [t, t2] : {std::pair{a, b}, std::pair{b, a}}) {
        const VertexSet adh = r.td.adhesion_set(t, t2);
        const VertexSet sidev = set_difference(r.td.branch_vertices(t, t2), r.td.bag(t));
        bool ok = false;
        for (const auto& d : components_within(g, sidev))
          if (is_subset(adh, open_neighborhood(g, d))) {
            ok = true;
            break;
          }
        if (ok) continue;
        auto cand = tighten_edge(g, r.td, t, t2);
        if (accept(g, cand, before, k)) {
          next = std::move(cand);
          break;
        }
      }
      if (next) break;
    }
    if (!next) {
      kind = "exchange";
      bool any = false;
      for_each_violation(g, r.td, k, [&](const LeanViolation& v) {
        any = true;
        next = try_improvement(g, r.td, v, k);
        return next.has_value();
      });
      if (!next && any) throw CapabilityError("lean refinement stuck: no violation admits a fatness-decreasing exchange");
    }
    if (!next) break;
    record(kind, std::move(*next));
  }
  if (!is_tight(g, r.td).tight) throw CapabilityError("lean refinement stuck: tightness repair does not decrease fatness");
  return r;
}

TreeDecomposition refine_to_lean(const Graph& g, int k, const std::optional<TreeDecomposition>& seed) {
  return refine_to_lean_traced(g, k, seed).td;
}

}  // namespace ehftw
