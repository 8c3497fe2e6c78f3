#include "ehftw/connectifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>

#include "ehftw/errors.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/pmc.hpp"

namespace ehftw {

MonotoneSubsequence erdos_szekeres(const std::vector<double>& seq, int n) {
  if (n < 0) throw InputError("erdos_szekeres: n must be non-negative");
  const std::size_t need = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 1;
  if (seq.size() < need)
    throw InputError("erdos_szekeres: need at least " + std::to_string(need) + " values, got " + std::to_string(seq.size()));
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("erdos_szekeres: values must be distinct");
  const std::size_t m = seq.size();
  for (bool increasing : {true, false}) {
    std::vector<int> len(m, 1);
    std::vector<std::ptrdiff_t> prev(m, -1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((increasing ? seq[j] < seq[i] : seq[j] > seq[i]) && len[j] + 1 > len[i]) {
          len[i] = len[j] + 1;
          prev[i] = static_cast<std::ptrdiff_t>(j);
        }
    const auto best = std::max_element(len.begin(), len.end());
    if (*best < n + 1) continue;
    std::vector<std::size_t> chain;
    for (auto i = static_cast<std::ptrdiff_t>(best - len.begin()); i >= 0; i = prev[i]) chain.push_back(static_cast<std::size_t>(i));
    std::reverse(chain.begin(), chain.end());
    chain.resize(n + 1);
    MonotoneSubsequence out;
    out.increasing = increasing;
    out.indices = chain;
    for (auto i : chain) out.values.push_back(seq[i]);
    return out;
  }
  throw InputError("erdos_szekeres: no monotone subsequence found");  // unreachable for valid input
}

VertexSet stable_in_bounded_outdegree(const std::vector<std::vector<int>>& out, int k) {
  const int n = static_cast<int>(out.size());
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(out[v].size()) > k)
      throw InputError("stable_in_bounded_outdegree: vertex " + std::to_string(v) + " has outdegree above " + std::to_string(k));
    for (int w : out[v]) {
      if (w < 0 || w >= n || w == v) throw InputError("stable_in_bounded_outdegree: bad arc from " + std::to_string(v));
      edges.push_back({v, w});
    }
  }
  Graph g(n, edges);
  auto order = degeneracy_order(g).order;
  std::vector<int> color(n, -1);
  int colors = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<char> used(colors + 1, 0);
    for (Vertex w : g.neighbors(*it))
      if (color[w] >= 0) used[color[w]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[*it] = c;
    colors = std::max(colors, c + 1);
  }
  std::vector<VertexSet> classes(colors);
  for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
  VertexSet best;
  for (const auto& c : classes)
    if (c.size() > best.size()) best = c;
  return best;
}

std::string to_string(ConnectifierKind k) {
  switch (k) {
    case ConnectifierKind::Path: return "path";
    case ConnectifierKind::Caterpillar: return "caterpillar";
    case ConnectifierKind::LineOfCaterpillar: return "line graph of a caterpillar";
    case ConnectifierKind::SubdividedStar: return "subdivided star";
  }
  return "?";
}

std::string to_string(AlignmentKind k) {
  switch (k) {
    case AlignmentKind::Wide: return "wide";
    case AlignmentKind::Spiky: return "spiky";
    case AlignmentKind::Triangular: return "triangular";
  }
  return "?";
}

namespace {

using Adj = std::vector<std::vector<int>>;

std::vector<int> tree_path(const Adj& adj, int a, int b) {
  std::vector<int> parent(adj.size(), -1);
  std::vector<int> stack{a};
  parent[a] = a;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Leaf-to-leaf paths through every branch vertex, each oriented with
// rank[front] < rank[back].
std::vector<std::vector<int>> tree_spines(const Adj& adj, const std::vector<int>& rank) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return {{0}};
  std::vector<int> leaves, branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() == 1) leaves.push_back(v);
    if (adj[v].size() > 2) branch.push_back(v);
  }
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      auto path = tree_path(adj, leaves[i], leaves[j]);
      bool all = true;
      for (int b : branch) all = all && std::find(path.begin(), path.end(), b) != path.end();
      if (!all) continue;
      if (rank[path.front()] > rank[path.back()]) std::reverse(path.begin(), path.end());
      out.push_back(std::move(path));
    }
  return out;
}

// Longest admissible spine; ties go to the lexicographically least rank sequence.
std::vector<int> tree_spine(const Adj& adj, const std::vector<int>& rank) {
  std::vector<int> best, best_key;
  for (auto& path : tree_spines(adj, rank)) {
    std::vector<int> key;
    for (int v : path) key.push_back(rank[v]);
    if (path.size() > best.size() || (path.size() == best.size() && key < best_key)) {
      best = path;
      best_key = key;
    }
  }
  return best;
}

VertexSet simplicial_vertices(const Graph& g, const VertexSet& h) {
  VertexSet out;
  for (Vertex v : h)
    if (is_clique(g, set_intersection(g.neighbors(v), h))) out.push_back(v);
  return out;
}

std::optional<ShapeInfo> tree_shape(const Graph& g, const InducedSubgraph& sub) {
  const Graph& t = sub.graph;
  const int n = t.order();
  Adj adj(n);
  int max_deg = 0, branches = 0;
  Vertex root = -1;
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = t.neighbors(v);
    max_deg = std::max(max_deg, t.degree(v));
    if (t.degree(v) > 2) {
      ++branches;
      root = v;
    }
  }
  ShapeInfo info;
  info.simplicial = simplicial_vertices(g, sub.to_host);
  std::vector<int> rank(sub.to_host.begin(), sub.to_host.end());
  if (branches == 1) {
    info.kind = ConnectifierKind::SubdividedStar;
    info.spine = {sub.to_host[root]};
  } else if (max_deg <= 3) {
    auto spine = tree_spine(adj, rank);
    if (spine.empty()) return std::nullopt;
    info.kind = branches == 0 ? ConnectifierKind::Path : ConnectifierKind::Caterpillar;
    for (int v : spine) info.spine.push_back(sub.to_host[v]);
  } else {
    return std::nullopt;
  }
  info.legs = components_within(g, set_difference(sub.to_host, make_set(info.spine)));
  return info;
}

// Root tree of a line graph of a caterpillar: one node per maximal clique
// plus a leaf per leaf-edge; vertex v of h is the tree edge ends[v].
struct RootTree {
  Adj adj;
  std::map<std::pair<int, int>, Vertex> edge_of;  // local vertex ids
  std::vector<int> rank;
};

std::optional<RootTree> root_tree(const InducedSubgraph& sub) {
  const Graph& h = sub.graph;
  const int n = h.order();
  if (!is_chordal(h)) return std::nullopt;
  const auto cliques = chordal_maximal_cliques(h);
  std::vector<std::vector<int>> member(n);
  for (int c = 0; c < static_cast<int>(cliques.size()); ++c) {
    if (cliques[c].size() > 3) return std::nullopt;
    for (Vertex v : cliques[c]) member[v].push_back(c);
  }
  for (std::size_t a = 0; a < cliques.size(); ++a)
    for (std::size_t b = a + 1; b < cliques.size(); ++b)
      if (set_intersection(cliques[a], cliques[b]).size() > 1) return std::nullopt;
  int nodes = static_cast<int>(cliques.size());
  std::vector<std::pair<int, int>> ends(n);
  for (Vertex v = 0; v < n; ++v) {
    if (member[v].size() > 2 || member[v].empty()) return std::nullopt;
    ends[v] = member[v].size() == 2 ? std::pair{member[v][0], member[v][1]} : std::pair{member[v][0], nodes++};
  }
  if (nodes != n + 1) return std::nullopt;
  RootTree rt;
  rt.adj.resize(nodes);
  for (Vertex v = 0; v < n; ++v) {
    rt.adj[ends[v].first].push_back(ends[v].second);
    rt.adj[ends[v].second].push_back(ends[v].first);
    rt.edge_of[std::minmax(ends[v].first, ends[v].second)] = v;
  }
  for (const auto& a : rt.adj)
    if (a.size() > 3) return std::nullopt;
  // A tree node ranks by the least h-vertex at it.
  rt.rank.assign(nodes, std::numeric_limits<int>::max());
  for (Vertex v = 0; v < n; ++v)
    for (int e : {ends[v].first, ends[v].second})
      rt.rank[e] = std::min(rt.rank[e], sub.to_host[v] * 2 + (e >= static_cast<int>(cliques.size())));
  return rt;
}

std::vector<Vertex> spine_edges(const RootTree& rt, const InducedSubgraph& sub, const std::vector<int>& spine) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) out.push_back(sub.to_host[rt.edge_of.at(std::minmax(spine[i], spine[i + 1]))]);
  if (out.front() > out.back()) std::reverse(out.begin(), out.end());
  return out;
}

std::optional<ShapeInfo> line_of_caterpillar_shape(const Graph& g, const InducedSubgraph& sub) {
  auto rt = root_tree(sub);
  if (!rt) return std::nullopt;
  auto spine = tree_spine(rt->adj, rt->rank);
  if (spine.empty()) return std::nullopt;
  ShapeInfo info;
  info.kind = ConnectifierKind::LineOfCaterpillar;
  info.simplicial = simplicial_vertices(g, sub.to_host);
  info.spine = spine_edges(*rt, sub, spine);
  info.legs = components_within(g, set_difference(sub.to_host, make_set(info.spine)));
  return info;
}

// Every admissible spine of a caterpillar or line graph of a caterpillar, in host ids.
std::vector<std::vector<Vertex>> all_spines(const Graph& g, const VertexSet& h, ConnectifierKind kind) {
  auto sub = induced(g, h);
  std::vector<std::vector<Vertex>> out;
  if (kind == ConnectifierKind::Caterpillar) {
    Adj adj(sub.graph.order());
    for (Vertex v = 0; v < sub.graph.order(); ++v) adj[v] = sub.graph.neighbors(v);
    std::vector<int> rank(sub.to_host.begin(), sub.to_host.end());
    for (const auto& sp : tree_spines(adj, rank)) {
      std::vector<Vertex> host;
      for (int v : sp) host.push_back(sub.to_host[v]);
      out.push_back(std::move(host));
    }
  } else if (kind == ConnectifierKind::LineOfCaterpillar) {
    if (auto rt = root_tree(sub))
      for (const auto& sp : tree_spines(rt->adj, rt->rank)) out.push_back(spine_edges(*rt, sub, sp));
  }
  return out;
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  if (p.empty() || make_set(p).size() != p.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
  return true;
}

// Local bitmask view of g[w].
struct Local {
  VertexSet w;
  std::vector<std::uint32_t> nbr;
  Local(const Graph& g, const VertexSet& within) : w(within), nbr(within.size(), 0) {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j)
        if (g.adjacent(w[i], w[j])) nbr[i] |= 1U << j;
  }
  bool connected(std::uint32_t mask) const {
    if (mask == 0) return false;
    std::uint32_t seen = mask & -mask, frontier = seen;
    while (frontier) {
      const int i = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t grow = nbr[i] & mask & ~seen;
      seen |= grow;
      frontier |= grow;
    }
    return seen == mask;
  }
  VertexSet lift(std::uint32_t mask) const {
    VertexSet out;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask >> i & 1U) out.push_back(w[i]);
    return out;
  }
};

void check_guard(std::size_t size, const char* what) {
  if (static_cast<int>(size) > guard_limit(20))
    throw CapabilityError(std::string(what) + ": search space of " + std::to_string(size) + " vertices exceeds the guard of " +
                          std::to_string(guard_limit(20)));
}

// Connected subsets of within by size, then mask order; stops when visit returns true.
void for_each_connected_subset(const Graph& g, const VertexSet& within, const std::function<bool(const VertexSet&)>& visit) {
  check_guard(within.size(), "connected subset enumeration");
  Local local(g, within);
  const int n = static_cast<int>(within.size());
  for (int size = 1; size <= n; ++size) {
    std::uint32_t m = (size == 32 ? ~0U : (1U << size) - 1);
    const std::uint32_t limit = n == 32 ? ~0U : (1U << n);
    while (m < limit) {
      if (local.connected(m) && visit(local.lift(m))) return;
      const std::uint32_t c = m & -m, r = m + c;
      if (r == 0) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

// Induced paths of g[within], one orientation each (front < back), by length.
std::vector<std::vector<Vertex>> induced_paths(const Graph& g, const VertexSet& within) {
  check_guard(within.size(), "induced path enumeration");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::function<void()> grow = [&]() {
    if (path.front() <= path.back()) out.push_back(path);
    if (out.size() > static_cast<std::size_t>(guard_limit(2000000))) throw CapabilityError("induced path enumeration exceeds the guard");
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (!contains(within, w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(path[i], w);
      if (chord) continue;
      path.push_back(w);
      grow();
      path.pop_back();
    }
  };
  for (Vertex v : within) {
    path = {v};
    grow();
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Attaches x bijectively to the simplicial vertices of a shaped h; nullopt if impossible.
std::optional<std::vector<std::pair<Vertex, Vertex>>> attach(const Graph& g, const VertexSet& h, const ShapeInfo& shape,
                                                             const VertexSet& x) {
  std::vector<std::pair<Vertex, Vertex>> out;
  VertexSet hit;
  for (Vertex v : x) {
    auto nh = set_intersection(g.neighbors(v), h);
    if (nh.size() != 1 || !contains(shape.simplicial, nh.front()) || contains(hit, nh.front())) return std::nullopt;
    hit = with(hit, nh.front());
    out.push_back({v, nh.front()});
  }
  if (hit != shape.simplicial) return std::nullopt;
  return out;
}

Connectifier make_connectifier(const VertexSet& h, const ShapeInfo& shape, const VertexSet& x,
                               std::vector<std::pair<Vertex, Vertex>> attachment) {
  Connectifier c;
  c.h = h;
  c.kind = shape.kind;
  c.spine = shape.spine;
  c.legs = shape.legs;
  c.attached = x;
  c.attachment = std::move(attachment);
  return c;
}

}  // namespace

std::optional<ShapeInfo> classify_shape(const Graph& g, const VertexSet& h) {
  check_vertex_set(g, h);
  if (h.empty() || !is_connected(g, h)) return std::nullopt;
  auto sub = induced(g, h);
  if (sub.graph.size() == sub.graph.order() - 1) return tree_shape(g, sub);
  return line_of_caterpillar_shape(g, sub);
}

bool verify_connectifier(const Graph& g, const Connectifier& c) {
  if (intersects(c.h, c.attached)) return false;
  auto shape = classify_shape(g, c.h);
  if (!shape || shape->spine != c.spine || shape->legs != c.legs) return false;
  if (c.kind == ConnectifierKind::Path) {
    if (shape->kind != ConnectifierKind::Path) return false;
    for (Vertex x : c.attached)
      if (!intersects(g.neighbors(x), c.h)) return false;
    return true;
  }
  if (shape->kind != c.kind) return false;
  auto att = attach(g, c.h, *shape, c.attached);
  return att && *att == c.attachment;
}

std::vector<Vertex> connectifier_order(const Graph& g, const Connectifier& c) {
  if (c.kind != ConnectifierKind::Caterpillar && c.kind != ConnectifierKind::LineOfCaterpillar) return {};
  std::vector<std::pair<long long, Vertex>> keyed;
  for (auto [x, z] : c.attachment) {
    long long key = 0;
    if (z == c.spine.front()) {
      key = -1;
    } else if (z == c.spine.back()) {
      key = std::numeric_limits<long long>::max();
    } else {
      for (const auto& leg : c.legs) {
        if (!contains(leg, z)) continue;
        long long lo = std::numeric_limits<long long>::max(), hi = -1;
        for (std::size_t i = 0; i < c.spine.size(); ++i)
          if (intersects(g.neighbors(c.spine[i]), leg)) {
            lo = std::min(lo, static_cast<long long>(i));
            hi = std::max(hi, static_cast<long long>(i));
          }
        key = lo + hi;
      }
    }
    keyed.push_back({key, x});
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Vertex> out;
  for (auto [k, x] : keyed) out.push_back(x);
  return out;
}

std::vector<std::vector<Vertex>> admissible_orders(const Graph& g, const Connectifier& c) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& spine : all_spines(g, c.h, c.kind)) {
    Connectifier alt = c;
    alt.spine = spine;
    alt.legs = components_within(g, set_difference(c.h, make_set(spine)));
    auto order = connectifier_order(g, alt);
    if (std::find(out.begin(), out.end(), order) == out.end()) out.push_back(std::move(order));
  }
  return out;
}

std::optional<Connectifier> find_connectifier(const Graph& g, const VertexSet& s, int h_target) {
  check_vertex_set(g, s);
  if (h_target < 1) throw InputError("find_connectifier: h_target must be positive");
  if (!is_stable(g, s)) throw InputError("find_connectifier: s must be stable");
  const VertexSet rest = set_difference(g.vertices(), s);
  if (rest.empty() || !is_connected(g, rest)) throw InputError("find_connectifier: g - s must be connected");
  for (Vertex v : s)
    if (!intersects(g.neighbors(v), rest)) throw InputError("find_connectifier: vertex " + std::to_string(v) + " has no neighbour outside s");
  for (const auto& p : induced_paths(g, rest)) {
    VertexSet seen = set_intersection(open_neighborhood(g, make_set(p)), s);
    if (static_cast<int>(seen.size()) < h_target) continue;
    Connectifier c;
    c.h = make_set(p);
    c.kind = ConnectifierKind::Path;
    c.spine = p;
    c.attached = VertexSet(seen.begin(), seen.begin() + h_target);
    return c;
  }
  std::optional<Connectifier> found;
  for_each_connected_subset(g, rest, [&](const VertexSet& h) {
    auto shape = classify_shape(g, h);
    if (!shape || shape->kind == ConnectifierKind::Path || static_cast<int>(shape->simplicial.size()) != h_target) return false;
    VertexSet x;
    for (Vertex z : shape->simplicial) {
      Vertex pick = -1;
      for (Vertex v : s)
        if (set_intersection(g.neighbors(v), h) == VertexSet{z}) {
          pick = v;
          break;
        }
      if (pick < 0) return false;
      x.push_back(pick);
    }
    x = make_set(x);
    auto att = attach(g, h, *shape, x);
    if (!att) return false;
    found = make_connectifier(h, *shape, x, std::move(*att));
    return true;
  });
  return found;
}

std::optional<Alignment> classify_alignment(const Graph& g, const std::vector<Vertex>& p, const VertexSet& x) {
  check_vertex_set(g, x);
  for (Vertex v : p)
    if (!g.valid_vertex(v)) throw InputError("classify_alignment: bad path vertex " + std::to_string(v));
  if (intersects(make_set(p), x)) throw InputError("classify_alignment: x meets the path");
  if (!is_induced_path(g, p) || x.size() < 3) return std::nullopt;
  const int n = static_cast<int>(p.size());
  std::vector<Vertex> first, last;
  std::vector<std::pair<std::vector<int>, Vertex>> interior;
  for (Vertex v : x) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (g.adjacent(v, p[i])) idx.push_back(i);
    if (idx.empty()) return std::nullopt;
    if (idx == std::vector<int>{0})
      first.push_back(v);
    else if (idx == std::vector<int>{n - 1})
      last.push_back(v);
    else
      interior.push_back({idx, v});
  }
  if (n < 3 || first.size() != 1 || last.size() != 1) return std::nullopt;
  std::sort(interior.begin(), interior.end());
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const auto& idx = interior[i].first;
    if (idx.front() < 1 || idx.back() > n - 2) return std::nullopt;
    if (i + 1 < interior.size() && idx.back() >= interior[i + 1].first.front()) return std::nullopt;
  }
  bool spiky = true, triangular = true, wide = true;
  for (const auto& [idx, v] : interior) {
    spiky = spiky && idx.size() == 1;
    triangular = triangular && idx.size() == 2 && idx[1] == idx[0] + 1;
    wide = wide && idx.back() - idx.front() >= 2;
  }
  if (spiky + triangular + wide != 1) return std::nullopt;
  Alignment a;
  a.p = p;
  a.kind = spiky ? AlignmentKind::Spiky : triangular ? AlignmentKind::Triangular : AlignmentKind::Wide;
  a.x.push_back(first.front());
  for (const auto& [idx, v] : interior) a.x.push_back(v);
  a.x.push_back(last.front());
  return a;
}

VertexSet Side::vertices() const { return is_alignment ? make_set(alignment.p) : connectifier.h; }

bool Side::triangular() const {
  return is_alignment ? alignment.kind == AlignmentKind::Triangular : connectifier.kind == ConnectifierKind::LineOfCaterpillar;
}

bool Side::stellar() const { return !is_alignment && connectifier.kind == ConnectifierKind::SubdividedStar; }

bool Side::wide_alignment() const { return is_alignment && alignment.kind == AlignmentKind::Wide; }

std::string Side::label() const {
  if (is_alignment) return to_string(alignment.kind) + " alignment";
  switch (connectifier.kind) {
    case ConnectifierKind::Caterpillar: return "spiky connectifier";
    case ConnectifierKind::LineOfCaterpillar: return "triangular connectifier";
    case ConnectifierKind::SubdividedStar: return "stellar connectifier";
    case ConnectifierKind::Path: break;
  }
  return "path";
}

namespace {

struct ShapedSubset {
  VertexSet h;
  ShapeInfo shape;
};

std::vector<Side> sides_for(const Graph& g, const std::vector<std::vector<Vertex>>& paths,
                            const std::vector<ShapedSubset>& shaped, const VertexSet& x) {
  std::vector<Side> out;
  for (const auto& p : paths)
    if (auto a = classify_alignment(g, p, x)) {
      Side s;
      s.is_alignment = true;
      s.alignment = *a;
      s.order = a->x;
      s.orders = {s.order};
      out.push_back(std::move(s));
    }
  for (const auto& [h, shape] : shaped)
    if (auto att = attach(g, h, shape, x)) {
      Side s;
      s.connectifier = make_connectifier(h, shape, x, std::move(*att));
      s.order = connectifier_order(g, s.connectifier);
      s.orders = s.stellar() ? std::vector<std::vector<Vertex>>{} : admissible_orders(g, s.connectifier);
      out.push_back(std::move(s));
    }
  return out;
}

bool same_order(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  if (a == b) return true;
  std::reverse(a.begin(), a.end());
  return a == b;
}

// On success tri.order and other.order are set to a matching pair.
bool conclusion_holds(Side& tri, Side& other) {
  if (!tri.triangular() || other.triangular()) return false;
  if (tri.is_alignment && other.wide_alignment()) return false;
  if (tri.stellar() || other.stellar()) return true;
  for (const auto& a : tri.orders)
    for (const auto& b : other.orders)
      if (same_order(a, b)) {
        tri.order = a;
        other.order = b;
        return true;
      }
  return false;
}

}  // namespace

std::optional<TwoSided> two_sided_classify(const Graph& g, const VertexSet& d1, const VertexSet& d2, const VertexSet& y,
                                           int x_target) {
  check_vertex_set(g, d1);
  check_vertex_set(g, d2);
  check_vertex_set(g, y);
  if (y.size() < 3 || x_target < 3) throw InputError("two_sided_classify: needs |y| >= 3 and x_target >= 3");
  if (x_target > static_cast<int>(y.size())) throw InputError("two_sided_classify: x_target exceeds |y|");
  if (!is_stable(g, y)) throw InputError("two_sided_classify: y must be stable");
  const auto comps = components(g, y);
  for (const auto* d : {&d1, &d2})
    if (std::find(comps.begin(), comps.end(), *d) == comps.end())
      throw InputError("two_sided_classify: d1 and d2 must be components of g - y");
  if (d1 == d2) throw InputError("two_sided_classify: d1 and d2 must differ");
  if (open_neighborhood(g, d1) != y || open_neighborhood(g, d2) != y)
    throw InputError("two_sided_classify: N(d1) and N(d2) must equal y");
  if (intersects(y, hubs(g))) throw InputError("two_sided_classify: y must avoid the hubs");
  std::vector<std::vector<Vertex>> paths[2];
  std::vector<ShapedSubset> shaped[2];
  const VertexSet* ds[2] = {&d1, &d2};
  for (int i = 0; i < 2; ++i) {
    paths[i] = induced_paths(g, *ds[i]);
    for_each_connected_subset(g, *ds[i], [&](const VertexSet& h) {
      auto shape = classify_shape(g, h);
      if (shape && shape->kind != ConnectifierKind::Path && static_cast<int>(shape->simplicial.size()) == x_target)
        shaped[i].push_back({h, *shape});
      return false;
    });
  }
  std::optional<TwoSided> found;
  std::vector<int> idx(x_target);
  for (int i = 0; i < x_target; ++i) idx[i] = i;
  const int m = static_cast<int>(y.size());
  while (!found) {
    VertexSet x;
    for (int i : idx) x.push_back(y[i]);
    auto s1 = sides_for(g, paths[0], shaped[0], x);
    auto s2 = sides_for(g, paths[1], shaped[1], x);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto& a : s1)
      for (auto& b : s2) {
        const std::size_t size = a.vertices().size() + b.vertices().size();
        if (size >= best) continue;
        if (conclusion_holds(a, b)) {
          found = TwoSided{x, a, b, false};
          best = size;
        } else if (conclusion_holds(b, a)) {
          found = TwoSided{x, b, a, true};
          best = size;
        }
      }
    int i = x_target - 1;
    while (i >= 0 && idx[i] == m - x_target + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < x_target; ++j) idx[j] = idx[j - 1] + 1;
  }
  return found;
}

}  // namespace ehftw
