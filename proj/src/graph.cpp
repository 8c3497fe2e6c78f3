#include "ehftw/graph.hpp"

#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

#include "ehftw/errors.hpp"

namespace ehftw {

int guard_limit(int default_limit) {
  const char* env = std::getenv("EHFTW_GUARD_OVERRIDE");
  if (env == nullptr) return default_limit;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v <= default_limit || v > std::numeric_limits<int>::max()) return default_limit;
  return static_cast<int>(v);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  if (words_ == 0) words_ = 1;
  adj_.assign(n, {});
  matrix_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) continue;
    matrix_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    matrix_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::vertices() const {
  VertexSet out(n_);
  for (int i = 0; i < n_; ++i) out[i] = i;
  return out;
}

Graph Graph::with_edges(const std::vector<Edge>& extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(n_, all);
}

Vertex InducedSubgraph::to_local(Vertex host_vertex) const {
  auto it = std::lower_bound(to_host.begin(), to_host.end(), host_vertex);
  if (it == to_host.end() || *it != host_vertex) return -1;
  return static_cast<Vertex>(it - to_host.begin());
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_host[v]);
  return out;  // to_host is increasing, so order is preserved
}

VertexSet InducedSubgraph::lower(const VertexSet& host) const {
  VertexSet out;
  for (Vertex v : host) {
    Vertex l = to_local(v);
    if (l >= 0) out.push_back(l);
  }
  return out;
}

void check_vertex_set(const Graph& g, const VertexSet& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!g.valid_vertex(x[i])) throw InputError("vertex " + std::to_string(x[i]) + " out of range");
    if (i > 0 && x[i - 1] >= x[i]) throw InputError("vertex set not sorted/unique");
  }
}

InducedSubgraph induced(const Graph& g, const VertexSet& x) {
  check_vertex_set(g, x);
  InducedSubgraph out;
  out.to_host = x;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  out.graph = Graph(static_cast<int>(x.size()), edges);
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : x) mark[v] = 2;
  VertexSet out;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (mark[w] == 0) {
        mark[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  return set_union(x, open_neighborhood(g, x));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) { return with(g.neighbors(v), v); }

namespace {

std::vector<VertexSet> components_masked(const Graph& g, std::vector<char>& allowed) {
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!allowed[s]) continue;
    VertexSet comp;
    allowed[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (allowed[w]) {
          allowed[w] = 0;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden) {
  std::vector<char> allowed(g.order(), 1);
  for (Vertex v : forbidden) allowed[v] = 0;
  return components_masked(g, allowed);
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<char> allowed(g.order(), 0);
  for (Vertex v : within) allowed[v] = 1;
  return components_masked(g, allowed);
}

bool is_connected(const Graph& g, const VertexSet& within) {
  return components_within(g, within).size() <= 1;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_clique(const Graph& g, const VertexSet& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!g.adjacent(x[i], x[j])) return false;
  return true;
}

bool is_stable(const Graph& g, const VertexSet& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) return false;
  return true;
}

bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex u : a)
    for (Vertex v : b)
      if (u == v || g.adjacent(u, v)) return false;
  return true;
}

int edges_within(const Graph& g, const VertexSet& x) {
  int count = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) ++count;
  return count;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& within) {
  std::vector<Vertex> parent(g.order(), -2);
  std::vector<char> allowed(g.order(), 0);
  for (Vertex v : within) allowed[v] = 1;
  if (!allowed[from] || !allowed[to]) return {};
  std::queue<Vertex> q;
  q.push(from);
  parent[from] = -1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    if (v == to) break;
    for (Vertex w : g.neighbors(v))
      if (allowed[w] && parent[w] == -2) {
        parent[w] = v;
        q.push(w);
      }
  }
  if (parent[to] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Unit-capacity network on split vertices: v_in = 2v, v_out = 2v+1.
class SplitNetwork {
 public:
  struct Arc {
    int to;
    int cap;
    int orig;
    int rev;
  };

  explicit SplitNetwork(int nodes) : arcs_(nodes) {}

  void add_arc(int a, int b, int cap) {
    arcs_[a].push_back({b, cap, cap, static_cast<int>(arcs_[b].size())});
    arcs_[b].push_back({a, 0, 0, static_cast<int>(arcs_[a].size()) - 1});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> prev(arcs_.size(), {-1, -1});
    std::queue<int> q;
    q.push(s);
    prev[s] = {s, -1};
    while (!q.empty() && prev[t].first == -1) {
      int a = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(arcs_[a].size()); ++i) {
        const Arc& e = arcs_[a][i];
        if (e.cap > 0 && prev[e.to].first == -1) {
          prev[e.to] = {a, i};
          q.push(e.to);
        }
      }
    }
    if (prev[t].first == -1) return false;
    for (int v = t; v != s;) {
      auto [a, i] = prev[v];
      Arc& e = arcs_[a][i];
      e.cap -= 1;
      arcs_[e.to][e.rev].cap += 1;
      v = a;
    }
    return true;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(arcs_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (const Arc& e : arcs_[a])
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          stack.push_back(e.to);
        }
    }
    return seen;
  }

  // Walks one unit of flow from s to t, consuming it.
  std::vector<int> take_flow_path(int s, int t) {
    std::vector<int> nodes{s};
    int a = s;
    while (a != t) {
      bool moved = false;
      for (Arc& e : arcs_[a]) {
        if (e.orig > 0 && e.cap < e.orig) {
          e.cap += 1;
          a = e.to;
          nodes.push_back(a);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    return nodes;
  }

 private:
  std::vector<std::vector<Arc>> arcs_;
};

MengerResult run_menger(const Graph& g, const VertexSet& src, const VertexSet& dst,
                        Vertex skip_u, Vertex skip_v, int limit) {
  const int n = g.order();
  const int s = 2 * n;
  const int t = 2 * n + 1;
  const int big = n + 1;  // only vertex arcs may be cut
  SplitNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    if (v != skip_u && v != skip_v) net.add_arc(2 * v, 2 * v + 1, 1);
    for (Vertex w : g.neighbors(v)) net.add_arc(2 * v + 1, 2 * w, big);
  }
  if (skip_u >= 0) {
    net.add_arc(s, 2 * skip_u + 1, big);
    net.add_arc(2 * skip_v, t, big);
  } else {
    for (Vertex v : src) net.add_arc(s, 2 * v, big);
    for (Vertex v : dst) net.add_arc(2 * v + 1, t, big);
  }
  MengerResult res;
  while (res.count < limit && net.augment(s, t)) ++res.count;
  if (limit < std::numeric_limits<int>::max()) return res;
  auto seen = net.reachable(s);
  for (Vertex v = 0; v < n; ++v)
    if (v != skip_u && v != skip_v && seen[2 * v] && !seen[2 * v + 1]) res.cut.push_back(v);
  for (int i = 0; i < res.count; ++i) {
    auto nodes = net.take_flow_path(s, t);
    std::vector<Vertex> path;
    for (int node : nodes) {
      if (node >= 2 * n) continue;
      Vertex v = node / 2;
      auto seen_at = std::find(path.begin(), path.end(), v);
      if (seen_at != path.end()) {
        path.erase(seen_at + 1, path.end());  // drop a circulation
      } else {
        path.push_back(v);
      }
    }
    res.paths.push_back(std::move(path));
  }
  return res;
}

}  // namespace

MengerResult menger(const Graph& g, const VertexSet& src, const VertexSet& dst) {
  check_vertex_set(g, src);
  check_vertex_set(g, dst);
  return run_menger(g, src, dst, -1, -1, std::numeric_limits<int>::max());
}

MengerResult menger_internal(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid_vertex(u) || !g.valid_vertex(v)) throw InputError("vertex out of range");
  if (u == v) throw InputError("menger_internal needs distinct vertices");
  if (g.adjacent(u, v)) throw InputError("menger_internal needs nonadjacent vertices");
  return run_menger(g, {}, {}, u, v, std::numeric_limits<int>::max());
}

int local_connectivity(const Graph& g, Vertex u, Vertex v, int limit) {
  return run_menger(g, {}, {}, u, v, limit).count;
}

DegeneracyResult degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  DegeneracyResult res;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    res.degeneracy = std::max(res.degeneracy, deg[best]);
    res.order.push_back(best);
    removed[best] = 1;
    for (Vertex w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return res;
}

}  // namespace ehftw
