#include "ehftw/pmc.hpp"

#include <functional>
#include <set>

#include "ehftw/errors.hpp"

namespace ehftw {

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; the reverse visit order is a PEO iff g is chordal.
  std::vector<int> weight(n, 0);
  std::vector<char> done(n, 0);
  std::vector<Vertex> visit;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    done[best] = 1;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!done[w]) ++weight[w];
  }
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  for (int i = 0; i < n; ++i) {
    Vertex v = peo[i];
    Vertex first = -1;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > i && (first < 0 || pos[w] < pos[first])) first = w;
    if (first < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (pos[w] > i && w != first && !g.adjacent(first, w)) return std::nullopt;
  }
  return peo;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

std::vector<VertexSet> chordal_maximal_cliques(const Graph& g) {
  auto peo = perfect_elimination_order(g);
  if (!peo) throw InputError("graph is not chordal");
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*peo)[i]] = i;
  std::vector<VertexSet> cand;
  for (int i = 0; i < n; ++i) {
    Vertex v = (*peo)[i];
    VertexSet c{v};
    for (Vertex w : g.neighbors(v))
      if (pos[w] > i) c.push_back(w);
    cand.push_back(make_set(c));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cand.size() && maximal; ++j)
      if (i != j && is_subset(cand[i], cand[j]) && (cand[i] != cand[j] || j < i)) maximal = false;
    if (maximal) out.push_back(cand[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Edge> elimination_fill(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::set<Edge> fill;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> up;
    for (Vertex w : adj[v])
      if (pos[w] > i) up.push_back(w);
    for (std::size_t a = 0; a < up.size(); ++a)
      for (std::size_t b = a + 1; b < up.size(); ++b)
        if (!adj[up[a]].count(up[b])) {
          adj[up[a]].insert(up[b]);
          adj[up[b]].insert(up[a]);
          fill.insert(std::minmax(up[a], up[b]));
        }
  }
  return {fill.begin(), fill.end()};
}

std::vector<Vertex> min_degree_order(const Graph& g) {
  const int n = g.order();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (best < 0 || adj[v].size() < adj[best].size())) best = v;
    std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
    for (Vertex a : nb) {
      adj[a].erase(best);
      for (Vertex b : nb)
        if (a != b) adj[a].insert(b);
    }
    gone[best] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace

ChordalCompletion minimalize(const Graph& g, std::vector<Edge> fill) {
  for (auto& e : fill) e = std::minmax(e.first, e.second);
  std::sort(fill.begin(), fill.end());
  fill.erase(std::unique(fill.begin(), fill.end()), fill.end());
  if (!is_chordal(g.with_edges(fill))) throw InputError("fill does not give a chordal graph");
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < fill.size(); ++i) {
      std::vector<Edge> trial = fill;
      trial.erase(trial.begin() + static_cast<long>(i));
      if (is_chordal(g.with_edges(trial))) {
        fill = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  return ChordalCompletion{g, fill};
}

ChordalCompletion minimal_completion(const Graph& g, const std::vector<Vertex>* order) {
  std::vector<Vertex> ord = order ? *order : min_degree_order(g);
  if (static_cast<int>(ord.size()) != g.order() || make_set(ord) != g.vertices())
    throw InputError("order must be a permutation of the vertices");
  return minimalize(g, elimination_fill(g, ord));
}

bool is_minimal_completion(const ChordalCompletion& c) {
  if (!is_chordal(c.completed())) return false;
  for (std::size_t i = 0; i < c.fill.size(); ++i) {
    auto trial = c.fill;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (is_chordal(c.base.with_edges(trial))) return false;
  }
  return true;
}

TreeDecomposition clique_tree(const ChordalCompletion& completion) {
  Graph h = completion.completed();
  auto cliques = chordal_maximal_cliques(h);
  TreeDecomposition td;
  for (auto& c : cliques) td.add_node(c);
  if (cliques.empty()) return TreeDecomposition(VertexSet{});
  // Maximum-weight spanning tree on |Ci ∩ Cj| (Kruskal; zero weights join components).
  struct Cand {
    int w, a, b;
  };
  std::vector<Cand> cand;
  for (int a = 0; a < static_cast<int>(cliques.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(cliques.size()); ++b)
      cand.push_back({static_cast<int>(set_intersection(cliques[a], cliques[b]).size()), a, b});
  std::stable_sort(cand.begin(), cand.end(), [](const Cand& x, const Cand& y) { return x.w > y.w; });
  std::vector<int> parent(cliques.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  for (const auto& c : cand) {
    int ra = root(c.a), rb = root(c.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    td.add_edge(c.a, c.b);
  }
  return td;
}

TreeDecomposition to_structured(const Graph& g, const TreeDecomposition& td) {
  require_valid(g, td);
  std::set<Edge> fill;
  for (const auto& b : td.bags())
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.adjacent(b[i], b[j])) fill.insert({b[i], b[j]});
  auto completion = minimalize(g, {fill.begin(), fill.end()});
  return clique_tree(completion);
}

PmcCertificate is_pmc(const Graph& g, const VertexSet& omega) {
  check_vertex_set(g, omega);
  PmcCertificate cert;
  cert.components = components(g, omega);
  std::vector<VertexSet> nbhd;
  for (std::size_t i = 0; i < cert.components.size(); ++i) {
    nbhd.push_back(open_neighborhood(g, cert.components[i]));
    if (nbhd.back() == omega && !cert.full_component) cert.full_component = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t j = i + 1; j < omega.size(); ++j) {
      Vertex x = omega[i], y = omega[j];
      if (g.adjacent(x, y)) continue;
      int found = -1;
      for (std::size_t c = 0; c < nbhd.size() && found < 0; ++c)
        if (contains(nbhd[c], x) && contains(nbhd[c], y)) found = static_cast<int>(c);
      if (found < 0) {
        if (!cert.uncovered_pair) cert.uncovered_pair = Edge{x, y};
      } else {
        cert.covering.emplace_back(Edge{x, y}, found);
      }
    }
  cert.is_pmc = !cert.uncovered_pair && !cert.full_component;
  return cert;
}

}  // namespace ehftw
