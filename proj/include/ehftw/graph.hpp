#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ehftw/vertex_set.hpp"

namespace ehftw {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  // Throws InputError on out-of-range ids or loops; duplicate edges are merged.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return (matrix_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet vertices() const;
  bool valid_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

  // Copy with extra edges.
  Graph with_edges(const std::vector<Edge>& extra) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> matrix_;
};

struct InducedSubgraph {
  Graph graph;
  VertexSet to_host;  // local vertex i is host vertex to_host[i]
  Vertex to_local(Vertex host_vertex) const;  // -1 if absent
  VertexSet lift(const VertexSet& local) const;
  VertexSet lower(const VertexSet& host) const;  // drops vertices not in the subgraph
};

InducedSubgraph induced(const Graph& g, const VertexSet& x);

// Throws InputError if any member is out of range or the list is not a set.
void check_vertex_set(const Graph& g, const VertexSet& x);

// N(X) = union of neighbourhoods minus X; N[X] = N(X) ∪ X.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// Components of g \ forbidden, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden = {});
// Components of g[within].
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_stable(const Graph& g, const VertexSet& x);
bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b);
int edges_within(const Graph& g, const VertexSet& x);

// Shortest path from `from` to `to` using only vertices of `within` (which must
// contain both ends); empty if none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const VertexSet& within);

struct MengerResult {
  int count = 0;
  std::vector<std::vector<Vertex>> paths;
  VertexSet cut;
};

// Vertex-disjoint src→dst paths and a minimum separating set.
MengerResult menger(const Graph& g, const VertexSet& src, const VertexSet& dst);
// Internally disjoint u–v paths for nonadjacent u, v; cut avoids u and v.
MengerResult menger_internal(const Graph& g, Vertex u, Vertex v);
// Number of internally disjoint u-v paths with early exit once `limit` is reached.
int local_connectivity(const Graph& g, Vertex u, Vertex v, int limit);

struct DegeneracyResult {
  std::vector<Vertex> order;
  int degeneracy = 0;
};
DegeneracyResult degeneracy_order(const Graph& g);

}  // namespace ehftw
