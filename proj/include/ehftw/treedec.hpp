#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ehftw/graph.hpp"

namespace ehftw {

class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  // Single node holding `bag`.
  explicit TreeDecomposition(VertexSet bag) { add_node(std::move(bag)); }

  int add_node(VertexSet bag);
  void add_edge(int a, int b);
  void set_bag(int node, VertexSet bag);

  int node_count() const noexcept { return static_cast<int>(bags_.size()); }
  const VertexSet& bag(int node) const;
  const std::vector<VertexSet>& bags() const noexcept { return bags_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& tree_neighbors(int node) const;
  VertexSet adhesion_set(int a, int b) const { return set_intersection(bag(a), bag(b)); }

  // Nodes of the component of T - from containing `to` (to must neighbour from).
  std::vector<int> branch_nodes(int from, int to) const;
  // Union of bags over branch_nodes(from, to).
  VertexSet branch_vertices(int from, int to) const;
  // Node sequence of the tree path a..b.
  std::vector<int> tree_path(int a, int b) const;

 private:
  std::vector<VertexSet> bags_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

struct ValidationReport {
  bool tree = true;
  bool vertex_coverage = true;
  bool edge_coverage = true;
  bool connectivity = true;
  bool bags_in_range = true;
  std::optional<Vertex> uncovered_vertex;
  std::optional<Edge> uncovered_edge;
  std::optional<Vertex> disconnected_vertex;
  std::string message;
  bool valid() const { return tree && vertex_coverage && edge_coverage && connectivity && bags_in_range; }
};

ValidationReport validate(const Graph& g, const TreeDecomposition& td);
// Throws InputError with the report message when invalid.
void require_valid(const Graph& g, const TreeDecomposition& td);

int width(const TreeDecomposition& td);
int adhesion(const TreeDecomposition& td);

// counts[i] = number of bags of size i. Comparison is lexicographic from the
// largest size downwards, i.e. "smaller" means leaner.
struct Fatness {
  std::vector<int> counts;
  std::strong_ordering operator<=>(const Fatness& other) const;
  bool operator==(const Fatness& other) const { return (*this <=> other) == 0; }
  std::string to_string() const;
};
Fatness fatness(const TreeDecomposition& td);

struct Torso {
  Graph graph;        // on local ids 0..|bag|-1
  VertexSet to_host;  // the bag
};
Torso torso(const Graph& g, const TreeDecomposition& td, int node);

int find_center(const Graph& g, const TreeDecomposition& td);
bool is_center(const Graph& g, const TreeDecomposition& td, int node);

struct TightnessReport {
  bool tight = true;
  std::optional<std::pair<int, int>> failing_edge;  // directed t -> t'
};
TightnessReport is_tight(const Graph& g, const TreeDecomposition& td);

struct LeanViolation {
  int t = -1, t2 = -1;
  VertexSet z, z2;
  VertexSet cut;  // separator of size < |z|
  std::vector<std::vector<Vertex>> paths;
};
struct LeanReport {
  bool lean = true;
  bool adhesion_ok = true;
  std::optional<LeanViolation> witness;
};
// Exhaustive check; guards k <= 4 and bag size <= 16 (raisable).
LeanReport is_k_lean(const Graph& g, const TreeDecomposition& td, int k);
// Visits violations by increasing |Z|, then node pair, then subsets, until
// `visit` returns true. Does not check the adhesion condition.
void for_each_lean_violation(const Graph& g, const TreeDecomposition& td, int k,
                             const std::function<bool(const LeanViolation&)>& visit);

// Lemma construction: node with bag X joined to node 0 of each component td,
// X added to every bag. component_tds[i] is over the local ids of
// components(g, x)[i] (as given by induced()).
TreeDecomposition compose_with_separator(const Graph& g, const VertexSet& x,
                                         const std::vector<TreeDecomposition>& component_tds);

// Td whose bags are {v} ∪ (later neighbours of v in the fill graph) along the order.
TreeDecomposition from_elimination_order(const Graph& g, const std::vector<Vertex>& order);
// Greedy minimum-degree elimination.
TreeDecomposition greedy_decomposition(const Graph& g);

struct ExactTreewidth {
  int width = -1;
  TreeDecomposition td;
};
// Subset dynamic programme over elimination orders; n <= 14 by default.
ExactTreewidth exact_treewidth(const Graph& g);

// Contracts tree edges whose bags are nested, until none remain.
TreeDecomposition contract_nested(const TreeDecomposition& td);
// Maps a td over local ids of `sub` to host ids.
TreeDecomposition lift(const TreeDecomposition& td, const VertexSet& to_host);

}  // namespace ehftw
