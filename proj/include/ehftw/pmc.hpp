#pragma once

#include <optional>
#include <vector>

#include "ehftw/graph.hpp"
#include "ehftw/treedec.hpp"

namespace ehftw {

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);
// Maximal cliques of a chordal graph; throws InputError otherwise.
std::vector<VertexSet> chordal_maximal_cliques(const Graph& g);

struct ChordalCompletion {
  Graph base;
  std::vector<Edge> fill;  // pairs (u < v) absent from base, sorted
  Graph completed() const { return base.with_edges(fill); }
};

// Elimination fill along `order` (default: greedy minimum degree), then fill
// edges are dropped one at a time while the result stays chordal.
ChordalCompletion minimal_completion(const Graph& g, const std::vector<Vertex>* order = nullptr);
// Removes single fill edges until no removal keeps the graph chordal.
ChordalCompletion minimalize(const Graph& g, std::vector<Edge> fill);
bool is_minimal_completion(const ChordalCompletion& c);

TreeDecomposition clique_tree(const ChordalCompletion& completion);
TreeDecomposition to_structured(const Graph& g, const TreeDecomposition& td);

struct PmcCertificate {
  bool is_pmc = false;
  std::vector<VertexSet> components;                  // of g \ omega
  std::vector<std::pair<Edge, int>> covering;         // nonadjacent pair -> component index
  std::optional<Edge> uncovered_pair;
  std::optional<int> full_component;                  // index into components
};
PmcCertificate is_pmc(const Graph& g, const VertexSet& omega);

}  // namespace ehftw
