#pragma once

#include <string>
#include <vector>

#include "ehftw/graph.hpp"
#include "ehftw/treedec.hpp"

namespace ehftw {

enum class NiceKind { Leaf, Introduce, Forget, Join };

// Rooted nice decomposition. Children always precede parents; the root is
// the last node and both the root and every leaf have empty bags.
struct NiceDecomposition {
  TreeDecomposition td;
  std::vector<NiceKind> kind;
  std::vector<Vertex> vertex;  // introduced or forgotten vertex, -1 otherwise
  std::vector<std::vector<int>> children;
  int root() const { return td.node_count() - 1; }
};

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

enum class Problem { StableSet, VertexCover, DominatingSet, RColoring, Coloring };
std::string to_string(Problem p);
Problem problem_from_string(const std::string& name);  // "stable-set", "vertex-cover", ...

struct Solution {
  Problem problem = Problem::StableSet;
  // Set size for the set problems, colours used for colouring problems.
  int value = 0;
  // False only for RColoring when no r-colouring exists.
  bool feasible = true;
  VertexSet set;
  std::vector<int> coloring;  // colour per vertex, 0-based
};

// `r` is used by RColoring only.
Solution solve(const Graph& g, const TreeDecomposition& td, Problem problem, int r = 0);

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int r);

}  // namespace ehftw
