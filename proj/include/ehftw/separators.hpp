#pragma once

#include <optional>
#include <vector>

#include "ehftw/graph.hpp"

namespace ehftw {

struct StarSeparation {
  Vertex center = -1;
  VertexSet A, C, B;
};

struct Separation {
  VertexSet Y, X, Z;
};

// All minimal separators (sets with >= 2 full components), ordered by size
// then lexicographically. Includes ∅ when g is disconnected.
std::vector<VertexSet> minimal_separators(const Graph& g);
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& x);
bool is_minimal_separator(const Graph& g, const VertexSet& x);

// ∅ if g is disconnected, else the first clique minimal separator.
std::optional<VertexSet> clique_cutset(const Graph& g);

struct StarCutset {
  Vertex center = -1;  // -1 for the empty cutset
  VertexSet set;
};
std::optional<StarCutset> star_cutset(const Graph& g);

struct BalancedSeparatorResult {
  std::optional<VertexSet> separator;
  bool exhaustive = true;  // false: answer from the decomposition heuristic
};
// Every component of g \ X has (weighted) size <= c * total.
BalancedSeparatorResult balanced_separator(const Graph& g, double c, int max_size,
                                           const std::vector<double>* weights = nullptr);
bool is_balanced_separator(const Graph& g, const VertexSet& x, double c,
                           const std::vector<double>* weights = nullptr);

std::optional<StarSeparation> canonical_star(const Graph& host, Vertex v);
bool check_star_separation(const Graph& host, const StarSeparation& s);
bool check_separation(const Graph& g, const Separation& s);

}  // namespace ehftw
