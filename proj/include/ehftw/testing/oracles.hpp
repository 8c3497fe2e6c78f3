#pragma once

// Brute-force reference implementations used by tests and the acceptance
// suite. Each is written independently of the library algorithm it checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "ehftw/graph.hpp"

namespace ehftw::oracle {

// Minimum |S| such that G - S has no path from src \ S to dst \ S (S may
// contain terminals). Exhaustive over subsets; n <= 16.
int min_vertex_cut(const Graph& g, const VertexSet& src, const VertexSet& dst);
// Minimum separator of nonadjacent u, v avoiding u and v.
int min_vertex_cut_internal(const Graph& g, Vertex u, Vertex v);

// Subset helpers.
VertexSet from_mask(std::uint64_t mask);
std::uint64_t to_mask(const VertexSet& s);

}  // namespace ehftw::oracle

namespace ehftw::oracle {

enum class Shape { Hole, EvenHole, OddHole, C4, Theta, Prism, Pyramid, EvenWheel, KPyramid, ProperWheel };

// Does g[s] (s given as a bitmask) form the shape? k is used by KPyramid.
bool subset_is(const Graph& g, std::uint64_t s, Shape shape, int k = 1);
// Least subset (by size, then mask value) inducing the shape; n <= 20.
std::optional<VertexSet> brute_find(const Graph& g, Shape shape, int k = 1);
// Vertices that are centers of a proper wheel, by subset enumeration.
VertexSet brute_hubs(const Graph& g);

}  // namespace ehftw::oracle

namespace ehftw::oracle {

// Subsets with at least two full components.
std::vector<VertexSet> brute_minimal_separators(const Graph& g);
// Chordality by repeatedly deleting simplicial vertices.
bool brute_is_chordal(const Graph& g);
// Every inclusion-minimal chordal fill (as edge lists); n <= 7.
std::vector<std::vector<Edge>> brute_minimal_fills(const Graph& g);
// Maximal cliques over all minimal chordal completions (the PMCs by definition).
std::vector<VertexSet> brute_pmcs(const Graph& g);
// Treewidth as the best elimination order over all permutations; n <= 9.
int brute_treewidth(const Graph& g);
// Smallest balanced separator size, or -1.
int brute_balanced_separator_size(const Graph& g, double c, int max_size);

}  // namespace ehftw::oracle

namespace ehftw::oracle {

// Exhaustive optimisation over all vertex subsets / colourings; n <= 16.
int brute_stable_number(const Graph& g);
int brute_domination_number(const Graph& g);
bool brute_r_colorable(const Graph& g, int r);
int brute_chromatic_number(const Graph& g);

}  // namespace ehftw::oracle
