#pragma once

#include <cstdint>
#include <random>

#include "ehftw/graph.hpp"

namespace ehftw::gen {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph grid(int rows, int cols);
Graph petersen();
// Cycle 0..n-1 plus an apex n adjacent to every cycle vertex.
Graph wheel(int rim);
// Triangles {0,1,2}, {3,4,5} with edges i–(i+3).
Graph triangular_prism();
Graph erdos_renyi(int n, double p, std::mt19937_64& rng);
Graph random_tree(int n, std::mt19937_64& rng);
Graph disjoint_union(const Graph& a, const Graph& b);
// Graph on n vertices whose edges are the set bits of `code` over pairs (i<j) in
// lexicographic order.
Graph from_code(int n, std::uint64_t code);

}  // namespace ehftw::gen

namespace ehftw::gen {
// Random generalized k-pyramid; path lengths are drawn from [0, max_extra].
Graph random_generalized_pyramid(int k, int max_extra, std::mt19937_64& rng);
// Copy of g with each absent pair added with probability p.
Graph add_random_edges(const Graph& g, double p, std::mt19937_64& rng);
}  // namespace ehftw::gen
