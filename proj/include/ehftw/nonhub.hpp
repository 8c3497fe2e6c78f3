#pragma once

#include <vector>

#include "ehftw/graph.hpp"
#include "ehftw/treedec.hpp"

namespace ehftw {

struct ComponentCover {
  std::vector<VertexSet> components;  // components of g minus the bag
  // Members of y with no neighbour outside the bag. Only possible when
  // y is a single vertex complete to the rest of the bag.
  VertexSet enclosed;
};

// Covers the stable set y ⊆ bag(node) by neighbourhoods of at most four
// components of g - bag(node). The bag must be a PMC. Throws ClassViolation
// (with a witness when one is found) if no such cover exists.
ComponentCover cover_by_components(const Graph& g, const TreeDecomposition& td, int node, const VertexSet& y);

// Inclusion-maximal stable subsets of g[within], in lexicographic order.
std::vector<VertexSet> maximal_stable_sets(const Graph& g, const VertexSet& within);
// Size of a largest stable subset of g[within].
int stable_number_within(const Graph& g, const VertexSet& within);

struct BagBound {
  int node = -1;
  VertexSet non_hubs;
  int max_stable = 0;
};

struct NonhubReport {
  int tau = 0;
  VertexSet hubs;
  std::vector<BagBound> bags;
  int max_bag_stable = 0;        // compared with 4 * tau
  int max_separator_stable = 0;  // compared with tau
  int separators_checked = 0;
  bool bag_bound_ok = true;
  bool separator_bound_ok = true;
};

// Largest stable non-hub sets in bags and in minimal separators, compared
// with the configured bounds. Report only.
NonhubReport check_nonhub_bounds(const Graph& g, const TreeDecomposition& td, int tau);

}  // namespace ehftw
