#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ehftw/graph.hpp"
#include "ehftw/treedec.hpp"

namespace ehftw {

struct LeanStep {
  std::string kind;  // "normalize", "tighten" or "exchange"
  Fatness before, after;
};

struct LeanResult {
  TreeDecomposition td;
  std::vector<LeanStep> steps;
};

// Removes empty bags and contracts tree edges with nested bags.
TreeDecomposition normalize(const TreeDecomposition& td);

// Both bags of every tree edge have a vertex the other lacks.
bool has_edge_difference(const TreeDecomposition& td);

// First violation in scan order (|Z|, then node pair, then subsets).
std::optional<LeanViolation> find_violation(const Graph& g, const TreeDecomposition& td, int k);
// Visits violations in the same order until `visit` returns true.
void for_each_violation(const Graph& g, const TreeDecomposition& td, int k,
                        const std::function<bool(const LeanViolation&)>& visit);

// Exchange along a minimum Z-Z' separator, normalized. Among the candidate
// cut sides returns the first with strictly smaller fatness and adhesion
// below `k`; nullopt when none qualifies.
std::optional<TreeDecomposition> try_improvement(const Graph& g, const TreeDecomposition& td,
                                                 const LeanViolation& v, int k);
// As above; throws CapabilityError when no candidate decreases fatness.
TreeDecomposition apply_improvement(const Graph& g, const TreeDecomposition& td, const LeanViolation& v, int k);

// Repairs the directed edge t -> t2 that fails tightness.
TreeDecomposition tighten_edge(const Graph& g, const TreeDecomposition& td, int t, int t2);

// Improvement loop from `seed` (single bag V by default) until the result is
// k-lean, tight and has the edge-difference property.
LeanResult refine_to_lean_traced(const Graph& g, int k, const std::optional<TreeDecomposition>& seed = std::nullopt);
TreeDecomposition refine_to_lean(const Graph& g, int k, const std::optional<TreeDecomposition>& seed = std::nullopt);

}  // namespace ehftw
