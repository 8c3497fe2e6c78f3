#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ehftw/graph.hpp"
#include "ehftw/separators.hpp"
#include "ehftw/treedec.hpp"

namespace ehftw {

struct Params {
  int t = 4;    // clique bound
  int d = 6;    // degeneracy bound of the hub partition
  int k_t = 1;  // path bound for hub-free ends
  int m = 3;    // leanness order; k_t + 2d in theory, small at desk scale
  int c_t = 4;
  int tau = 2;
  // Bound on balanced separators of beta before the central bag is used;
  // negative means 2m(m-1) + c_t.
  int beta_separator_bound = -1;
  int exact_limit = 14;  // hub-free pieces up to this order get exact treewidth
  bool check_membership = true;

  int delta() const { return (2 * m - 1) * m + c_t; }
  int psi() const { return 4 * tau; }
  int theory_m() const { return k_t + 2 * d; }
  int beta_bound() const { return beta_separator_bound >= 0 ? beta_separator_bound : 2 * m * (m - 1) + c_t; }
  // Throws ConfigError unless m >= 3, every constant is positive and delta >= m.
  void validate() const;
  // c_t + delta * psi * (log2 n + hub_order).
  double width_formula(int n, int hub_order) const;
};

struct HubPartition {
  std::vector<VertexSet> parts;
  int order() const { return static_cast<int>(parts.size()); }
};
// Peels vertices of x of degree <= d in the remaining graph g[x], splitting
// each peel into stable sets by greedy colouring.
HubPartition stable_layering(const Graph& g, const VertexSet& x, int d);
// stable_layering over Hub(g).
HubPartition hub_partition(const Graph& g, int d);
bool is_hub_partition(const Graph& g, const HubPartition& p, int d);

struct AOrder {
  bool partial_order = true;
  VertexSet core;  // minimal elements
};
// The order x <=_A y on the keys of `stars`; star twins are broken by
// position in `order`.
AOrder a_order_core(const std::map<Vertex, StarSeparation>& stars, const std::vector<Vertex>& order);

// Conn(t1) for the tree edge t0 - t1: K ∪ M with M the adhesion and K an
// inclusion-minimal connected set beyond chi(t0) seeing all of M. Requires a
// tight td.
VertexSet build_conn(const Graph& g, const TreeDecomposition& td, int t0, int t1);

struct CentralBagState {
  int t0 = -1;
  VertexSet beta0;  // chi(t0)
  VertexSet s_prime;
  VertexSet s_bad;
  std::map<int, VertexSet> conn;  // neighbour of t0 -> Conn
  VertexSet beta;
  VertexSet candidates;           // (S' \ S_bad) ∩ chi(t0), ascending = the order O
  std::map<Vertex, StarSeparation> stars;  // in host ids
  VertexSet core;
  VertexSet beta_a;
  std::vector<VertexSet> components;  // of beta \ beta_a
  std::vector<Vertex> anchors;        // r(D_i)
  std::vector<std::string> verified;
  bool complete = false;  // core and beta_a computed
};

// beta, S_bad and the Conn sets. Requires S' stable and d-safe and g free of
// clique cutsets.
CentralBagState prepare_central(const Graph& g, const TreeDecomposition& td, int t0, const VertexSet& s_prime,
                                const Params& params);
// Star separations, the order, Core and beta^A on a prepared state. Throws
// InputError when beta has a balanced separator within params.beta_bound().
void finish_central(const Graph& g, const TreeDecomposition& td, CentralBagState& state, const Params& params);
CentralBagState central_bag(const Graph& g, const TreeDecomposition& td, int t0, const VertexSet& s_prime,
                            const Params& params);

// Td of beta (host ids) from a td of beta^A and one td per component of
// beta \ beta^A, all in host ids.
TreeDecomposition assemble_beta(const Graph& g, const CentralBagState& state, const TreeDecomposition& td0,
                                const std::vector<TreeDecomposition>& component_tds, const Params& params);

// Td of g from a structured td of beta and, for each neighbour t_i of t0 in
// tree order, a td of G_{t0->t_i} \ chi(t0) (empty td when that set is empty).
TreeDecomposition assemble_global(const Graph& g, const TreeDecomposition& td, const CentralBagState& state,
                                  const TreeDecomposition& td_beta, const std::vector<TreeDecomposition>& branch_tds);

struct TraceEntry {
  int depth = 0;
  int order = 0;  // vertices in the piece
  std::string branch;
  std::string detail;
  std::vector<std::string> verified;
};

struct DecomposeResult {
  TreeDecomposition td;
  std::vector<TraceEntry> trace;
  int width = -1;
  int hub_order = 0;
  double formula = 0;
  int max_depth = 0;
};

DecomposeResult decompose(const Graph& g, const Params& params = {});

// Largest number of internally disjoint paths between nonadjacent x, y with
// N(x) free of hubs. Reported only.
struct BananaReport {
  int max_paths = 0;
  std::optional<Edge> pair;
};
BananaReport banana_report(const Graph& g);

}  // namespace ehftw
