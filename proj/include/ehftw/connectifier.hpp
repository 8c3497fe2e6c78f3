#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehftw/graph.hpp"

namespace ehftw {

struct MonotoneSubsequence {
  std::vector<std::size_t> indices;
  std::vector<double> values;
  bool increasing = true;
};
// Monotone subsequence of length n + 1 from at least n^2 + 1 distinct values.
MonotoneSubsequence erdos_szekeres(const std::vector<double>& seq, int n);

// out[v] lists the out-neighbours of v. Returns a stable set of the
// underlying graph of size >= |V| / (2k + 1).
VertexSet stable_in_bounded_outdegree(const std::vector<std::vector<int>>& out, int k);

enum class ConnectifierKind { Path, Caterpillar, LineOfCaterpillar, SubdividedStar };
std::string to_string(ConnectifierKind k);

// Shape of a connected induced subgraph: its kind, simplicial vertices, the
// path P(H) in order and the legs (components of H - P(H)).
struct ShapeInfo {
  ConnectifierKind kind = ConnectifierKind::Path;
  VertexSet simplicial;
  std::vector<Vertex> spine;
  std::vector<VertexSet> legs;
};
// nullopt when g[h] is none of the four shapes. Paths classify as Path,
// trees with exactly one branch vertex as SubdividedStar, and other trees of
// maximum degree three with their branch vertices on one path as Caterpillar.
std::optional<ShapeInfo> classify_shape(const Graph& g, const VertexSet& h);

struct Connectifier {
  VertexSet h;
  ConnectifierKind kind = ConnectifierKind::Path;
  std::vector<Vertex> spine;
  std::vector<VertexSet> legs;
  VertexSet attached;
  std::vector<std::pair<Vertex, Vertex>> attachment;  // x -> its neighbour in h (not for Path)
};

// For Path: g[h] is a path and every attached vertex has a neighbour in it.
// Otherwise: g[h] has the kind, every attached vertex has exactly one
// neighbour in h, these are exactly the simplicial vertices of g[h] and no
// two attached vertices share one.
bool verify_connectifier(const Graph& g, const Connectifier& c);

// Order on the attached set: spine ends first and last, legs in spine order.
// Empty for SubdividedStar and Path.
std::vector<Vertex> connectifier_order(const Graph& g, const Connectifier& c);
// connectifier_order over every maximal path through the branch vertices.
std::vector<std::vector<Vertex>> admissible_orders(const Graph& g, const Connectifier& c);

// Path outcome: an induced path of g - s seen by at least h_target members of
// s (attached = the h_target smallest). Otherwise a connectifier with
// |attached| = h_target, smallest h first. nullopt when neither exists within
// the search guard.
std::optional<Connectifier> find_connectifier(const Graph& g, const VertexSet& s, int h_target);

enum class AlignmentKind { Wide, Spiky, Triangular };
std::string to_string(AlignmentKind k);

struct Alignment {
  std::vector<Vertex> p;
  std::vector<Vertex> x;  // in alignment order
  AlignmentKind kind = AlignmentKind::Spiky;
};

// nullopt unless (p, x) is an alignment of exactly one consistent kind.
// Throws InputError when x meets p.
std::optional<Alignment> classify_alignment(const Graph& g, const std::vector<Vertex>& p, const VertexSet& x);

struct Side {
  bool is_alignment = false;
  Connectifier connectifier;
  Alignment alignment;
  VertexSet vertices() const;
  std::vector<Vertex> order;  // empty for stellar connectifiers
  std::vector<std::vector<Vertex>> orders;  // one per admissible spine
  bool triangular() const;
  bool stellar() const;
  bool wide_alignment() const;
  std::string label() const;  // e.g. "triangular alignment"
};

struct TwoSided {
  VertexSet x;
  Side side1;  // triangular
  Side side2;  // order fields hold the matching orders
  bool swapped = false;  // side1 lives in d2
};

// Searches X ⊆ y of size x_target with structures in d1 and d2 satisfying
// the two-sided conclusion. nullopt means nothing found at this scale.
std::optional<TwoSided> two_sided_classify(const Graph& g, const VertexSet& d1, const VertexSet& d2,
                                           const VertexSet& y, int x_target);

}  // namespace ehftw
