#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ehftw/graph.hpp"

namespace ehftw {

enum class PatternKind { Hole, EvenHole, Theta, Prism, Pyramid, GeneralizedKPyramid, Wheel, Clique };
enum class WheelKind { Proper, Even, Twin, Universal, ShortPyramid };
enum class Parity { Any, Even, Odd };

std::string to_string(PatternKind k);
std::string to_string(WheelKind k);

// Named, ordered vertex list inside a witness (a path, a cycle, or a set).
struct Role {
  std::string name;
  std::vector<Vertex> vertices;
  friend bool operator==(const Role&, const Role&) = default;
};

// Role layout per kind:
//   Hole/EvenHole: "cycle"
//   Theta: "ends" {a,b}, "path1".."path3" (each a..b)
//   Prism: "triangle_a", "triangle_b", "path1".."path3" (a_i..b_i)
//   Pyramid: "apex" {z}, "triangle", "path1".."path3" (z..t_i)
//   GeneralizedKPyramid: "P", "Q" (P then Q traverses the hole), "R1".."Rk"
//     (a_i..b_i), "x", "y", "z"
//   Wheel: "cycle", "center"
//   Clique: "clique"
struct PatternWitness {
  PatternKind kind = PatternKind::Hole;
  int k = 0;                  // generalized k-pyramid order
  WheelKind wheel_kind = WheelKind::Proper;  // for Wheel
  std::vector<Role> roles;

  const std::vector<Vertex>& role(const std::string& name) const;
  VertexSet vertex_set() const;
};

struct WheelWitness {
  std::vector<Vertex> hole;
  Vertex center = -1;
  WheelKind subkind = WheelKind::Proper;
  PatternWitness as_pattern() const;
};

// Neighbour-pattern flags of x on the hole.
struct WheelFlags {
  int neighbors = 0;
  bool proper = false, even = false, twin = false, universal = false, short_pyramid = false;
};
WheelFlags classify_wheel(const Graph& g, const std::vector<Vertex>& hole, Vertex x);
bool has_kind(const WheelFlags& f, WheelKind k);

// Recheck of a witness from the adjacency relation alone.
bool verify_witness(const Graph& g, const PatternWitness& w);
bool verify_wheel(const Graph& g, const WheelWitness& w);

// Shortest hole of the parity with length in [min_len, max_len] (max_len <= 0: no bound).
std::optional<PatternWitness> find_hole(const Graph& g, Parity parity = Parity::Any, int min_len = 4,
                                        int max_len = 0);
// Calls visit(cycle) on every hole once (rotation: least vertex first,
// direction: second < last) in order of increasing length. Stops when visit
// returns true; returns whether it stopped.
template <class F>
bool for_each_hole(const Graph& g, int min_len, int max_len, F&& visit);

std::optional<PatternWitness> find_theta(const Graph& g);
std::optional<PatternWitness> find_prism(const Graph& g);
std::optional<PatternWitness> find_pyramid(const Graph& g);
std::optional<PatternWitness> find_generalized_k_pyramid(const Graph& g, int k);
std::optional<PatternWitness> find_even_wheel(const Graph& g);
std::optional<PatternWitness> find_clique(const Graph& g, int size);

std::vector<WheelWitness> find_wheels(const Graph& g);
VertexSet hubs(const Graph& g);
bool is_hub(const Graph& g, Vertex v);

struct ClassReport {
  bool in_C = false;
  bool in_C_t = false;
  bool in_C_tt = false;
  std::optional<PatternWitness> blocking_witness;
  std::string blocking;  // "C4", "theta", "prism", "even wheel", "clique", "generalized pyramid", or ""
};
ClassReport class_membership(const Graph& g, int t);
// C4 / theta / prism / even-wheel test only.
std::optional<PatternWitness> find_class_C_obstruction(const Graph& g);

std::optional<VertexSet> find_k_block(const Graph& g, int k);
bool is_k_block(const Graph& g, const VertexSet& b, int k);

namespace detail {
bool hole_dfs(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on, int target_len,
              const std::function<bool(const std::vector<Vertex>&)>& visit);
}

template <class F>
bool for_each_hole(const Graph& g, int min_len, int max_len, F&& visit) {
  if (max_len <= 0 || max_len > g.order()) max_len = g.order();
  std::function<bool(const std::vector<Vertex>&)> fn = std::forward<F>(visit);
  std::vector<char> on(g.order(), 0);
  std::vector<Vertex> path;
  for (int len = std::max(min_len, 4); len <= max_len; ++len) {
    for (Vertex s = 0; s < g.order(); ++s) {
      path.assign(1, s);
      on[s] = 1;
      bool stop = detail::hole_dfs(g, path, on, len, fn);
      on[s] = 0;
      if (stop) return true;
    }
  }
  return false;
}

}  // namespace ehftw
