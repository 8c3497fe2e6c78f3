#include "ehftw/separators.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "ehftw/errors.hpp"
#include "ehftw/treedec.hpp"

namespace ehftw {

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& x) {
  check_vertex_set(g, x);
  std::vector<VertexSet> out;
  for (auto& d : components(g, x))
    if (open_neighborhood(g, d) == x) out.push_back(std::move(d));
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexSet& x) { return full_components(g, x).size() >= 2; }

namespace {

bool size_then_lex(const VertexSet& a, const VertexSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<VertexSet> minimal_separators(const Graph& g) {
  const std::size_t cap = static_cast<std::size_t>(guard_limit(200000));
  std::set<VertexSet> seen;
  std::deque<VertexSet> queue;
  auto offer = [&](VertexSet s) {
    if (seen.count(s)) return;
    if (!is_minimal_separator(g, s)) return;
    if (seen.size() >= cap) throw CapabilityError("minimal separator enumeration exceeds the guard");
    seen.insert(s);
    queue.push_back(std::move(s));
  };
  // Close separators around each vertex.
  for (Vertex v = 0; v < g.order(); ++v)
    for (const auto& c : components(g, closed_neighborhood(g, v))) offer(open_neighborhood(g, c));
  // Close the family under the "separator neighbour" step.
  while (!queue.empty()) {
    VertexSet s = queue.front();
    queue.pop_front();
    for (Vertex x : s) {
      VertexSet removed = set_union(s, g.neighbors(x));
      for (const auto& c : components(g, removed)) offer(open_neighborhood(g, c));
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::optional<VertexSet> clique_cutset(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  if (!is_connected(g)) return VertexSet{};
  for (const auto& s : minimal_separators(g))
    if (is_clique(g, s)) return s;
  return std::nullopt;
}

std::optional<StarCutset> star_cutset(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  if (!is_connected(g)) return StarCutset{-1, {}};
  for (Vertex x = 0; x < g.order(); ++x) {
    VertexSet closed = closed_neighborhood(g, x);
    auto rest = components(g, closed);
    if (rest.size() >= 2) return StarCutset{x, closed};
    if (rest.size() == 1) {
      VertexSet attach = set_intersection(g.neighbors(x), open_neighborhood(g, rest[0]));
      if (attach.size() < g.neighbors(x).size()) return StarCutset{x, with(attach, x)};
      continue;
    }
    const auto& nx = g.neighbors(x);
    for (std::size_t i = 0; i < nx.size(); ++i)
      for (std::size_t j = i + 1; j < nx.size(); ++j)
        if (!g.adjacent(nx[i], nx[j])) return StarCutset{x, without(without(closed, nx[i]), nx[j])};
  }
  return std::nullopt;
}

bool is_balanced_separator(const Graph& g, const VertexSet& x, double c, const std::vector<double>* weights) {
  double total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += weights ? (*weights)[v] : 1.0;
  for (const auto& d : components(g, x)) {
    double w = 0;
    for (Vertex v : d) w += weights ? (*weights)[v] : 1.0;
    if (w > c * total + 1e-9) return false;
  }
  return true;
}

BalancedSeparatorResult balanced_separator(const Graph& g, double c, int max_size,
                                           const std::vector<double>* weights) {
  if (c < 0.5 || c >= 1.0) throw InputError("balanced separator needs c in [1/2, 1)");
  if (weights && static_cast<int>(weights->size()) != g.order()) throw InputError("weight vector size mismatch");
  const int n = g.order();
  max_size = std::min(max_size, n);
  // Count candidate subsets; fall back to a decomposition centre above the guard.
  double combos = 0, binom = 1;
  for (int s = 0; s <= max_size; ++s) {
    combos += binom;
    binom = binom * (n - s) / (s + 1);
  }
  BalancedSeparatorResult res;
  if (combos > guard_limit(3000000)) {
    res.exhaustive = false;
    if (weights) return res;
    auto td = greedy_decomposition(g);
    const auto& bag = td.bag(find_center(g, td));
    if (static_cast<int>(bag.size()) <= max_size && is_balanced_separator(g, bag, c)) res.separator = bag;
    return res;
  }
  for (int s = 0; s <= max_size; ++s) {
    std::vector<int> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VertexSet x(idx.begin(), idx.end());
      if (is_balanced_separator(g, x, c, weights)) {
        res.separator = x;
        return res;
      }
      int i = s - 1;
      while (i >= 0 && idx[i] == n - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return res;
}

std::optional<StarSeparation> canonical_star(const Graph& host, Vertex v) {
  if (!host.valid_vertex(v)) throw InputError("vertex out of range");
  VertexSet closed = closed_neighborhood(host, v);
  for (auto& d : components(host, closed)) {
    if (2 * static_cast<int>(d.size()) <= host.order()) continue;
    StarSeparation s;
    s.center = v;
    s.B = std::move(d);
    s.C = with(open_neighborhood(host, s.B), v);
    s.A = set_difference(set_difference(host.vertices(), s.B), s.C);
    return s;
  }
  return std::nullopt;
}

bool check_separation(const Graph& g, const Separation& s) {
  if (intersects(s.Y, s.X) || intersects(s.Y, s.Z) || intersects(s.X, s.Z)) return false;
  if (set_union(set_union(s.Y, s.X), s.Z) != g.vertices()) return false;
  for (Vertex y : s.Y)
    for (Vertex z : s.Z)
      if (g.adjacent(y, z)) return false;
  return true;
}

bool check_star_separation(const Graph& host, const StarSeparation& s) {
  if (!check_separation(host, Separation{s.A, s.C, s.B})) return false;
  if (!contains(s.C, s.center) || !is_subset(s.C, closed_neighborhood(host, s.center))) return false;
  if (2 * static_cast<int>(s.B.size()) <= host.order()) return false;
  auto comps = components(host, closed_neighborhood(host, s.center));
  if (std::find(comps.begin(), comps.end(), s.B) == comps.end()) return false;
  return s.C == with(open_neighborhood(host, s.B), s.center);
}

}  // namespace ehftw
