#include "ehftw/td_dp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <unordered_map>

#include "ehftw/errors.hpp"

namespace ehftw {

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  require_valid(g, td);
  NiceDecomposition out;
  auto add = [&](NiceKind kind, VertexSet bag, Vertex v, std::vector<int> children) {
    const int id = out.td.add_node(std::move(bag));
    for (int c : children) out.td.add_edge(c, id);
    out.kind.push_back(kind);
    out.vertex.push_back(v);
    out.children.push_back(std::move(children));
    return id;
  };
  // Walks node t of `from` bag towards `to` by forgets, then introduces.
  auto bridge = [&](int t, const VertexSet& from, const VertexSet& to) {
    VertexSet cur = from;
    for (Vertex v : set_difference(from, to)) {
      cur = without(cur, v);
      t = add(NiceKind::Forget, cur, v, {t});
    }
    for (Vertex v : set_difference(to, from)) {
      cur = with(cur, v);
      t = add(NiceKind::Introduce, cur, v, {t});
    }
    return t;
  };
  std::function<int(int, int)> build = [&](int u, int parent) {
    std::vector<int> tops;
    for (int c : td.tree_neighbors(u))
      if (c != parent) tops.push_back(bridge(build(c, u), td.bag(c), td.bag(u)));
    if (tops.empty()) return bridge(add(NiceKind::Leaf, {}, -1, {}), {}, td.bag(u));
    while (tops.size() > 1) {
      const int a = tops.back();
      tops.pop_back();
      tops.back() = add(NiceKind::Join, td.bag(u), -1, {tops.back(), a});
    }
    return tops.front();
  };
  bridge(build(0, -1), td.bag(0), {});
  return out;
}

std::string to_string(Problem p) {
  switch (p) {
    case Problem::StableSet: return "stable-set";
    case Problem::VertexCover: return "vertex-cover";
    case Problem::DominatingSet: return "dominating-set";
    case Problem::RColoring: return "r-coloring";
    case Problem::Coloring: return "coloring";
  }
  return "?";
}

Problem problem_from_string(const std::string& name) {
  for (auto p : {Problem::StableSet, Problem::VertexCover, Problem::DominatingSet, Problem::RColoring, Problem::Coloring})
    if (to_string(p) == name) return p;
  throw InputError("unknown problem: " + name);
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (auto [u, v] : g.edges())
    if (!contains(s, u) && !contains(s, v)) return false;
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  for (Vertex v : g.vertices())
    if (!contains(s, v) && !intersects(g.neighbors(v), s)) return false;
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int r) {
  if (static_cast<int>(coloring.size()) != g.order()) return false;
  for (int c : coloring)
    if (c < 0 || c >= r) return false;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return false;
  return true;
}

namespace {

using State = std::uint64_t;

// Bag states as base-b digit strings indexed by position in the sorted bag.
struct Digits {
  std::uint64_t base;
  std::vector<std::uint64_t> pow;
  Digits(int b, int max_len) : base(static_cast<std::uint64_t>(b)), pow(max_len + 2, 1) {
    for (int i = 1; i < max_len + 2; ++i) pow[i] = pow[i - 1] * base;
  }
  int get(State s, int p) const { return static_cast<int>(s / pow[p] % base); }
  State set(State s, int p, int d) const { return s + (static_cast<std::uint64_t>(d) - get(s, p)) * pow[p]; }
  State insert(State s, int p, int d) const { return s % pow[p] + d * pow[p] + s / pow[p] * pow[p + 1]; }
  State erase(State s, int p) const { return s % pow[p] + s / pow[p + 1] * pow[p]; }
};

struct Cell {
  long long value;
  State a, b;
};
using Table = std::unordered_map<State, Cell>;

struct Rules {
  int base = 2;
  bool maximize = true;
  // Emits (state, gain) for each way to add the vertex at `pos` of `bag`.
  std::function<void(const VertexSet& bag, int pos, State child, const std::function<void(State, long long)>&)> introduce;
  std::function<bool(int digit)> may_forget;
  std::function<State(State)> join_key;
  // Combined state and gain for two child states with equal keys.
  std::function<std::pair<State, long long>(State, State)> join;
};

int position(const VertexSet& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// Returns the root value and the forgotten digit per vertex, or nullopt when
// the root table is empty.
std::optional<std::pair<long long, std::vector<int>>> run(const Graph& g, const NiceDecomposition& nd,
                                                          const Rules& rules, const Digits& dg) {
  const int nodes = nd.td.node_count();
  std::vector<Table> table(nodes);
  auto relax = [&](Table& t, State s, long long value, State a, State b) {
    auto it = t.find(s);
    if (it == t.end())
      t.emplace(s, Cell{value, a, b});
    else if (rules.maximize ? value > it->second.value : value < it->second.value)
      it->second = Cell{value, a, b};
  };
  for (int u = 0; u < nodes; ++u) {
    const auto& bag = nd.td.bag(u);
    Table& cur = table[u];
    switch (nd.kind[u]) {
      case NiceKind::Leaf:
        cur.emplace(0, Cell{0, 0, 0});
        break;
      case NiceKind::Introduce: {
        const int c = nd.children[u][0];
        const int p = position(bag, nd.vertex[u]);
        for (const auto& [s, cell] : table[c])
          rules.introduce(bag, p, s, [&](State ns, long long gain) { relax(cur, ns, cell.value + gain, s, 0); });
        break;
      }
      case NiceKind::Forget: {
        const int c = nd.children[u][0];
        const int p = position(nd.td.bag(c), nd.vertex[u]);
        for (const auto& [s, cell] : table[c])
          if (rules.may_forget(dg.get(s, p))) relax(cur, dg.erase(s, p), cell.value, s, 0);
        break;
      }
      case NiceKind::Join: {
        const int c1 = nd.children[u][0], c2 = nd.children[u][1];
        std::unordered_map<State, std::vector<State>> groups;
        for (const auto& [s, cell] : table[c2]) groups[rules.join_key(s)].push_back(s);
        for (const auto& [s1, cell1] : table[c1]) {
          auto it = groups.find(rules.join_key(s1));
          if (it == groups.end()) continue;
          for (State s2 : it->second) {
            auto [ns, gain] = rules.join(s1, s2);
            relax(cur, ns, cell1.value + table[c2].at(s2).value + gain, s1, s2);
          }
        }
        break;
      }
    }
  }
  const int root = nd.root();
  auto it = table[root].find(0);
  if (it == table[root].end()) return std::nullopt;
  std::vector<int> digit(g.order(), -1);
  std::vector<std::pair<int, State>> stack{{root, 0}};
  while (!stack.empty()) {
    auto [u, s] = stack.back();
    stack.pop_back();
    const Cell& cell = table[u].at(s);
    switch (nd.kind[u]) {
      case NiceKind::Leaf:
        break;
      case NiceKind::Introduce:
        stack.push_back({nd.children[u][0], cell.a});
        break;
      case NiceKind::Forget: {
        const int c = nd.children[u][0];
        digit[nd.vertex[u]] = dg.get(cell.a, position(nd.td.bag(c), nd.vertex[u]));
        stack.push_back({c, cell.a});
        break;
      }
      case NiceKind::Join:
        stack.push_back({nd.children[u][0], cell.a});
        stack.push_back({nd.children[u][1], cell.b});
        break;
    }
  }
  return std::pair{it->second.value, std::move(digit)};
}

int max_bag(const NiceDecomposition& nd) { return width(nd.td) + 1; }

Rules stable_rules(const Graph& g, const Digits& dg) {
  Rules r;
  r.base = 2;
  r.maximize = true;
  r.introduce = [&g, &dg](const VertexSet& bag, int pos, State child, const std::function<void(State, long long)>& emit) {
    const Vertex v = bag[pos];
    emit(dg.insert(child, pos, 0), 0);
    for (int i = 0, j = 0; i < static_cast<int>(bag.size()); ++i) {
      if (i == pos) continue;
      if (dg.get(child, j++) == 1 && g.adjacent(v, bag[i])) return;
    }
    emit(dg.insert(child, pos, 1), 1);
  };
  r.may_forget = [](int) { return true; };
  r.join_key = [](State s) { return s; };
  r.join = [](State a, State) { return std::pair<State, long long>{a, -std::popcount(a)}; };
  return r;
}

// Digits: 0 outside and undominated, 1 outside and dominated, 2 in the set.
Rules domination_rules(const Graph& g, const Digits& dg) {
  Rules r;
  r.base = 3;
  r.maximize = false;
  r.introduce = [&g, &dg](const VertexSet& bag, int pos, State child, const std::function<void(State, long long)>& emit) {
    const Vertex v = bag[pos];
    bool seen_by_set = false;
    State in = dg.insert(child, pos, 2);
    for (int i = 0; i < static_cast<int>(bag.size()); ++i) {
      if (i == pos || !g.adjacent(v, bag[i])) continue;
      const int d = dg.get(in, i);
      if (d == 2) seen_by_set = true;
      if (d == 0) in = dg.set(in, i, 1);
    }
    emit(in, 1);
    emit(dg.insert(child, pos, seen_by_set ? 1 : 0), 0);
  };
  r.may_forget = [](int d) { return d != 0; };
  r.join_key = [&dg](State s) {
    State key = 0;
    for (std::size_t p = 0; p + 1 < dg.pow.size() && dg.pow[p] <= s; ++p)
      if (dg.get(s, static_cast<int>(p)) == 2) key |= State{1} << p;
    return key;
  };
  r.join = [&dg](State a, State b) {
    State out = a;
    long long in = 0;
    for (std::size_t p = 0; p + 1 < dg.pow.size() && (dg.pow[p] <= a || dg.pow[p] <= b); ++p) {
      const int da = dg.get(a, static_cast<int>(p)), db = dg.get(b, static_cast<int>(p));
      if (da == 2) ++in;
      else if (db == 1) out = dg.set(out, static_cast<int>(p), 1);
    }
    return std::pair<State, long long>{out, -in};
  };
  return r;
}

Rules coloring_rules(const Graph& g, const Digits& dg, int colors) {
  Rules r;
  r.base = colors;
  r.maximize = true;
  r.introduce = [&g, &dg, colors](const VertexSet& bag, int pos, State child,
                                   const std::function<void(State, long long)>& emit) {
    const Vertex v = bag[pos];
    std::vector<char> used(colors, 0);
    for (int i = 0, j = 0; i < static_cast<int>(bag.size()); ++i) {
      if (i == pos) continue;
      const int d = dg.get(child, j++);
      if (g.adjacent(v, bag[i])) used[d] = 1;
    }
    for (int c = 0; c < colors; ++c)
      if (!used[c]) emit(dg.insert(child, pos, c), 0);
  };
  r.may_forget = [](int) { return true; };
  r.join_key = [](State s) { return s; };
  r.join = [](State a, State) { return std::pair<State, long long>{a, 0}; };
  return r;
}

std::optional<std::vector<int>> color_with(const Graph& g, const NiceDecomposition& nd, int colors) {
  Digits dg(colors, max_bag(nd));
  auto res = run(g, nd, coloring_rules(g, dg, colors), dg);
  if (!res) return std::nullopt;
  return res->second;
}

int distinct(const std::vector<int>& coloring) {
  auto c = coloring;
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

}  // namespace

Solution solve(const Graph& g, const TreeDecomposition& td, Problem problem, int r) {
  const auto nd = make_nice(g, td);
  if (max_bag(nd) > guard_limit(12))
    throw CapabilityError("solve: bag size exceeds the guard of " + std::to_string(guard_limit(12)));
  Solution out;
  out.problem = problem;
  switch (problem) {
    case Problem::StableSet:
    case Problem::VertexCover: {
      Digits dg(2, max_bag(nd));
      auto res = run(g, nd, stable_rules(g, dg), dg);
      VertexSet stable;
      for (Vertex v : g.vertices())
        if (res->second[v] == 1) stable.push_back(v);
      out.set = problem == Problem::StableSet ? stable : set_difference(g.vertices(), stable);
      out.value = static_cast<int>(out.set.size());
      break;
    }
    case Problem::DominatingSet: {
      Digits dg(3, max_bag(nd));
      auto res = run(g, nd, domination_rules(g, dg), dg);
      for (Vertex v : g.vertices())
        if (res->second[v] == 2) out.set.push_back(v);
      out.value = static_cast<int>(out.set.size());
      break;
    }
    case Problem::RColoring: {
      if (r < 1) throw InputError("r-coloring needs r >= 1");
      auto res = g.order() == 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : color_with(g, nd, r);
      out.feasible = res.has_value();
      if (res) {
        out.coloring = *res;
        out.value = distinct(out.coloring);
      }
      break;
    }
    case Problem::Coloring: {
      if (g.order() == 0) break;
      const int top = degeneracy_order(g).degeneracy + 1;
      for (int colors = 1; colors <= top; ++colors)
        if (auto res = color_with(g, nd, colors)) {
          out.coloring = *res;
          out.value = colors;
          break;
        }
      break;
    }
  }
  return out;
}

}  // namespace ehftw
