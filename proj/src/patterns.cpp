#include "ehftw/patterns.hpp"

#include <array>
#include <map>
#include <set>

#include "ehftw/errors.hpp"

namespace ehftw {

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Hole: return "hole";
    case PatternKind::EvenHole: return "even_hole";
    case PatternKind::Theta: return "theta";
    case PatternKind::Prism: return "prism";
    case PatternKind::Pyramid: return "pyramid";
    case PatternKind::GeneralizedKPyramid: return "generalized_k_pyramid";
    case PatternKind::Wheel: return "wheel";
    case PatternKind::Clique: return "clique";
  }
  return "?";
}

std::string to_string(WheelKind k) {
  switch (k) {
    case WheelKind::Proper: return "proper";
    case WheelKind::Even: return "even";
    case WheelKind::Twin: return "twin";
    case WheelKind::Universal: return "universal";
    case WheelKind::ShortPyramid: return "short_pyramid";
  }
  return "?";
}

const std::vector<Vertex>& PatternWitness::role(const std::string& name) const {
  for (const auto& r : roles)
    if (r.name == name) return r.vertices;
  throw InputError("witness has no role '" + name + "'");
}

VertexSet PatternWitness::vertex_set() const {
  std::vector<Vertex> all;
  for (const auto& r : roles) all.insert(all.end(), r.vertices.begin(), r.vertices.end());
  return make_set(std::move(all));
}

PatternWitness WheelWitness::as_pattern() const {
  PatternWitness w;
  w.kind = PatternKind::Wheel;
  w.wheel_kind = subkind;
  w.roles = {{"cycle", hole}, {"center", {center}}};
  return w;
}

WheelFlags classify_wheel(const Graph& g, const std::vector<Vertex>& hole, Vertex x) {
  WheelFlags f;
  const int len = static_cast<int>(hole.size());
  std::vector<int> pos;
  for (int i = 0; i < len; ++i)
    if (g.adjacent(x, hole[i])) pos.push_back(i);
  f.neighbors = static_cast<int>(pos.size());
  if (f.neighbors < 3) return f;
  f.universal = f.neighbors == len;
  f.even = f.neighbors % 2 == 0;
  if (f.neighbors == 3) {
    int edges = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        int d = std::abs(pos[a] - pos[b]);
        if (d == 1 || d == len - 1) ++edges;
      }
    f.twin = edges == 2;
    f.short_pyramid = edges == 1;
  }
  f.proper = !f.twin && !f.short_pyramid;
  return f;
}

bool has_kind(const WheelFlags& f, WheelKind k) {
  if (f.neighbors < 3) return false;
  switch (k) {
    case WheelKind::Proper: return f.proper;
    case WheelKind::Even: return f.even;
    case WheelKind::Twin: return f.twin;
    case WheelKind::Universal: return f.universal;
    case WheelKind::ShortPyramid: return f.short_pyramid;
  }
  return false;
}

// ---------------------------------------------------------------- verifiers

namespace {

using EdgeSet = std::set<Edge>;

void add_path_edges(EdgeSet& es, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) es.insert(std::minmax(p[i], p[i + 1]));
}

void add_cycle_edges(EdgeSet& es, const std::vector<Vertex>& c) {
  add_path_edges(es, c);
  if (c.size() > 2) es.insert(std::minmax(c.front(), c.back()));
}

// The witness graph has vertex set `vs` and its induced edges are exactly `expected`.
bool exact_edges(const Graph& g, const VertexSet& vs, const EdgeSet& expected) {
  for (Vertex v : vs)
    if (!g.valid_vertex(v)) return false;
  for (auto [u, v] : expected)
    if (u == v || !contains(vs, u) || !contains(vs, v) || !g.adjacent(u, v)) return false;
  return edges_within(g, vs) == static_cast<int>(expected.size());
}

bool distinct(const std::vector<Vertex>& v) {
  return make_set(v).size() == v.size();
}

bool valid_hole(const Graph& g, const std::vector<Vertex>& c) {
  if (c.size() < 4 || !distinct(c)) return false;
  EdgeSet es;
  add_cycle_edges(es, c);
  return exact_edges(g, make_set(c), es);
}

const std::vector<Vertex>* find_role(const PatternWitness& w, const std::string& name) {
  for (const auto& r : w.roles)
    if (r.name == name) return &r.vertices;
  return nullptr;
}

// Three paths with the given fixed ends; interiors pairwise disjoint and
// disjoint from `fixed`; returns the union or empty on failure.
std::optional<std::vector<Vertex>> collect_paths(const PatternWitness& w, std::vector<Vertex> fixed,
                                                 const std::vector<Edge>& ends, int min_len) {
  std::vector<Vertex> all = fixed;
  for (int i = 0; i < 3; ++i) {
    const auto* p = find_role(w, "path" + std::to_string(i + 1));
    if (p == nullptr || static_cast<int>(p->size()) - 1 < min_len) return std::nullopt;
    if (p->front() != ends[i].first || p->back() != ends[i].second) return std::nullopt;
    all.insert(all.end(), p->begin() + 1, p->end() - 1);
  }
  if (!distinct(all)) return std::nullopt;
  return all;
}

bool verify_theta(const Graph& g, const PatternWitness& w) {
  const auto* ends = find_role(w, "ends");
  if (ends == nullptr || ends->size() != 2) return false;
  Vertex a = (*ends)[0], b = (*ends)[1];
  auto all = collect_paths(w, {a, b}, {{a, b}, {a, b}, {a, b}}, 2);
  if (!all) return false;
  EdgeSet es;
  for (int i = 1; i <= 3; ++i) add_path_edges(es, w.role("path" + std::to_string(i)));
  return exact_edges(g, make_set(*all), es);
}

bool verify_prism(const Graph& g, const PatternWitness& w) {
  const auto* ta = find_role(w, "triangle_a");
  const auto* tb = find_role(w, "triangle_b");
  if (ta == nullptr || tb == nullptr || ta->size() != 3 || tb->size() != 3) return false;
  std::vector<Vertex> fixed = *ta;
  fixed.insert(fixed.end(), tb->begin(), tb->end());
  auto all = collect_paths(w, fixed, {{(*ta)[0], (*tb)[0]}, {(*ta)[1], (*tb)[1]}, {(*ta)[2], (*tb)[2]}}, 1);
  if (!all) return false;
  EdgeSet es;
  add_cycle_edges(es, *ta);
  add_cycle_edges(es, *tb);
  for (int i = 1; i <= 3; ++i) add_path_edges(es, w.role("path" + std::to_string(i)));
  return exact_edges(g, make_set(*all), es);
}

bool verify_pyramid(const Graph& g, const PatternWitness& w) {
  const auto* apex = find_role(w, "apex");
  const auto* tri = find_role(w, "triangle");
  if (apex == nullptr || tri == nullptr || apex->size() != 1 || tri->size() != 3) return false;
  Vertex z = (*apex)[0];
  std::vector<Vertex> fixed = *tri;
  fixed.push_back(z);
  auto all = collect_paths(w, fixed, {{z, (*tri)[0]}, {z, (*tri)[1]}, {z, (*tri)[2]}}, 1);
  if (!all) return false;
  int short_paths = 0;
  EdgeSet es;
  add_cycle_edges(es, *tri);
  for (int i = 1; i <= 3; ++i) {
    const auto& p = w.role("path" + std::to_string(i));
    if (p.size() == 2) ++short_paths;
    add_path_edges(es, p);
  }
  return short_paths <= 1 && exact_edges(g, make_set(*all), es);
}

bool verify_gkp(const Graph& g, const PatternWitness& w) {
  const int k = w.k;
  const auto* P = find_role(w, "P");
  const auto* Q = find_role(w, "Q");
  const auto* xs = find_role(w, "x");
  const auto* ys = find_role(w, "y");
  const auto* zs = find_role(w, "z");
  if (k < 1 || !P || !Q || !xs || !ys || !zs) return false;
  if (static_cast<int>(xs->size()) != k || static_cast<int>(ys->size()) != k ||
      static_cast<int>(zs->size()) != k)
    return false;
  std::vector<Vertex> cycle = *P;
  cycle.insert(cycle.end(), Q->begin(), Q->end());
  if (Q->empty() || !valid_hole(g, cycle)) return false;
  VertexSet hole = make_set(cycle);
  VertexSet pset = make_set(*P);
  VertexSet qset = make_set(*Q);
  std::vector<const std::vector<Vertex>*> R;
  std::vector<Vertex> all = cycle;
  for (int i = 1; i <= k; ++i) {
    const auto* r = find_role(w, "R" + std::to_string(i));
    if (!r || r->empty()) return false;
    R.push_back(r);
    all.insert(all.end(), r->begin(), r->end());
  }
  if (!distinct(all)) return false;
  auto pos_in = [](const std::vector<Vertex>& seq, Vertex v) {
    return static_cast<int>(std::find(seq.begin(), seq.end(), v) - seq.begin());
  };
  const int plen = static_cast<int>(P->size());
  std::vector<int> ppos;
  std::vector<int> zpos;
  for (int i = 0; i < k; ++i) {
    const auto& r = *R[i];
    EdgeSet es;
    add_path_edges(es, r);
    if (!exact_edges(g, make_set(r), es)) return false;  // induced path
    Vertex a = r.front(), b = r.back();
    Vertex x = (*xs)[i], y = (*ys)[i], z = (*zs)[i];
    if (!g.adjacent(x, y)) return false;
    int px = pos_in(*P, x), py = pos_in(*P, y);
    if (px <= 0 || py <= 0 || px >= plen - 1 || py >= plen - 1) return false;  // x, y in P*
    if (set_intersection(g.neighbors(a), pset) != make_set({x, y})) return false;
    if (set_intersection(g.neighbors(b), qset) != VertexSet{z}) return false;
    // Strict attachment: a sees Q only when a = b, b sees P only when a = b.
    if (a != b && (intersects(g.neighbors(a), qset) || intersects(g.neighbors(b), pset))) return false;
    VertexSet inner = r.size() > 2 ? make_set(std::vector<Vertex>(r.begin() + 1, r.end() - 1)) : VertexSet{};
    if (!inner.empty() && !anticomplete(g, inner, hole)) return false;
    ppos.push_back(px);
    ppos.push_back(py);
    zpos.push_back(pos_in(*Q, z));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!anticomplete(g, make_set(*R[i]), make_set(*R[j]))) return false;
  bool inc = true, dec = true;
  for (std::size_t i = 0; i + 1 < ppos.size(); ++i) {
    inc = inc && ppos[i] < ppos[i + 1];
    dec = dec && ppos[i] > ppos[i + 1];
  }
  if (!inc && !dec) return false;  // distinctness of all x_i, y_i follows from strictness
  bool zinc = true, zdec = true;
  for (std::size_t i = 0; i + 1 < zpos.size(); ++i) {
    zinc = zinc && zpos[i] <= zpos[i + 1];
    zdec = zdec && zpos[i] >= zpos[i + 1];
  }
  return zinc || zdec;
}

}  // namespace

bool verify_wheel(const Graph& g, const WheelWitness& w) {
  if (!valid_hole(g, w.hole) || !g.valid_vertex(w.center)) return false;
  if (std::find(w.hole.begin(), w.hole.end(), w.center) != w.hole.end()) return false;
  return has_kind(classify_wheel(g, w.hole, w.center), w.subkind);
}

bool verify_witness(const Graph& g, const PatternWitness& w) {
  switch (w.kind) {
    case PatternKind::Hole: {
      const auto* c = find_role(w, "cycle");
      return c && valid_hole(g, *c);
    }
    case PatternKind::EvenHole: {
      const auto* c = find_role(w, "cycle");
      return c && c->size() % 2 == 0 && valid_hole(g, *c);
    }
    case PatternKind::Theta: return verify_theta(g, w);
    case PatternKind::Prism: return verify_prism(g, w);
    case PatternKind::Pyramid: return verify_pyramid(g, w);
    case PatternKind::GeneralizedKPyramid: return verify_gkp(g, w);
    case PatternKind::Wheel: {
      const auto* c = find_role(w, "cycle");
      const auto* x = find_role(w, "center");
      if (!c || !x || x->size() != 1) return false;
      return verify_wheel(g, WheelWitness{*c, (*x)[0], w.wheel_kind});
    }
    case PatternKind::Clique: {
      const auto* c = find_role(w, "clique");
      return c && distinct(*c) && std::all_of(c->begin(), c->end(), [&](Vertex v) { return g.valid_vertex(v); }) &&
             is_clique(g, make_set(*c));
    }
  }
  return false;
}

// ---------------------------------------------------------------- holes

namespace detail {

bool hole_dfs(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on, int target_len,
              const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const Vertex s = path.front();
  const Vertex last = path.back();
  const int len = static_cast<int>(path.size());
  for (Vertex w : g.neighbors(last)) {
    if (w <= s || on[w]) continue;
    bool ok = true;
    for (int i = 1; i + 1 < len && ok; ++i) ok = !g.adjacent(w, path[i]);
    if (!ok) continue;
    const bool closes = len > 1 && g.adjacent(w, s);
    if (closes) {
      if (len + 1 == target_len && path[1] < w) {
        path.push_back(w);
        bool stop = visit(path);
        path.pop_back();
        if (stop) return true;
      }
      continue;
    }
    if (len + 1 >= target_len) continue;
    path.push_back(w);
    on[w] = 1;
    bool stop = hole_dfs(g, path, on, target_len, visit);
    on[w] = 0;
    path.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

std::optional<PatternWitness> find_hole(const Graph& g, Parity parity, int min_len, int max_len) {
  if (min_len < 4) throw InputError("find_hole needs min_len >= 4");
  std::optional<PatternWitness> out;
  for_each_hole(g, min_len, max_len, [&](const std::vector<Vertex>& c) {
    const bool even = c.size() % 2 == 0;
    if ((parity == Parity::Even && !even) || (parity == Parity::Odd && even)) return false;
    PatternWitness w;
    w.kind = parity == Parity::Even ? PatternKind::EvenHole : PatternKind::Hole;
    w.roles = {{"cycle", c}};
    out = std::move(w);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------- linkages

namespace {

// Grows induced paths between fixed terminals so that the union of the
// terminals and the paths has no edges besides the terminals' own edges and
// the path edges. Used for theta, prism and pyramid.
class LinkageSearch {
 public:
  struct Link {
    Vertex from, to;
    int min_len;
  };

  LinkageSearch(const Graph& g, const VertexSet& fixed, std::vector<Link> links, bool ordered_firsts)
      : g_(g), links_(std::move(links)), ordered_firsts_(ordered_firsts), used_(g.order(), 0),
        used_nbrs_(g.order(), 0), paths_(links_.size()) {
    for (Vertex v : fixed) place(v);
  }

  // Finds paths using at most `budget` interior vertices in total.
  bool solve(int budget) {
    budget_ = budget;
    for (auto& p : paths_) p.clear();
    return link(0, 0);
  }

  const std::vector<std::vector<Vertex>>& paths() const { return paths_; }

 private:
  void place(Vertex v) {
    used_[v] = 1;
    for (Vertex w : g_.neighbors(v)) ++used_nbrs_[w];
  }
  void unplace(Vertex v) {
    used_[v] = 0;
    for (Vertex w : g_.neighbors(v)) --used_nbrs_[w];
  }

  int lower_bound_from(std::size_t i) const {
    int need = 0;
    for (std::size_t j = i; j < links_.size(); ++j)
      if (!g_.adjacent(links_[j].from, links_[j].to)) need += std::max(1, links_[j].min_len - 1);
    return need;
  }

  bool link(std::size_t i, int spent) {
    if (i == links_.size()) return true;
    const Link& l = links_[i];
    if (g_.adjacent(l.from, l.to)) {
      if (l.min_len > 1) return false;
      paths_[i] = {l.from, l.to};
      return link(i + 1, spent);
    }
    if (spent + lower_bound_from(i) > budget_) return false;
    paths_[i] = {l.from};
    return extend(i, spent);
  }

  bool extend(std::size_t i, int spent) {
    const Link& l = links_[i];
    auto& path = paths_[i];
    const Vertex c = path.back();
    const int interior = static_cast<int>(path.size()) - 1;
    for (Vertex w : g_.neighbors(c)) {
      if (used_[w]) continue;
      if (interior == 0 && ordered_firsts_ && i > 0 && paths_[i - 1].size() > 2 && w <= paths_[i - 1][1])
        continue;
      const bool closes = g_.adjacent(w, l.to);
      if (used_nbrs_[w] != 1 + (closes ? 1 : 0)) continue;
      if (closes) {
        if (interior + 2 < l.min_len) continue;
        path.push_back(w);
        place(w);
        path.push_back(l.to);
        bool ok = spent + 1 + lower_bound_from(i + 1) <= budget_ && link(i + 1, spent + 1);
        if (ok) return true;
        path.pop_back();
        unplace(w);
        path.pop_back();
        continue;
      }
      if (spent + 1 + 1 + lower_bound_from(i + 1) > budget_) continue;
      path.push_back(w);
      place(w);
      if (extend(i, spent + 1)) return true;
      unplace(w);
      path.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Link> links_;
  bool ordered_firsts_;
  std::vector<char> used_;
  std::vector<int> used_nbrs_;
  std::vector<std::vector<Vertex>> paths_;
  int budget_ = 0;
};

// A search instance: terminals plus links, realized at some budget.
struct LinkageCase {
  VertexSet fixed;
  std::vector<LinkageSearch::Link> links;
  bool ordered_firsts = false;
  std::function<PatternWitness(const std::vector<std::vector<Vertex>>&)> build;
};

// Smallest realization over all cases (fewest interior vertices, then case order).
std::optional<PatternWitness> smallest_linkage(const Graph& g, const std::vector<LinkageCase>& cases) {
  const int max_budget = g.order();
  std::vector<char> alive(cases.size(), 0);
  bool any = false;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    LinkageSearch s(g, cases[c].fixed, cases[c].links, cases[c].ordered_firsts);
    alive[c] = s.solve(max_budget) ? 1 : 0;
    any = any || alive[c];
  }
  if (!any) return std::nullopt;
  for (int budget = 0; budget <= max_budget; ++budget)
    for (std::size_t c = 0; c < cases.size(); ++c) {
      if (!alive[c]) continue;
      LinkageSearch s(g, cases[c].fixed, cases[c].links, cases[c].ordered_firsts);
      if (s.solve(budget)) return cases[c].build(s.paths());
    }
  return std::nullopt;
}

void check_guard(const Graph& g, int default_limit, const char* what) {
  if (g.order() > guard_limit(default_limit))
    throw CapabilityError(std::string(what) + ": graph exceeds the size guard of " +
                          std::to_string(guard_limit(default_limit)) + " vertices");
}

std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b))
        if (c > b && g.adjacent(a, c)) out.push_back({a, b, c});
    }
  return out;
}

void name_paths(PatternWitness& w, const std::vector<std::vector<Vertex>>& paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) w.roles.push_back({"path" + std::to_string(i + 1), paths[i]});
}

}  // namespace

std::optional<PatternWitness> find_theta(const Graph& g) {
  check_guard(g, 24, "find_theta");
  std::vector<LinkageCase> cases;
  for (Vertex a = 0; a < g.order(); ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (g.degree(b) < 3 || g.adjacent(a, b)) continue;
      LinkageCase c;
      c.fixed = {a, b};
      c.links = {{a, b, 2}, {a, b, 2}, {a, b, 2}};
      c.ordered_firsts = true;
      c.build = [a, b](const std::vector<std::vector<Vertex>>& paths) {
        PatternWitness w;
        w.kind = PatternKind::Theta;
        w.roles = {{"ends", {a, b}}};
        name_paths(w, paths);
        return w;
      };
      cases.push_back(std::move(c));
    }
  }
  return smallest_linkage(g, cases);
}

std::optional<PatternWitness> find_prism(const Graph& g) {
  check_guard(g, 24, "find_prism");
  auto tris = triangles(g);
  std::vector<LinkageCase> cases;
  for (const auto& ta : tris)
    for (const auto& tb0 : tris) {
      if (tb0[0] <= ta[0]) continue;
      if (intersects(VertexSet(ta.begin(), ta.end()), VertexSet(tb0.begin(), tb0.end()))) continue;
      std::array<Vertex, 3> tb = tb0;
      do {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          for (int j = 0; j < 3 && ok; ++j)
            if (i != j && g.adjacent(ta[i], tb[j])) ok = false;
        if (!ok) continue;
        LinkageCase c;
        c.fixed = make_set({ta[0], ta[1], ta[2], tb[0], tb[1], tb[2]});
        c.links = {{ta[0], tb[0], 1}, {ta[1], tb[1], 1}, {ta[2], tb[2], 1}};
        c.build = [ta, tb](const std::vector<std::vector<Vertex>>& paths) {
          PatternWitness w;
          w.kind = PatternKind::Prism;
          w.roles = {{"triangle_a", {ta.begin(), ta.end()}}, {"triangle_b", {tb.begin(), tb.end()}}};
          name_paths(w, paths);
          return w;
        };
        cases.push_back(std::move(c));
      } while (std::next_permutation(tb.begin(), tb.end()));
    }
  return smallest_linkage(g, cases);
}

std::optional<PatternWitness> find_pyramid(const Graph& g) {
  check_guard(g, 24, "find_pyramid");
  auto tris = triangles(g);
  std::vector<LinkageCase> cases;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (g.degree(z) < 3) continue;
    for (const auto& t : tris) {
      int hits = 0;
      bool inside = false;
      for (Vertex v : t) {
        inside = inside || v == z;
        hits += g.adjacent(z, v) ? 1 : 0;
      }
      if (inside || hits > 1) continue;
      LinkageCase c;
      c.fixed = make_set({z, t[0], t[1], t[2]});
      c.links = {{z, t[0], 1}, {z, t[1], 1}, {z, t[2], 1}};
      c.build = [z, t](const std::vector<std::vector<Vertex>>& paths) {
        PatternWitness w;
        w.kind = PatternKind::Pyramid;
        w.roles = {{"apex", {z}}, {"triangle", {t.begin(), t.end()}}};
        name_paths(w, paths);
        return w;
      };
      cases.push_back(std::move(c));
    }
  }
  return smallest_linkage(g, cases);
}

// ---------------------------------------------------------------- wheels

std::optional<PatternWitness> find_even_wheel(const Graph& g) {
  std::optional<PatternWitness> out;
  for_each_hole(g, 4, 0, [&](const std::vector<Vertex>& c) {
    std::vector<char> on(g.order(), 0);
    for (Vertex v : c) on[v] = 1;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (on[x]) continue;
      auto f = classify_wheel(g, c, x);
      if (f.neighbors >= 4 && f.even) {
        out = WheelWitness{c, x, WheelKind::Even}.as_pattern();
        return true;
      }
    }
    return false;
  });
  return out;
}

std::vector<WheelWitness> find_wheels(const Graph& g) {
  std::map<std::pair<Vertex, WheelKind>, WheelWitness> found;
  constexpr WheelKind kinds[] = {WheelKind::Proper, WheelKind::Even, WheelKind::Twin, WheelKind::Universal,
                                 WheelKind::ShortPyramid};
  for_each_hole(g, 4, 0, [&](const std::vector<Vertex>& c) {
    std::vector<char> on(g.order(), 0);
    for (Vertex v : c) on[v] = 1;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (on[x]) continue;
      auto f = classify_wheel(g, c, x);
      for (WheelKind k : kinds)
        if (has_kind(f, k)) found.try_emplace({x, k}, WheelWitness{c, x, k});
    }
    return false;
  });
  std::vector<WheelWitness> out;
  for (auto& [key, w] : found) out.push_back(std::move(w));
  return out;
}

VertexSet hubs(const Graph& g) {
  std::vector<char> hub(g.order(), 0);
  int candidates = 0;
  for (Vertex v = 0; v < g.order(); ++v) candidates += g.degree(v) >= 3 ? 1 : 0;
  int found = 0;
  if (candidates > 0) {
    for_each_hole(g, 4, 0, [&](const std::vector<Vertex>& c) {
      std::vector<char> on(g.order(), 0);
      for (Vertex v : c) on[v] = 1;
      for (Vertex x = 0; x < g.order(); ++x) {
        if (on[x] || hub[x] || g.degree(x) < 3) continue;
        if (classify_wheel(g, c, x).proper) {
          hub[x] = 1;
          ++found;
        }
      }
      return found == candidates;
    });
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hub[v]) out.push_back(v);
  return out;
}

bool is_hub(const Graph& g, Vertex v) {
  if (g.degree(v) < 3) return false;
  auto rest = induced(g, without(g.vertices(), v));
  return for_each_hole(rest.graph, 4, 0, [&](const std::vector<Vertex>& c) {
    std::vector<Vertex> host;
    for (Vertex u : c) host.push_back(rest.to_host[u]);
    return classify_wheel(g, host, v).proper;
  });
}

// ---------------------------------------------------------------- cliques

namespace {

bool grow_clique(const Graph& g, std::vector<Vertex>& cur, const VertexSet& cand, int size) {
  if (static_cast<int>(cur.size()) == size) return true;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (static_cast<int>(cur.size() + cand.size() - i) < size) return false;
    Vertex v = cand[i];
    VertexSet next;
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
    cur.push_back(v);
    if (grow_clique(g, cur, next, size)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PatternWitness> find_clique(const Graph& g, int size) {
  if (size <= 0) return PatternWitness{PatternKind::Clique, 0, WheelKind::Proper, {{"clique", {}}}};
  std::vector<Vertex> cur;
  if (!grow_clique(g, cur, g.vertices(), size)) return std::nullopt;
  return PatternWitness{PatternKind::Clique, 0, WheelKind::Proper, {{"clique", cur}}};
}

// ---------------------------------------------------------------- generalized k-pyramids

namespace {

class KPyramidSearch {
 public:
  KPyramidSearch(const Graph& g, int k) : g_(g), k_(k), pos_p_(g.order()), pos_q_(g.order()) {}

  std::optional<PatternWitness> run() {
    std::optional<PatternWitness> out;
    for_each_hole(g_, std::max(4, 2 * k_ + 3), 0, [&](const std::vector<Vertex>& c) {
      const int len = static_cast<int>(c.size());
      for (int plen = 2 * k_ + 2; plen < len; ++plen)
        for (int start = 0; start < len; ++start) {
          P_.clear();
          Q_.clear();
          for (int i = 0; i < plen; ++i) P_.push_back(c[(start + i) % len]);
          for (int i = plen; i < len; ++i) Q_.push_back(c[(start + i) % len]);
          if (try_split(c)) {
            out = build();
            return true;
          }
        }
      return false;
    });
    return out;
  }

 private:
  enum Type { kNone, kAnti, kA, kB, kAB };

  bool try_split(const std::vector<Vertex>& cycle) {
    const int n = g_.order();
    std::fill(pos_p_.begin(), pos_p_.end(), -1);
    std::fill(pos_q_.begin(), pos_q_.end(), -1);
    for (int i = 0; i < static_cast<int>(P_.size()); ++i) pos_p_[P_[i]] = i;
    for (int i = 0; i < static_cast<int>(Q_.size()); ++i) pos_q_[Q_[i]] = i;
    type_.assign(n, kNone);
    pair_.assign(n, -1);
    zq_.assign(n, -1);
    std::vector<char> on(n, 0);
    for (Vertex v : cycle) on[v] = 1;
    const int plen = static_cast<int>(P_.size());
    bool any_a = false;
    for (Vertex v = 0; v < n; ++v) {
      if (on[v]) continue;
      std::vector<int> ps, qs;
      for (Vertex w : g_.neighbors(v)) {
        if (pos_p_[w] >= 0) ps.push_back(pos_p_[w]);
        if (pos_q_[w] >= 0) qs.push_back(pos_q_[w]);
      }
      std::sort(ps.begin(), ps.end());
      const bool pair_ok = ps.size() == 2 && ps[1] == ps[0] + 1 && ps[0] >= 1 && ps[1] <= plen - 2;
      if (ps.empty() && qs.empty()) {
        type_[v] = kAnti;
      } else if (pair_ok && qs.empty()) {
        type_[v] = kA;
      } else if (ps.empty() && qs.size() == 1) {
        type_[v] = kB;
      } else if (pair_ok && qs.size() == 1) {
        type_[v] = kAB;
      }
      if (pair_ok) pair_[v] = ps[0];
      if (qs.size() == 1) zq_[v] = qs[0];
      any_a = any_a || type_[v] == kA || type_[v] == kAB;
    }
    if (!any_a) return false;
    R_.clear();
    blocked_.assign(n, 0);
    return choose(0, 0, 0);
  }

  // dir: 0 unknown, 1 non-decreasing z, -1 non-increasing z.
  bool choose(int index, int min_pair, int dir) {
    if (index == k_) return true;
    const int plen = static_cast<int>(P_.size());
    for (int p = min_pair; p + 2 * (k_ - index) <= plen - 1; ++p) {
      for (Vertex a = 0; a < g_.order(); ++a) {
        if (pair_[a] != p || blocked_[a] || (type_[a] != kA && type_[a] != kAB)) continue;
        std::vector<Vertex> path{a};
        if (type_[a] == kAB && accept(path, index, p, dir)) return true;
        if (type_[a] == kA && grow(path, index, p, dir)) return true;
      }
    }
    return false;
  }

  bool accept(std::vector<Vertex>& path, int index, int p, int dir) {
    const int z = zq_[path.back()];
    int ndir = dir;
    if (!R_.empty()) {
      const int prev = zq_[R_.back().back()];
      if (z > prev) ndir = dir == -1 ? 2 : 1;
      if (z < prev) ndir = dir == 1 ? 2 : -1;
    }
    if (ndir == 2) return false;
    R_.push_back(path);
    for (Vertex v : path)
      for (Vertex w : g_.neighbors(v)) ++blocked_[w];
    for (Vertex v : path) ++blocked_[v];
    if (choose(index + 1, p + 2, ndir)) return true;
    for (Vertex v : path)
      for (Vertex w : g_.neighbors(v)) --blocked_[w];
    for (Vertex v : path) --blocked_[v];
    R_.pop_back();
    return false;
  }

  // Extends an induced path from an A-vertex through anticomplete vertices to a B-vertex.
  bool grow(std::vector<Vertex>& path, int index, int p, int dir) {
    const Vertex last = path.back();
    for (Vertex w : g_.neighbors(last)) {
      if (blocked_[w] || (type_[w] != kAnti && type_[w] != kB)) continue;
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = g_.adjacent(w, path[i]);
      if (chord) continue;
      path.push_back(w);
      bool ok = type_[w] == kB ? accept(path, index, p, dir) : grow(path, index, p, dir);
      path.pop_back();
      if (ok) return true;
    }
    return false;
  }

  PatternWitness build() const {
    PatternWitness w;
    w.kind = PatternKind::GeneralizedKPyramid;
    w.k = k_;
    w.roles = {{"P", P_}, {"Q", Q_}};
    std::vector<Vertex> xs, ys, zs;
    for (int i = 0; i < k_; ++i) {
      w.roles.push_back({"R" + std::to_string(i + 1), R_[i]});
      xs.push_back(P_[pair_[R_[i].front()]]);
      ys.push_back(P_[pair_[R_[i].front()] + 1]);
      zs.push_back(Q_[zq_[R_[i].back()]]);
    }
    w.roles.push_back({"x", xs});
    w.roles.push_back({"y", ys});
    w.roles.push_back({"z", zs});
    return w;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> P_, Q_;
  std::vector<int> pos_p_, pos_q_;
  std::vector<int> type_, pair_, zq_;
  std::vector<int> blocked_;
  std::vector<std::vector<Vertex>> R_;
};

}  // namespace

std::optional<PatternWitness> find_generalized_k_pyramid(const Graph& g, int k) {
  if (k < 1) throw InputError("generalized k-pyramid needs k >= 1");
  check_guard(g, 18, "find_generalized_k_pyramid");
  if (g.order() < 3 * k + 3) return std::nullopt;
  return KPyramidSearch(g, k).run();
}

// ---------------------------------------------------------------- classes

std::optional<PatternWitness> find_class_C_obstruction(const Graph& g) {
  if (auto c4 = find_hole(g, Parity::Any, 4, 4)) return c4;
  if (auto w = find_theta(g)) return w;
  if (auto w = find_prism(g)) return w;
  if (auto w = find_even_wheel(g)) return w;
  return std::nullopt;
}

ClassReport class_membership(const Graph& g, int t) {
  if (t < 1) throw InputError("class_membership needs t >= 1");
  ClassReport r;
  auto block = [&](std::optional<PatternWitness> w, const char* name) {
    r.blocking_witness = std::move(w);
    r.blocking = name;
    return r;
  };
  if (auto w = find_hole(g, Parity::Any, 4, 4)) return block(std::move(w), "C4");
  if (auto w = find_theta(g)) return block(std::move(w), "theta");
  if (auto w = find_prism(g)) return block(std::move(w), "prism");
  if (auto w = find_even_wheel(g)) return block(std::move(w), "even wheel");
  r.in_C = true;
  if (auto w = find_clique(g, t)) return block(std::move(w), "clique");
  r.in_C_t = true;
  if (auto w = find_generalized_k_pyramid(g, t)) return block(std::move(w), "generalized pyramid");
  r.in_C_tt = true;
  return r;
}

// ---------------------------------------------------------------- k-blocks

bool is_k_block(const Graph& g, const VertexSet& b, int k) {
  if (static_cast<int>(b.size()) < k) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!g.adjacent(b[i], b[j]) && local_connectivity(g, b[i], b[j], k) < k) return false;
  return true;
}

namespace {

void bron_kerbosch(const std::vector<std::vector<char>>& adj, VertexSet& r, VertexSet p, VertexSet x,
                   VertexSet& best) {
  if (p.empty() && x.empty()) {
    if (r.size() > best.size() || (r.size() == best.size() && r < best)) best = r;
    return;
  }
  if (r.size() + p.size() < best.size()) return;
  Vertex pivot = !p.empty() ? p.front() : x.front();
  for (Vertex u : set_union(p, x)) {
    int cnt = 0;
    for (Vertex v : p) cnt += adj[u][v];
    int best_cnt = 0;
    for (Vertex v : p) best_cnt += adj[pivot][v];
    if (cnt > best_cnt) pivot = u;
  }
  for (Vertex v : VertexSet(p)) {
    if (adj[pivot][v]) continue;
    VertexSet np, nx;
    for (Vertex w : p)
      if (adj[v][w]) np.push_back(w);
    for (Vertex w : x)
      if (adj[v][w]) nx.push_back(w);
    r = with(r, v);
    bron_kerbosch(adj, r, np, nx, best);
    r = without(r, v);
    p = without(p, v);
    x = with(x, v);
  }
}

}  // namespace

std::optional<VertexSet> find_k_block(const Graph& g, int k) {
  if (k < 1) throw InputError("find_k_block needs k >= 1");
  const int n = g.order();
  std::vector<std::vector<char>> link(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      link[u][v] = link[v][u] = g.adjacent(u, v) || local_connectivity(g, u, v, k) >= k;
  // Peel vertices that cannot lie in a clique of size k, to a fixed point.
  std::vector<char> alive(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      int deg = 0;
      for (Vertex w = 0; w < n; ++w) deg += alive[w] && link[v][w];
      if (deg < k - 1) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  VertexSet p;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) p.push_back(v);
  VertexSet r, best;
  bron_kerbosch(link, r, p, {}, best);
  if (static_cast<int>(best.size()) < k) return std::nullopt;
  return best;
}

}  // namespace ehftw
