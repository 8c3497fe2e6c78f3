#include <doctest.h>

#include <cmath>
#include <random>

#include "ehftw/corpus.hpp"
#include "ehftw/decomposer.hpp"
#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/lean.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/pmc.hpp"
#include "ehftw/testing/oracles.hpp"

using namespace ehftw;

namespace {

// Odd hole 0..len-1 and a hub `len` adjacent to `nb`.
Graph hole_with_hub(int len, const std::vector<Vertex>& nb) {
  std::vector<Edge> e;
  for (int i = 0; i < len; ++i) e.push_back({i, (i + 1) % len});
  for (Vertex v : nb) e.push_back({v, len});
  return Graph(len + 1, e);
}

// Tight td of hole_with_hub(17, {0,3,6}) centred at node 0.
TreeDecomposition gadget_td() {
  TreeDecomposition td;
  td.add_node({0, 3, 6, 17});
  td.add_node({0, 1, 2, 3});
  td.add_node({3, 4, 5, 6});
  td.add_edge(0, 1);
  td.add_edge(0, 2);
  int prev = 0;
  for (Vertex v = 6; v < 16; ++v) {
    int node = td.add_node({0, v, v + 1});
    td.add_edge(prev, node);
    prev = node;
  }
  return td;
}

bool stable_layering_ok(const Graph& g, const VertexSet& x, const HubPartition& p, int d) {
  VertexSet all, later;
  for (const auto& s : p.parts) {
    if (s.empty() || !is_stable(g, s) || intersects(all, s)) return false;
    all = set_union(all, s);
  }
  if (all != x) return false;
  for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
    later = set_union(later, *it);
    for (Vertex v : *it)
      if (static_cast<int>(set_intersection(g.neighbors(v), later).size()) > d) return false;
  }
  return true;
}

TreeDecomposition exact_on(const Graph& g, const VertexSet& x) {
  if (x.empty()) return {};
  return lift(exact_treewidth(induced(g, x).graph).td, x);
}

}  // namespace

TEST_CASE("params validation and the width formula") {
  Params p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.delta() == 19);
  CHECK(p.psi() == 8);
  CHECK(p.theory_m() == 13);
  CHECK(p.beta_bound() == 16);
  CHECK(p.width_formula(8, 1) == doctest::Approx(612));
  Params bad = p;
  bad.m = 2;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = p;
  bad.tau = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = p;
  bad.beta_separator_bound = 3;
  CHECK(bad.beta_bound() == 3);
}

TEST_CASE("stable layering") {
  const Graph c6 = gen::cycle(6);
  auto p = stable_layering(c6, c6.vertices(), 2);
  CHECK(p.order() >= 1);
  CHECK(p.order() <= 3);
  CHECK(stable_layering_ok(c6, c6.vertices(), p, 2));
  CHECK_THROWS_AS(stable_layering(c6, c6.vertices(), 1), CapabilityError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Graph g = gen::erdos_renyi(12, 0.4, rng);
    int d = degeneracy_order(g).degeneracy;
    auto q = stable_layering(g, g.vertices(), d);
    CHECK(stable_layering_ok(g, g.vertices(), q, d));
  }
}

TEST_CASE("hub partition") {
  std::mt19937_64 rng(3);
  Graph chordal = gen::random_chordal(10, 4, rng);
  CHECK(hub_partition(chordal, 6).order() == 0);

  Graph w = hole_with_hub(9, {0, 3, 6});
  REQUIRE(hubs(w) == VertexSet{9});
  auto p = hub_partition(w, 6);
  CHECK(p.order() == 1);
  CHECK(is_hub_partition(w, p, 6));
}

TEST_CASE("build_conn examples") {
  const Graph p5 = gen::path(5);
  TreeDecomposition path_td;
  for (Vertex v = 0; v < 4; ++v) path_td.add_node({v, v + 1});
  for (int i = 0; i < 3; ++i) path_td.add_edge(i, i + 1);
  CHECK(build_conn(p5, path_td, 1, 2) == VertexSet{2, 3});
  CHECK(build_conn(p5, path_td, 2, 1) == VertexSet{1, 2});

  const Graph c6 = gen::cycle(6);
  TreeDecomposition td;
  td.add_node({0, 3, 4, 5});
  td.add_node({0, 1, 2, 3});
  td.add_edge(0, 1);
  CHECK(build_conn(c6, td, 0, 1) == VertexSet{0, 1, 2, 3});
  CHECK(build_conn(c6, td, 1, 0) == VertexSet{0, 3, 4, 5});

  TreeDecomposition loose;
  loose.add_node({0, 1, 2});
  loose.add_node({0, 1, 2});
  loose.add_edge(0, 1);
  CHECK_THROWS_AS(build_conn(gen::path(3), loose, 0, 1), InputError);
  CHECK_THROWS_AS(build_conn(p5, path_td, 0, 2), InputError);
}

TEST_CASE("build_conn minimality on random hosts") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    Graph g = gen::random_wheel_extension(10 + i % 3, 0.3, rng);
    if (!is_connected(g)) continue;
    auto td = refine_to_lean(g, 3);
    for (auto [a, b] : td.edges())
      for (auto [t0, t1] : {std::pair{a, b}, std::pair{b, a}}) {
        const VertexSet conn = build_conn(g, td, t0, t1);
        const VertexSet m = td.adhesion_set(t0, t1);
        const VertexSet side = set_difference(td.branch_vertices(t0, t1), td.bag(t0));
        const VertexSet k = set_difference(conn, m);
        REQUIRE(is_subset(m, conn));
        CHECK(is_subset(k, side));
        if (m.empty()) continue;
        CHECK(is_connected(g, k));
        CHECK(set_difference(open_neighborhood(g, k), side) == m);
        REQUIRE(k.size() <= 14);
        // no proper connected subset of K sees all of M
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k.size()); ++mask) {
          VertexSet sub;
          for (std::size_t j = 0; j < k.size(); ++j)
            if (mask >> j & 1U) sub.push_back(k[j]);
          if (is_connected(g, sub)) CHECK_FALSE(is_subset(m, open_neighborhood(g, sub)));
        }
        ++checked;
      }
  }
  CHECK(checked > 20);
}

TEST_CASE("star twins enter the core in order") {
  std::map<Vertex, StarSeparation> stars;
  stars[1] = {1, {2, 5}, {1, 3}, {4}};
  stars[2] = {2, {1, 5}, {2, 3}, {4}};
  auto up = a_order_core(stars, {1, 2});
  CHECK(up.partial_order);
  CHECK(up.core == VertexSet{1});
  auto down = a_order_core(stars, {2, 1});
  CHECK(down.partial_order);
  CHECK(down.core == VertexSet{2});

  stars[6] = {6, {7}, {6, 8}, {1, 2, 3, 4, 5}};
  auto three = a_order_core(stars, {1, 2, 6});
  CHECK(three.core == VertexSet{1, 6});
  CHECK_THROWS_AS(a_order_core(stars, {1, 2}), InputError);
}

TEST_CASE("central bag on the long hole gadget") {
  const Graph g = hole_with_hub(17, {0, 3, 6});
  const TreeDecomposition td = gadget_td();
  REQUIRE(validate(g, td).valid());
  REQUIRE(is_tight(g, td).tight);
  Params p;
  p.beta_separator_bound = 0;

  auto st = central_bag(g, td, 0, {17}, p);
  CHECK(st.complete);
  CHECK(st.s_bad.empty());
  CHECK(st.beta == g.vertices());
  CHECK(st.conn.at(1) == VertexSet{0, 1, 2, 3});
  CHECK(st.conn.at(2) == VertexSet{3, 4, 5, 6});
  CHECK(st.core == VertexSet{17});
  const auto& star = st.stars.at(17);
  CHECK(st.beta_a == set_union(star.B, star.C));
  CHECK(is_subset(star.C, st.beta_a));
  REQUIRE(st.components.size() == 1);
  CHECK(st.components[0] == VertexSet{1, 2, 3, 4, 5});
  CHECK(st.anchors == std::vector<Vertex>{17});

  auto td0 = to_structured(induced(g, st.beta_a).graph, exact_treewidth(induced(g, st.beta_a).graph).td);
  td0 = lift(td0, st.beta_a);
  std::vector<TreeDecomposition> comps;
  for (const auto& d : st.components) comps.push_back(exact_on(g, d));
  auto td_beta = assemble_beta(g, st, td0, comps, p);
  CHECK(validate(g, td_beta).valid());

  std::vector<TreeDecomposition> branches;
  for (int t1 : td.tree_neighbors(0)) branches.push_back(exact_on(g, set_difference(td.branch_vertices(0, t1), td.bag(0))));
  auto global = assemble_global(g, td, st, to_structured(g, td_beta), branches);
  CHECK(validate(g, global).valid());
  // hole plus hub has a K4 minor and treewidth 3
  CHECK(width(global) <= 3 + 2 * p.m);

  SUBCASE("empty S' leaves beta untouched") {
    auto e = central_bag(g, td, 0, {}, p);
    CHECK(e.core.empty());
    CHECK(e.beta_a == e.beta);
    CHECK(e.components.empty());
  }
  SUBCASE("the default bound sends beta to the separator branch") {
    CHECK_THROWS_AS(central_bag(g, td, 0, {17}, Params{}), InputError);
  }
  SUBCASE("component count mismatch") {
    CHECK_THROWS_AS(assemble_beta(g, st, td0, {}, p), InputError);
  }
}

TEST_CASE("decompose on chordal graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    Graph g = gen::random_chordal(6 + i % 9, 3, rng);
    auto r = decompose(g);
    CHECK(validate(g, r.td).valid());
    int omega = 0;
    for (const auto& c : chordal_maximal_cliques(g)) omega = std::max<int>(omega, static_cast<int>(c.size()));
    CHECK(r.width == omega - 1);
    CHECK(r.hub_order == 0);
    CHECK(r.trace.front().branch == "no-hubs");
  }
}

TEST_CASE("decompose glues along a clique cutset") {
  const Graph a = hole_with_hub(9, {0, 3, 6});
  const Graph b = hole_with_hub(7, {0, 2, 4});
  REQUIRE(class_membership(a, 4).in_C_tt);
  const Graph g = gen::glue(a, {0, 9}, a, {0, 9});
  REQUIRE(class_membership(g, 4).in_C_tt);
  auto r = decompose(g);
  CHECK(validate(g, r.td).valid());
  CHECK(r.trace.front().branch == "clique-cutset");
  CHECK(r.width == decompose(a).width);
  CHECK(r.width >= 3);
  CHECK_THROWS_AS(decompose(b), ClassViolation);
}

TEST_CASE("decompose rejects graphs outside the class") {
  try {
    decompose(gen::cycle(4));
    FAIL("expected ClassViolation");
  } catch (const ClassViolation& e) {
    REQUIRE(e.witness() != nullptr);
    CHECK(verify_witness(gen::cycle(4), *e.witness()));
  }
  Params skip;
  skip.check_membership = false;
  auto r = decompose(gen::cycle(4), skip);
  CHECK(validate(gen::cycle(4), r.td).valid());
}

TEST_CASE("decompose on a filtered random corpus") {
  CorpusSpec spec;
  spec.family = Family::RandomFiltered;
  spec.bucket = Bucket::C_tt;
  spec.n_min = 8;
  spec.n_max = 12;
  spec.count = 40;
  spec.seed = 21;
  const Params p;
  int with_hubs = 0;
  for (const auto& e : generate_corpus(spec)) {
    auto r = decompose(e.g, p);
    CHECK(validate(e.g, r.td).valid());
    const int ex = exact_treewidth(e.g).width;
    CHECK(r.width >= ex);
    CHECK(r.width <= ex + 2 * p.m);
    CHECK(r.width <= r.formula);
    CHECK(r.max_depth <= r.hub_order + std::log2(e.g.order()) + 4);
    if (r.hub_order > 0) ++with_hubs;
  }
  CHECK(with_hubs > 0);
}

TEST_CASE("banana report") {
  const Graph g = hole_with_hub(9, {0, 3, 6});
  auto r = banana_report(g);
  REQUIRE(r.pair);
  auto [x, y] = *r.pair;
  CHECK_FALSE(g.adjacent(x, y));
  CHECK_FALSE(intersects(g.neighbors(x), hubs(g)));
  CHECK(r.max_paths == oracle::min_vertex_cut_internal(g, x, y));
  CHECK(banana_report(gen::complete(4)).max_paths == 0);
}
