#include <doctest.h>

#include <random>

#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/nonhub.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/pmc.hpp"

using namespace ehftw;

namespace {

void check_cover(const Graph& g, const TreeDecomposition& td, int node, const VertexSet& y, const ComponentCover& c) {
  const auto comps = components(g, td.bag(node));
  CHECK(c.components.size() <= 4);
  VertexSet seen = c.enclosed;
  for (const auto& d : c.components) {
    CHECK(std::find(comps.begin(), comps.end(), d) != comps.end());
    seen = set_union(seen, open_neighborhood(g, d));
  }
  CHECK(is_subset(y, seen));
  if (!c.enclosed.empty()) CHECK(y.size() == 1);
}

}  // namespace

TEST_CASE("maximal stable sets") {
  auto c5 = gen::cycle(5);
  auto sets = maximal_stable_sets(c5, c5.vertices());
  CHECK(sets.size() == 5);
  for (const auto& s : sets) CHECK(s.size() == 2);
  CHECK(stable_number_within(gen::petersen(), gen::petersen().vertices()) == 4);
  CHECK(maximal_stable_sets(gen::complete(3), {}) == std::vector<VertexSet>{VertexSet{}});
  CHECK(maximal_stable_sets(gen::path(4), {0, 1, 3}) == std::vector<VertexSet>{{0, 3}, {1, 3}});
}

TEST_CASE("cover_by_components examples") {
  // C6 split by the PMC {0, 2, 4}.
  auto c6 = gen::cycle(6);
  TreeDecomposition td(VertexSet{0, 2, 4});
  for (int v : {1, 3, 5}) {
    VertexSet b = make_set({v - 1, v, (v + 1) % 6});
    td.add_edge(0, td.add_node(b));
  }
  auto one = cover_by_components(c6, td, 0, {2});
  CHECK(one.components.size() == 1);
  check_cover(c6, td, 0, {2}, one);
  auto all = cover_by_components(c6, td, 0, {0, 2, 4});
  CHECK(all.components.size() == 2);
  check_cover(c6, td, 0, {0, 2, 4}, all);
  // Both ends of a single component.
  auto k2 = cover_by_components(c6, td, 1, {0, 2});
  CHECK(k2.components.size() == 1);
  // A vertex whose neighbourhood lies in its bag.
  auto p3 = gen::path(3);
  TreeDecomposition ptd(VertexSet{0, 1});
  ptd.add_edge(0, ptd.add_node({1, 2}));
  auto enc = cover_by_components(p3, ptd, 0, {0});
  CHECK(enc.components.empty());
  CHECK(enc.enclosed == VertexSet{0});
  CHECK_THROWS_AS(cover_by_components(c6, td, 0, {0, 1}), InputError);
  CHECK_THROWS_AS(cover_by_components(c6, TreeDecomposition(c6.vertices()), 0, {0}), InputError);
}

TEST_CASE("covers need at most four components in class C hosts") {
  std::mt19937_64 rng(91);
  int hosts = 0, sets = 0;
  for (int trial = 0; trial < 400 && hosts < 40; ++trial) {
    auto g = gen::erdos_renyi(9, 0.3, rng);
    if (!class_membership(g, 4).in_C) continue;
    ++hosts;
    auto td = to_structured(g, greedy_decomposition(g));
    for (int t = 0; t < td.node_count(); ++t)
      for (const auto& y : maximal_stable_sets(g, td.bag(t))) {
        ++sets;
        check_cover(g, td, t, y, cover_by_components(g, td, t, y));
      }
  }
  MESSAGE("hosts " << hosts << ", stable sets " << sets);
  CHECK(hosts > 10);
}

TEST_CASE("pairwise gadget needs five components") {
  // Nine stable vertices, one private connector per pair.
  std::vector<Edge> edges;
  int next = 9;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) {
      edges.push_back({i, next});
      edges.push_back({j, next});
      ++next;
    }
  Graph g(next, edges);
  TreeDecomposition td(VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_THROWS_AS(cover_by_components(g, td, 0, td.bag(0)), ClassViolation);
}

TEST_CASE("non-hub bound report") {
  auto c6 = gen::cycle(6);
  auto td = to_structured(c6, TreeDecomposition(c6.vertices()));
  auto r = check_nonhub_bounds(c6, td, 2);
  CHECK(r.hubs.empty());
  CHECK(r.max_bag_stable == 2);
  CHECK(r.max_separator_stable == 2);
  CHECK(r.bag_bound_ok);
  CHECK(r.separator_bound_ok);
  CHECK(r.separators_checked == 9);
  auto w = gen::wheel(6);
  auto rw = check_nonhub_bounds(w, to_structured(w, TreeDecomposition(w.vertices())), 1);
  CHECK(rw.hubs == VertexSet{6});
  CHECK(rw.max_separator_stable == 2);
  CHECK_FALSE(rw.separator_bound_ok);
}
