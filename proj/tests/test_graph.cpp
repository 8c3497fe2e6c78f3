#include <doctest.h>

#include <random>

#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/graph.hpp"
#include "ehftw/testing/oracles.hpp"

using namespace ehftw;

namespace {

// Checks the Menger certificates against each other and the graph.
void check_menger(const Graph& g, const VertexSet& src, const VertexSet& dst, const MengerResult& r,
                  bool internal) {
  REQUIRE(static_cast<int>(r.paths.size()) == r.count);
  CHECK(static_cast<int>(r.cut.size()) == r.count);
  std::vector<int> used(g.order(), 0);
  for (const auto& p : r.paths) {
    REQUIRE(!p.empty());
    CHECK(contains(src, p.front()));
    CHECK(contains(dst, p.back()));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
    for (std::size_t i = internal ? 1 : 0; i < (internal ? p.size() - 1 : p.size()); ++i) ++used[p[i]];
  }
  for (int u : used) CHECK(u <= 1);
  // Removing the cut disconnects src from dst.
  VertexSet removed = r.cut;
  for (const auto& comp : components(g, removed)) {
    if (internal) {
      CHECK_FALSE((contains(comp, src[0]) && contains(comp, dst[0])));
    } else {
      CHECK_FALSE((intersects(comp, src) && intersects(comp, dst)));
    }
  }
}

}  // namespace

TEST_CASE("graph construction is symmetric and irreflexive") {
  Graph g(4, {{0, 1}, {1, 0}, {2, 3}});
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 0));
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
}

TEST_CASE("induced subgraphs") {
  auto c5 = gen::cycle(5);
  auto sub = induced(c5, {0, 1, 2});
  CHECK(sub.graph == gen::path(3));
  CHECK(induced(c5, c5.vertices()).graph == c5);
  CHECK_THROWS_AS(induced(c5, {0, 7}), InputError);
  auto outer = induced(gen::petersen(), {0, 1, 2, 3, 4});
  CHECK(outer.graph == gen::cycle(5));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen::erdos_renyi(10, 0.4, rng);
    VertexSet x;
    for (int v = 0; v < 10; ++v)
      if (rng() % 2) x.push_back(v);
    int pairs = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) pairs += g.adjacent(x[i], x[j]) ? 1 : 0;
    CHECK(induced(g, x).graph.size() == pairs);
  }
}

TEST_CASE("components") {
  auto comps = components(gen::path(4), {1});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0});
  CHECK(comps[1] == VertexSet{2, 3});
  CHECK(components(gen::petersen()).size() == 1);
  auto c6 = components(gen::cycle(6), {0, 3});
  REQUIRE(c6.size() == 2);
  CHECK(c6[0] == VertexSet{1, 2});
  CHECK(c6[1] == VertexSet{4, 5});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen::erdos_renyi(12, 0.15, rng);
    auto parts = components(g, {0, 5});
    VertexSet all{0, 5};
    for (const auto& p : parts) {
      CHECK(is_connected(g, p));
      all = set_union(all, p);
      for (const auto& q : parts)
        if (&p != &q) CHECK(anticomplete(g, p, q));
    }
    CHECK(all == g.vertices());
  }
}

TEST_CASE("menger examples") {
  auto c4 = gen::cycle(4);
  auto r = menger_internal(c4, 0, 2);
  CHECK(r.count == 2);
  CHECK(r.cut == VertexSet{1, 3});
  check_menger(c4, {0}, {2}, r, true);

  auto k5 = Graph(5, [] {
    auto e = gen::complete(5).edges();
    std::erase(e, Edge{0, 4});
    return e;
  }());
  CHECK(menger_internal(k5, 0, 4).count == 3);
  CHECK(menger(k5, {0}, {4}).count == 1);

  auto k23 = gen::complete_bipartite(2, 3);
  CHECK(menger_internal(k23, 0, 1).count == 3);
  auto p4 = menger_internal(gen::path(4), 0, 3);
  CHECK(p4.count == 1);
  CHECK((p4.cut == VertexSet{1} || p4.cut == VertexSet{2}));
  CHECK_THROWS_AS(menger_internal(c4, 0, 1), InputError);

  auto split = gen::disjoint_union(gen::path(3), gen::path(3));
  auto none = menger(split, {0, 1}, {4, 5});
  CHECK(none.count == 0);
  CHECK(none.cut.empty());
}

TEST_CASE("menger agrees with brute-force cuts for n <= 9") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    auto g = gen::erdos_renyi(n, 0.2 + 0.5 * (trial % 3) / 2.0, rng);
    VertexSet src, dst;
    for (int v = 0; v < n; ++v) {
      auto r = rng() % 4;
      if (r == 0) src.push_back(v);
      if (r == 1) dst.push_back(v);
    }
    if (src.empty()) src.push_back(0);
    if (dst.empty()) dst.push_back(n - 1);
    dst = make_set(dst);
    auto res = menger(g, src, dst);
    CHECK(res.count == oracle::min_vertex_cut(g, src, dst));
    check_menger(g, src, dst, res, false);

    Vertex u = 0, v = n - 1;
    if (!g.adjacent(u, v)) {
      auto ri = menger_internal(g, u, v);
      CHECK(ri.count == oracle::min_vertex_cut_internal(g, u, v));
      check_menger(g, {u}, {v}, ri, true);
      CHECK(local_connectivity(g, u, v, 1) == std::min(1, ri.count));
    }
  }
}

TEST_CASE("degeneracy") {
  std::mt19937_64 rng(3);
  CHECK(degeneracy_order(gen::random_tree(12, rng)).degeneracy == 1);
  CHECK(degeneracy_order(gen::complete(4)).degeneracy == 3);
  CHECK(degeneracy_order(gen::cycle(6)).degeneracy == 2);
  CHECK(degeneracy_order(gen::cycle(6)).order.size() == 6);
}
