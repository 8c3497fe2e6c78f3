#include <doctest.h>

#include <random>

#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/testing/oracles.hpp"

using namespace ehftw;
using oracle::Shape;

namespace {

// Detector answers and witness sizes against the subset oracle.
void agree_with_oracle(const Graph& g) {
  auto hole = find_hole(g);
  auto bh = oracle::brute_find(g, Shape::Hole);
  REQUIRE(hole.has_value() == bh.has_value());
  if (hole) {
    CHECK(verify_witness(g, *hole));
    CHECK(hole->vertex_set().size() == bh->size());
  }
  auto even = find_hole(g, Parity::Even);
  auto be = oracle::brute_find(g, Shape::EvenHole);
  REQUIRE(even.has_value() == be.has_value());
  if (even) CHECK(even->vertex_set().size() == be->size());

  struct Case {
    std::optional<PatternWitness> (*find)(const Graph&);
    Shape shape;
  };
  for (auto c : {Case{find_theta, Shape::Theta}, Case{find_prism, Shape::Prism},
                 Case{find_pyramid, Shape::Pyramid}, Case{find_even_wheel, Shape::EvenWheel}}) {
    auto w = c.find(g);
    auto b = oracle::brute_find(g, c.shape);
    REQUIRE(w.has_value() == b.has_value());
    if (w) {
      CHECK(verify_witness(g, *w));
      if (c.shape != Shape::EvenWheel) CHECK(w->vertex_set().size() == b->size());
    }
  }
  auto k1 = find_generalized_k_pyramid(g, 1);
  CHECK(k1.has_value() == oracle::brute_find(g, Shape::Pyramid).has_value());
  if (k1) CHECK(verify_witness(g, *k1));
  CHECK(hubs(g) == oracle::brute_hubs(g));
}

Graph figure_three_pyramid() {
  // Q = 0-1-2, P = 3..10 with R-vertices 11, 12, 13 (all dashed paths length 1).
  // P: 3-4-5-6-7-8-9-10, hole closes 0-3 and 2-10.
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 3}, {2, 10}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}};
  // Apex-like vertices: 11 sees 4,5 and 0; 12 sees 6,7 and 1; 13 sees 8,9 and 2.
  for (auto [a, x, y, z] : std::vector<std::array<int, 4>>{{11, 4, 5, 0}, {12, 6, 7, 1}, {13, 8, 9, 2}}) {
    e.emplace_back(a, x);
    e.emplace_back(a, y);
    e.emplace_back(a, z);
  }
  return Graph(14, e);
}

}  // namespace

TEST_CASE("hole examples") {
  auto c4 = find_hole(gen::cycle(4), Parity::Even);
  REQUIRE(c4);
  CHECK(c4->role("cycle").size() == 4);
  CHECK_FALSE(find_hole(gen::complete(4)));
  auto pet = find_hole(gen::petersen(), Parity::Even);
  REQUIRE(pet);
  CHECK(pet->role("cycle").size() == 6);
  CHECK(verify_witness(gen::petersen(), *pet));
  CHECK_THROWS_AS(find_hole(gen::cycle(5), Parity::Any, 3), InputError);
}

TEST_CASE("theta, prism, pyramid examples") {
  auto k23 = gen::complete_bipartite(2, 3);
  auto th = find_theta(k23);
  REQUIRE(th);
  CHECK(th->role("ends") == std::vector<Vertex>{0, 1});
  CHECK_FALSE(find_theta(gen::complete(5)));
  auto pr = find_prism(gen::triangular_prism());
  REQUIRE(pr);
  CHECK(pr->vertex_set().size() == 6);
  CHECK_FALSE(find_prism(gen::complete(4)));
  // Smallest pyramid: apex 0 joined to 1 directly and to 2, 3 through 4, 5.
  Graph pyr(6, {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 4}, {4, 2}, {0, 5}, {5, 3}});
  auto p = find_pyramid(pyr);
  REQUIRE(p);
  CHECK(verify_witness(pyr, *p));
  auto gp = find_generalized_k_pyramid(pyr, 1);
  REQUIRE(gp);
  CHECK(verify_witness(pyr, *gp));
}

TEST_CASE("wheels and hubs") {
  auto w5 = gen::wheel(5);
  CHECK(hubs(w5) == VertexSet{5});
  bool universal = false;
  for (const auto& w : find_wheels(w5)) {
    CHECK(verify_wheel(w5, w));
    universal = universal || (w.center == 5 && w.subkind == WheelKind::Universal);
  }
  CHECK(universal);
  auto w4 = gen::wheel(4);
  CHECK(contains(hubs(w4), 4));
  auto ew = find_even_wheel(w4);
  REQUIRE(ew);
  CHECK(ew->role("center") == std::vector<Vertex>{4});
  // Twin wheel: C6 plus 6 adjacent to 0, 1, 2.
  Graph twin(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}, {6, 2}});
  auto ws = find_wheels(twin);
  REQUIRE(!ws.empty());
  CHECK(ws.front().subkind == WheelKind::Twin);
  CHECK_FALSE(is_hub(twin, 6));
  CHECK(is_hub(w5, 5));
}

TEST_CASE("generalized 3-pyramid from the figure") {
  auto g = figure_three_pyramid();
  auto w = find_generalized_k_pyramid(g, 3);
  REQUIRE(w);
  CHECK(verify_witness(g, *w));
  CHECK(w->k == 3);
  CHECK_FALSE(find_generalized_k_pyramid(gen::path(12), 3));
  std::mt19937_64 rng(1);
  CHECK_FALSE(find_generalized_k_pyramid(gen::random_tree(16, rng), 2));
}

TEST_CASE("class membership examples") {
  auto tri = gen::path(5);
  auto r = class_membership(tri, 3);
  CHECK(r.in_C_tt);
  auto c4 = class_membership(gen::cycle(4), 3);
  CHECK_FALSE(c4.in_C);
  CHECK(c4.blocking == "C4");
  auto k23 = class_membership(gen::complete_bipartite(2, 3), 3);
  CHECK_FALSE(k23.in_C);
  REQUIRE(k23.blocking_witness);
  CHECK(verify_witness(gen::complete_bipartite(2, 3), *k23.blocking_witness));
  auto k4 = class_membership(gen::complete(4), 3);
  CHECK(k4.in_C);
  CHECK_FALSE(k4.in_C_t);
}

TEST_CASE("k-blocks") {
  auto k4 = find_k_block(gen::complete(4), 4);
  REQUIRE(k4);
  CHECK(*k4 == VertexSet{0, 1, 2, 3});
  std::mt19937_64 rng(9);
  CHECK_FALSE(find_k_block(gen::random_tree(10, rng), 3));
  auto c4 = find_k_block(gen::cycle(4), 2);
  REQUIRE(c4);
  CHECK(*c4 == VertexSet{0, 1, 2, 3});
  for (int trial = 0; trial < 30; ++trial) {
    auto g = gen::erdos_renyi(9, 0.45, rng);
    for (int k = 2; k <= 3; ++k) {
      auto b = find_k_block(g, k);
      if (!b) continue;
      CHECK(is_k_block(g, *b, k));
      for (Vertex v = 0; v < g.order(); ++v)
        if (!contains(*b, v)) CHECK_FALSE(is_k_block(g, with(*b, v), k));
    }
  }
}

TEST_CASE("detectors agree with the subset oracle on all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) agree_with_oracle(gen::from_code(n, code));
  }
}

TEST_CASE("detectors agree with the subset oracle on sampled n in {7, 8}") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 7 + trial % 2;
    auto g = gen::erdos_renyi(n, 0.25 + 0.1 * (trial % 4), rng);
    agree_with_oracle(g);
  }
}

TEST_CASE("generalized 2-pyramids agree with the subset oracle") {
  std::mt19937_64 rng(5);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen::erdos_renyi(10, 0.22, rng);
    auto w = find_generalized_k_pyramid(g, 2);
    auto b = oracle::brute_find(g, Shape::KPyramid, 2);
    REQUIRE(w.has_value() == b.has_value());
    if (w) {
      ++found;
      CHECK(verify_witness(g, *w));
    }
  }
  MESSAGE("2-pyramids found: " << found);
}

TEST_CASE("constructed generalized pyramids, with and without noise") {
  std::mt19937_64 rng(13);
  int kept = 0;
  for (int trial = 0; trial < 80; ++trial) {
    int k = 1 + trial % 3;
    auto g = gen::random_generalized_pyramid(k, 1, rng);
    if (g.order() > 18) continue;
    auto w = find_generalized_k_pyramid(g, k);
    REQUIRE(w);
    CHECK(verify_witness(g, *w));
    if (g.order() <= 11) CHECK(oracle::brute_find(g, Shape::KPyramid, k).has_value());
    auto noisy = gen::add_random_edges(g, 0.04, rng);
    auto nw = find_generalized_k_pyramid(noisy, k);
    if (nw) {
      ++kept;
      CHECK(verify_witness(noisy, *nw));
    }
    if (noisy.order() <= 11) CHECK(nw.has_value() == oracle::brute_find(noisy, Shape::KPyramid, k).has_value());
  }
  MESSAGE("noisy graphs still containing a pyramid: " << kept);
}
