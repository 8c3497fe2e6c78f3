#include <doctest.h>

#include <random>

#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/separators.hpp"
#include "ehftw/testing/oracles.hpp"

using namespace ehftw;

TEST_CASE("minimal separators examples") {
  auto c4 = minimal_separators(gen::cycle(4));
  CHECK(c4 == std::vector<VertexSet>{{0, 2}, {1, 3}});
  CHECK(minimal_separators(gen::complete(5)).empty());
  CHECK(minimal_separators(gen::path(4)) == std::vector<VertexSet>{{1}, {2}});
}

TEST_CASE("full components examples") {
  CHECK(full_components(gen::cycle(4), {0, 2}).size() == 2);
  // Both sides of an inner cut vertex of a path are full.
  CHECK(full_components(gen::path(4), {1}).size() == 2);
  CHECK(full_components(gen::path(5), {1, 3}).size() == 1);
  CHECK(full_components(gen::star(3), {0}).size() == 3);
}

TEST_CASE("minimal separators agree with the subset oracle for n <= 8") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      auto g = gen::from_code(n, code);
      CHECK(minimal_separators(g) == oracle::brute_minimal_separators(g));
    }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = gen::erdos_renyi(6 + trial % 3, 0.2 + 0.1 * (trial % 5), rng);
    auto seps = minimal_separators(g);
    CHECK(seps == oracle::brute_minimal_separators(g));
    for (const auto& s : seps) CHECK(full_components(g, s).size() >= 2);
  }
}

TEST_CASE("clique and star cutsets") {
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(clique_cutset(bowtie) == VertexSet{2});
  CHECK_FALSE(clique_cutset(gen::cycle(5)));
  CHECK_FALSE(star_cutset(gen::cycle(5)));
  CHECK(clique_cutset(gen::disjoint_union(gen::path(2), gen::path(2))) == VertexSet{});
  auto w5 = gen::wheel(5);
  auto sc = star_cutset(w5);
  REQUIRE(sc);
  CHECK(is_subset(sc->set, closed_neighborhood(w5, sc->center)));
  CHECK(contains(sc->set, sc->center));
  CHECK(components(w5, sc->set).size() >= 2);

  // Exhaustive star cutset oracle over centers and neighbourhood subsets.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = gen::erdos_renyi(7 + trial % 4, 0.35, rng);
    bool exists = !is_connected(g);
    for (Vertex x = 0; x < g.order() && !exists; ++x) {
      auto nx = g.neighbors(x);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << nx.size()) && !exists; ++m) {
        VertexSet s{x};
        for (std::size_t i = 0; i < nx.size(); ++i)
          if (m >> i & 1U) s.push_back(nx[i]);
        s = make_set(s);
        if (static_cast<int>(s.size()) < g.order() && components(g, s).size() >= 2) exists = true;
      }
    }
    auto found = star_cutset(g);
    CHECK(found.has_value() == exists);
    if (found) CHECK(components(g, found->set).size() >= 2);
  }
}

TEST_CASE("balanced separators") {
  auto p9 = balanced_separator(gen::path(9), 0.5, 1);
  REQUIRE(p9.separator);
  CHECK(*p9.separator == VertexSet{4});
  // K5 leaves a single clique component, so it needs |X| >= 3 at c = 1/2.
  CHECK_FALSE(balanced_separator(gen::complete(5), 0.5, 2).separator);
  CHECK(balanced_separator(gen::complete(5), 0.5, 4).separator->size() == 3);
  auto grid = gen::grid(3, 3);
  auto gs = balanced_separator(grid, 0.5, 3);
  REQUIRE(gs.separator);
  CHECK(gs.separator->size() == 3);
  CHECK(is_balanced_separator(grid, {1, 4, 7}, 0.5));
  CHECK_THROWS_AS(balanced_separator(grid, 0.3, 3), InputError);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::erdos_renyi(9, 0.3, rng);
    auto r = balanced_separator(g, 0.5, 5);
    int brute = oracle::brute_balanced_separator_size(g, 0.5, 5);
    CHECK(static_cast<int>(r.separator ? r.separator->size() : -1) == brute);
  }
  std::vector<double> w(9, 0.0);
  w[0] = w[8] = 1.0;
  auto weighted = balanced_separator(gen::path(9), 0.5, 1, &w);
  REQUIRE(weighted.separator);
  CHECK(weighted.separator->empty() == false);
}

TEST_CASE("canonical star separations") {
  auto p9 = gen::path(9);
  auto s = canonical_star(p9, 0);
  REQUIRE(s);
  CHECK(s->B == VertexSet{2, 3, 4, 5, 6, 7, 8});
  CHECK(s->C == VertexSet{0, 1});
  CHECK(check_star_separation(p9, *s));
  CHECK_FALSE(canonical_star(gen::complete(4), 0));
  CHECK_FALSE(canonical_star(gen::wheel(5), 5));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::erdos_renyi(10, 0.2, rng);
    for (Vertex v = 0; v < g.order(); ++v)
      if (auto st = canonical_star(g, v)) CHECK(check_star_separation(g, *st));
  }
}

TEST_CASE("proper wheels leave no component seeing the whole hole (class C hosts)") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 40; ++trial) {
    auto g = gen::erdos_renyi(9, 0.35, rng);
    if (find_class_C_obstruction(g)) continue;
    for (const auto& w : find_wheels(g)) {
      if (w.subkind != WheelKind::Proper) continue;
      ++checked;
      VertexSet hole = make_set(w.hole);
      for (const auto& d : components(g, closed_neighborhood(g, w.center)))
        CHECK_FALSE(is_subset(hole, closed_neighborhood(g, d)));
    }
  }
  MESSAGE("proper wheels checked: " << checked);
}
