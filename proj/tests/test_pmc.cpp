#include <doctest.h>

#include <random>

#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/pmc.hpp"
#include "ehftw/separators.hpp"
#include "ehftw/testing/oracles.hpp"

using namespace ehftw;

namespace {

std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(oracle::from_mask(m));
  return out;
}

}  // namespace

TEST_CASE("chordality agrees with simplicial elimination") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = gen::erdos_renyi(8, 0.2 + 0.6 * (trial % 4) / 3.0, rng);
    CHECK(is_chordal(g) == oracle::brute_is_chordal(g));
  }
  CHECK_FALSE(is_chordal(gen::cycle(4)));
  CHECK(is_chordal(gen::complete(5)));
}

TEST_CASE("is_pmc examples") {
  auto c4 = gen::cycle(4);
  auto cert = is_pmc(c4, {0, 1, 2});
  CHECK(cert.is_pmc);
  REQUIRE(cert.covering.size() == 1);
  CHECK(cert.covering[0].first == Edge{0, 2});
  auto whole = is_pmc(c4, {0, 1, 2, 3});
  CHECK_FALSE(whole.is_pmc);
  CHECK(whole.uncovered_pair.has_value());
  Graph chordal(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  for (const auto& k : chordal_maximal_cliques(chordal)) CHECK(is_pmc(chordal, k).is_pmc);
}

TEST_CASE("is_pmc agrees with the minimal-completion definition") {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      auto g = gen::from_code(n, code);
      auto pmcs = oracle::brute_pmcs(g);
      for (const auto& omega : all_subsets(n))
        CHECK(is_pmc(g, omega).is_pmc == std::binary_search(pmcs.begin(), pmcs.end(), omega));
    }
  std::mt19937_64 rng(19);
  int done = 0;
  while (done < 60) {
    auto g = gen::erdos_renyi(6 + done % 2, 0.55, rng);
    if (g.order() == 7 && 21 - g.size() > 13) continue;
    ++done;
    auto pmcs = oracle::brute_pmcs(g);
    for (const auto& omega : all_subsets(g.order()))
      CHECK(is_pmc(g, omega).is_pmc == std::binary_search(pmcs.begin(), pmcs.end(), omega));
  }
}

TEST_CASE("neighbourhoods of components of a PMC are minimal separators") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = gen::erdos_renyi(7, 0.4, rng);
    auto c = minimal_completion(g);
    for (const auto& omega : chordal_maximal_cliques(c.completed())) {
      REQUIRE(is_pmc(g, omega).is_pmc);
      for (const auto& d : components(g, omega)) CHECK(is_minimal_separator(g, open_neighborhood(g, d)));
    }
  }
}

TEST_CASE("minimal completions") {
  CHECK(minimal_completion(gen::path(6)).fill.empty());
  auto c4 = minimal_completion(gen::cycle(4));
  REQUIRE(c4.fill.size() == 1);
  CHECK((c4.fill[0] == Edge{0, 2} || c4.fill[0] == Edge{1, 3}));
  auto c6 = minimal_completion(gen::cycle(6));
  CHECK(c6.fill.size() == 3);
  CHECK(is_minimal_completion(c6));
  // Every minimal fill of C6 has 3 edges.
  for (const auto& f : oracle::brute_minimal_fills(gen::cycle(6))) CHECK(f.size() == 3);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gen::erdos_renyi(6, 0.4, rng);
    auto c = minimal_completion(g);
    auto fills = oracle::brute_minimal_fills(g);
    CHECK(std::find(fills.begin(), fills.end(), c.fill) != fills.end());
    std::vector<Vertex> order{5, 4, 3, 2, 1, 0};
    auto c2 = minimal_completion(g, &order);
    CHECK(std::find(fills.begin(), fills.end(), c2.fill) != fills.end());
  }
}

TEST_CASE("clique trees") {
  std::mt19937_64 rng(2);
  auto tree = gen::random_tree(9, rng);
  auto td = clique_tree(ChordalCompletion{tree, {}});
  CHECK(validate(tree, td).valid());
  CHECK(width(td) == 1);
  CHECK(td.node_count() == 8);
  auto k4 = clique_tree(ChordalCompletion{gen::complete(4), {}});
  CHECK(k4.node_count() == 1);
  auto c5 = minimal_completion(gen::cycle(5));
  auto t5 = clique_tree(c5);
  CHECK(t5.node_count() == 3);
  CHECK(validate(gen::cycle(5), t5).valid());
  CHECK_THROWS_AS(clique_tree(ChordalCompletion{gen::cycle(4), {}}), InputError);
}

TEST_CASE("structured decompositions") {
  auto c4 = gen::cycle(4);
  auto s4 = to_structured(c4, TreeDecomposition(c4.vertices()));
  CHECK(width(s4) == 2);
  CHECK(s4.node_count() == 2);
  auto c6 = gen::cycle(6);
  CHECK(width(to_structured(c6, TreeDecomposition(c6.vertices()))) == 2);
  CHECK_THROWS_AS(to_structured(c4, TreeDecomposition(VertexSet{0, 1})), InputError);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = gen::erdos_renyi(9, 0.3, rng);
    auto td = greedy_decomposition(g);
    auto st = to_structured(g, td);
    CHECK(validate(g, st).valid());
    CHECK(width(st) <= width(td));
    for (const auto& b : st.bags()) {
      CHECK(is_pmc(g, b).is_pmc);
      bool inside = false;
      for (const auto& old : td.bags()) inside = inside || is_subset(b, old);
      CHECK(inside);
    }
    // Every clique lies in a bag (checked on edges and triangles).
    for (auto [u, v] : g.edges()) {
      bool in = false;
      for (const auto& b : st.bags()) in = in || (contains(b, u) && contains(b, v));
      CHECK(in);
    }
  }
}
