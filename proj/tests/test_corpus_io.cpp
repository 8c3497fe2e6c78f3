#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "ehftw/corpus.hpp"
#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/io.hpp"
#include "ehftw/pmc.hpp"

using namespace ehftw;

TEST_CASE("chordal family") {
  CorpusSpec spec;
  spec.family = Family::Chordal;
  spec.n_min = spec.n_max = 10;
  spec.count = 5;
  spec.seed = 7;
  auto c = generate_corpus(spec);
  REQUIRE(c.size() == 5);
  for (const auto& e : c) {
    CHECK(e.g.order() == 10);
    CHECK(is_chordal(e.g));
    CHECK(is_connected(e.g));
    CHECK(e.membership.in_C);
  }
  spec.bucket = Bucket::C_tt;
  for (const auto& e : generate_corpus(spec)) CHECK(e.membership.in_C_tt);
}

TEST_CASE("corpus is deterministic under the seed") {
  CorpusSpec spec;
  spec.count = 6;
  spec.seed = 99;
  auto a = generate_corpus(spec), b = generate_corpus(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].g == b[i].g);
  spec.seed = 100;
  auto c = generate_corpus(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || !(a[i].g == c[i].g);
  CHECK(differs);
}

TEST_CASE("tree family") {
  for (int t : {3, 4, 5}) {
    CorpusSpec spec;
    spec.family = Family::Tree;
    spec.t = t;
    spec.bucket = Bucket::C_tt;
    spec.count = 5;
    for (const auto& e : generate_corpus(spec)) {
      CHECK(e.membership.in_C_tt);
      CHECK(e.g.size() == e.g.order() - 1);
    }
  }
  // an edge is already a 2-clique
  std::mt19937_64 rng(1);
  CHECK_FALSE(class_membership(gen::random_tree(6, rng), 2).in_C_t);
}

TEST_CASE("clique-glued family") {
  CorpusSpec spec;
  spec.family = Family::CliqueGlued;
  spec.n_min = 8;
  spec.n_max = 14;
  spec.count = 10;
  spec.seed = 4;
  for (const auto& e : generate_corpus(spec)) {
    CHECK(e.g.order() >= 8);
    CHECK(e.g.order() <= 14);
    CHECK(e.membership.in_C);
  }
}

TEST_CASE("random-filtered family carries membership") {
  CorpusSpec spec;
  spec.n_min = spec.n_max = 9;
  spec.count = 12;
  spec.bucket = Bucket::C;
  for (const auto& e : generate_corpus(spec)) {
    auto rep = class_membership(e.g, spec.t);
    CHECK(rep.in_C == e.membership.in_C);
    CHECK(rep.in_C_t == e.membership.in_C_t);
    CHECK(rep.in_C_tt == e.membership.in_C_tt);
    CHECK(e.bucket == tightest_bucket(rep));
  }
}

TEST_CASE("corpus errors") {
  CorpusSpec spec;
  spec.n_min = 5;
  spec.n_max = 4;
  CHECK_THROWS_AS(generate_corpus(spec), ConfigError);
  spec = {};
  spec.family = Family::Chordal;
  spec.t = 2;
  spec.bucket = Bucket::C_t;
  spec.max_attempts = 50;
  spec.n_min = 3;
  CHECK_THROWS_AS(generate_corpus(spec), CapabilityError);
  CHECK_THROWS_AS(family_from_string("grid"), ConfigError);
  CHECK(family_from_string("clique-glued") == Family::CliqueGlued);
  CHECK(bucket_from_string("C_tt") == Bucket::C_tt);
}

TEST_CASE("glue") {
  Graph g = gen::glue(gen::complete(3), {0, 1}, gen::cycle(5), {2, 3});
  CHECK(g.order() == 6);
  CHECK(g.size() == 3 + 5 - 1);
  CHECK_THROWS_AS(gen::glue(gen::path(3), {0, 2}, gen::complete(2), {0, 1}), InputError);
}

TEST_CASE("graph6 known strings") {
  CHECK(io::to_graph6(Graph(0, {})) == "?");
  CHECK(io::to_graph6(gen::path(2)) == "A_");
  CHECK(io::to_graph6(gen::cycle(5)) == "Dhc");
  CHECK(io::to_graph6(gen::petersen()).size() == 1 + 8);
  CHECK(io::from_graph6("Dhc") == gen::cycle(5));
  CHECK(io::from_graph6(">>graph6<<A_\n") == gen::path(2));
  CHECK_THROWS_AS(io::from_graph6("Dh"), InputError);
  CHECK_THROWS_AS(io::from_graph6(""), InputError);
  CHECK_THROWS_AS(io::from_graph6("D h"), InputError);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(8);
  for (int n : {1, 5, 13, 62, 63, 100}) {
    Graph g = gen::erdos_renyi(n, 0.3, rng);
    CHECK(io::from_graph6(io::to_graph6(g)) == g);
  }
  CorpusSpec spec;
  spec.count = 20;
  for (const auto& e : generate_corpus(spec)) CHECK(io::from_graph6(io::to_graph6(e.g)) == e.g);
}

TEST_CASE("files and json") {
  const auto dir = std::filesystem::temp_directory_path() / "ehftw_io_test";
  std::filesystem::create_directories(dir);
  const std::string g6 = (dir / "g.g6").string();
  io::write_graph6_file(g6, {gen::cycle(5), gen::petersen()});
  auto gs = io::read_graph6_file(g6);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == gen::petersen());
  CHECK(io::read_graph(g6) == gen::cycle(5));
  CHECK_THROWS_AS(io::read_graph((dir / "missing.g6").string()), InputError);

  TreeDecomposition td;
  td.add_node({0, 1, 2});
  td.add_node({0, 2, 3});
  td.add_node({0, 3, 4});
  td.add_edge(0, 1);
  td.add_edge(1, 2);
  const std::string tdp = (dir / "td.json").string();
  io::write_json(tdp, io::to_json(td));
  auto back = io::read_td(tdp);
  CHECK(back.bags() == td.bags());
  CHECK(back.edges() == td.edges());
  CHECK_THROWS_AS(io::td_from_json(io::Json{{"bags", {{0}}}, {"edges", {{0, 3}}}}), InputError);
  CHECK_THROWS_AS(io::td_from_json(io::Json{{"edges", io::Json::array()}}), InputError);

  auto rep = class_membership(gen::cycle(4), 4);
  REQUIRE(rep.blocking_witness);
  auto wj = io::to_json(*rep.blocking_witness);
  auto w = io::witness_from_json(wj);
  CHECK(w.kind == rep.blocking_witness->kind);
  CHECK(w.roles == rep.blocking_witness->roles);
  CHECK(io::to_json(rep)["blocking"] == rep.blocking);
  std::filesystem::remove_all(dir);
}

TEST_CASE("params json") {
  Params p;
  p.m = 4;
  p.beta_separator_bound = 0;
  auto q = io::params_from_json(io::to_json(p));
  CHECK(q.m == 4);
  CHECK(q.beta_separator_bound == 0);
  CHECK(io::params_from_json(io::Json::object()).m == Params{}.m);
  CHECK_THROWS_AS(io::params_from_json(io::Json{{"mm", 3}}), ConfigError);
  CHECK_THROWS_AS(io::params_from_json(io::Json{{"m", "3"}}), ConfigError);
  CHECK_THROWS_AS(io::params_from_json(io::Json{{"m", 2}}), ConfigError);
  CHECK_THROWS_AS(io::params_from_json(io::Json::array()), ConfigError);
  CHECK_THROWS_AS(io::read_params("/nonexistent/params.json"), ConfigError);
}
