#include <doctest.h>

#include <random>

#include "ehftw/connectifier.hpp"
#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"
#include "ehftw/patterns.hpp"

using namespace ehftw;

namespace {

Graph build(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

// Side gadgets over y = {0, 1, 2}; new vertices start at `base`.
enum class Gadget { TriConn, StarConn, SpikyAlign, TriAlign, WideAlign };

std::vector<Edge> gadget(Gadget kind, int base) {
  const int a = base, b = base + 1, c = base + 2, d = base + 3, e = base + 4;
  switch (kind) {
    case Gadget::TriConn: return {{a, b}, {b, c}, {a, c}, {0, a}, {1, b}, {2, c}};
    case Gadget::StarConn: return {{a, b}, {a, c}, {a, d}, {0, b}, {1, c}, {2, d}};
    case Gadget::SpikyAlign: return {{a, b}, {b, c}, {c, d}, {d, e}, {0, a}, {1, c}, {2, e}};
    case Gadget::TriAlign: return {{a, b}, {b, c}, {c, d}, {0, a}, {1, b}, {1, c}, {2, d}};
    case Gadget::WideAlign: return {{a, b}, {b, c}, {c, d}, {d, e}, {0, a}, {1, b}, {1, d}, {2, e}};
  }
  return {};
}

int gadget_size(Gadget kind) { return kind == Gadget::TriConn ? 3 : kind == Gadget::StarConn || kind == Gadget::TriAlign ? 4 : 5; }

bool triangular(Gadget k) { return k == Gadget::TriConn || k == Gadget::TriAlign; }

// The lemma's conclusion for the natural pair of gadgets (orders agree by construction).
bool natural_conclusion(Gadget one, Gadget two) {
  for (auto [t, o] : {std::pair{one, two}, std::pair{two, one}})
    if (triangular(t) && !triangular(o) && !(t == Gadget::TriAlign && o == Gadget::WideAlign)) return true;
  return false;
}

}  // namespace

TEST_CASE("Erdos-Szekeres") {
  auto inc = erdos_szekeres({1, 2, 3, 4, 5}, 2);
  CHECK(inc.increasing);
  CHECK(inc.values == std::vector<double>{1, 2, 3});
  auto dec = erdos_szekeres({5, 4, 3, 2, 1}, 2);
  CHECK_FALSE(dec.increasing);
  CHECK(dec.values.size() == 3);
  auto mixed = erdos_szekeres({2, 1, 4, 3, 6}, 2);
  CHECK(mixed.values.size() == 3);
  CHECK(std::is_sorted(mixed.values.begin(), mixed.values.end()));
  CHECK_THROWS_AS(erdos_szekeres({1, 2, 3, 4}, 2), InputError);
  CHECK_THROWS_AS(erdos_szekeres({1, 1, 2, 3, 4}, 2), InputError);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<double> seq(n * n + 1 + trial % 3);
    std::iota(seq.begin(), seq.end(), 0.0);
    std::shuffle(seq.begin(), seq.end(), rng);
    auto r = erdos_szekeres(seq, n);
    REQUIRE(r.values.size() == static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i + 1 < r.indices.size(); ++i) {
      CHECK(r.indices[i] < r.indices[i + 1]);
      CHECK((r.values[i] < r.values[i + 1]) == r.increasing);
    }
  }
}

TEST_CASE("stable sets in bounded-outdegree digraphs") {
  CHECK(stable_in_bounded_outdegree({{}, {}, {}}, 0) == VertexSet{0, 1, 2});
  auto c5 = stable_in_bounded_outdegree({{1}, {2}, {3}, {4}, {0}}, 1);
  CHECK(c5.size() >= 2);
  CHECK_THROWS_AS(stable_in_bounded_outdegree({{1, 2}, {}, {}}, 1), InputError);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + trial % 20;
    std::vector<std::vector<int>> out(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int v = 0; v < n; ++v)
      while (out[v].size() < 2) {
        int w = pick(rng);
        if (w != v && std::find(out[v].begin(), out[v].end(), w) == out[v].end()) out[v].push_back(w);
      }
    auto s = stable_in_bounded_outdegree(out, 2);
    CHECK(5 * static_cast<int>(s.size()) >= n);
    for (int v : s)
      for (int w : out[v]) CHECK_FALSE(contains(s, w));
  }
}

TEST_CASE("shape classification") {
  auto path = classify_shape(gen::path(4), gen::path(4).vertices());
  REQUIRE(path);
  CHECK(path->kind == ConnectifierKind::Path);
  CHECK(path->spine == std::vector<Vertex>{0, 1, 2, 3});
  // Caterpillar: spine 0-1-2-3 with legs 4 at 1 and 5 at 2.
  auto cat = build(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
  auto c = classify_shape(cat, cat.vertices());
  REQUIRE(c);
  CHECK(c->kind == ConnectifierKind::Caterpillar);
  CHECK(c->spine.size() == 4);
  CHECK(c->legs.size() == 2);
  CHECK(c->simplicial == VertexSet{0, 3, 4, 5});
  // Spider with three legs of length two.
  auto spider = build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  auto s = classify_shape(spider, spider.vertices());
  REQUIRE(s);
  CHECK(s->kind == ConnectifierKind::SubdividedStar);
  CHECK(s->spine == std::vector<Vertex>{0});
  CHECK(s->legs.size() == 3);
  // Line graph of the caterpillar above: edges 01,12,23,14,25 -> vertices 0..4.
  auto line = build(5, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {1, 4}, {2, 4}});
  auto l = classify_shape(line, line.vertices());
  REQUIRE(l);
  CHECK(l->kind == ConnectifierKind::LineOfCaterpillar);
  CHECK(l->simplicial == VertexSet{0, 2, 3, 4});
  CHECK(l->spine.size() == 3);
  auto tri = classify_shape(gen::complete(3), gen::complete(3).vertices());
  REQUIRE(tri);
  CHECK(tri->kind == ConnectifierKind::LineOfCaterpillar);
  CHECK_FALSE(classify_shape(gen::cycle(5), gen::cycle(5).vertices()));
  CHECK_FALSE(classify_shape(gen::complete(4), gen::complete(4).vertices()));
  // Two branch vertices of degree four.
  auto fat = build(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}});
  CHECK_FALSE(classify_shape(fat, fat.vertices()));
  CHECK_FALSE(classify_shape(gen::path(4), {0, 2}));
}

TEST_CASE("find_connectifier examples") {
  auto star = gen::star(5);  // centre 0, leaves 1..5
  auto p = find_connectifier(star, {1, 2, 3, 4, 5}, 4);
  REQUIRE(p);
  CHECK(p->kind == ConnectifierKind::Path);
  CHECK(p->h == VertexSet{0});
  CHECK(p->attached == VertexSet{1, 2, 3, 4});
  CHECK(verify_connectifier(star, *p));

  // Spider plus pendant attachers 7, 8, 9 at the leg ends.
  auto spider = build(10, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {2, 7}, {4, 8}, {6, 9}});
  auto sc = find_connectifier(spider, {7, 8, 9}, 3);
  REQUIRE(sc);
  CHECK(sc->kind == ConnectifierKind::SubdividedStar);
  CHECK(sc->attached == VertexSet{7, 8, 9});
  CHECK(verify_connectifier(spider, *sc));
  CHECK(connectifier_order(spider, *sc).empty());

  // Caterpillar with pendant attachers 6..9 at its leaves 0, 3, 4, 5.
  auto cat = build(10, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {0, 6}, {3, 7}, {4, 8}, {5, 9}});
  auto cc = find_connectifier(cat, {6, 7, 8, 9}, 4);
  REQUIRE(cc);
  CHECK(cc->kind == ConnectifierKind::Caterpillar);
  CHECK(cc->h == VertexSet{0, 1, 2, 3, 4, 5});
  CHECK(verify_connectifier(cat, *cc));
  auto order = connectifier_order(cat, *cc);
  CHECK((order == std::vector<Vertex>{6, 8, 9, 7} || order == std::vector<Vertex>{7, 9, 8, 6}));
  // Four maximal paths through both branch vertices.
  CHECK(admissible_orders(cat, *cc).size() == 4);

  CHECK_THROWS_AS(find_connectifier(gen::path(3), {0, 1}, 1), InputError);
  CHECK_THROWS_AS(find_connectifier(gen::path(4), {0, 1}, 1), InputError);
  CHECK_THROWS_AS(find_connectifier(gen::path(4), {0, 3}, 0), InputError);
}

TEST_CASE("connectifier search is minimal and verified on random hosts") {
  std::mt19937_64 rng(12);
  int found = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto base = gen::random_tree(8 + trial % 4, rng);
    const int n = base.order();
    auto edges = base.edges();
    // Pendant attachers at distinct leaves.
    VertexSet s;
    int next = n;
    for (Vertex v = 0; v < n && s.size() < 5; ++v)
      if (base.degree(v) == 1) {
        edges.push_back({v, next});
        s.push_back(next++);
      }
    Graph g(next, edges);
    const int h = 3 + trial % 2;
    if (static_cast<int>(s.size()) < h) continue;
    auto c = find_connectifier(g, s, h);
    if (!c) continue;
    ++found;
    CHECK(verify_connectifier(g, *c));
    if (c->kind != ConnectifierKind::Path) {
      CHECK(static_cast<int>(c->attached.size()) == h);
      // No proper subset of h works.
      for (Vertex v : c->h) {
        auto smaller = without(c->h, v);
        auto shape = classify_shape(g, smaller);
        if (!shape || shape->kind == ConnectifierKind::Path) continue;
        bool ok = shape->simplicial.size() == static_cast<std::size_t>(h);
        for (Vertex z : shape->simplicial) {
          bool seen = false;
          for (Vertex x : s) seen = seen || set_intersection(g.neighbors(x), smaller) == VertexSet{z};
          ok = ok && seen;
        }
        CHECK_FALSE(ok);
      }
    }
  }
  CHECK(found > 50);
}

TEST_CASE("alignments") {
  // Path 0..4, attachers 5 (at 0), 6 (at 4), 7 in the middle.
  auto make = [](std::vector<Edge> mid) {
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {4, 6}};
    e.insert(e.end(), mid.begin(), mid.end());
    return Graph(8, e);
  };
  const std::vector<Vertex> p{0, 1, 2, 3, 4};
  auto spiky = classify_alignment(make({{7, 2}}), p, {5, 6, 7});
  REQUIRE(spiky);
  CHECK(spiky->kind == AlignmentKind::Spiky);
  CHECK(spiky->x == std::vector<Vertex>{5, 7, 6});
  auto tri = classify_alignment(make({{7, 1}, {7, 2}}), p, {5, 6, 7});
  REQUIRE(tri);
  CHECK(tri->kind == AlignmentKind::Triangular);
  auto wide = classify_alignment(make({{7, 1}, {7, 3}}), p, {5, 6, 7});
  REQUIRE(wide);
  CHECK(wide->kind == AlignmentKind::Wide);
  CHECK_FALSE(classify_alignment(make({{7, 0}}), p, {5, 6, 7}));
  auto wide3 = classify_alignment(make({{7, 1}, {7, 2}, {7, 3}}), p, {5, 6, 7});
  REQUIRE(wide3);
  CHECK(wide3->kind == AlignmentKind::Wide);
  CHECK_FALSE(classify_alignment(make({{7, 1}, {7, 2}, {7, 3}, {7, 4}}), p, {5, 6, 7}));
  CHECK_THROWS_AS(classify_alignment(make({{7, 2}}), p, {4, 5, 6}), InputError);
}

TEST_CASE("two-sided classification") {
  // Triangle on one side, claw on the other: a pyramid, hub-free at y.
  std::vector<Edge> e = gadget(Gadget::TriConn, 3);
  for (auto x : gadget(Gadget::StarConn, 6)) e.push_back(x);
  Graph g(10, e);
  auto r = two_sided_classify(g, {3, 4, 5}, {6, 7, 8, 9}, {0, 1, 2}, 3);
  REQUIRE(r);
  CHECK(r->side1.label() == "triangular connectifier");
  CHECK(r->side2.label() == "stellar connectifier");
  CHECK_FALSE(r->swapped);
  CHECK_THROWS_AS(two_sided_classify(g, {3, 4, 5}, {6, 7, 8, 9}, {0, 1}, 3), InputError);
  CHECK_THROWS_AS(two_sided_classify(g, {3, 4}, {6, 7, 8, 9}, {0, 1, 2}, 3), InputError);
}

TEST_CASE("two-sided lemma against pattern detection on gadget pairs") {
  const Gadget all[] = {Gadget::TriConn, Gadget::StarConn, Gadget::SpikyAlign, Gadget::TriAlign, Gadget::WideAlign};
  int checked = 0;
  for (Gadget one : all)
    for (Gadget two : all) {
      std::vector<Edge> e = gadget(one, 3);
      const int base2 = 3 + gadget_size(one);
      for (auto x : gadget(two, base2)) e.push_back(x);
      Graph g(base2 + gadget_size(two), e);
      VertexSet d1, d2;
      for (int v = 3; v < base2; ++v) d1.push_back(v);
      for (int v = base2; v < g.order(); ++v) d2.push_back(v);
      const bool in_c = !find_class_C_obstruction(g).has_value();
      const bool hub_free = !intersects(hubs(g), {0, 1, 2});
      if (!natural_conclusion(one, two) && hub_free) CHECK_MESSAGE(!in_c, "gadgets " << int(one) << "," << int(two));
      if (in_c && hub_free) {
        ++checked;
        auto r = two_sided_classify(g, d1, d2, {0, 1, 2}, 3);
        CHECK_MESSAGE(r.has_value(), "gadgets " << int(one) << "," << int(two));
      }
    }
  CHECK(checked > 0);
}
