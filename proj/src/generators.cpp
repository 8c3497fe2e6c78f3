#include "ehftw/generators.hpp"

#include "ehftw/errors.hpp"

namespace ehftw::gen {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph grid(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, e);
}

Graph wheel(int rim) {
  std::vector<Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return Graph(rim + 1, e);
}

Graph triangular_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph erdos_renyi(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    e.emplace_back(pick(rng), i);
  }
  return Graph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), e);
}

Graph from_code(int n, std::uint64_t code) {
  std::vector<Edge> e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1U) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace ehftw::gen

namespace ehftw::gen {

Graph random_generalized_pyramid(int k, int max_extra, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> extra(0, max_extra);
  std::vector<Edge> e;
  int next = 0;
  auto fresh = [&next] { return next++; };
  // P: end, then per i a gap and the pair, then a gap and the other end.
  std::vector<Vertex> P{fresh()};
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int i = 0; i < k; ++i) {
    int gap = i == 0 ? extra(rng) : extra(rng);
    for (int j = 0; j < gap; ++j) P.push_back(fresh());
    Vertex x = fresh(), y = fresh();
    P.push_back(x);
    P.push_back(y);
    pairs.emplace_back(x, y);
  }
  int tail = extra(rng);
  for (int j = 0; j < tail; ++j) P.push_back(fresh());
  P.push_back(fresh());
  int qlen = 1 + extra(rng);
  std::vector<Vertex> Q;
  for (int j = 0; j < qlen; ++j) Q.push_back(fresh());
  for (std::size_t i = 0; i + 1 < P.size(); ++i) e.emplace_back(P[i], P[i + 1]);
  for (std::size_t i = 0; i + 1 < Q.size(); ++i) e.emplace_back(Q[i], Q[i + 1]);
  e.emplace_back(P.back(), Q.front());
  e.emplace_back(Q.back(), P.front());
  std::uniform_int_distribution<int> zpick(0, qlen - 1);
  std::vector<int> zs(k);
  for (int& z : zs) z = zpick(rng);
  std::sort(zs.begin(), zs.end());
  if (rng() % 2) std::reverse(zs.begin(), zs.end());
  for (int i = 0; i < k; ++i) {
    int len = extra(rng);
    Vertex a = fresh();
    Vertex b = a;
    for (int j = 0; j < len; ++j) {
      Vertex v = fresh();
      e.emplace_back(b, v);
      b = v;
    }
    e.emplace_back(a, pairs[i].first);
    e.emplace_back(a, pairs[i].second);
    e.emplace_back(b, Q[zs[i]]);
  }
  return Graph(next, e);
}

Graph add_random_edges(const Graph& g, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  auto e = g.edges();
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && coin(rng)) e.emplace_back(u, v);
  return Graph(g.order(), e);
}

}  // namespace ehftw::gen
