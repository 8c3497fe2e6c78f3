#include "ehftw/corpus.hpp"

#include <algorithm>
#include <map>

#include "ehftw/errors.hpp"
#include "ehftw/generators.hpp"

namespace ehftw {

std::string to_string(Family f) {
  switch (f) {
    case Family::Chordal: return "chordal";
    case Family::Tree: return "tree";
    case Family::CliqueGlued: return "clique-glued";
    case Family::RandomFiltered: return "random-filtered";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::Chordal, Family::Tree, Family::CliqueGlued, Family::RandomFiltered})
    if (to_string(f) == s) return f;
  throw ConfigError("unknown corpus family '" + s + "'");
}

std::string to_string(Bucket b) {
  switch (b) {
    case Bucket::C: return "C";
    case Bucket::C_t: return "C_t";
    case Bucket::C_tt: return "C_tt";
  }
  return "?";
}

Bucket bucket_from_string(const std::string& s) {
  for (Bucket b : {Bucket::C, Bucket::C_t, Bucket::C_tt})
    if (to_string(b) == s) return b;
  throw ConfigError("unknown bucket '" + s + "'");
}

Bucket tightest_bucket(const ClassReport& r) {
  if (!r.in_C) throw ClassViolation("graph is not in C (" + r.blocking + ")");
  if (r.in_C_tt) return Bucket::C_tt;
  if (r.in_C_t) return Bucket::C_t;
  return Bucket::C;
}

bool in_bucket(const ClassReport& r, Bucket b) {
  switch (b) {
    case Bucket::C: return r.in_C;
    case Bucket::C_t: return r.in_C_t;
    case Bucket::C_tt: return r.in_C_tt;
  }
  return false;
}

namespace gen {

Graph random_chordal(int n, int max_clique, std::mt19937_64& rng) {
  if (n <= 0) return Graph(0, {});
  if (max_clique < 2) throw InputError("random_chordal needs max_clique >= 2");
  std::vector<Edge> edges;
  std::vector<VertexSet> cliques{{0}};
  for (Vertex v = 1; v < n; ++v) {
    VertexSet q = cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
    std::shuffle(q.begin(), q.end(), rng);
    int cap = std::min<int>(static_cast<int>(q.size()), max_clique - 1);
    q.resize(std::uniform_int_distribution<int>(1, cap)(rng));
    for (Vertex u : q) edges.push_back({u, v});
    q.push_back(v);
    cliques.push_back(make_set(q));
  }
  return Graph(n, edges);
}

Graph random_wheel_extension(int n, double p, std::mt19937_64& rng) {
  if (n < 10) throw InputError("random_wheel_extension needs n >= 10");
  const int sectors = n - 1 >= 15 && rng() % 3 == 0 ? 5 : 3;
  std::vector<int> len(sectors, 3);
  int total = 3 * sectors;
  for (auto& l : len)
    if (total + 2 <= n - 1 && (rng() & 1U)) {
      l += 2;
      total += 2;
    }
  std::vector<Edge> e;
  for (int i = 0; i < total; ++i) e.push_back({i, (i + 1) % total});
  for (int i = 0, at = 0; i < sectors; at += len[i++]) e.push_back({at, total});
  std::uniform_real_distribution<double> u(0, 1);
  for (Vertex cur = total + 1; cur < n; ++cur)
    for (Vertex v = 0; v < cur; ++v)
      if (u(rng) < p) e.push_back({v, cur});
  return Graph(n, e);
}

Graph glue(const Graph& a, const std::vector<Vertex>& at_a, const Graph& b, const std::vector<Vertex>& at_b) {
  if (at_a.size() != at_b.size()) throw InputError("glue: clique sizes differ");
  if (!is_clique(a, make_set(at_a)) || !is_clique(b, make_set(at_b)))
    throw InputError("glue: identified sets must be cliques");
  std::vector<Vertex> map(b.order(), -1);
  for (std::size_t i = 0; i < at_b.size(); ++i) map[at_b[i]] = at_a[i];
  int next = a.order();
  for (Vertex v = 0; v < b.order(); ++v)
    if (map[v] < 0) map[v] = next++;
  std::vector<Edge> e = a.edges();
  for (auto [x, y] : b.edges()) e.push_back({map[x], map[y]});
  return Graph(next, e);
}

}  // namespace gen

namespace {

Graph clique_glued(int n, int t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  auto piece = [&](int size) -> Graph {
    switch (kind(rng)) {
      case 0: return gen::complete(std::clamp(size, 1, std::max(1, t - 1)));
      case 1: return gen::cycle(size >= 5 ? (size % 2 ? size : size - 1) : 5);
      default: return size >= 10 ? gen::random_wheel_extension(size, 0.15, rng) : gen::cycle(5);
    }
  };
  Graph g = piece(std::uniform_int_distribution<int>(3, std::max(3, n / 2))(rng));
  while (g.order() < n) {
    int left = n - g.order();
    Graph h = piece(std::uniform_int_distribution<int>(2, std::max(2, left + 1))(rng));
    auto edges = g.edges();
    bool on_edge = !edges.empty() && (rng() & 1U);
    std::vector<Vertex> at_a, at_b;
    if (on_edge) {
      auto he = h.edges();
      if (he.empty()) on_edge = false;
      else {
        auto [x, y] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        auto [p, q] = he[std::uniform_int_distribution<std::size_t>(0, he.size() - 1)(rng)];
        at_a = {x, y};
        at_b = {p, q};
      }
    }
    if (!on_edge) {
      at_a = {std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng)};
      at_b = {std::uniform_int_distribution<Vertex>(0, h.order() - 1)(rng)};
    }
    if (g.order() + h.order() - static_cast<int>(at_a.size()) > n) {
      h = gen::complete(std::min(left + 1, std::max(1, t - 1)));
      at_a = {std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng)};
      at_b = {0};
    }
    g = gen::glue(g, at_a, h, at_b);
  }
  return g;
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min || spec.count < 0 || spec.t < 2)
    throw ConfigError("corpus spec: need 1 <= n_min <= n_max, count >= 0, t >= 2");
  std::mt19937_64 rng(spec.seed);
  std::vector<CorpusEntry> out;
  std::uniform_int_distribution<int> nd(spec.n_min, spec.n_max);
  std::uniform_real_distribution<double> ud(0, 1);
  int attempts = 0;
  while (static_cast<int>(out.size()) < spec.count) {
    if (++attempts > spec.max_attempts)
      throw CapabilityError("corpus: " + std::to_string(out.size()) + " of " + std::to_string(spec.count) + " " +
                            to_string(spec.family) + " graphs after " + std::to_string(spec.max_attempts) +
                            " attempts");
    int n = nd(rng);
    Graph g;
    switch (spec.family) {
      case Family::Chordal:
        g = gen::random_chordal(n, spec.bucket == Bucket::C ? spec.t : std::max(2, spec.t - 1), rng);
        break;
      case Family::Tree: g = gen::random_tree(n, rng); break;
      case Family::CliqueGlued: g = clique_glued(n, spec.t, rng); break;
      case Family::RandomFiltered:
        if (n >= 10 && rng() % 4 != 0) g = gen::random_wheel_extension(n, 0.05 + 0.25 * ud(rng), rng);
        else g = gen::erdos_renyi(n, 0.2 + 0.4 * ud(rng), rng);
        break;
    }
    ClassReport rep = class_membership(g, spec.t);
    if (!in_bucket(rep, spec.bucket)) continue;
    CorpusEntry e;
    e.name = to_string(spec.family) + "-" + std::to_string(out.size());
    e.family = spec.family;
    e.bucket = tightest_bucket(rep);
    e.g = std::move(g);
    e.membership = std::move(rep);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ehftw
