#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "ehftw/testing/oracles.hpp"

namespace ehftw::oracle {

namespace {

std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> nbr(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= 1U << w;
  return nbr;
}

std::vector<std::uint32_t> comps(const std::vector<std::uint32_t>& nbr, std::uint32_t allowed) {
  std::vector<std::uint32_t> out;
  while (allowed) {
    std::uint32_t c = allowed & (~allowed + 1);
    for (;;) {
      std::uint32_t next = c;
      for (std::uint32_t b = c; b; b &= b - 1) next |= nbr[std::countr_zero(b)] & allowed;
      if (next == c) break;
      c = next;
    }
    out.push_back(c);
    allowed &= ~c;
  }
  return out;
}

std::uint32_t nbhd(const std::vector<std::uint32_t>& nbr, std::uint32_t s) {
  std::uint32_t out = 0;
  for (std::uint32_t b = s; b; b &= b - 1) out |= nbr[std::countr_zero(b)];
  return out & ~s;
}

bool chordal_masks(std::vector<std::uint32_t> nbr, int n) {
  std::uint32_t alive = n == 32 ? ~0U : (1U << n) - 1;
  while (alive) {
    bool removed = false;
    for (std::uint32_t b = alive; b; b &= b - 1) {
      int v = std::countr_zero(b);
      std::uint32_t nb = nbr[v] & alive;
      bool simplicial = true;
      for (std::uint32_t c = nb; c && simplicial; c &= c - 1) {
        int u = std::countr_zero(c);
        simplicial = (nb & ~(1U << u) & ~nbr[u]) == 0;
      }
      if (simplicial) {
        alive &= ~(1U << v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexSet> brute_minimal_separators(const Graph& g) {
  auto nbr = masks(g);
  const int n = g.order();
  std::vector<VertexSet> out;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    const std::uint32_t all = (1U << n) - 1;
    int full = 0;
    for (auto c : comps(nbr, all & ~s))
      if (nbhd(nbr, c) == s) ++full;
    if (full >= 2) out.push_back(from_mask(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool brute_is_chordal(const Graph& g) { return chordal_masks(masks(g), g.order()); }

std::vector<std::vector<Edge>> brute_minimal_fills(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> non;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) non.push_back({u, v});
  auto base = masks(g);
  const int m = static_cast<int>(non.size());
  std::vector<char> chordal(std::size_t{1} << m, 0);
  for (std::uint32_t f = 0; f < (1U << m); ++f) {
    auto nbr = base;
    for (int i = 0; i < m; ++i)
      if (f >> i & 1U) {
        nbr[non[i].first] |= 1U << non[i].second;
        nbr[non[i].second] |= 1U << non[i].first;
      }
    chordal[f] = chordal_masks(nbr, n);
  }
  std::vector<std::vector<Edge>> out;
  for (std::uint32_t f = 0; f < (1U << m); ++f) {
    if (!chordal[f]) continue;
    // Minimal: no chordal proper subset.
    bool minimal = true;
    for (std::uint32_t sub = (f - 1) & f; minimal; sub = (sub - 1) & f) {
      if (sub != f && chordal[sub]) minimal = false;
      if (sub == 0) break;
    }
    if (f == 0) minimal = true;
    if (!minimal) continue;
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
      if (f >> i & 1U) e.push_back(non[i]);
    out.push_back(e);
  }
  return out;
}

std::vector<VertexSet> brute_pmcs(const Graph& g) {
  const int n = g.order();
  std::set<VertexSet> pmcs;
  for (const auto& fill : brute_minimal_fills(g)) {
    auto nbr = masks(g);
    for (auto [u, v] : fill) {
      nbr[u] |= 1U << v;
      nbr[v] |= 1U << u;
    }
    std::vector<std::uint32_t> cliques;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
      bool clique = true;
      for (std::uint32_t b = s; b && clique; b &= b - 1) {
        int v = std::countr_zero(b);
        clique = (s & ~(1U << v) & ~nbr[v]) == 0;
      }
      if (clique) cliques.push_back(s);
    }
    for (auto c : cliques) {
      bool maximal = true;
      for (auto d : cliques)
        if (d != c && (c & d) == c) maximal = false;
      if (maximal) pmcs.insert(from_mask(c));
    }
  }
  if (n == 0) pmcs.insert(VertexSet{});
  return {pmcs.begin(), pmcs.end()};
}

int brute_treewidth(const Graph& g) {
  const int n = g.order();
  if (n == 0) return -1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  auto base = masks(g);
  do {
    auto nbr = base;
    std::uint32_t alive = (1U << n) - 1;
    int w = 0;
    for (int v : perm) {
      std::uint32_t nb = nbr[v] & alive;
      w = std::max(w, std::popcount(nb));
      if (w >= best) break;
      for (std::uint32_t b = nb; b; b &= b - 1) nbr[std::countr_zero(b)] |= nb & ~(1U << std::countr_zero(b));
      alive &= ~(1U << v);
    }
    best = std::min(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

int brute_balanced_separator_size(const Graph& g, double c, int max_size) {
  const int n = g.order();
  auto nbr = masks(g);
  int best = -1;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    int size = std::popcount(s);
    if (size > max_size || (best >= 0 && size >= best)) continue;
    bool ok = true;
    for (auto comp : comps(nbr, ((1U << n) - 1) & ~s)) ok = ok && std::popcount(comp) <= c * n + 1e-9;
    if (ok) best = size;
  }
  return best;
}

}  // namespace ehftw::oracle
