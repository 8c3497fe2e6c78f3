#include "ehftw/testing/oracles.hpp"

#include <bit>

namespace ehftw::oracle {

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

namespace {

bool connected_after(const Graph& g, std::uint64_t removed, std::uint64_t src, std::uint64_t dst) {
  std::uint64_t seen = src & ~removed;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    Vertex v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    for (Vertex w : g.neighbors(v)) {
      std::uint64_t bit = std::uint64_t{1} << w;
      if ((removed & bit) || (seen & bit)) continue;
      seen |= bit;
      frontier |= bit;
    }
  }
  return (seen & dst & ~removed) != 0;
}

int min_cut(const Graph& g, std::uint64_t allowed, std::uint64_t src, std::uint64_t dst) {
  int best = g.order() + 1;
  for (std::uint64_t s = allowed;; s = (s - 1) & allowed) {
    int size = std::popcount(s);
    if (size < best && !connected_after(g, s, src, dst)) best = size;
    if (s == 0) break;
  }
  return best;
}

}  // namespace

int min_vertex_cut(const Graph& g, const VertexSet& src, const VertexSet& dst) {
  std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  return min_cut(g, all, to_mask(src), to_mask(dst));
}

int min_vertex_cut_internal(const Graph& g, Vertex u, Vertex v) {
  std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
  std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  return min_cut(g, all & ~ends, std::uint64_t{1} << u, std::uint64_t{1} << v);
}

}  // namespace ehftw::oracle
